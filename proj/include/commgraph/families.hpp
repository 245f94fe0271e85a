#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "commgraph/group.hpp"
#include "commgraph/group_ops.hpp"

namespace commgraph {

enum class Family {
  Cyclic,                 // (n)            order n
  AbelianProduct,         // (n1, ..., nk)  Z_n1 x ... x Z_nk
  Dihedral,               // (n)            D_2n, order 2n
  GeneralizedDihedral,    // (n1, ..., nk)  D(A), A = Z_n1 x ... x Z_nk
  GeneralizedQuaternion,  // (m)            Q_4m, order 4m
  Symmetric,              // (n)            n <= 6
  Alternating,            // (n)            n <= 8
  PSL2,                   // (q)            on the projective line
  Suzuki,                 // (q)            q in {2, 8}
  ExtraspecialPlus32,     // ()             D8 o D8
  ExtraspecialMinus32,    // ()             D8 o Q8
  Frobenius20,            // ()             5:4
};

struct FamilySpec {
  Family family = Family::Cyclic;
  std::vector<std::int64_t> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Text form: "cyclic:6", "abelian:2,6", "dihedral:6", "gendihedral:3,3",
// "quaternion:2", "sym:4", "alt:6", "psl2:7", "suzuki:8", "extraspecial:+",
// "extraspecial:-", "frobenius20".
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Closed-form order of the family member (BadParameter if out of range).
std::uint64_t family_order(const FamilySpec& spec);

Group build_family(const FamilySpec& spec, const GroupOptions& options = {});

// Products of family expressions separated by " x ", e.g. "sym:3 x dihedral:5".
Group build_group_expression(std::string_view text, const GroupOptions& options = {});

// Element (h, k) has index h * |K| + k.
Group direct_product(const Group& h, const Group& k, const GroupOptions& options = {});

// (H x K) / <(zH, zK)>, identifying zH with zK. Both must be central and of
// equal order.
Group central_product(const Group& h, const Group& k, Element z_h, Element z_k,
                      const GroupOptions& options = {});
// Same, keeping the projection: coset_of[h * |K| + k] is the image of (h, k).
Quotient central_product_map(const Group& h, const Group& k, Element z_h, Element z_k,
                             const GroupOptions& options = {});

// PSL(2, q) acting on GF(q) u {inf}; point q is infinity.
GeneratorSpec psl2_generators(std::uint32_t q);

// Path of the shipped Sz(8) catalog; COMMGRAPH_DATA_DIR in the environment
// overrides the compiled-in data directory.
std::string data_path(std::string_view file);

}  // namespace commgraph
