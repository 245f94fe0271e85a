#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "commgraph/galois_field.hpp"

namespace commgraph {

class Matrix3 {
 public:
  explicit Matrix3(std::shared_ptr<const GaloisField> field);  // zero matrix

  static Matrix3 identity(std::shared_ptr<const GaloisField> field);
  static Matrix3 diagonal(const FieldElement& a, const FieldElement& b, const FieldElement& c);

  const std::shared_ptr<const GaloisField>& field() const noexcept { return field_; }
  GaloisField::Value operator()(int r, int c) const { return a_[r * 3 + c]; }
  GaloisField::Value& operator()(int r, int c) { return a_[r * 3 + c]; }
  FieldElement at(int r, int c) const { return {field_, a_[r * 3 + c]}; }

  Matrix3 operator*(const Matrix3& o) const;
  FieldElement determinant() const;
  // Transpose with every entry raised to the power `q` (the Frobenius
  // twist of GF(q^2) over GF(q)).
  Matrix3 conjugate_transpose(std::uint32_t q) const;
  // True iff *this == lambda * o for some non-zero lambda.
  bool is_scalar_multiple_of(const Matrix3& o) const;
  bool is_scalar() const;

  friend bool operator==(const Matrix3& x, const Matrix3& y) {
    return x.field_ == y.field_ && x.a_ == y.a_;
  }

 private:
  std::shared_ptr<const GaloisField> field_;
  std::array<GaloisField::Value, 9> a_{};
};

struct PairRelation {
  int i = 0;
  int j = 0;
  bool commute = false;
  // g_i g_j is a scalar multiple of g_j g_i, i.e. the commutator is scalar.
  bool scalar_commutator = false;
};

// Four matrices whose commuting pattern should be the induced path
// g1 ~ g2 ~ g3 ~ g4, together with the checks that establish it.
struct P4MatrixWitness {
  std::uint32_t q = 0;
  std::shared_ptr<const GaloisField> field;
  FieldElement a;
  FieldElement b;  // a^-2
  std::array<Matrix3, 4> g;
  std::vector<PairRelation> pairs;  // all six pairs, (i < j), 0-based
  bool determinants_one = false;
  bool hermitian_form_preserved = true;  // checked for SU(3, q) only

  // g1~g2, g2~g3, g3~g4 commute; the other pairs do not, and none of
  // their commutators is scalar; all determinants are 1 (and the unitary
  // condition holds where checked).
  bool valid() const;
};

// SL(3, q): g1 = I + E12, g2 = diag(a, a, b), g3 = diag(b, a, a),
// g4 = I + E23 with a a primitive element of GF(q), b = a^-2. Throws BadQ
// for q in {2, 4}, where no a with a^3 != 1 exists.
P4MatrixWitness sl3_p4_witness(std::uint32_t q);

// SU(3, q) over GF(q^2): g1 swaps coordinates 1, 2 with -1 in slot 3,
// g4 swaps 2, 3 with -1 in slot 1, g2 and g3 as above with a of order q+1.
// Throws BadQ for q = 2.
P4MatrixWitness su3_p4_witness(std::uint32_t q);

}  // namespace commgraph
