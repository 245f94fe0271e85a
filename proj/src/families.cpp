#include "commgraph/families.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "commgraph/catalog.hpp"
#include "commgraph/error.hpp"
#include "commgraph/galois_field.hpp"
#include "commgraph/group_ops.hpp"

namespace commgraph {
namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kNames[] = {
    {Family::Cyclic, "cyclic"},
    {Family::AbelianProduct, "abelian"},
    {Family::Dihedral, "dihedral"},
    {Family::GeneralizedDihedral, "gendihedral"},
    {Family::GeneralizedQuaternion, "quaternion"},
    {Family::Symmetric, "sym"},
    {Family::Alternating, "alt"},
    {Family::PSL2, "psl2"},
    {Family::Suzuki, "suzuki"},
    {Family::ExtraspecialPlus32, "extraspecial"},
    {Family::ExtraspecialMinus32, "extraspecial"},
    {Family::Frobenius20, "frobenius20"},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t param(const FamilySpec& spec, std::size_t i) {
  if (spec.params.size() <= i) fail(ErrorCode::BadParameter, "missing parameter in " + to_string(spec));
  return spec.params[i];
}

void expect_params(const FamilySpec& spec, std::size_t n) {
  if (spec.params.size() != n) {
    fail(ErrorCode::BadParameter, "wrong parameter count for " + to_string(spec));
  }
}

std::uint64_t product_of(const std::vector<std::int64_t>& factors) {
  std::uint64_t n = 1;
  for (auto f : factors) {
    if (f < 1) fail(ErrorCode::BadParameter, "abelian factor must be positive");
    n *= static_cast<std::uint64_t>(f);
    if (n > 1'000'000) fail(ErrorCode::SizeCap, "abelian group too large");
  }
  return n;
}

// Mixed-radix addition in Z_n1 x ... x Z_nk; first factor least significant.
struct AbelianCoords {
  std::vector<std::int64_t> radix;

  std::size_t combine(std::size_t a, std::size_t b, bool negate_b) const {
    std::size_t out = 0;
    std::size_t scale = 1;
    for (auto r64 : radix) {
      const auto r = static_cast<std::size_t>(r64);
      std::size_t x = a % r;
      std::size_t y = b % r;
      std::size_t z = negate_b ? (x + r - y) % r : (x + y) % r;
      out += z * scale;
      scale *= r;
      a /= r;
      b /= r;
    }
    return out;
  }
};

Group abelian_group(const std::vector<std::int64_t>& factors) {
  const auto n = static_cast<std::size_t>(product_of(factors));
  AbelianCoords c{factors};
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>(c.combine(a, b, false));
  }
  return Group::from_cayley_table(n, std::move(table));
}

// D(A) from xgx = g^-1: element (a, j) = a x^j has index a + |A| j.
Group generalized_dihedral(const std::vector<std::int64_t>& factors) {
  const auto m = static_cast<std::size_t>(product_of(factors));
  AbelianCoords c{factors};
  const std::size_t n = 2 * m;
  std::vector<Element> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t a = u % m, j = u / m, b = v % m, l = v / m;
      // a x^j * b x^l = (a + (-1)^j b) x^(j+l)
      std::size_t s = c.combine(a, b, j == 1);
      table[u * n + v] = static_cast<Element>(s + m * ((j + l) % 2));
    }
  }
  return Group::from_cayley_table(n, std::move(table));
}

// D_2n = <a, b | a^n = b^2 = e, bab = a^-1>; a^i b^j has index i + n j.
Group dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = 0; v < order; ++v) {
      std::size_t i = u % n, j = u / n, k = v % n, l = v / n;
      std::size_t e = j == 0 ? (i + k) % n : (i + n - k) % n;
      table[u * order + v] = static_cast<Element>(e + n * ((j + l) % 2));
    }
  }
  return Group::from_cayley_table(order, std::move(table));
}

// Q_4m = <x, y | x^m = y^2, x^2m = e, y^-1 x y = x^-1>; x^i y^j has index
// i + 2m j.
Group quaternion(std::size_t m) {
  const std::size_t r = 2 * m;
  const std::size_t order = 4 * m;
  std::vector<Element> table(order * order);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = 0; v < order; ++v) {
      std::size_t i = u % r, j = u / r, k = v % r, l = v / r;
      std::size_t e;
      std::size_t f;
      if (j == 0) {
        e = (i + k) % r;
        f = l;
      } else if (l == 0) {
        e = (i + r - k) % r;  // y x^k = x^-k y
        f = 1;
      } else {
        e = (i + r - k + m) % r;  // y x^k y = x^-k y^2 = x^(m-k)
        f = 0;
      }
      table[u * order + v] = static_cast<Element>(e + r * f);
    }
  }
  return Group::from_cayley_table(order, std::move(table));
}

Permutation cycle_perm(std::size_t degree, std::initializer_list<std::size_t> points_1based) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<std::size_t> pts(points_1based);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    img[pts[i] - 1] = static_cast<Point>(pts[(i + 1) % pts.size()] - 1);
  }
  return Permutation(std::move(img));
}

Permutation long_cycle(std::size_t degree, std::size_t from_1based) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t p = from_1based - 1; p < degree; ++p) {
    img[p] = static_cast<Point>(p + 1 < degree ? p + 1 : from_1based - 1);
  }
  return Permutation(std::move(img));
}

Group symmetric(std::size_t n, const GroupOptions& options) {
  GeneratorSpec spec{n, {}};
  if (n >= 2) {
    spec.generators.push_back(cycle_perm(n, {1, 2}));
    if (n >= 3) spec.generators.push_back(long_cycle(n, 1));
  }
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  return Group::from_generators(spec, fact, options);
}

Group alternating(std::size_t n, const GroupOptions& options) {
  GeneratorSpec spec{n, {}};
  if (n >= 3) {
    spec.generators.push_back(cycle_perm(n, {1, 2, 3}));
    if (n >= 4) spec.generators.push_back(long_cycle(n, n % 2 == 1 ? 1 : 2));
  }
  std::size_t fact = 1;
  for (std::size_t i = 3; i <= n; ++i) fact *= i;
  return Group::from_generators(spec, fact, options);
}

GeneratorSpec frobenius20_generators() {
  // x -> x + 1 and x -> 2x on Z_5, points 0..4 written as 1..5.
  return GeneratorSpec{5, {Permutation::parse_cycles("(1 2 3 4 5)", 5),
                           Permutation::parse_cycles("(2 3 5 4)", 5)}};
}

Group suzuki8(const GroupOptions& options) {
  auto catalog = load_catalog(data_path("sz8.cat"), options, /*validate=*/false);
  if (catalog.entries.size() != 1) fail(ErrorCode::ParseError, "sz8.cat must hold one entry");
  const auto& e = catalog.entries.front();
  return Group::from_generators(GeneratorSpec{e.degree, e.generators}, 29120, options);
}

}  // namespace

std::string data_path(std::string_view file) {
  const char* env = std::getenv("COMMGRAPH_DATA_DIR");
  std::string dir = env && *env ? env : COMMGRAPH_DATA_DIR;
  return dir + "/" + std::string(file);
}

FamilySpec parse_family(std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  std::string_view name = trim(text.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : trim(text.substr(colon + 1));

  if (name == "extraspecial") {
    if (rest == "+") return {Family::ExtraspecialPlus32, {}};
    if (rest == "-") return {Family::ExtraspecialMinus32, {}};
    fail(ErrorCode::BadParameter, "extraspecial takes '+' or '-'");
  }
  FamilySpec spec;
  bool found = false;
  for (const auto& n : kNames) {
    if (n.name == name) {
      spec.family = n.family;
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorCode::BadParameter, "unknown family '" + std::string(name) + "'");
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = trim(rest.substr(0, comma));
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(ErrorCode::BadParameter, "bad parameter '" + std::string(tok) + "'");
    }
    spec.params.push_back(v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  if (spec.family == Family::ExtraspecialPlus32) return "extraspecial:+";
  if (spec.family == Family::ExtraspecialMinus32) return "extraspecial:-";
  std::string out;
  for (const auto& n : kNames) {
    if (n.family == spec.family) out = std::string(n.name);
  }
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
  }
  return out;
}

std::uint64_t family_order(const FamilySpec& spec) {
  auto positive = [&](std::size_t i, std::int64_t min) {
    auto v = param(spec, i);
    if (v < min) fail(ErrorCode::BadParameter, "parameter out of range in " + to_string(spec));
    return static_cast<std::uint64_t>(v);
  };
  switch (spec.family) {
    case Family::Cyclic: expect_params(spec, 1); return positive(0, 1);
    case Family::AbelianProduct: return product_of(spec.params);
    case Family::Dihedral: expect_params(spec, 1); return 2 * positive(0, 1);
    case Family::GeneralizedDihedral: return 2 * product_of(spec.params);
    case Family::GeneralizedQuaternion: expect_params(spec, 1); return 4 * positive(0, 2);
    case Family::Symmetric: {
      expect_params(spec, 1);
      auto n = positive(0, 1);
      if (n > 6) fail(ErrorCode::UnsupportedParameter, "symmetric groups are limited to n <= 6");
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= n; ++i) f *= i;
      return f;
    }
    case Family::Alternating: {
      expect_params(spec, 1);
      auto n = positive(0, 1);
      if (n > 8) fail(ErrorCode::UnsupportedParameter, "alternating groups are limited to n <= 8");
      std::uint64_t f = 1;
      for (std::uint64_t i = 3; i <= n; ++i) f *= i;
      return f;
    }
    case Family::PSL2: {
      expect_params(spec, 1);
      auto q = positive(0, 2);
      if (q > 4096 || !is_prime_power(static_cast<std::uint32_t>(q))) {
        fail(ErrorCode::BadParameter, "PSL(2,q) needs a prime power q");
      }
      return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
    }
    case Family::Suzuki: {
      expect_params(spec, 1);
      auto q = positive(0, 2);
      if (q == 2) return 20;
      if (q == 8) return 29120;
      fail(ErrorCode::UnsupportedParameter, "Suzuki groups are available for q in {2, 8}");
    }
    case Family::ExtraspecialPlus32:
    case Family::ExtraspecialMinus32:
      expect_params(spec, 0);
      return 32;
    case Family::Frobenius20: expect_params(spec, 0); return 20;
  }
  fail(ErrorCode::BadParameter, "unknown family");
}

GeneratorSpec psl2_generators(std::uint32_t q) {
  auto field = GaloisField::get(q);
  const auto& f = *field;
  const std::size_t degree = q + 1;
  const Point inf = static_cast<Point>(q);
  auto mobius = [&](auto map) {
    std::vector<Point> img(degree);
    for (std::uint32_t t = 0; t <= q; ++t) img[t] = map(static_cast<Point>(t));
    return Permutation::from_images(std::move(img));
  };
  const auto w2 = f.mul(f.primitive(), f.primitive());
  GeneratorSpec spec{degree, {}};
  // t -> t + 1
  spec.generators.push_back(mobius([&](Point t) {
    return t == inf ? inf : static_cast<Point>(f.add(t, 1));
  }));
  // t -> w^2 t, the image of diag(w, w^-1)
  spec.generators.push_back(mobius([&](Point t) {
    return t == inf ? inf : static_cast<Point>(f.mul(w2, t));
  }));
  // t -> -1/t
  spec.generators.push_back(mobius([&](Point t) {
    if (t == inf) return Point{0};
    if (t == 0) return inf;
    return static_cast<Point>(f.neg(f.inv(t)));
  }));
  return spec;
}

Group build_family(const FamilySpec& spec, const GroupOptions& options) {
  const std::uint64_t order = family_order(spec);
  switch (spec.family) {
    case Family::Cyclic:
    case Family::AbelianProduct: return abelian_group(spec.params);
    case Family::Dihedral: return dihedral(static_cast<std::size_t>(spec.params[0]));
    case Family::GeneralizedDihedral: return generalized_dihedral(spec.params);
    case Family::GeneralizedQuaternion: return quaternion(static_cast<std::size_t>(spec.params[0]));
    case Family::Symmetric: return symmetric(static_cast<std::size_t>(spec.params[0]), options);
    case Family::Alternating: return alternating(static_cast<std::size_t>(spec.params[0]), options);
    case Family::PSL2:
      return Group::from_generators(psl2_generators(static_cast<std::uint32_t>(spec.params[0])),
                                    order, options);
    case Family::Suzuki:
      if (spec.params[0] == 2) return Group::from_generators(frobenius20_generators(), 20, options);
      return suzuki8(options);
    case Family::ExtraspecialPlus32: {
      auto d8 = dihedral(4);
      return central_product(d8, d8, 2, 2, options);  // a^2 is the central involution
    }
    case Family::ExtraspecialMinus32: {
      auto d8 = dihedral(4);
      auto q8 = quaternion(2);
      return central_product(d8, q8, 2, 2, options);  // a^2 and x^2
    }
    case Family::Frobenius20: return Group::from_generators(frobenius20_generators(), 20, options);
  }
  fail(ErrorCode::BadParameter, "unknown family");
}

Group build_group_expression(std::string_view text, const GroupOptions& options) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(" x ", pos);
    parts.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  Group g = build_family(parse_family(parts[0]), options);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    g = direct_product(g, build_family(parse_family(parts[i]), options), options);
  }
  return g;
}

Group direct_product(const Group& h, const Group& k, const GroupOptions& options) {
  const std::size_t nh = h.order(), nk = k.order(), n = nh * nk;
  if (n > options.closure_cap) fail(ErrorCode::SizeCap, "direct product exceeds the closure cap");
  if (n <= options.cayley_threshold) {
    std::vector<Element> table(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        auto a = h.mul(static_cast<Element>(u / nk), static_cast<Element>(v / nk));
        auto b = k.mul(static_cast<Element>(u % nk), static_cast<Element>(v % nk));
        table[u * n + v] = static_cast<Element>(std::size_t{a} * nk + b);
      }
    }
    return Group::from_cayley_table(n, std::move(table));
  }
  if (!h.has_permutations() || !k.has_permutations()) {
    fail(ErrorCode::SizeCap, "large direct products need permutation factors");
  }
  const std::size_t dh = h.degree(), dk = k.degree();
  std::vector<Permutation> elems;
  elems.reserve(n);
  for (Element a = 0; a < nh; ++a) {
    for (Element b = 0; b < nk; ++b) {
      std::vector<Point> img(dh + dk);
      auto ia = h.images(a);
      auto ib = k.images(b);
      for (std::size_t p = 0; p < dh; ++p) img[p] = ia[p];
      for (std::size_t p = 0; p < dk; ++p) img[dh + p] = static_cast<Point>(dh + ib[p]);
      elems.emplace_back(std::move(img));
    }
  }
  return Group::from_permutations(dh + dk, std::move(elems), options);
}

Group central_product(const Group& h, const Group& k, Element z_h, Element z_k,
                      const GroupOptions& options) {
  return central_product_map(h, k, z_h, z_k, options).group;
}

Quotient central_product_map(const Group& h, const Group& k, Element z_h, Element z_k,
                             const GroupOptions& options) {
  h.check(z_h);
  k.check(z_k);
  auto central = [](const Group& g, Element z) {
    for (Element s : g.generators()) {
      if (!g.commute_unchecked(z, s)) return false;
    }
    return true;
  };
  if (!central(h, z_h) || !central(k, z_k)) fail(ErrorCode::NotCentral, "identified elements must be central");
  if (element_order(h, z_h) != element_order(k, z_k)) {
    fail(ErrorCode::OrderMismatch, "identified central elements differ in order");
  }
  auto p = direct_product(h, k, options);
  if (p.backend() != Backend::CayleyTable) fail(ErrorCode::SizeCap, "central product too large");
  auto diag = static_cast<Element>(std::size_t{z_h} * k.order() + z_k);
  return quotient_map(p, subgroup_closure(p, std::vector<Element>{diag}));
}

}  // namespace commgraph
