#include <gtest/gtest.h>

#include "commgraph/error.hpp"
#include "commgraph/families.hpp"
#include "commgraph/galois_field.hpp"
#include "commgraph/group_ops.hpp"
#include "commgraph/matrix_witness.hpp"
#include "oracles.hpp"

using namespace commgraph;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::size_t involutions(const Group& g) {
  std::size_t n = 0;
  for (Element x = 1; x < g.order(); ++x) n += g.multiply(x, x) == 0 ? 1 : 0;
  return n;
}

}  // namespace

TEST(Families, ParseAndPrint) {
  for (const char* text : {"cyclic:6", "abelian:2,6", "dihedral:6", "gendihedral:3,3", "quaternion:2",
                           "sym:4", "alt:6", "psl2:7", "suzuki:8", "extraspecial:+", "extraspecial:-",
                           "frobenius20"}) {
    EXPECT_EQ(to_string(parse_family(text)), text);
  }
  EXPECT_EQ(code_of([] { parse_family("nonsense:3"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { parse_family("dihedral:x"); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { family_order(parse_family("sym:9")); }), ErrorCode::UnsupportedParameter);
  EXPECT_EQ(code_of([] { family_order(parse_family("psl2:6")); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { family_order(parse_family("suzuki:32")); }), ErrorCode::UnsupportedParameter);
}

TEST(Families, OrdersMatchClosedForm) {
  for (const char* text : {"cyclic:7", "abelian:2,2,3", "dihedral:6", "gendihedral:3,5", "quaternion:4",
                           "sym:5", "alt:5", "psl2:7", "psl2:8", "psl2:9", "suzuki:2", "extraspecial:+",
                           "frobenius20"}) {
    auto spec = parse_family(text);
    EXPECT_EQ(build_family(spec).order(), family_order(spec)) << text;
  }
}

TEST(Families, GeneralizedDihedralExamples) {
  Group dz3 = build_family(parse_family("gendihedral:3"));
  EXPECT_EQ(dz3.order(), 6u);
  EXPECT_FALSE(is_abelian(dz3));
  EXPECT_EQ(involutions(dz3), involutions(build_family(parse_family("dihedral:3"))));
  EXPECT_EQ(center(dz3).size(), 1u);

  Group d = build_family(parse_family("gendihedral:2,6"));
  EXPECT_EQ(d.order(), 24u);
  EXPECT_EQ(center(d).size(), 4u);
  EXPECT_EQ(oracle::center(d).size(), 4u);
}

TEST(Families, Psl2Examples) {
  Group g = build_family(parse_family("psl2:4"));
  EXPECT_EQ(g.order(), 60u);
  EXPECT_EQ(center(g).size(), 1u);
  EXPECT_EQ(build_family(parse_family("psl2:2")).order(), 6u);
  EXPECT_EQ(build_family(parse_family("psl2:3")).order(), 12u);
  EXPECT_EQ(build_family(parse_family("psl2:16")).order(), 4080u);
}

TEST(Families, SuzukiTwoIsFrobeniusTwenty) {
  Group g = build_family(parse_family("suzuki:2"));
  EXPECT_EQ(g.order(), 20u);
  EXPECT_EQ(center(g).size(), 1u);
  EXPECT_EQ(involutions(g), 5u);
}

TEST(DirectProduct, Examples) {
  Group z2 = build_family(parse_family("cyclic:2"));
  Group z3 = build_family(parse_family("cyclic:3"));
  Group p = direct_product(z2, z3);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE(is_abelian(p));

  Group s3 = build_family(parse_family("sym:3"));
  Group s3s3 = direct_product(s3, s3);
  EXPECT_EQ(s3s3.order(), 36u);
  // (h1,k1)(h2,k2) = (h1h2, k1k2) with index h*|K| + k.
  for (Element a = 0; a < 36; ++a) {
    for (Element b = 0; b < 36; ++b) {
      Element h = s3.multiply(a / 6, b / 6), k = s3.multiply(a % 6, b % 6);
      ASSERT_EQ(s3s3.multiply(a, b), h * 6 + k);
    }
  }
  EXPECT_EQ(direct_product(build_family(parse_family("dihedral:3")), build_family(parse_family("dihedral:5")))
                .order(),
            60u);
  EXPECT_EQ(build_group_expression("sym:3 x dihedral:5").order(), 60u);
}

TEST(CentralProduct, ExtraspecialGroups) {
  Group d8 = build_family(parse_family("dihedral:4"));
  Group q8 = build_family(parse_family("quaternion:2"));
  // a^2 and x^2 are the central involutions.
  Group plus = central_product(d8, d8, 2, 2);
  Group minus = central_product(d8, q8, 2, 2);
  for (const Group* g : {&plus, &minus}) {
    EXPECT_EQ(g->order(), 32u);
    EXPECT_EQ(center(*g).size(), 2u);
    EXPECT_EQ(nilpotency_class(*g), 2u);
  }
  // The two extraspecial groups of order 32 differ in their involution count.
  EXPECT_EQ(involutions(plus), 19u);
  EXPECT_EQ(involutions(minus), 11u);
  EXPECT_EQ(involutions(build_family(parse_family("extraspecial:+"))), 19u);
  EXPECT_EQ(involutions(build_family(parse_family("extraspecial:-"))), 11u);
}

TEST(CentralProduct, RelationsOfTheFactors) {
  Group d8 = build_family(parse_family("dihedral:4"));
  Quotient q = central_product_map(d8, d8, 2, 2);
  // Elements from different factors commute; the central involutions merge.
  for (Element h = 0; h < 8; ++h) {
    for (Element k = 0; k < 8; ++k) {
      Element left = q.coset_of[h * 8], right = q.coset_of[k];
      EXPECT_EQ(q.group.multiply(left, right), q.group.multiply(right, left));
    }
  }
  EXPECT_EQ(q.coset_of[2 * 8], q.coset_of[2]);
}

TEST(CentralProduct, TrivialIdentificationIsDirectProduct) {
  Group s3 = build_family(parse_family("sym:3"));
  Group z4 = build_family(parse_family("cyclic:4"));
  Group c = central_product(s3, z4, 0, 0);
  EXPECT_EQ(c.order(), 24u);
  EXPECT_EQ(center(c).size(), center(direct_product(s3, z4)).size());
}

TEST(CentralProduct, Errors) {
  Group s3 = build_family(parse_family("sym:3"));
  Group z4 = build_family(parse_family("cyclic:4"));
  EXPECT_EQ(code_of([&] { central_product(s3, z4, 1, 2); }), ErrorCode::NotCentral);
  EXPECT_EQ(code_of([&] { central_product(z4, z4, 1, 2); }), ErrorCode::OrderMismatch);
}

TEST(GaloisField, Examples) {
  auto f5 = GaloisField::get(5);
  EXPECT_EQ(f5->add(2, 3), 0u);
  auto f7 = GaloisField::get(7);
  EXPECT_EQ(f7->inv(3), 5u);
  auto f4 = GaloisField::get(4);
  EXPECT_EQ(f4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  std::vector<std::uint32_t> t_coeffs{0, 1};
  auto t = f4->from_coefficients(t_coeffs);
  EXPECT_EQ(f4->coefficients(f4->mul(t, t)), (std::vector<std::uint32_t>{1, 1}));
}

TEST(GaloisField, FieldArithEntryPoint) {
  auto f7 = GaloisField::get(7);
  FieldElement three(f7, 3), four(f7, 4);
  std::vector<FieldElement> two_ops{three, four};
  std::vector<FieldElement> one_op{three};
  EXPECT_EQ(field_arith(FieldOp::Add, two_ops).value(), 0u);
  EXPECT_EQ(field_arith(FieldOp::Mul, two_ops).value(), 5u);
  EXPECT_EQ(field_arith(FieldOp::Inv, one_op).value(), 5u);
  EXPECT_EQ(field_arith(FieldOp::Pow, one_op, 6).value(), 1u);
  EXPECT_EQ(code_of([&] { field_arith(FieldOp::Inv, std::vector<FieldElement>{FieldElement(f7, 0)}); }),
            ErrorCode::DivisionByZero);
  FieldElement other(GaloisField::get(5), 1);
  EXPECT_EQ(code_of([&] { (void)(three + other); }), ErrorCode::FieldMismatch);
  EXPECT_EQ(code_of([] { GaloisField::get(6); }), ErrorCode::BadParameter);
}

// Polynomial reduction done by hand: multiply coefficient vectors and
// reduce by the monic modulus.
TEST(GaloisField, MatchesPolynomialOracle) {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    auto f = GaloisField::get(q);
    const auto p = f->characteristic();
    const auto k = f->degree();
    const auto& mod = f->modulus();
    ASSERT_EQ(mod.size(), k + 1);
    for (GaloisField::Value a = 0; a < q; ++a) {
      for (GaloisField::Value b = 0; b < q; ++b) {
        auto ca = f->coefficients(a), cb = f->coefficients(b);
        ca.resize(k, 0);
        cb.resize(k, 0);
        std::vector<std::uint32_t> prod(2 * k, 0), sum(k, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
          sum[i] = (ca[i] + cb[i]) % p;
          for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        }
        for (std::size_t d = 2 * k - 1; d >= k; --d) {
          auto c = prod[d];
          if (!c) continue;
          for (std::uint32_t i = 0; i <= k; ++i) {
            prod[d - k + i] = (prod[d - k + i] + (p - c) * mod[i]) % p;
          }
        }
        prod.resize(k);
        auto got_mul = f->coefficients(f->mul(a, b));
        auto got_add = f->coefficients(f->add(a, b));
        got_mul.resize(k, 0);
        got_add.resize(k, 0);
        ASSERT_EQ(got_mul, prod) << "GF(" << q << ") " << a << "*" << b;
        ASSERT_EQ(got_add, sum) << "GF(" << q << ") " << a << "+" << b;
      }
      if (a) { EXPECT_EQ(f->mul(a, f->inv(a)), 1u); }
    }
    EXPECT_EQ(f->multiplicative_order(f->primitive()), q - 1);
  }
}

TEST(MatrixWitness, Sl3) {
  for (std::uint32_t q : {3u, 5u, 7u, 8u, 9u}) {
    auto w = sl3_p4_witness(q);
    EXPECT_TRUE(w.valid()) << q;
    EXPECT_TRUE(w.determinants_one);
    EXPECT_EQ(w.b, w.a.pow(-2));
  }
  auto w3 = sl3_p4_witness(3);
  EXPECT_EQ(w3.a.value(), 2u);
  EXPECT_EQ(w3.b.value(), 1u);
  EXPECT_EQ(code_of([] { sl3_p4_witness(2); }), ErrorCode::BadQ);
  EXPECT_EQ(code_of([] { sl3_p4_witness(4); }), ErrorCode::BadQ);
}

TEST(MatrixWitness, Su3) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    auto w = su3_p4_witness(q);
    EXPECT_TRUE(w.valid()) << q;
    EXPECT_TRUE(w.hermitian_form_preserved);
    EXPECT_EQ(w.a.field()->order(), q * q);
    EXPECT_EQ(w.field->multiplicative_order(w.a.value()), q + 1);
  }
  EXPECT_EQ(code_of([] { su3_p4_witness(2); }), ErrorCode::BadQ);
}

// Recompute the commuting pattern from raw products rather than trusting
// the witness report.
TEST(MatrixWitness, PatternByDirectMultiplication) {
  for (auto w : {sl3_p4_witness(5), su3_p4_witness(3)}) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        bool commute = w.g[i] * w.g[j] == w.g[j] * w.g[i];
        EXPECT_EQ(commute, j == i + 1) << i << "," << j;
        if (!commute) { EXPECT_FALSE((w.g[i] * w.g[j]).is_scalar_multiple_of(w.g[j] * w.g[i])); }
      }
      EXPECT_EQ(w.g[i].determinant().value(), 1u);
    }
  }
}
