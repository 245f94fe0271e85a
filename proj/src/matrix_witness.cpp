#include "commgraph/matrix_witness.hpp"

#include <string>

#include "commgraph/error.hpp"

namespace commgraph {

Matrix3::Matrix3(std::shared_ptr<const GaloisField> field) : field_(std::move(field)) {
  if (!field_) fail(ErrorCode::BadParameter, "matrix without a field");
}

Matrix3 Matrix3::identity(std::shared_ptr<const GaloisField> field) {
  Matrix3 m(std::move(field));
  for (int i = 0; i < 3; ++i) m(i, i) = 1;
  return m;
}

Matrix3 Matrix3::diagonal(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  if (a.field() != b.field() || b.field() != c.field()) fail(ErrorCode::FieldMismatch, "diagonal entries");
  Matrix3 m(a.field());
  m(0, 0) = a.value();
  m(1, 1) = b.value();
  m(2, 2) = c.value();
  return m;
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "matrix product across fields");
  const auto& f = *field_;
  Matrix3 out(field_);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      GaloisField::Value s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul((*this)(r, k), o(k, c)));
      out(r, c) = s;
    }
  }
  return out;
}

FieldElement Matrix3::determinant() const {
  const auto& f = *field_;
  const auto& m = *this;
  auto term = [&](int a, int b, int c) { return f.mul(f.mul(m(0, a), m(1, b)), m(2, c)); };
  GaloisField::Value pos = f.add(f.add(term(0, 1, 2), term(1, 2, 0)), term(2, 0, 1));
  GaloisField::Value neg = f.add(f.add(term(0, 2, 1), term(1, 0, 2)), term(2, 1, 0));
  return {field_, f.sub(pos, neg)};
}

Matrix3 Matrix3::conjugate_transpose(std::uint32_t q) const {
  Matrix3 out(field_);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out(r, c) = field_->pow((*this)(c, r), q);
  }
  return out;
}

bool Matrix3::is_scalar_multiple_of(const Matrix3& o) const {
  if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "comparison across fields");
  const auto& f = *field_;
  GaloisField::Value lambda = 0;
  for (int k = 0; k < 9 && lambda == 0; ++k) {
    if (o.a_[k] != 0) lambda = f.mul(a_[k], f.inv(o.a_[k]));
  }
  if (lambda == 0) return false;
  for (int k = 0; k < 9; ++k) {
    if (a_[k] != f.mul(lambda, o.a_[k])) return false;
  }
  return true;
}

bool Matrix3::is_scalar() const {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return (*this)(0, 0) == (*this)(1, 1) && (*this)(1, 1) == (*this)(2, 2);
}

bool P4MatrixWitness::valid() const {
  for (const auto& p : pairs) {
    const bool path_edge = p.j == p.i + 1;
    if (p.commute != path_edge) return false;
    if (!path_edge && p.scalar_commutator) return false;
  }
  return pairs.size() == 6 && determinants_one && hermitian_form_preserved;
}

namespace {

void fill_relations(P4MatrixWitness& w) {
  w.pairs.clear();
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Matrix3 ij = w.g[i] * w.g[j];
      Matrix3 ji = w.g[j] * w.g[i];
      w.pairs.push_back({i, j, ij == ji, ij.is_scalar_multiple_of(ji)});
    }
  }
  w.determinants_one = true;
  for (const auto& m : w.g) {
    if (m.determinant().value() != 1) w.determinants_one = false;
  }
}

}  // namespace

P4MatrixWitness sl3_p4_witness(std::uint32_t q) {
  auto field = GaloisField::get(q);
  const auto& f = *field;
  if (q - 1 == 1 || q - 1 == 3) {
    fail(ErrorCode::BadQ, "GF(" + std::to_string(q) + ") has no non-zero a with a^3 != 1");
  }
  FieldElement a(field, f.primitive());
  FieldElement b = a.pow(-2);

  Matrix3 g1 = Matrix3::identity(field);
  g1(0, 1) = 1;
  Matrix3 g4 = Matrix3::identity(field);
  g4(1, 2) = 1;
  P4MatrixWitness w{q, field, a, b,
                    {g1, Matrix3::diagonal(a, a, b), Matrix3::diagonal(b, a, a), g4},
                    {}, false, true};
  fill_relations(w);
  return w;
}

P4MatrixWitness su3_p4_witness(std::uint32_t q) {
  if (q <= 2) fail(ErrorCode::BadQ, "SU(3, q) witness needs q > 2");
  if (q > 64) fail(ErrorCode::UnsupportedParameter, "GF(q^2) tables stop at q = 64");
  auto field = GaloisField::get(q * q);
  const auto& f = *field;
  // Generator of the (q+1)-th roots of unity; a^3 != 1 since q + 1 > 3.
  FieldElement a(field, f.pow(f.primitive(), q - 1));
  FieldElement b = a.pow(-2);
  const auto minus_one = f.neg(1);

  Matrix3 g1(field);
  g1(0, 1) = 1;
  g1(1, 0) = 1;
  g1(2, 2) = minus_one;
  Matrix3 g4(field);
  g4(0, 0) = minus_one;
  g4(1, 2) = 1;
  g4(2, 1) = 1;
  P4MatrixWitness w{q, field, a, b,
                    {g1, Matrix3::diagonal(a, a, b), Matrix3::diagonal(b, a, a), g4},
                    {}, false, true};
  fill_relations(w);
  const auto id = Matrix3::identity(field);
  for (const auto& m : w.g) {
    if (!(m.conjugate_transpose(q) * m == id)) w.hermitian_form_preserved = false;
  }
  return w;
}

}  // namespace commgraph
