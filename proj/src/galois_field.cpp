#include "commgraph/galois_field.hpp"

#include <map>
#include <mutex>
#include <string>

#include "commgraph/error.hpp"

namespace commgraph {
namespace {

struct ModulusEntry {
  std::uint32_t p;
  std::uint32_t k;
  std::vector<std::uint32_t> coeffs;  // lowest degree first, monic
};

// Conway polynomials for every non-prime prime power up to 4096.
const std::vector<ModulusEntry>& modulus_table() {
  static const std::vector<ModulusEntry> table = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {3, 2, {2, 2, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {5, 2, {2, 4, 1}},
    {3, 3, {1, 2, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {7, 2, {3, 6, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {11, 2, {2, 7, 1}},
    {5, 3, {3, 3, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {13, 2, {2, 12, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {17, 2, {3, 16, 1}},
    {7, 3, {4, 0, 6, 1}},
    {19, 2, {2, 18, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {23, 2, {5, 21, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {29, 2, {2, 24, 1}},
    {31, 2, {3, 29, 1}},
    {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {11, 3, {9, 2, 0, 1}},
    {37, 2, {2, 33, 1}},
    {41, 2, {6, 38, 1}},
    {43, 2, {3, 42, 1}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 7, {1, 0, 2, 0, 0, 0, 0, 1}},
    {13, 3, {11, 2, 0, 1}},
    {47, 2, {5, 45, 1}},
    {7, 4, {3, 4, 5, 0, 1}},
    {53, 2, {2, 49, 1}},
    {5, 5, {3, 4, 0, 0, 0, 1}},
    {59, 2, {2, 58, 1}},
    {61, 2, {2, 60, 1}},
    {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
  };
  return table;
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t x = 1;
    std::uint32_t ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

}  // namespace

bool is_prime_power(std::uint32_t q, std::uint32_t* p_out, std::uint32_t* k_out) {
  if (q < 2) return false;
  std::uint32_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

std::shared_ptr<const GaloisField> GaloisField::get(std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const GaloisField>> cache;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  if (q > 4096 || !is_prime_power(q, &p, &k)) {
    fail(ErrorCode::BadParameter, "GF(" + std::to_string(q) + ") is not a supported field");
  }
  std::lock_guard lock(mutex);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  std::vector<std::uint32_t> modulus;
  if (k == 1) {
    modulus = {(p - least_primitive_root(p)) % p, 1};
  } else {
    for (const auto& e : modulus_table()) {
      if (e.p == p && e.k == k) modulus = e.coeffs;
    }
    if (modulus.empty()) fail(ErrorCode::Internal, "missing modulus for GF(" + std::to_string(q) + ")");
  }
  auto field = std::make_shared<const GaloisField>(p, k, std::move(modulus));
  cache.emplace(q, field);
  return field;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  // Powers of the residue of t (k > 1) or of the root (k = 1), by
  // multiply-by-t and reduce.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::vector<std::uint32_t> cur(k_, 0);
  cur[0] = 1;
  std::vector<bool> seen(q_, false);
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    Value v = from_coefficients(cur);
    if (seen[v]) fail(ErrorCode::Internal, "modulus polynomial is not primitive");
    seen[v] = true;
    exp_[i] = v;
    log_[v] = i;
    // cur *= t modulo the monic modulus.
    if (k_ == 1) {
      cur[0] = cur[0] * ((p_ - modulus_[0]) % p_) % p_;
    } else {
      const std::uint32_t top = cur[k_ - 1];
      for (std::uint32_t j = k_ - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      for (std::uint32_t j = 0; j < k_; ++j) cur[j] = (cur[j] + (p_ - modulus_[j]) * top) % p_;
    }
  }
}

std::vector<std::uint32_t> GaloisField::coefficients(Value a) const {
  std::vector<std::uint32_t> c(k_);
  for (std::uint32_t j = 0; j < k_; ++j) {
    c[j] = a % p_;
    a /= p_;
  }
  return c;
}

GaloisField::Value GaloisField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  Value v = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) v = v * p_ + coeffs[j] % p_;
  return v;
}

GaloisField::Value GaloisField::add(Value a, Value b) const {
  if (k_ == 1) return (a + b) % p_;
  Value out = 0;
  Value scale = 1;
  for (std::uint32_t j = 0; j < k_; ++j) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Value GaloisField::neg(Value a) const {
  Value out = 0;
  Value scale = 1;
  for (std::uint32_t j = 0; j < k_; ++j) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Value GaloisField::mul(Value a, Value b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

GaloisField::Value GaloisField::inv(Value a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Value GaloisField::pow(Value a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t m = q_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_[a]) * (e % m)) % m;
  if (l < 0) l += m;
  return exp_[static_cast<std::size_t>(l)];
}

std::uint32_t GaloisField::multiplicative_order(Value a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "zero has no multiplicative order");
  std::uint32_t ord = 1;
  for (Value x = a; x != 1; x = mul(x, a)) ++ord;
  return ord;
}

FieldElement::FieldElement(std::shared_ptr<const GaloisField> field, GaloisField::Value value)
    : field_(std::move(field)), value_(value) {
  if (!field_) fail(ErrorCode::BadParameter, "field element without a field");
  if (value_ >= field_->order()) fail(ErrorCode::BadParameter, "field element out of range");
}

const GaloisField& FieldElement::same_field(const FieldElement& o) const {
  if (!field_ || field_ != o.field_) fail(ErrorCode::FieldMismatch, "operands from different fields");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, same_field(o).add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, same_field(o).sub(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, same_field(o).mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  const auto& f = same_field(o);
  return {field_, f.mul(value_, f.inv(o.value_))};
}
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

FieldElement field_arith(FieldOp op, std::span<const FieldElement> operands, std::int64_t exponent) {
  auto need = [&](std::size_t n) {
    if (operands.size() != n) fail(ErrorCode::BadParameter, "wrong operand count");
  };
  switch (op) {
    case FieldOp::Add: need(2); return operands[0] + operands[1];
    case FieldOp::Mul: need(2); return operands[0] * operands[1];
    case FieldOp::Inv: need(1); return operands[0].inv();
    case FieldOp::Pow: need(1); return operands[0].pow(exponent);
  }
  fail(ErrorCode::BadParameter, "unknown field operation");
}

}  // namespace commgraph
