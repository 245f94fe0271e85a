#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace commgraph {

// GF(p^k) for p^k <= 4096. Elements are encoded as integers 0..q-1 whose
// base-p digits are the polynomial coefficients (lowest degree first) modulo
// a fixed irreducible polynomial. The moduli are the Conway polynomials, so
// the residue of t is a primitive element; prime fields use their least
// primitive root.
class GaloisField {
 public:
  using Value = std::uint32_t;

  // Shared, cached instance. Throws BadParameter unless q is a prime power
  // in 2..4096.
  static std::shared_ptr<const GaloisField> get(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  // Monic modulus, lowest degree first; {-root, 1} style for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Value zero() const noexcept { return 0; }
  Value one() const noexcept { return 1; }
  Value primitive() const noexcept { return exp_[1]; }

  Value add(Value a, Value b) const;
  Value neg(Value a) const;
  Value sub(Value a, Value b) const { return add(a, neg(b)); }
  Value mul(Value a, Value b) const;
  Value inv(Value a) const;  // throws DivisionByZero
  Value pow(Value a, std::int64_t e) const;
  std::uint32_t multiplicative_order(Value a) const;

  // Coefficient vector of an encoded element, lowest degree first.
  std::vector<std::uint32_t> coefficients(Value a) const;
  Value from_coefficients(std::span<const std::uint32_t> coeffs) const;

  GaloisField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Value> exp_;          // exp_[i] = primitive^i, i in 0..q-2
  std::vector<std::uint32_t> log_;  // inverse of exp_, log_[0] unused
};

bool is_prime_power(std::uint32_t q, std::uint32_t* p = nullptr, std::uint32_t* k = nullptr);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::shared_ptr<const GaloisField> field, GaloisField::Value value);

  const std::shared_ptr<const GaloisField>& field() const noexcept { return field_; }
  GaloisField::Value value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  const GaloisField& same_field(const FieldElement& o) const;

  std::shared_ptr<const GaloisField> field_;
  GaloisField::Value value_ = 0;
};

enum class FieldOp { Add, Mul, Inv, Pow };

// Single entry point over the four operations; `exponent` is used by Pow.
FieldElement field_arith(FieldOp op, std::span<const FieldElement> operands,
                         std::int64_t exponent = 0);

}  // namespace commgraph
