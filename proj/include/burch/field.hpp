#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace burch {

using Residue = std::uint32_t;

/// Arithmetic modulo a prime p < 2^16.  Products of two residues then fit
/// in 32 bits, which lets reduce() use a multiply-shift instead of '%'.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  // x must be < 2^32.
  Residue reduce(std::uint32_t x) const {
    std::uint64_t low = magic_ * x;
    return static_cast<Residue>((static_cast<unsigned __int128>(low) * p_) >> 64);
  }
  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const { return reduce(a * b); }
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::uint64_t e) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  Residue from_int(std::int64_t v) const;
  // Signed representative in (-p/2, p/2].
  std::int64_t to_signed(Residue a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t magic_;
};

bool is_prime(std::uint32_t n);

class FieldElement {
 public:
  FieldElement(PrimeField f, std::int64_t v = 0) : field_(f), value_(f.from_int(v)) {}
  static FieldElement from_residue(PrimeField f, Residue r) {
    FieldElement e(f);
    e.value_ = r;
    return e;
  }

  Residue value() const { return value_; }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return make(field_.add(value_, o.checked(field_))); }
  FieldElement operator-(const FieldElement& o) const { return make(field_.sub(value_, o.checked(field_))); }
  FieldElement operator*(const FieldElement& o) const { return make(field_.mul(value_, o.checked(field_))); }
  FieldElement operator/(const FieldElement& o) const { return make(field_.div(value_, o.checked(field_))); }
  FieldElement operator-() const { return make(field_.neg(value_)); }
  FieldElement inverse() const { return make(field_.inv(value_)); }
  bool operator==(const FieldElement& o) const { return field_ == o.field_ && value_ == o.value_; }

 private:
  FieldElement make(Residue r) const { return from_residue(field_, r); }
  Residue checked(const PrimeField& f) const {
    if (!(f == field_)) throw std::invalid_argument("field element modulus mismatch");
    return value_;
  }

  PrimeField field_;
  Residue value_;
};

}  // namespace burch
