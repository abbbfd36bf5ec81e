#include "burch/field.hpp"

namespace burch {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p))
    throw std::invalid_argument("modulus must be a prime below 65536, got " + std::to_string(p));
  magic_ = UINT64_C(0xFFFFFFFFFFFFFFFF) / p + 1;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Residue>(t);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % p_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

}  // namespace burch
