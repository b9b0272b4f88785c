#include "surfcas/field.hpp"

#include <stdexcept>
#include <string>

namespace surfcas {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), m_(0) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus must be a prime below 2^31, got " + std::to_string(p));
  m_ = ~std::uint64_t{0} / p;
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

Rng Rng::derive(std::uint64_t tag) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32), 0x5eedu};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return Rng((static_cast<std::uint64_t>(out[1]) << 32) | out[0]);
}

}  // namespace surfcas
