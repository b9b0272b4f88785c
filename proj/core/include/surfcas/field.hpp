#pragma once

#include <cstdint>
#include <random>

namespace surfcas {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/p for a prime p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 31991;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  Coeff reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    if (r >= p_) r -= p_;
    return static_cast<Coeff>(r);
  }
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return reduce(static_cast<std::uint64_t>(a) * b); }
  /// a + b*c
  Coeff fma(Coeff a, Coeff b, Coeff c) const { return reduce(a + static_cast<std::uint64_t>(b) * c); }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Coeff inv(Coeff a) const;
  Coeff from_int(std::int64_t v) const;
  /// Symmetric lift into (-p/2, p/2].
  std::int64_t lift(Coeff a) const { return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t m_;
};

/// Seeded generator. The stream is mt19937_64; child streams come from std::seed_seq,
/// so every draw is reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  Coeff uniform(const PrimeField& F) { return static_cast<Coeff>(below(F.prime())); }
  Coeff nonzero(const PrimeField& F) { return static_cast<Coeff>(1 + below(F.prime() - 1)); }
  Rng derive(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace surfcas
