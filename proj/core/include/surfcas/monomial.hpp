#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace surfcas {

inline constexpr int kNumVars = 5;
inline constexpr int kMaxExponent = 127;

/// Monomial in x0..x4 packed into one word: byte i holds the exponent of x_i,
/// bits 40..47 the total degree. Packing is additive, so products are sums.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(const std::array<int, kNumVars>& e);
  static Monomial variable(int i, int power = 1);
  static constexpr Monomial from_raw(std::uint64_t raw) { return Monomial(raw); }

  int exponent(int i) const { return static_cast<int>((bits_ >> (8 * i)) & 0xff); }
  int degree() const { return static_cast<int>(bits_ >> 40); }
  std::array<int, kNumVars> exponents() const;
  std::uint64_t raw() const { return bits_; }

  bool divides(Monomial b) const {
    constexpr std::uint64_t H = 0x8080808080ull;
    return ((((b.bits_ & kLow) | H) - (bits_ & kLow)) & H) == H;
  }
  bool coprime(Monomial b) const;
  Monomial lcm(Monomial b) const;
  Monomial gcd(Monomial b) const;

  /// Numeric key whose order is grevlex.
  std::uint64_t order_key() const { return (bits_ & ~kLow) | (~bits_ & kLow); }

  friend Monomial operator*(Monomial a, Monomial b) { return Monomial(a.bits_ + b.bits_); }
  /// Exact quotient; requires b | a.
  friend Monomial operator/(Monomial a, Monomial b) { return Monomial(a.bits_ - b.bits_); }
  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(Monomial a, Monomial b) {
    return a.order_key() <=> b.order_key();
  }

 private:
  static constexpr std::uint64_t kLow = 0xffffffffffull;
  constexpr explicit Monomial(std::uint64_t b) : bits_(b) {}
  std::uint64_t bits_ = 0;
};

/// -1, 0, 1 under grevlex.
int compare_monomials(Monomial a, Monomial b);

/// Number of monomials of degree d in 5 variables; 0 for d < 0.
std::size_t num_monomials(int d);

std::uint64_t binomial(int n, int k);

/// All monomials of one degree, grevlex-descending, with O(1) ranking.
class DegreeBasis {
 public:
  static const DegreeBasis& of(int d);

  int degree() const { return d_; }
  std::size_t size() const { return monos_.size(); }
  Monomial operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  /// Position of m (degree must match).
  static std::size_t index(Monomial m);

 private:
  explicit DegreeBasis(int d);
  int d_;
  std::vector<Monomial> monos_;
};

}  // namespace surfcas
