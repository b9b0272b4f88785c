#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfcas/field.hpp"
#include "surfcas/monomial.hpp"

namespace surfcas {

struct Term {
  Monomial mono;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Homogeneity {
  bool homogeneous;
  std::optional<int> degree;  // empty for the zero polynomial
};

/// Element of F_p[x0..x4], terms strictly grevlex-descending with nonzero coefficients.
/// A default-constructed zero is not bound to a prime and adopts the other operand's.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::uint32_t prime) : prime_(prime) {}

  static Polynomial constant(std::uint32_t prime, std::int64_t c);
  static Polynomial term(std::uint32_t prime, Monomial m, Coeff c = 1);
  static Polynomial variable(std::uint32_t prime, int i);
  /// Sorts, merges and drops zeros.
  static Polynomial from_terms(std::uint32_t prime, std::vector<Term> terms);
  /// Trusts the caller: terms already sorted strictly descending, no zeros.
  static Polynomial from_sorted(std::uint32_t prime, std::vector<Term> terms);
  /// Dense coordinates over DegreeBasis::of(d).
  static Polynomial from_dense(std::uint32_t prime, int d, std::span<const Coeff> v);

  std::uint32_t prime() const { return prime_; }
  PrimeField field() const { return PrimeField(prime_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  Monomial leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  /// Highest total degree; empty for zero.
  std::optional<int> degree() const;
  Homogeneity homogeneity() const;
  Coeff coefficient(Monomial m) const;

  /// Dense coordinates in degree d; terms of other degrees are ignored.
  std::vector<Coeff> to_dense(int d) const;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial shifted(Monomial m, Coeff c = 1) const;
  Polynomial derivative(int var) const;
  /// Substitute x_i -> images[i]; images must share this prime.
  Polynomial substitute(std::span<const Polynomial> images) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.prime_ == b.prime_);
  }

  std::string to_string() const;

 private:
  std::uint32_t prime_ = 0;
  std::vector<Term> terms_;
  Polynomial combine(const Polynomial& o, bool subtract) const;
};

Homogeneity is_homogeneous(const Polynomial& f);
Polynomial poly_product(const Polynomial& f, const Polynomial& g);
std::uint32_t common_prime(const Polynomial& a, const Polynomial& b);

/// Parse the text syntax; throws std::invalid_argument with a position on error.
Polynomial parse_polynomial(std::string_view text, std::uint32_t prime);
std::string format_polynomial(const Polynomial& f);

/// Random homogeneous form of degree d with coefficients from rng.
Polynomial random_form(std::uint32_t prime, int d, Rng& rng);
/// Random form of degree d in the listed variables only.
Polynomial random_form_in(std::uint32_t prime, int d, std::span<const int> vars, Rng& rng);

}  // namespace surfcas
