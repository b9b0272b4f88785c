#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcas/monomial.hpp"

namespace surfcas {

/// Hilbert series of R/I written as N(t) / (1-t)^5.
class HilbertSeries {
 public:
  HilbertSeries() : num_{1} {}
  explicit HilbertSeries(std::vector<std::int64_t> numerator);

  const std::vector<std::int64_t>& numerator() const { return num_; }
  /// dim (R/I)_n.
  std::int64_t value(int n) const;
  bool operator==(const HilbertSeries& o) const { return num_ == o.num_; }
  std::string to_string() const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  /// Multiply by t^k.
  HilbertSeries shifted(int k) const;

 private:
  std::vector<std::int64_t> num_;  // num_[k] = coefficient of t^k
  void trim();
};

HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> gens);

/// Hilbert polynomial of the projective scheme: P(n) = sum q_k C(n - k + D, D).
class HilbertPolynomial {
 public:
  explicit HilbertPolynomial(const HilbertSeries& hs);

  /// Projective dimension; -1 for the empty scheme.
  int dimension() const { return dim_; }
  std::int64_t degree() const { return deg_; }
  std::int64_t operator()(std::int64_t n) const;
  /// Coefficients a_k of sum a_k n^k, as rationals num/den.
  std::vector<std::pair<std::int64_t, std::int64_t>> coefficients() const;
  std::string to_string() const;

 private:
  int dim_;
  std::int64_t deg_;
  std::vector<std::int64_t> q_;
};

struct SurfaceInvariants {
  std::int64_t degree;
  std::int64_t sectional_genus;
  std::int64_t chi;
};

/// (d, pi, chi) of a two-dimensional scheme; empty otherwise.
std::optional<SurfaceInvariants> surface_invariants(const HilbertPolynomial& P);

}  // namespace surfcas
