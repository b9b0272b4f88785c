#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surfcas/hilbert.hpp"
#include "surfcas/linalg.hpp"
#include "surfcas/polynomial.hpp"

namespace surfcas {

/// Reduced grevlex Groebner basis of homogeneous generators, sorted by leading monomial.
/// With max_degree set, only pairs up to that degree are processed.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, std::uint32_t prime,
                                   std::optional<int> max_degree = std::nullopt);
std::vector<Polynomial> buchberger_up_to(std::span<const Polynomial> gens, std::uint32_t prime, int d);

/// Full reduction of f by a Groebner basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> gb);

/// Homogeneous ideal with a lazily computed, write-once Groebner basis.
class Ideal {
 public:
  Ideal();
  Ideal(std::uint32_t prime, std::vector<Polynomial> generators);
  static Ideal zero(std::uint32_t prime);
  static Ideal unit(std::uint32_t prime);
  /// Wraps an already reduced Groebner basis.
  static Ideal from_gb(std::uint32_t prime, std::vector<Polynomial> gb);

  std::uint32_t prime() const;
  const std::vector<Polynomial>& generators() const;
  const std::vector<Polynomial>& gb() const;
  std::vector<Monomial> leading_monomials() const;
  const HilbertSeries& hilbert_series() const;
  HilbertPolynomial hilbert_polynomial() const { return HilbertPolynomial(hilbert_series()); }

  bool is_zero() const { return gb().empty(); }
  bool is_unit() const;
  /// Largest generator degree of the reduced basis; 0 for the zero ideal.
  int max_gb_degree() const;
  /// Top degree of the reduced basis after a fixed generic change of coordinates.
  int regularity() const;
  /// Same ideal (compares reduced bases).
  bool same_as(const Ideal& o) const { return gb() == o.gb(); }

 private:
  struct State;
  std::shared_ptr<State> s_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool ideal_contains(const Ideal& I, const Polynomial& f);
bool ideal_contains(const Ideal& I, const Ideal& J);

enum class Piece { ideal, quotient };
std::uint64_t graded_piece_dim(const Ideal& I, int n, Piece which);

/// Basis of I_d with distinct leading monomials (monic, grevlex-descending by leading term).
std::vector<Polynomial> ideal_basis_in_degree(const Ideal& I, int d);
/// Standard monomials of degree d, grevlex-descending.
std::vector<Monomial> standard_monomials(const Ideal& I, int d);

/// (R/I)_d: normal-form coordinates of every degree-d monomial over the standard monomials.
class QuotientPiece {
 public:
  QuotientPiece(const Ideal& I, int d);

  int degree() const { return d_; }
  std::size_t dim() const { return standard_.size(); }
  const std::vector<Monomial>& standard() const { return standard_; }
  /// Coordinates of NF(x^a) for the monomial at position k of DegreeBasis::of(d).
  Vec monomial_coords(std::size_t k) const;
  /// acc += c * NF(monomial k)
  void accumulate(Vec& acc, std::size_t k, Coeff c) const;
  Vec coords(const Polynomial& f) const;
  Polynomial lift(const Vec& coords) const;

 private:
  PrimeField F_;
  int d_;
  std::vector<Monomial> standard_;
  std::vector<std::int64_t> std_pos_;  // position among standard monomials or -1
  std::vector<std::int64_t> row_of_;   // row in nf_ for non-standard monomials
  std::vector<Vec> nf_;
};

/// `.ideal` text: header line, `# ` comment lines, then one generator per line.
std::string format_ideal(const Ideal& I, const std::vector<std::string>& comments = {});
/// Throws std::invalid_argument naming the line on malformed input.
Ideal parse_ideal(std::string_view text);
Ideal read_ideal_file(const std::string& path);
void write_ideal_file(const std::string& path, const Ideal& I, const std::vector<std::string>& comments = {});

}  // namespace surfcas
