#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcas/groebner.hpp"

namespace surfcas {

/// Invertible linear substitution x_i -> sum_j a[i][j] x_j.
class LinearChange {
 public:
  static LinearChange identity(std::uint32_t prime);
  static LinearChange random(std::uint32_t prime, Rng& rng);
  /// x4 -> x4 + sum_{j<4} c_j x_j, other variables fixed; x4 maps to the form `ell` under inverse().
  static LinearChange moving_last_to(const Polynomial& ell);

  std::uint32_t prime() const { return prime_; }
  Polynomial apply(const Polynomial& f) const;
  Ideal apply(const Ideal& I) const;
  LinearChange inverse() const;

 private:
  std::uint32_t prime_ = PrimeField::kDefaultPrime;
  std::array<std::array<Coeff, 5>, 5> a_{};
  std::vector<Polynomial> images() const;
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
/// I : (h)
Ideal ideal_quotient(const Ideal& I, const Polynomial& h);
/// I : J
Ideal ideal_quotient(const Ideal& I, const Ideal& J, std::uint64_t seed = 0x51);

struct SaturationInfo {
  Ideal ideal;
  int iterations;  // colon steps the fallback path needed, 0 on the fast path
  bool fast_path;
};
SaturationInfo saturate_with_info(const Ideal& I, std::uint64_t seed = 0x5a7);
Ideal saturate(const Ideal& I, std::uint64_t seed = 0x5a7);
/// I : m^infinity by iterated colon with the irrelevant ideal.
SaturationInfo saturate_by_iteration(const Ideal& I);
bool is_saturated(const Ideal& I, std::uint64_t seed = 0x5a7);
/// I : J^infinity by iterating I : J.
Ideal saturate_by(const Ideal& I, const Ideal& J);

/// Castelnuovo-Mumford regularity of I: top degree of the reduced basis in generic coordinates.
int regularity(const Ideal& I, std::uint64_t seed = 0x4e6);

Polynomial random_in_degree(const Ideal& I, int d, std::uint64_t seed);
Polynomial random_in_degree(const Ideal& I, int d, Rng& rng);

struct DimDegree {
  int dimension;  // projective; -1 for the empty scheme
  std::int64_t degree;
};
DimDegree dimension_and_degree(const Ideal& I);
/// Constant Hilbert polynomial of a zero-dimensional scheme; throws on positive dimension.
std::int64_t zero_scheme_length(const Ideal& I);

enum class SmoothnessMode { exact, probabilistic };
enum class Verdict { smooth, singular, inconclusive };

struct SmoothnessReport {
  Verdict verdict;
  int singular_dimension = -1;   // when singular and known
  int certificate_degree = -1;   // degree where R/(I + minors) vanished
  std::size_t minors_used = 0;
  std::string note;
};

/// Jacobian criterion for a codimension-two scheme.
SmoothnessReport smoothness_check(const Ideal& I, SmoothnessMode mode, int trials = 8,
                                  std::uint64_t seed = 0x5300, int max_degree = 18);

std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& gens);

}  // namespace surfcas
