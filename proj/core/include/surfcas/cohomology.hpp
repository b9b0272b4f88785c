#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "surfcas/groebner.hpp"
#include "surfcas/modres.hpp"

namespace surfcas {

/// h^i(I(n)) for i = 0..3 over a twist range.
class CohomologyTable {
 public:
  CohomologyTable() = default;
  CohomologyTable(int lo, int hi) : lo_(lo), hi_(hi) {}

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::int64_t at(int i, int n) const;
  void set(int i, int n, std::int64_t v) { entries_[{i, n}] = v; }
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  /// Rows i = 3..0 top to bottom, columns n = lo..hi; zeros print as '.'.
  std::string to_string() const;

 private:
  int lo_ = 0, hi_ = -1;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// One resolution of R/I, shared by every cohomology query on the same ideal.
class SheafCohomology {
 public:
  explicit SheafCohomology(const Ideal& I);

  const Ideal& ideal() const { return I_; }
  const FreeResolution& resolution() const { return res_; }
  /// Ext^i(R/I, R) for i = 0..4.
  const ExtModule& ext(int i) const;

  std::array<std::int64_t, 4> h(int n) const;
  CohomologyTable table(int lo, int hi) const;

 private:
  Ideal I_;
  FreeResolution res_;
  std::vector<ExtModule> ext_;
};

std::array<std::int64_t, 4> ideal_sheaf_cohomology(const Ideal& I, int n);
CohomologyTable cohomology_table(const Ideal& I, int lo, int hi);

/// H^1_*(I) as the graded dual of Ext^4(R/I, R(-5)).
struct RaoModule {
  std::map<int, std::size_t> hilbert_function;  // nonzero degrees only
  std::size_t generators = 0;
  std::size_t length() const;
  bool is_zero() const { return hilbert_function.empty(); }
  int lowest() const { return hilbert_function.begin()->first; }
  int highest() const { return hilbert_function.rbegin()->first; }
  /// Hilbert function listed from the lowest to the highest degree.
  std::vector<std::size_t> values() const;
};

RaoModule rao_module(const SheafCohomology& C);
RaoModule rao_module(const Ideal& I);

/// Linear forms l with l * H^1(I(top - 1)) = 0, as the ideal they generate.
/// Throws std::invalid_argument on a zero Rao module.
Ideal rao_support(const SheafCohomology& C);
Ideal rao_support(const Ideal& I);

struct Speciality {
  int e;          // max t with h^2(O(t)) != 0
  bool minimal;   // h^0(I(e + 4)) = 0
  bool unique;    // minimal and h^0(I(e + 5)) = 0
  bool acm;       // Rao module vanishes; minimality statements then follow convention only
};
Speciality speciality_and_minimality(const SheafCohomology& C);
Speciality speciality_and_minimality(const Ideal& I);

}  // namespace surfcas
