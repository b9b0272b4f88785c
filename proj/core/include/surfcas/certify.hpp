#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcas/cohomology.hpp"
#include "surfcas/constructions.hpp"
#include "surfcas/numerology.hpp"

namespace surfcas {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SecantLine {
  std::vector<Polynomial> forms;
  std::int64_t length = 0;  // length of S meeting the line
};

struct LiaisonSummary {
  int m = 4, n = 4;
  std::vector<Polynomial> complete_intersection;
  std::optional<SurfaceInvariants> residual;
  bool relinks = false;  // linking the residual back returns I
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct CertifyOptions {
  SmoothnessMode smoothness = SmoothnessMode::probabilistic;
  std::uint64_t seed = 1;
  int lo = -1, hi = 7;
  bool liaison = true;
};

struct CertificationReport {
  FamilyId family = FamilyId::A;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 0;
  std::optional<SurfaceInvariants> invariants;
  std::optional<BettiTable> betti;
  std::optional<CohomologyTable> cohomology;
  std::vector<std::size_t> rao;  // Hilbert function from its lowest degree
  int rao_lowest = 0;
  std::size_t rao_generators = 0;
  std::size_t rao_support_forms = 0;
  std::optional<SecantLine> six_secant;
  std::optional<Speciality> speciality;
  std::string smoothness;
  std::optional<LiaisonSummary> liaison;
  std::vector<CheckResult> checks;
  std::vector<StageTiming> timings;

  bool pass() const;
  const CheckResult* check(const std::string& name) const;
};

/// Lines "step i, twist t: expected a, got b" for every differing entry.
std::vector<std::string> betti_diff(const BettiTable& expected, const BettiTable& got);

/// Residual invariants a link of S (degree 10, genus pi) through forms of degrees m, n must have.
SurfaceInvariants expected_residual(std::int64_t pi, std::int64_t chi, int m, int n);

/// Runs every check; mathematical failures are recorded in the report, never thrown.
CertificationReport certify(const Ideal& I, FamilyId expected, const CertifyOptions& opt = {});

}  // namespace surfcas
