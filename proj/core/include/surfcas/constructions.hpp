#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcas/groebner.hpp"
#include "surfcas/idealops.hpp"
#include "surfcas/monad.hpp"
#include "surfcas/numerology.hpp"

namespace surfcas {

/// Ideal of the linear subspace cut by independent linear forms.
Ideal linear_subspace(const std::vector<Polynomial>& forms);
/// Linear subspace spanned by points given as coordinate vectors.
Ideal span_of_points(std::uint32_t prime, const std::vector<std::vector<Coeff>>& points);
/// Linear forms of a linear ideal, i.e. its degree-one piece.
std::vector<Polynomial> linear_forms(const Ideal& I);
/// Random plane through a line, not contained in the hyperplane `avoid` when given.
Ideal plane_through_line(const Ideal& line, Rng& rng, const Polynomial* avoid = nullptr);

/// Smooth cubic scroll having the given line as directrix.
Ideal cubic_scroll(const Ideal& directrix, Rng& rng);
/// Scroll from explicit matrix rows: 2 x 2 minors of ((r0), (r1)).
Ideal scroll_from_rows(const std::vector<Polynomial>& r0, const std::vector<Polynomial>& r1);
/// (x0^2, x0 x1, x1^3, a x1^2 + b1 b2 b3 x0)
Ideal triple_plane_structure(const Polynomial& a, const Polynomial& b1, const Polynomial& b2, const Polynomial& b3);
/// (x0, x1)^3 + (g x0^2 - f x0 x1, h x0^2 - f x1^2, h x0 x1 - g x1^2)
Ideal quadruple_plane_structure(const Polynomial& f, const Polynomial& g, const Polynomial& h);

struct DelPezzoOptions {
  int degree = 4;                             // 3 or 4
  std::optional<Polynomial> hyperplane;       // degree 3: the hyperplane of the cubic
  std::optional<Ideal> containing_line;       // degree 3: forced line
  std::vector<Polynomial> section_quadrics;   // degree 4: two quadrics in x0..x3 fixing the section x4 = 0
};
Ideal del_pezzo(std::uint32_t prime, const DelPezzoOptions& opt, Rng& rng);

struct LinkResult {
  Ideal residual;
  std::vector<Polynomial> complete_intersection;
  /// The link was degenerate: the complete intersection equals Z and nothing is residual.
  bool empty_residual = false;
};
/// Residual of Z in the intersection of general forms of degrees m and n through it.
/// Throws std::runtime_error when no regular pair was found within `attempts` draws.
LinkResult link(const Ideal& Z, int m, int n, Rng& rng, int attempts = 5);
/// Residual of Z in a given complete intersection.
Ideal link_with(const Ideal& Z, const std::vector<Polynomial>& ci);

struct BilinkResult {
  LinkResult first, second;
};
BilinkResult bilink(const Ideal& Z, int m1, int n1, int m2, int n2, Rng& rng, int attempts = 5);

struct Stage {
  std::string name;
  Ideal ideal;
};

struct ConstructOptions {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  int retries = 5;
  SmoothnessMode smoothness = SmoothnessMode::probabilistic;
  bool allow_fallback = true;
  bool force_fallback = false;
};

struct AttemptLog {
  std::string route;
  std::uint64_t seed;
  std::string outcome;
};

struct Construction {
  FamilyId family;
  bool ok = false;
  Ideal ideal;
  std::string route;
  std::uint64_t seed_used = 0;
  std::vector<Stage> stages;
  std::vector<AttemptLog> attempts;
  std::optional<MonadRecipe> monad;
  std::size_t hom_dimension = 0;
};

/// The linkage configuration whose residual is family f: Z for A, C, G, H and the start of the bilink for D, E, F.
/// Empty for B.
std::optional<Ideal> residual_configuration(FamilyId f, std::uint32_t prime, Rng& rng);
MonadRecipe monad_recipe(FamilyId f);
/// Candidate through the monad route, before any check.
Ideal monad_candidate(FamilyId f, std::uint32_t prime, Rng& rng, std::size_t* hom_dim = nullptr);
/// Invariants, Betti table and smoothness agree with the family; empty string on success.
std::string quick_check(const Ideal& S, FamilyId f, SmoothnessMode mode, std::uint64_t seed);

Construction construct_family(FamilyId f, const ConstructOptions& opt);

}  // namespace surfcas
