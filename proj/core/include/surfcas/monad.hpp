#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcas/groebner.hpp"
#include "surfcas/modres.hpp"

namespace surfcas {

/// A vector bundle on P^4 as the kernel of `kappa` on an ambient free module.
/// When `presented` is set, the generators and relations present a module whose sheaf is the bundle.
struct SheafModule {
  std::string tag;
  int rank = 0;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  GradedFreeModule ambient;
  ModuleMap kappa;
  bool presented = false;
  std::vector<ModuleElement> generators;
  std::vector<int> generator_degrees;
  /// Each relation lists one coefficient per generator.
  std::vector<std::vector<Polynomial>> relations;
  std::vector<int> relation_degrees;

  /// Global sections of the twist by d, as ambient coordinates.
  std::vector<Vec> section_basis(int d) const;
  std::size_t sections(int d) const { return section_basis(d).size(); }
};

SheafModule structure_sheaf(std::uint32_t prime, int twist);
/// Omega^i(i) from the Koszul complex; i = 0 gives O and i = 4 gives O(-1).
SheafModule omega_module(std::uint32_t prime, int i);
SheafModule direct_sum(const std::vector<SheafModule>& parts);
SheafModule repeat(const SheafModule& m, int copies);
/// ker(psi) for a surjective map of free modules psi : A -> B.
SheafModule kernel_bundle(const ModuleMap& psi, std::string tag);

/// Morphism given by the images of the source generators in the target's ambient module.
struct SheafMap {
  SheafModule source, target;
  std::vector<ModuleElement> images;
};

/// Contraction Omega^i(i) -> Omega^j(j) by the (i - j)-form with coordinates `omega`,
/// indexed by the (i - j)-subsets of {0..4} in lexicographic order.
/// Composition: contraction(j, k, b) o contraction(i, j, a) = contraction(i, k, a ^ b).
SheafMap contraction_hom(std::uint32_t prime, int i, int j, const std::vector<Coeff>& omega);
/// Coordinates of a ^ b in the lexicographic basis of the exterior algebra.
std::vector<Coeff> wedge(std::uint32_t prime, int ka, const std::vector<Coeff>& a, int kb, const std::vector<Coeff>& b);
std::vector<std::vector<int>> subsets(int n, int k);
/// Contraction of an ambient element of Lambda^i by an m-form.
ModuleElement contract(std::uint32_t prime, int i, int m, const std::vector<Coeff>& omega, const ModuleElement& e);

struct HomSpace {
  SheafModule source, target;
  std::vector<std::vector<ModuleElement>> basis;
  std::size_t dim() const { return basis.size(); }
  SheafMap random_element(Rng& rng) const;
};

/// Degree-zero morphisms between the sheaves; the source must be presented.
HomSpace hom_space(const SheafModule& F, const SheafModule& G);

/// Every row combination of the matrix of linear forms spans at least i + 1 dimensions.
bool rank_condition(const std::vector<std::vector<Polynomial>>& A, int i, std::uint64_t seed = 0x3a);

/// 5 O + 2 O(1) -> O(2) with entries (q_1..q_5, l_1, l_2).
SheafModule kernel_bundle_G(const std::vector<Polynomial>& linear, const std::vector<Polynomial>& quadrics);

enum class VeroneseSection { elliptic, k3 };
/// Five quadrics in x2, x3, x4 spanning the hyperplane apolar to a rank 3 (elliptic) or rank 2 (k3) conic.
std::vector<Polynomial> veronese_quadrics(std::uint32_t prime, VeroneseSection kind, Rng& rng);
SheafModule psi_bundle(std::uint32_t prime, VeroneseSection kind, Rng& rng);
/// O + ker(4 O + 2 O(1) -> O(2)) with generic entries.
SheafModule remark_bundle_three_planes(std::uint32_t prime, Rng& rng);
/// ker(O + 6 O(1) -> 2 O(2)) whose linear part drops rank at three points.
SheafModule remark_bundle_three_points(std::uint32_t prime, Rng& rng);
/// ker(2 Omega^1(1) -> O) given by two independent contractions.
SheafModule omega_pair_kernel(std::uint32_t prime, const std::vector<Coeff>& v1, const std::vector<Coeff>& v2);

/// The maximal minors of a map of free modules have no common zero.
bool is_surjective(const ModuleMap& psi);

enum class MonadRecipe { six_secant_rational, rational, three_planes, k3_psi, elliptic_psi, three_points, elliptic_ten, general_ten };
struct MonadData {
  SheafModule F, G;
};
/// Source and target sheaves for a presentation 0 -> F -> G -> I(4) -> 0, with random choices drawn from rng.
MonadData monad_sheaves(std::uint32_t prime, MonadRecipe recipe, Rng& rng);
std::string to_string(MonadRecipe r);

struct MonadIdeal {
  Ideal ideal;
  /// dim I_{d+4} against h0(G(d)) - h0(F(d)) for d = 0..2.
  bool euler_identity;
};

/// Saturated ideal of the degeneracy surface, via the unique map coker(phi) -> O(4).
/// Throws std::invalid_argument on rank mismatch and std::runtime_error when the cokernel is no ideal sheaf.
MonadIdeal ideal_from_monad(const SheafMap& phi);

}  // namespace surfcas
