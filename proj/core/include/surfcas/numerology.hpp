#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcas/modres.hpp"

namespace surfcas {

/// 2 p_a - 2 = C^2 + C.K
std::int64_t adjunction_genus(std::int64_t c2, std::int64_t ck);
std::int64_t union_genus(std::int64_t pc, std::int64_t pd, std::int64_t cd);
/// chi(O_S(C)) by Riemann-Roch.
std::int64_t chi_twist(std::int64_t c2, std::int64_t ck, std::int64_t chi);
/// K^2 from the double point formula for a smooth surface in P^4.
std::int64_t double_point_K2(std::int64_t d, std::int64_t hk, std::int64_t chi);

struct SurfaceNumerics {
  std::int64_t d = 0, HK = 0, K2 = 0, pi = 0, chi = 0, N5 = 0, N6 = 0;
  static SurfaceNumerics from(std::int64_t d, std::int64_t pi, std::int64_t chi);
  bool adjunction_holds() const;
  bool double_point_holds() const;
};

/// sharp5: 5-secants meeting a general plane; sharp6: 6-secants plus (-1)-lines.
struct MultisecantCounts {
  std::int64_t sharp5, sharp6;
};
/// Evaluated table for degree 10; throws std::out_of_range elsewhere.
MultisecantCounts lebarz_counts(std::int64_t pi, std::int64_t chi);

/// Sectional genus of the residual in an (m, n) link.
std::int64_t liaison_transform(std::int64_t d, std::int64_t pi, int m, int n, std::int64_t d_residual);
/// chi(O_{S'}) = chi(O_{V cap V'}) - chi(O_S(m + n - 5)).
std::int64_t chi_relation(std::int64_t chi_ci, std::int64_t chi_s_twist);
/// chi(O) of a complete intersection surface of type (m, n).
std::int64_t complete_intersection_chi(int m, int n);

enum class FamilyId { A, B, C, D, E, F, G, H };
inline constexpr FamilyId kAllFamilies[] = {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D,
                                            FamilyId::E, FamilyId::F, FamilyId::G, FamilyId::H};
char to_char(FamilyId f);
std::optional<FamilyId> parse_family(std::string_view s);

/// Slots (i, n) of the h^i(I_S(n)) window 0 <= n <= 4 that a Beilinson monad reads.
constexpr std::array<std::pair<int, int>, 8> kWindowSlots = {
    {{3, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {1, 3}, {1, 4}, {0, 4}}};

struct FamilyDescriptor {
  FamilyId id;
  std::int64_t pi, chi, N6, N5;
  std::string birational_type;
  std::int64_t minus_one_lines;
  BettiTable betti;
  std::string construction;
  int hilbert_scheme_dimension;
  std::array<std::int64_t, 8> window;  // values at kWindowSlots
  std::int64_t K2() const { return double_point_K2(10, 2 * pi - 12, chi); }
};
const std::vector<FamilyDescriptor>& family_table();
const FamilyDescriptor& family(FamilyId f);

struct Classification {
  std::int64_t pi;
  std::string summary;
  std::vector<FamilyDescriptor> families;  // only for pi 9 and 10
};
/// Smooth degree-10 surfaces with the given sectional genus; throws std::out_of_range when none exist.
Classification classify_d10(std::int64_t pi);

}  // namespace surfcas
