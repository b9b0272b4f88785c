#include "surfcas/numerology.hpp"

#include <stdexcept>

namespace surfcas {

namespace {

std::int64_t half(std::int64_t v, const char* what) {
  if (v % 2) throw std::invalid_argument(std::string(what) + ": odd numerator");
  return v / 2;
}

/// C(x, 4) as a polynomial in x.
std::int64_t binom4(std::int64_t x) { return x * (x - 1) * (x - 2) * (x - 3) / 24; }

BettiTable table(std::initializer_list<std::tuple<int, int, int>> rows) {
  std::map<std::pair<int, int>, int> e;
  for (auto [i, j, r] : rows) e[{i, j}] = r;
  return BettiTable(std::move(e));
}

}  // namespace

std::int64_t adjunction_genus(std::int64_t c2, std::int64_t ck) { return half(c2 + ck, "adjunction_genus") + 1; }

std::int64_t union_genus(std::int64_t pc, std::int64_t pd, std::int64_t cd) { return pc + pd + cd - 1; }

std::int64_t chi_twist(std::int64_t c2, std::int64_t ck, std::int64_t chi) { return half(c2 - ck, "chi_twist") + chi; }

std::int64_t double_point_K2(std::int64_t d, std::int64_t hk, std::int64_t chi) {
  return half(d * d - 10 * d - 5 * hk + 12 * chi, "double_point_K2");
}

SurfaceNumerics SurfaceNumerics::from(std::int64_t d, std::int64_t pi, std::int64_t chi) {
  SurfaceNumerics s;
  s.d = d;
  s.pi = pi;
  s.chi = chi;
  s.HK = 2 * pi - 2 - d;
  s.K2 = double_point_K2(d, s.HK, chi);
  if (d == 10) {
    try {
      auto c = lebarz_counts(pi, chi);
      s.N5 = c.sharp5;
    } catch (const std::out_of_range&) {
    }
  }
  return s;
}

bool SurfaceNumerics::adjunction_holds() const { return (d + HK) % 2 == 0 && adjunction_genus(d, HK) == pi; }

bool SurfaceNumerics::double_point_holds() const { return d * d - 10 * d - 5 * HK - 2 * K2 + 12 * chi == 0; }

MultisecantCounts lebarz_counts(std::int64_t pi, std::int64_t chi) {
  if (pi == 9 && chi == 1) return {6, 7};
  if (pi == 9 && chi == 2) return {12, 3};
  if (pi == 9 && chi == 3) return {18, 3};
  if (pi == 10 && chi == 3) return {2, 2};
  if (pi == 10 && chi == 4) return {6, 1};
  throw std::out_of_range("lebarz_counts: no entry for pi=" + std::to_string(pi) + " chi=" + std::to_string(chi));
}

std::int64_t liaison_transform(std::int64_t d, std::int64_t pi, int m, int n, std::int64_t d_residual) {
  return pi - half(static_cast<std::int64_t>(m + n - 4) * (d - d_residual), "liaison_transform");
}

std::int64_t chi_relation(std::int64_t chi_ci, std::int64_t chi_s_twist) { return chi_ci - chi_s_twist; }

std::int64_t complete_intersection_chi(int m, int n) { return 1 - binom4(4 - m) - binom4(4 - n) + binom4(4 - m - n); }

char to_char(FamilyId f) { return static_cast<char>('A' + static_cast<int>(f)); }

std::optional<FamilyId> parse_family(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  char c = s[0];
  if (c >= 'a' && c <= 'h') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'H') return std::nullopt;
  return static_cast<FamilyId>(c - 'A');
}

const std::vector<FamilyDescriptor>& family_table() {
  static const std::vector<FamilyDescriptor> rows = {
      {FamilyId::A, 9, 1, 1, 6, "rational", 6,
       table({{0, 4, 2}, {0, 5, 5}, {0, 6, 1}, {1, 6, 9}, {1, 7, 3}, {2, 7, 3}, {2, 8, 3}, {3, 9, 1}}),
       "(4,4) link of three planes and a cubic scroll through a line", 42, {0, 0, 2, 0, 0, 2, 1, 2}},
      {FamilyId::B, 9, 1, 0, 6, "rational", 7,
       table({{0, 4, 1}, {0, 5, 10}, {1, 6, 18}, {2, 7, 10}, {3, 8, 2}}),
       "monad 2 Omega^3(3) -> 2 Omega^1(1) + O", 42, {0, 0, 2, 0, 0, 2, 0, 1}},
      {FamilyId::C, 9, 2, 3, 12, "K3", 0,
       table({{0, 4, 2}, {0, 5, 4}, {0, 6, 3}, {1, 6, 7}, {1, 7, 8}, {2, 7, 2}, {2, 8, 7}, {3, 9, 2}}),
       "(4,4) link of three planes and a triple plane", 45, {1, 0, 1, 0, 1, 3, 2, 2}},
      {FamilyId::D, 9, 2, 1, 12, "K3", 2,
       table({{0, 4, 1}, {0, 5, 9}, {0, 6, 1}, {1, 6, 15}, {1, 7, 3}, {2, 7, 7}, {2, 8, 3}, {3, 8, 1}, {3, 9, 1}}),
       "(4,4) then (4,5) link of a plane, a quadric and a cubic scroll", 44, {1, 0, 1, 0, 1, 3, 1, 1}},
      {FamilyId::E, 9, 2, 0, 12, "elliptic", 3,
       table({{0, 4, 1}, {0, 5, 9}, {1, 6, 14}, {1, 7, 1}, {2, 7, 5}, {2, 8, 2}, {3, 9, 1}}),
       "(4,4) then (4,5) link of a quadruple plane and a quadric", 44, {1, 0, 1, 0, 1, 3, 1, 1}},
      {FamilyId::F, 9, 3, 3, 18, "general type", 0,
       table({{0, 4, 1}, {0, 5, 8}, {0, 6, 3}, {1, 6, 13}, {1, 7, 8}, {2, 7, 6}, {2, 8, 7}, {3, 8, 1}, {3, 9, 2}}),
       "(4,4) then (4,5) link of three planes and a cubic surface", 47, {2, 0, 0, 0, 2, 4, 2, 1}},
      {FamilyId::G, 10, 3, 0, 2, "elliptic", 2,
       table({{0, 4, 3}, {0, 5, 3}, {1, 6, 9}, {2, 7, 5}, {3, 8, 1}}),
       "(4,4) link of a quartic Del Pezzo and a quadric surface", 51, {2, 0, 1, 0, 0, 1, 0, 3}},
      {FamilyId::H, 10, 4, 1, 6, "general type", 0,
       table({{0, 4, 3}, {0, 5, 3}, {0, 6, 1}, {1, 5, 1}, {1, 6, 6}, {1, 7, 3}, {2, 7, 2}, {2, 8, 3}, {3, 9, 1}}),
       "(4,4) link of a cubic surface and three planes through a line", 53, {3, 0, 0, 0, 1, 2, 1, 3}},
  };
  return rows;
}

const FamilyDescriptor& family(FamilyId f) { return family_table()[static_cast<std::size_t>(f)]; }

Classification classify_d10(std::int64_t pi) {
  Classification c{pi, {}, {}};
  switch (pi) {
    case 6: c.summary = "abelian or bielliptic"; break;
    case 8: c.summary = "Enriques with four (-1)-lines, or rational"; break;
    case 9:
      c.summary = "rational, blown-up K3, elliptic with p_g=1 q=0 and three (-1)-lines, "
                  "or minimal general type with p_g=2 q=0 K^2=3 and one (-2)-curve";
      break;
    case 10:
      c.summary = "elliptic with p_g=2 q=0 and two (-1)-lines, "
                  "or minimal general type with p_g=3 q=0 K^2=4 and three (-2)-curves";
      break;
    case 11: c.summary = "linked to an elliptic quintic scroll or to a Bordiga surface"; break;
    case 12: c.summary = "linked to a degenerate quadric surface"; break;
    case 16: c.summary = "complete intersection (2,5)"; break;
    default: throw std::out_of_range("classify_d10: no smooth degree-10 surface with pi=" + std::to_string(pi));
  }
  for (const auto& row : family_table())
    if (row.pi == pi) c.families.push_back(row);
  return c;
}

}  // namespace surfcas
