#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "surfcas/report.hpp"

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<surfcas::Polynomial> {
  static String convert(const surfcas::Polynomial& f) { return surfcas::format_polynomial(f).c_str(); }
};
template <>
struct StringMaker<std::vector<surfcas::Polynomial>> {
  static String convert(const std::vector<surfcas::Polynomial>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + surfcas::format_polynomial(v[i]);
    return (s + "]").c_str();
  }
};
}  // namespace doctest
#endif

namespace testing_support {

using namespace surfcas;

inline constexpr std::uint32_t P = PrimeField::kDefaultPrime;

inline Polynomial x(int i) { return Polynomial::variable(P, i); }
inline Polynomial poly(const std::string& s) { return parse_polynomial(s, P); }

inline Ideal ideal(std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(poly(s));
  return Ideal(P, g);
}

/// Constructions at seed 1, built once per process.
inline const Construction& family_construction(FamilyId f) {
  static std::map<FamilyId, Construction> cache;
  auto it = cache.find(f);
  if (it == cache.end()) {
    ConstructOptions o;
    o.seed = 1;
    it = cache.emplace(f, construct_family(f, o)).first;
  }
  return it->second;
}

inline const Ideal& family_ideal(FamilyId f) { return family_construction(f).ideal; }

inline const SheafCohomology& family_cohomology(FamilyId f) {
  static std::map<FamilyId, SheafCohomology> cache;
  auto it = cache.find(f);
  if (it == cache.end()) it = cache.emplace(f, SheafCohomology(family_ideal(f))).first;
  return it->second;
}

inline const CertificationReport& family_report(FamilyId f) {
  static std::map<FamilyId, CertificationReport> cache;
  auto it = cache.find(f);
  if (it == cache.end()) it = cache.emplace(f, certify(family_ideal(f), f)).first;
  return it->second;
}

/// Family A's residual configuration, as constructed for the surface.
inline const Ideal& residual_A() {
  static const Ideal Z = family_construction(FamilyId::A).stages.front().ideal;
  return Z;
}

// Oracles below use only plain integer arithmetic, not the library's linear algebra.

inline std::int64_t modp(std::int64_t a) { return ((a % P) + P) % P; }

inline std::int64_t inv_modp(std::int64_t a) {
  std::int64_t r = 1, b = modp(a), e = P - 2;
  while (e) {
    if (e & 1) r = r * b % P;
    b = b * b % P;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_modp(std::vector<std::vector<std::int64_t>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::int64_t iv = inv_modp(rows[r][c]);
    for (auto& v : rows[r]) v = v * iv % P;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      std::int64_t f = rows[k][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] = modp(rows[k][j] - f * rows[r][j]);
    }
    ++r;
  }
  return r;
}

/// All exponent vectors of degree d, in no particular order.
inline std::vector<std::array<int, 5>> exponent_vectors(int d) {
  std::vector<std::array<int, 5>> out;
  if (d < 0) return out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c)
        for (int e = 0; a + b + c + e <= d; ++e) out.push_back({a, b, c, e, d - a - b - c - e});
  return out;
}

/// dim of the degree-n part of the ideal generated by gens: rank of all products monomial * generator.
inline std::size_t span_dim_oracle(const std::vector<Polynomial>& gens, int n) {
  auto basis = exponent_vectors(n);
  std::map<std::array<int, 5>, std::size_t> col;
  for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = *g.degree();
    for (const auto& m : exponent_vectors(n - dg)) {
      std::vector<std::int64_t> row(basis.size(), 0);
      for (const auto& t : g.terms()) {
        auto e = t.mono.exponents();
        for (int k = 0; k < 5; ++k) e[k] += m[k];
        row[col[e]] = modp(row[col[e]] + t.coeff);
      }
      rows.push_back(std::move(row));
    }
  }
  return rank_modp(std::move(rows));
}

/// Reduction by repeated division, no tail or pair bookkeeping.
inline Polynomial naive_reduce(Polynomial f, const std::vector<Polynomial>& G) {
  PrimeField K(P);
  Polynomial r(P);
  while (!f.is_zero()) {
    Term t = f.leading();
    bool divided = false;
    for (const auto& g : G) {
      if (g.is_zero() || !g.leading_monomial().divides(t.mono)) continue;
      f -= g.shifted(t.mono / g.leading_monomial(), K.mul(t.coeff, K.inv(g.leading_coeff())));
      divided = true;
      break;
    }
    if (!divided) {
      Polynomial lt = Polynomial::term(P, t.mono, t.coeff);
      r += lt;
      f -= lt;
    }
  }
  return r;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  PrimeField K(P);
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.shifted(l / f.leading_monomial(), K.inv(f.leading_coeff())) -
         g.shifted(l / g.leading_monomial(), K.inv(g.leading_coeff()));
}

inline std::vector<Polynomial> by_leading_term(std::vector<Polynomial> G) {
  std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return G;
}

/// Buchberger closure without criteria, then interreduction to the monic reduced basis.
inline std::vector<Polynomial> naive_groebner(std::vector<Polynomial> G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Polynomial r = naive_reduce(s_polynomial(G[i], G[j]), G);
      if (!r.is_zero()) G.push_back(r.monic());
    }
  std::vector<Polynomial> min;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].leading_monomial().divides(G[i].leading_monomial()) &&
          (G[j].leading_monomial() != G[i].leading_monomial() || j < i))
        redundant = true;
    }
    if (!redundant) min.push_back(G[i].monic());
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    Polynomial tail = min[i] - Polynomial::term(P, min[i].leading_monomial(), 1);
    out.push_back(Polynomial::term(P, min[i].leading_monomial(), 1) + naive_reduce(tail, others));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return out;
}

/// (n+4 choose 4) - P(n) from the surface's Hilbert polynomial.
inline std::int64_t euler_rhs(const HilbertPolynomial& Pol, int n) {
  std::int64_t b = 1;
  for (int k = 1; k <= 4; ++k) b = b * (n + k) / k;
  return b - Pol(n);
}

}  // namespace testing_support
