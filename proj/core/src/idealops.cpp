#include "surfcas/idealops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "surfcas/linalg.hpp"
#include "surfcas/modres.hpp"

namespace surfcas {

namespace {

Matrix invert(const PrimeField& F, const std::array<std::array<Coeff, 5>, 5>& a) {
  Matrix M(5, 10);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) M.at(i, j) = a[i][j];
    M.at(i, 5 + i) = 1;
  }
  auto piv = row_reduce(F, M);
  if (piv.size() < 5 || piv[4] != 4) throw std::invalid_argument("linear change is not invertible");
  Matrix inv(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) inv.at(i, j) = M.at(i, 5 + j);
  return inv;
}

/// Builds an ideal K with K_k = piece(k) for k <= current degree until HS(K) equals the target.
Ideal ideal_from_pieces(std::uint32_t prime, const std::function<std::vector<Vec>(int)>& piece,
                        const HilbertSeries& target, int start, int check_from, int limit) {
  PrimeField F(prime);
  GradedFreeModule R({0});
  std::vector<Polynomial> gens;
  std::vector<Vec> prev;
  bool fresh = true;
  for (int k = std::max(start, 0); k <= limit; ++k) {
    std::vector<Vec> K = piece(k);
    EchelonBasis span(F, num_monomials(k));
    for (const Vec& w : prev)
      for (int v = 0; v < kNumVars && span.rank() < K.size(); ++v) span.insert(multiply_by_variable(R, w, k - 1, v));
    if (span.rank() < K.size())
      for (const Vec& x : K)
        if (span.insert(x)) {
          gens.push_back(Polynomial::from_dense(prime, k, x).monic());
          fresh = true;
        }
    prev = std::move(K);
    if (k >= check_from && fresh) {
      Ideal cand(prime, gens);
      if (cand.hilbert_series() == target) return cand;
      fresh = false;
    }
  }
  throw std::runtime_error("ideal construction did not reach its Hilbert series certificate");
}

int min_degree(const Ideal& I) {
  int d = 1 << 20;
  for (const auto& g : I.gb()) d = std::min(d, g.leading_monomial().degree());
  return d;
}

}  // namespace

LinearChange LinearChange::identity(std::uint32_t prime) {
  LinearChange c;
  c.prime_ = prime;
  for (int i = 0; i < 5; ++i) c.a_[i][i] = 1;
  return c;
}

LinearChange LinearChange::random(std::uint32_t prime, Rng& rng) {
  PrimeField F(prime);
  LinearChange c;
  c.prime_ = prime;
  while (true) {
    Matrix M(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) M.at(i, j) = c.a_[i][j] = rng.uniform(F);
    if (rank(F, M) == 5) return c;
  }
}

LinearChange LinearChange::moving_last_to(const Polynomial& ell) {
  std::uint32_t prime = ell.prime();
  PrimeField F(prime);
  std::array<Coeff, 5> coef{};
  for (const Term& t : ell.terms()) {
    if (t.mono.degree() != 1) throw std::invalid_argument("moving_last_to needs a linear form");
    for (int v = 0; v < 5; ++v)
      if (t.mono.exponent(v)) coef[v] = t.coeff;
  }
  int k = 4;
  while (k >= 0 && coef[k] == 0) --k;
  if (k < 0) throw std::invalid_argument("moving_last_to: zero form");
  // B has last row = coefficients of ell; x4 under B is ell.
  LinearChange B;
  B.prime_ = prime;
  int row = 0;
  for (int j = 0; j < 5; ++j) {
    if (j == k) continue;
    B.a_[row++][j] = 1;
  }
  B.a_[4] = coef;
  return B.inverse();
}

std::vector<Polynomial> LinearChange::images() const {
  std::vector<Polynomial> im;
  for (int i = 0; i < 5; ++i) {
    std::vector<Term> t;
    for (int j = 0; j < 5; ++j)
      if (a_[i][j]) t.push_back({Monomial::variable(j), a_[i][j]});
    im.push_back(Polynomial::from_terms(prime_, t));
  }
  return im;
}

Polynomial LinearChange::apply(const Polynomial& f) const {
  auto im = images();
  return f.substitute(im);
}

Ideal LinearChange::apply(const Ideal& I) const {
  auto im = images();
  std::vector<Polynomial> g;
  for (const auto& f : I.gb()) g.push_back(f.substitute(im));
  return Ideal(I.prime(), std::move(g));
}

LinearChange LinearChange::inverse() const {
  PrimeField F(prime_);
  Matrix inv = invert(F, a_);
  LinearChange c;
  c.prime_ = prime_;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) c.a_[i][j] = inv.at(i, j);
  return c;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (I.prime() != J.prime()) throw std::invalid_argument("ideal_sum: prime mismatch");
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.prime(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) g.push_back(a * b);
  return Ideal(I.prime(), std::move(g));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.prime());
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  const std::uint32_t p = I.prime();
  PrimeField F(p);
  HilbertSeries target = I.hilbert_series() + J.hilbert_series() - ideal_sum(I, J).hilbert_series();
  int start = std::max(min_degree(I), min_degree(J));
  int check = std::max(I.max_gb_degree(), J.max_gb_degree());
  auto piece = [&](int k) {
    // Elements of I_k whose normal form modulo J vanishes.
    std::vector<Polynomial> basis = ideal_basis_in_degree(I, k);
    if (basis.empty()) return std::vector<Vec>{};
    QuotientPiece Q(J, k);
    Matrix M(basis.size(), Q.dim());
    for (std::size_t r = 0; r < basis.size(); ++r) M.set_row(r, Q.coords(basis[r]));
    std::vector<Vec> out;
    for (const Vec& y : left_kernel(F, M)) {
      Vec f(num_monomials(k), 0);
      for (std::size_t r = 0; r < basis.size(); ++r)
        if (y[r])
          for (const Term& t : basis[r].terms()) {
            Coeff& x = f[DegreeBasis::index(t.mono)];
            x = F.fma(x, y[r], t.coeff);
          }
      out.push_back(std::move(f));
    }
    return out;
  };
  return ideal_from_pieces(p, piece, target, start, check, check + 40);
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& h) {
  const std::uint32_t p = I.prime();
  if (h.is_zero() || normal_form(h, I).is_zero()) return Ideal::unit(p);
  Homogeneity hh = h.homogeneity();
  if (!hh.homogeneous) throw std::invalid_argument("ideal_quotient: inhomogeneous element");
  const int d = *hh.degree;
  PrimeField F(p);
  Ideal Ih = ideal_sum(I, Ideal(p, {h}));
  HilbertSeries target = (I.hilbert_series() - Ih.hilbert_series()).shifted(-d);
  int start = I.is_zero() ? 0 : std::max(0, min_degree(I) - d);
  int check = std::max(0, std::max(I.max_gb_degree(), Ih.max_gb_degree()) - d);
  auto piece = [&](int k) {
    QuotientPiece Q(I, k + d);
    const DegreeBasis& B = DegreeBasis::of(k);
    Matrix M(B.size(), Q.dim());
    for (std::size_t r = 0; r < B.size(); ++r) {
      Vec v(Q.dim(), 0);
      for (const Term& t : h.terms()) Q.accumulate(v, DegreeBasis::index(t.mono * B[r]), t.coeff);
      M.set_row(r, v);
    }
    return left_kernel(F, M);
  };
  return ideal_from_pieces(p, piece, target, start, check, check + 40);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, std::uint64_t seed) {
  const std::uint32_t p = I.prime();
  if (J.is_zero()) return Ideal::unit(p);
  Rng rng(seed);
  int D = 0;
  for (const auto& g : J.generators()) D = std::max(D, *g.homogeneity().degree);
  auto draw = [&]() {
    Polynomial h(p);
    for (const auto& g : J.generators()) h += random_form(p, D - *g.homogeneity().degree, rng) * g;
    return h;
  };
  Ideal K = ideal_quotient(I, draw());
  for (int round = 0; round < 16; ++round) {
    bool ok = true;
    for (const auto& k : K.generators()) {
      for (const auto& g : J.generators())
        if (!ideal_contains(I, k * g)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return K;
    K = ideal_intersection(K, ideal_quotient(I, draw()));
  }
  // Deterministic fallback: intersect colons by every generator.
  K = Ideal::unit(p);
  for (const auto& g : J.generators()) K = ideal_intersection(K, ideal_quotient(I, g));
  return K;
}

namespace {

/// Divides each basis element by the largest power of x4 dividing it.
Ideal colon_last_infinity(const Ideal& J) {
  std::vector<Polynomial> out;
  for (const auto& g : J.gb()) {
    int k = g.leading_monomial().exponent(4);
    for (const Term& t : g.terms()) k = std::min(k, t.mono.exponent(4));
    if (k == 0) {
      out.push_back(g);
      continue;
    }
    std::vector<Term> terms;
    Monomial q = Monomial::variable(4, k);
    for (const Term& t : g.terms()) terms.push_back({t.mono / q, t.coeff});
    out.push_back(Polynomial::from_sorted(J.prime(), std::move(terms)));
  }
  return Ideal(J.prime(), std::move(out));
}

/// I : x_var computed exactly by making x_var the last variable.
Ideal colon_variable(const Ideal& I, int var) {
  const std::uint32_t p = I.prime();
  std::vector<Polynomial> swap(5);
  for (int i = 0; i < 5; ++i) swap[i] = Polynomial::variable(p, i == var ? 4 : (i == 4 ? var : i));
  std::vector<Polynomial> moved;
  for (const auto& g : I.gb()) moved.push_back(g.substitute(swap));
  Ideal J(p, moved);
  std::vector<Polynomial> out;
  for (const auto& g : J.gb()) {
    bool all = true;
    for (const Term& t : g.terms())
      if (t.mono.exponent(4) == 0) all = false;
    if (all) {
      std::vector<Term> terms;
      for (const Term& t : g.terms()) terms.push_back({t.mono / Monomial::variable(4), t.coeff});
      out.push_back(Polynomial::from_sorted(p, std::move(terms)).substitute(swap));
    } else {
      out.push_back(g.substitute(swap));
    }
  }
  return Ideal(p, std::move(out));
}

bool last_variable_regular(const Ideal& J) {
  for (const auto& g : J.gb())
    if (g.leading_monomial().exponent(4) > 0) return false;
  return true;
}

}  // namespace

bool is_saturated(const Ideal& I, std::uint64_t seed) {
  if (I.is_zero()) return true;
  if (I.is_unit()) return true;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  // x4 regular on R/tau(I) proves depth >= 1, hence saturation.
  for (int attempt = 0; attempt < 3; ++attempt) {
    LinearChange tau = LinearChange::random(I.prime(), rng);
    if (last_variable_regular(tau.apply(I))) return true;
  }
  return false;
}

SaturationInfo saturate_by_iteration(const Ideal& I) {
  Ideal cur = I;
  int it = 0;
  while (true) {
    if (cur.is_unit()) return {cur, it, false};
    Ideal next = Ideal::unit(I.prime());
    for (int v = 0; v < kNumVars; ++v) next = ideal_intersection(next, colon_variable(cur, v));
    ++it;
    if (next.same_as(cur)) return {cur, it, false};
    cur = next;
    if (it > 64) throw std::runtime_error("saturation did not stabilize");
  }
}

SaturationInfo saturate_with_info(const Ideal& I, std::uint64_t seed) {
  if (I.is_zero() || I.is_unit()) return {I, 0, true};
  Rng rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    LinearChange sigma = LinearChange::random(I.prime(), rng);
    Ideal moved = colon_last_infinity(sigma.apply(I));
    Ideal back = sigma.inverse().apply(moved);
    Ideal result(I.prime(), back.gb());
    HilbertPolynomial a(result.hilbert_series()), b(I.hilbert_series());
    bool same_poly = a.dimension() == b.dimension();
    for (int n = 0; n <= 6 && same_poly; ++n) same_poly = a(n) == b(n);
    if (same_poly && is_saturated(result, rng.next())) return {result, 0, true};
  }
  return saturate_by_iteration(I);
}

Ideal saturate(const Ideal& I, std::uint64_t seed) { return saturate_with_info(I, seed).ideal; }

Ideal saturate_by(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (int it = 0; it < 64; ++it) {
    Ideal next = ideal_quotient(cur, J);
    if (next.same_as(cur)) return cur;
    cur = next;
  }
  throw std::runtime_error("saturate_by did not stabilize");
}

int regularity(const Ideal& I, std::uint64_t seed) {
  if (seed == 0x4e6) return I.regularity();
  if (I.is_zero() || I.is_unit()) return 0;
  Rng rng(seed);
  return LinearChange::random(I.prime(), rng).apply(I).max_gb_degree();
}

Polynomial random_in_degree(const Ideal& I, int d, Rng& rng) {
  auto basis = ideal_basis_in_degree(I, d);
  if (basis.empty()) throw std::invalid_argument("random_in_degree: empty graded piece");
  PrimeField F(I.prime());
  while (true) {
    Polynomial f(I.prime());
    for (const auto& b : basis) f += b.scaled(rng.uniform(F));
    if (!f.is_zero()) return f;
  }
}

Polynomial random_in_degree(const Ideal& I, int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_in_degree(I, d, rng);
}

DimDegree dimension_and_degree(const Ideal& I) {
  HilbertPolynomial P = I.hilbert_polynomial();
  return {P.dimension(), P.degree()};
}

std::int64_t zero_scheme_length(const Ideal& I) {
  HilbertPolynomial P = I.hilbert_polynomial();
  if (P.dimension() > 0) throw std::invalid_argument("zero_scheme_length: positive-dimensional scheme");
  return P.dimension() < 0 ? 0 : P.degree();
}

std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& gens) {
  std::vector<std::vector<Polynomial>> J;
  for (const auto& g : gens) {
    J.emplace_back();
    for (int v = 0; v < kNumVars; ++v) J.back().push_back(g.derivative(v));
  }
  return J;
}

SmoothnessReport smoothness_check(const Ideal& I, SmoothnessMode mode, int trials, std::uint64_t seed, int max_degree) {
  const std::uint32_t p = I.prime();
  PrimeField F(p);
  DimDegree dd = dimension_and_degree(I);
  if (dd.dimension != 2) throw std::invalid_argument("smoothness_check: scheme is not a surface");
  auto gens = minimal_generators(I);
  auto J = jacobian(gens);
  std::map<int, std::vector<Polynomial>> minors;
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = a + 1; b < J.size(); ++b)
      for (int c = 0; c < kNumVars; ++c)
        for (int e = c + 1; e < kNumVars; ++e) {
          Polynomial m = J[a][c] * J[b][e] - J[a][e] * J[b][c];
          if (!m.is_zero()) minors[*m.homogeneity().degree].push_back(std::move(m));
        }
  SmoothnessReport rep;
  rep.verdict = Verdict::inconclusive;
  for (const auto& [d, v] : minors) rep.minors_used += v.size();
  if (minors.empty()) {
    rep.verdict = Verdict::singular;
    rep.singular_dimension = 2;
    rep.note = "all Jacobian minors vanish";
    return rep;
  }
  // The generators used on each degree: all minors, or random combinations per degree class.
  std::map<int, std::vector<Polynomial>> used;
  Rng rng(seed);
  if (mode == SmoothnessMode::exact) {
    used = minors;
  } else {
    for (const auto& [d, list] : minors)
      for (int t = 0; t < trials; ++t) {
        Polynomial c(p);
        for (const auto& m : list) c += m.scaled(rng.uniform(F));
        if (!c.is_zero()) used[d].push_back(std::move(c));
      }
  }
  const int lo = used.begin()->first;
  for (int D = lo; D <= max_degree; ++D) {
    QuotientPiece Q(I, D);
    if (Q.dim() == 0) {
      rep.verdict = Verdict::smooth;
      rep.certificate_degree = D;
      return rep;
    }
    // (R/I)_D grows with D on a surface; skip degrees that cannot fill.
    std::size_t available = 0;
    for (const auto& [e, list] : used)
      if (e <= D) available += list.size() * num_monomials(D - e);
    if (available < Q.dim()) continue;
    EchelonBasis span(F, Q.dim());
    for (auto it = used.rbegin(); it != used.rend() && span.rank() < Q.dim(); ++it) {
      int e = it->first;
      if (e > D) continue;
      const DegreeBasis& B = DegreeBasis::of(D - e);
      for (const auto& mu : it->second) {
        for (std::size_t k = 0; k < B.size() && span.rank() < Q.dim(); ++k) {
          Vec v(Q.dim(), 0);
          for (const Term& t : mu.terms()) Q.accumulate(v, DegreeBasis::index(t.mono * B[k]), t.coeff);
          span.insert(std::move(v));
        }
        if (span.rank() == Q.dim()) break;
      }
    }
    if (span.rank() == Q.dim()) {
      rep.verdict = Verdict::smooth;
      rep.certificate_degree = D;
      return rep;
    }
  }
  // Truncated basis of I + minors: pure powers of every variable prove emptiness.
  std::vector<Polynomial> all = I.gb();
  for (const auto& [e, list] : used) all.insert(all.end(), list.begin(), list.end());
  auto tgb = buchberger_up_to(all, p, max_degree);
  bool pure[kNumVars] = {};
  for (const auto& g : tgb) {
    Monomial m = g.leading_monomial();
    int nz = 0, which = -1;
    for (int v = 0; v < kNumVars; ++v)
      if (m.exponent(v)) ++nz, which = v;
    if (nz == 1) pure[which] = true;
    if (nz == 0) std::fill(pure, pure + kNumVars, true);
  }
  if (std::all_of(pure, pure + kNumVars, [](bool b) { return b; })) {
    rep.verdict = Verdict::smooth;
    rep.certificate_degree = max_degree;
    return rep;
  }
  if (mode == SmoothnessMode::exact) {
    Ideal K(p, all);
    HilbertPolynomial P = K.hilbert_polynomial();
    if (P.dimension() < 0) {
      rep.verdict = Verdict::smooth;
      rep.certificate_degree = K.max_gb_degree();
    } else {
      rep.verdict = Verdict::singular;
      rep.singular_dimension = P.dimension();
    }
    return rep;
  }
  rep.note = "random minor combinations did not fill any degree up to the bound";
  return rep;
}

}  // namespace surfcas
