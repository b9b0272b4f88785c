#include "surfcas/monad.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "surfcas/idealops.hpp"
#include "surfcas/linalg.hpp"

namespace surfcas {

namespace {

unsigned mask_of(const std::vector<int>& s) {
  unsigned m = 0;
  for (int v : s) m |= 1u << v;
  return m;
}

std::map<unsigned, std::size_t> subset_index(int k) {
  std::map<unsigned, std::size_t> idx;
  auto all = subsets(5, k);
  for (std::size_t i = 0; i < all.size(); ++i) idx[mask_of(all[i])] = i;
  return idx;
}

/// iota_{e*_s}(e_T): sign (-1)^position, or 0 when s is not in T.
int contract_one(unsigned& T, int s) {
  if (!(T & (1u << s))) return 0;
  int pos = __builtin_popcount(T & ((1u << s) - 1));
  T &= ~(1u << s);
  return (pos % 2) ? -1 : 1;
}

Polynomial poly_det(std::vector<std::vector<Polynomial>> M, std::uint32_t p) {
  const std::size_t n = M.size();
  if (n == 1) return M[0][0];
  Polynomial acc(p);
  for (std::size_t c = 0; c < n; ++c) {
    if (M[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      sub.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) sub.back().push_back(M[r][k]);
    }
    Polynomial t = M[0][c] * poly_det(std::move(sub), p);
    if (c % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  for (const auto& s : subsets(n, k)) f(s);
}

/// Maximal-size minors of a polynomial matrix, all of them.
std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& M, std::size_t k, std::uint32_t p) {
  std::vector<Polynomial> out;
  const int rows = static_cast<int>(M.size()), cols = rows ? static_cast<int>(M[0].size()) : 0;
  if (static_cast<int>(k) > rows || static_cast<int>(k) > cols) return out;
  for_each_combination(rows, static_cast<int>(k), [&](const std::vector<int>& rs) {
    for_each_combination(cols, static_cast<int>(k), [&](const std::vector<int>& cs) {
      std::vector<std::vector<Polynomial>> sub;
      for (int r : rs) {
        sub.emplace_back();
        for (int c : cs) sub.back().push_back(M[r][c]);
      }
      Polynomial d = poly_det(std::move(sub), p);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

Polynomial linear_form(std::uint32_t p, const std::vector<Coeff>& c) {
  std::vector<Term> t;
  for (int v = 0; v < kNumVars; ++v)
    if (c[v]) t.push_back({Monomial::variable(v), c[v]});
  return Polynomial::from_terms(p, t);
}

std::vector<Coeff> random_vector(const PrimeField& F, Rng& rng, int n = kNumVars) {
  std::vector<Coeff> v(n);
  for (auto& c : v) c = rng.uniform(F);
  return v;
}

ModuleElement scale_element(const ModuleElement& e, const Polynomial& f) {
  ModuleElement out;
  for (const auto& c : e) out.push_back(c.is_zero() ? c : f * c);
  return out;
}

}  // namespace

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Vec> SheafModule::section_basis(int d) const {
  PrimeField F(prime);
  if (ambient.dim(d) == 0) return {};
  return kernel(F, kappa.in_degree(d));
}

SheafModule structure_sheaf(std::uint32_t prime, int twist) {
  SheafModule m;
  m.tag = twist == 0 ? "O" : "O(" + std::to_string(twist) + ")";
  m.rank = 1;
  m.prime = prime;
  m.ambient = GradedFreeModule({-twist});
  m.kappa = ModuleMap::zero(prime, m.ambient, GradedFreeModule());
  m.presented = true;
  m.generators = {{Polynomial::constant(prime, 1)}};
  m.generator_degrees = {-twist};
  return m;
}

SheafModule omega_module(std::uint32_t prime, int i) {
  if (i < 0 || i > 4) throw std::invalid_argument("omega_module: index outside 0..4");
  if (i == 0) {
    SheafModule m = structure_sheaf(prime, 0);
    m.tag = "Omega^0(0)";
    return m;
  }
  auto src = subsets(5, i), tgt = subsets(5, i - 1);
  auto tidx = subset_index(i - 1), sidx = subset_index(i);
  SheafModule m;
  m.tag = "Omega^" + std::to_string(i) + "(" + std::to_string(i) + ")";
  m.rank = static_cast<int>(binomial(4, i));
  m.prime = prime;
  m.ambient = GradedFreeModule(std::vector<int>(src.size(), 0));
  std::vector<std::vector<Polynomial>> e(tgt.size(), std::vector<Polynomial>(src.size(), Polynomial(prime)));
  for (std::size_t c = 0; c < src.size(); ++c)
    for (int k = 0; k < i; ++k) {
      unsigned rest = mask_of(src[c]) & ~(1u << src[c][k]);
      Polynomial x = Polynomial::variable(prime, src[c][k]);
      e[tidx[rest]][c] = (k % 2) ? -x : x;
    }
  m.kappa = ModuleMap(prime, m.ambient, GradedFreeModule(std::vector<int>(tgt.size(), -1)), std::move(e));
  m.presented = true;
  // delta(e_T) for |T| = i + 1
  auto gens = subsets(5, i + 1);
  std::map<unsigned, std::size_t> gidx;
  for (const auto& T : gens) {
    ModuleElement g(src.size(), Polynomial(prime));
    for (int k = 0; k <= i; ++k) {
      unsigned rest = mask_of(T) & ~(1u << T[k]);
      Polynomial x = Polynomial::variable(prime, T[k]);
      g[sidx[rest]] = (k % 2) ? -x : x;
    }
    gidx[mask_of(T)] = m.generators.size();
    m.generators.push_back(std::move(g));
    m.generator_degrees.push_back(1);
  }
  for (const auto& U : subsets(5, i + 2)) {
    std::vector<Polynomial> rel(gens.size(), Polynomial(prime));
    for (int k = 0; k <= i + 1; ++k) {
      unsigned rest = mask_of(U) & ~(1u << U[k]);
      Polynomial x = Polynomial::variable(prime, U[k]);
      rel[gidx[rest]] = (k % 2) ? -x : x;
    }
    m.relations.push_back(std::move(rel));
    m.relation_degrees.push_back(2);
  }
  return m;
}

SheafModule direct_sum(const std::vector<SheafModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
  SheafModule m;
  m.prime = parts[0].prime;
  m.presented = true;
  std::vector<int> at, bt;
  for (const auto& s : parts) {
    m.tag += (m.tag.empty() ? "" : " + ") + s.tag;
    m.rank += s.rank;
    m.presented = m.presented && s.presented;
    at.insert(at.end(), s.ambient.twists().begin(), s.ambient.twists().end());
    bt.insert(bt.end(), s.kappa.target().twists().begin(), s.kappa.target().twists().end());
  }
  m.ambient = GradedFreeModule(at);
  GradedFreeModule B(bt);
  std::vector<std::vector<Polynomial>> e(bt.size(), std::vector<Polynomial>(at.size(), Polynomial(m.prime)));
  std::size_t r0 = 0, c0 = 0, g0 = 0, total_gens = 0;
  for (const auto& s : parts) total_gens += s.generators.size();
  for (const auto& s : parts) {
    for (std::size_t r = 0; r < s.kappa.rows(); ++r)
      for (std::size_t c = 0; c < s.kappa.cols(); ++c) e[r0 + r][c0 + c] = s.kappa.entry(r, c);
    if (m.presented) {
      for (std::size_t g = 0; g < s.generators.size(); ++g) {
        ModuleElement el(at.size(), Polynomial(m.prime));
        for (std::size_t c = 0; c < s.generators[g].size(); ++c) el[c0 + c] = s.generators[g][c];
        m.generators.push_back(std::move(el));
        m.generator_degrees.push_back(s.generator_degrees[g]);
      }
      for (std::size_t q = 0; q < s.relations.size(); ++q) {
        std::vector<Polynomial> rel(total_gens, Polynomial(m.prime));
        for (std::size_t g = 0; g < s.relations[q].size(); ++g) rel[g0 + g] = s.relations[q][g];
        m.relations.push_back(std::move(rel));
        m.relation_degrees.push_back(s.relation_degrees[q]);
      }
    }
    r0 += s.kappa.rows();
    c0 += s.kappa.cols();
    g0 += s.generators.size();
  }
  if (!m.presented) {
    m.generators.clear();
    m.generator_degrees.clear();
    m.relations.clear();
    m.relation_degrees.clear();
  }
  m.kappa = ModuleMap(m.prime, m.ambient, B, std::move(e));
  return m;
}

SheafModule repeat(const SheafModule& m, int copies) {
  SheafModule s = direct_sum(std::vector<SheafModule>(copies, m));
  s.tag = std::to_string(copies) + " " + m.tag;
  return s;
}

SheafModule kernel_bundle(const ModuleMap& psi, std::string tag) {
  SheafModule m;
  m.tag = std::move(tag);
  m.prime = psi.prime();
  m.rank = static_cast<int>(psi.cols()) - static_cast<int>(psi.rows());
  m.ambient = psi.source();
  m.kappa = psi;
  return m;
}

ModuleElement contract(std::uint32_t prime, int i, int m, const std::vector<Coeff>& omega, const ModuleElement& e) {
  PrimeField F(prime);
  auto src = subsets(5, i), forms = subsets(5, m);
  auto tidx = subset_index(i - m);
  ModuleElement out(binomial(5, i - m), Polynomial(prime));
  for (std::size_t c = 0; c < src.size(); ++c) {
    if (e[c].is_zero()) continue;
    for (std::size_t f = 0; f < forms.size(); ++f) {
      if (!omega[f]) continue;
      unsigned T = mask_of(src[c]);
      int sign = 1;
      for (int s : forms[f]) {
        sign *= contract_one(T, s);
        if (!sign) break;
      }
      if (!sign) continue;
      Coeff k = sign > 0 ? omega[f] : F.neg(omega[f]);
      out[tidx[T]] += e[c].scaled(k);
    }
  }
  return out;
}

SheafMap contraction_hom(std::uint32_t prime, int i, int j, const std::vector<Coeff>& omega) {
  if (i < j || j < 0 || i > 4) throw std::invalid_argument("contraction_hom: need 0 <= j <= i <= 4");
  if (omega.size() != binomial(5, i - j)) throw std::invalid_argument("contraction_hom: form has wrong size");
  SheafMap phi{omega_module(prime, i), omega_module(prime, j), {}};
  for (const auto& g : phi.source.generators) phi.images.push_back(contract(prime, i, i - j, omega, g));
  return phi;
}

std::vector<Coeff> wedge(std::uint32_t prime, int ka, const std::vector<Coeff>& a, int kb, const std::vector<Coeff>& b) {
  PrimeField F(prime);
  auto A = subsets(5, ka), B = subsets(5, kb);
  auto idx = subset_index(ka + kb);
  std::vector<Coeff> out(binomial(5, ka + kb), 0);
  for (std::size_t x = 0; x < A.size(); ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < B.size(); ++y) {
      if (!b[y]) continue;
      unsigned ma = mask_of(A[x]), mb = mask_of(B[y]);
      if (ma & mb) continue;
      int inv = 0;
      for (int s : A[x])
        for (int t : B[y])
          if (s > t) ++inv;
      Coeff c = F.mul(a[x], b[y]);
      Coeff& o = out[idx[ma | mb]];
      o = (inv % 2) ? F.sub(o, c) : F.add(o, c);
    }
  }
  return out;
}

SheafMap HomSpace::random_element(Rng& rng) const {
  PrimeField F(source.prime);
  SheafMap phi{source, target, {}};
  for (std::size_t g = 0; g < source.generators.size(); ++g) phi.images.emplace_back(target.ambient.rank(), Polynomial(source.prime));
  for (const auto& b : basis) {
    Coeff c = rng.uniform(F);
    if (!c) continue;
    for (std::size_t g = 0; g < b.size(); ++g)
      for (std::size_t k = 0; k < b[g].size(); ++k) phi.images[g][k] += b[g][k].scaled(c);
  }
  return phi;
}

HomSpace hom_space(const SheafModule& F, const SheafModule& G) {
  if (!F.presented) throw std::invalid_argument("hom_space: source needs a presentation");
  const std::uint32_t p = F.prime;
  PrimeField K(p);
  const std::size_t ng = F.generators.size();
  std::vector<std::vector<Vec>> blocks(ng);
  std::vector<std::size_t> offset(ng + 1, 0);
  std::map<int, std::vector<Vec>> cache;
  for (std::size_t g = 0; g < ng; ++g) {
    int d = F.generator_degrees[g];
    if (!cache.count(d)) cache[d] = G.section_basis(d);
    blocks[g] = cache[d];
    offset[g + 1] = offset[g] + blocks[g].size();
  }
  std::vector<std::size_t> roff(F.relations.size() + 1, 0);
  for (std::size_t q = 0; q < F.relations.size(); ++q) roff[q + 1] = roff[q] + G.ambient.dim(F.relation_degrees[q]);
  Matrix M(roff.back(), offset.back());
  for (std::size_t q = 0; q < F.relations.size(); ++q) {
    int dq = F.relation_degrees[q];
    for (std::size_t g = 0; g < ng; ++g) {
      const Polynomial& r = F.relations[q][g];
      if (r.is_zero()) continue;
      for (std::size_t k = 0; k < blocks[g].size(); ++k) {
        ModuleElement el = vec_to_element(p, G.ambient, blocks[g][k], F.generator_degrees[g]);
        Vec v = element_to_vec(G.ambient, scale_element(el, r), dq);
        for (std::size_t row = 0; row < v.size(); ++row)
          if (v[row]) M.at(roff[q] + row, offset[g] + k) = K.add(M.at(roff[q] + row, offset[g] + k), v[row]);
      }
    }
  }
  HomSpace H{F, G, {}};
  for (const Vec& sol : kernel(K, M)) {
    std::vector<ModuleElement> images;
    for (std::size_t g = 0; g < ng; ++g) {
      Vec acc(G.ambient.dim(F.generator_degrees[g]), 0);
      for (std::size_t k = 0; k < blocks[g].size(); ++k)
        if (sol[offset[g] + k]) axpy(K, acc, sol[offset[g] + k], blocks[g][k]);
      images.push_back(vec_to_element(p, G.ambient, acc, F.generator_degrees[g]));
    }
    H.basis.push_back(std::move(images));
  }
  return H;
}

bool rank_condition(const std::vector<std::vector<Polynomial>>& A, int i, std::uint64_t seed) {
  if (A.empty()) return true;
  const std::size_t s = A.size(), t = A[0].size();
  std::uint32_t p = 0;
  for (const auto& row : A)
    for (const auto& a : row)
      if (!a.is_zero()) p = a.prime();
  if (!p) return false;
  PrimeField F(p);
  // coefficient of x_v in entry (r, c)
  auto coef = [&](std::size_t r, std::size_t c, int v) { return A[r][c].coefficient(Monomial::variable(v)); };
  if (static_cast<std::size_t>(i + 1) > std::min<std::size_t>(kNumVars, t)) return false;
  if (s <= 3) {
    // 5 x t matrix over k[l_0..l_{s-1}] whose (i+1)-minors must have no common zero.
    std::vector<std::vector<Polynomial>> M(kNumVars, std::vector<Polynomial>(t, Polynomial(p)));
    for (int v = 0; v < kNumVars; ++v)
      for (std::size_t c = 0; c < t; ++c) {
        std::vector<Term> terms;
        for (std::size_t r = 0; r < s; ++r)
          if (Coeff k = coef(r, c, v)) terms.push_back({Monomial::variable(static_cast<int>(r)), k});
        M[v][c] = Polynomial::from_terms(p, terms);
      }
    std::vector<Polynomial> gens = minors(M, i + 1, p);
    for (int v = static_cast<int>(s); v < kNumVars; ++v) gens.push_back(Polynomial::variable(p, v));
    Ideal J(p, gens);
    return J.hilbert_polynomial().dimension() < 0;
  }
  Rng rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Coeff> lam = random_vector(F, rng, static_cast<int>(s));
    Matrix M(kNumVars, t);
    for (int v = 0; v < kNumVars; ++v)
      for (std::size_t c = 0; c < t; ++c)
        for (std::size_t r = 0; r < s; ++r) M.at(v, c) = F.fma(M.at(v, c), lam[r], coef(r, c, v));
    if (std::all_of(lam.begin(), lam.end(), [](Coeff c) { return c == 0; })) continue;
    if (rank(F, M) < static_cast<std::size_t>(i + 1)) return false;
  }
  return true;
}

bool is_surjective(const ModuleMap& psi) {
  if (psi.rows() == 0) return true;
  std::vector<std::vector<Polynomial>> M(psi.rows(), std::vector<Polynomial>(psi.cols()));
  for (std::size_t r = 0; r < psi.rows(); ++r)
    for (std::size_t c = 0; c < psi.cols(); ++c) M[r][c] = psi.entry(r, c);
  auto g = minors(M, psi.rows(), psi.prime());
  if (g.empty()) return false;
  return Ideal(psi.prime(), g).hilbert_polynomial().dimension() < 0;
}

SheafModule kernel_bundle_G(const std::vector<Polynomial>& linear, const std::vector<Polynomial>& quadrics) {
  if (linear.empty() || quadrics.empty()) throw std::invalid_argument("kernel_bundle_G: empty data");
  const std::uint32_t p = quadrics[0].prime();
  std::vector<int> tw(quadrics.size(), 0);
  tw.insert(tw.end(), linear.size(), -1);
  std::vector<Polynomial> row(quadrics);
  row.insert(row.end(), linear.begin(), linear.end());
  ModuleMap psi(p, GradedFreeModule(tw), GradedFreeModule({-2}), {row});
  if (!is_surjective(psi)) throw std::invalid_argument("kernel_bundle_G: entries have a common zero");
  return kernel_bundle(psi, "G(" + std::to_string(quadrics.size()) + "O+" + std::to_string(linear.size()) + "O(1)->O(2))");
}

std::vector<Polynomial> veronese_quadrics(std::uint32_t prime, VeroneseSection kind, Rng& rng) {
  PrimeField F(prime);
  // A = M^T diag M with diag of rank 3 or 2.
  Matrix Mx(3, 3);
  do {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) Mx.at(r, c) = rng.uniform(F);
  } while (rank(F, Mx) < 3);
  Coeff diag[3] = {rng.nonzero(F), rng.nonzero(F), kind == VeroneseSection::elliptic ? rng.nonzero(F) : 0};
  Coeff A[3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) A[i][j] = F.fma(A[i][j], F.mul(Mx.at(k, i), Mx.at(k, j)), diag[k]);
  // Quadrics Q = sum_{i<=j} c_ij x_{2+i} x_{2+j} with sum_i A_ii c_ii + sum_{i<j} A_ij c_ij = 0.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) slots.push_back({i, j});
  Matrix L(1, slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) L.at(0, k) = A[slots[k].first][slots[k].second];
  std::vector<Polynomial> q;
  for (const Vec& v : kernel(F, L)) {
    std::vector<Term> t;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (v[k]) t.push_back({Monomial::variable(2 + slots[k].first) * Monomial::variable(2 + slots[k].second), v[k]});
    q.push_back(Polynomial::from_terms(prime, t));
  }
  return q;
}

SheafModule psi_bundle(std::uint32_t prime, VeroneseSection kind, Rng& rng) {
  auto q = veronese_quadrics(prime, kind, rng);
  SheafModule G = kernel_bundle_G({Polynomial::variable(prime, 0), Polynomial::variable(prime, 1)}, q);
  G.tag = kind == VeroneseSection::elliptic ? "G_elliptic" : "G_k3";
  return G;
}

SheafModule remark_bundle_three_planes(std::uint32_t prime, Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Polynomial> q, l;
    for (int k = 0; k < 4; ++k) q.push_back(random_form(prime, 2, rng));
    for (int k = 0; k < 2; ++k) l.push_back(random_form(prime, 1, rng));
    try {
      SheafModule K = kernel_bundle_G(l, q);
      SheafModule G = direct_sum({structure_sheaf(prime, 0), K});
      G.tag = "O + G(4O+2O(1)->O(2))";
      return G;
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("remark_bundle_three_planes: no admissible draw");
}

SheafModule remark_bundle_three_points(std::uint32_t prime, Rng& rng) {
  PrimeField F(prime);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<std::vector<Coeff>> pts;
    for (int j = 0; j < 3; ++j) pts.push_back(random_vector(F, rng));
    Matrix P(3, kNumVars);
    for (int j = 0; j < 3; ++j)
      for (int v = 0; v < kNumVars; ++v) P.at(j, v) = pts[j][v];
    if (rank(F, P) < 3) continue;
    // unknown c[r][col][v] at index (r * 6 + col) * 5 + v
    Matrix E(18, 60);
    for (int j = 0; j < 3; ++j) {
      Coeff lam = rng.uniform(F), mu = rng.nonzero(F);
      for (int col = 0; col < 6; ++col)
        for (int v = 0; v < kNumVars; ++v) {
          E.at(j * 6 + col, (0 * 6 + col) * 5 + v) = F.mul(lam, pts[j][v]);
          E.at(j * 6 + col, (1 * 6 + col) * 5 + v) = F.mul(mu, pts[j][v]);
        }
    }
    auto sols = kernel(F, E);
    Vec c(60, 0);
    for (const Vec& s : sols) axpy(F, c, rng.uniform(F), s);
    std::vector<std::vector<Polynomial>> rows(2);
    for (int r = 0; r < 2; ++r) {
      rows[r].push_back(random_form(prime, 2, rng));
      for (int col = 0; col < 6; ++col)
        rows[r].push_back(linear_form(prime, std::vector<Coeff>(c.begin() + (r * 6 + col) * 5, c.begin() + (r * 6 + col) * 5 + 5)));
    }
    std::vector<int> tw{0, -1, -1, -1, -1, -1, -1};
    ModuleMap psi(prime, GradedFreeModule(tw), GradedFreeModule({-2, -2}), rows);
    if (!is_surjective(psi)) continue;
    return kernel_bundle(psi, "G(O+6O(1)->2O(2))");
  }
  throw std::runtime_error("remark_bundle_three_points: no admissible draw");
}

SheafModule omega_pair_kernel(std::uint32_t prime, const std::vector<Coeff>& v1, const std::vector<Coeff>& v2) {
  PrimeField F(prime);
  Matrix chk(2, kNumVars);
  for (int v = 0; v < kNumVars; ++v) chk.at(0, v) = v1[v], chk.at(1, v) = v2[v];
  if (rank(F, chk) < 2) throw std::invalid_argument("omega_pair_kernel: dependent contractions");
  std::vector<std::vector<Polynomial>> e(3, std::vector<Polynomial>(10, Polynomial(prime)));
  for (int v = 0; v < kNumVars; ++v) {
    e[0][v] = Polynomial::variable(prime, v);
    e[1][5 + v] = Polynomial::variable(prime, v);
    e[2][v] = Polynomial::constant(prime, v1[v]);
    e[2][5 + v] = Polynomial::constant(prime, v2[v]);
  }
  ModuleMap kappa(prime, GradedFreeModule(std::vector<int>(10, 0)), GradedFreeModule({-1, -1, 0}), std::move(e));
  SheafModule m = kernel_bundle(kappa, "ker(2 Omega^1(1) -> O)");
  return m;
}

std::string to_string(MonadRecipe r) {
  switch (r) {
    case MonadRecipe::six_secant_rational: return "2 Omega^3(3) -> ker(2 Omega^1(1) -> O) + 2 O";
    case MonadRecipe::rational: return "2 Omega^3(3) -> 2 Omega^1(1) + O";
    case MonadRecipe::three_planes: return "O(-1) + Omega^3(3) -> O + ker(4 O + 2 O(1) -> O(2))";
    case MonadRecipe::k3_psi: return "O(-1) + Omega^3(3) -> G_k3";
    case MonadRecipe::elliptic_psi: return "O(-1) + Omega^3(3) -> G_elliptic";
    case MonadRecipe::three_points: return "2 O(-1) + 2 O -> ker(O + 6 O(1) -> 2 O(2))";
    case MonadRecipe::elliptic_ten: return "2 O(-1) + Omega^3(3) -> 3 O + Omega^1(1)";
    case MonadRecipe::general_ten: return "3 O(-1) + Omega^2(2) -> ker(2 Omega^1(1) -> O) + 3 O";
  }
  return "?";
}

MonadData monad_sheaves(std::uint32_t prime, MonadRecipe recipe, Rng& rng) {
  PrimeField K(prime);
  auto pair_kernel = [&]() {
    while (true) {
      try {
        return omega_pair_kernel(prime, random_vector(K, rng), random_vector(K, rng));
      } catch (const std::invalid_argument&) {
      }
    }
  };
  const SheafModule O = structure_sheaf(prime, 0), Om1 = structure_sheaf(prime, -1);
  switch (recipe) {
    case MonadRecipe::six_secant_rational:
      return {repeat(omega_module(prime, 3), 2), direct_sum({pair_kernel(), repeat(O, 2)})};
    case MonadRecipe::rational:
      return {repeat(omega_module(prime, 3), 2), direct_sum({repeat(omega_module(prime, 1), 2), O})};
    case MonadRecipe::three_planes:
      return {direct_sum({Om1, omega_module(prime, 3)}), remark_bundle_three_planes(prime, rng)};
    case MonadRecipe::k3_psi:
      return {direct_sum({Om1, omega_module(prime, 3)}), psi_bundle(prime, VeroneseSection::k3, rng)};
    case MonadRecipe::elliptic_psi:
      return {direct_sum({Om1, omega_module(prime, 3)}), psi_bundle(prime, VeroneseSection::elliptic, rng)};
    case MonadRecipe::three_points:
      return {direct_sum({repeat(Om1, 2), repeat(O, 2)}), remark_bundle_three_points(prime, rng)};
    case MonadRecipe::elliptic_ten:
      return {direct_sum({repeat(Om1, 2), omega_module(prime, 3)}), direct_sum({repeat(O, 3), omega_module(prime, 1)})};
    case MonadRecipe::general_ten:
      return {direct_sum({repeat(Om1, 3), omega_module(prime, 2)}), direct_sum({pair_kernel(), repeat(O, 3)})};
  }
  throw std::invalid_argument("monad_sheaves: unknown recipe");
}

MonadIdeal ideal_from_monad(const SheafMap& phi) {
  const SheafModule& F = phi.source;
  const SheafModule& G = phi.target;
  if (G.rank != F.rank + 1) throw std::invalid_argument("ideal_from_monad: ranks differ by more than one");
  const std::uint32_t p = F.prime;
  PrimeField K(p);
  const GradedFreeModule& A = G.ambient;
  // Unknown h_i of degree 4 + t_i.
  std::vector<std::size_t> coff(A.rank() + 1, 0);
  for (std::size_t i = 0; i < A.rank(); ++i) {
    int d = 4 + A.twist(i);
    coff[i + 1] = coff[i] + (d >= 0 ? num_monomials(d) : 0);
  }
  std::vector<std::size_t> roff(phi.images.size() + 1, 0);
  for (std::size_t g = 0; g < phi.images.size(); ++g) roff[g + 1] = roff[g] + num_monomials(F.generator_degrees[g] + 4);
  Matrix M(roff.back(), coff.back());
  for (std::size_t g = 0; g < phi.images.size(); ++g)
    for (std::size_t i = 0; i < A.rank(); ++i) {
      const Polynomial& y = phi.images[g][i];
      int d = 4 + A.twist(i);
      if (y.is_zero() || d < 0) continue;
      const DegreeBasis& B = DegreeBasis::of(d);
      for (std::size_t k = 0; k < B.size(); ++k)
        for (const Term& t : y.terms()) {
          Coeff& x = M.at(roff[g] + DegreeBasis::index(B[k] * t.mono), coff[i] + k);
          x = K.add(x, t.coeff);
        }
    }
  auto W = kernel(K, M);
  if (W.empty()) throw std::runtime_error("ideal_from_monad: no map from the cokernel to O(4)");
  // A fixed pseudo-random combination keeps the result a function of phi alone.
  Rng rng(0x6d6f6e6164ull ^ (W.size() * 0x9e3779b97f4a7c15ull));
  Vec h(coff.back(), 0);
  for (const Vec& w : W) axpy(K, h, rng.nonzero(K), w);
  std::vector<Polynomial> hpoly;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    int d = 4 + A.twist(i);
    hpoly.push_back(d >= 0 ? Polynomial::from_dense(p, d, std::span<const Coeff>(h.data() + coff[i], coff[i + 1] - coff[i]))
                           : Polynomial(p));
  }
  std::vector<Polynomial> gens;
  bool euler = true;
  for (int d = 0; d <= 2; ++d) {
    EchelonBasis span(K, num_monomials(d + 4));
    for (const Vec& s : G.section_basis(d)) {
      ModuleElement e = vec_to_element(p, A, s, d);
      Polynomial f(p);
      for (std::size_t i = 0; i < A.rank(); ++i)
        if (!e[i].is_zero() && !hpoly[i].is_zero()) f += hpoly[i] * e[i];
      if (f.is_zero()) continue;
      if (span.insert(f.to_dense(d + 4))) gens.push_back(f.monic());
    }
    std::int64_t expect = static_cast<std::int64_t>(G.sections(d)) - static_cast<std::int64_t>(F.sections(d));
    if (static_cast<std::int64_t>(span.rank()) != expect) euler = false;
  }
  if (gens.empty()) throw std::runtime_error("ideal_from_monad: the cokernel map vanishes");
  Ideal I(p, gens);
  if (!is_saturated(I)) I = saturate(I);
  return {I, euler};
}

}  // namespace surfcas
