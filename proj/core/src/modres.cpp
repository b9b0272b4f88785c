#include "surfcas/modres.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "surfcas/idealops.hpp"

namespace surfcas {

std::size_t GradedFreeModule::dim(int n) const {
  std::size_t s = 0;
  for (int t : twists_) s += num_monomials(n - t);
  return s;
}

std::size_t GradedFreeModule::offset(std::size_t i, int n) const {
  std::size_t s = 0;
  for (std::size_t k = 0; k < i; ++k) s += num_monomials(n - twists_[k]);
  return s;
}

GradedFreeModule GradedFreeModule::dual() const {
  std::vector<int> t;
  for (int x : twists_) t.push_back(-x);
  return GradedFreeModule(t);
}

ModuleMap::ModuleMap(std::uint32_t prime, GradedFreeModule source, GradedFreeModule target,
                     std::vector<std::vector<Polynomial>> entries)
    : prime_(prime), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (entries_.size() != target_.rank()) throw std::invalid_argument("module map: row count mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != source_.rank()) throw std::invalid_argument("module map: column count mismatch");
    for (std::size_t j = 0; j < entries_[i].size(); ++j) {
      Polynomial& a = entries_[i][j];
      if (a.is_zero()) {
        a = Polynomial(prime_);
        continue;
      }
      Homogeneity h = a.homogeneity();
      if (!h.homogeneous || *h.degree != source_.twist(j) - target_.twist(i))
        throw std::invalid_argument("module map: entry degree incompatible with twists");
    }
  }
}

ModuleMap ModuleMap::zero(std::uint32_t prime, GradedFreeModule source, GradedFreeModule target) {
  std::vector<std::vector<Polynomial>> e(target.rank(), std::vector<Polynomial>(source.rank(), Polynomial(prime)));
  return ModuleMap(prime, std::move(source), std::move(target), std::move(e));
}

ModuleMap ModuleMap::from_columns(std::uint32_t prime, const GradedFreeModule& target,
                                  const std::vector<ModuleElement>& columns, const std::vector<int>& source_twists) {
  std::vector<std::vector<Polynomial>> e(target.rank(), std::vector<Polynomial>(columns.size(), Polynomial(prime)));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < target.rank(); ++i) e[i][j] = columns[j][i];
  return ModuleMap(prime, GradedFreeModule(source_twists), target, std::move(e));
}

ModuleElement ModuleMap::column(std::size_t j) const {
  ModuleElement c;
  for (std::size_t i = 0; i < rows(); ++i) c.push_back(entries_[i][j]);
  return c;
}

Matrix ModuleMap::in_degree(int n) const {
  PrimeField F(prime_);
  Matrix M(target_.dim(n), source_.dim(n));
  for (std::size_t j = 0; j < cols(); ++j) {
    int dj = n - source_.twist(j);
    if (dj < 0) continue;
    const DegreeBasis& B = DegreeBasis::of(dj);
    std::size_t c0 = source_.offset(j, n);
    for (std::size_t i = 0; i < rows(); ++i) {
      const Polynomial& a = entries_[i][j];
      if (a.is_zero()) continue;
      std::size_t r0 = target_.offset(i, n);
      for (std::size_t k = 0; k < B.size(); ++k)
        for (const Term& t : a.terms()) {
          Coeff& x = M.at(r0 + DegreeBasis::index(t.mono * B[k]), c0 + k);
          x = F.add(x, t.coeff);
        }
    }
  }
  return M;
}

ModuleMap ModuleMap::transpose() const {
  std::vector<std::vector<Polynomial>> e(cols(), std::vector<Polynomial>(rows()));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) e[j][i] = entries_[i][j];
  return ModuleMap(prime_, target_.dual(), source_.dual(), std::move(e));
}

ModuleMap ModuleMap::compose(const ModuleMap& o) const {
  if (!(o.target_ == source_)) throw std::invalid_argument("compose: module mismatch");
  std::vector<std::vector<Polynomial>> e(rows(), std::vector<Polynomial>(o.cols(), Polynomial(prime_)));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < o.cols(); ++j)
      for (std::size_t k = 0; k < cols(); ++k)
        if (!entries_[i][k].is_zero() && !o.entries_[k][j].is_zero()) e[i][j] += entries_[i][k] * o.entries_[k][j];
  return ModuleMap(prime_, o.source_, target_, std::move(e));
}

bool ModuleMap::is_zero() const {
  for (const auto& r : entries_)
    for (const auto& a : r)
      if (!a.is_zero()) return false;
  return true;
}

ModuleMap ModuleMap::drop(const std::vector<std::size_t>& drop_rows, const std::vector<std::size_t>& drop_cols) const {
  std::vector<int> st, tt;
  std::vector<std::size_t> keep_r, keep_c;
  for (std::size_t i = 0; i < rows(); ++i)
    if (std::find(drop_rows.begin(), drop_rows.end(), i) == drop_rows.end()) keep_r.push_back(i), tt.push_back(target_.twist(i));
  for (std::size_t j = 0; j < cols(); ++j)
    if (std::find(drop_cols.begin(), drop_cols.end(), j) == drop_cols.end()) keep_c.push_back(j), st.push_back(source_.twist(j));
  std::vector<std::vector<Polynomial>> e;
  for (auto i : keep_r) {
    e.emplace_back();
    for (auto j : keep_c) e.back().push_back(entries_[i][j]);
  }
  return ModuleMap(prime_, GradedFreeModule(st), GradedFreeModule(tt), std::move(e));
}

Vec element_to_vec(const GradedFreeModule& F, const ModuleElement& e, int n) {
  Vec v(F.dim(n), 0);
  for (std::size_t i = 0; i < F.rank(); ++i) {
    if (e[i].is_zero()) continue;
    int d = n - F.twist(i);
    if (d < 0) throw std::invalid_argument("element degree mismatch");
    std::size_t off = F.offset(i, n);
    for (const Term& t : e[i].terms()) {
      if (t.mono.degree() != d) throw std::invalid_argument("element degree mismatch");
      v[off + DegreeBasis::index(t.mono)] = t.coeff;
    }
  }
  return v;
}

ModuleElement vec_to_element(std::uint32_t prime, const GradedFreeModule& F, const Vec& v, int n) {
  ModuleElement e;
  for (std::size_t i = 0; i < F.rank(); ++i) {
    int d = n - F.twist(i);
    if (d < 0) {
      e.push_back(Polynomial(prime));
      continue;
    }
    std::size_t off = F.offset(i, n), len = num_monomials(d);
    e.push_back(Polynomial::from_dense(prime, d, std::span<const Coeff>(v.data() + off, len)));
  }
  return e;
}

Vec multiply_by_variable(const GradedFreeModule& F, const Vec& v, int n, int var) {
  Vec out(F.dim(n + 1), 0);
  Monomial x = Monomial::variable(var);
  for (std::size_t i = 0; i < F.rank(); ++i) {
    int d = n - F.twist(i);
    if (d < 0) continue;
    const DegreeBasis& B = DegreeBasis::of(d);
    std::size_t a = F.offset(i, n), b = F.offset(i, n + 1);
    for (std::size_t k = 0; k < B.size(); ++k)
      if (v[a + k]) out[b + DegreeBasis::index(B[k] * x)] = v[a + k];
  }
  return out;
}

ModuleMap syzygy_map(const ModuleMap& phi, int max_degree) {
  PrimeField F(phi.prime());
  const GradedFreeModule& S = phi.source();
  std::vector<ModuleElement> cols;
  std::vector<int> twists;
  if (S.rank() == 0) return ModuleMap::from_columns(phi.prime(), S, cols, twists);
  int lo = *std::min_element(S.twists().begin(), S.twists().end());
  std::vector<Vec> prev;
  for (int n = lo; n <= max_degree; ++n) {
    std::vector<Vec> K = kernel(F, phi.in_degree(n));
    EchelonBasis span(F, S.dim(n));
    for (const Vec& w : prev)
      for (int v = 0; v < kNumVars && span.rank() < K.size(); ++v) span.insert(multiply_by_variable(S, w, n - 1, v));
    if (span.rank() < K.size())
      for (const Vec& k : K)
        if (span.insert(k)) {
          cols.push_back(vec_to_element(phi.prime(), S, k, n));
          twists.push_back(n);
        }
    prev = std::move(K);
  }
  return ModuleMap::from_columns(phi.prime(), S, cols, twists);
}

int BettiTable::at(int step, int twist) const {
  auto it = entries_.find({step, twist});
  return it == entries_.end() ? 0 : it->second;
}

std::map<int, int> BettiTable::step(int i) const {
  std::map<int, int> out;
  for (const auto& [k, v] : entries_)
    if (k.first == i) out[k.second] = v;
  return out;
}

int BettiTable::steps() const {
  int s = 0;
  for (const auto& [k, v] : entries_) s = std::max(s, k.first + 1);
  return s;
}

int BettiTable::total(int step) const {
  int s = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == step) s += v;
  return s;
}

std::vector<std::int64_t> BettiTable::hilbert_numerator() const {
  std::vector<std::int64_t> num{1};
  for (const auto& [k, v] : entries_) {
    if (k.second < 0) throw std::invalid_argument("negative twist in ideal resolution");
    if (num.size() <= static_cast<std::size_t>(k.second)) num.resize(k.second + 1, 0);
    num[k.second] += (k.first % 2 == 0 ? -1 : 1) * v;
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < steps(); ++i) {
    os << "step " << i << ":";
    for (const auto& [t, r] : step(i)) os << " " << r << "*R(-" << t << ")";
    os << "\n";
  }
  return os.str();
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
  std::vector<Polynomial> out;
  if (I.is_zero()) return out;
  if (I.is_unit()) return {Polynomial::constant(I.prime(), 1)};
  PrimeField F(I.prime());
  int top = std::min(regularity(I), I.max_gb_degree());
  int lo = I.gb().front().leading_monomial().degree();
  for (const auto& g : I.gb()) lo = std::min(lo, g.leading_monomial().degree());
  std::vector<Vec> prev;
  for (int d = lo; d <= top; ++d) {
    EchelonBasis span(F, num_monomials(d));
    GradedFreeModule R({0});
    for (const Vec& w : prev)
      for (int v = 0; v < kNumVars; ++v) span.insert(multiply_by_variable(R, w, d - 1, v));
    std::vector<Polynomial> candidates;
    for (const auto& g : I.generators())
      if (*g.homogeneity().degree == d) candidates.push_back(g);
    for (auto& b : ideal_basis_in_degree(I, d)) candidates.push_back(std::move(b));
    for (const auto& c : candidates)
      if (span.insert(c.to_dense(d))) out.push_back(c);
    prev.clear();
    for (const auto& b : ideal_basis_in_degree(I, d)) prev.push_back(b.to_dense(d));
  }
  return out;
}

FreeResolution free_resolution(const Ideal& I, int max_length) {
  FreeResolution res;
  if (I.is_zero()) return res;
  auto gens = minimal_generators(I);
  std::vector<int> tw;
  std::vector<std::vector<Polynomial>> row(1);
  for (const auto& g : gens) {
    tw.push_back(*g.homogeneity().degree);
    row[0].push_back(g);
  }
  res.maps.emplace_back(I.prime(), GradedFreeModule(tw), GradedFreeModule({0}), row);
  int reg = regularity(I);
  for (int k = 0; static_cast<int>(res.maps.size()) < max_length; ++k) {
    ModuleMap syz = syzygy_map(res.maps.back(), reg + k + 1);
    if (syz.cols() == 0) break;
    res.maps.push_back(std::move(syz));
  }
  return res;
}

FreeResolution free_resolution(const ModuleMap& presentation, int degree_bound, int max_length) {
  FreeResolution res;
  res.maps.push_back(presentation);
  for (int k = 0; static_cast<int>(res.maps.size()) < max_length; ++k) {
    ModuleMap syz = syzygy_map(res.maps.back(), degree_bound + k + 1);
    if (syz.cols() == 0) break;
    res.maps.push_back(std::move(syz));
  }
  return res;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix entries_of(const ModuleMap& m) {
  PolyMatrix e(m.rows(), std::vector<Polynomial>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e[i][j] = m.entry(i, j);
  return e;
}

}  // namespace

FreeResolution minimalize(const FreeResolution& input) {
  FreeResolution res = input;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < res.maps.size() && !changed; ++k) {
      const ModuleMap& d = res.maps[k];
      for (std::size_t i = 0; i < d.rows() && !changed; ++i)
        for (std::size_t j = 0; j < d.cols() && !changed; ++j) {
          const Polynomial& a = d.entry(i, j);
          if (a.is_zero() || a.leading_monomial().degree() != 0) continue;
          PrimeField F(d.prime());
          Coeff cinv = F.inv(a.leading_coeff());
          PolyMatrix e = entries_of(d);
          for (std::size_t r = 0; r < d.rows(); ++r) {
            if (r == i || e[r][j].is_zero()) continue;
            Polynomial f = e[r][j].scaled(cinv);
            for (std::size_t c = 0; c < d.cols(); ++c)
              if (c != j && !e[i][c].is_zero()) e[r][c] -= f * e[i][c];
          }
          ModuleMap updated(d.prime(), d.source(), d.target(), std::move(e));
          res.maps[k] = updated.drop({i}, {j});
          if (k > 0) res.maps[k - 1] = res.maps[k - 1].drop({}, {i});
          if (k + 1 < res.maps.size()) res.maps[k + 1] = res.maps[k + 1].drop({j}, {});
          changed = true;
        }
    }
    while (!res.maps.empty() && res.maps.back().cols() == 0) res.maps.pop_back();
  }
  return res;
}

BettiTable betti(const FreeResolution& res) {
  std::map<std::pair<int, int>, int> e;
  for (std::size_t k = 0; k < res.maps.size(); ++k)
    for (int t : res.maps[k].source().twists()) ++e[{static_cast<int>(k), t}];
  return BettiTable(std::move(e));
}

bool composes_to_zero(const FreeResolution& res) {
  for (std::size_t k = 0; k + 1 < res.maps.size(); ++k)
    if (!res.maps[k].compose(res.maps[k + 1]).is_zero()) return false;
  return true;
}

bool check_exactness(const FreeResolution& res, int degree_bound) {
  PrimeField F(res.maps.empty() ? PrimeField::kDefaultPrime : res.maps.front().prime());
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    for (int n = 0; n <= degree_bound; ++n) {
      Matrix out = res.maps[k].in_degree(n);
      std::size_t ker = out.cols() - rank(F, out);
      std::size_t im = k + 1 < res.maps.size() ? rank(F, res.maps[k + 1].in_degree(n)) : 0;
      if (ker != im) return false;
    }
  }
  return true;
}

bool last_map_injective(const FreeResolution& res, std::uint64_t seed) {
  if (res.maps.empty()) return true;
  const ModuleMap& m = res.maps.back();
  PrimeField F(m.prime());
  Rng rng(seed);
  Coeff pt[kNumVars];
  for (auto& c : pt) c = rng.uniform(F);
  Matrix A(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Coeff s = 0;
      for (const Term& t : m.entry(i, j).terms()) {
        Coeff v = t.coeff;
        for (int x = 0; x < kNumVars; ++x) v = F.mul(v, F.pow(pt[x], t.mono.exponent(x)));
        s = F.add(s, v);
      }
      A.at(i, j) = s;
    }
  return rank(F, A) == m.cols();
}

struct ExtModule::Cache {
  std::mutex mu;
  std::map<int, Piece> pieces;
};

ExtModule::ExtModule(const FreeResolution& res, int i) : i_(i), cache_(std::make_shared<Cache>()) {
  const int L = static_cast<int>(res.maps.size());
  prime_ = L ? res.maps.front().prime() : PrimeField::kDefaultPrime;
  if (i < 0 || i > L || L == 0) {
    if (L == 0 && i == 0) middle_ = GradedFreeModule({0});
    return;
  }
  const GradedFreeModule Fi = i == 0 ? res.maps[0].target() : res.maps[i - 1].source();
  middle_ = Fi.dual();
  if (i >= 1) in_ = res.maps[i - 1].transpose();
  if (i < L) out_ = res.maps[i].transpose();
}

const ExtModule::Piece& ExtModule::piece(int e) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->pieces.find(e);
  if (it != cache_->pieces.end()) return it->second;
  PrimeField F(prime_);
  Piece p;
  const std::size_t N = middle_.dim(e);
  std::vector<Vec> Z;
  if (out_) {
    Z = kernel(F, out_->in_degree(e));
  } else {
    for (std::size_t k = 0; k < N; ++k) {
      Vec v(N, 0);
      v[k] = 1;
      Z.push_back(std::move(v));
    }
  }
  const std::size_t T = Z.size();
  auto reduce = [&](Vec& v, Vec& tag) {
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
      Coeff c = v[p.pivots[r]];
      if (!c) continue;
      axpy(F, v, F.neg(c), p.rows[r]);
      axpy(F, tag, c, p.tags[r]);
    }
  };
  auto push = [&](Vec v, Vec tag) -> bool {
    std::size_t piv = 0;
    while (piv < N && v[piv] == 0) ++piv;
    if (piv == N) return false;
    Coeff inv = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(x, inv);
    for (auto& x : tag) x = F.mul(x, inv);
    p.rows.push_back(std::move(v));
    p.tags.push_back(std::move(tag));
    p.pivots.push_back(piv);
    return true;
  };
  if (in_) {
    Matrix B = in_->in_degree(e);
    for (std::size_t c = 0; c < B.cols(); ++c) {
      Vec v(N);
      for (std::size_t r = 0; r < N; ++r) v[r] = B.at(r, c);
      Vec tag(T, 0);
      reduce(v, tag);
      push(std::move(v), Vec(T, 0));
    }
  }
  for (const Vec& z : Z) {
    Vec v = z, acc(T, 0);
    reduce(v, acc);
    std::size_t k = p.reps.size();
    Vec tag(T, 0);
    for (std::size_t x = 0; x < T; ++x) tag[x] = F.neg(acc[x]);
    tag[k] = F.add(tag[k], 1);
    // row = z - sum c_r row_r, so its coordinates are e_k - acc
    if (push(std::move(v), std::move(tag))) p.reps.push_back(z);
  }
  return cache_->pieces.emplace(e, std::move(p)).first->second;
}

std::size_t ExtModule::dim(int e) const {
  if (middle_.rank() == 0) return 0;
  return piece(e).reps.size();
}

int ExtModule::lowest_degree() const {
  if (middle_.rank() == 0) return 0;
  return *std::min_element(middle_.twists().begin(), middle_.twists().end());
}

std::optional<int> ExtModule::top_generator_degree() const {
  if (middle_.rank() == 0 || out_) return std::nullopt;
  return *std::max_element(middle_.twists().begin(), middle_.twists().end());
}

Vec ExtModule::coordinates(int e, Vec v) const {
  const Piece& p = piece(e);
  PrimeField F(prime_);
  Vec acc(p.tags.empty() ? 0 : p.tags.front().size(), 0);
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    Coeff c = v[p.pivots[r]];
    if (!c) continue;
    axpy(F, v, F.neg(c), p.rows[r]);
    axpy(F, acc, c, p.tags[r]);
  }
  for (Coeff c : v)
    if (c) throw std::logic_error("ext coordinates: vector is not a cycle");
  acc.resize(p.reps.size());
  return acc;
}

Matrix ExtModule::multiplication(int e, int var) const {
  std::size_t a = dim(e), b = dim(e + 1);
  Matrix M(b, a);
  if (a == 0 || b == 0) return M;
  const Piece& p = piece(e);
  for (std::size_t k = 0; k < a; ++k) {
    Vec w = multiply_by_variable(middle_, p.reps[k], e, var);
    Vec c = coordinates(e + 1, std::move(w));
    for (std::size_t r = 0; r < b; ++r) M.at(r, k) = c[r];
  }
  return M;
}

ExtModule ext_module(const FreeResolution& res, int i) { return ExtModule(res, i); }

}  // namespace surfcas
