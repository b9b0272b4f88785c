#include "surfcas/groebner.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <stdexcept>

namespace surfcas {

namespace {

/// Dense reduction of a homogeneous vector by monic basis elements.
class DenseReducer {
 public:
  explicit DenseReducer(const PrimeField& F) : F_(F) {}

  void add(const Polynomial* g) {
    elems_.push_back(g);
    lts_.push_back(g->leading_monomial());
  }
  void set_active(std::size_t i, bool on) { active_.resize(elems_.size(), 1), active_[i] = on; }

  const Polynomial* find(Monomial m) const {
    for (std::size_t i = 0; i < lts_.size(); ++i)
      if ((active_.size() <= i || active_[i]) && lts_[i].degree() <= m.degree() && lts_[i].divides(m)) return elems_[i];
    return nullptr;
  }

  void reduce(Vec& v, int d, std::size_t start = 0) const {
    const DegreeBasis& B = DegreeBasis::of(d);
    for (std::size_t i = start; i < v.size(); ++i) {
      if (!v[i]) continue;
      const Polynomial* g = find(B[i]);
      if (!g) continue;
      Monomial q = B[i] / g->leading_monomial();
      Coeff c = F_.neg(v[i]);
      for (const Term& t : g->terms()) {
        std::size_t k = DegreeBasis::index(t.mono * q);
        v[k] = F_.fma(v[k], c, t.coeff);
      }
    }
  }

 private:
  PrimeField F_;
  std::vector<const Polynomial*> elems_;
  std::vector<Monomial> lts_;
  std::vector<char> active_;
};

void add_dense(const PrimeField& F, Vec& v, const Polynomial& g, Monomial q, Coeff c) {
  for (const Term& t : g.terms()) {
    std::size_t k = DegreeBasis::index(t.mono * q);
    v[k] = F.fma(v[k], c, t.coeff);
  }
}

struct Pair {
  int i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const PrimeField& F) : F_(F) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens, std::optional<int> max_degree) {
    struct Input {
      Polynomial f;
      int deg;
    };
    std::vector<Input> inputs;
    for (const Polynomial& g : gens) {
      if (g.is_zero()) continue;
      Homogeneity h = g.homogeneity();
      if (!h.homogeneous) throw std::invalid_argument("buchberger requires homogeneous generators");
      if (*h.degree == 0) return {Polynomial::constant(F_.prime(), 1)};
      inputs.push_back({g, *h.degree});
    }
    std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) { return a.deg < b.deg; });
    G_.reserve(inputs.size() * 4);
    std::size_t next = 0;
    while (true) {
      int d = INT_MAX;
      if (next < inputs.size()) d = inputs[next].deg;
      for (const Pair& p : B_) d = std::min(d, p.lcm.degree());
      if (d == INT_MAX || (max_degree && d > *max_degree)) break;
      std::vector<Pair> now;
      std::vector<Pair> later;
      for (const Pair& p : B_) (p.lcm.degree() == d ? now : later).push_back(p);
      B_ = std::move(later);
      std::sort(now.begin(), now.end(), [](const Pair& a, const Pair& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
      const std::size_t N = num_monomials(d);
      while (next < inputs.size() && inputs[next].deg == d) {
        Vec v = inputs[next].f.to_dense(d);
        ++next;
        consider(std::move(v), d);
      }
      for (const Pair& p : now) {
        // Pairs dropped meanwhile by later updates are still valid work; process all.
        Vec v(N, 0);
        const Polynomial& gi = G_[p.i];
        const Polynomial& gj = G_[p.j];
        add_dense(F_, v, gi, p.lcm / gi.leading_monomial(), 1);
        add_dense(F_, v, gj, p.lcm / gj.leading_monomial(), F_.neg(1));
        consider(std::move(v), d);
      }
    }
    return finish();
  }

 private:
  void consider(Vec v, int d) {
    reducer().reduce(v, d);
    bool nz = false;
    for (Coeff c : v)
      if (c) {
        nz = true;
        break;
      }
    if (!nz) return;
    insert(Polynomial::from_dense(F_.prime(), d, v).monic());
  }

  DenseReducer reducer() const {
    DenseReducer r(F_);
    for (std::size_t i = 0; i < G_.size(); ++i)
      if (alive_[i]) r.add(&G_[i]);
    return r;
  }

  void insert(Polynomial h) {
    const int hi = static_cast<int>(G_.size());
    const Monomial lh = h.leading_monomial();
    std::vector<int> C;
    for (int g = 0; g < hi; ++g)
      if (alive_[g]) C.push_back(g);
    auto lcm_h = [&](int g) { return lh.lcm(G_[g].leading_monomial()); };
    std::vector<int> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const int g1 = C[k];
      const Monomial L1 = lcm_h(g1);
      bool keep = lh.coprime(G_[g1].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t k2 = k + 1; k2 < C.size() && keep; ++k2)
          if (lcm_h(C[k2]).divides(L1)) keep = false;
        for (std::size_t k2 = 0; k2 < D.size() && keep; ++k2)
          if (lcm_h(D[k2]).divides(L1)) keep = false;
      }
      if (keep) D.push_back(g1);
    }
    std::erase_if(B_, [&](const Pair& p) {
      return lh.divides(p.lcm) && lcm_h(p.i) != p.lcm && lcm_h(p.j) != p.lcm;
    });
    for (int g : D)
      if (!lh.coprime(G_[g].leading_monomial())) B_.push_back({g, hi, lcm_h(g)});
    for (int g = 0; g < hi; ++g)
      if (alive_[g] && lh.divides(G_[g].leading_monomial())) alive_[g] = 0;
    G_.push_back(std::move(h));
    alive_.push_back(1);
  }

  std::vector<Polynomial> finish() {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G_.size(); ++i) {
      if (!alive_[i]) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < G_.size() && !redundant; ++j)
        if (j != i && alive_[j] && G_[j].leading_monomial().divides(G_[i].leading_monomial()) &&
            (G_[j].leading_monomial() != G_[i].leading_monomial() || j < i))
          redundant = true;
      if (!redundant) minimal.push_back(G_[i]);
    }
    DenseReducer r(F_);
    for (const auto& g : minimal) r.add(&g);
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (const auto& g : minimal) {
      int d = g.leading_monomial().degree();
      Vec v = g.to_dense(d);
      r.reduce(v, d, DegreeBasis::index(g.leading_monomial()) + 1);
      out.push_back(Polynomial::from_dense(F_.prime(), d, v));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.leading_monomial() < b.leading_monomial();
    });
    return out;
  }

  PrimeField F_;
  std::vector<Polynomial> G_;
  std::vector<char> alive_;
  std::vector<Pair> B_;
};

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, std::uint32_t prime, std::optional<int> max_degree) {
  return Buchberger(PrimeField(prime)).run(gens, max_degree);
}

std::vector<Polynomial> buchberger_up_to(std::span<const Polynomial> gens, std::uint32_t prime, int d) {
  return buchberger(gens, prime, d);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> gb) {
  if (f.is_zero()) return f;
  PrimeField F = f.field();
  DenseReducer r(F);
  for (const auto& g : gb) {
    if (g.leading_monomial().degree() == 0) return Polynomial(f.prime());
    r.add(&g);
  }
  std::vector<int> degs;
  for (const Term& t : f.terms()) degs.push_back(t.mono.degree());
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  Polynomial out(f.prime());
  for (int d : degs) {
    Vec v = f.to_dense(d);
    r.reduce(v, d);
    out += Polynomial::from_dense(f.prime(), d, v);
  }
  return out;
}

struct Ideal::State {
  std::uint32_t prime;
  std::vector<Polynomial> gens;
  std::once_flag gb_once;
  std::vector<Polynomial> gb;
  std::once_flag hs_once;
  HilbertSeries hs;
  std::once_flag reg_once;
  int reg = 0;
};

Ideal::Ideal() : Ideal(PrimeField::kDefaultPrime, {}) {}

Ideal::Ideal(std::uint32_t prime, std::vector<Polynomial> generators) : s_(std::make_shared<State>()) {
  PrimeField F(prime);
  s_->prime = prime;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.prime() != prime) throw std::invalid_argument("generator over a different prime");
    if (!g.homogeneity().homogeneous) throw std::invalid_argument("ideal generators must be homogeneous");
    s_->gens.push_back(std::move(g));
  }
}

Ideal Ideal::zero(std::uint32_t prime) { return Ideal(prime, {}); }
Ideal Ideal::unit(std::uint32_t prime) { return Ideal(prime, {Polynomial::constant(prime, 1)}); }

Ideal Ideal::from_gb(std::uint32_t prime, std::vector<Polynomial> gb) {
  Ideal I(prime, gb);
  std::call_once(I.s_->gb_once, [&] { I.s_->gb = std::move(gb); });
  return I;
}

std::uint32_t Ideal::prime() const { return s_->prime; }
const std::vector<Polynomial>& Ideal::generators() const { return s_->gens; }

const std::vector<Polynomial>& Ideal::gb() const {
  std::call_once(s_->gb_once, [this] { s_->gb = buchberger(s_->gens, s_->prime); });
  return s_->gb;
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : gb()) out.push_back(g.leading_monomial());
  return out;
}

const HilbertSeries& Ideal::hilbert_series() const {
  std::call_once(s_->hs_once, [this] { s_->hs = hilbert_series_of_monomials(leading_monomials()); });
  return s_->hs;
}

bool Ideal::is_unit() const { return !gb().empty() && gb().front().leading_monomial().degree() == 0; }

int Ideal::regularity() const {
  std::call_once(s_->reg_once, [this] {
    if (is_zero() || is_unit()) return;
    PrimeField F(s_->prime);
    Rng rng(0x4e6);
    std::vector<Polynomial> images;
    Matrix A(kNumVars, kNumVars);
    do {
      for (int i = 0; i < kNumVars; ++i)
        for (int j = 0; j < kNumVars; ++j) A.at(i, j) = rng.uniform(F);
    } while (rank(F, A) < kNumVars);
    for (int i = 0; i < kNumVars; ++i) {
      std::vector<Term> t;
      for (int j = 0; j < kNumVars; ++j) t.push_back({Monomial::variable(j), A.at(i, j)});
      images.push_back(Polynomial::from_terms(s_->prime, t));
    }
    std::vector<Polynomial> moved;
    for (const auto& g : gb()) moved.push_back(g.substitute(images));
    int r = 0;
    for (const auto& g : buchberger(moved, s_->prime)) r = std::max(r, g.leading_monomial().degree());
    s_->reg = r;
  });
  return s_->reg;
}

int Ideal::max_gb_degree() const {
  int d = 0;
  for (const auto& g : gb()) d = std::max(d, g.leading_monomial().degree());
  return d;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) { return normal_form(f, I.gb()); }
bool ideal_contains(const Ideal& I, const Polynomial& f) { return normal_form(f, I).is_zero(); }
bool ideal_contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.generators())
    if (!ideal_contains(I, g)) return false;
  return true;
}

std::uint64_t graded_piece_dim(const Ideal& I, int n, Piece which) {
  if (n < 0) return 0;
  std::int64_t q = I.hilbert_series().value(n);
  return which == Piece::quotient ? static_cast<std::uint64_t>(q) : num_monomials(n) - static_cast<std::uint64_t>(q);
}

std::vector<Polynomial> ideal_basis_in_degree(const Ideal& I, int d) {
  std::vector<Polynomial> out;
  if (d < 0) return out;
  const auto& gb = I.gb();
  for (Monomial u : DegreeBasis::of(d).monomials())
    for (const auto& g : gb)
      if (g.leading_monomial().divides(u)) {
        out.push_back(g.shifted(u / g.leading_monomial()));
        break;
      }
  return out;
}

std::vector<Monomial> standard_monomials(const Ideal& I, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  auto lts = I.leading_monomials();
  for (Monomial u : DegreeBasis::of(d).monomials()) {
    bool in = false;
    for (Monomial l : lts)
      if (l.divides(u)) {
        in = true;
        break;
      }
    if (!in) out.push_back(u);
  }
  return out;
}

QuotientPiece::QuotientPiece(const Ideal& I, int d) : F_(I.prime()), d_(d) {
  const DegreeBasis& B = DegreeBasis::of(d);
  const auto& gb = I.gb();
  const std::size_t N = B.size();
  std_pos_.assign(N, -1);
  row_of_.assign(N, -1);
  std::vector<const Polynomial*> reducer(N, nullptr);
  for (std::size_t k = 0; k < N; ++k) {
    for (const auto& g : gb)
      if (g.leading_monomial().divides(B[k])) {
        reducer[k] = &g;
        break;
      }
    if (!reducer[k]) {
      std_pos_[k] = static_cast<std::int64_t>(standard_.size());
      standard_.push_back(B[k]);
    }
  }
  const std::size_t s = standard_.size();
  for (std::size_t kk = N; kk-- > 0;) {
    if (!reducer[kk]) continue;
    const Polynomial& g = *reducer[kk];
    Monomial q = B[kk] / g.leading_monomial();
    Vec v(s, 0);
    for (std::size_t t = 1; t < g.terms().size(); ++t) {
      const Term& term = g.terms()[t];
      accumulate(v, DegreeBasis::index(term.mono * q), F_.neg(term.coeff));
    }
    row_of_[kk] = static_cast<std::int64_t>(nf_.size());
    nf_.push_back(std::move(v));
  }
}

void QuotientPiece::accumulate(Vec& acc, std::size_t k, Coeff c) const {
  if (std_pos_[k] >= 0) {
    Coeff& a = acc[static_cast<std::size_t>(std_pos_[k])];
    a = F_.add(a, c);
  } else {
    axpy(F_, acc, c, nf_[static_cast<std::size_t>(row_of_[k])]);
  }
}

Vec QuotientPiece::monomial_coords(std::size_t k) const {
  Vec v(dim(), 0);
  accumulate(v, k, 1);
  return v;
}

Vec QuotientPiece::coords(const Polynomial& f) const {
  Vec v(dim(), 0);
  for (const Term& t : f.terms()) {
    if (t.mono.degree() != d_) throw std::invalid_argument("coords: wrong degree");
    accumulate(v, DegreeBasis::index(t.mono), t.coeff);
  }
  return v;
}

Polynomial QuotientPiece::lift(const Vec& c) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) terms.push_back({standard_[i], c[i]});
  return Polynomial::from_sorted(F_.prime(), std::move(terms));
}

}  // namespace surfcas
