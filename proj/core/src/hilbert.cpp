#include "surfcas/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace surfcas {

namespace {

using Poly = std::vector<std::int64_t>;

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void add_shifted(Poly& a, const Poly& b, int shift, std::int64_t sign) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](Monomial a, Monomial b) { return a.degree() < b.degree() || (a.degree() == b.degree() && a < b); });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> out;
  for (Monomial m : g) {
    bool redundant = false;
    for (Monomial k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Poly numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (Monomial m : gens)
    if (m.degree() == 0) return {};
  // Base case: pairwise coprime generators.
  int counts[kNumVars] = {};
  for (Monomial m : gens)
    for (int v = 0; v < kNumVars; ++v)
      if (m.exponent(v)) ++counts[v];
  int best = 0;
  for (int v = 1; v < kNumVars; ++v)
    if (counts[v] > counts[best]) best = v;
  if (counts[best] <= 1) {
    Poly r{1};
    for (Monomial m : gens) {
      Poly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] -= 1;
      r = mul(r, f);
    }
    return r;
  }
  std::vector<int> exps;
  for (Monomial m : gens)
    if (m.exponent(best)) exps.push_back(m.exponent(best));
  std::sort(exps.begin(), exps.end());
  int e = exps[(exps.size() - 1) / 2];
  Monomial p = Monomial::variable(best, e);
  // N(I) = N(I + p) + t^e N(I : p)
  std::vector<Monomial> sum{p}, colon;
  for (Monomial m : gens) {
    if (!p.divides(m)) sum.push_back(m);
    colon.push_back(m / m.gcd(p));
  }
  Poly r = numerator(std::move(sum));
  add_shifted(r, numerator(std::move(colon)), e, 1);
  return r;
}

std::int64_t binom_value(std::int64_t x, int k) {
  // C(x, k) as a polynomial in x; zero handling is by the polynomial, not truncation.
  __int128 num = 1;
  for (int i = 0; i < k; ++i) num *= (x - i);
  __int128 den = 1;
  for (int i = 2; i <= k; ++i) den *= i;
  return static_cast<std::int64_t>(num / den);
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<std::int64_t> numerator) : num_(std::move(numerator)) { trim(); }

void HilbertSeries::trim() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
}

std::int64_t HilbertSeries::value(int n) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < num_.size() && static_cast<int>(k) <= n; ++k)
    s += num_[k] * static_cast<std::int64_t>(num_monomials(n - static_cast<int>(k)));
  return s;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  Poly r = a.num_;
  add_shifted(r, b.num_, 0, 1);
  return HilbertSeries(r);
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  Poly r = a.num_;
  add_shifted(r, b.num_, 0, -1);
  return HilbertSeries(r);
}

HilbertSeries HilbertSeries::shifted(int k) const {
  if (k < 0) {
    for (int i = 0; i < -k && i < static_cast<int>(num_.size()); ++i)
      if (num_[i] != 0) throw std::invalid_argument("negative shift of series with low-order terms");
    if (static_cast<int>(num_.size()) <= -k) return HilbertSeries(Poly{});
    return HilbertSeries(Poly(num_.begin() - k, num_.end()));
  }
  Poly r(k, 0);
  r.insert(r.end(), num_.begin(), num_.end());
  return HilbertSeries(r);
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (!num_[k]) continue;
    std::int64_t c = num_[k];
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    c = c < 0 ? -c : c;
    if (c != 1 || k == 0) os << c;
    if (k) os << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> gens) { return HilbertSeries(numerator(std::move(gens))); }

HilbertPolynomial::HilbertPolynomial(const HilbertSeries& hs) {
  Poly q = hs.numerator();
  if (q.empty()) {
    dim_ = -1;
    deg_ = 0;
    return;
  }
  int r = 0;
  // Divide by (1 - t) while t = 1 is a root.
  while (r < 5 && !q.empty() && std::accumulate(q.begin(), q.end(), std::int64_t{0}) == 0) {
    Poly d(q.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      carry += q[k];
      d[k] = carry;
    }
    q = d;
    ++r;
  }
  dim_ = 4 - r;
  q_ = q;
  deg_ = dim_ < 0 ? 0 : std::accumulate(q.begin(), q.end(), std::int64_t{0});
}

std::int64_t HilbertPolynomial::operator()(std::int64_t n) const {
  if (dim_ < 0) return 0;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < q_.size(); ++k) s += q_[k] * binom_value(n - static_cast<std::int64_t>(k) + dim_, dim_);
  return s;
}

std::vector<std::pair<std::int64_t, std::int64_t>> HilbertPolynomial::coefficients() const {
  // Interpolate through P(0..D) with exact rationals over the common denominator D!.
  int D = std::max(dim_, 0);
  std::int64_t fact = 1;
  for (int i = 2; i <= D; ++i) fact *= i;
  std::vector<std::int64_t> vals(D + 1);
  for (int i = 0; i <= D; ++i) vals[i] = (*this)(i);
  // Newton forward differences, then expand falling factorials.
  std::vector<std::int64_t> diff = vals;
  std::vector<std::int64_t> delta(D + 1);
  for (int k = 0; k <= D; ++k) {
    delta[k] = diff[0];
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  std::vector<std::int64_t> acc(D + 1, 0);  // scaled by fact
  for (int k = 0; k <= D; ++k) {
    std::vector<std::int64_t> ff{1};
    for (int i = 0; i < k; ++i) {
      std::vector<std::int64_t> nf(ff.size() + 1, 0);
      for (std::size_t j = 0; j < ff.size(); ++j) {
        nf[j + 1] += ff[j];
        nf[j] -= ff[j] * i;
      }
      ff = nf;
    }
    std::int64_t kf = 1;
    for (int i = 2; i <= k; ++i) kf *= i;
    for (std::size_t j = 0; j < ff.size(); ++j) acc[j] += delta[k] * ff[j] * (fact / kf);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (int j = 0; j <= D; ++j) {
    std::int64_t g = std::gcd(acc[j], fact);
    if (g == 0) g = 1;
    out.push_back({acc[j] / g, fact / g});
  }
  if (dim_ < 0) return {{0, 1}};
  return out;
}

std::string HilbertPolynomial::to_string() const {
  auto c = coefficients();
  std::ostringstream os;
  bool first = true;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    auto [n, d] = c[j];
    if (n == 0) continue;
    os << (n < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    std::int64_t a = n < 0 ? -n : n;
    bool show = a != 1 || d != 1 || j == 0;
    if (show) os << a << (d != 1 ? "/" + std::to_string(d) : "");
    if (j) os << "t" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::optional<SurfaceInvariants> surface_invariants(const HilbertPolynomial& P) {
  if (P.dimension() != 2) return std::nullopt;
  std::int64_t d = P.degree();
  std::int64_t chi = P(0);
  std::int64_t pi = d + 1 - (P(1) - P(0));
  return SurfaceInvariants{d, pi, chi};
}

}  // namespace surfcas
