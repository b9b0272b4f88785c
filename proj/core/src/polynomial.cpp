#include "surfcas/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace surfcas {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

std::uint32_t common_prime(const Polynomial& a, const Polynomial& b) {
  if (a.prime() == 0) return b.prime();
  if (b.prime() == 0 || a.prime() == b.prime()) return a.prime();
  throw std::invalid_argument("polynomials over different primes");
}

Polynomial Polynomial::constant(std::uint32_t prime, std::int64_t c) {
  return term(prime, Monomial(), PrimeField(prime).from_int(c));
}

Polynomial Polynomial::term(std::uint32_t prime, Monomial m, Coeff c) {
  Polynomial p(prime);
  c %= prime;
  if (c) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(std::uint32_t prime, int i) { return term(prime, Monomial::variable(i), 1); }

Polynomial Polynomial::from_terms(std::uint32_t prime, std::vector<Term> terms) {
  PrimeField F(prime);
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p(prime);
  for (const Term& t : terms) {
    Coeff c = t.coeff % prime;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c) {
      p.terms_.push_back({t.mono, c});
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted(std::uint32_t prime, std::vector<Term> terms) {
  Polynomial p(prime);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_dense(std::uint32_t prime, int d, std::span<const Coeff> v) {
  const DegreeBasis& B = DegreeBasis::of(d);
  Polynomial p(prime);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) p.terms_.push_back({B[i], v[i]});
  return p;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Homogeneity Polynomial::homogeneity() const {
  if (terms_.empty()) return {true, std::nullopt};
  int d = terms_.front().mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return {false, std::nullopt};
  return {true, d};
}

Homogeneity is_homogeneous(const Polynomial& f) { return f.homogeneity(); }

Coeff Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_greater);
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

std::vector<Coeff> Polynomial::to_dense(int d) const {
  std::vector<Coeff> v(num_monomials(d), 0);
  for (const Term& t : terms_)
    if (t.mono.degree() == d) v[DegreeBasis::index(t.mono)] = t.coeff;
  return v;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial p(prime_);
  if (terms_.empty()) return p;
  PrimeField F = field();
  c %= prime_;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono, F.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::shifted(Monomial m, Coeff c) const {
  Polynomial p(prime_);
  if (terms_.empty() || c % prime_ == 0) return p;
  PrimeField F = field();
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial p(prime_);
  if (terms_.empty()) return p;
  PrimeField F = field();
  std::vector<Term> out;
  for (const Term& t : terms_) {
    int e = t.mono.exponent(var);
    if (e == 0) continue;
    Coeff c = F.mul(t.coeff, F.from_int(e));
    if (c) out.push_back({t.mono / Monomial::variable(var), c});
  }
  return from_terms(prime_, std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != kNumVars) throw std::invalid_argument("substitute needs five images");
  std::uint32_t p = prime_;
  for (const auto& im : images) p = p ? p : im.prime();
  std::unordered_map<std::uint64_t, Polynomial> memo;
  memo.emplace(Monomial().raw(), Polynomial::constant(p, 1));
  auto image = [&](auto&& self, Monomial m) -> const Polynomial& {
    auto it = memo.find(m.raw());
    if (it != memo.end()) return it->second;
    int v = 0;
    while (m.exponent(v) == 0) ++v;
    Polynomial r = self(self, m / Monomial::variable(v)) * images[v];
    return memo.emplace(m.raw(), std::move(r)).first->second;
  };
  Polynomial acc(p);
  for (const Term& t : terms_) acc += image(image, t.mono).scaled(t.coeff);
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(prime_);
  PrimeField F(prime_ ? prime_ : PrimeField::kDefaultPrime);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono, F.neg(t.coeff)});
  return p;
}

Polynomial Polynomial::combine(const Polynomial& o, bool subtract) const {
  std::uint32_t prime = common_prime(*this, o);
  Polynomial r(prime);
  if (prime == 0) return r;
  PrimeField F(prime);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->mono > b->mono)) {
      r.terms_.push_back(*a++);
    } else if (a == ae || b->mono > a->mono) {
      r.terms_.push_back({b->mono, subtract ? F.neg(b->coeff) : b->coeff});
      ++b;
    } else {
      Coeff c = subtract ? F.sub(a->coeff, b->coeff) : F.add(a->coeff, b->coeff);
      if (c) r.terms_.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = combine(o, false); }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = combine(o, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::uint32_t prime = common_prime(a, b);
  Polynomial r(prime);
  if (a.is_zero() || b.is_zero()) return r;
  PrimeField F(prime);
  if (a.size() == 1) return b.shifted(a.leading_monomial(), a.leading_coeff());
  if (b.size() == 1) return a.shifted(b.leading_monomial(), b.leading_coeff());
  Homogeneity ha = a.homogeneity(), hb = b.homogeneity();
  if (ha.homogeneous && hb.homogeneous && *ha.degree + *hb.degree <= 200) {
    int d = *ha.degree + *hb.degree;
    std::vector<Coeff> acc(num_monomials(d), 0);
    for (const Term& s : a.terms())
      for (const Term& t : b.terms()) {
        std::size_t i = DegreeBasis::index(s.mono * t.mono);
        acc[i] = F.fma(acc[i], s.coeff, t.coeff);
      }
    return Polynomial::from_dense(prime, d, acc);
  }
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const Term& s : a.terms())
    for (const Term& t : b.terms()) out.push_back({s.mono * t.mono, F.mul(s.coeff, t.coeff)});
  return Polynomial::from_terms(prime, std::move(out));
}

Polynomial poly_product(const Polynomial& f, const Polynomial& g) { return f * g; }

std::string Polynomial::to_string() const { return format_polynomial(*this); }

Polynomial random_form(std::uint32_t prime, int d, Rng& rng) {
  static constexpr int all[] = {0, 1, 2, 3, 4};
  return random_form_in(prime, d, all, rng);
}

Polynomial random_form_in(std::uint32_t prime, int d, std::span<const int> vars, Rng& rng) {
  PrimeField F(prime);
  std::vector<Term> terms;
  for (Monomial m : DegreeBasis::of(d).monomials()) {
    bool ok = true;
    for (int v = 0; v < kNumVars; ++v)
      if (m.exponent(v) && std::find(vars.begin(), vars.end(), v) == vars.end()) ok = false;
    if (!ok) continue;
    Coeff c = rng.uniform(F);
    if (c) terms.push_back({m, c});
  }
  return Polynomial::from_sorted(prime, std::move(terms));
}

}  // namespace surfcas
