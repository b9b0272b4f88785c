#include "surfcas/monomial.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace surfcas {

namespace {

constexpr int kBinomRows = 300;

struct BinomTable {
  std::uint64_t c[kBinomRows][kNumVars + 1] = {};
  BinomTable() {
    for (int n = 0; n < kBinomRows; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= kNumVars; ++k) c[n][k] = n == 0 ? 0 : c[n - 1][k - 1] + c[n - 1][k];
    }
  }
};

const BinomTable& binoms() {
  static const BinomTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n < kBinomRows && k <= kNumVars) return binoms().c[n][k];
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::size_t num_monomials(int d) { return d < 0 ? 0 : binomial(d + 4, 4); }

Monomial Monomial::from_exponents(const std::array<int, kNumVars>& e) {
  std::uint64_t bits = 0;
  int deg = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] < 0 || e[i] > kMaxExponent) throw std::out_of_range("monomial exponent out of range");
    bits |= static_cast<std::uint64_t>(e[i]) << (8 * i);
    deg += e[i];
  }
  if (deg > 255) throw std::out_of_range("monomial degree out of range");
  return Monomial(bits | (static_cast<std::uint64_t>(deg) << 40));
}

Monomial Monomial::variable(int i, int power) {
  std::array<int, kNumVars> e{};
  e.at(static_cast<std::size_t>(i)) = power;
  return from_exponents(e);
}

std::array<int, kNumVars> Monomial::exponents() const {
  std::array<int, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = exponent(i);
  return e;
}

bool Monomial::coprime(Monomial b) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exponent(i) && b.exponent(i)) return false;
  return true;
}

Monomial Monomial::lcm(Monomial b) const {
  std::array<int, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = std::max(exponent(i), b.exponent(i));
  return from_exponents(e);
}

Monomial Monomial::gcd(Monomial b) const {
  std::array<int, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = std::min(exponent(i), b.exponent(i));
  return from_exponents(e);
}

int compare_monomials(Monomial a, Monomial b) {
  auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

DegreeBasis::DegreeBasis(int d) : d_(d) {
  monos_.reserve(num_monomials(d));
  std::array<int, kNumVars> e{};
  for (int e4 = 0; e4 <= d; ++e4)
    for (int e3 = 0; e3 <= d - e4; ++e3)
      for (int e2 = 0; e2 <= d - e4 - e3; ++e2)
        for (int e1 = 0; e1 <= d - e4 - e3 - e2; ++e1) {
          e = {d - e4 - e3 - e2 - e1, e1, e2, e3, e4};
          monos_.push_back(Monomial::from_exponents(e));
        }
}

std::size_t DegreeBasis::index(Monomial m) {
  const auto& B = binoms().c;
  int r = m.degree();
  std::size_t idx = 0;
  for (int v = 4; v >= 1; --v) {
    int e = m.exponent(v);
    idx += B[r + v][v] - B[r - e + v][v];
    r -= e;
  }
  return idx;
}

const DegreeBasis& DegreeBasis::of(int d) {
  if (d < 0 || d > 200) throw std::out_of_range("degree basis out of range");
  static std::mutex mu;
  static std::deque<std::unique_ptr<DegreeBasis>> cache;
  static std::atomic<DegreeBasis*> fast[201];
  if (DegreeBasis* p = fast[d].load(std::memory_order_acquire)) return *p;
  std::lock_guard<std::mutex> lock(mu);
  if (DegreeBasis* p = fast[d].load(std::memory_order_relaxed)) return *p;
  cache.push_back(std::unique_ptr<DegreeBasis>(new DegreeBasis(d)));
  fast[d].store(cache.back().get(), std::memory_order_release);
  return *cache.back();
}

}  // namespace surfcas
