#include "surfcas/cohomology.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "surfcas/linalg.hpp"

namespace surfcas {

namespace {

constexpr int kExtScan = 64;

int surface_dimension(const Ideal& I) { return I.hilbert_polynomial().dimension(); }

// Past the top generator degree a finite-length cokernel stays zero once it vanishes.
bool scan_done(const ExtModule& E, int e, std::size_t d) {
  auto top = E.top_generator_degree();
  if (top) return e > *top && d == 0;
  return e >= E.lowest_degree() + kExtScan;
}

}  // namespace

std::int64_t CohomologyTable::at(int i, int n) const {
  auto it = entries_.find({i, n});
  if (it == entries_.end()) throw std::out_of_range("cohomology table entry outside range");
  return it->second;
}

std::string CohomologyTable::to_string() const {
  std::ostringstream os;
  os << "      ";
  for (int n = lo_; n <= hi_; ++n) os << std::setw(4) << n;
  os << "\n";
  for (int i = 3; i >= 0; --i) {
    os << "h^" << i << "   ";
    for (int n = lo_; n <= hi_; ++n) {
      std::int64_t v = at(i, n);
      os << std::setw(4);
      if (v) os << v;
      else os << '.';
    }
    os << "\n";
  }
  return os.str();
}

SheafCohomology::SheafCohomology(const Ideal& I) : I_(I) {
  if (surface_dimension(I) != 2) throw std::invalid_argument("cohomology: input is not a surface");
  res_ = free_resolution(I);
  for (int i = 0; i <= 4; ++i) ext_.emplace_back(res_, i);
}

const ExtModule& SheafCohomology::ext(int i) const { return ext_.at(i); }

std::array<std::int64_t, 4> SheafCohomology::h(int n) const {
  std::array<std::int64_t, 4> out{};
  out[0] = n < 0 ? 0 : static_cast<std::int64_t>(graded_piece_dim(I_, n, Piece::ideal));
  const int e = -5 - n;
  out[1] = static_cast<std::int64_t>(ext_[4].dim(e));
  out[2] = static_cast<std::int64_t>(ext_[3].dim(e));
  out[3] = static_cast<std::int64_t>(ext_[2].dim(e));
  return out;
}

CohomologyTable SheafCohomology::table(int lo, int hi) const {
  CohomologyTable t(lo, hi);
  for (int n = lo; n <= hi; ++n) {
    auto v = h(n);
    for (int i = 0; i < 4; ++i) t.set(i, n, v[i]);
  }
  return t;
}

std::array<std::int64_t, 4> ideal_sheaf_cohomology(const Ideal& I, int n) { return SheafCohomology(I).h(n); }

CohomologyTable cohomology_table(const Ideal& I, int lo, int hi) { return SheafCohomology(I).table(lo, hi); }

std::size_t RaoModule::length() const {
  std::size_t s = 0;
  for (const auto& [n, v] : hilbert_function) s += v;
  return s;
}

std::vector<std::size_t> RaoModule::values() const {
  std::vector<std::size_t> v;
  if (is_zero()) return v;
  for (int n = lowest(); n <= highest(); ++n) {
    auto it = hilbert_function.find(n);
    v.push_back(it == hilbert_function.end() ? 0 : it->second);
  }
  return v;
}

RaoModule rao_module(const SheafCohomology& C) {
  const ExtModule& E = C.ext(4);
  RaoModule M;
  if (E.trivially_zero()) return M;
  const int lo = E.lowest_degree();
  PrimeField F(C.ideal().prime());
  for (int e = lo;; ++e) {
    std::size_t d = E.dim(e);
    if (scan_done(E, e, d)) break;
    if (!d) continue;
    M.hilbert_function[-5 - e] = d;
    // Generators of the dual module are the socle of Ext in this degree.
    std::size_t next = E.dim(e + 1);
    if (next == 0) {
      M.generators += d;
      continue;
    }
    Matrix stacked(d, next * kNumVars);
    for (int v = 0; v < kNumVars; ++v) {
      Matrix m = E.multiplication(e, v);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < next; ++c) stacked.at(r, v * next + c) = m.at(c, r);
    }
    M.generators += d - rank(F, stacked);
  }
  return M;
}

RaoModule rao_module(const Ideal& I) { return rao_module(SheafCohomology(I)); }

Ideal rao_support(const SheafCohomology& C) {
  const ExtModule& E = C.ext(4);
  const std::uint32_t p = C.ideal().prime();
  RaoModule M = rao_module(C);
  if (M.is_zero()) throw std::invalid_argument("rao_support: zero Rao module");
  const int top = M.highest();
  const int e = -5 - top;  // lowest nonzero degree of Ext^4
  std::size_t d = E.dim(e), next = E.dim(e + 1);
  if (next == 0) return Ideal::unit(p);
  // l = sum c_v x_v kills Ext_e -> Ext_{e+1}: sum_v c_v m_v = 0 entrywise.
  PrimeField F(p);
  Matrix A(d * next, kNumVars);
  for (int v = 0; v < kNumVars; ++v) {
    Matrix m = E.multiplication(e, v);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < next; ++c) A.at(r * next + c, v) = m.at(c, r);
  }
  std::vector<Polynomial> forms;
  for (const Vec& k : kernel(F, A)) {
    std::vector<Term> t;
    for (int v = 0; v < kNumVars; ++v)
      if (k[v]) t.push_back({Monomial::variable(v), k[v]});
    forms.push_back(Polynomial::from_terms(p, t));
  }
  if (forms.empty()) return Ideal::unit(p);
  return Ideal(p, forms);
}

Ideal rao_support(const Ideal& I) { return rao_support(SheafCohomology(I)); }

Speciality speciality_and_minimality(const SheafCohomology& C) {
  const ExtModule& E = C.ext(2);
  int low = E.lowest_degree();
  int hit = low;
  while (E.dim(hit) == 0) {
    if (++hit > low + kExtScan) throw std::runtime_error("speciality: canonical module not found");
  }
  Speciality s;
  s.e = -5 - hit;
  auto h0 = [&](int n) { return n < 0 ? 0 : graded_piece_dim(C.ideal(), n, Piece::ideal); };
  s.minimal = h0(s.e + 4) == 0;
  s.unique = s.minimal && h0(s.e + 5) == 0;
  s.acm = C.ext(4).trivially_zero() || rao_module(C).is_zero();
  return s;
}

Speciality speciality_and_minimality(const Ideal& I) { return speciality_and_minimality(SheafCohomology(I)); }

}  // namespace surfcas
