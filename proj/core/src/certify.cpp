#include "surfcas/certify.hpp"

#include <chrono>
#include <sstream>

namespace surfcas {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& out) : out_(out) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    out_.push_back({stage, std::chrono::duration<double>(now - t_).count()});
    t_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point t_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::string>& v, const char* sep = "; ") {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += sep;
    s += x;
  }
  return s;
}

std::string triple(std::int64_t d, std::int64_t pi, std::int64_t chi) {
  return "(" + std::to_string(d) + "," + std::to_string(pi) + "," + std::to_string(chi) + ")";
}

std::int64_t binom4(std::int64_t n) { return (n + 4) * (n + 3) * (n + 2) * (n + 1) / 24; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::smooth: return "smooth";
    case Verdict::singular: return "singular";
    default: return "inconclusive";
  }
}

CheckResult cohomology_check(const CertificationReport& r, const FamilyDescriptor& fd, const HilbertPolynomial& P) {
  const CohomologyTable& t = *r.cohomology;
  std::vector<std::string> bad;
  auto expect = [&](int i, int n, std::int64_t v) {
    if (n < t.lo() || n > t.hi()) return;
    if (t.at(i, n) != v)
      bad.push_back("h" + std::to_string(i) + "(" + std::to_string(n) + ")=" + std::to_string(t.at(i, n)) +
                    " expected " + std::to_string(v));
  };
  for (int i = 0; i <= 3; ++i)
    for (int n = 0; n <= 4; ++n) {
      std::int64_t v = 0;
      for (std::size_t k = 0; k < kWindowSlots.size(); ++k)
        if (kWindowSlots[k] == std::pair{i, n}) v = fd.window[k];
      expect(i, n, v);
    }
  for (int n = 2; n <= 6; ++n) expect(2, n, 0);
  expect(0, 3, 0);
  expect(1, 3, fd.pi == 9 ? fd.chi + 1 : fd.chi - 2);
  for (int n = t.lo(); n <= t.hi(); ++n) {
    std::int64_t alt = t.at(0, n) - t.at(1, n) + t.at(2, n) - t.at(3, n);
    if (alt != binom4(n) - P(n)) bad.push_back("euler characteristic at " + std::to_string(n));
  }
  return {"cohomology", bad.empty(), bad.empty() ? "window and vanishing anchors hold" : join(bad)};
}

CheckResult rao_check(const CertificationReport& r, const FamilyDescriptor& fd) {
  std::vector<std::size_t> want;
  int want_lo = 0;
  for (int n = 2; n <= 4; ++n) {
    std::int64_t v = 0;
    for (std::size_t k = 0; k < kWindowSlots.size(); ++k)
      if (kWindowSlots[k] == std::pair{1, n}) v = fd.window[k];
    if (want.empty() && v == 0) continue;
    if (want.empty()) want_lo = n;
    want.push_back(static_cast<std::size_t>(v));
  }
  while (!want.empty() && want.back() == 0) want.pop_back();
  std::vector<std::string> bad;
  auto show = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  if (r.rao != want || (!want.empty() && r.rao_lowest != want_lo))
    bad.push_back("hilbert function " + show(r.rao) + " from " + std::to_string(r.rao_lowest) + ", expected " +
                  show(want) + " from " + std::to_string(want_lo));
  if (fd.id == FamilyId::D || fd.id == FamilyId::E) {
    if (r.rao_generators != 1) bad.push_back(std::to_string(r.rao_generators) + " generators, expected 1");
    std::size_t forms = fd.id == FamilyId::D ? 3 : 2;
    if (r.rao_support_forms != forms)
      bad.push_back("tail annihilated by " + std::to_string(r.rao_support_forms) + " linear forms, expected " +
                    std::to_string(forms));
  }
  return {"rao", bad.empty(), bad.empty() ? show(r.rao) + " with " + std::to_string(r.rao_generators) + " generators"
                                          : join(bad)};
}

}  // namespace

bool CertificationReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* CertificationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> betti_diff(const BettiTable& expected, const BettiTable& got) {
  std::map<std::pair<int, int>, std::pair<int, int>> all;
  for (const auto& [k, v] : expected.entries()) all[k].first = v;
  for (const auto& [k, v] : got.entries()) all[k].second = v;
  std::vector<std::string> out;
  for (const auto& [k, v] : all)
    if (v.first != v.second)
      out.push_back("step " + std::to_string(k.first) + ", twist " + std::to_string(k.second) + ": expected " +
                    std::to_string(v.first) + ", got " + std::to_string(v.second));
  return out;
}

SurfaceInvariants expected_residual(std::int64_t pi, std::int64_t chi, int m, int n) {
  const std::int64_t d = 10, dr = static_cast<std::int64_t>(m) * n - d;
  const std::int64_t hk = 2 * pi - 2 - d, k = m + n - 5;
  std::int64_t chi_r = chi_relation(complete_intersection_chi(m, n), chi_twist(k * k * d, k * hk, chi));
  return {dr, liaison_transform(d, pi, m, n, dr), chi_r};
}

CertificationReport certify(const Ideal& I, FamilyId expected, const CertifyOptions& opt) {
  const FamilyDescriptor& fd = family(expected);
  CertificationReport r;
  r.family = expected;
  r.prime = I.prime();
  r.seed = opt.seed;
  Stopwatch clock(r.timings);

  bool sat = is_saturated(I);
  r.checks.push_back({"saturated", sat, sat ? "" : "ideal is not saturated"});
  const Ideal S = sat ? I : saturate(I);
  HilbertPolynomial P = S.hilbert_polynomial();
  r.invariants = surface_invariants(P);
  if (!r.invariants) {
    r.checks.push_back({"invariants", false, "not a surface (dimension " + std::to_string(P.dimension()) + ")"});
    clock.lap("invariants");
    return r;
  }
  {
    const auto& v = *r.invariants;
    bool ok = v.degree == 10 && v.sectional_genus == fd.pi && v.chi == fd.chi;
    r.checks.push_back({"invariants", ok,
                        triple(v.degree, v.sectional_genus, v.chi) + (ok ? "" : " expected " + triple(10, fd.pi, fd.chi))});
  }
  clock.lap("invariants");

  std::optional<SheafCohomology> C;
  try {
    C.emplace(S);
  } catch (const std::exception& e) {
    r.checks.push_back({"betti", false, e.what()});
    return r;
  }
  r.betti = betti(C->resolution());
  {
    auto diff = betti_diff(fd.betti, *r.betti);
    r.checks.push_back({"betti", diff.empty(), join(diff)});
  }
  clock.lap("resolution");

  r.cohomology = C->table(opt.lo, opt.hi);
  r.checks.push_back(cohomology_check(r, fd, P));
  r.speciality = speciality_and_minimality(*C);
  clock.lap("cohomology");

  RaoModule M = rao_module(*C);
  r.rao = M.values();
  r.rao_lowest = M.is_zero() ? 0 : M.lowest();
  r.rao_generators = M.generators;
  if (!M.is_zero()) {
    Ideal sup = rao_support(*C);
    auto forms = ideal_basis_in_degree(sup, 1);
    r.rao_support_forms = sup.is_unit() ? kNumVars : forms.size();
    if (forms.size() == 3) {
      SecantLine L{forms, -1};
      try {
        L.length = zero_scheme_length(saturate(ideal_sum(S, sup)));
      } catch (const std::exception&) {
        L.length = -1;  // the line lies on S
      }
      r.six_secant = L;
    }
  }
  r.checks.push_back(rao_check(r, fd));
  if (fd.N6 <= 1) {
    bool has = r.six_secant && r.six_secant->length == 6;
    bool ok = has == (fd.N6 == 1);
    std::string detail = r.six_secant ? "line meets S in length " + std::to_string(r.six_secant->length)
                                      : "tail annihilator cuts no line";
    r.checks.push_back({"six_secant", ok, detail});
  }
  clock.lap("rao");

  SmoothnessReport sm = smoothness_check(S, opt.smoothness, 8, opt.seed ^ 0x5300);
  r.smoothness = verdict_name(sm.verdict);
  r.checks.push_back({"smoothness", sm.verdict == Verdict::smooth, sm.note});
  clock.lap("smoothness");

  if (opt.liaison) {
    LiaisonSummary ls;
    ls.n = graded_piece_dim(S, 4, Piece::ideal) >= 2 ? 4 : 5;
    CheckResult c{"liaison", false, ""};
    try {
      Rng rng(opt.seed ^ 0x11a150ull);
      LinkResult lr = link(S, ls.m, ls.n, rng);
      ls.complete_intersection = lr.complete_intersection;
      ls.residual = surface_invariants(lr.residual.hilbert_polynomial());
      ls.relinks = link_with(lr.residual, lr.complete_intersection).same_as(S);
      SurfaceInvariants want = expected_residual(fd.pi, fd.chi, ls.m, ls.n);
      std::string tag = "(" + std::to_string(ls.m) + "," + std::to_string(ls.n) + ") residual ";
      if (!ls.residual) {
        c.detail = tag + "is not a surface";
      } else {
        const auto& v = *ls.residual;
        bool inv = v.degree == want.degree && v.sectional_genus == want.sectional_genus && v.chi == want.chi;
        c.pass = inv && ls.relinks;
        c.detail = tag + triple(v.degree, v.sectional_genus, v.chi);
        if (!inv) c.detail += " expected " + triple(want.degree, want.sectional_genus, want.chi);
        if (!ls.relinks) c.detail += "; relinking does not return S";
      }
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    r.liaison = ls;
    r.checks.push_back(c);
    clock.lap("liaison");
  }

  if (expected == FamilyId::B) {
    const Speciality& s = *r.speciality;
    bool ok = s.e == -1 && s.minimal;
    r.checks.push_back({"minimality", ok, "e=" + std::to_string(s.e) + (s.minimal ? ", minimal" : ", not minimal")});
  }
  return r;
}

}  // namespace surfcas
