#include "surfcas/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace surfcas {

namespace {

using json = nlohmann::ordered_json;

json invariants_json(const SurfaceInvariants& v) {
  return json{{"degree", v.degree}, {"sectional_genus", v.sectional_genus}, {"chi", v.chi}};
}

json polys_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(format_polynomial(p));
  return a;
}

}  // namespace

std::string betti_diagram(const BettiTable& b) {
  if (b.entries().empty()) return "(zero)\n";
  int steps = b.steps(), lo = 1 << 20, hi = -(1 << 20);
  for (const auto& [k, v] : b.entries()) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  std::ostringstream os;
  os << std::setw(7) << "";
  for (int s = 0; s < steps; ++s) os << std::setw(4) << s;
  os << "\n" << std::setw(7) << "total:";
  for (int s = 0; s < steps; ++s) os << std::setw(4) << b.total(s);
  os << "\n";
  for (int row = lo; row <= hi; ++row) {
    os << std::setw(6) << row << ":";
    for (int s = 0; s < steps; ++s) {
      int v = b.at(s, row + s);
      os << std::setw(4);
      if (v) os << v;
      else os << '.';
    }
    os << "\n";
  }
  return os.str();
}

std::string report_json(const CertificationReport& r, const Construction* c) {
  json j;
  j["family"] = std::string(1, to_char(r.family));
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  if (c) {
    j["route"] = c->route;
    j["seed_used"] = c->seed_used;
    if (c->monad) {
      j["monad"] = to_string(*c->monad);
      j["hom_dimension"] = c->hom_dimension;
    }
    json att = json::array();
    for (const auto& a : c->attempts) att.push_back(json{{"route", a.route}, {"seed", a.seed}, {"outcome", a.outcome}});
    j["attempts"] = att;
  }
  j["pass"] = r.pass();
  j["invariants"] = r.invariants ? invariants_json(*r.invariants) : json(nullptr);
  if (r.betti) {
    json b = json::array();
    for (const auto& [k, v] : r.betti->entries()) b.push_back(json{{"step", k.first}, {"twist", k.second}, {"rank", v}});
    j["betti"] = b;
  } else {
    j["betti"] = nullptr;
  }
  if (r.cohomology) {
    const auto& t = *r.cohomology;
    json h{{"lo", t.lo()}, {"hi", t.hi()}};
    for (int i = 0; i <= 3; ++i) {
      json row = json::array();
      for (int n = t.lo(); n <= t.hi(); ++n) row.push_back(t.at(i, n));
      h["h" + std::to_string(i)] = row;
    }
    j["cohomology"] = h;
  } else {
    j["cohomology"] = nullptr;
  }
  j["rao"] = json{{"lowest", r.rao_lowest},
                  {"hilbert_function", r.rao},
                  {"generators", r.rao_generators},
                  {"support_forms", r.rao_support_forms}};
  j["six_secant"] = r.six_secant ? json{{"line", polys_json(r.six_secant->forms)}, {"length", r.six_secant->length}}
                                 : json(nullptr);
  j["speciality"] = r.speciality ? json{{"e", r.speciality->e},
                                        {"minimal", r.speciality->minimal},
                                        {"unique", r.speciality->unique},
                                        {"acm", r.speciality->acm}}
                                 : json(nullptr);
  j["smoothness"] = r.smoothness;
  if (r.liaison) {
    const auto& l = *r.liaison;
    j["liaison"] = json{{"m", l.m},
                        {"n", l.n},
                        {"complete_intersection", polys_json(l.complete_intersection)},
                        {"residual", l.residual ? invariants_json(*l.residual) : json(nullptr)},
                        {"relinks", l.relinks}};
  } else {
    j["liaison"] = nullptr;
  }
  json checks = json::array();
  for (const auto& k : r.checks) checks.push_back(json{{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string report_text(const CertificationReport& r, const Construction* c) {
  std::ostringstream os;
  os << "family " << to_char(r.family) << "  p=" << r.prime << "  seed=" << r.seed << "\n";
  if (c) {
    os << "route: " << c->route << " (seed " << c->seed_used << ")\n";
    if (c->monad) os << "monad: " << to_string(*c->monad) << ", dim Hom = " << c->hom_dimension << "\n";
  }
  if (r.invariants)
    os << "(d, pi, chi) = (" << r.invariants->degree << ", " << r.invariants->sectional_genus << ", "
       << r.invariants->chi << ")\n";
  if (r.betti) os << "\nbetti\n" << betti_diagram(*r.betti);
  if (r.cohomology) os << "\nh^i(I(n))\n" << r.cohomology->to_string();
  if (!r.rao.empty()) {
    os << "\nrao module from degree " << r.rao_lowest << ":";
    for (auto v : r.rao) os << " " << v;
    os << ", " << r.rao_generators << " generator(s), tail killed by " << r.rao_support_forms << " linear form(s)\n";
  }
  if (r.six_secant) {
    os << "6-secant candidate:";
    for (const auto& f : r.six_secant->forms) os << " " << format_polynomial(f);
    os << "  length " << r.six_secant->length << "\n";
  }
  if (r.speciality)
    os << "speciality e=" << r.speciality->e << (r.speciality->minimal ? " minimal" : "")
       << (r.speciality->unique ? " unique" : "") << "\n";
  os << "smoothness: " << r.smoothness << "\n\n";
  for (const auto& k : r.checks) {
    os << (k.pass ? "  ok    " : "  FAIL  ") << k.name;
    if (!k.detail.empty()) os << ": " << k.detail;
    os << "\n";
  }
  os << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string timings_json(const std::vector<StageTiming>& t) {
  json j = json::array();
  for (const auto& s : t) j.push_back(json{{"stage", s.stage}, {"seconds", s.seconds}});
  return j.dump(2) + "\n";
}

}  // namespace surfcas
