#include "surfcas/constructions.hpp"

#include <stdexcept>

#include "surfcas/hilbert.hpp"
#include "surfcas/linalg.hpp"
#include "surfcas/modres.hpp"

namespace surfcas {

namespace {

Polynomial combination(const std::vector<Polynomial>& forms, Rng& rng) {
  PrimeField F(forms.at(0).prime());
  Polynomial f(forms[0].prime());
  for (const auto& g : forms) f += g.scaled(rng.uniform(F));
  return f;
}

std::size_t linear_rank(const std::vector<Polynomial>& forms) {
  if (forms.empty()) return 0;
  PrimeField F(forms[0].prime());
  Matrix M(forms.size(), kNumVars);
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (int v = 0; v < kNumVars; ++v) M.at(r, v) = forms[r].coefficient(Monomial::variable(v));
  return rank(F, M);
}

Ideal intersect_all(const std::vector<Ideal>& parts) {
  Ideal acc = parts.at(0);
  for (std::size_t i = 1; i < parts.size(); ++i) acc = ideal_intersection(acc, parts[i]);
  return acc;
}

std::vector<Polynomial> minors_2x3(const std::vector<Polynomial>& r0, const std::vector<Polynomial>& r1) {
  return {r0[0] * r1[1] - r0[1] * r1[0], r0[0] * r1[2] - r0[2] * r1[0], r0[1] * r1[2] - r0[2] * r1[1]};
}

Polynomial var(std::uint32_t p, int i) { return Polynomial::variable(p, i); }

/// Random basis y0..y4 with y0, y1, y2 spanning the given linear forms.
std::vector<Polynomial> adapted_coordinates(const std::vector<Polynomial>& line_forms, Rng& rng) {
  const std::uint32_t p = line_forms.at(0).prime();
  while (true) {
    std::vector<Polynomial> y;
    for (int k = 0; k < 3; ++k) y.push_back(combination(line_forms, rng));
    for (int k = 0; k < 2; ++k) y.push_back(random_form(p, 1, rng));
    if (linear_rank(y) == 5) return y;
  }
}

struct ScrollData {
  Ideal ideal;
  std::vector<Polynomial> r0, r1;
};

ScrollData scroll_with_rows(const Ideal& directrix, Rng& rng) {
  auto y = adapted_coordinates(linear_forms(directrix), rng);
  ScrollData s;
  s.r0 = {y[0], y[1], y[3]};
  s.r1 = {y[1], y[2], y[4]};
  s.ideal = scroll_from_rows(s.r0, s.r1);
  return s;
}

Ideal ruling(const ScrollData& s, Coeff lambda, Coeff mu) {
  std::vector<Polynomial> f;
  for (int k = 0; k < 3; ++k) f.push_back(s.r0[k].scaled(lambda) + s.r1[k].scaled(mu));
  return linear_subspace(f);
}

std::vector<Coeff> random_point(const PrimeField& F, Rng& rng, int free_vars) {
  std::vector<Coeff> v(kNumVars, 0);
  for (int i = 0; i < free_vars; ++i) v[i] = rng.uniform(F);
  return v;
}

Ideal residual_A(std::uint32_t p, Rng& rng) {
  Ideal L = linear_subspace({var(p, 0), var(p, 1), var(p, 2)});
  std::vector<Ideal> parts;
  for (int k = 0; k < 3; ++k) parts.push_back(plane_through_line(L, rng));
  parts.push_back(cubic_scroll(L, rng));
  return intersect_all(parts);
}

Ideal residual_C(std::uint32_t p, Rng& rng) {
  const int tail[] = {2, 3, 4};
  Polynomial a = random_form_in(p, 2, tail, rng);
  std::vector<Polynomial> b;
  for (int k = 0; k < 3; ++k) b.push_back(random_form_in(p, 1, tail, rng));
  std::vector<Ideal> parts{triple_plane_structure(a, b[0], b[1], b[2])};
  for (int k = 0; k < 3; ++k) {
    Ideal Lk = linear_subspace({var(p, 0), var(p, 1), b[k]});
    parts.push_back(plane_through_line(Lk, rng));
  }
  return intersect_all(parts);
}

Ideal residual_D(std::uint32_t p, Rng& rng) {
  PrimeField F(p);
  Ideal L = linear_subspace({var(p, 0), var(p, 1), var(p, 2)});
  ScrollData T = scroll_with_rows(L, rng);
  Ideal L1 = ruling(T, rng.nonzero(F), rng.nonzero(F));
  Ideal L2 = ruling(T, rng.nonzero(F), rng.nonzero(F));
  Ideal pair = ideal_intersection(L1, L2);
  auto hs = ideal_basis_in_degree(pair, 1);
  if (hs.size() != 1) throw std::runtime_error("residual_D: rulings do not span a hyperplane");
  const Polynomial h = hs[0];
  Polynomial q(p);
  do {
    q = random_in_degree(pair, 2, rng);
  } while (ideal_contains(L, q) || ideal_contains(Ideal(p, {h}), q));
  Ideal Q(p, {h, q});
  Ideal P = plane_through_line(L, rng, &h);
  return intersect_all({P, T.ideal, Q});
}

/// Q contains the line P cap H and is tangent there to the degenerate direction of (f, g, h).
Ideal residual_E(std::uint32_t p, Rng& rng) {
  PrimeField K(p);
  const int tail[] = {2, 3, 4}, line[] = {3, 4};
  const Polynomial x0 = var(p, 0), x1 = var(p, 1), x2 = var(p, 2);
  Polynomial a = random_form_in(p, 1, line, rng), b = random_form_in(p, 1, line, rng);
  Polynomial f = b * b + x2 * random_form_in(p, 1, tail, rng);
  Polynomial g = -(a * b) + x2 * random_form_in(p, 1, tail, rng);
  Polynomial h = a * a + x2 * random_form_in(p, 1, tail, rng);
  Ideal M = quadruple_plane_structure(f, g, h);
  Polynomial A = a + x0.scaled(rng.uniform(K)) + x1.scaled(rng.uniform(K));
  Polynomial B = b + x0.scaled(rng.uniform(K)) + x1.scaled(rng.uniform(K));
  Polynomial k = x2 - x0.scaled(rng.uniform(K)) - x1.scaled(rng.uniform(K));
  Ideal Q(p, {k, x0 * A + x1 * B});
  return ideal_intersection(M, Q);
}

Ideal residual_F(std::uint32_t p, Rng& rng) {
  const int head[] = {0, 1, 2}, four[] = {0, 1, 2, 3};
  std::vector<Polynomial> m;
  for (int k = 0; k < 3; ++k) m.push_back(random_form_in(p, 1, head, rng));
  Polynomial q = random_form_in(p, 2, four, rng);
  const Polynomial x3 = var(p, 3), x4 = var(p, 4);
  std::vector<Ideal> parts{Ideal(p, {x4, m[0] * m[1] * m[2] + x3 * q})};
  for (int k = 0; k < 3; ++k) parts.push_back(plane_through_line(linear_subspace({x3, x4, m[k]}), rng, &x4));
  return intersect_all(parts);
}

Ideal residual_G(std::uint32_t p, Rng& rng) {
  PrimeField F(p);
  const Polynomial x4 = var(p, 4);
  std::vector<std::vector<Coeff>> pt;
  for (int k = 0; k < 4; ++k) pt.push_back(random_point(F, rng, 4));
  Ideal F1 = span_of_points(p, {pt[0], pt[1]}), F2 = span_of_points(p, {pt[2], pt[3]});
  Ideal G1 = span_of_points(p, {pt[0], pt[2]}), G2 = span_of_points(p, {pt[1], pt[3]});
  Ideal quad = intersect_all({F1, F2, G1, G2});
  // quadrics in x0..x3 through the four lines
  std::vector<Polynomial> q;
  EchelonBasis span(F, num_monomials(2));
  const Polynomial zero(p);
  std::vector<Polynomial> sub{var(p, 0), var(p, 1), var(p, 2), var(p, 3), zero};
  for (const auto& g : ideal_basis_in_degree(quad, 2)) {
    Polynomial r = g.substitute(sub);
    if (!r.is_zero() && span.insert(r.to_dense(2))) q.push_back(r);
  }
  if (q.size() != 2) throw std::runtime_error("residual_G: quadrilateral is not on a pencil of quadrics");
  DelPezzoOptions opt;
  opt.degree = 4;
  opt.section_quadrics = q;
  Ideal T1 = del_pezzo(p, opt, rng);
  Ideal T2(p, {x4, random_in_degree(ideal_intersection(F1, F2), 2, rng)});
  return ideal_intersection(T1, T2);
}

Ideal residual_H(std::uint32_t p, Rng& rng) {
  Ideal L = linear_subspace({var(p, 0), var(p, 1), var(p, 2)});
  const int head[] = {0, 1, 2};
  Polynomial h = random_form_in(p, 1, head, rng);
  DelPezzoOptions opt;
  opt.degree = 3;
  opt.hyperplane = h;
  opt.containing_line = L;
  std::vector<Ideal> parts{del_pezzo(p, opt, rng)};
  for (int k = 0; k < 3; ++k) parts.push_back(plane_through_line(L, rng, &h));
  return intersect_all(parts);
}

}  // namespace

Ideal linear_subspace(const std::vector<Polynomial>& forms) {
  if (forms.empty()) throw std::invalid_argument("linear_subspace: no forms");
  for (const auto& f : forms)
    if (f.is_zero() || f.degree() != 1) throw std::invalid_argument("linear_subspace: forms must be linear");
  if (linear_rank(forms) != forms.size()) throw std::invalid_argument("linear_subspace: dependent forms");
  return Ideal(forms[0].prime(), forms);
}

Ideal span_of_points(std::uint32_t prime, const std::vector<std::vector<Coeff>>& points) {
  PrimeField F(prime);
  Matrix M(points.size(), kNumVars);
  for (std::size_t r = 0; r < points.size(); ++r)
    for (int v = 0; v < kNumVars; ++v) M.at(r, v) = points[r][v];
  std::vector<Polynomial> forms;
  for (const Vec& k : kernel(F, M)) {
    std::vector<Term> t;
    for (int v = 0; v < kNumVars; ++v)
      if (k[v]) t.push_back({Monomial::variable(v), k[v]});
    forms.push_back(Polynomial::from_terms(prime, t));
  }
  if (forms.empty()) return Ideal::zero(prime);
  return Ideal(prime, forms);
}

std::vector<Polynomial> linear_forms(const Ideal& I) { return ideal_basis_in_degree(I, 1); }

Ideal plane_through_line(const Ideal& line, Rng& rng, const Polynomial* avoid) {
  auto forms = linear_forms(line);
  if (forms.size() != 3) throw std::invalid_argument("plane_through_line: not a line");
  while (true) {
    std::vector<Polynomial> two{combination(forms, rng), combination(forms, rng)};
    if (linear_rank(two) != 2) continue;
    if (avoid) {
      auto three = two;
      three.push_back(*avoid);
      if (linear_rank(three) < 3) continue;
    }
    return linear_subspace(two);
  }
}

Ideal scroll_from_rows(const std::vector<Polynomial>& r0, const std::vector<Polynomial>& r1) {
  if (r0.size() != 3 || r1.size() != 3) throw std::invalid_argument("scroll_from_rows: rows need three entries");
  return Ideal(r0[0].prime(), minors_2x3(r0, r1));
}

Ideal cubic_scroll(const Ideal& directrix, Rng& rng) { return scroll_with_rows(directrix, rng).ideal; }

Ideal triple_plane_structure(const Polynomial& a, const Polynomial& b1, const Polynomial& b2, const Polynomial& b3) {
  const std::uint32_t p = a.prime();
  Polynomial b = b1 * b2 * b3;
  if (dimension_and_degree(Ideal(p, {a, b})).dimension != 2)
    throw std::invalid_argument("triple_plane_structure: a and b1 b2 b3 share a factor");
  const Polynomial x0 = var(p, 0), x1 = var(p, 1);
  return Ideal(p, {x0 * x0, x0 * x1, x1 * x1 * x1, a * x1 * x1 + b * x0});
}

Ideal quadruple_plane_structure(const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  const std::uint32_t p = f.prime();
  if (dimension_and_degree(Ideal(p, {f, g, h})).dimension > 2)
    throw std::invalid_argument("quadruple_plane_structure: f, g, h share a factor");
  const Polynomial x0 = var(p, 0), x1 = var(p, 1);
  std::vector<Polynomial> gens{x0 * x0 * x0, x0 * x0 * x1, x0 * x1 * x1, x1 * x1 * x1,
                               g * x0 * x0 - f * x0 * x1, h * x0 * x0 - f * x1 * x1, h * x0 * x1 - g * x1 * x1};
  return Ideal(p, gens);
}

Ideal del_pezzo(std::uint32_t prime, const DelPezzoOptions& opt, Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Ideal S;
    if (opt.degree == 4) {
      std::vector<Polynomial> g;
      if (opt.section_quadrics.size() == 2) {
        for (const auto& q : opt.section_quadrics) g.push_back(q + var(prime, 4) * random_form(prime, 1, rng));
      } else {
        g = {random_form(prime, 2, rng), random_form(prime, 2, rng)};
      }
      S = Ideal(prime, g);
    } else if (opt.degree == 3) {
      Polynomial h = opt.hyperplane ? *opt.hyperplane : random_form(prime, 1, rng);
      Polynomial c = opt.containing_line ? random_in_degree(*opt.containing_line, 3, rng) : random_form(prime, 3, rng);
      S = Ideal(prime, {h, c});
    } else {
      throw std::invalid_argument("del_pezzo: degree must be 3 or 4");
    }
    auto dd = dimension_and_degree(S);
    if (dd.dimension != 2 || dd.degree != opt.degree) continue;
    if (smoothness_check(S, SmoothnessMode::probabilistic, 4, rng.next()).verdict == Verdict::smooth) return S;
  }
  throw std::runtime_error("del_pezzo: no smooth draw");
}

Ideal link_with(const Ideal& Z, const std::vector<Polynomial>& ci) {
  Ideal C(Z.prime(), ci);
  Ideal R = ideal_quotient(C, Z);
  if (!R.is_unit() && !is_saturated(R)) R = saturate(R);
  return R;
}

LinkResult link(const Ideal& Z, int m, int n, Rng& rng, int attempts) {
  if (graded_piece_dim(Z, m, Piece::ideal) == 0 || graded_piece_dim(Z, n, Piece::ideal) == 0)
    throw std::runtime_error("link: no forms of degree " + std::to_string(m) + " and " + std::to_string(n));
  for (int a = 0; a < attempts; ++a) {
    Polynomial F = random_in_degree(Z, m, rng), G = random_in_degree(Z, n, rng);
    Ideal C(Z.prime(), {F, G});
    auto dd = dimension_and_degree(C);
    if (dd.dimension != 2 || dd.degree != static_cast<std::int64_t>(m) * n) continue;
    LinkResult r;
    r.complete_intersection = {F, G};
    r.residual = link_with(Z, r.complete_intersection);
    r.empty_residual = r.residual.is_unit();
    return r;
  }
  throw std::runtime_error("link: no regular sequence after " + std::to_string(attempts) + " draws");
}

BilinkResult bilink(const Ideal& Z, int m1, int n1, int m2, int n2, Rng& rng, int attempts) {
  BilinkResult b;
  b.first = link(Z, m1, n1, rng, attempts);
  b.second = link(b.first.residual, m2, n2, rng, attempts);
  return b;
}

std::optional<Ideal> residual_configuration(FamilyId f, std::uint32_t p, Rng& rng) {
  switch (f) {
    case FamilyId::A: return residual_A(p, rng);
    case FamilyId::B: return std::nullopt;
    case FamilyId::C: return residual_C(p, rng);
    case FamilyId::D: return residual_D(p, rng);
    case FamilyId::E: return residual_E(p, rng);
    case FamilyId::F: return residual_F(p, rng);
    case FamilyId::G: return residual_G(p, rng);
    case FamilyId::H: return residual_H(p, rng);
  }
  return std::nullopt;
}

MonadRecipe monad_recipe(FamilyId f) {
  switch (f) {
    case FamilyId::A: return MonadRecipe::six_secant_rational;
    case FamilyId::B: return MonadRecipe::rational;
    case FamilyId::C: return MonadRecipe::three_planes;
    case FamilyId::D: return MonadRecipe::k3_psi;
    case FamilyId::E: return MonadRecipe::elliptic_psi;
    case FamilyId::F: return MonadRecipe::three_points;
    case FamilyId::G: return MonadRecipe::elliptic_ten;
    case FamilyId::H: return MonadRecipe::general_ten;
  }
  throw std::invalid_argument("monad_recipe: unknown family");
}

Ideal monad_candidate(FamilyId f, std::uint32_t prime, Rng& rng, std::size_t* hom_dim) {
  MonadData md = monad_sheaves(prime, monad_recipe(f), rng);
  HomSpace H = hom_space(md.F, md.G);
  if (hom_dim) *hom_dim = H.dim();
  return ideal_from_monad(H.random_element(rng)).ideal;
}

std::string quick_check(const Ideal& S, FamilyId f, SmoothnessMode mode, std::uint64_t seed) {
  const FamilyDescriptor& fd = family(f);
  auto inv = surface_invariants(S.hilbert_polynomial());
  if (!inv) return "not a surface";
  if (inv->degree != 10 || inv->sectional_genus != fd.pi || inv->chi != fd.chi)
    return "invariants (" + std::to_string(inv->degree) + "," + std::to_string(inv->sectional_genus) + "," +
           std::to_string(inv->chi) + ")";
  BettiTable b = betti(free_resolution(S));
  if (!(b == fd.betti)) return "betti table differs";
  SmoothnessReport sm = smoothness_check(S, mode, 8, seed);
  if (sm.verdict != Verdict::smooth) return sm.verdict == Verdict::singular ? "singular" : "smoothness inconclusive";
  return {};
}

Construction construct_family(FamilyId f, const ConstructOptions& opt) {
  Construction c;
  c.family = f;
  Rng master(opt.seed ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(f) + 1)));
  const bool has_linkage = f != FamilyId::B;
  const bool bilinked = f == FamilyId::D || f == FamilyId::E || f == FamilyId::F;
  auto attempt_linkage = [&](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Stage> stages;
    Ideal Z = *residual_configuration(f, opt.prime, rng);
    stages.push_back({"Z", Z});
    LinkResult first = link(Z, 4, 4, rng);
    stages.push_back({"CI1", Ideal(opt.prime, first.complete_intersection)});
    Ideal S = first.residual;
    if (bilinked) {
      stages.push_back({"Y", S});
      LinkResult second = link(S, 4, 5, rng);
      stages.push_back({"CI2", Ideal(opt.prime, second.complete_intersection)});
      S = second.residual;
    }
    stages.push_back({"S", S});
    return stages;
  };
  auto run = [&](const std::string& route, bool monad) {
    for (int a = 0; a < opt.retries; ++a) {
      std::uint64_t seed = master.derive(static_cast<std::uint64_t>(a) + (monad ? 1000 : 0)).next();
      AttemptLog log{route, seed, ""};
      try {
        std::vector<Stage> stages;
        std::size_t hom = 0;
        if (monad) {
          Rng rng(seed);
          stages.push_back({"S", monad_candidate(f, opt.prime, rng, &hom)});
        } else {
          stages = attempt_linkage(seed);
        }
        const Ideal& S = stages.back().ideal;
        log.outcome = quick_check(S, f, opt.smoothness, seed ^ 0x5300);
        if (log.outcome.empty()) {
          log.outcome = "ok";
          c.attempts.push_back(log);
          c.ok = true;
          c.ideal = S;
          c.route = route;
          c.seed_used = seed;
          c.stages = std::move(stages);
          if (monad) {
            c.monad = monad_recipe(f);
            c.hom_dimension = hom;
          }
          return true;
        }
      } catch (const std::exception& e) {
        log.outcome = e.what();
      }
      c.attempts.push_back(log);
    }
    return false;
  };
  if (has_linkage && !opt.force_fallback) {
    if (run(bilinked ? "bilink (4,4) (4,5)" : "link (4,4)", false)) return c;
    if (!opt.allow_fallback) return c;
  }
  run("monad", true);
  return c;
}

}  // namespace surfcas
