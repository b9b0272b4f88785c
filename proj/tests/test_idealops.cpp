#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

bool same_hilbert_function(const Ideal& I, const Ideal& J, int upto) {
  for (int n = 0; n <= upto; ++n)
    if (graded_piece_dim(I, n, Piece::ideal) != graded_piece_dim(J, n, Piece::ideal)) return false;
  return true;
}

bool colon_property(const Ideal& I, const Ideal& J) {
  Ideal Q = ideal_quotient(I, J);
  for (const auto& q : Q.generators())
    for (const auto& j : J.generators())
      if (!ideal_contains(I, q * j)) return false;
  return true;
}

const Ideal& explicit_X() {
  // cubic scroll with two rulings on the quadric surface x1 = x0 x2 + x3 x4 = 0
  static const Ideal X = ideal_intersection(scroll_from_rows({x(0), x(1), x(3)}, {x(1), x(2), x(4)}),
                                            ideal({"x1", "x0*x2+x3*x4"}));
  return X;
}

}  // namespace

TEST_SUITE("idealops") {
  TEST_CASE("sums") {
    CHECK(ideal_sum(ideal({"x0"}), ideal({"x1"})).same_as(ideal({"x0", "x1"})));
    Ideal I = ideal({"x0*x1", "x2^2"});
    CHECK(ideal_sum(I, Ideal::zero(P)).same_as(I));
    Ideal pt = ideal_sum(ideal({"x0", "x1"}), ideal({"x2", "x3"}));
    CHECK(pt.same_as(ideal({"x0", "x1", "x2", "x3"})));
    CHECK(zero_scheme_length(pt) == 1);
  }

  TEST_CASE("intersections") {
    CHECK(ideal_intersection(ideal({"x0"}), ideal({"x1"})).same_as(ideal({"x0*x1"})));
    CHECK(ideal_intersection(ideal({"x0", "x1"}), ideal({"x0", "x1"})).same_as(ideal({"x0", "x1"})));
    Ideal K = ideal_intersection(ideal({"x0", "x1"}), ideal({"x0", "x2"}));
    Ideal want = ideal({"x0", "x1*x2"});
    CHECK(ideal_contains(K, want));
    CHECK(ideal_contains(want, K));
    CHECK(same_hilbert_function(K, want, 6));
  }

  TEST_CASE("quotients") {
    Ideal Q = ideal_quotient(ideal({"x0*x1", "x2"}), ideal({"x0", "x2"}));
    for (const char* f : {"x1", "x2"})
      for (const char* g : {"x0", "x2"}) CHECK(ideal_contains(ideal({"x0*x1", "x2"}), poly(f) * poly(g)));
    CHECK(Q.same_as(ideal({"x1", "x2"})));
    CHECK(same_hilbert_function(Q, ideal({"x1", "x2"}), 6));
    Ideal I = ideal({"x0^2", "x1*x3"});
    CHECK(ideal_quotient(I, Ideal::unit(P)).same_as(I));
    CHECK(ideal_quotient(I, I).is_unit());
    CHECK(ideal_quotient(ideal({"x0*x1"}), x(1)).same_as(ideal({"x0"})));
  }

  TEST_CASE("colon times divisor lands in the ideal") {
    std::vector<std::pair<Ideal, Ideal>> pairs{
        {ideal({"x0*x1", "x2"}), ideal({"x0", "x2"})},
        {ideal({"x0^2", "x0*x1", "x1^3"}), ideal({"x0", "x1"})},
        {explicit_X(), ideal({"x1", "x2", "x4"})},
        {residual_A(), ideal({"x0", "x1", "x2"})},
    };
    for (const auto& [I, J] : pairs) CHECK(colon_property(I, J));
  }

  TEST_CASE("saturation") {
    Ideal I = ideal({"x0^2", "x0*x1", "x0*x2", "x0*x3", "x0*x4"});
    CHECK_FALSE(is_saturated(I));
    CHECK(saturate(I).same_as(ideal({"x0"})));
    Ideal plane = ideal({"x0", "x1"});
    CHECK(saturate(plane).same_as(plane));
    auto slow = saturate_by_iteration(I);
    CHECK(slow.ideal.same_as(ideal({"x0"})));
  }

  TEST_CASE("saturation is idempotent and agrees with the iterated colon") {
    std::vector<Ideal> fixtures{
        ideal({"x0^2", "x0*x1", "x0*x2", "x0*x3", "x0*x4"}),
        ideal_product(ideal({"x0", "x1"}), ideal({"x0", "x1", "x2", "x3", "x4"})),
        ideal_product(explicit_X(), ideal({"x2", "x3", "x4"})),
        residual_A(),
    };
    for (const auto& I : fixtures) {
      Ideal S = saturate(I);
      CHECK(ideal_contains(S, I));
      CHECK(saturate(S).same_as(S));
      CHECK(saturate_by_iteration(I).ideal.same_as(S));
    }
  }

  TEST_CASE("colon chain on the quadruple-plane configuration stabilizes quickly") {
    Rng rng(5);
    Ideal Z = *residual_configuration(FamilyId::E, P, rng);
    LinkResult lr = link(Z, 4, 4, rng);
    Ideal chain = ideal_quotient(Ideal(P, lr.complete_intersection), Z);
    auto it = saturate_by_iteration(chain);
    CHECK(it.iterations <= 3);
    CHECK(it.ideal.same_as(saturate(chain)));
  }

  TEST_CASE("random elements") {
    Polynomial f = random_in_degree(ideal({"x0"}), 1, 3);
    CHECK(f.size() == 1);
    CHECK(f.leading_monomial() == Monomial::variable(0));
    CHECK(graded_piece_dim(ideal({"x0", "x1"}), 2, Piece::ideal) == 9);
    CHECK(ideal_contains(ideal({"x0", "x1"}), random_in_degree(ideal({"x0", "x1"}), 2, 4)));
    Polynomial q = random_in_degree(residual_A(), 4, 9);
    CHECK(ideal_contains(residual_A(), q));
    CHECK(random_in_degree(residual_A(), 4, 9) == q);
    CHECK_THROWS(random_in_degree(residual_A(), 3, 1));
  }

  TEST_CASE("dimension and degree") {
    auto plane = dimension_and_degree(ideal({"x0", "x1"}));
    CHECK(plane.dimension == 2);
    CHECK(plane.degree == 1);
    auto scroll = dimension_and_degree(scroll_from_rows({x(0), x(1), x(3)}, {x(1), x(2), x(4)}));
    CHECK(scroll.dimension == 2);
    CHECK(scroll.degree == 3);
    auto X = dimension_and_degree(explicit_X());
    CHECK(X.dimension == 2);
    CHECK(X.degree == 5);
    std::vector<int> gdeg;
    for (const auto& g : minimal_generators(explicit_X())) gdeg.push_back(*g.degree());
    CHECK(gdeg == std::vector<int>{3, 3, 3, 3, 3});
    auto whole = dimension_and_degree(Ideal::zero(P));
    CHECK(whole.dimension == 4);
    CHECK(whole.degree == 1);
    CHECK(dimension_and_degree(Ideal::unit(P)).dimension == -1);
  }

  TEST_CASE("zero-scheme lengths") {
    CHECK(zero_scheme_length(ideal({"x0", "x1", "x2", "x3"})) == 1);
    CHECK(zero_scheme_length(ideal({"x0", "x1", "x2", "x3^2"})) == 2);
    CHECK_THROWS(zero_scheme_length(ideal({"x0", "x1"})));
  }

  TEST_CASE("linkage involution on fixtures") {
    Rng rng(77);
    std::vector<Ideal> fixtures{residual_A(), explicit_X()};
    for (FamilyId f : {FamilyId::C, FamilyId::H}) fixtures.push_back(*residual_configuration(f, P, rng));
    for (const auto& Z : fixtures) {
      int m = graded_piece_dim(Z, 3, Piece::ideal) >= 2 ? 3 : 4;
      LinkResult lr = link(Z, m, 4, rng);
      Ideal C(P, lr.complete_intersection);
      Ideal back = ideal_quotient(C, ideal_quotient(C, Z));
      CHECK(back.same_as(saturate(Z)));
      auto dz = dimension_and_degree(Z), ds = dimension_and_degree(lr.residual);
      CHECK(dz.degree + ds.degree == 4 * m);
    }
  }

  TEST_CASE("link degrees along the constructions") {
    for (FamilyId f : kAllFamilies) {
      if (f == FamilyId::B) continue;
      const auto& c = family_construction(f);
      CAPTURE(to_char(f));
      REQUIRE(c.route.rfind("monad", 0) != 0);
      for (std::size_t k = 0; k + 2 < c.stages.size(); k += 2) {
        const auto& Z = c.stages[k].ideal;
        const auto& ci = c.stages[k + 1].ideal;
        const auto& S = c.stages[k + 2].ideal;
        auto dci = dimension_and_degree(ci);
        CHECK(dimension_and_degree(Z).degree + dimension_and_degree(S).degree == dci.degree);
        CHECK((dci.degree == 16 || dci.degree == 20));
        CHECK(link_with(S, ci.generators()).same_as(saturate(Z)));
      }
    }
  }

  TEST_CASE("smoothness") {
    CHECK(smoothness_check(ideal({"x0", "x1"}), SmoothnessMode::exact).verdict == Verdict::smooth);
    Ideal cone = ideal({"x0*x2-x1^2", "x3"});
    CHECK(smoothness_check(cone, SmoothnessMode::exact).verdict == Verdict::singular);
    CHECK(smoothness_check(cone, SmoothnessMode::probabilistic).verdict != Verdict::smooth);
    CHECK(smoothness_check(scroll_from_rows({x(0), x(1), x(3)}, {x(1), x(2), x(4)}), SmoothnessMode::exact).verdict ==
          Verdict::smooth);
    Ideal twisted_cone = scroll_from_rows({x(0), x(1), x(2)}, {x(1), x(2), x(3)});
    CHECK(smoothness_check(twisted_cone, SmoothnessMode::exact).verdict == Verdict::singular);
    CHECK(smoothness_check(family_ideal(FamilyId::G), SmoothnessMode::exact).verdict == Verdict::smooth);
    CHECK(smoothness_check(family_ideal(FamilyId::G), SmoothnessMode::probabilistic).verdict == Verdict::smooth);
  }

  TEST_CASE("regularity") {
    CHECK(regularity(ideal({"x0", "x1"})) == 1);
    CHECK(regularity(scroll_from_rows({x(0), x(1), x(3)}, {x(1), x(2), x(4)})) == 2);
    CHECK(regularity(family_ideal(FamilyId::B)) == 5);
  }
}
