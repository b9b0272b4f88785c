#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<Ideal> fixture_ideals() {
  Rng rng(7);
  std::vector<Ideal> out{
      ideal({"x0", "x1"}),
      ideal({"x0^2-x1*x2", "x0*x1"}),
      ideal({"x0*x3-x1*x2"}),
      scroll_from_rows({x(0), x(1), x(2)}, {x(1), x(2), x(3)}),
      triple_plane_structure(poly("x2^2+3x3x4-x4^2"), poly("x2"), poly("x3+x4"), poly("x2-2x4")),
      quadruple_plane_structure(poly("x2^2"), poly("x3^2+x2x4"), poly("x4^2")),
  };
  out.push_back(Ideal(P, {random_form(P, 2, rng), random_form(P, 3, rng), random_form(P, 3, rng)}));
  return out;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("small reduced bases") {
    CHECK(by_leading_term(ideal({"x0", "x1"}).gb()) == std::vector<Polynomial>{x(0), x(1)});
    const auto principal = ideal({"x0*x3-x1*x2"}).gb();
    REQUIRE(principal.size() == 1);
    CHECK(principal[0] == poly("x1*x2-x0*x3"));
    std::vector<Polynomial> want{poly("x1^2*x2"), poly("x0^2-x1*x2"), poly("x0*x1")};
    CHECK(by_leading_term(ideal({"x0^2-x1*x2", "x0*x1"}).gb()) == want);
    CHECK(naive_groebner({poly("x0^2-x1*x2"), poly("x0*x1")}) == want);
    CHECK(Ideal(P, {}).is_zero());
  }

  TEST_CASE("bases agree with naive pair exhaustion") {
    Rng rng(12);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Polynomial> g{random_form(P, 2, rng), random_form(P, 2, rng)};
      std::vector<int> few{0, 1, 2};
      g.push_back(random_form_in(P, 2, few, rng));
      CHECK(by_leading_term(buchberger(g, P)) == naive_groebner(g));
    }
    for (const auto& I : fixture_ideals())
      if (I.generators().size() <= 4) CHECK(by_leading_term(I.gb()) == naive_groebner(I.generators()));
  }

  TEST_CASE("reduced basis is reduced and generates the ideal") {
    for (const auto& I : fixture_ideals()) {
      const auto& G = I.gb();
      for (std::size_t i = 0; i < G.size(); ++i) {
        CHECK(G[i].leading_coeff() == 1);
        for (std::size_t j = 0; j < G.size(); ++j) {
          if (i == j) continue;
          for (const auto& t : G[i].terms()) CHECK_FALSE(G[j].leading_monomial().divides(t.mono));
        }
      }
      Ideal back(P, G);
      for (const auto& g : I.generators()) CHECK(naive_reduce(g, G).is_zero());
      for (const auto& g : G) CHECK(ideal_contains(Ideal(P, I.generators()), g));
      CHECK(back.same_as(I));
    }
  }

  TEST_CASE("idempotence") {
    for (const auto& I : fixture_ideals()) CHECK(buchberger(I.gb(), P) == I.gb());
  }

  TEST_CASE("normal forms") {
    CHECK(normal_form(poly("x0^2"), ideal({"x0"})).is_zero());
    CHECK(normal_form(poly("x2^3"), ideal({"x0", "x1"})) == poly("x2^3"));
    Ideal I = ideal({"x0^2-x1*x2", "x0*x1"});
    Polynomial r = normal_form(poly("x0^2*x2"), I);
    CHECK(r == poly("x1*x2^2"));
    for (const auto& t : r.terms())
      for (const auto& g : I.gb()) CHECK_FALSE(g.leading_monomial().divides(t.mono));
    CHECK(ideal_contains(I, poly("x0^2*x2") - r));
  }

  TEST_CASE("membership") {
    CHECK(ideal_contains(ideal({"x0", "x1"}), poly("x0*x4")));
    CHECK_FALSE(ideal_contains(ideal({"x0^2"}), x(0)));
    Ideal T = triple_plane_structure(poly("x2^2+x3*x4"), poly("x2"), poly("x3"), poly("x2+x3+x4"));
    CHECK(ideal_contains(T, poly("x1^3")));
    CHECK_FALSE(ideal_contains(T, poly("x1^2")));
  }

  TEST_CASE("membership soundness on random combinations") {
    Rng rng(31);
    for (const auto& I : fixture_ideals()) {
      for (int trial = 0; trial < 15; ++trial) {
        Polynomial f(P);
        for (const auto& g : I.generators()) f += g * random_form(P, 5 - *g.degree(), rng);
        CHECK(ideal_contains(I, f));
      }
    }
  }

  TEST_CASE("graded pieces") {
    CHECK(graded_piece_dim(ideal({"x0"}), 1, Piece::ideal) == 1);
    CHECK(graded_piece_dim(Ideal::zero(P), 2, Piece::quotient) == 15);
    CHECK(graded_piece_dim(residual_A(), 4, Piece::ideal) == 11);
    for (const auto& I : fixture_ideals())
      for (int n = 0; n <= 6; ++n)
        CHECK(graded_piece_dim(I, n, Piece::ideal) + graded_piece_dim(I, n, Piece::quotient) == num_monomials(n));
  }

  TEST_CASE("graded dimension oracle up to degree eight") {
    auto ideals = fixture_ideals();
    ideals.push_back(residual_A());
    ideals.push_back(family_ideal(FamilyId::G));
    for (const auto& I : ideals)
      for (int n = 0; n <= 8; ++n) CHECK(graded_piece_dim(I, n, Piece::ideal) == span_dim_oracle(I.generators(), n));
  }

  TEST_CASE("ideal file round trip") {
    Ideal I = family_ideal(FamilyId::H);
    std::string text = format_ideal(I, {"family H", "seed 1"});
    Ideal back = parse_ideal(text);
    CHECK(back.generators() == I.generators());
    CHECK(format_ideal(back, {"family H", "seed 1"}) == text);
    CHECK(text.rfind("ring p=31991 vars=x0..x4 order=grevlex\n", 0) == 0);
  }

  TEST_CASE("ideal file errors") {
    CHECK_THROWS_AS(parse_ideal("not a header\nx0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal("ring p=31992 vars=x0..x4 order=grevlex\nx0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal("ring p=31991 vars=x0..x4 order=grevlex\nx0+x1^2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal("ring p=31991 vars=x0..x4 order=grevlex\nx0*\n"), std::invalid_argument);
    Ideal I = parse_ideal("ring p=101 vars=x0..x4 order=grevlex\n# a comment\nx0*x1 # trailing\n\nx2\n");
    CHECK(I.prime() == 101);
    CHECK(I.generators().size() == 2);
  }
}
