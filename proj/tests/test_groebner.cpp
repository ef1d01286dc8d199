#include "doctest.h"

#include "seshadri/groebner/hilbert.hpp"
#include "support.hpp"

using namespace seshadri;
using testing::ideal;
using testing::parse;

namespace {

const std::vector<std::string> kTwistedCubic = {"x0*x3 - x1*x2", "x1^2 - x0*x2", "x2^2 - x1*x3"};

// Random member of I: sum of generators times random forms.
Poly random_member(const Ideal& i, Rng& rng) {
  Poly f(i.nvars());
  for (const auto& g : i.generators()) f += g * random_form(i.nvars(), 0, i.nvars(), rng() % 2, rng, 3);
  return f;
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  auto principal = groebner_basis({parse("x0", 2)}, MonomialOrder::grevlex());
  REQUIRE(principal.size() == 1);
  CHECK(principal[0] == parse("x0", 2));

  auto unit = groebner_basis({parse("x0", 2), parse("x0 + 1", 2)}, MonomialOrder::grevlex());
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == parse("1", 2));

  CHECK(groebner_basis({}, MonomialOrder::grevlex()).empty());

  Ideal tc = ideal(4, kTwistedCubic);
  const auto& g = tc.basis();
  CHECK(g.size() == 3);
  for (const auto& b : g) CHECK(b.total_degree() == 2);
  CHECK(is_groebner_basis(g));
  for (const auto& f : tc.generators()) CHECK(tc.contains(f));
}

TEST_CASE("normal_form examples") {
  Ideal tc = ideal(4, kTwistedCubic);
  CHECK(tc.normal_form(parse("x0*x3 - x1*x2", 4)).is_zero());
  CHECK(ideal(2, {"x1"}).normal_form(parse("x0", 2)) == parse("x0", 2));
  CHECK(ideal(3, {"x1^2 - x0*x2"}).normal_form(parse("x1^2", 3)) == parse("x0*x2", 3));
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact(parse("x0^2 - x1^2", 2), parse("x0 - x1", 2)) == parse("x0 + x1", 2));
  CHECK_THROWS_AS(divide_exact(parse("x0^2 + x1", 2), parse("x0", 2)), std::domain_error);
}

TEST_CASE("property: reduced bases pass the S-pair check and decide membership") {
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Ideal i = testing::random_homogeneous_ideal(4, 2 + trial % 3, 3, rng);
    const auto& g = i.basis();
    CHECK(is_groebner_basis(g));
    for (const auto& b : g) CHECK(b.leading_coefficient() == 1);
    const auto& lex = i.basis(MonomialOrder::lex());
    CHECK(is_groebner_basis(lex));
    for (int k = 0; k < 3; ++k) {
      Poly f = random_member(i, rng);
      CHECK(i.contains(f));
      CHECK(normal_form(f.with_order(MonomialOrder::lex()), lex).is_zero());
    }
    // Adding a standard monomial moves the element out of the ideal.
    Poly f = random_member(i, rng);
    for (const auto& m : monomials_of_degree(0, 4, 2)) {
      Poly mono = Poly::monomial(4, Rational(1), m);
      if (!i.normal_form(mono).is_zero() && i.normal_form(mono) == mono) {
        CHECK_FALSE(i.contains(f + mono));
        break;
      }
    }
  }
}

TEST_CASE("basis is independent of generator order") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Ideal i = testing::random_homogeneous_ideal(4, 3, 3, rng);
    std::vector<Poly> rev(i.generators().rbegin(), i.generators().rend());
    CHECK(groebner_basis(rev, MonomialOrder::grevlex()) == i.basis());
  }
}

TEST_CASE("ideal_quotient examples") {
  Ideal a = ideal(2, {"x0^2"});
  CHECK(same_ideal(ideal_quotient(a, ideal(2, {"x0"})), ideal(2, {"x0"})));
  CHECK(same_ideal(ideal_quotient(ideal(2, {"x0*x1"}), ideal(2, {"x0"})), ideal(2, {"x1"})));

  Ideal m2 = ideal(2, {"x0^2", "x0*x1", "x1^2"});
  Ideal q = ideal_quotient(m2, ideal(2, {"x0", "x1"}));
  // Both inclusions by membership.
  CHECK(q.contains(parse("x0", 2)));
  CHECK(q.contains(parse("x1", 2)));
  CHECK_FALSE(q.contains(parse("1", 2)));
  for (const auto& g : q.generators()) CHECK(ideal(2, {"x0", "x1"}).contains(g));
}

TEST_CASE("saturate examples") {
  CHECK(same_ideal(saturate(ideal(2, {"x0^2*x1"}), ideal(2, {"x0"})), ideal(2, {"x1"})));
  CHECK(same_ideal(saturate(ideal(3, {"x0*x1", "x0*x2"}), ideal(3, {"x0"})), ideal(3, {"x1", "x2"})));
  CHECK(saturate(Ideal::unit(3), ideal(3, {"x1"})).is_unit());
  CHECK(same_ideal(saturate_by_variable(ideal(2, {"x0^2*x1"}), 0), ideal(2, {"x1"})));
}

TEST_CASE("property: quotient and saturation identities, both routes agree") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Ideal j = testing::random_homogeneous_ideal(3, 2, 3, rng);
    Ideal i = testing::random_homogeneous_ideal(3, 1 + trial % 2, 2, rng);
    Ideal q = ideal_quotient(j, i);
    CHECK(q.contains(j));
    // q · I ⊆ J
    for (const auto& a : q.generators())
      for (const auto& b : i.generators()) CHECK(j.contains(a * b));
    Ideal x = variable_ideal(3, 1, 3);
    Ideal fast = ideal_quotient(j, x);
    Ideal slow = ideal_quotient(j, x, QuotientRoute::Elimination);
    CHECK(same_ideal(fast, slow));

    Ideal s = saturate(j, x);
    CHECK(s.contains(j));
    CHECK(same_ideal(saturate(s, x), s));
    CHECK(same_ideal(s, saturate(j, x, QuotientRoute::Elimination)));
    Ideal s0 = saturate_by_variable(j, 0);
    CHECK(same_ideal(s0, saturate(j, variable_ideal(3, 0, 1), QuotientRoute::Elimination)));
  }
}

TEST_CASE("intersect") {
  Ideal a = ideal(3, {"x0"});
  Ideal b = ideal(3, {"x1"});
  CHECK(same_ideal(intersect(a, b), ideal(3, {"x0*x1"})));
  Rng rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    Ideal i = testing::random_homogeneous_ideal(3, 2, 2, rng);
    Ideal j = testing::random_homogeneous_ideal(3, 2, 2, rng);
    Ideal k = intersect(i, j);
    CHECK(i.contains(k));
    CHECK(j.contains(k));
    for (const auto& f : i.generators())
      for (const auto& g : j.generators()) CHECK(k.contains(f * g));
  }
}

TEST_CASE("hilbert_data examples") {
  auto p3 = hilbert_data(Ideal(4));
  CHECK(p3.dimension == 3);
  CHECK(p3.degree == 1);

  auto conic = hilbert_data(ideal(3, {"x0*x2 - x1^2"}));
  CHECK(conic.dimension == 1);
  CHECK(conic.degree == 2);

  Ideal tc = ideal(4, kTwistedCubic);
  auto h = hilbert_data(tc);
  CHECK(h.dimension == 1);
  CHECK(h.degree == 3);
  REQUIRE(h.polynomial.size() == 2);
  CHECK(h.polynomial[0] == 1);
  CHECK(h.polynomial[1] == 3);
  // Independent fit from Macaulay-matrix ranks at t = 1..4.
  for (unsigned t = 1; t <= 4; ++t) CHECK(testing::macaulay_hilbert_function(tc, t) == 3 * t + 1);

  auto empty = hilbert_data(variable_ideal(3, 0, 3));
  CHECK(empty.dimension == -1);
  CHECK(empty.polynomial.empty());
  CHECK(hilbert_data(Ideal::unit(3)).dimension == -1);
  CHECK_THROWS_AS(hilbert_data(ideal(2, {"x0 + 1"})), std::invalid_argument);
}

TEST_CASE("hilbert numerator of monomial ideals") {
  // (x0*x1) in two variables: series (1 - t^2) / (1 - t)^2.
  auto n = hilbert_numerator({Monomial::variable(0) * Monomial::variable(1)});
  REQUIRE(n.size() == 3);
  CHECK(n[0] == 1);
  CHECK(n[1] == 0);
  CHECK(n[2] == -1);
  CHECK(hilbert_numerator({Monomial{}}).empty());
}

TEST_CASE("property: Hilbert function matches Macaulay ranks and is order independent") {
  Rng rng(2);
  for (int trial = 0; trial < 12; ++trial) {
    Ideal i = testing::random_homogeneous_ideal(4, 2 + trial % 2, 3, rng);
    auto h = hilbert_data(i);
    auto hl = hilbert_data(i, MonomialOrder::lex());
    CHECK(h.dimension == hl.dimension);
    CHECK(h.degree == hl.degree);
    CHECK(h.polynomial == hl.polynomial);
    for (unsigned d = 0; d <= 5; ++d) CHECK(h.hilbert_function(static_cast<int>(d)) == testing::macaulay_hilbert_function(i, d));
    if (h.dimension >= 0) {
      CHECK(h.polynomial.size() == static_cast<std::size_t>(h.dimension) + 1);
      Rational lead = h.polynomial.back();
      for (int k = 2; k <= h.dimension; ++k) lead *= k;
      CHECK(lead == Rational(h.degree));
      // The Hilbert polynomial agrees with the function in large degree.
      CHECK(h.hilbert_polynomial(Rational(20)) == Rational(h.hilbert_function(20)));
    } else {
      CHECK(h.polynomial.empty());
    }
  }
}

TEST_CASE("graded_piece examples") {
  Ideal conic = ideal(3, {"x0*x2 - x1^2"});
  CHECK(graded_piece(conic, 1).empty());
  CHECK(graded_piece(conic, 2).size() == 1);
  Ideal tc = ideal(4, kTwistedCubic);
  auto q = graded_piece(tc, 2);
  CHECK(q.size() == 3);
  for (const auto& f : q) CHECK(tc.contains(f));
  CHECK_THROWS_AS(graded_piece(tc, 0), std::invalid_argument);
  CHECK_THROWS_AS(graded_piece(ideal(2, {"x0 + 1"}), 1), std::invalid_argument);
}

TEST_CASE("property: graded_piece dimension is ambient minus quotient Hilbert function") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Ideal i = testing::random_homogeneous_ideal(4, 3, 3, rng);
    auto h = hilbert_data(i);
    for (int d = 1; d <= 4; ++d) {
      auto piece = graded_piece(i, d);
      CHECK(Integer(static_cast<unsigned long>(piece.size())) ==
            testing::binomial(static_cast<unsigned long>(d + 3), 3) - h.hilbert_function(d));
      for (const auto& f : piece) CHECK(i.contains(f));
    }
  }
}

TEST_CASE("truncated bases") {
  // (x1^2 - x0^3) + (x0, x1)^3 in Q[x0, x1]: colength counts standard monomials below degree 3.
  GroebnerOptions opt;
  opt.truncate = 3;
  auto g = groebner_basis({parse("x1^2 - x0^3", 2)}, MonomialOrder::grevlex(), opt);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == parse("x1^2", 2));
  CHECK(normal_form(parse("x0^3 + x1^2 + x0", 2), g, 3) == parse("x0", 2));
  // x0^2 = (x0 + x1^2)(x0 - x1^2) + x1^4 lies in (x0 - x1^2) + (x0, x1)^4.
  opt.truncate = 4;
  auto h = groebner_basis({parse("x0 - x1^2", 2)}, MonomialOrder::grevlex(), opt);
  CHECK(normal_form(parse("x0^2", 2), h, 4).is_zero());
  CHECK(normal_form(parse("x0*x1", 2), h, 4) == parse("x0*x1", 2));
  CHECK_FALSE(normal_form(parse("x0", 2), h, 4).is_zero());
}
