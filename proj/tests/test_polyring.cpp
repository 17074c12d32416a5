#include <random>

#include "doctest.h"
#include "hodgekit/polyring.hpp"
#include "oracles.hpp"

using namespace hodgekit;

namespace {

const WeightedRing& p1125() {
  static const WeightedRing ring({"x0", "x1", "y", "z"}, {1, 1, 2, 5});
  return ring;
}

Polynomial random_poly(const WeightedRing& ring, long degree, std::mt19937_64& rng) {
  Polynomial p(ring);
  for (const Monomial& m : monomials_of_degree(ring, degree)) {
    const long num = static_cast<long>(rng() % 11) - 5;
    if (num == 0) continue;
    Rat c(num, static_cast<long>(rng() % 3) + 1);
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

}  // namespace

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(WeightedRing({}, {}), DomainError);
  CHECK_THROWS_AS(WeightedRing({"x", "x"}, {1, 1}), DomainError);
  CHECK_THROWS_AS(WeightedRing({"x", "y"}, {1}), DomainError);
  CHECK_THROWS_AS(WeightedRing({"x", "y"}, {1, 0}), DomainError);
  CHECK_THROWS_AS(WeightedRing({"x", "2y"}, {1, 1}), DomainError);
  const WeightedRing r({"x", "y"}, {1, 2});
  CHECK(r.weight_sum() == 3);
  CHECK(r.max_weight() == 2);
  CHECK(r.index_of("y") == 1);
  CHECK(!r.index_of("z").has_value());
}

TEST_CASE("parse_ring") {
  const WeightedRing r = parse_ring("x0,x1,y,z;1,1,2,5");
  CHECK(r == p1125());
  CHECK_THROWS_AS(parse_ring("x0,x1"), ParseError);
  CHECK_THROWS_AS(parse_ring("x;0"), ParseError);
  CHECK_THROWS_AS(parse_ring("x,y;1,q"), ParseError);
}

TEST_CASE("parsing the defining polynomial") {
  const Polynomial g = parse_polynomial("z^2 - x0^10 - x1^10 - y^5", p1125());
  CHECK(g.terms.size() == 4);
  CHECK(is_homogeneous(g));
  CHECK(weighted_degree(g) == 10);
  CHECK(g.terms.at(Monomial{0, 0, 0, 2}) == 1);
  CHECK(g.terms.at(Monomial{10, 0, 0, 0}) == -1);
}

TEST_CASE("parser corner cases") {
  const WeightedRing& r = p1125();
  CHECK(parse_polynomial("0", r).is_zero());
  CHECK(parse_polynomial("x0*x1 - x1*x0", r).is_zero());
  CHECK(parse_polynomial("2*x0 + x0 - 3*x0", r).is_zero());
  CHECK(parse_polynomial("1/2*y", r).terms.at(Monomial{0, 0, 1, 0}) == Rat(1, 2));
  CHECK(parse_polynomial("-x0", r).terms.at(Monomial{1, 0, 0, 0}) == -1);
  CHECK(parse_polynomial(" + x0", r) == parse_polynomial("x0", r));
  CHECK(parse_polynomial("7", r).terms.at(Monomial{0, 0, 0, 0}) == 7);
  CHECK_THROWS_AS(parse_polynomial("x0 +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("^2", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("q^2", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0*x0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0^", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 x1", r), ParseError);
  try {
    parse_polynomial("x0 + q", r);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("weighted degree and homogeneity") {
  const WeightedRing& r = p1125();
  CHECK_THROWS_AS(weighted_degree(parse_polynomial("0", r)), DomainError);
  try {
    weighted_degree(parse_polynomial("x0 + y", r));
    CHECK(false);
  } catch (const NonHomogeneousError& e) {
    CHECK(e.degrees == std::vector<long>{1, 2});
  }
  CHECK(!is_homogeneous(parse_polynomial("x0 + y", r)));
  CHECK(is_homogeneous(parse_polynomial("0", r)));
  CHECK(weighted_degree(parse_polynomial("x0^3*y*z", r)) == 10);
}

TEST_CASE("partial derivatives") {
  const Polynomial g = parse_polynomial("z^2 - x0^10 - x1^10 - y^5", p1125());
  CHECK(partial_derivative(g, "x0") == parse_polynomial("-10*x0^9", p1125()));
  CHECK(partial_derivative(g, "z") == parse_polynomial("2*z", p1125()));
  CHECK(partial_derivative(g, 2) == parse_polynomial("-5*y^4", p1125()));
  CHECK_THROWS_AS(partial_derivative(g, "q"), DomainError);
  CHECK_THROWS_AS(partial_derivative(g, 4), DomainError);
  CHECK(partial_derivative(parse_polynomial("7", p1125()), 0).is_zero());
}

TEST_CASE("product rule on random polynomials") {
  const WeightedRing r({"a", "b", "c"}, {1, 1, 2});
  std::mt19937_64 rng(7);
  for (int round = 0; round < 5; ++round) {
    const Polynomial f = random_poly(r, 3, rng);
    const Polynomial g = random_poly(r, 4, rng);
    for (int i = 0; i < 3; ++i) {
      const Polynomial lhs = partial_derivative(f * g, i);
      const Polynomial rhs = partial_derivative(f, i) * g + f * partial_derivative(g, i);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("monomials_of_degree order and counts") {
  const std::vector<Monomial> deg1 = monomials_of_degree(p1125(), 1);
  REQUIRE(deg1.size() == 2);
  CHECK(deg1[0] == Monomial{1, 0, 0, 0});  // x0 before x1: descending lex
  CHECK(deg1[1] == Monomial{0, 1, 0, 0});

  CHECK(monomials_of_degree(p1125(), 0) == std::vector<Monomial>{{0, 0, 0, 0}});
  CHECK(monomials_of_degree(p1125(), -3).empty());

  const WeightedRing plane({"x", "y", "z"}, {1, 1, 1});
  CHECK(monomials_of_degree(plane, 3).size() == 10);
  CHECK(monomials_of_degree(plane, 5).size() == 21);

  for (const WeightedRing& ring :
       {p1125(), WeightedRing({"a", "b", "c"}, {1, 2, 3})}) {
    for (long d = 0; d <= 12; ++d) {
      const std::vector<Monomial> ms = monomials_of_degree(ring, d);
      CHECK(static_cast<long>(ms.size()) ==
            oracles::count_monomials(ring.weights, d));
      const DescLexLess less;
      for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(less(ms[i], ms[i + 1]));
      for (const Monomial& m : ms) CHECK(monomial_degree(ring, m) == d);
    }
  }
}

TEST_CASE("to_string canonical form and round trip") {
  const WeightedRing& r = p1125();
  CHECK(to_string(parse_polynomial("x0 + x1", r)) == "x0 + x1");
  CHECK(to_string(parse_polynomial("z^2-x0^10", r)) == "-x0^10 + z^2");
  CHECK(to_string(parse_polynomial("0", r)) == "0");
  CHECK(to_string(parse_polynomial("-1/2*x0*x1", r)) == "-1/2*x0*x1");
  CHECK(to_string(r, Monomial{0, 0, 0, 0}) == "1");
  CHECK(to_string(r, Monomial{2, 0, 1, 0}) == "x0^2*y");

  std::mt19937_64 rng(11);
  for (int round = 0; round < 8; ++round) {
    const Polynomial p = random_poly(r, 10, rng);
    CHECK(parse_polynomial(to_string(p), r) == p);
  }
}

TEST_CASE("arithmetic respects ring identity") {
  const WeightedRing other({"x0", "x1", "y", "z"}, {1, 1, 2, 4});
  const Polynomial a = parse_polynomial("x0", p1125());
  const Polynomial b = parse_polynomial("x0", other);
  CHECK_THROWS_AS((void)(a + b), DomainError);
  CHECK_THROWS_AS((void)(a * b), DomainError);
}
