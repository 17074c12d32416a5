#include "doctest.h"
#include "hodgekit/hodge.hpp"
#include "oracles.hpp"

using namespace hodgekit;

namespace {

WeightedRing p1125() { return WeightedRing({"x0", "x1", "y", "z"}, {1, 1, 2, 5}); }

Polynomial horikawa_fermat() {
  return parse_polynomial("z^2 - x0^10 - x1^10 - y^5", p1125());
}

// Fermat quotient basis by hand: J = (x0^9, x1^9, y^4, z), so the classes of
// x0^a x1^b y^c with a,b <= 8, c <= 3 form a basis of R/J.
long fermat_box_count(long k) {
  long count = 0;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int c = 0; c <= 3; ++c)
        if (a + b + 2 * c == k) ++count;
  return count;
}

}  // namespace

TEST_CASE("primitive Hodge numbers, pinned") {
  CHECK(hodge_numbers_primitive(horikawa_fermat()) == HodgeVector{{2, 28, 2}});

  const WeightedRing p3({"x", "y", "z", "w"}, {1, 1, 1, 1});
  CHECK(hodge_numbers_primitive(parse_polynomial("x^4 + y^4 + z^4 + w^4", p3)) ==
        HodgeVector{{1, 19, 1}});
  CHECK(hodge_numbers_primitive(parse_polynomial("x^3 + y^3 + z^3 + w^3", p3)) ==
        HodgeVector{{0, 6, 0}});

  const WeightedRing p2({"x", "y", "z"}, {1, 1, 1});
  CHECK(hodge_numbers_primitive(parse_polynomial("x^3 + y^3 + z^3", p2)) ==
        HodgeVector{{1, 1}});

  const WeightedRing p4({"x", "y", "z", "w", "v"}, {1, 1, 1, 1, 1});
  CHECK(hodge_numbers_primitive(
            parse_polynomial("x^5 + y^5 + z^5 + w^5 + v^5", p4)) ==
        HodgeVector{{1, 101, 101, 1}});

  CHECK(to_string(HodgeVector{{2, 28, 2}}) == "[2, 28, 2]");
}

TEST_CASE("Hodge numbers reject bad input") {
  CHECK_THROWS_AS(hodge_numbers_primitive(
                      parse_polynomial("z^2 - x0^10 - x1^10", p1125())),
                  DomainError);  // not quasi-smooth
  const WeightedRing pair({"x", "y"}, {1, 1});
  CHECK_THROWS_AS(hodge_numbers_primitive(parse_polynomial("x^2 + y^2", pair)),
                  DomainError);  // arity < 3
}

TEST_CASE("Fermat quotient dimensions match the combinatorial box") {
  const JacobianContext ctx(horikawa_fermat());
  for (long k = 0; k <= 27; ++k)
    CHECK(graded_quotient_dim(ctx, k) == fermat_box_count(k));
}

TEST_CASE("coefficient scaling does not move Hodge numbers") {
  CHECK(hodge_numbers_primitive(parse_polynomial(
            "z^2 - 1024*x0^10 - x1^10 - y^5", p1125())) == HodgeVector{{2, 28, 2}});
}

TEST_CASE("residue bases") {
  const Polynomial g = horikawa_fermat();
  CHECK(residue_basis(g, 1) ==
        std::vector<Monomial>{{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(residue_basis(g, 3) ==
        std::vector<Monomial>{{8, 7, 3, 0}, {7, 8, 3, 0}});
  const JacobianContext ctx(g);
  CHECK(residue_basis(g, 2) == oracles::brute_greedy_basis(ctx, 11));
  CHECK(residue_basis(g, 2).size() == 28);

  CHECK_THROWS_AS(residue_basis(g, 0), DomainError);
  CHECK_THROWS_AS(residue_basis(g, 4), DomainError);
  CHECK_THROWS_AS(residue_basis(parse_polynomial("z^2 - x0^10 - x1^10", p1125()), 1),
                  DomainError);  // not quasi-smooth
}

TEST_CASE("diagonal action bookkeeping") {
  const Polynomial g = horikawa_fermat();
  const DiagonalAction act({2, 2}, {{1, 0, 0, 0}, {0, 1, 0, 0}}, g);
  CHECK(act.group_order() == 4);
  CHECK(act.omega_character() == Character{{1, 1}});
  CHECK(act.character_of({3, 2, 1, 0}) == Character{{1, 0}});
  CHECK(act.add(Character{{1, 1}}, Character{{1, 0}}) == Character{{0, 1}});
  CHECK(to_string(Character{{0, 1}}) == "(0, 1)");

  const DiagonalAction mixed({2, 3}, {{1, 0, 0, 0}, {0, 0, 0, 0}}, g);
  const std::vector<Character> chars = mixed.all_characters();
  REQUIRE(chars.size() == 6);
  CHECK(chars.front() == Character{{0, 0}});
  CHECK(chars[1] == Character{{0, 1}});  // last coordinate moves fastest
  CHECK(chars.back() == Character{{1, 2}});

  // negative exponents are reduced into [0, m)
  const DiagonalAction neg({2}, {{-1, 0, 0, 0}}, g);
  CHECK(neg.exponents[0][0] == 1);

  CHECK_THROWS_AS(DiagonalAction({4}, {{1, 0, 0, 0}}, g), DomainError);  // x0^10 moves
  CHECK_THROWS_AS(DiagonalAction({0}, {{0, 0, 0, 0}}, g), DomainError);
  CHECK_THROWS_AS(DiagonalAction({2, 2}, {{1, 0, 0, 0}}, g), DomainError);
  CHECK_THROWS_AS(DiagonalAction({2}, {{1, 0}}, g), DomainError);
  CHECK_THROWS_AS(DiagonalAction({5000}, {{0, 0, 0, 0}}, g), DomainError);  // order cap
}

TEST_CASE("eigenspace decomposition of the bidouble cover") {
  const Polynomial g = horikawa_fermat();
  const DiagonalAction act({2, 2}, {{1, 0, 0, 0}, {0, 1, 0, 0}}, g);
  const EigenReport report = eigen_hodge_numbers(g, act);

  CHECK(report.total == HodgeVector{{2, 28, 2}});
  REQUIRE(report.blocks.size() == 4);
  CHECK(report.blocks.at(Character{{0, 1}}) == HodgeVector{{1, 14, 1}});
  CHECK(report.blocks.at(Character{{1, 0}}) == HodgeVector{{1, 14, 1}});
  CHECK(report.blocks.at(Character{{0, 0}}) == HodgeVector{{0, 0, 0}});
  CHECK(report.blocks.at(Character{{1, 1}}) == HodgeVector{{0, 0, 0}});

  // blocks partition the total componentwise
  for (std::size_t q = 0; q < report.total.entries.size(); ++q) {
    long sum = 0;
    for (const auto& [chi, h] : report.blocks) sum += h.entries[q];
    CHECK(sum == report.total.entries[q]);
  }

  // middle entry of the (0,1) block by hand: classes A*Omega/G^2 with
  // chi(A) + chi(Omega) = (0,1) means A = x0^a x1^b y^c, a odd, b even
  long by_hand = 0;
  for (int a = 1; a <= 8; a += 2)
    for (int b = 0; b <= 8; b += 2)
      for (int c = 0; c <= 3; ++c)
        if (a + b + 2 * c == 11) ++by_hand;
  CHECK(by_hand == 14);
  CHECK(report.blocks.at(Character{{0, 1}}).entries[1] == by_hand);
}

TEST_CASE("trivial group reproduces the total") {
  const Polynomial g = horikawa_fermat();
  const DiagonalAction trivial({}, {}, g);
  CHECK(trivial.group_order() == 1);
  const EigenReport report = eigen_hodge_numbers(g, trivial);
  REQUIRE(report.blocks.size() == 1);
  CHECK(report.blocks.begin()->first == Character{});
  CHECK(report.blocks.begin()->second == report.total);
}

TEST_CASE("eigen decomposition revalidates the polynomial") {
  const Polynomial g = horikawa_fermat();
  const DiagonalAction act({2}, {{1, 0, 0, 0}}, g);
  // same ring, but x0^9*x1 has character 1: the action moves it
  const Polynomial other = parse_polynomial("z^2 - x0^9*x1 - x1^10 - y^5", p1125());
  CHECK_THROWS_AS(eigen_hodge_numbers(other, act), DomainError);

  const WeightedRing p2({"x", "y", "z"}, {1, 1, 1});
  const Polynomial cubic = parse_polynomial("x^3 + y^3 + z^3", p2);
  const DiagonalAction for_cubic({3}, {{1, 1, 1}}, cubic);
  CHECK_THROWS_AS(eigen_hodge_numbers(g, for_cubic), DomainError);  // wrong ring
}

TEST_CASE("cyclic action on the Fermat quartic") {
  const WeightedRing p3({"x", "y", "z", "w"}, {1, 1, 1, 1});
  const Polynomial g = parse_polynomial("x^4 + y^4 + z^4 + w^4", p3);
  const DiagonalAction act({4}, {{1, 0, 0, 0}}, g);
  const EigenReport report = eigen_hodge_numbers(g, act);
  CHECK(report.total == HodgeVector{{1, 19, 1}});
  REQUIRE(report.blocks.size() == 4);
  long middle = 0;
  for (const auto& [chi, h] : report.blocks) middle += h.entries[1];
  CHECK(middle == 19);
  // h^{2,0} sits in the character of Omega + (degree-0 class) = (1)
  CHECK(report.blocks.at(Character{{1}}).entries[0] == 1);
}
