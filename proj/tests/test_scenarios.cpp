#include "doctest.h"
#include "hodgekit/scenarios.hpp"

using namespace hodgekit;

namespace {

WeightedRing branch_ring() { return WeightedRing({"u", "v", "w"}, {2, 2, 2}); }

WeightedRing p1125() { return WeightedRing({"x0", "x1", "y", "z"}, {1, 1, 2, 5}); }

}  // namespace

TEST_CASE("bidouble cover of the Fermat quintic branch") {
  const HorikawaReport report =
      horikawa_surface(parse_polynomial("u^5 + v^5 + w^5", branch_ring()));
  CHECK(report.G == parse_polynomial("z^2 - x0^10 - x1^10 - y^5", p1125()));
  CHECK(report.y5_present);
  CHECK(report.quasi_smooth);
  REQUIRE(report.total.has_value());
  REQUIRE(report.eigen.has_value());
  CHECK(*report.total == HodgeVector{{2, 28, 2}});
  CHECK(report.eigen->total == *report.total);
  REQUIRE(report.eigen->blocks.size() == 4);
  CHECK(report.eigen->blocks.at(Character{{0, 1}}) == HodgeVector{{1, 14, 1}});
  CHECK(report.eigen->blocks.at(Character{{1, 0}}) == HodgeVector{{1, 14, 1}});
  CHECK(report.eigen->blocks.at(Character{{0, 0}}) == HodgeVector{{0, 0, 0}});
  CHECK(report.eigen->blocks.at(Character{{1, 1}}) == HodgeVector{{0, 0, 0}});
}

TEST_CASE("perturbed branch curve keeps the same Hodge numbers") {
  const HorikawaReport report = horikawa_surface(
      parse_polynomial("u^5 + v^5 + w^5 - 2*u*v^3*w", branch_ring()));
  CHECK(report.G == parse_polynomial("z^2 - x0^10 - x1^10 - y^5 + 2*x0^2*x1^6*y",
                                     p1125()));
  CHECK(report.quasi_smooth);
  REQUIRE(report.total.has_value());
  REQUIRE(report.eigen.has_value());
  CHECK(*report.total == HodgeVector{{2, 28, 2}});
  CHECK(report.eigen->blocks.at(Character{{0, 1}}) == HodgeVector{{1, 14, 1}});
}

TEST_CASE("missing w^5 term: reported, not computed past") {
  const HorikawaReport report =
      horikawa_surface(parse_polynomial("u^5 + v^5", branch_ring()));
  CHECK(!report.y5_present);
  CHECK(!report.quasi_smooth);
  CHECK(!report.total.has_value());
  CHECK(!report.eigen.has_value());

  // w^5 present but the cover still fails along the x1 axis
  const HorikawaReport axis =
      horikawa_surface(parse_polynomial("u^5 + w^5", branch_ring()));
  CHECK(axis.y5_present);
  CHECK(!axis.quasi_smooth);
  CHECK(!axis.total.has_value());
}

TEST_CASE("branch form validation") {
  CHECK_THROWS_AS(horikawa_surface(parse_polynomial("u^2", branch_ring())),
                  DomainError);  // degree 4, not 10
  CHECK_THROWS_AS(horikawa_surface(Polynomial(branch_ring())), DomainError);
  const WeightedRing plain({"u", "v", "w"}, {1, 1, 1});
  CHECK_THROWS_AS(horikawa_surface(parse_polynomial("u^5 + v^5 + w^5", plain)),
                  DomainError);  // wrong weights
  const WeightedRing pair({"u", "v"}, {2, 2});
  CHECK_THROWS_AS(horikawa_surface(parse_polynomial("u^5 + v^5", pair)),
                  DomainError);  // wrong arity
  CHECK_THROWS_AS(
      horikawa_surface(parse_polynomial("u^5 + v^5 + w^4", branch_ring())),
      NonHomogeneousError);
}

TEST_CASE("the rank-6 pair lattice") {
  const Lattice m = degree5_pair_lattice();
  CHECK(m.label == "M");
  CHECK(m.rank() == 6);
  for (int i = 0; i < 6; ++i) CHECK(m.gram[i][i] == -2);
  for (int i = 1; i < 6; ++i) {
    CHECK(m.gram[0][i] == 1);
    CHECK(m.gram[i][0] == 1);
    for (int j = 1; j < 6; ++j)
      if (i != j) CHECK(m.gram[i][j] == 0);
  }
  CHECK(m.det() == -16);
  CHECK(m.is_even());
  CHECK(signature(m) == Signature{1, 5, 0});
}

TEST_CASE("K3 orthogonal split") {
  const LatticeSplitReport report = k3_orthogonal_split();
  CHECK(report.M.gram == direct_sum({lattice_U(2), lattice_D(4)}).gram);
  CHECK(report.M_primitive);
  CHECK(report.T.rank() == 16);
  CHECK(report.T.det() == 16);
  CHECK(report.T_signature == Signature{2, 14, 0});
  CHECK(report.T_disc == std::vector<Int>{2, 2, 2, 2});
  CHECK(report.genus_M_ok);
  CHECK(report.genus_T_ok);
  CHECK(report.h_square_ok);
  CHECK(report.h_dot_l_ok);

  REQUIRE(report.embedding_basis.size() == 6);
  REQUIRE(report.complement_basis.size() == 16);
  for (const auto& row : report.embedding_basis) CHECK(row.size() == 22);

  // the two bases really are mutually orthogonal inside the K3 lattice
  const IntMat cross = mat_mul(mat_mul(report.embedding_basis, lattice_K3().gram),
                               transpose(report.complement_basis));
  for (const auto& row : cross)
    for (const Int& x : row) CHECK(x == 0);

  CHECK(is_primitive(SublatticeEmbedding(lattice_K3(), report.complement_basis)));
  CHECK(same_genus(report.T, direct_sum({lattice_U(), lattice_U(2), lattice_D(4),
                                         lattice_E8()})));
}

TEST_CASE("moduli dimensions agree") {
  const ModuliDimensions dims = moduli_dimensions();
  CHECK(dims.branch_data == 16);
  CHECK(dims.hypersurface == 16);
  CHECK(dims == ModuliDimensions{16, 16});
}
