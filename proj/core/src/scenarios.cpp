#include "hodgekit/scenarios.hpp"

#include <stdexcept>
#include <utility>

namespace hodgekit {

namespace {

const WeightedRing& ambient_p1125() {
  static const WeightedRing ring({"x0", "x1", "y", "z"}, {1, 1, 2, 5});
  return ring;
}

}  // namespace

HorikawaReport horikawa_surface(const Polynomial& f) {
  if (f.ring.arity() != 3 || f.ring.weights != std::vector<int>{2, 2, 2})
    throw DomainError("branch form must live in a rank-3 ring with weights (2,2,2)");
  if (weighted_degree(f) != 10)
    throw DomainError("branch form must be a quintic, i.e. weighted degree 10");

  const WeightedRing& ring = ambient_p1125();
  Polynomial g(ring);
  g.add_term({0, 0, 0, 2}, Rat(1));  // z^2
  bool y5 = false;
  for (const auto& [m, c] : f.terms) {
    if (m == Monomial{0, 0, 5}) y5 = true;
    // u <- x0^2, v <- x1^2, w <- y keeps weighted degree 10 in P(1,1,2,5)
    g.add_term({2 * m[0], 2 * m[1], m[2], 0}, -c);
  }

  HorikawaReport report{std::move(g)};
  report.y5_present = y5;

  const JacobianContext ctx(report.G);
  report.quasi_smooth = quasi_smooth(ctx);
  if (!report.quasi_smooth) return report;

  // Quasi-smoothness forces the w^5 term: without it every partial vanishes
  // along the y-axis, so [0:0:1:0] would be a singular point.
  if (!y5)
    throw std::logic_error("quasi-smooth cover without a w^5 term contradicts the window check");

  const DiagonalAction action({2, 2}, {{1, 0, 0, 0}, {0, 1, 0, 0}}, report.G);
  report.eigen = eigen_hodge_numbers(report.G, action);
  report.total = report.eigen->total;
  return report;
}

Lattice degree5_pair_lattice() {
  // Basis (l', e_1, ..., e_5): a rational curve plus five disjoint (-2)-curves
  // each meeting l' once.
  IntMat gram(6, std::vector<Int>(6, 0));
  for (int i = 0; i < 6; ++i) gram[i][i] = -2;
  for (int i = 1; i < 6; ++i) gram[0][i] = gram[i][0] = 1;
  return Lattice(std::move(gram), "M");
}

LatticeSplitReport k3_orthogonal_split() {
  const Lattice k3 = lattice_K3();
  const int n = k3.rank();  // 22: U+U+U at 0..5, E8 at 6..13, E8 at 14..21

  // U(2) diagonally across the first two U factors: {e1+e2, f1+f2}.
  IntMat basis(6, std::vector<Int>(n, 0));
  basis[0][0] = 1;
  basis[0][2] = 1;
  basis[1][1] = 1;
  basis[1][3] = 1;
  // D4 as a root subdiagram of the first E8: the branch node of the Dynkin
  // diagram (local index 2) with its three neighbours (1, 3, 7), ordered so
  // the Gram matrix equals lattice_D(4) on the nose.
  const int d4_nodes[4] = {1, 2, 3, 7};
  for (int i = 0; i < 4; ++i) basis[2 + i][6 + d4_nodes[i]] = 1;

  const SublatticeEmbedding m_emb(k3, basis);
  LatticeSplitReport report{m_emb.sublattice("M"), Lattice(IntMat{}),
                            basis, IntMat{}};

  const Lattice model = direct_sum({lattice_U(2), lattice_D(4)});
  if (report.M.gram != model.gram)
    throw std::logic_error("embedded Gram matrix is not U(2) + D4");

  report.M_primitive = is_primitive(m_emb);

  const SublatticeEmbedding t_emb = orthogonal_complement(m_emb);
  report.complement_basis = t_emb.basis;
  report.T = t_emb.sublattice("T");
  if (report.T.rank() != 16)
    throw std::logic_error("orthogonal complement has the wrong rank");
  const IntMat cross = mat_mul(mat_mul(basis, k3.gram), transpose(t_emb.basis));
  for (const auto& row : cross)
    for (const Int& x : row)
      if (x != 0) throw std::logic_error("complement fails orthogonality");

  report.T_signature = signature(report.T);
  report.T_disc = discriminant_group(report.T);
  report.genus_M_ok = same_genus(degree5_pair_lattice(), report.M);
  report.genus_T_ok = same_genus(
      report.T, direct_sum({lattice_U(), lattice_U(2), lattice_D(4), lattice_E8()}));

  // h = 2l' + e_1 + ... + e_5, the pullback of a line through the five points.
  const Lattice m_abs = degree5_pair_lattice();
  std::vector<Int> h = {2, 1, 1, 1, 1, 1};
  Int h_sq = 0, h_dot_l = 0;
  for (int i = 0; i < 6; ++i) {
    Int row_i = 0;
    for (int j = 0; j < 6; ++j) row_i += m_abs.gram[i][j] * h[j];
    h_sq += h[i] * row_i;
    if (i == 0) h_dot_l = row_i;
  }
  report.h_square_ok = (h_sq == 2);
  report.h_dot_l_ok = (h_dot_l == 1);
  return report;
}

ModuliDimensions moduli_dimensions() {
  const WeightedRing plane({"u", "v", "w"}, {1, 1, 1});
  const long quintics = static_cast<long>(monomials_of_degree(plane, 5).size());
  const long line_moduli = static_cast<long>(monomials_of_degree(plane, 1).size()) - 1;
  const long pgl3 = plane.arity() * plane.arity() - 1;

  // Branch data: a plane quintic up to scale, two lines, modulo PGL3.
  ModuliDimensions dims;
  dims.branch_data = (quintics - 1) + line_moduli + line_moduli - pgl3;

  // Hypersurface side: quintic coefficients minus the automorphisms that
  // preserve the shape z^2 - F(x0^2, x1^2, y): GL2 on the weight-1 pair plus
  // a scaling of each weight-2 variable.
  const WeightedRing& amb = ambient_p1125();
  long weight1 = 0, weight2 = 0;
  for (int w : amb.weights) {
    if (w == 1) ++weight1;
    if (w == 2) ++weight2;
  }
  dims.hypersurface = quintics - (weight1 * weight1 + weight2);
  return dims;
}

}  // namespace hodgekit
