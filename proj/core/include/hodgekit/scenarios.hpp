#pragma once

#include <optional>

#include "hodgekit/hodge.hpp"
#include "hodgekit/lattice.hpp"

namespace hodgekit {

// End-to-end report for the bidouble-cover surface z^2 = F(x0^2, x1^2, y) in
// P(1,1,2,5). When quasi_smooth is false, total and eigen stay empty: the
// failure is reported, never silently computed past.
struct HorikawaReport {
  Polynomial G;  // z^2 - F(x0^2, x1^2, y), degree 10 in P(1,1,2,5)
  bool y5_present = false;
  bool quasi_smooth = false;
  std::optional<HodgeVector> total;
  std::optional<EigenReport> eigen;
};

// F: a quintic form in three variables, supplied in a rank-3 ring with
// weights (2,2,2) (so its weighted degree is 10). Substitutes u <- x0^2,
// v <- x1^2, w <- y, forms G = z^2 - F, and runs the quasi-smoothness,
// Hodge-number, and (Z/2)^2 eigenspace pipeline with the sign actions
// sigma_x0: x0 -> -x0 and sigma_x1: x1 -> -x1.
HorikawaReport horikawa_surface(const Polynomial& f);

// The rank-6 lattice spanned by {l', e_1..e_5} with (l')^2 = e_i^2 = -2,
// l'.e_i = 1, e_i.e_j = 0. The entries are pinned by the class checks
// h^2 = 2 and h.l' = 1 for h = 2l' + e_1 + ... + e_5 (pullback of a line).
Lattice degree5_pair_lattice();

struct LatticeSplitReport {
  Lattice M;                // embedded sublattice, Gram exactly U(2) + D4
  Lattice T;                // orthogonal complement inside the K3 lattice
  IntMat embedding_basis;   // 6 x 22
  IntMat complement_basis;  // 16 x 22
  bool M_primitive = false;
  Signature T_signature;
  std::vector<Int> T_disc;
  bool genus_M_ok = false;   // degree5_pair_lattice vs embedded M
  bool genus_T_ok = false;   // T vs U + U(2) + D4 + E8
  bool h_square_ok = false;  // (2l' + sum e_i)^2 == 2
  bool h_dot_l_ok = false;   // (2l' + sum e_i) . l' == 1
};

// Embeds M into the K3 lattice (U(2) diagonally across the first two U
// factors; D4 as a root subdiagram of the first E8), takes the orthogonal
// complement T, and verifies primitivity, signature (2,14), discriminant
// group (Z/2)^4, and both genus identifications.
LatticeSplitReport k3_orthogonal_split();

struct ModuliDimensions {
  long branch_data = 0;   // (quintics mod scale) + two lines - dim PGL3
  long hypersurface = 0;  // quintic coefficient count - automorphism dim
  bool operator==(const ModuliDimensions&) const = default;
};

// Both counts from first principles via monomial enumeration; each is 16.
ModuliDimensions moduli_dimensions();

}  // namespace hodgekit
