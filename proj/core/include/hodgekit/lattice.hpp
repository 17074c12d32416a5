#pragma once

#include <string>
#include <vector>

#include "hodgekit/linalg.hpp"

namespace hodgekit {

// An integral lattice: a symmetric integer Gram matrix plus an optional
// label. Evenness is computed, never assumed.
struct Lattice {
  IntMat gram;
  std::string label;

  explicit Lattice(IntMat g, std::string name = "");

  int rank() const { return static_cast<int>(gram.size()); }
  bool is_even() const;
  Int det() const;
};

// Constructors. Root lattices are NEGATIVE definite (diagonal -2, Dynkin
// off-diagonal +1), the K3 convention; rescale(L, -1) recovers the positive
// convention. K3 lattice = U + U + U + E8 + E8, signature (3,19), det -1.
Lattice lattice_U(int m = 1);  // U(m), m != 0
Lattice lattice_A(int n);
Lattice lattice_D(int n);  // n >= 1; D1 = A1, D2 = A1+A1, D3 = A3-shaped
Lattice lattice_E8();
Lattice lattice_K3();
Lattice rescale(const Lattice& l, int m);
Lattice direct_sum(const std::vector<Lattice>& parts);

Signature signature(const Lattice& l);

// Nontrivial invariant factors of A_L = L*/L (Smith form of the Gram matrix).
// Throws DomainError when the lattice is degenerate.
std::vector<Int> discriminant_group(const Lattice& l);

// The discriminant quadratic form on A_L for an even nondegenerate lattice:
// generators g_i of the cyclic factors as rational vectors in L (x) Q, with
// q(x) = x^T gram x mod 2Z (values in [0,2)) and b(x,y) = x^T gram y mod Z
// (values in [0,1)). Group elements are coefficient tuples against the
// generators, entry i taken mod invariant_factors[i].
struct DiscriminantForm {
  std::vector<Int> invariant_factors;  // nontrivial, ascending divisibility
  RatMat generators;                   // rows, one per invariant factor
  IntMat gram;                         // Gram matrix of the source lattice

  long generator_count() const { return static_cast<long>(invariant_factors.size()); }
  Int group_order() const;
  std::vector<Rat> element(const std::vector<Int>& coeffs) const;
  Rat q_of(const std::vector<Int>& coeffs) const;
  Rat b_of(const std::vector<Int>& a, const std::vector<Int>& b) const;
};

DiscriminantForm discriminant_form(const Lattice& l);  // throws if odd/degenerate

// A sublattice given by generator rows in ambient coordinates. Rows must be
// linearly independent over Q (zero rows count: a rank-0 sublattice is fine).
struct SublatticeEmbedding {
  Lattice ambient;
  IntMat basis;  // rows

  SublatticeEmbedding(Lattice amb, IntMat rows);

  int sub_rank() const { return static_cast<int>(basis.size()); }
  Lattice sublattice(const std::string& name = "") const;  // gram = B G B^T
};

// All ambient vectors orthogonal to every generator: the saturated integer
// kernel of basis * gram_ambient, hence primitive by construction.
SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& e);

// True iff the sublattice is saturated: every Smith invariant factor of the
// basis matrix is 1.
bool is_primitive(const SublatticeEmbedding& e);

// Genus comparison for even nondegenerate lattices: signatures must match
// and the discriminant forms must be isomorphic (exhaustive backtracking
// over generator images, pruned by order, q, and b constraints; the final
// map is checked to be surjective). By Nikulin theory this determines the
// isometry class for the indefinite lattices in scope. When the discriminant
// group order exceeds `bound`, throws UndecidedError - never a silent false.
bool same_genus(const Lattice& a, const Lattice& b, const Int& bound = Int(65536));

}  // namespace hodgekit
