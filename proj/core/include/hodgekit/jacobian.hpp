#pragma once

#include <vector>

#include "hodgekit/linalg.hpp"
#include "hodgekit/polyring.hpp"

namespace hodgekit {

// Precomputed data for the Jacobian ideal J_G = (dG/dx_0, ..., dG/dx_n).
struct JacobianContext {
  Polynomial G;
  std::vector<Polynomial> partials;  // one per variable; may be zero
  long d = 0;                        // weighted degree of G
  long sigma = 0;                    // socle degree: sum(d - a_i) - sum(a_i)

  // Throws DomainError (zero G) or NonHomogeneousError.
  explicit JacobianContext(Polynomial g);
};

// dim (R / J_G)_k: the monomial count at degree k minus the rank of the span
// of all products (monomial of degree k - deg dG_i) * dG_i. Returns 0 when
// the degree has no monomials (including k < 0).
long graded_quotient_dim(const JacobianContext& ctx, long k);

// True iff homogeneous A lies in J_G; the zero polynomial is a member.
bool ideal_membership(const JacobianContext& ctx, const Polynomial& a);

// Window criterion: G is quasi-smooth iff (R/J_G)_k = 0 for every k in
// [sigma + 1, sigma + max weight]. Vanishing on a window of width max weight
// forces vanishing in all higher degrees (every monomial above the window is
// a variable times a monomial at or above the window base), so the scan
// decides finite-dimensionality of R/J_G, which is equivalent to the
// partials having no common zero away from the origin.
bool quasi_smooth(const Polynomial& g);
bool quasi_smooth(const JacobianContext& ctx);

// Coefficients through degree up_to of
//   prod_j (1 - t^{d_j}) / prod_i (1 - t^{a_i}),
// the Hilbert series of R/(f_1..f_m) when the f_j form a regular sequence.
// Exact truncated power-series arithmetic; requires all d_j >= 1.
std::vector<Int> hilbert_series_closed_form(const WeightedRing& ring,
                                            const std::vector<long>& generator_degrees,
                                            long up_to);

// One graded piece of R/J_G over a chosen column universe. `monomials` is
// the universe in descending lex order; `quotient_basis` is the greedy
// maximal independent subset modulo the ideal span, which equals the
// complement of the echelon pivot set when columns are indexed by ascending
// lex rank (first-considered monomial = highest column index).
struct GradedPiece {
  std::vector<Monomial> monomials;
  long rank = 0;
  std::vector<Monomial> quotient_basis;
  long dim() const { return static_cast<long>(monomials.size()) - rank; }
};

GradedPiece analyze_graded_piece(const JacobianContext& ctx, long k);
// Restricted column universe: every generated row must lie entirely inside
// or entirely outside the universe (holds for character blocks of an
// invariant G; violations throw DomainError).
GradedPiece analyze_graded_piece(const JacobianContext& ctx, long k,
                                 std::vector<Monomial> columns);

}  // namespace hodgekit
