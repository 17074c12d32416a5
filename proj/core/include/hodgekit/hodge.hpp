#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hodgekit/jacobian.hpp"
#include "hodgekit/polyring.hpp"

namespace hodgekit {

// Primitive Hodge numbers [h^{n-1,0}, h^{n-2,1}, ..., h^{0,n-1}] of a
// hypersurface of dimension n-1. Palindromic for quasi-smooth inputs.
struct HodgeVector {
  std::vector<long> entries;
  bool operator==(const HodgeVector&) const = default;
};

std::string to_string(const HodgeVector& h);  // "[2, 28, 2]"

// A character of the acting group, written additively: one exponent per
// group generator, reduced mod that generator's order.
struct Character {
  std::vector<int> values;
  auto operator<=>(const Character&) const = default;
};

std::string to_string(const Character& chi);  // "(0, 1)"

// Diagonal action of a finite abelian group with invariant factors
// (m_1, ..., m_r): generator j scales variable i by zeta_{m_j}^{exponents[j][i]}.
// Construction validates that G is fixed exactly: every term of G must have
// trivial character under every generator.
struct DiagonalAction {
  std::vector<int> invariant_factors;
  std::vector<std::vector<int>> exponents;  // [generator][variable]

  DiagonalAction(std::vector<int> factors, std::vector<std::vector<int>> exps,
                 const Polynomial& g);

  long group_order() const;
  Character character_of(const Monomial& m) const;
  // Character of the form Omega = i(E) dx_0 ^ ... ^ dx_n: each generator
  // scales Omega by the product of all its coordinate eigenvalues, so the
  // exponent is the per-variable sum.
  Character omega_character() const;
  Character add(const Character& a, const Character& b) const;
  std::vector<Character> all_characters() const;
};

// Per-character Hodge vectors plus the total; the componentwise sum over
// characters equals the total.
struct EigenReport {
  std::map<Character, HodgeVector> blocks;  // every character of the group
  HodgeVector total;
};

// Griffiths residues: entry q (= 1..n) is dim (R/J_G) at degree q*d - sum(a_i),
// zero when that degree is negative. Requires quasi-smooth G and arity >= 3.
HodgeVector hodge_numbers_primitive(const Polynomial& g);

// Monomials of degree q*d - sum(a_i) whose residue classes A*Omega/G^q form a
// basis of F^{n-q}/F^{n-q+1}: the greedy maximal independent set modulo J_G
// in the fixed descending-lex order.
std::vector<Monomial> residue_basis(const Polynomial& g, int q);

// Partitions each residue degree by the class character
//   chi(Res(A*Omega/G^q)) = chi(A) + chi(Omega)
// and computes quotient dimensions per block; blocks are exact because the
// Jacobian matrix is block-diagonal by character when G is invariant.
EigenReport eigen_hodge_numbers(const Polynomial& g, const DiagonalAction& action);

}  // namespace hodgekit
