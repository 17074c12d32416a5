#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgekit/numeric.hpp"

namespace hodgekit {

// Weighted polynomial ring data: variable names plus positive integer
// weights (a_0, ..., a_n). Rings are small value types; polynomials carry
// their ring by value.
struct WeightedRing {
  std::vector<std::string> variables;
  std::vector<int> weights;

  WeightedRing(std::vector<std::string> vars, std::vector<int> wts);

  int arity() const { return static_cast<int>(variables.size()); }
  long weight_sum() const;
  int max_weight() const;
  std::optional<int> index_of(const std::string& name) const;

  bool operator==(const WeightedRing&) const = default;
};

// Exponent vector, one entry per ring variable.
using Monomial = std::vector<int>;

long monomial_degree(const WeightedRing& ring, const Monomial& m);

// Monomial comparison: descending lexicographic on exponent vectors. This is
// the one deterministic order used everywhere (matrix columns, reported
// bases, printing), so all outputs are reproducible.
struct DescLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

using TermMap = std::map<Monomial, Rat, DescLexLess>;

struct Polynomial {
  WeightedRing ring;
  TermMap terms;  // no zero coefficients stored

  explicit Polynomial(WeightedRing r) : ring(std::move(r)) {}
  Polynomial(WeightedRing r, TermMap t);

  bool is_zero() const { return terms.empty(); }

  Polynomial operator+(const Polynomial&) const;
  Polynomial operator-(const Polynomial&) const;
  Polynomial operator*(const Polynomial&) const;
  Polynomial operator-() const;
  Polynomial operator*(const Rat&) const;
  bool operator==(const Polynomial&) const = default;

  // Adds c * x^m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rat& c);
};

// Weighted degree of a homogeneous nonzero polynomial. Throws DomainError on
// the zero polynomial (degree undefined) and NonHomogeneousError when terms
// of several degrees are present.
long weighted_degree(const Polynomial& p);

bool is_homogeneous(const Polynomial& p);

// Formal partial derivative with respect to the named variable.
Polynomial partial_derivative(const Polynomial& p, const std::string& var);
Polynomial partial_derivative(const Polynomial& p, int var_index);

// All monomials of weight-degree exactly k, in descending lexicographic
// order. Empty when none exist (including every k < 0).
std::vector<Monomial> monomials_of_degree(const WeightedRing& ring, long k);

// Grammar: terms joined by + / -; a term is an optional integer or
// integer/integer coefficient joined by '*' with factors `var` or `var^exp`;
// whitespace is insignificant; variables match [A-Za-z][A-Za-z0-9]*.
Polynomial parse_polynomial(const std::string& src, const WeightedRing& ring);

// Canonical form: terms in descending lex order, exact p/q coefficients,
// '*' between coefficient and variables, '^' for exponents > 1.
// parse_polynomial(to_string(p)) == p.
std::string to_string(const Polynomial& p);
std::string to_string(const WeightedRing& ring, const Monomial& m);

// Ring declaration string "x0,x1,y,z;1,1,2,5".
WeightedRing parse_ring(const std::string& decl);

}  // namespace hodgekit
