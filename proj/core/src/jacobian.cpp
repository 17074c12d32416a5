#include "hodgekit/jacobian.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hodgekit {

JacobianContext::JacobianContext(Polynomial g) : G(std::move(g)) {
  if (G.is_zero()) throw DomainError("Jacobian context needs a nonzero polynomial");
  d = weighted_degree(G);  // throws NonHomogeneousError when mixed
  partials.reserve(G.ring.arity());
  for (int i = 0; i < G.ring.arity(); ++i) partials.push_back(partial_derivative(G, i));
  sigma = 0;
  for (int w : G.ring.weights) sigma += (d - w) - w;
}

namespace {

using ColumnIndex = std::map<Monomial, int, DescLexLess>;

// Columns indexed by ascending lex rank: the first monomial in descending
// lex order gets the highest index. With echelon pivots at the smallest
// column index, the non-pivot columns are then exactly the greedy maximal
// independent set taken in descending lex order.
ColumnIndex index_columns(const std::vector<Monomial>& monomials) {
  ColumnIndex idx;
  const int n = static_cast<int>(monomials.size());
  for (int t = 0; t < n; ++t) idx.emplace(monomials[t], n - 1 - t);
  return idx;
}

SparseRow row_from_terms(const std::vector<std::pair<int, Rat>>& raw) {
  Int denom_lcm = 1;
  for (const auto& [col, c] : raw)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<std::pair<int, Int>> entries;
  entries.reserve(raw.size());
  for (const auto& [col, c] : raw) {
    Int scaled = c.get_num() * (denom_lcm / c.get_den());
    entries.emplace_back(col, std::move(scaled));
  }
  return make_sparse_row(std::move(entries));
}

// All products (monomial of complementary degree) * dG_i expressed in the
// given columns, echelonized incrementally. Rows are deduplicated after
// normalization. A row straddling the column universe means the universe
// does not split the ideal (impossible for full graded pieces and for
// character blocks of an invariant G).
RowEchelon echelonize_ideal(const JacobianContext& ctx, long k, const ColumnIndex& col_of) {
  RowEchelon ech;
  std::set<std::vector<std::pair<int, Int>>> seen;
  for (const Polynomial& dg : ctx.partials) {
    if (dg.is_zero()) continue;
    const long mdeg = k - weighted_degree(dg);
    if (mdeg < 0) continue;
    for (const Monomial& m : monomials_of_degree(ctx.G.ring, mdeg)) {
      std::vector<std::pair<int, Rat>> raw;
      bool outside = false;
      for (const auto& [e, c] : dg.terms) {
        Monomial prod(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          prod[i] = e[i] + m[i];
        auto it = col_of.find(prod);
        if (it == col_of.end())
          outside = true;
        else
          raw.emplace_back(it->second, c);
      }
      if (raw.empty()) continue;
      if (outside)
        throw DomainError("column universe does not split the Jacobian rows");
      SparseRow row = row_from_terms(raw);
      if (row.empty()) continue;
      if (!seen.insert(row.entries).second) continue;
      ech.insert(std::move(row));
    }
  }
  return ech;
}

GradedPiece analyze(const JacobianContext& ctx, long k, std::vector<Monomial> columns) {
  std::sort(columns.begin(), columns.end(), DescLexLess{});
  for (const Monomial& m : columns)
    if (monomial_degree(ctx.G.ring, m) != k)
      throw DomainError("column monomial has the wrong degree");
  const ColumnIndex col_of = index_columns(columns);
  if (col_of.size() != columns.size())
    throw DomainError("duplicate column monomial");
  RowEchelon ech = echelonize_ideal(ctx, k, col_of);
  GradedPiece piece;
  piece.rank = ech.rank();
  const int n = static_cast<int>(columns.size());
  piece.quotient_basis.reserve(n - piece.rank);
  for (int t = 0; t < n; ++t)
    if (!ech.rows().count(n - 1 - t)) piece.quotient_basis.push_back(columns[t]);
  piece.monomials = std::move(columns);
  return piece;
}

}  // namespace

GradedPiece analyze_graded_piece(const JacobianContext& ctx, long k) {
  return analyze(ctx, k, monomials_of_degree(ctx.G.ring, k));
}

GradedPiece analyze_graded_piece(const JacobianContext& ctx, long k,
                                 std::vector<Monomial> columns) {
  return analyze(ctx, k, std::move(columns));
}

long graded_quotient_dim(const JacobianContext& ctx, long k) {
  if (k < 0) return 0;
  return analyze_graded_piece(ctx, k).dim();
}

bool ideal_membership(const JacobianContext& ctx, const Polynomial& a) {
  if (a.ring != ctx.G.ring) throw DomainError("polynomial from a different ring");
  if (a.is_zero()) return true;
  const long k = weighted_degree(a);  // throws NonHomogeneousError when mixed
  const ColumnIndex col_of = index_columns(monomials_of_degree(ctx.G.ring, k));
  RowEchelon ech = echelonize_ideal(ctx, k, col_of);
  std::vector<std::pair<int, Rat>> raw;
  for (const auto& [m, c] : a.terms) raw.emplace_back(col_of.at(m), c);
  return ech.reduces_to_zero(row_from_terms(raw));
}

bool quasi_smooth(const JacobianContext& ctx) {
  const int maxw = ctx.G.ring.max_weight();
  for (long k = ctx.sigma + 1; k <= ctx.sigma + maxw; ++k) {
    if (k < 0) continue;
    if (graded_quotient_dim(ctx, k) != 0) return false;
  }
  return true;
}

bool quasi_smooth(const Polynomial& g) { return quasi_smooth(JacobianContext(g)); }

std::vector<Int> hilbert_series_closed_form(const WeightedRing& ring,
                                            const std::vector<long>& generator_degrees,
                                            long up_to) {
  for (long dj : generator_degrees)
    if (dj < 1) throw DomainError("generator degrees must be >= 1");
  if (up_to < 0) return {};
  std::vector<Int> c(up_to + 1, 0);
  c[0] = 1;
  // numerator: multiply by (1 - t^{d_j})
  for (long dj : generator_degrees)
    for (long k = up_to; k >= dj; --k) c[k] -= c[k - dj];
  // denominator: multiply by the geometric series 1/(1 - t^{a_i})
  for (int a : ring.weights)
    for (long k = a; k <= up_to; ++k) c[k] += c[k - a];
  return c;
}

}  // namespace hodgekit
