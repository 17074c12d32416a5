#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hodgekit/numeric.hpp"

namespace hodgekit {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& a);
bool is_symmetric(const IntMat& a);

// Fraction-free determinant (Bareiss).
Int det_bareiss(IntMat a);

// Rank over the rationals.
long rank_int(const IntMat& a);

struct Signature {
  long positive = 0;
  long negative = 0;
  long zero = 0;
  bool operator==(const Signature&) const = default;
};

// Signature of a symmetric integer matrix by exact rational congruence
// diagonalization. When every remaining diagonal entry vanishes, the 2x2
// trick (add row j to row i and column j to column i, turning A[i][i] into
// 2*A[i][j]) restores a pivot; both steps are congruences, so Sylvester's
// law applies. The column operation after each row elimination must use the
// already-updated column, not the symmetric copy of the pivot row.
Signature signature_of(const IntMat& gram);

// D = U * M * V with U, V unimodular, D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SnfResult {
  IntMat D, U, V;
};
SnfResult smith_normal_form(const IntMat& m);

// Rows spanning the saturated integer kernel {x in Z^cols : a*x = 0}. The
// basis comes from the unimodular column transform of the Smith form, so the
// returned sublattice is primitive by construction.
IntMat integer_kernel(const IntMat& a);

// Exact inverse; throws DomainError when singular.
RatMat rat_inverse(const IntMat& a);

// --- sparse exact echelon -------------------------------------------------

// Integer row with entries sorted by column index and content (gcd of the
// coefficients) stripped; the leading entry is the smallest column index.
struct SparseRow {
  std::vector<std::pair<int, Int>> entries;
  bool empty() const { return entries.empty(); }
  int lead() const { return entries.front().first; }
  bool operator==(const SparseRow&) const = default;
};

// Sorts, combines duplicate columns, drops zeros, strips content, and makes
// the leading coefficient positive.
SparseRow make_sparse_row(std::vector<std::pair<int, Int>> entries);

// Incremental fraction-free row echelon over the integers, for the large
// sparse Jacobian-ideal matrices. Row order does not affect the rank or the
// pivot column set (both are invariants of the row span).
class RowEchelon {
 public:
  // Reduces r against the basis and inserts the remainder when nonzero.
  // Returns true iff the rank increased.
  bool insert(SparseRow r);
  // Membership test: true iff r lies in the current row span.
  bool reduces_to_zero(SparseRow r) const;
  long rank() const { return static_cast<long>(rows_.size()); }
  const std::map<int, SparseRow>& rows() const { return rows_; }

 private:
  SparseRow reduce(SparseRow r) const;
  std::map<int, SparseRow> rows_;  // pivot column -> row leading there
};

}  // namespace hodgekit
