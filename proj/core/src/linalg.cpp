#include "hodgekit/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hodgekit {

namespace {

void check_rect(const IntMat& a) {
  for (const auto& row : a)
    if (row.size() != a.front().size()) throw DomainError("ragged matrix");
}

}  // namespace

IntMat identity_matrix(int n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.empty() || b.empty()) return {};
  check_rect(a);
  check_rect(b);
  const std::size_t n = a.size(), k = a.front().size(), m = b.front().size();
  if (k != b.size()) throw DomainError("matrix dimension mismatch");
  IntMat c(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  check_rect(a);
  IntMat t(a.front().size(), std::vector<Int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.front().size(); ++j) t[j][i] = a[i][j];
  return t;
}

bool is_symmetric(const IntMat& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  }
  return true;
}

Int det_bareiss(IntMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  check_rect(a);
  if (a.front().size() != n) throw DomainError("determinant of a non-square matrix");
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

long rank_int(const IntMat& a) {
  RowEchelon ech;
  for (const auto& row : a) {
    std::vector<std::pair<int, Int>> entries;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) entries.emplace_back(static_cast<int>(j), row[j]);
    ech.insert(make_sparse_row(std::move(entries)));
  }
  return ech.rank();
}

Signature signature_of(const IntMat& gram) {
  if (!is_symmetric(gram)) throw DomainError("signature needs a symmetric matrix");
  const int n = static_cast<int>(gram.size());
  RatMat a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(gram[i][j]);
  std::vector<bool> done(n, false);
  Signature sig;
  int remaining = n;
  while (remaining > 0) {
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // All remaining diagonal entries vanish; find an off-diagonal entry and
      // apply the 2x2 trick, a congruence making a[i][i] = 2*a[i][j] != 0.
      int oi = -1, oj = -1;
      for (int i = 0; i < n && oi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j)
          if (!done[j] && a[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
      }
      if (oi < 0) {
        sig.zero += remaining;
        break;
      }
      for (int t = 0; t < n; ++t) a[oi][t] += a[oj][t];
      for (int t = 0; t < n; ++t) a[t][oi] += a[t][oj];
      continue;
    }
    const Rat d = a[piv][piv];
    if (sgn(d) > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (int j = 0; j < n; ++j) {
      if (j == piv || done[j] || a[j][piv] == 0) continue;
      const Rat f = a[j][piv] / d;
      // Row op first, then the matching column op with the UPDATED column.
      for (int t = 0; t < n; ++t) a[j][t] -= f * a[piv][t];
      for (int t = 0; t < n; ++t) a[t][j] -= f * a[t][piv];
    }
    done[piv] = true;
    --remaining;
  }
  return sig;
}

SnfResult smith_normal_form(const IntMat& m_in) {
  IntMat a = m_in;
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a.front().size());
  if (m > 0) check_rect(a);
  IntMat u = identity_matrix(m), v = identity_matrix(n);

  auto row_swap = [&](int i, int k) {
    std::swap(a[i], a[k]);
    std::swap(u[i], u[k]);
  };
  auto col_swap = [&](int j, int k) {
    for (int t = 0; t < m; ++t) std::swap(a[t][j], a[t][k]);
    for (int t = 0; t < n; ++t) std::swap(v[t][j], v[t][k]);
  };
  auto row_sub = [&](int i, int k, const Int& q) {  // row_i -= q * row_k
    if (q == 0) return;
    for (int t = 0; t < n; ++t) a[i][t] -= q * a[k][t];
    for (int t = 0; t < m; ++t) u[i][t] -= q * u[k][t];
  };
  auto col_sub = [&](int j, int k, const Int& q) {  // col_j -= q * col_k
    if (q == 0) return;
    for (int t = 0; t < m; ++t) a[t][j] -= q * a[t][k];
    for (int t = 0; t < n; ++t) v[t][j] -= q * v[t][k];
  };
  auto row_neg = [&](int i) {
    for (int t = 0; t < n; ++t) a[i][t] = -a[i][t];
    for (int t = 0; t < m; ++t) u[i][t] = -u[i][t];
  };

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    while (true) {
      // Move a minimal-absolute-value nonzero entry of the trailing block to (t,t).
      int bi = -1, bj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          if (bi < 0 || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) break;  // trailing block is zero; the whole matrix is done
      if (bi != t) row_swap(bi, t);
      if (bj != t) col_swap(bj, t);

      bool improved = false;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];  // truncated: |remainder| < |pivot|
        row_sub(i, t, q);
        if (a[i][t] != 0) improved = true;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        col_sub(j, t, q);
        if (a[t][j] != 0) improved = true;
      }
      if (improved) continue;

      // Pivot must divide every entry of the trailing block for the
      // divisibility chain; fold an offending row in and retry.
      int oi = -1;
      for (int i = t + 1; i < m && oi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            oi = i;
            break;
          }
      if (oi >= 0) {
        row_sub(t, oi, Int(-1));  // row_t += row_oi
        continue;
      }
      break;
    }
    if (a[t][t] == 0) break;
  }
  for (int t = 0; t < steps; ++t)
    if (a[t][t] < 0) row_neg(t);
  return SnfResult{std::move(a), std::move(u), std::move(v)};
}

IntMat integer_kernel(const IntMat& a) {
  if (a.empty()) throw DomainError("integer_kernel needs at least one row; pad explicitly");
  check_rect(a);
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(a.front().size());
  SnfResult snf = smith_normal_form(a);
  IntMat kernel;
  for (int j = 0; j < n; ++j) {
    const bool zero_col = j >= std::min(m, n) || snf.D[j][j] == 0;
    if (!zero_col) continue;
    std::vector<Int> row(n);
    for (int i = 0; i < n; ++i) row[i] = snf.V[i][j];
    kernel.push_back(std::move(row));
  }
  return kernel;
}

RatMat rat_inverse(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  check_rect(a);
  if (static_cast<int>(a.front().size()) != n)
    throw DomainError("inverse of a non-square matrix");
  RatMat w(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rat(a[i][j]);
    w[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && w[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    std::swap(w[piv], w[c]);
    const Rat d = w[c][c];
    for (int j = 0; j < 2 * n; ++j) w[c][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      const Rat f = w[i][c];
      for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  RatMat inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = w[i][n + j];
  return inv;
}

// --- sparse echelon ---------------------------------------------------------

SparseRow make_sparse_row(std::vector<std::pair<int, Int>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<int, Int>> merged;
  for (auto& [col, val] : entries) {
    if (!merged.empty() && merged.back().first == col)
      merged.back().second += val;
    else
      merged.emplace_back(col, std::move(val));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  if (merged.empty()) return SparseRow{};
  Int content = 0;
  for (const auto& [col, val] : merged) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), val.get_mpz_t());
    if (content == 1) break;
  }
  const bool flip = sgn(merged.front().second) < 0;
  if (content > 1 || flip) {
    for (auto& [col, val] : merged) {
      if (content > 1) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), content.get_mpz_t());
      if (flip) val = -val;
    }
  }
  return SparseRow{std::move(merged)};
}

namespace {

// r <- (pa/g) * r - (pb/g) * pivot, where pa = pivot lead, pb = r lead,
// g = gcd(pa, pb). Eliminates r's leading column. Content-stripped.
SparseRow combine(const SparseRow& r, const SparseRow& pivot) {
  const Int& pa = pivot.entries.front().second;
  const Int& pb = r.entries.front().second;
  Int g;
  mpz_gcd(g.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
  Int ca = pa / g, cb = pb / g;
  std::vector<std::pair<int, Int>> out;
  out.reserve(r.entries.size() + pivot.entries.size());
  std::size_t i = 0, j = 0;
  while (i < r.entries.size() || j < pivot.entries.size()) {
    if (j == pivot.entries.size() ||
        (i < r.entries.size() && r.entries[i].first < pivot.entries[j].first)) {
      out.emplace_back(r.entries[i].first, ca * r.entries[i].second);
      ++i;
    } else if (i == r.entries.size() || pivot.entries[j].first < r.entries[i].first) {
      out.emplace_back(pivot.entries[j].first, -cb * pivot.entries[j].second);
      ++j;
    } else {
      Int val = ca * r.entries[i].second - cb * pivot.entries[j].second;
      if (val != 0) out.emplace_back(r.entries[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  return make_sparse_row(std::move(out));
}

}  // namespace

SparseRow RowEchelon::reduce(SparseRow r) const {
  while (!r.empty()) {
    auto it = rows_.find(r.lead());
    if (it == rows_.end()) break;
    r = combine(r, it->second);
  }
  return r;
}

bool RowEchelon::insert(SparseRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  const int lead = r.lead();
  rows_.emplace(lead, std::move(r));
  return true;
}

bool RowEchelon::reduces_to_zero(SparseRow r) const { return reduce(std::move(r)).empty(); }

}  // namespace hodgekit
