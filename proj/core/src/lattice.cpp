#include "hodgekit/lattice.hpp"

#include <algorithm>
#include <functional>

namespace hodgekit {

Lattice::Lattice(IntMat g, std::string name) : gram(std::move(g)), label(std::move(name)) {
  for (const auto& row : gram)
    if (row.size() != gram.size()) throw DomainError("Gram matrix must be square");
  if (!is_symmetric(gram)) throw DomainError("Gram matrix must be symmetric");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < gram.size(); ++i)
    if (gram[i][i] % 2 != 0) return false;
  return true;
}

Int Lattice::det() const { return det_bareiss(gram); }

Lattice lattice_U(int m) {
  if (m == 0) throw DomainError("U(m) needs m != 0");
  IntMat g = {{Int(0), Int(m)}, {Int(m), Int(0)}};
  return Lattice(std::move(g), m == 1 ? "U" : "U(" + std::to_string(m) + ")");
}

namespace {

Lattice root_lattice(int n, const std::vector<std::pair<int, int>>& edges, std::string name) {
  IntMat g(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  for (auto [a, b] : edges) {
    g[a][b] = 1;
    g[b][a] = 1;
  }
  return Lattice(std::move(g), std::move(name));
}

}  // namespace

Lattice lattice_A(int n) {
  if (n < 1) throw DomainError("A_n needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return root_lattice(n, edges, "A" + std::to_string(n));
}

Lattice lattice_D(int n) {
  if (n < 1) throw DomainError("D_n needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);  // chain 0..n-2
  if (n >= 3) edges.emplace_back(n - 3, n - 1);                  // fork
  return root_lattice(n, edges, "D" + std::to_string(n));
}

Lattice lattice_E8() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) edges.emplace_back(i, i + 1);  // chain 0..6
  edges.emplace_back(2, 7);                                  // branch node
  return root_lattice(8, edges, "E8");
}

Lattice rescale(const Lattice& l, int m) {
  if (m == 0) throw DomainError("rescale needs m != 0");
  IntMat g = l.gram;
  for (auto& row : g)
    for (auto& x : row) x *= m;
  return Lattice(std::move(g), l.label.empty() ? "" : l.label + "(" + std::to_string(m) + ")");
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMat g(n, std::vector<Int>(n, 0));
  std::string name;
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rank(); ++i)
      for (int j = 0; j < p.rank(); ++j) g[off + i][off + j] = p.gram[i][j];
    off += p.rank();
    if (!p.label.empty()) name += (name.empty() ? "" : " + ") + p.label;
  }
  return Lattice(std::move(g), std::move(name));
}

Lattice lattice_K3() {
  Lattice k3 =
      direct_sum({lattice_U(), lattice_U(), lattice_U(), lattice_E8(), lattice_E8()});
  k3.label = "K3";
  return k3;
}

Signature signature(const Lattice& l) { return signature_of(l.gram); }

std::vector<Int> discriminant_group(const Lattice& l) {
  if (l.det() == 0) throw DomainError("degenerate lattice has no discriminant group");
  SnfResult snf = smith_normal_form(l.gram);
  std::vector<Int> factors;
  for (int i = 0; i < l.rank(); ++i)
    if (snf.D[i][i] > 1) factors.push_back(snf.D[i][i]);
  return factors;
}

Int DiscriminantForm::group_order() const {
  Int order = 1;
  for (const Int& m : invariant_factors) order *= m;
  return order;
}

std::vector<Rat> DiscriminantForm::element(const std::vector<Int>& coeffs) const {
  if (coeffs.size() != invariant_factors.size())
    throw DomainError("coefficient tuple does not match generator count");
  const std::size_t n = gram.size();
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t g = 0; g < coeffs.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) x[i] += Rat(coeffs[g]) * generators[g][i];
  return x;
}

namespace {

Rat mod_interval(const Rat& x, int modulus) {  // representative in [0, modulus)
  Int num = x.get_num();
  Int scaled_den = x.get_den() * modulus;
  Int floor_div;
  mpz_fdiv_q(floor_div.get_mpz_t(), num.get_mpz_t(), scaled_den.get_mpz_t());
  Rat r = x - Rat(floor_div * modulus);
  return r;
}

Rat form_value(const IntMat& gram, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  Rat s(0);
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (gram[i][j] == 0 || y[j] == 0) continue;
      s += x[i] * Rat(gram[i][j]) * y[j];
    }
  }
  return s;
}

}  // namespace

Rat DiscriminantForm::q_of(const std::vector<Int>& coeffs) const {
  const std::vector<Rat> x = element(coeffs);
  return mod_interval(form_value(gram, x, x), 2);
}

Rat DiscriminantForm::b_of(const std::vector<Int>& a, const std::vector<Int>& b) const {
  return mod_interval(form_value(gram, element(a), element(b)), 1);
}

DiscriminantForm discriminant_form(const Lattice& l) {
  if (!l.is_even()) throw DomainError("discriminant form needs an even lattice");
  if (l.det() == 0) throw DomainError("degenerate lattice has no discriminant form");
  const int n = l.rank();
  SnfResult snf = smith_normal_form(l.gram);
  // D = U * gram * V; coker(gram) = Z^n / gram Z^n with x ~ (U x)_i mod d_i,
  // so the i-th cyclic factor is generated by gram^{-1} U^{-1} eps_i, written
  // in lattice coordinates tensor Q.
  RatMat gram_inv = rat_inverse(l.gram);
  RatMat u_inv_rat;
  {
    // U is unimodular; invert exactly over Q.
    u_inv_rat = rat_inverse(snf.U);
  }
  DiscriminantForm form;
  form.gram = l.gram;
  for (int i = 0; i < n; ++i) {
    if (snf.D[i][i] <= 1) continue;
    form.invariant_factors.push_back(snf.D[i][i]);
    std::vector<Rat> gen(n, Rat(0));
    for (int r = 0; r < n; ++r) {
      Rat dual_coord = u_inv_rat[r][i];  // column i of U^{-1}
      if (dual_coord == 0) continue;
      for (int s = 0; s < n; ++s) gen[s] += gram_inv[s][r] * dual_coord;
    }
    form.generators.push_back(std::move(gen));
  }
  return form;
}

SublatticeEmbedding::SublatticeEmbedding(Lattice amb, IntMat rows)
    : ambient(std::move(amb)), basis(std::move(rows)) {
  for (const auto& row : basis)
    if (static_cast<int>(row.size()) != ambient.rank())
      throw DomainError("basis row length does not match ambient rank");
  if (!basis.empty() && rank_int(basis) != static_cast<long>(basis.size()))
    throw DomainError("sublattice generators are linearly dependent");
}

Lattice SublatticeEmbedding::sublattice(const std::string& name) const {
  if (basis.empty()) return Lattice(IntMat{}, name);
  return Lattice(mat_mul(mat_mul(basis, ambient.gram), transpose(basis)), name);
}

SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& e) {
  const int n = e.ambient.rank();
  if (e.basis.empty())
    return SublatticeEmbedding(e.ambient, identity_matrix(n));
  IntMat pairing = mat_mul(e.basis, e.ambient.gram);  // rows: v -> <b_i, v>
  IntMat kernel = integer_kernel(pairing);
  return SublatticeEmbedding(e.ambient, std::move(kernel));
}

bool is_primitive(const SublatticeEmbedding& e) {
  if (e.basis.empty()) return true;
  SnfResult snf = smith_normal_form(e.basis);
  const int r = static_cast<int>(e.basis.size());
  for (int i = 0; i < r; ++i)
    if (snf.D[i][i] != 1) return false;
  return true;
}

namespace {

// Elements of the discriminant group as coefficient tuples mod the invariant
// factors, with q cached. Small by the same_genus bound.
struct DiscTable {
  std::vector<Int> factors;
  std::vector<std::vector<Int>> elements;
  std::vector<Rat> q;
};

DiscTable build_table(const DiscriminantForm& form) {
  DiscTable t;
  t.factors = form.invariant_factors;
  std::vector<Int> cur(form.invariant_factors.size(), 0);
  while (true) {
    t.elements.push_back(cur);
    t.q.push_back(form.q_of(cur));
    int j = static_cast<int>(cur.size()) - 1;
    while (j >= 0) {
      if (++cur[j] < form.invariant_factors[j]) break;
      cur[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return t;
}

// The subgroup generated by the chosen images must be everything; closure by
// breadth-first span over the element indices.
bool images_generate(const DiscTable& t, const std::vector<std::size_t>& images) {
  const std::size_t order = t.elements.size();
  auto index_of = [&](const std::vector<Int>& coeffs) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      idx = idx * t.factors[j].get_ui() + coeffs[j].get_ui();
    }
    return idx;
  };
  std::vector<bool> seen(order, false);
  seen[0] = true;
  std::size_t count = 1;
  std::vector<std::size_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t e : frontier)
      for (std::size_t g : images) {
        std::vector<Int> sum = t.elements[e];
        for (std::size_t j = 0; j < sum.size(); ++j) {
          sum[j] += t.elements[g][j];
          if (sum[j] >= t.factors[j]) sum[j] -= t.factors[j];
        }
        const std::size_t idx = index_of(sum);
        if (!seen[idx]) {
          seen[idx] = true;
          ++count;
          next.push_back(idx);
        }
      }
    frontier = std::move(next);
  }
  return count == order;
}

bool isomorphic_forms(const DiscriminantForm& fa, const DiscriminantForm& fb) {
  if (fa.invariant_factors != fb.invariant_factors) return false;
  if (fa.invariant_factors.empty()) return true;  // both trivial
  DiscTable ta = build_table(fa);
  DiscTable tb = build_table(fb);
  const std::size_t ngen = fa.invariant_factors.size();

  // q values must match as multisets over the whole group; cheap early out.
  {
    std::vector<Rat> qa = ta.q, qb = tb.q;
    auto lt = [](const Rat& x, const Rat& y) { return x < y; };
    std::sort(qa.begin(), qa.end(), lt);
    std::sort(qb.begin(), qb.end(), lt);
    if (qa != qb) return false;
  }

  std::vector<std::size_t> images(ngen, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t g) -> bool {
    if (g == ngen) return images_generate(tb, images);
    std::vector<Int> ga(ngen, 0);
    ga[g] = 1;
    for (std::size_t cand = 0; cand < tb.elements.size(); ++cand) {
      const std::vector<Int>& el = tb.elements[cand];
      // order of el must divide the invariant factor of generator g
      bool order_ok = true;
      for (std::size_t j = 0; j < ngen; ++j)
        if ((el[j] * fa.invariant_factors[g]) % tb.factors[j] != 0) {
          order_ok = false;
          break;
        }
      if (!order_ok) continue;
      // q(image) must equal q(generator g)
      if (tb.q[cand] != fa.q_of(ga)) continue;
      // b with previously placed images must match
      bool b_ok = true;
      for (std::size_t h = 0; h < g && b_ok; ++h) {
        std::vector<Int> gh(ngen, 0);
        gh[h] = 1;
        if (fb.b_of(tb.elements[cand], tb.elements[images[h]]) != fa.b_of(ga, gh))
          b_ok = false;
      }
      if (!b_ok) continue;
      images[g] = cand;
      if (place(g + 1)) return true;
    }
    return false;
  };
  return place(0);
}

}  // namespace

bool same_genus(const Lattice& a, const Lattice& b, const Int& bound) {
  if (!a.is_even() || !b.is_even())
    throw DomainError("genus comparison is implemented for even lattices");
  if (a.det() == 0 || b.det() == 0)
    throw DomainError("genus comparison needs nondegenerate lattices");
  if (signature_of(a.gram) != signature_of(b.gram)) return false;
  DiscriminantForm fa = discriminant_form(a);
  DiscriminantForm fb = discriminant_form(b);
  if (fa.invariant_factors != fb.invariant_factors) return false;
  if (fa.group_order() > bound)
    throw UndecidedError(
        "undecided by this method: discriminant group order exceeds the bound");
  return isomorphic_forms(fa, fb);
}

}  // namespace hodgekit
