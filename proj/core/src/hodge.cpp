#include "hodgekit/hodge.hpp"

#include <sstream>
#include <stdexcept>

namespace hodgekit {

std::string to_string(const HodgeVector& h) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < h.entries.size(); ++i) {
    if (i) os << ", ";
    os << h.entries[i];
  }
  os << "]";
  return os.str();
}

std::string to_string(const Character& chi) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < chi.values.size(); ++i) {
    if (i) os << ", ";
    os << chi.values[i];
  }
  os << ")";
  return os.str();
}

namespace {

constexpr long kMaxGroupOrder = 4096;  // eigen reports list every character

int mod_reduce(long v, int m) {
  long r = v % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

}  // namespace

DiagonalAction::DiagonalAction(std::vector<int> factors, std::vector<std::vector<int>> exps,
                               const Polynomial& g)
    : invariant_factors(std::move(factors)), exponents(std::move(exps)) {
  for (int m : invariant_factors)
    if (m < 1) throw DomainError("group invariant factors must be >= 1");
  if (exponents.size() != invariant_factors.size())
    throw DomainError("one exponent list per group generator is required");
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (static_cast<int>(exponents[j].size()) != g.ring.arity())
      throw DomainError("action exponent list does not match ring arity");
    for (int& e : exponents[j]) e = mod_reduce(e, invariant_factors[j]);
  }
  if (group_order() > kMaxGroupOrder)
    throw DomainError("group order exceeds the supported bound");
  // G must be fixed exactly: every term must have trivial character.
  for (const auto& [m, c] : g.terms) {
    Character chi = character_of(m);
    for (int v : chi.values)
      if (v != 0) throw DomainError("action does not fix the polynomial");
  }
}

long DiagonalAction::group_order() const {
  long order = 1;
  for (int m : invariant_factors) {
    order *= m;
    if (order > kMaxGroupOrder) return order;  // caller rejects
  }
  return order;
}

Character DiagonalAction::character_of(const Monomial& m) const {
  Character chi;
  chi.values.reserve(invariant_factors.size());
  for (std::size_t j = 0; j < invariant_factors.size(); ++j) {
    long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      s += static_cast<long>(exponents[j][i]) * m[i];
    chi.values.push_back(mod_reduce(s, invariant_factors[j]));
  }
  return chi;
}

Character DiagonalAction::omega_character() const {
  Character chi;
  chi.values.reserve(invariant_factors.size());
  for (std::size_t j = 0; j < invariant_factors.size(); ++j) {
    long s = 0;
    for (int e : exponents[j]) s += e;
    chi.values.push_back(mod_reduce(s, invariant_factors[j]));
  }
  return chi;
}

Character DiagonalAction::add(const Character& a, const Character& b) const {
  Character chi;
  chi.values.reserve(invariant_factors.size());
  for (std::size_t j = 0; j < invariant_factors.size(); ++j)
    chi.values.push_back(mod_reduce(static_cast<long>(a.values[j]) + b.values[j],
                                    invariant_factors[j]));
  return chi;
}

std::vector<Character> DiagonalAction::all_characters() const {
  std::vector<Character> out;
  Character cur;
  cur.values.assign(invariant_factors.size(), 0);
  out.push_back(cur);
  while (true) {
    int j = static_cast<int>(invariant_factors.size()) - 1;
    while (j >= 0) {
      if (++cur.values[j] < invariant_factors[j]) break;
      cur.values[j] = 0;
      --j;
    }
    if (j < 0) break;
    out.push_back(cur);
  }
  return out;
}

namespace {

void require_quasi_smooth(const JacobianContext& ctx) {
  if (!quasi_smooth(ctx)) throw DomainError("polynomial is not quasi-smooth");
}

long residue_degree(const JacobianContext& ctx, int q) {
  return static_cast<long>(q) * ctx.d - ctx.G.ring.weight_sum();
}

HodgeVector hodge_vector_unchecked(const JacobianContext& ctx) {
  const int n = ctx.G.ring.arity() - 1;
  HodgeVector h;
  h.entries.reserve(n);
  for (int q = 1; q <= n; ++q) {
    const long k = residue_degree(ctx, q);
    h.entries.push_back(k < 0 ? 0 : graded_quotient_dim(ctx, k));
  }
  return h;
}

}  // namespace

HodgeVector hodge_numbers_primitive(const Polynomial& g) {
  if (g.ring.arity() < 3)
    throw DomainError("hypersurface Hodge numbers need ring arity >= 3");
  JacobianContext ctx(g);
  require_quasi_smooth(ctx);
  return hodge_vector_unchecked(ctx);
}

std::vector<Monomial> residue_basis(const Polynomial& g, int q) {
  JacobianContext ctx(g);
  const int n = ctx.G.ring.arity() - 1;
  if (q < 1 || q > n) throw DomainError("pole order q out of range");
  require_quasi_smooth(ctx);
  const long k = residue_degree(ctx, q);
  if (k < 0) return {};
  return analyze_graded_piece(ctx, k).quotient_basis;
}

EigenReport eigen_hodge_numbers(const Polynomial& g, const DiagonalAction& action) {
  if (g.ring.arity() < 3)
    throw DomainError("hypersurface Hodge numbers need ring arity >= 3");
  for (const auto& exps : action.exponents)
    if (static_cast<int>(exps.size()) != g.ring.arity())
      throw DomainError("action was built for a different ring");
  // Revalidate invariance against THIS polynomial; the action may have been
  // constructed with another one.
  for (const auto& [m, c] : g.terms)
    for (int v : action.character_of(m).values)
      if (v != 0) throw DomainError("action does not fix the polynomial");

  JacobianContext ctx(g);
  require_quasi_smooth(ctx);
  const int n = ctx.G.ring.arity() - 1;
  const Character omega = action.omega_character();

  EigenReport report;
  report.total = hodge_vector_unchecked(ctx);
  for (const Character& chi : action.all_characters()) {
    report.blocks[chi].entries.assign(n, 0);
  }
  for (int q = 1; q <= n; ++q) {
    const long k = residue_degree(ctx, q);
    if (k < 0) continue;
    std::map<Character, std::vector<Monomial>> buckets;
    for (Monomial& m : monomials_of_degree(g.ring, k)) {
      const Character cls = action.add(action.character_of(m), omega);
      buckets[cls].push_back(std::move(m));
    }
    long total_q = 0;
    for (auto& [chi, monos] : buckets) {
      const long dim = analyze_graded_piece(ctx, k, std::move(monos)).dim();
      report.blocks.at(chi).entries[q - 1] = dim;
      total_q += dim;
    }
    if (total_q != report.total.entries[q - 1])
      throw std::logic_error("character blocks do not partition the graded piece");
  }
  return report;
}

}  // namespace hodgekit
