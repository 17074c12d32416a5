#include "hodgekit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <utility>

#include "hodgekit/scenarios.hpp"

namespace hodgekit {

namespace {

using Clock = std::chrono::steady_clock;

// Modulo mapping keeps the sample stream identical across standard libraries
// (std::uniform_int_distribution is implementation-defined).
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(unsigned long long seed) : engine(seed) {}
  long range(long lo, long hi) {
    return lo + static_cast<long>(engine() %
                                  static_cast<unsigned long long>(hi - lo + 1));
  }
};

Rat random_rational(Rng& rng, bool force_nonzero) {
  long num = rng.range(-9, 9);
  while (force_nonzero && num == 0) num = rng.range(-9, 9);
  Rat r(num, rng.range(1, 3));
  r.canonicalize();
  return r;
}

// Random homogeneous member of degree d; `forced` monomials get a nonzero
// coefficient, everything else may drop out.
Polynomial random_member(const WeightedRing& ring, long d, Rng& rng,
                         const std::vector<Monomial>& forced) {
  Polynomial p(ring);
  for (const Monomial& m : monomials_of_degree(ring, d)) {
    const bool force =
        std::find(forced.begin(), forced.end(), m) != forced.end();
    const Rat c = random_rational(rng, force);
    if (c != 0) p.add_term(m, c);
  }
  return p;
}

// Pure powers x_i^(d / a_i) for every weight dividing d; forcing them keeps
// random members quasi-smooth with overwhelming probability.
std::vector<Monomial> pure_powers(const WeightedRing& ring, long d) {
  std::vector<Monomial> out;
  for (int i = 0; i < ring.arity(); ++i)
    if (d % ring.weights[i] == 0) {
      Monomial m(ring.arity(), 0);
      m[i] = static_cast<int>(d / ring.weights[i]);
      out.push_back(std::move(m));
    }
  return out;
}

struct Checker {
  bool ok = true;
  std::string failures;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!failures.empty()) failures += "; ";
    failures += what;
  }
};

const HodgeVector kHorikawaTotal{{2, 28, 2}};
const HodgeVector kHorikawaBlock{{1, 14, 1}};
const HodgeVector kZero3{{0, 0, 0}};

void check_horikawa_report(const HorikawaReport& rep, Checker& c) {
  c.require(rep.y5_present, "quasi-smooth member must contain w^5");
  c.require(rep.total.has_value() && *rep.total == kHorikawaTotal,
            "total must be [2, 28, 2]");
  if (!rep.eigen.has_value()) {
    c.require(false, "eigen report missing");
    return;
  }
  const auto& blocks = rep.eigen->blocks;
  auto block_is = [&](std::vector<int> chi, const HodgeVector& want) {
    auto it = blocks.find(Character{std::move(chi)});
    return it != blocks.end() && it->second == want;
  };
  c.require(block_is({0, 1}, kHorikawaBlock) && block_is({1, 0}, kHorikawaBlock),
            "chi_0 and chi_1 blocks must be [1, 14, 1]");
  c.require(block_is({0, 0}, kZero3) && block_is({1, 1}, kZero3),
            "trivial and product character blocks must vanish");
  c.require(blocks.size() == 4, "the (Z/2)^2 report must have four blocks");
}

const WeightedRing& branch_ring() {
  static const WeightedRing ring({"u", "v", "w"}, {2, 2, 2});
  return ring;
}

// 1. Fermat member of the weight-(1,1,2,5) family: full pipeline values.
std::pair<bool, std::string> criterion_fermat_pipeline(Rng&) {
  HorikawaReport rep =
      horikawa_surface(parse_polynomial("u^5 + v^5 + w^5", branch_ring()));
  Checker c;
  c.require(rep.quasi_smooth, "Fermat member must be quasi-smooth");
  check_horikawa_report(rep, c);
  return {c.ok, c.ok ? "quasi-smooth; total [2, 28, 2]; eigen blocks "
                       "[1, 14, 1] + [1, 14, 1], others zero"
                     : c.failures};
}

// 2. Random members: identical invariants; failures carry no Hodge data.
std::pair<bool, std::string> criterion_random_members(Rng& rng) {
  Checker c;
  HorikawaReport bad =
      horikawa_surface(parse_polynomial("u^5 + v^5", branch_ring()));
  c.require(!bad.quasi_smooth, "member without w^5 must fail quasi-smoothness");
  c.require(!bad.total.has_value() && !bad.eigen.has_value(),
            "rejected member must carry no Hodge data");

  const Monomial w5{0, 0, 5};
  int passes = 0, rejects = 0;
  for (int attempt = 0; attempt < 60 && passes < 10; ++attempt) {
    Polynomial f = random_member(branch_ring(), 10, rng, {w5});
    HorikawaReport rep = horikawa_surface(f);
    if (!rep.quasi_smooth) {
      ++rejects;
      c.require(!rep.total.has_value() && !rep.eigen.has_value(),
                "rejected member must carry no Hodge data");
      continue;
    }
    ++passes;
    check_horikawa_report(rep, c);
  }
  c.require(passes >= 10, "need 10 quasi-smooth random members");
  std::ostringstream det;
  det << passes << " quasi-smooth members matched [2, 28, 2] and the eigen split; "
      << rejects << " singular samples rejected with no Hodge data";
  return {c.ok, c.ok ? det.str() : c.failures};
}

// 3. Unweighted anchors: quartic K3 and cubic surface in P^3.
std::pair<bool, std::string> criterion_classical(Rng&) {
  const WeightedRing p3({"x", "y", "z", "w"}, {1, 1, 1, 1});
  Checker c;
  c.require(hodge_numbers_primitive(
                parse_polynomial("x^4 + y^4 + z^4 + w^4", p3)) ==
                HodgeVector{{1, 19, 1}},
            "Fermat quartic must give [1, 19, 1]");
  c.require(hodge_numbers_primitive(
                parse_polynomial("x^3 + y^3 + z^3 + w^3", p3)) ==
                HodgeVector{{0, 6, 0}},
            "Fermat cubic must give [0, 6, 0]");
  return {c.ok, c.ok ? "quartic [1, 19, 1]; cubic [0, 6, 0]" : c.failures};
}

// 4. Linear-algebra dimensions against the closed-form Hilbert series, plus
// the Gorenstein palindrome, on a corpus of quasi-smooth members.
std::pair<bool, std::string> criterion_hilbert_oracle(Rng& rng) {
  struct Config {
    std::vector<int> weights;
    long d;
  };
  const std::vector<Config> configs = {
      {{1, 1, 1}, 3},    {{1, 1, 1}, 4},    {{1, 1, 2}, 4},
      {{1, 1, 2}, 6},    {{1, 2, 3}, 6},    {{1, 1, 1, 1}, 3},
      {{1, 1, 1, 1}, 4}, {{1, 1, 1, 2}, 4}, {{1, 1, 2, 2}, 6},
      {{1, 1, 2, 5}, 10},
  };

  Checker c;
  int members = 0;
  auto check_member = [&](const Polynomial& g) {
    const JacobianContext ctx(g);
    const WeightedRing& ring = g.ring;
    std::vector<long> partial_degrees;
    for (int w : ring.weights) partial_degrees.push_back(ctx.d - w);
    const long top = ctx.sigma + ring.max_weight();
    const std::vector<Int> series =
        hilbert_series_closed_form(ring, partial_degrees, top);
    std::vector<long> dims;
    for (long k = 0; k <= top; ++k) dims.push_back(graded_quotient_dim(ctx, k));
    for (long k = 0; k <= top; ++k)
      if (series[k] != dims[k]) {
        std::ostringstream msg;
        msg << "series/rank mismatch at degree " << k << " for " << to_string(g);
        c.require(false, msg.str());
        return;
      }
    for (long k = 0; k <= ctx.sigma; ++k)
      if (dims[k] != dims[ctx.sigma - k]) {
        std::ostringstream msg;
        msg << "palindrome broken at degree " << k << " for " << to_string(g);
        c.require(false, msg.str());
        return;
      }
    ++members;
  };

  // Anchor: the Fermat member of the weight-(1,1,2,5) family.
  const WeightedRing p1125({"x0", "x1", "y", "z"}, {1, 1, 2, 5});
  check_member(parse_polynomial("z^2 - x0^10 - x1^10 - y^5", p1125));

  for (const Config& cfg : configs) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < cfg.weights.size(); ++i)
      names.push_back("v" + std::to_string(i));
    const WeightedRing ring(names, cfg.weights);
    const std::vector<Monomial> forced = pure_powers(ring, cfg.d);
    for (int sample = 0; sample < 2; ++sample) {
      bool found = false;
      for (int attempt = 0; attempt < 25 && !found; ++attempt) {
        Polynomial g = random_member(ring, cfg.d, rng, forced);
        if (!quasi_smooth(g)) continue;
        found = true;
        check_member(g);
      }
      c.require(found, "failed to sample a quasi-smooth member");
    }
  }
  std::ostringstream det;
  det << members
      << " quasi-smooth members: ranks equal series coefficients through "
         "sigma + max weight; palindrome holds";
  return {c.ok, c.ok ? det.str() : c.failures};
}

// 5. The rank-6 pairing lattice and its U(2) + D4 identification.
std::pair<bool, std::string> criterion_pair_lattice(Rng&) {
  const Lattice m = degree5_pair_lattice();
  Checker c;
  c.require(m.det() == -16, "det must be -16");
  c.require(signature(m) == Signature{1, 5, 0}, "signature must be (1, 5)");
  c.require(discriminant_group(m) == std::vector<Int>{2, 2, 2, 2},
            "discriminant group must be (Z/2)^4");
  const std::vector<Int> h = {2, 1, 1, 1, 1, 1};
  Int h_sq = 0, h_dot_l = 0;
  for (int i = 0; i < 6; ++i) {
    Int row = 0;
    for (int j = 0; j < 6; ++j) row += m.gram[i][j] * h[j];
    h_sq += h[i] * row;
    if (i == 0) h_dot_l = row;
  }
  c.require(h_sq == 2, "(2l' + sum e_i)^2 must be 2");
  c.require(h_dot_l == 1, "(2l' + sum e_i) . l' must be 1");
  c.require(same_genus(m, direct_sum({lattice_U(2), lattice_D(4)})),
            "M must share the genus of U(2) + D4");
  return {c.ok, c.ok ? "det -16; signature (1, 5); (Z/2)^4; class checks 2 and 1; "
                       "genus matches U(2) + D4"
                     : c.failures};
}

// 6. Primitive embedding into the K3 lattice and its complement.
std::pair<bool, std::string> criterion_k3_split(Rng&) {
  const LatticeSplitReport rep = k3_orthogonal_split();
  Checker c;
  c.require(rep.M_primitive, "embedded M must be primitive");
  c.require(rep.T.rank() == 16, "complement must have rank 16");
  c.require(rep.T_signature == Signature{2, 14, 0}, "T signature must be (2, 14)");
  c.require(rep.T_disc == std::vector<Int>{2, 2, 2, 2},
            "T discriminant group must be (Z/2)^4");
  c.require(rep.genus_M_ok, "embedded M must share the genus of the pair lattice");
  c.require(rep.genus_T_ok, "T must share the genus of U + U(2) + D4 + E8");
  c.require(rep.h_square_ok && rep.h_dot_l_ok, "class checks must hold");
  return {c.ok, c.ok ? "primitive; T rank 16, signature (2, 14), (Z/2)^4; both "
                       "genus identifications hold"
                     : c.failures};
}

// 7. Two independent dimension counts.
std::pair<bool, std::string> criterion_moduli(Rng&) {
  const ModuliDimensions dims = moduli_dimensions();
  Checker c;
  c.require(dims.branch_data == 16, "branch-data count must be 16");
  c.require(dims.hypersurface == 16, "hypersurface count must be 16");
  c.require(dims.branch_data == dims.hypersurface, "the counts must agree");
  return {c.ok, c.ok ? "branch data 16 = hypersurface 16" : c.failures};
}

// 8. Randomized property suites: lattice invariants and eigen partitions.
std::pair<bool, std::string> criterion_property_suites(Rng& rng) {
  Checker c;

  int lattices = 0;
  for (int attempt = 0; attempt < 500 && lattices < 50; ++attempt) {
    const int r = static_cast<int>(rng.range(1, 8));
    IntMat a(r, std::vector<Int>(r));
    for (auto& row : a)
      for (auto& x : row) x = rng.range(-4, 4);
    IntMat gram(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) gram[i][j] = a[i][j] + a[j][i];
    const Lattice l(gram);
    if (l.det() == 0) continue;
    ++lattices;

    Int order = 1;
    for (const Int& f : discriminant_group(l)) order *= f;
    c.require(order == abs(l.det()), "group order must equal |det|");

    const Signature s = signature(l);
    c.require(s.zero == 0 && s.positive + s.negative == r,
              "signature must sum to the rank with no radical");

    IntMat basis;
    const int k = static_cast<int>(rng.range(1, r));
    for (int tries = 0; tries < 20; ++tries) {
      IntMat b(k, std::vector<Int>(r));
      for (auto& row : b)
        for (auto& x : row) x = rng.range(-3, 3);
      if (rank_int(b) == k) {
        basis = std::move(b);
        break;
      }
    }
    if (!basis.empty()) {
      const SublatticeEmbedding emb(l, basis);
      const SublatticeEmbedding comp = orthogonal_complement(emb);
      bool orthogonal = true;
      if (!comp.basis.empty()) {
        const IntMat cross =
            mat_mul(mat_mul(basis, l.gram), transpose(comp.basis));
        for (const auto& row : cross)
          for (const Int& x : row)
            if (x != 0) orthogonal = false;
      }
      c.require(orthogonal, "complement must be orthogonal to the sublattice");
      c.require(is_primitive(comp), "complement must be primitive");
    }

    const DiscriminantForm form = discriminant_form(l);
    const long gens = form.generator_count();
    if (gens > 0) {
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Int> x(gens), y(gens), xy(gens);
        for (long i = 0; i < gens; ++i) {
          x[i] = Int(rng.range(0, 1 << 20)) % form.invariant_factors[i];
          y[i] = Int(rng.range(0, 1 << 20)) % form.invariant_factors[i];
          xy[i] = (x[i] + y[i]) % form.invariant_factors[i];
        }
        // polarization: q(x + y) = q(x) + q(y) + 2 b(x, y) in Q / 2Z
        const Rat gap =
            form.q_of(xy) - form.q_of(x) - form.q_of(y) - 2 * form.b_of(x, y);
        c.require(gap.get_den() == 1 && gap.get_num() % 2 == 0,
                  "polarization identity must hold on the discriminant form");
      }
    }
  }
  c.require(lattices == 50, "need 50 nondegenerate even samples");

  struct EigenConfig {
    std::vector<int> weights;
    long d;
    std::vector<int> factors;
    std::vector<std::vector<int>> exps;
    int count;
  };
  const std::vector<EigenConfig> configs = {
      {{1, 1, 1}, 6, {2, 2}, {{1, 0, 0}, {0, 1, 0}}, 4},
      {{1, 1, 2}, 6, {2}, {{1, 0, 0}}, 4},
      {{1, 1, 2}, 6, {}, {}, 1},
      {{1, 1, 1, 1}, 4, {4}, {{1, 0, 0, 0}}, 1},
  };
  int actions = 0;
  for (const EigenConfig& cfg : configs) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < cfg.weights.size(); ++i)
      names.push_back("v" + std::to_string(i));
    const WeightedRing ring(names, cfg.weights);
    const std::vector<Monomial> anchors = pure_powers(ring, cfg.d);

    // The pure-power Fermat member is invariant under all these actions, so
    // it seeds a probe action for filtering invariant monomials.
    Polynomial fermat(ring);
    for (const Monomial& m : anchors) fermat.add_term(m, Rat(1));
    const DiagonalAction probe(cfg.factors, cfg.exps, fermat);
    const Character trivial{std::vector<int>(cfg.factors.size(), 0)};
    std::vector<Monomial> invariant;
    for (const Monomial& m : monomials_of_degree(ring, cfg.d))
      if (probe.character_of(m) == trivial) invariant.push_back(m);

    for (int instance = 0; instance < cfg.count; ++instance) {
      bool found = false;
      for (int attempt = 0; attempt < 25 && !found; ++attempt) {
        Polynomial g(ring);
        for (const Monomial& m : invariant) {
          const bool force =
              std::find(anchors.begin(), anchors.end(), m) != anchors.end();
          const Rat coeff = random_rational(rng, force);
          if (coeff != 0) g.add_term(m, coeff);
        }
        if (!quasi_smooth(g)) continue;
        found = true;
        const DiagonalAction action(cfg.factors, cfg.exps, g);
        const EigenReport rep = eigen_hodge_numbers(g, action);
        std::vector<long> sum(rep.total.entries.size(), 0);
        for (const auto& [chi, block] : rep.blocks)
          for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += block.entries[i];
        c.require(sum == rep.total.entries,
                  "character blocks must sum to the total");
        ++actions;
      }
      c.require(found, "failed to sample an invariant quasi-smooth member");
    }
  }
  c.require(actions >= 10, "need 10 eigen partition samples");

  std::ostringstream det;
  det << lattices << " even lattices: |A_L| = |det|, signatures fill the rank, "
      << "complements orthogonal and primitive, polarization holds; " << actions
      << " diagonal actions: blocks sum to the total";
  return {c.ok, c.ok ? det.str() : c.failures};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* progress) {
  struct Entry {
    const char* name;
    std::pair<bool, std::string> (*run)(Rng&);
  };
  const Entry entries[] = {
      {"horikawa fermat pipeline", criterion_fermat_pipeline},
      {"randomized horikawa members", criterion_random_members},
      {"classical cross-checks", criterion_classical},
      {"hilbert series oracle equivalence", criterion_hilbert_oracle},
      {"pair lattice M", criterion_pair_lattice},
      {"K3 orthogonal split", criterion_k3_split},
      {"moduli dimensions", criterion_moduli},
      {"randomized property suites", criterion_property_suites},
  };

  std::vector<CriterionResult> results;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    Rng rng(options.seed * 1000003ULL + static_cast<unsigned long long>(index));
    const auto t0 = Clock::now();
    std::pair<bool, std::string> outcome;
    try {
      outcome = entry.run(rng);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - t0)
                             .count();
    results.push_back({index, entry.name, outcome.first, outcome.second,
                       static_cast<long long>(elapsed)});
    if (progress) {
      *progress << (outcome.first ? "PASS" : "FAIL") << " criterion " << index
                << ": " << entry.name << " (" << elapsed << " ms) - "
                << outcome.second << std::endl;
    }
  }
  return results;
}

}  // namespace hodgekit
