#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "hodgekit/scenarios.hpp"
#include "hodgekit/selftest.hpp"
#include "json.hpp"

namespace hodgekit::cli {

namespace {

using Json = nlohmann::ordered_json;

// Missing or contradictory arguments: exit code 2 (usage), unlike malformed
// mathematical input, which is a domain error with exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- formatting helpers -----------------------------------------------------

std::string bracket(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "]";
}

std::string bracket_rows(const IntMat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += bracket(m[i]);
  }
  return s + "]";
}

std::string signature_text(const Signature& s) {
  std::string text = "(" + std::to_string(s.positive) + ", " + std::to_string(s.negative) + ")";
  if (s.zero > 0) text += " with radical rank " + std::to_string(s.zero);
  return text;
}

Json json_int(const Int& v) {
  // Exact: numbers that fit a 64-bit signed land as JSON numbers, anything
  // larger as a decimal string.
  if (v.fits_slong_p()) return static_cast<long>(v.get_si());
  return v.get_str();
}

Json json_ints(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

Json json_mat(const IntMat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(json_ints(row));
  return a;
}

Json json_signature(const Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

// --- input helpers ----------------------------------------------------------

std::string trim_copy(std::string s) {
  const auto issp = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const std::string& piece : split(s, ',')) {
    const std::string t = trim_copy(piece);
    try {
      std::size_t used = 0;
      const int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("cannot read " + what + " entry \"" + t + "\" as an integer");
    }
  }
  return out;
}

IntMat parse_int_rows(const std::string& s, const std::string& what) {
  IntMat rows;
  for (const std::string& row : split(s, ';')) {
    std::vector<Int> r;
    for (int v : parse_int_list(row, what)) r.push_back(Int(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

// Lattice mini-language: U, U2, A<n>, D<n>, E8, K3, M, T joined with '+'.
Lattice parse_lattice_expr(const std::string& expr) {
  std::vector<Lattice> parts;
  for (const std::string& piece : split(expr, '+')) {
    const std::string name = trim_copy(piece);
    if (name == "U") {
      parts.push_back(lattice_U());
    } else if (name == "U2") {
      parts.push_back(lattice_U(2));
    } else if (name == "E8") {
      parts.push_back(lattice_E8());
    } else if (name == "K3") {
      parts.push_back(lattice_K3());
    } else if (name == "M") {
      parts.push_back(degree5_pair_lattice());
    } else if (name == "T") {
      parts.push_back(k3_orthogonal_split().T);
    } else if (name.size() > 1 && (name[0] == 'A' || name[0] == 'D')) {
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(name.substr(1), &used);
        if (used + 1 != name.size()) throw std::invalid_argument(name);
      } catch (const std::exception&) {
        throw DomainError("unknown lattice name \"" + name + "\"");
      }
      parts.push_back(name[0] == 'A' ? lattice_A(n) : lattice_D(n));
    } else {
      throw DomainError("unknown lattice name \"" + name + "\"");
    }
  }
  if (parts.empty()) throw DomainError("empty lattice expression");
  return parts.size() == 1 ? parts[0] : direct_sum(parts);
}

struct PolySource {
  std::string ring_decl;  // "vars;weights", may come from file headers
  std::string inline_src;
  std::string file_path;
};

// Exactly one of --poly / --poly-file; the ring comes from --ring or from
// `vars:` / `weights:` headers in the file.
Polynomial load_polynomial(const PolySource& src) {
  if (src.inline_src.empty() == src.file_path.empty())
    throw UsageError("provide exactly one polynomial source: --poly or --poly-file");

  std::string ring_decl = src.ring_decl;
  std::string body = src.inline_src;
  if (!src.file_path.empty()) {
    std::ifstream in(src.file_path);
    if (!in) throw DomainError("cannot open polynomial file " + src.file_path);
    std::string line, vars, weights;
    while (std::getline(in, line)) {
      const std::string t = trim_copy(line);
      if (t.empty() || t[0] == '#') continue;
      if (t.rfind("vars:", 0) == 0) {
        vars = trim_copy(t.substr(5));
      } else if (t.rfind("weights:", 0) == 0) {
        weights = trim_copy(t.substr(8));
      } else {
        body += (body.empty() ? "" : " ") + t;
      }
    }
    if (ring_decl.empty() && !vars.empty() && !weights.empty())
      ring_decl = vars + ";" + weights;
  }
  if (ring_decl.empty())
    throw UsageError("no ring given: pass --ring or put vars:/weights: headers in the file");
  const WeightedRing ring = parse_ring(ring_decl);
  return parse_polynomial(body, ring);
}

std::string ring_text(const WeightedRing& ring) {
  std::string vars, weights;
  for (int i = 0; i < ring.arity(); ++i) {
    if (i) {
      vars += ", ";
      weights += ", ";
    }
    vars += ring.variables[i];
    weights += std::to_string(ring.weights[i]);
  }
  return vars + " with weights " + weights;
}

Json json_ring(const WeightedRing& ring) {
  return Json{{"variables", ring.variables}, {"weights", ring.weights}};
}

// --- subcommand handlers ----------------------------------------------------

int cmd_hodge(const PolySource& src, bool with_basis, bool json, std::ostream& out) {
  const Polynomial g = load_polynomial(src);
  const HodgeVector h = hodge_numbers_primitive(g);  // throws if not quasi-smooth
  std::vector<std::vector<std::string>> bases;
  if (with_basis) {
    for (int q = 1; q <= g.ring.arity() - 1; ++q) {
      std::vector<std::string> basis;
      for (const Monomial& m : residue_basis(g, q)) basis.push_back(to_string(g.ring, m));
      bases.push_back(std::move(basis));
    }
  }
  if (json) {
    Json j{{"schema", 1},
           {"ring", json_ring(g.ring)},
           {"degree", weighted_degree(g)},
           {"quasi_smooth", true},
           {"hodge_numbers", h.entries}};
    if (with_basis) j["residue_bases"] = bases;
    emit(out, j);
  } else {
    out << "ring: " << ring_text(g.ring) << "\n";
    out << "degree: " << weighted_degree(g) << "\n";
    out << "quasi-smooth: true\n";
    out << "hodge numbers: " << to_string(h) << "\n";
    for (std::size_t q = 0; q + 1 <= bases.size(); ++q) {
      out << "residue basis (pole order " << q + 1 << "):";
      for (const std::string& m : bases[q]) out << " " << m;
      out << "\n";
    }
  }
  return 0;
}

int cmd_eigen(const PolySource& src, const std::string& factors_text,
              const std::string& exps_text, bool json, std::ostream& out) {
  const Polynomial g = load_polynomial(src);
  const std::vector<int> factors = parse_int_list(factors_text, "--factors");
  std::vector<std::vector<int>> exps;
  if (!trim_copy(exps_text).empty())
    for (const std::string& row : split(exps_text, ';'))
      exps.push_back(parse_int_list(row, "--exps"));
  const DiagonalAction action(factors, exps, g);
  const EigenReport rep = eigen_hodge_numbers(g, action);
  if (json) {
    Json blocks = Json::array();
    for (const auto& [chi, block] : rep.blocks)
      blocks.push_back(Json{{"character", chi.values}, {"hodge_numbers", block.entries}});
    emit(out, Json{{"schema", 1},
                   {"ring", json_ring(g.ring)},
                   {"total", rep.total.entries},
                   {"blocks", blocks}});
  } else {
    out << "total: " << to_string(rep.total) << "\n";
    for (const auto& [chi, block] : rep.blocks)
      out << "character " << to_string(chi) << ": " << to_string(block) << "\n";
  }
  return 0;
}

int cmd_quasismooth(const PolySource& src, bool json, std::ostream& out) {
  const Polynomial g = load_polynomial(src);
  const bool qs = quasi_smooth(g);
  if (json) {
    emit(out, Json{{"schema", 1}, {"quasi_smooth", qs}});
  } else {
    out << "quasi-smooth: " << (qs ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_hilbert(const PolySource& src, const std::string& degrees_text, long upto,
                bool json, std::ostream& out) {
  WeightedRing ring({"t"}, {1});  // replaced below
  std::vector<long> degrees;
  long top = upto;
  const bool have_poly = !src.inline_src.empty() || !src.file_path.empty();
  if (have_poly == !degrees_text.empty())
    throw UsageError("provide exactly one of --poly/--poly-file or --degrees");
  if (have_poly) {
    const Polynomial g = load_polynomial(src);
    ring = g.ring;
    const JacobianContext ctx(g);
    for (int w : ring.weights) degrees.push_back(ctx.d - w);
    if (top < 0) top = ctx.sigma + ring.max_weight();
  } else {
    if (src.ring_decl.empty()) throw UsageError("--degrees needs --ring");
    ring = parse_ring(src.ring_decl);
    for (int v : parse_int_list(degrees_text, "--degrees")) degrees.push_back(v);
    if (top < 0) throw UsageError("--degrees needs --upto");
  }
  const std::vector<Int> coeffs = hilbert_series_closed_form(ring, degrees, top);
  if (json) {
    Json jdeg = Json::array();
    for (long d : degrees) jdeg.push_back(d);
    emit(out, Json{{"schema", 1},
                   {"ring", json_ring(ring)},
                   {"generator_degrees", jdeg},
                   {"coefficients", json_ints(coeffs)}});
  } else {
    out << "generator degrees:";
    for (long d : degrees) out << " " << d;
    out << "\n";
    out << "coefficients: " << bracket(coeffs) << "\n";
  }
  return 0;
}

int cmd_lattice_info(const std::string& expr, bool json, std::ostream& out) {
  const Lattice l = parse_lattice_expr(expr);
  const Signature s = signature(l);
  const Int det = l.det();
  std::vector<Int> disc;
  if (det != 0) disc = discriminant_group(l);
  if (json) {
    Json j{{"schema", 1},
           {"label", l.label},
           {"rank", l.rank()},
           {"even", l.is_even()},
           {"det", json_int(det)},
           {"signature", json_signature(s)}};
    j["discriminant_group"] = det != 0 ? json_ints(disc) : Json();
    emit(out, j);
  } else {
    out << "lattice: " << l.label << "\n";
    out << "rank: " << l.rank() << "\n";
    out << "even: " << (l.is_even() ? "true" : "false") << "\n";
    out << "det: " << det.get_str() << "\n";
    out << "signature: " << signature_text(s) << "\n";
    out << "discriminant group: " << (det != 0 ? bracket(disc) : "degenerate") << "\n";
  }
  return 0;
}

int cmd_lattice_snf(const std::string& expr, bool json, std::ostream& out) {
  const Lattice l = parse_lattice_expr(expr);
  const SnfResult snf = smith_normal_form(l.gram);
  std::vector<Int> diag;
  for (int i = 0; i < l.rank(); ++i) diag.push_back(snf.D[i][i]);
  if (json) {
    emit(out, Json{{"schema", 1}, {"label", l.label}, {"diagonal", json_ints(diag)}});
  } else {
    out << "lattice: " << l.label << "\n";
    out << "smith diagonal: " << bracket(diag) << "\n";
  }
  return 0;
}

int cmd_lattice_disc(const std::string& expr, bool json, std::ostream& out) {
  const Lattice l = parse_lattice_expr(expr);
  const DiscriminantForm form = discriminant_form(l);
  const long n = form.generator_count();
  std::vector<std::string> q;
  std::vector<std::vector<std::string>> b(n);
  for (long i = 0; i < n; ++i) {
    std::vector<Int> ei(n, 0);
    ei[i] = 1;
    q.push_back(form.q_of(ei).get_str());
    for (long j = 0; j < n; ++j) {
      std::vector<Int> ej(n, 0);
      ej[j] = 1;
      b[i].push_back(form.b_of(ei, ej).get_str());
    }
  }
  if (json) {
    emit(out, Json{{"schema", 1},
                   {"label", l.label},
                   {"invariant_factors", json_ints(form.invariant_factors)},
                   {"q", q},
                   {"b", b}});
  } else {
    out << "lattice: " << l.label << "\n";
    out << "invariant factors: " << bracket(form.invariant_factors) << "\n";
    out << "q on generators:";
    for (const std::string& v : q) out << " " << v;
    out << "\n";
    out << "b on generator pairs:\n";
    for (long i = 0; i < n; ++i) {
      out << " ";
      for (long j = 0; j < n; ++j) out << " " << b[i][j];
      out << "\n";
    }
  }
  return 0;
}

int cmd_lattice_complement(const std::string& expr, const std::string& basis_text,
                           bool json, std::ostream& out) {
  const Lattice ambient = parse_lattice_expr(expr);
  const IntMat basis = parse_int_rows(basis_text, "--basis");
  const SublatticeEmbedding emb(ambient, basis);
  const SublatticeEmbedding comp = orthogonal_complement(emb);
  const Lattice t = comp.sublattice();
  if (json) {
    emit(out, Json{{"schema", 1},
                   {"ambient", ambient.label},
                   {"sublattice_rank", emb.sub_rank()},
                   {"sublattice_primitive", is_primitive(emb)},
                   {"complement_rank", comp.sub_rank()},
                   {"complement_basis", json_mat(comp.basis)},
                   {"complement_gram", json_mat(t.gram)}});
  } else {
    out << "ambient: " << ambient.label << "\n";
    out << "sublattice rank: " << emb.sub_rank() << "\n";
    out << "sublattice primitive: " << (is_primitive(emb) ? "true" : "false") << "\n";
    out << "complement rank: " << comp.sub_rank() << "\n";
    out << "complement basis: " << bracket_rows(comp.basis) << "\n";
    out << "complement gram: " << bracket_rows(t.gram) << "\n";
  }
  return 0;
}

int cmd_lattice_genus(const std::string& a_expr, const std::string& b_expr,
                      long bound, bool json, std::ostream& out) {
  const Lattice a = parse_lattice_expr(a_expr);
  const Lattice b = parse_lattice_expr(b_expr);
  const bool same = same_genus(a, b, Int(bound));
  if (json) {
    emit(out, Json{{"schema", 1},
                   {"a", a.label},
                   {"b", b.label},
                   {"same_genus", same}});
  } else {
    out << "same genus: " << (same ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_scenario_horikawa(const std::string& poly, bool json, std::ostream& out) {
  const WeightedRing branch({"u", "v", "w"}, {2, 2, 2});
  const HorikawaReport rep = horikawa_surface(parse_polynomial(poly, branch));
  if (json) {
    Json j{{"schema", 1},
           {"g", to_string(rep.G)},
           {"w5_present", rep.y5_present},
           {"quasi_smooth", rep.quasi_smooth}};
    if (rep.total) j["hodge_numbers"] = rep.total->entries;
    if (rep.eigen) {
      Json blocks = Json::array();
      for (const auto& [chi, block] : rep.eigen->blocks)
        blocks.push_back(Json{{"character", chi.values}, {"hodge_numbers", block.entries}});
      j["blocks"] = blocks;
    }
    emit(out, j);
  } else {
    out << "G: " << to_string(rep.G) << "\n";
    out << "w^5 present: " << (rep.y5_present ? "true" : "false") << "\n";
    out << "quasi-smooth: " << (rep.quasi_smooth ? "true" : "false") << "\n";
    if (rep.total) out << "hodge numbers: " << to_string(*rep.total) << "\n";
    if (rep.eigen)
      for (const auto& [chi, block] : rep.eigen->blocks)
        out << "character " << to_string(chi) << ": " << to_string(block) << "\n";
  }
  return 0;
}

int cmd_scenario_pair_lattice(bool json, std::ostream& out) {
  const Lattice m = degree5_pair_lattice();
  const Lattice model = direct_sum({lattice_U(2), lattice_D(4)});
  const Signature s = signature(m);
  const std::vector<Int> disc = discriminant_group(m);
  const bool genus_ok = same_genus(m, model);
  // class checks for h = 2l' + e_1 + ... + e_5
  const std::vector<Int> h = {2, 1, 1, 1, 1, 1};
  Int h_sq = 0, h_dot_l = 0;
  for (int i = 0; i < 6; ++i) {
    Int row = 0;
    for (int j = 0; j < 6; ++j) row += m.gram[i][j] * h[j];
    h_sq += h[i] * row;
    if (i == 0) h_dot_l = row;
  }
  if (json) {
    emit(out, Json{{"schema", 1},
                   {"gram", json_mat(m.gram)},
                   {"det", json_int(m.det())},
                   {"signature", json_signature(s)},
                   {"discriminant_group", json_ints(disc)},
                   {"h_square", json_int(h_sq)},
                   {"h_dot_l", json_int(h_dot_l)},
                   {"same_genus_as_U2_D4", genus_ok}});
  } else {
    out << "gram: " << bracket_rows(m.gram) << "\n";
    out << "det: " << m.det().get_str() << "\n";
    out << "signature: " << signature_text(s) << "\n";
    out << "discriminant group: " << bracket(disc) << "\n";
    out << "(2l' + e1 + ... + e5)^2: " << h_sq.get_str() << "\n";
    out << "(2l' + e1 + ... + e5) . l': " << h_dot_l.get_str() << "\n";
    out << "same genus as U(2) + D4: " << (genus_ok ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_scenario_k3_split(bool json, std::ostream& out) {
  const LatticeSplitReport rep = k3_orthogonal_split();
  if (json) {
    emit(out, Json{{"schema", 1},
                   {"m_gram", json_mat(rep.M.gram)},
                   {"m_primitive", rep.M_primitive},
                   {"t_rank", rep.T.rank()},
                   {"t_signature", json_signature(rep.T_signature)},
                   {"t_discriminant_group", json_ints(rep.T_disc)},
                   {"genus_m_ok", rep.genus_M_ok},
                   {"genus_t_ok", rep.genus_T_ok},
                   {"h_square_ok", rep.h_square_ok},
                   {"h_dot_l_ok", rep.h_dot_l_ok},
                   {"embedding_basis", json_mat(rep.embedding_basis)},
                   {"complement_basis", json_mat(rep.complement_basis)}});
  } else {
    out << "embedded M gram: " << bracket_rows(rep.M.gram) << "\n";
    out << "M primitive: " << (rep.M_primitive ? "true" : "false") << "\n";
    out << "T rank: " << rep.T.rank() << "\n";
    out << "T signature: " << signature_text(rep.T_signature) << "\n";
    out << "T discriminant group: " << bracket(rep.T_disc) << "\n";
    out << "genus of M matches the pair lattice: " << (rep.genus_M_ok ? "true" : "false") << "\n";
    out << "genus of T matches U + U2 + D4 + E8: " << (rep.genus_T_ok ? "true" : "false") << "\n";
    out << "class checks (h^2 = 2, h.l' = 1): "
        << (rep.h_square_ok && rep.h_dot_l_ok ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_scenario_moduli(bool json, std::ostream& out) {
  const ModuliDimensions dims = moduli_dimensions();
  if (json) {
    emit(out, Json{{"schema", 1},
                   {"branch_data", dims.branch_data},
                   {"hypersurface", dims.hypersurface}});
  } else {
    out << "branch data: " << dims.branch_data << "\n";
    out << "hypersurface: " << dims.hypersurface << "\n";
  }
  return 0;
}

int cmd_selftest(unsigned long long seed, bool json, std::ostream& out) {
  AcceptanceOptions options;
  options.seed = seed;
  const std::vector<CriterionResult> results = run_acceptance(options, nullptr);
  int failed = 0;
  for (const CriterionResult& r : results)
    if (!r.passed) ++failed;
  if (json) {
    Json criteria = Json::array();
    for (const CriterionResult& r : results)
      criteria.push_back(Json{{"index", r.index},
                              {"name", r.name},
                              {"passed", r.passed},
                              {"detail", r.detail}});
    emit(out, Json{{"schema", 1},
                   {"seed", seed},
                   {"criteria", criteria},
                   {"passed", static_cast<int>(results.size()) - failed},
                   {"failed", failed}});
  } else {
    for (const CriterionResult& r : results)
      out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.index << ": "
          << r.name << " - " << r.detail << "\n";
    out << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Hodge numbers and integral lattices for weighted hypersurfaces",
               "hodgekit"};
  app.require_subcommand(1);
  int code = 0;

  PolySource hodge_src;
  bool hodge_basis = false, hodge_json = false;
  auto* hodge_cmd = app.add_subcommand(
      "hodge", "primitive Hodge numbers of a quasi-smooth hypersurface");
  hodge_cmd->add_option("--ring", hodge_src.ring_decl, "ring declaration \"vars;weights\"");
  auto* hodge_poly = hodge_cmd->add_option("--poly", hodge_src.inline_src, "polynomial text");
  auto* hodge_file = hodge_cmd->add_option("--poly-file", hodge_src.file_path,
                                           "file with optional vars:/weights: headers");
  hodge_poly->excludes(hodge_file);
  hodge_cmd->add_flag("--basis", hodge_basis, "also print residue monomial bases");
  hodge_cmd->add_flag("--json", hodge_json, "JSON output");
  hodge_cmd->callback([&] { code = cmd_hodge(hodge_src, hodge_basis, hodge_json, out); });

  PolySource eigen_src;
  std::string eigen_factors, eigen_exps;
  bool eigen_json = false;
  auto* eigen_cmd = app.add_subcommand(
      "eigen", "character-eigenspace Hodge decomposition under a diagonal action");
  eigen_cmd->add_option("--ring", eigen_src.ring_decl, "ring declaration \"vars;weights\"");
  auto* eigen_poly = eigen_cmd->add_option("--poly", eigen_src.inline_src, "polynomial text");
  auto* eigen_file = eigen_cmd->add_option("--poly-file", eigen_src.file_path,
                                           "file with optional vars:/weights: headers");
  eigen_poly->excludes(eigen_file);
  eigen_cmd->add_option("--factors", eigen_factors, "invariant factors, e.g. \"2,2\"")
      ->required();
  eigen_cmd->add_option("--exps", eigen_exps,
                        "per-generator exponent rows, e.g. \"1,0,0,0;0,1,0,0\"");
  eigen_cmd->add_flag("--json", eigen_json, "JSON output");
  eigen_cmd->callback(
      [&] { code = cmd_eigen(eigen_src, eigen_factors, eigen_exps, eigen_json, out); });

  PolySource qs_src;
  bool qs_json = false;
  auto* qs_cmd = app.add_subcommand("quasismooth", "window test for quasi-smoothness");
  qs_cmd->add_option("--ring", qs_src.ring_decl, "ring declaration \"vars;weights\"");
  auto* qs_poly = qs_cmd->add_option("--poly", qs_src.inline_src, "polynomial text");
  auto* qs_file = qs_cmd->add_option("--poly-file", qs_src.file_path,
                                     "file with optional vars:/weights: headers");
  qs_poly->excludes(qs_file);
  qs_cmd->add_flag("--json", qs_json, "JSON output");
  qs_cmd->callback([&] { code = cmd_quasismooth(qs_src, qs_json, out); });

  PolySource hil_src;
  std::string hil_degrees;
  long hil_upto = -1;
  bool hil_json = false;
  auto* hil_cmd = app.add_subcommand(
      "hilbert", "closed-form Hilbert series coefficients of a complete intersection quotient");
  hil_cmd->add_option("--ring", hil_src.ring_decl, "ring declaration \"vars;weights\"");
  auto* hil_poly = hil_cmd->add_option("--poly", hil_src.inline_src,
                                       "polynomial; generator degrees = its partials");
  auto* hil_file = hil_cmd->add_option("--poly-file", hil_src.file_path,
                                       "file with optional vars:/weights: headers");
  hil_poly->excludes(hil_file);
  hil_cmd->add_option("--degrees", hil_degrees, "explicit generator degrees, e.g. \"9,9,8,5\"");
  hil_cmd->add_option("--upto", hil_upto, "last degree to report");
  hil_cmd->add_flag("--json", hil_json, "JSON output");
  hil_cmd->callback(
      [&] { code = cmd_hilbert(hil_src, hil_degrees, hil_upto, hil_json, out); });

  auto* lat_cmd = app.add_subcommand("lattice", "integral lattice computations");
  lat_cmd->require_subcommand(1);

  std::string info_expr;
  bool info_json = false;
  auto* info_cmd = lat_cmd->add_subcommand("info", "rank, parity, det, signature, A_L");
  info_cmd->add_option("--l", info_expr, "lattice expression, e.g. \"U2+D4\"")->required();
  info_cmd->add_flag("--json", info_json, "JSON output");
  info_cmd->callback([&] { code = cmd_lattice_info(info_expr, info_json, out); });

  std::string snf_expr;
  bool snf_json = false;
  auto* snf_cmd = lat_cmd->add_subcommand("snf", "Smith normal form diagonal of the Gram matrix");
  snf_cmd->add_option("--l", snf_expr, "lattice expression")->required();
  snf_cmd->add_flag("--json", snf_json, "JSON output");
  snf_cmd->callback([&] { code = cmd_lattice_snf(snf_expr, snf_json, out); });

  std::string disc_expr;
  bool disc_json = false;
  auto* disc_cmd = lat_cmd->add_subcommand("disc", "discriminant form q and b on generators");
  disc_cmd->add_option("--l", disc_expr, "lattice expression (even, nondegenerate)")->required();
  disc_cmd->add_flag("--json", disc_json, "JSON output");
  disc_cmd->callback([&] { code = cmd_lattice_disc(disc_expr, disc_json, out); });

  std::string comp_expr, comp_basis;
  bool comp_json = false;
  auto* comp_cmd = lat_cmd->add_subcommand("complement", "orthogonal complement of a sublattice");
  comp_cmd->add_option("--l", comp_expr, "ambient lattice expression")->required();
  comp_cmd->add_option("--basis", comp_basis, "generator rows, e.g. \"1,0,1,0;0,1,0,1\"")
      ->required();
  comp_cmd->add_flag("--json", comp_json, "JSON output");
  comp_cmd->callback([&] { code = cmd_lattice_complement(comp_expr, comp_basis, comp_json, out); });

  std::string genus_a, genus_b;
  long genus_bound = 65536;
  bool genus_json = false;
  auto* genus_cmd = lat_cmd->add_subcommand("genus", "signature + discriminant form comparison");
  genus_cmd->add_option("--a", genus_a, "first lattice expression")->required();
  genus_cmd->add_option("--b", genus_b, "second lattice expression")->required();
  genus_cmd->add_option("--bound", genus_bound, "largest discriminant group order to enumerate");
  genus_cmd->add_flag("--json", genus_json, "JSON output");
  genus_cmd->callback(
      [&] { code = cmd_lattice_genus(genus_a, genus_b, genus_bound, genus_json, out); });

  auto* scen_cmd = app.add_subcommand("scenario", "end-to-end verification scenarios");
  scen_cmd->require_subcommand(1);

  std::string hor_poly = "u^5 + v^5 + w^5";
  bool hor_json = false;
  auto* hor_cmd = scen_cmd->add_subcommand(
      "horikawa", "double-cover pipeline z^2 = F(u, v, w) with u = x0^2, v = x1^2, w = y");
  hor_cmd->add_option("--poly", hor_poly,
                      "quintic in u, v, w (weights 2,2,2); default the Fermat member");
  hor_cmd->add_flag("--json", hor_json, "JSON output");
  hor_cmd->callback([&] { code = cmd_scenario_horikawa(hor_poly, hor_json, out); });

  bool pair_json = false;
  auto* pair_cmd = scen_cmd->add_subcommand("pair-lattice", "the rank-6 lattice M and its genus");
  pair_cmd->add_flag("--json", pair_json, "JSON output");
  pair_cmd->callback([&] { code = cmd_scenario_pair_lattice(pair_json, out); });

  bool split_json = false;
  auto* split_cmd = scen_cmd->add_subcommand("k3-split", "M inside the K3 lattice and T = M-perp");
  split_cmd->add_flag("--json", split_json, "JSON output");
  split_cmd->callback([&] { code = cmd_scenario_k3_split(split_json, out); });

  bool moduli_json = false;
  auto* moduli_cmd = scen_cmd->add_subcommand("moduli", "two independent moduli dimension counts");
  moduli_cmd->add_flag("--json", moduli_json, "JSON output");
  moduli_cmd->callback([&] { code = cmd_scenario_moduli(moduli_json, out); });

  unsigned long long seed = AcceptanceOptions{}.seed;
  bool self_json = false;
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance criteria suite");
  self_cmd->add_option("--seed", seed, "random seed for the property suites");
  self_cmd->add_flag("--json", self_json, "JSON output");
  self_cmd->callback([&] { code = cmd_selftest(seed, self_json, out); });

  try {
    // CLI11's vector overload consumes arguments from the back.
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace hodgekit::cli
