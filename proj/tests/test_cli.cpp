#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "doctest.h"
#include "hodgekit/jacobian.hpp"
#include "json.hpp"

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = hodgekit::cli::run_cli(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("hodge subcommand on the running example") {
  const RunResult r = run({"hodge", "--ring", "x0,x1,y,z;1,1,2,5", "--poly",
                           "z^2-x0^10-x1^10-y^5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "quasi-smooth: true"));
  CHECK(contains(r.out, "hodge numbers: [2, 28, 2]"));
  CHECK(r.err.empty());
}

TEST_CASE("hodge with residue bases") {
  const RunResult r = run({"hodge", "--ring", "x0,x1,y,z;1,1,2,5", "--poly",
                           "z^2-x0^10-x1^10-y^5", "--basis"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "residue basis (pole order 1): x0 x1"));
  CHECK(contains(r.out, "residue basis (pole order 3): x0^8*x1^7*y^3 x0^7*x1^8*y^3"));
}

TEST_CASE("hodge JSON output round-trips") {
  const RunResult r = run({"hodge", "--ring", "x0,x1,y,z;1,1,2,5", "--poly",
                           "z^2-x0^10-x1^10-y^5", "--json"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("quasi_smooth") == true);
  CHECK(j.at("hodge_numbers") == nlohmann::json::array({2, 28, 2}));
  CHECK(j.at("degree") == 10);
  CHECK(j.at("ring").at("weights") == nlohmann::json::array({1, 1, 2, 5}));
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("hodge rejects a non-quasi-smooth member with exit code 1") {
  const RunResult r = run({"hodge", "--ring", "x0,x1,y,z;1,1,2,5", "--poly",
                           "z^2-x0^10-x1^10"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "error:"));
  CHECK(r.out.empty());
}

TEST_CASE("usage problems exit with code 2") {
  CHECK(run({"hodge", "--ring", "x;1"}).code == 2);           // no polynomial source
  CHECK(run({"hodge", "--poly", "x"}).code == 2);             // no ring
  CHECK(run({"hodge", "--ring", "x;1", "--poly", "x", "--poly-file", "f"}).code == 2);
  CHECK(run({"hodge", "--bogus-flag"}).code == 2);
  CHECK(run({}).code == 2);                                   // missing subcommand
  CHECK(run({"frobnicate"}).code == 2);                       // unknown subcommand
  CHECK(run({"eigen", "--ring", "x,y,z;1,1,1", "--poly", "x^3+y^3+z^3"}).code == 2);
  CHECK(run({"lattice", "genus", "--a", "U"}).code == 2);     // --b is required
  CHECK(run({"lattice"}).code == 2);                          // missing sub-subcommand
}

TEST_CASE("domain problems exit with code 1") {
  CHECK(run({"hodge", "--ring", "x0,x1,y,z;1,1,2,5", "--poly", "x0 +"}).code == 1);
  CHECK(run({"hodge", "--ring", "x0,x1;1", "--poly", "x0"}).code == 1);  // bad ring
  CHECK(run({"lattice", "info", "--l", "Q7"}).code == 1);
  CHECK(run({"lattice", "genus", "--a", "A1", "--b", "A1", "--bound", "1"}).code == 1);
  CHECK(run({"hilbert", "--ring", "x;1", "--degrees", "nope", "--upto", "3"}).code == 1);
}

TEST_CASE("quasismooth answers both ways with exit code 0") {
  const RunResult yes = run({"quasismooth", "--ring", "x0,x1,y,z;1,1,2,5", "--poly",
                             "z^2-x0^10-x1^10-y^5"});
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "quasi-smooth: true"));
  const RunResult no = run({"quasismooth", "--ring", "x0,x1,y,z;1,1,2,5", "--poly",
                            "z^2-x0^10-x1^10"});
  CHECK(no.code == 0);
  CHECK(contains(no.out, "quasi-smooth: false"));
}

TEST_CASE("eigen subcommand prints every character block") {
  const RunResult r = run({"eigen", "--ring", "x0,x1,y,z;1,1,2,5", "--poly",
                           "z^2-x0^10-x1^10-y^5", "--factors", "2,2", "--exps",
                           "1,0,0,0;0,1,0,0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "total: [2, 28, 2]"));
  CHECK(contains(r.out, "character (0, 1): [1, 14, 1]"));
  CHECK(contains(r.out, "character (1, 0): [1, 14, 1]"));
  CHECK(contains(r.out, "character (0, 0): [0, 0, 0]"));
  CHECK(contains(r.out, "character (1, 1): [0, 0, 0]"));
}

TEST_CASE("hilbert with explicit degrees matches the library") {
  const RunResult r = run({"hilbert", "--ring", "x0,x1,y,z;1,1,2,5", "--degrees",
                           "9,9,8,5", "--upto", "27", "--json"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  const hodgekit::WeightedRing ring({"x0", "x1", "y", "z"}, {1, 1, 2, 5});
  const std::vector<hodgekit::Int> expect =
      hodgekit::hilbert_series_closed_form(ring, {9, 9, 8, 5}, 27);
  REQUIRE(j.at("coefficients").size() == expect.size());
  for (std::size_t k = 0; k < expect.size(); ++k)
    CHECK(j.at("coefficients")[k] == static_cast<long>(expect[k].get_si()));
  CHECK(j.at("generator_degrees") == nlohmann::json::array({9, 9, 8, 5}));
}

TEST_CASE("hilbert derives degrees and window from a polynomial") {
  const RunResult r = run({"hilbert", "--ring", "x0,x1,y,z;1,1,2,5", "--poly",
                           "z^2-x0^10-x1^10-y^5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "generator degrees: 9 9 8 5"));
  CHECK(contains(r.out, ", 28,"));
  CHECK(contains(r.out, ", 0]"));  // window zeros close the list

  CHECK(run({"hilbert", "--ring", "x;1"}).code == 2);  // neither source
  CHECK(run({"hilbert", "--ring", "x;1", "--poly", "x^2", "--degrees", "1",
             "--upto", "2"}).code == 2);               // both sources
  CHECK(run({"hilbert", "--ring", "x;1", "--degrees", "1"}).code == 2);  // no --upto
  CHECK(run({"hilbert", "--degrees", "1", "--upto", "2"}).code == 2);    // no ring
}

TEST_CASE("polynomial files carry their own ring headers") {
  const std::string path = "cli_poly_input_test.txt";
  {
    std::ofstream f(path);
    f << "# branch data for the running example\n";
    f << "vars: x0, x1, y, z\n";
    f << "weights: 1, 1, 2, 5\n";
    f << "z^2 - x0^10\n";
    f << "  - x1^10 - y^5\n";
  }
  const RunResult r = run({"hodge", "--poly-file", path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "hodge numbers: [2, 28, 2]"));

  const RunResult missing = run({"hodge", "--poly-file", "no_such_file_here.txt"});
  CHECK(missing.code == 1);
}

TEST_CASE("lattice info") {
  const RunResult k3 = run({"lattice", "info", "--l", "K3"});
  CHECK(k3.code == 0);
  CHECK(contains(k3.out, "lattice: K3"));
  CHECK(contains(k3.out, "rank: 22"));
  CHECK(contains(k3.out, "even: true"));
  CHECK(contains(k3.out, "det: -1"));
  CHECK(contains(k3.out, "signature: (3, 19)"));
  CHECK(contains(k3.out, "discriminant group: []"));

  const RunResult sum = run({"lattice", "info", "--l", "U2+D4"});
  CHECK(contains(sum.out, "lattice: U(2) + D4"));
  CHECK(contains(sum.out, "det: -16"));
  CHECK(contains(sum.out, "discriminant group: [2, 2, 2, 2]"));
}

TEST_CASE("lattice snf and disc") {
  const RunResult snf = run({"lattice", "snf", "--l", "M"});
  CHECK(snf.code == 0);
  CHECK(contains(snf.out, "smith diagonal: [1, 1, 2, 2, 2, 2]"));

  const RunResult disc = run({"lattice", "disc", "--l", "U2"});
  CHECK(disc.code == 0);
  CHECK(contains(disc.out, "invariant factors: [2, 2]"));
  CHECK(contains(disc.out, "1/2"));

  CHECK(run({"lattice", "disc", "--l", "A1+U"}).code == 0);
}

TEST_CASE("lattice complement") {
  const RunResult r = run({"lattice", "complement", "--l", "U+U", "--basis",
                           "1,0,1,0;0,1,0,1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sublattice rank: 2"));
  CHECK(contains(r.out, "sublattice primitive: true"));
  CHECK(contains(r.out, "complement rank: 2"));

  const RunResult single = run({"lattice", "complement", "--l", "U", "--basis", "1,0"});
  CHECK(contains(single.out, "complement rank: 1"));
  CHECK(contains(single.out, "complement gram: [[0]]"));
}

TEST_CASE("lattice genus") {
  const RunResult yes = run({"lattice", "genus", "--a", "U2+D4", "--b", "M"});
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "same genus: true"));

  const RunResult no = run({"lattice", "genus", "--a", "U", "--b", "U2"});
  CHECK(no.code == 0);
  CHECK(contains(no.out, "same genus: false"));

  const RunResult j = run({"lattice", "genus", "--a", "U2+D4", "--b", "M", "--json"});
  const nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("same_genus") == true);
  CHECK(parsed.at("a") == "U(2) + D4");
  CHECK(parsed.at("b") == "M");
}

TEST_CASE("scenario horikawa") {
  const RunResult r = run({"scenario", "horikawa"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "G: -x0^10 - x1^10 - y^5 + z^2"));
  CHECK(contains(r.out, "w^5 present: true"));
  CHECK(contains(r.out, "quasi-smooth: true"));
  CHECK(contains(r.out, "hodge numbers: [2, 28, 2]"));
  CHECK(contains(r.out, "character (0, 1): [1, 14, 1]"));

  const RunResult bad = run({"scenario", "horikawa", "--poly", "u^5 + v^5"});
  CHECK(bad.code == 0);
  CHECK(contains(bad.out, "quasi-smooth: false"));
  CHECK(!contains(bad.out, "hodge numbers:"));
}

TEST_CASE("scenario pair-lattice and k3-split") {
  const RunResult pair = run({"scenario", "pair-lattice"});
  CHECK(pair.code == 0);
  CHECK(contains(pair.out, "det: -16"));
  CHECK(contains(pair.out, "signature: (1, 5)"));
  CHECK(contains(pair.out, "(2l' + e1 + ... + e5)^2: 2"));
  CHECK(contains(pair.out, "(2l' + e1 + ... + e5) . l': 1"));
  CHECK(contains(pair.out, "same genus as U(2) + D4: true"));

  const RunResult split = run({"scenario", "k3-split"});
  CHECK(split.code == 0);
  CHECK(contains(split.out, "M primitive: true"));
  CHECK(contains(split.out, "T rank: 16"));
  CHECK(contains(split.out, "T signature: (2, 14)"));
  CHECK(contains(split.out, "T discriminant group: [2, 2, 2, 2]"));
  CHECK(contains(split.out, "genus of M matches the pair lattice: true"));
  CHECK(contains(split.out, "genus of T matches U + U2 + D4 + E8: true"));
  CHECK(contains(split.out, "class checks (h^2 = 2, h.l' = 1): true"));
}

TEST_CASE("scenario moduli emits the pinned JSON") {
  const RunResult j = run({"scenario", "moduli", "--json"});
  CHECK(j.code == 0);
  CHECK(j.out == "{\"schema\":1,\"branch_data\":16,\"hypersurface\":16}\n");
  const RunResult t = run({"scenario", "moduli"});
  CHECK(contains(t.out, "branch data: 16"));
  CHECK(contains(t.out, "hypersurface: 16"));
}

TEST_CASE("output is byte-deterministic across runs") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"scenario", "horikawa", "--json"},
        std::vector<std::string>{"lattice", "info", "--l", "K3", "--json"},
        std::vector<std::string>{"scenario", "k3-split", "--json"}}) {
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("help exits cleanly") {
  const RunResult top = run({"--help"});
  CHECK(top.code == 0);
  CHECK(contains(top.out, "hodge"));
  CHECK(contains(top.out, "lattice"));
  const RunResult sub = run({"lattice", "genus", "--help"});
  CHECK(sub.code == 0);
  CHECK(contains(sub.out, "--bound"));
}
