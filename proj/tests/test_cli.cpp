#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"

#include "chromsym/chromatic.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/symfunc_io.hpp"
#include "cli.hpp"
#include "experiments.hpp"

using namespace chromsym;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("csf subcommand") {
  auto r = run({"csf", "J(K1,E2)", "--basis", "mt"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 * mt[1,1,1]\n1 * mt[2,1]\n");

  r = run({"csf", "K4", "--basis", "e"});
  CHECK(r.out == "24 * e[4]\n");

  r = run({"csf", "n=1; edges=", "--basis", "mt"});
  CHECK(r.out == "1 * mt[1]\n");

  r = run({"csf", "n=3; edges=0-1,1-2", "--basis", "e"});
  CHECK(r.out == "1 * e[2,1]\n3 * e[3]\n");

  r = run({"csf", "n=3; edges=0-1,1-2", "--basis", "p"});
  CHECK(r.out == "1 * p[1,1,1]\n-2 * p[2,1]\n1 * p[3]\n");

  r = run({"csf", "n=4; edges=0-1,1-2,2-3", "--check"});
  CHECK(r.code == 0);
  CHECK(r.err.find("cotree=skipped") != std::string::npos);
  CHECK(r.err.find("stable=agree") != std::string::npos);

  r = run({"--format", "json", "csf", "J(K1,E3)", "--check"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["graph"] == "n=4; edges=0-1,0-2,0-3");
  CHECK(symfunc_from_json(j["csf_mtilde"]).identical(csf_stable(named::claw())));
  CHECK(falling_from_json(j["chromatic_poly_falling"]) == chromatic_poly(named::claw()));
  CHECK(j["check"]["powersum"] == "agree");
}

TEST_CASE("flags may follow the subcommand") {
  auto r = run({"csf", "K3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).contains("csf_mtilde"));
}

TEST_CASE("errors and exit codes") {
  auto r = run({"csf", "J(K1,"});
  CHECK(r.code == cli::kExitError);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(run({"csf", "K1", "--basis", "h"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"canonize", "n=4; edges=0-1,1-2,2-3"}).code == cli::kExitError);
  CHECK(run({"epositive", "--n-max", "10"}).code == cli::kExitError);
  CHECK(run({"distinguish", "cograph", "--n-max", "11"}).code == cli::kExitError);
  CHECK(run({"enumerate", "chordal", "--n-max", "3"}).code == cli::kExitError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("chrompoly, classify and canonize") {
  auto r = run({"chrompoly", "K3", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "falling: (t)_3\nstandard: t^3 - 3*t^2 + 2*t\n");

  r = run({"classify", "n=4; edges=0-1,0-2,0-3", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("claw_free: no") != std::string::npos);
  CHECK(r.out.find("threshold: yes") != std::string::npos);

  r = run({"canonize", "C(U(K2,K2))", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "J(E2,E2)\n");
  r = run({"canonize", "n=4; edges=0-2,0-3,1-2,1-3"});
  CHECK(r.out == "J(E2,E2)\n");
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "threshold", "--n-max", "5", "--check"});
  CHECK(r.code == 0);
  CHECK(r.err.find("counts for n=1..5: 1,2,4,8,16") != std::string::npos);

  r = run({"--format", "json", "enumerate", "cograph", "--n-max", "6"});
  std::vector<long long> counts;
  for (const auto& line : json_lines(r.out)) {
    if (line["type"] == "count") counts.push_back(line["count"]);
  }
  CHECK(counts == std::vector<long long>{1, 2, 4, 10, 24, 66});

  r = run({"enumerate", "trivially_perfect", "--n-max", "1"});
  CHECK(r.out == "K1\n# n=1 count=1\n");
}

TEST_CASE("distinguish") {
  auto r = run({"--format", "json", "distinguish", "trivially_perfect", "--n-max", "6", "--check"});
  CHECK(r.code == 0);
  for (const auto& line : json_lines(r.out)) {
    if (line["type"] == "level") CHECK(line["collisions"] == 0);
    if (line["type"] == "claim") CHECK(line["pass"] == true);
  }
  r = run({"distinguish", "cograph", "--n-max", "7"});
  CHECK(r.code == 0);
}

TEST_CASE("demos") {
  auto r = run({"--format", "json", "stanley-demo"});
  CHECK(r.code == 0);
  auto lines = json_lines(r.out);
  CHECK(lines.size() == 5);
  for (const auto& line : lines) CHECK(line["pass"] == true);

  r = run({"counterexample-demo"});
  CHECK(r.code == 0);
  CHECK(r.err.find("6/6 claims pass") != std::string::npos);
}

TEST_CASE("epositive") {
  auto r = run({"--format", "json", "epositive", "--n-max", "6"});
  CHECK(r.code == 0);
  bool saw_contrast = false;
  for (const auto& line : json_lines(r.out)) {
    if (line["type"] == "contrast") {
      saw_contrast = true;
      CHECK(line["expr"] == "J(K1,E3)");
      CHECK(line["e_coefficient"]["coeff"] == "-2");
    }
    if (line["type"] == "failure") FAIL(line.dump());
  }
  CHECK(saw_contrast);
}

TEST_CASE("structure lemma helpers") {
  CHECK(cli::is_k1_or_two_cliques(named::k1()));
  CHECK(cli::is_k1_or_two_cliques(disjoint_union(named::complete(3), named::complete(2))));
  CHECK_FALSE(cli::is_k1_or_two_cliques(named::edgeless(3)));
  CHECK_FALSE(cli::is_k1_or_two_cliques(named::path(3)));
  // K1 + (K2 ⊔ K2) satisfies the lemma; the claw K1 + E3 does not.
  CHECK(cli::coconnected_structure_holds(join(named::k1(), named::two_k2())));
  CHECK_FALSE(cli::coconnected_structure_holds(named::claw()));
}

TEST_CASE("certificates are self-verifying") {
  const auto [a, b] = cli::counterexample_pair();
  cli::CollisionCertificate cert{10, a, b, csf_cotree(a), false};
  CHECK(cli::verify_certificate(cert));
  cert.csf = cert.csf + SymFunc::basis_element(Basis::m_tilde, Partition::repeated(1, 10));
  CHECK_FALSE(cli::verify_certificate(cert));
}
