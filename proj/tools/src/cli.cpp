#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chromsym/chromatic.hpp"
#include "chromsym/cotree.hpp"
#include "chromsym/errors.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/graph_text.hpp"
#include "chromsym/symfunc_io.hpp"
#include "experiments.hpp"

namespace chromsym::cli {

namespace {

using nlohmann::json;

enum class Format { text, json };

struct Settings {
  Format format = Format::text;
  bool check = false;
  std::uint64_t seed = 0;
};

// Writes one record per line: a JSON object, or key=value pairs in text mode.
class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void record(const json& j) {
    if (format_ == Format::json) {
      out_ << j.dump() << '\n';
      return;
    }
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      out_ << (first ? "" : " ") << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  Format format_;
};

struct Input {
  std::string text;
  SimpleGraph graph;
  std::optional<ConstructExpr> expr;  // set when the input was an expression
};

Input read_input(const std::string& text) {
  Input in;
  in.text = text;
  if (looks_like_graph_text(text)) {
    in.graph = parse_graph(text);
  } else {
    in.expr = parse_expr(text);
    in.graph = to_graph(*in.expr);
  }
  return in;
}

std::optional<ConstructExpr> cotree_of(const Input& in) {
  if (in.expr) return canonicalize(*in.expr);
  if (in.graph.empty()) return std::nullopt;
  try {
    return from_cograph(in.graph);
  } catch (const NotACograph&) {
    return std::nullopt;
  }
}

// Primary route: the cotree for expressions, stable partitions for graph text.
SymFunc primary_csf(const Input& in) {
  if (in.expr) return csf_cotree(canonicalize(*in.expr));
  return csf_stable(in.graph);
}

// Every route that fits within its guard, in the m~ basis.
json cross_check(const Input& in, const SymFunc& reference, bool& ok) {
  json report = json::object();
  const ChromaticGuards guards;
  const SymFunc ref = to_m_tilde(reference);
  auto record = [&](const char* route, const std::optional<SymFunc>& value) {
    if (!value) {
      report[route] = "skipped";
      return;
    }
    const bool same = to_m_tilde(*value).identical(ref);
    ok = ok && same;
    report[route] = same ? "agree" : "DISAGREE";
  };
  record("stable", in.graph.order() <= guards.max_stable_vertices ? std::optional(csf_stable(in.graph))
                                                                  : std::nullopt);
  const auto tree = cotree_of(in);
  record("cotree", tree ? std::optional(csf_cotree(*tree)) : std::nullopt);
  record("powersum", in.graph.edge_count() <= guards.max_powersum_edges ? std::optional(csf_powersum(in.graph))
                                                                        : std::nullopt);
  return report;
}

std::string summarize(const json& j) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    s << (first ? "" : " ") << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
    first = false;
  }
  return s.str();
}

int cmd_csf(const std::string& text, const std::string& basis_text, const Settings& st, std::ostream& out,
            std::ostream& err) {
  const Input in = read_input(text);
  const Basis basis = parse_basis(basis_text);
  // The power-sum basis comes straight from the edge-subset expansion.
  const SymFunc x = basis == Basis::p ? csf_powersum(in.graph) : primary_csf(in);
  const SymFunc shown = to_basis(x, basis);
  bool ok = true;
  json checks;
  if (st.check) {
    checks = cross_check(in, x, ok);
    err << "check: " << summarize(checks) << '\n';
  }
  if (st.format == Format::json) {
    const SymFunc tilde = to_m_tilde(x);
    json j = {{"graph", format_graph(in.graph)},
              {"csf", to_json(shown)},
              {"csf_mtilde", to_json(tilde)},
              {"chromatic_poly_falling", to_json(epsilon_m_tilde(tilde))}};
    if (in.expr) j["expr"] = to_string(*in.expr);
    if (st.check) j["check"] = checks;
    out << j.dump() << '\n';
  } else {
    out << to_text(shown) << '\n';
  }
  return ok ? kExitOk : kExitClaimFailed;
}

int cmd_chrompoly(const std::string& text, const Settings& st, std::ostream& out, std::ostream& err) {
  const Input in = read_input(text);
  const FallingPoly chi = epsilon_m_tilde(primary_csf(in));
  bool ok = true;
  if (st.check) {
    json checks;
    const ChromaticGuards guards;
    if (in.graph.order() <= guards.max_stable_vertices) {
      const bool same = chromatic_poly(in.graph) == chi;
      ok = ok && same;
      checks["stable"] = same ? "agree" : "DISAGREE";
    } else {
      checks["stable"] = "skipped";
    }
    try {
      std::vector<Rational> xs, ys;
      for (int t = 0; t <= in.graph.order() + 1; ++t) {
        xs.emplace_back(t);
        ys.emplace_back(count_colorings(in.graph, t));
      }
      const bool same = interpolate(xs, ys) == chi.to_standard();
      ok = ok && same;
      checks["colorings"] = same ? "agree" : "DISAGREE";
    } catch (const GuardError&) {
      checks["colorings"] = "skipped";
    }
    err << "check: " << summarize(checks) << '\n';
  }
  if (st.format == Format::json) {
    out << json{{"graph", format_graph(in.graph)},
                {"chromatic_poly_falling", to_json(chi)},
                {"chromatic_poly", to_string(chi.to_standard())}}
               .dump()
        << '\n';
  } else {
    out << "falling: " << to_string(chi) << '\n' << "standard: " << to_string(chi.to_standard()) << '\n';
  }
  return ok ? kExitOk : kExitClaimFailed;
}

int cmd_classify(const std::string& text, const Settings& st, std::ostream& out, std::ostream& err) {
  const Input in = read_input(text);
  const GraphClasses c = classify(in.graph);
  json j = {{"graph", format_graph(in.graph)},
            {"threshold", c.threshold},
            {"trivially_perfect", c.trivially_perfect},
            {"cograph", c.cograph},
            {"claw_free", c.claw_free},
            {"triangle_free_complement", c.triangle_free_complement}};
  bool ok = true;
  if (st.check && !in.graph.empty()) {
    const bool agree = recognize_constructive(in.graph, GraphClass::threshold) == c.threshold &&
                       recognize_constructive(in.graph, GraphClass::trivially_perfect) == c.trivially_perfect &&
                       recognize_constructive(in.graph, GraphClass::cograph) == c.cograph;
    ok = agree;
    err << "check: constructive recognition " << (agree ? "agrees" : "DISAGREES") << '\n';
  }
  if (st.format == Format::json) {
    out << j.dump() << '\n';
  } else {
    for (const auto& key : {"threshold", "trivially_perfect", "cograph", "claw_free", "triangle_free_complement"}) {
      out << key << ": " << (j[key].get<bool>() ? "yes" : "no") << '\n';
    }
  }
  return ok ? kExitOk : kExitClaimFailed;
}

int cmd_canonize(const std::string& text, const Settings& st, std::ostream& out, std::ostream& err) {
  const Input in = read_input(text);
  const ConstructExpr c = in.expr ? canonicalize(*in.expr) : from_cograph(in.graph);
  bool ok = true;
  if (st.check) {
    ok = from_cograph(to_graph(c)) == c && is_canonical(c);
    err << "check: recovered cotree " << (ok ? "matches" : "DIFFERS") << '\n';
  }
  if (st.format == Format::json) {
    out << json{{"canonical", to_string(c)}, {"encoding", c.encoding()}, {"n", c.size()}}.dump() << '\n';
  } else {
    out << to_string(c) << '\n';
  }
  return ok ? kExitOk : kExitClaimFailed;
}

bool member_by_filter(const GraphClasses& k, GraphClass c) {
  switch (c) {
    case GraphClass::threshold:
      return k.threshold;
    case GraphClass::trivially_perfect:
      return k.trivially_perfect;
    case GraphClass::cograph:
      return k.cograph;
  }
  return false;
}

int cmd_enumerate(const std::string& class_text, int n_min, int n_max, const Settings& st, std::ostream& out,
                  std::ostream& err) {
  const GraphClass c = parse_graph_class(class_text);
  if (n_min < 1 || n_max < n_min) throw InvalidArgument("need 1 <= --n-min <= --n-max");
  std::vector<std::string> counts;
  bool ok = true;
  for (int n = n_min; n <= n_max; ++n) {
    const auto members = enumerate_class(c, n);
    for (const auto& e : members) {
      if (st.format == Format::json) {
        out << json{{"type", "graph"}, {"n", n}, {"expr", to_string(e)}}.dump() << '\n';
      } else {
        out << to_string(e) << '\n';
      }
    }
    if (st.format == Format::json) {
      out << json{{"type", "count"}, {"n", n}, {"count", members.size()}}.dump() << '\n';
    } else {
      out << "# n=" << n << " count=" << members.size() << '\n';
    }
    counts.push_back(std::to_string(members.size()));
    if (st.check && n <= kEnumerateGraphsLimit) {
      const auto all = enumerate_graphs(n);
      const auto filtered = std::count_if(all.begin(), all.end(),
                                          [&](const SimpleGraph& g) { return member_by_filter(classify(g), c); });
      const bool same = static_cast<std::size_t>(filtered) == members.size();
      ok = ok && same;
      err << "check n=" << n << ": forbidden-subgraph filter gives " << filtered << (same ? " (agree)" : " (DISAGREE)")
          << '\n';
    }
  }
  std::string joined;
  for (const auto& s : counts) joined += (joined.empty() ? "" : ",") + s;
  err << class_name(c) << " counts for n=" << n_min << ".." << n_max << ": " << joined << '\n';
  return ok ? kExitOk : kExitClaimFailed;
}

int cmd_distinguish(const std::string& class_text, int n_max, const Settings& st, std::ostream& out,
                    std::ostream& err) {
  const GraphClass c = parse_graph_class(class_text);
  Emitter emit(out, st.format);
  DistinguishOptions options;
  options.spot_check = st.check;
  options.seed = st.seed;
  std::size_t total_graphs = 0, total_collisions = 0, bad_certificates = 0, spot_failures = 0;
  std::vector<CollisionCertificate> at_ten;
  bool early_collision = false;
  distinguish(c, n_max, options, [&](const DistinguishLevel& level) {
    total_graphs += level.graphs;
    total_collisions += level.collisions.size();
    spot_failures += level.spot_check_failures;
    json line = {{"type", "level"}, {"n", level.n}, {"graphs", level.graphs}, {"collisions", level.collisions.size()}};
    if (st.check) line["spot_checks"] = level.spot_checks;
    emit.record(line);
    for (const auto& cert : level.collisions) {
      json j = to_json(cert);
      const bool verified = verify_certificate(cert);
      j["verified"] = verified;
      if (!verified || cert.isomorphic) ++bad_certificates;
      emit.record(j);
    }
    if (!level.collisions.empty() && (c != GraphClass::cograph || level.n <= 9)) early_collision = true;
    if (level.n == 10) at_ten = level.collisions;
  });

  std::vector<std::pair<std::string, bool>> claims;
  if (c == GraphClass::cograph) {
    claims.emplace_back("no collisions among cographs with n <= 9", !early_collision);
    if (n_max >= 10) {
      const auto [a, b] = counterexample_pair();
      claims.emplace_back("n = 10 collision list contains the known pair", contains_pair(at_ten, a, b));
    }
  } else {
    claims.emplace_back(std::string("no collisions among ") + std::string(class_name(c)) + " graphs",
                        total_collisions == 0);
  }
  claims.emplace_back("every certificate re-verifies", bad_certificates == 0);
  if (st.check) claims.emplace_back("cotree route matches stable partitions on sampled graphs", spot_failures == 0);

  bool ok = true;
  for (const auto& [name, pass] : claims) {
    emit.record({{"type", "claim"}, {"name", name}, {"pass", pass}});
    ok = ok && pass;
  }
  err << class_name(c) << " n<=" << n_max << ": " << total_graphs << " graphs, " << total_collisions
      << " collision pair(s); " << (ok ? "all claims pass" : "CLAIM FAILED") << '\n';
  return ok ? kExitOk : kExitClaimFailed;
}

int report_claims(const std::vector<Claim>& claims, const char* title, const Settings& st, std::ostream& out,
                  std::ostream& err) {
  Emitter emit(out, st.format);
  std::size_t passed = 0;
  for (const auto& claim : claims) {
    json j = {{"type", "claim"}, {"name", claim.name}, {"pass", claim.pass}};
    if (!claim.detail.is_null() && !claim.detail.empty()) j["detail"] = claim.detail;
    emit.record(j);
    passed += claim.pass;
  }
  err << title << ": " << passed << '/' << claims.size() << " claims pass\n";
  return passed == claims.size() ? kExitOk : kExitClaimFailed;
}

int cmd_epositive(int n_max, const Settings& st, std::ostream& out, std::ostream& err) {
  Emitter emit(out, st.format);
  const EPositiveReport report = check_epositive(n_max, [&](const EPositiveLevel& level) {
    emit.record({{"type", "level"},
                 {"n", level.n},
                 {"cographs", level.cographs},
                 {"claw_free", level.claw_free},
                 {"e_positive", level.e_positive},
                 {"complement_triangle_free", level.complement_triangle_free},
                 {"disconnected_exceptions", level.disconnected_exceptions},
                 {"structure_checked", level.structure_checked},
                 {"failures", level.failures.size()}});
    for (const auto& f : level.failures) {
      emit.record({{"type", "failure"}, {"n", level.n}, {"expr", to_string(f.expr)}, {"reason", f.reason}});
    }
  });
  if (report.contrast) {
    json j = {{"type", "contrast"}, {"expr", to_string(*report.contrast)}, {"claw_free", false}};
    if (report.contrast_witness) {
      j["e_coefficient"] = {{"partition", report.contrast_witness->first.parts()},
                            {"coeff", report.contrast_witness->second.get_str()}};
    }
    emit.record(j);
  }
  emit.record({{"type", "claim"}, {"name", "claw excluded from the claw-free list"}, {"pass", !report.claw_listed}});
  std::size_t total = 0;
  for (const auto& level : report.levels) total += level.claw_free;
  const bool ok = report.pass();
  emit.record({{"type", "claim"},
               {"name", "claw-free cographs: e-positive; connected ones have triangle-free complements and the "
                        "coconnected structure"},
               {"pass", ok}});
  err << "claw-free cographs n<=" << n_max << ": " << total << " checked; " << (ok ? "all pass" : "FAILURES")
      << '\n';
  return ok ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic symmetric functions of small graphs and cographs", "chromsym"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings st;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check", st.check, "Cross-validate with independent routes");
  app.add_option("--seed", st.seed, "Seed for sampled checks");

  std::string input, basis = "mt", klass;
  int n_max = 0, n_min = 1;

  auto* csf = app.add_subcommand("csf", "Chromatic symmetric function of a graph or expression");
  csf->add_option("input", input, "Graph text (n=..; edges=..) or construction expression")->required();
  csf->add_option("--basis", basis, "Basis: mt, m, e, p")->check(CLI::IsMember({"mt", "m", "e", "p"}));

  auto* chrom = app.add_subcommand("chrompoly", "Chromatic polynomial");
  chrom->add_option("input", input)->required();

  auto* cls = app.add_subcommand("classify", "Forbidden-subgraph classification");
  cls->add_option("input", input)->required();

  auto* canon = app.add_subcommand("canonize", "Canonical cotree expression of a cograph");
  canon->add_option("input", input)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List canonical expressions of a class");
  enumerate->add_option("class", klass, "threshold, trivially_perfect or cograph")->required();
  enumerate->add_option("--n-max", n_max, "Largest vertex count")->required();
  enumerate->add_option("--n-min", n_min, "Smallest vertex count");

  auto* dist = app.add_subcommand("distinguish", "Search a class for CSF collisions");
  dist->add_option("class", klass)->required();
  dist->add_option("--n-max", n_max)->required();

  auto* stanley = app.add_subcommand("stanley-demo", "Two 5-vertex graphs with equal CSF");
  auto* counter = app.add_subcommand("counterexample-demo", "Two 10-vertex cographs with equal CSF");

  auto* epos = app.add_subcommand("epositive", "e-positivity of claw-free cographs");
  n_max = 0;
  epos->add_option("--n-max", n_max, "Largest vertex count (<= 9)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  st.format = format == "json" ? Format::json : Format::text;

  try {
    if (*csf) return cmd_csf(input, basis, st, out, err);
    if (*chrom) return cmd_chrompoly(input, st, out, err);
    if (*cls) return cmd_classify(input, st, out, err);
    if (*canon) return cmd_canonize(input, st, out, err);
    if (*enumerate) return cmd_enumerate(klass, n_min, n_max, st, out, err);
    if (*dist) return cmd_distinguish(klass, n_max, st, out, err);
    if (*stanley) return report_claims(stanley_claims(), "stanley-demo", st, out, err);
    if (*counter) return report_claims(counterexample_claims(), "counterexample-demo", st, out, err);
    if (*epos) return cmd_epositive(n_max, st, out, err);
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.position() << ": " << e.what() << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace chromsym::cli
