// tgraph: construct transformation graphs, compute degree-based indices, and
// verify closed-form first-Zagreb expressions against the construction oracle.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tg/graph.hpp"
#include "tg/indices.hpp"
#include "tg/report.hpp"
#include "tg/transform.hpp"
#include "tg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

tg::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tg::parse_error("cannot open input file: " + path);
  std::vector<std::string> warnings;
  try {
    tg::Graph g = tg::parse_edge_list(in, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return g;
  } catch (const tg::validation_error& e) {
    // bad file content is an input error, not a usage error
    throw tg::parse_error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tg::parse_error("cannot open output file: " + path);
  out << content;
}

struct TransformArgs {
  std::string input;
  std::string classical;
  int r = 0, s = 0;
  std::string x, y, z;
  std::string format = "dot";
  std::string output;
};

int run_transform(const TransformArgs& args) {
  tg::TransformSpec spec;
  if (!args.classical.empty()) {
    auto signs = tg::parse_signs(args.classical, 3);
    spec.r = 1;
    spec.s = 1;
    spec.x = {signs[0]};
    spec.y = {signs[1]};
    spec.z = {signs[2]};
  } else {
    spec.r = args.r;
    spec.s = args.s;
    spec.x = tg::parse_signs(args.x, args.r);
    spec.y = tg::parse_signs(args.y, args.s);
    spec.z = tg::parse_signs(args.z, args.r * args.s);
  }
  spec.validate();

  const tg::Graph base = load_graph(args.input);
  const tg::TransformedGraph constructed = tg::generalized_transform(base, spec);
  const std::string out = args.format == "dot"
                              ? tg::to_dot(constructed, base)
                              : tg::serialize_edge_list(constructed.graph);
  if (args.output.empty())
    std::cout << out;
  else
    write_file(args.output, out);
  return kExitOk;
}

int run_index(const std::string& input, bool as_json) {
  const tg::Graph g = load_graph(input);
  const tg::IndexBundle b = tg::index_bundle(g);
  if (as_json) {
    nlohmann::json j;
    j["n"] = b.n;
    j["m"] = b.m;
    j["M1"] = b.m1;
    j["M2"] = b.m2;
    j["F"] = b.f;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n=" << b.n << " m=" << b.m << " M1=" << b.m1 << " M2=" << b.m2
              << " F=" << b.f << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  tg::SweepParams params;
  std::string report_path;
  std::string graph_path;
};

int run_verify(const VerifyArgs& args) {
  tg::SweepReport report;
  if (!args.graph_path.empty()) {
    const tg::Graph g = load_graph(args.graph_path);
    for (tg::Family family : {tg::Family::plus_incidence, tg::Family::minus_incidence}) {
      tg::FamilyStats& stats = family == tg::Family::plus_incidence
                                   ? report.plus_stats : report.minus_stats;
      for (int r = 1; r <= args.params.r_max; ++r)
        for (int s = 1; s <= args.params.s_max; ++s)
          for (int p = 0; p <= r; ++p)
            for (int q = 0; q <= s; ++q) {
              auto rec = tg::verify_instance(g, {family, r, s, p, q});
              ++stats.records;
              if (rec.derived_matches) ++stats.derived_matches;
              if (rec.printed_matches) ++stats.printed_matches;
              if (!rec.derived_matches || !rec.printed_matches)
                report.failing.push_back(rec);
              report.records.push_back(std::move(rec));
            }
    }
    report.record_count = static_cast<std::int64_t>(report.records.size());
  } else {
    report = tg::sweep(args.params);
  }

  const auto claims = tg::adjudicate_printed_claims();
  const std::string doc = tg::report_document(args.params, report, claims);
  if (args.report_path.empty())
    std::cout << doc;
  else
    write_file(args.report_path, doc);

  const std::int64_t derived_matches =
      report.plus_stats.derived_matches + report.minus_stats.derived_matches;
  const std::int64_t total = report.plus_stats.records + report.minus_stats.records;
  std::cerr << "records: " << total << ", derived matches: " << derived_matches << '\n';
  return derived_matches == total ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transformation-graph index and closed-form verification tool"};
  app.require_subcommand(1);

  TransformArgs targs;
  auto* cmd_transform = app.add_subcommand(
      "transform", "construct a classical or (r,s)-generalised transformation graph");
  cmd_transform->add_option("--input", targs.input, "edge-list input file")->required();
  auto* classical = cmd_transform->add_option(
      "--classical", targs.classical, "three-character sign string, e.g. \"+-+\"");
  auto* ropt = cmd_transform->add_option("--r", targs.r, "number of vertex copies");
  auto* sopt = cmd_transform->add_option("--s", targs.s, "number of edge copies");
  cmd_transform->add_option("--x", targs.x, "vertex-copy signs, length r");
  cmd_transform->add_option("--y", targs.y, "edge-copy signs, length s");
  cmd_transform->add_option("--z", targs.z, "incidence signs, row-major length r*s");
  cmd_transform->add_option("--format", targs.format, "output format")
      ->check(CLI::IsMember({"dot", "edges"}))
      ->capture_default_str();
  cmd_transform->add_option("--output", targs.output, "output path (default stdout)");
  classical->excludes(ropt);
  ropt->needs(sopt);

  std::string index_input;
  bool index_json = false;
  auto* cmd_index = app.add_subcommand("index", "compute n, m, M1, M2, F");
  cmd_index->add_option("--input", index_input, "edge-list input file")->required();
  cmd_index->add_flag("--json", index_json, "emit JSON");

  VerifyArgs vargs;
  auto* cmd_verify = app.add_subcommand(
      "verify", "sweep graphs and compare closed forms against the construction oracle");
  cmd_verify->add_option("--n-min", vargs.params.n_min, "")->capture_default_str();
  cmd_verify->add_option("--n-max", vargs.params.n_max, "")->capture_default_str();
  cmd_verify->add_option("--trials", vargs.params.trials, "")->capture_default_str();
  cmd_verify->add_option("--edge-prob", vargs.params.edge_prob, "")->capture_default_str();
  cmd_verify->add_option("--seed", vargs.params.seed, "")->capture_default_str();
  cmd_verify->add_option("--r-max", vargs.params.r_max, "")->capture_default_str();
  cmd_verify->add_option("--s-max", vargs.params.s_max, "")->capture_default_str();
  cmd_verify->add_option("--report", vargs.report_path, "report output path");
  cmd_verify->add_option("--graph", vargs.graph_path,
                         "verify a single fixed graph instead of random trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_transform->parsed()) {
      if (targs.classical.empty()) {
        if (targs.r < 1 || targs.s < 1 || targs.x.empty() || targs.y.empty() ||
            targs.z.empty()) {
          std::cerr << "error: need --classical or all of --r --s --x --y --z\n";
          return kExitUsage;
        }
      }
      return run_transform(targs);
    }
    if (cmd_index->parsed()) return run_index(index_input, index_json);
    if (cmd_verify->parsed()) {
      if (vargs.params.n_min < 1 || vargs.params.n_max < vargs.params.n_min ||
          vargs.params.trials < 0 || vargs.params.r_max < 1 || vargs.params.s_max < 1 ||
          vargs.params.edge_prob < 0.0 || vargs.params.edge_prob > 1.0) {
        std::cerr << "error: invalid sweep ranges\n";
        return kExitUsage;
      }
      return run_verify(vargs);
    }
  } catch (const tg::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
