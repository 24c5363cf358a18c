#include <doctest.h>

#include "tg/report.hpp"
#include "tg/verify.hpp"

using namespace tg;

namespace {

Graph fig2() { return Graph::from_edges(5, {{1, 2}, {1, 4}, {2, 3}, {2, 5}}); }

}  // namespace

TEST_CASE("verify_instance on the sample total graph") {
  VerificationRecord rec = verify_instance(fig2(), {Family::plus_incidence, 1, 1, 1, 1});
  CHECK(rec.oracle == 130);
  CHECK(rec.derived == 130);
  CHECK(rec.derived_matches);
  CHECK(rec.printed_matches);
  CHECK(rec.delta_printed == 0);
  CHECK(rec.n == 5);
  CHECK(rec.m == 4);
}

TEST_CASE("verify_instance printed delta vanishes at r=p") {
  for (int s = 1; s <= 3; ++s)
    for (int q = 0; q <= s; ++q) {
      VerificationRecord rec =
          verify_instance(fig2(), {Family::plus_incidence, 2, s, 2, q});
      CHECK(rec.printed_matches == rec.derived_matches);
    }
}

TEST_CASE("verify_instance on a degenerate empty graph") {
  Graph empty = Graph::from_edges(3, {});
  VerificationRecord rec = verify_instance(empty, {Family::plus_incidence, 2, 1, 0, 0});
  CHECK(rec.m == 0);
  CHECK(rec.derived_matches);
}

TEST_CASE("verify_complement_pairs") {
  CHECK(verify_complement_pairs(fig2()));
  CHECK(verify_complement_pairs(Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}})));
  CHECK(verify_complement_pairs(Graph::from_edges(1, {})));
}

TEST_CASE("verify_degree_formulas") {
  CHECK(verify_degree_formulas(fig2(), FamilySpec{Family::plus_incidence, 3, 3, 3, 3}));
  CHECK(verify_degree_formulas(fig2(), FamilySpec{Family::minus_incidence, 2, 2, 1, 1}));
  CHECK(verify_degree_formulas(Graph::from_edges(2, {}),
                               FamilySpec{Family::minus_incidence, 2, 3, 1, 2}));
}

TEST_CASE("empty sweep") {
  SweepParams params;
  params.trials = 0;
  SweepReport report = sweep(params);
  CHECK(report.record_count == 0);
  CHECK(report.records.empty());
  CHECK(report.failing.empty());
}

TEST_CASE("sweep determinism") {
  SweepParams params;
  params.trials = 3;
  params.n_max = 5;
  params.r_max = 2;
  params.s_max = 2;
  const std::string a = report_document(params, sweep(params), {});
  const std::string b = report_document(params, sweep(params), {});
  CHECK(a == b);
}

TEST_CASE("small sweep: derived matches everywhere, deltas explained") {
  SweepParams params;
  params.trials = 5;
  params.n_max = 6;
  params.r_max = 2;
  params.s_max = 2;
  SweepReport report = sweep(params);
  CHECK(report.record_count ==
        report.plus_stats.records + report.minus_stats.records);
  CHECK(report.plus_stats.derived_matches == report.plus_stats.records);
  CHECK(report.minus_stats.derived_matches == report.minus_stats.records);
  CHECK(report.degree_audit_failures == 0);
  CHECK(report.minimized_counterexamples.empty());

  // the only plus-family symbolic delta is the theorem cross term
  for (const auto& [tag, count] : report.erratum_plus)
    CHECK(tag == "-(r-p)*2m(n-1)(s-1)");
  // the minus-family display (a->n, b->m) agrees with the oracle
  CHECK(report.erratum_minus.empty());
  CHECK(report.minus_stats.printed_matches == report.minus_stats.records);

  // failing list holds exactly the printed mismatches here
  std::int64_t printed_mismatches =
      report.plus_stats.records - report.plus_stats.printed_matches;
  CHECK(static_cast<std::int64_t>(report.failing.size()) == printed_mismatches);
}

TEST_CASE("sweep argument validation") {
  SweepParams params;
  params.n_min = 0;
  CHECK_THROWS_AS(sweep(params), validation_error);
  SweepParams params2;
  params2.r_max = 0;
  CHECK_THROWS_AS(sweep(params2), validation_error);
}

TEST_CASE("graph enumeration order") {
  auto graphs = enumerate_graphs(3);
  CHECK(graphs.size() == 8);
  CHECK(graphs.front().edge_count() == 0);
  CHECK(graphs.back().edge_count() == 3);
  for (std::size_t i = 1; i < graphs.size(); ++i)
    CHECK(graphs[i - 1].edge_count() <= graphs[i].edge_count());
}

TEST_CASE("printed claim adjudication") {
  auto verdicts = adjudicate_printed_claims(/*max_n=*/4, /*max_rs=*/2);
  REQUIRE(verdicts.size() == 10);
  auto find = [&](const std::string& name) -> const ClaimVerdict& {
    for (const auto& v : verdicts)
      if (v.name == name) return v;
    REQUIRE(false);
    return verdicts.front();
  };

  // the plus-family constant block disagrees with the oracle (2m vs 4m
  // cross term); the witness is minimal and carries the symbolic delta
  const auto& t1 = find("plus_family_theorem");
  CHECK_FALSE(t1.matches);
  CHECK(t1.delta != 0);
  CHECK_FALSE(t1.witness_edges.empty());

  // the minus-family display read with a->n, b->m is identical to the derived
  // expansion
  CHECK(find("minus_family_theorem(a=n,b=m)").matches);

  // plus family: the +++ and +-+ corollary lines check out, -++ and --+ do not
  CHECK(find("corollary_+++").matches);
  CHECK(find("corollary_+-+").matches);
  CHECK_FALSE(find("corollary_-++").matches);
  CHECK_FALSE(find("corollary_--+").matches);

  // minus-family corollary lines all match the oracle
  CHECK(find("corollary_++-").matches);
  CHECK(find("corollary_+--").matches);
  CHECK(find("corollary_-+-").matches);
  CHECK(find("corollary_---").matches);
}
