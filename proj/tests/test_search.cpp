#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "pathuniq/constructions.hpp"
#include "pathuniq/io.hpp"
#include "pathuniq/path_unique.hpp"
#include "pathuniq/rng.hpp"
#include "pathuniq/search.hpp"

using namespace pathuniq;

TEST_CASE("splitmix64 reproduces the reference stream") {
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xe220a8397b1dcdafull);
  CHECK(sm.next() == 0x6e789e6aa1b965f4ull);
  CHECK(sm.next() == 0x06c45d188009454full);
}

TEST_CASE("xoshiro streams are deterministic and chain-independent") {
  Xoshiro256ss a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  Xoshiro256ss c0 = Xoshiro256ss::for_chain(1, 0);
  Xoshiro256ss c1 = Xoshiro256ss::for_chain(1, 1);
  CHECK(c0.next() != c1.next());

  Xoshiro256ss r(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.next_below(13) < 13);
    double u = r.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(std::string(kRngAlgorithm) == "splitmix64+xoshiro256**");
}

TEST_CASE("triangle graph of a vertex order") {
  GraphSpec spec(2, 2);
  // order 01 < 00 < 11 < 10, i.e. rank[v] by vertex index 00,01,10,11
  std::array<std::uint32_t, 4> rank = {1, 0, 3, 2};
  EdgeSet g = triangle_graph(spec, rank);
  CHECK(to_edge_list(g) == "q=2 d=2\n0 0 0\n0 1 0\n0 1 1\n1 1 0\n1 1 1\n");
  CHECK(is_path_unique(g).is_path_unique);

  // the identity order keeps five edges too, but they are not path unique
  std::array<std::uint32_t, 4> identity = {0, 1, 2, 3};
  EdgeSet h = triangle_graph(spec, identity);
  CHECK(h.indices() == std::vector<EdgeIndex>{0, 1, 2, 3, 7});
  CHECK_FALSE(is_path_unique(h).is_path_unique);

  // loops always survive: both endpoints share one rank
  for (Word loop : {Word{0, 0, 0}, Word{1, 1, 1}}) {
    CHECK(g.contains(edge_index(spec, loop)));
    CHECK(h.contains(edge_index(spec, loop)));
  }
}

TEST_CASE("triangle graph validates the rank array") {
  GraphSpec spec(2, 2);
  std::array<std::uint32_t, 3> short_rank = {0, 1, 2};
  CHECK_THROWS_AS(triangle_graph(spec, short_rank), SpecError);
  std::array<std::uint32_t, 4> dup = {0, 1, 1, 3};
  CHECK_THROWS_AS(triangle_graph(spec, dup), SpecError);
  std::array<std::uint32_t, 4> high = {0, 1, 2, 4};
  CHECK_THROWS_AS(triangle_graph(spec, high), SpecError);
}

TEST_CASE("exhaustive search finds the small optima exactly") {
  struct Row {
    std::uint32_t q, d;
    std::uint64_t best;
  };
  for (Row r : {Row{2, 1, 2}, {3, 1, 4}, {4, 1, 6}, {2, 2, 5}}) {
    SearchOutcome out = exhaustive_gamma(GraphSpec(r.q, r.d));
    CHECK(out.best_count == r.best);
    CHECK(out.exact);
    CHECK(out.method == SearchMethod::Exhaustive);
    CHECK(out.seed == 0);
    CHECK(out.rng == "none");
    CHECK(out.iterations > 0);
    CHECK(verify_outcome(out));
  }
}

TEST_CASE("symmetry reduction preserves the optimum and prunes work") {
  GraphSpec spec(2, 2);
  SearchOutcome plain = exhaustive_gamma(spec);
  ExhaustiveOptions opt;
  opt.symmetry_reduction = true;
  SearchOutcome reduced = exhaustive_gamma(spec, opt);
  CHECK(reduced.best_count == plain.best_count);
  CHECK(reduced.exact);
  CHECK(reduced.iterations <= plain.iterations);
  CHECK(verify_outcome(reduced));

  opt.symmetry_reduction = true;
  CHECK_THROWS_AS(exhaustive_gamma(GraphSpec(9, 1), opt), GuardError);
}

TEST_CASE("budgeted search reports inexactness instead of lying") {
  ExhaustiveOptions opt;
  opt.budget = 3;
  SearchOutcome out = exhaustive_gamma(GraphSpec(2, 2), opt);
  CHECK_FALSE(out.exact);
  CHECK(out.iterations <= 4);
  CHECK(verify_outcome(out));  // whatever was found is still a valid subgraph
  CHECK(out.best_count < 5);
}

TEST_CASE("annealing config is validated") {
  AnnealConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  AnnealConfig bad = cfg;
  bad.iterations = 0;
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = cfg;
  bad.initial_temperature = 0.0;
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = cfg;
  bad.cooling_rate = 1.0;
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = cfg;
  bad.cooling_rate = 0.0;
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = cfg;
  bad.restarts = 0;
  CHECK_THROWS_AS(bad.validate(), SpecError);
}

TEST_CASE("annealing is reproducible and hits the binary optimum") {
  GraphSpec spec(2, 2);
  AnnealConfig cfg;  // documented defaults, seed 1
  SearchOutcome a = anneal_gamma(spec, cfg);
  SearchOutcome b = anneal_gamma(spec, cfg);
  CHECK(a.best_count == 5);
  CHECK(outcome_to_json(a) == outcome_to_json(b));
  CHECK(a.witness == b.witness);
  CHECK_FALSE(a.exact);
  CHECK(a.method == SearchMethod::Anneal);
  CHECK(a.seed == 1);
  CHECK(a.iterations == cfg.iterations * cfg.restarts);
  CHECK(a.rng == kRngAlgorithm);
  CHECK(verify_outcome(a));

  AnnealConfig other = cfg;
  other.seed = 99;
  SearchOutcome c = anneal_gamma(spec, other);
  CHECK(verify_outcome(c));  // any seed yields a valid witness
}

TEST_CASE("outcome verification rejects tampering") {
  SearchOutcome out = exhaustive_gamma(GraphSpec(2, 2));
  REQUIRE(verify_outcome(out));

  SearchOutcome wrong_count = out;
  wrong_count.best_count += 1;
  CHECK_FALSE(verify_outcome(wrong_count));

  SearchOutcome wrong_witness = out;
  wrong_witness.witness = build_full_graph(GraphSpec(2, 2));
  CHECK_FALSE(verify_outcome(wrong_witness));

  SearchOutcome wrong_spec = out;
  wrong_spec.spec = GraphSpec(2, 3);
  CHECK_FALSE(verify_outcome(wrong_spec));
}

TEST_CASE("outcomes serialize with their configuration") {
  SearchOutcome ex = exhaustive_gamma(GraphSpec(2, 1));
  nlohmann::json je = outcome_to_json(ex);
  CHECK(je["method"] == "exhaustive");
  CHECK(je["best_count"] == 2);
  CHECK(je["exact"] == true);
  CHECK(je["config"].is_null());
  CHECK(je["witness"].is_array());
  CHECK(je["witness"].size() == 2);

  AnnealConfig cfg;
  cfg.seed = 3;
  cfg.iterations = 1000;
  cfg.restarts = 2;
  nlohmann::json ja = outcome_to_json(anneal_gamma(GraphSpec(2, 2), cfg));
  CHECK(ja["method"] == "anneal");
  CHECK(ja["rng"] == "splitmix64+xoshiro256**");
  CHECK(ja["seed"] == 3);
  CHECK(ja["config"]["iterations"] == 1000);
  CHECK(ja["config"]["restarts"] == 2);
  CHECK(ja["config"]["initial_temperature"] == 2.0);
  CHECK(ja["config"]["cooling_rate"] == 0.9995);
}
