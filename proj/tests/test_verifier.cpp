#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <doctest.h>

#include "hyspec/dsl.hpp"
#include "hyspec/spectrum.hpp"
#include "hyspec/verifier.hpp"

using namespace hyspec;

#ifndef HYSPEC_SOURCE_DIR
#error "HYSPEC_SOURCE_DIR must point at the repository root"
#endif

TEST_CASE("manifest and registry agree") {
  auto reg = registry_ids();
  auto man = manifest_ids();
  CHECK(reg == man);
  CHECK(std::set<std::string>(reg.begin(), reg.end()).size() == reg.size());
}

TEST_CASE("embedded default corpus equals the data file byte for byte") {
  std::ifstream in(std::string(HYSPEC_SOURCE_DIR) + "/data/default_corpus.json",
                   std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == std::string(default_corpus_json()));
}

TEST_CASE("corpus json round trip") {
  Corpus c = parse_corpus_json(default_corpus_json());
  CHECK(c.rings.size() == 9);
  CHECK(c.seed == 20260823);
  CHECK(c.subspaces.empty());
  CHECK(c.checks.empty());

  nlohmann::ordered_json j = corpus_to_json(c);
  Corpus c2 = parse_corpus_json(j.dump());
  CHECK(corpus_to_json(c2) == j);

  CHECK_THROWS_AS(parse_corpus_json("not json"), CorpusError);
  CHECK_THROWS_AS(parse_corpus_json(R"({"rings":[{"name":"a"}]})"), CorpusError);
}

TEST_CASE("duplicate ring names are rejected") {
  CHECK_THROWS_AS(
      parse_corpus_json(R"({"rings":[{"name":"a","dsl":"Z4"},{"name":"a","dsl":"Z9"}]})"),
      CorpusError);
}

TEST_CASE("subspace selectors") {
  FiniteRing r = build_ring(RingSpec::zn(12));
  IdealLattice lat = all_ideals(r);
  auto primes = spec_primes(lat);

  CHECK(select_subspace("spec", r, primes).points.size() == 2);
  CHECK(select_subspace("max", r, primes).points.size() == 2);
  CHECK(select_subspace("min", r, primes).points.size() == 2);
  CHECK(select_subspace("indices:[0]", r, primes).points.size() == 1);
  CHECK(select_subspace("indices:[]", r, primes).points.empty());
  CHECK_THROWS_AS(select_subspace("indices:[7]", r, primes), BadSpec);
  CHECK_THROWS_AS(select_subspace("bogus", r, primes), BadSpec);
}

TEST_CASE("run_one: single check on a single instance") {
  auto reps = run_one("P3.2", RingSpec::zn(12), "spec");
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].verdict == Verdict::Pass);
  CHECK(reps[0].id == "P3.2");

  // an empty subspace demotes a pass to a tagged degenerate
  auto deg = run_one("T3.5", RingSpec::zn(12), "indices:[]");
  REQUIRE(deg.size() == 1);
  CHECK(deg[0].verdict == Verdict::Degenerate);
  REQUIRE(!deg[0].notes.empty());

  CHECK_THROWS_AS(run_one("NO.SUCH", RingSpec::zn(12), "spec"), UnknownCheckId);
}

TEST_CASE("full default run: no failures, deterministic output") {
  Corpus c = parse_corpus_json(default_corpus_json());
  auto a = run_all(c);
  CHECK_FALSE(any_failures(a));
  auto b = run_all(c);
  CHECK(report_to_json(a, c.seed, c.caps).dump(2) ==
        report_to_json(b, c.seed, c.caps).dump(2));

  // every registered check produced at least one report
  std::set<std::string> seen;
  for (const CheckReport& r : a) seen.insert(r.id);
  for (const std::string& id : registry_ids()) CHECK(seen.count(id) == 1);

  nlohmann::ordered_json j = report_to_json(a, c.seed, c.caps);
  CHECK(j.contains("run"));
  CHECK(j.contains("results"));
  CHECK(j.contains("summary"));
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["run"]["seed"] == 20260823);
}

TEST_CASE("check filters and unknown ids") {
  Corpus c;
  c.rings.push_back({"z12", RingSpec::zn(12)});
  c.checks = {"T3.5"};
  auto reps = run_all(c);
  CHECK(!reps.empty());
  for (const CheckReport& r : reps) CHECK(r.id == "T3.5");

  c.checks = {"NO.SUCH"};
  CHECK_THROWS_AS(run_all(c), UnknownCheckId);
}

TEST_CASE("empty corpus yields an empty report") {
  Corpus c;
  auto reps = run_all(c);
  CHECK(reps.empty());
  CHECK_FALSE(any_failures(reps));
}
