#ifndef HYSPEC_VERIFIER_HPP
#define HYSPEC_VERIFIER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hyspec/relative.hpp"
#include "hyspec/report.hpp"

namespace hyspec {

struct CorpusRing {
  std::string name;
  RingSpec spec;
};

struct Corpus {
  std::vector<CorpusRing> rings;
  std::vector<std::string> subspaces;  // selectors; empty = default enumeration
  std::vector<std::string> checks;     // id filter; empty = full registry
  Caps caps;
  unsigned seed = 20260823;
};

// Corpus JSON: {"rings":[{"name":..,"dsl":..}|{"name":..,"tables":{...}}],
// "subspaces":[..], "checks":[..], "caps":{..}, "seed":..}
Corpus parse_corpus_json(const std::string& text);
nlohmann::ordered_json corpus_to_json(const Corpus& corpus);

// The corpus shipped in data/default_corpus.json, embedded for `--corpus
// default`; a test asserts the two stay in sync.
const char* default_corpus_json();

// Registered check ids, in execution order.
std::vector<std::string> registry_ids();
// Static manifest of the results that must be covered; a unit test asserts
// it equals registry_ids().
std::vector<std::string> manifest_ids();

std::vector<CheckReport> run_all(const Corpus& corpus);
std::vector<CheckReport> run_one(const std::string& check_id,
                                 const RingSpec& spec,
                                 const std::string& y_selector,
                                 const Caps& caps = {});

nlohmann::ordered_json report_to_json(const std::vector<CheckReport>& reports,
                                      unsigned seed, const Caps& caps);

// Subspace selector: "spec" | "max" | "min" | "indices:[..]" (positions in
// the deterministic spec ordering) | "all-subsets" handled by the runner.
SubSpace select_subspace(const std::string& selector, const FiniteRing& ring,
                         const std::vector<Ideal>& primes);

bool any_failures(const std::vector<CheckReport>& reports);

}  // namespace hyspec

#endif
