#ifndef HYSPEC_REPORT_HPP
#define HYSPEC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace hyspec {

enum class Verdict { Pass, Fail, Vacuous, Degenerate, Skipped };

const char* verdict_name(Verdict v);

// Outcome of one theorem check on one (ring, Y) instance. Failures always
// carry a witness; vacuous reports name the unmet premise in `notes`.
struct CheckReport {
  std::string id;
  std::string ring;
  std::string y;                 // deterministic subspace description
  Verdict verdict = Verdict::Pass;
  nlohmann::ordered_json witness;  // null unless verdict == Fail (or finding)
  std::vector<std::string> notes;

  void fail(nlohmann::ordered_json w) {
    verdict = Verdict::Fail;
    witness = std::move(w);
  }
};

}  // namespace hyspec

#endif
