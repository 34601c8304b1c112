#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gring/catalog.hpp"
#include "gring/config.hpp"
#include "gring/element_set.hpp"
#include "gring/ideals.hpp"

namespace gring {

/// A falsified audit instance. `replay` re-runs the definitional
/// deciders on stored copies and returns true iff the violation is
/// still there; descriptions carry the ideals involved.
struct AuditCounterexample {
  std::string ring;
  std::string description;
  std::function<bool()> replay;
};

struct AuditResult {
  std::string theorem;
  std::string statement;
  std::size_t checked = 0;  // hypothesis-qualified instances verified
  std::size_t skipped = 0;  // instances whose hypothesis failed
  std::vector<std::string> notes;
  std::vector<AuditCounterexample> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

/// A (K, P) pair with P/K graded almost prime in R/K while P is not
/// graded almost prime in R; evidence that quotient transfer does not
/// reverse.
struct ConverseFinding {
  std::string ring;
  ElementSet k;
  ElementSet p;
  std::function<bool()> replay;
};

/// Checks each supported theorem about graded almost prime ideals
/// exhaustively over a corpus of graded rings: every qualifying ideal
/// (and every canonical projection R -> R/K for the homomorphism
/// statements) is instantiated and the conclusion is verified with the
/// definitional deciders. Audits that need unity or two-sidedness skip
/// non-qualifying instances and count the skips.
class AuditEngine {
 public:
  AuditEngine(std::vector<CorpusRing> corpus, Config cfg = {},
              std::set<Reading> readings = {Reading::xr_only, Reading::rxr});
  ~AuditEngine();
  AuditEngine(AuditEngine&&) noexcept;
  AuditEngine& operator=(AuditEngine&&) noexcept;

  static const std::vector<std::string>& theorem_ids();

  AuditResult run(const std::string& theorem_id);
  std::vector<AuditResult> run_all();

  /// Searches all (K, P) pairs over the corpus for quotient-transfer
  /// converse failures.
  std::vector<ConverseFinding> converse_search();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace gring
