#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gring/config.hpp"
#include "gring/element_set.hpp"
#include "gring/grading.hpp"
#include "gring/ideals.hpp"

namespace gring {

enum class Predicate { prime, weakly_prime, almost_prime };

enum class DeciderMethod {
  pairs_right,        // quantified over graded right ideals
  pairs_twosided,     // quantified over graded two-sided ideals
  elementwise,        // quantified over homogeneous element pairs
  colon_condition4,   // (P:<x>) == P union (P^2:<x>), both sides
  colon_condition5,   // (P:<x>) == P or == (P^2:<x>), both sides
};

/// Outcome of one primality decision. Negative verdicts carry a
/// witness that re-verifies under the definitional checker:
/// a pair of graded (right or two-sided) ideals, a pair of homogeneous
/// elements, or the homogeneous element at which a colon condition
/// fails.
struct Verdict {
  bool value = true;
  Predicate predicate = Predicate::prime;
  DeciderMethod method = DeciderMethod::pairs_right;
  std::optional<std::pair<ElementSet, ElementSet>> ideal_pair;
  std::optional<std::pair<Elem, Elem>> element_pair;
  std::optional<Elem> colon_element;
  std::optional<Reading> reading;
  std::string detail;
};

struct ColonCriterionResult {
  Verdict condition4;
  Verdict condition5;
  bool value() const { return condition4.value && condition5.value; }
};

// Definitional deciders over the enumerated graded right ideals.
// All require P to be a proper graded right ideal (NotProper /
// NotGradedRightIdeal otherwise). Overloads taking an ideal list use
// it directly; the others enumerate first.
Verdict is_graded_prime_right(const GradedRing& gr, const ElementSet& p,
                              std::span<const ElementSet> ideals);
Verdict is_graded_weakly_prime_right(const GradedRing& gr, const ElementSet& p,
                                     std::span<const ElementSet> ideals);
Verdict is_graded_almost_prime_right(const GradedRing& gr, const ElementSet& p,
                                     std::span<const ElementSet> ideals);
Verdict is_graded_prime_right(const GradedRing& gr, const ElementSet& p,
                              const Config& cfg = {});
Verdict is_graded_weakly_prime_right(const GradedRing& gr, const ElementSet& p,
                                     const Config& cfg = {});
Verdict is_graded_almost_prime_right(const GradedRing& gr, const ElementSet& p,
                                     const Config& cfg = {});

/// Same implication as the right-ideal decider but quantified over
/// graded two-sided ideals. Requires P proper graded two-sided.
Verdict is_graded_almost_prime_twosided(const GradedRing& gr, const ElementSet& p,
                                        std::span<const ElementSet> twosided_ideals);
Verdict is_graded_almost_prime_twosided(const GradedRing& gr, const ElementSet& p,
                                        const Config& cfg = {});

/// Element-wise prime criterion for unital rings: xRy inside P forces
/// x or y into P, over homogeneous x, y.
Verdict is_graded_prime_elementwise(const GradedRing& gr, const ElementSet& p);

/// Element-wise almost-prime criterion for unital rings and proper
/// graded two-sided P: xRy inside P but not inside P^2 forces x or y
/// into P, over homogeneous x, y.
Verdict is_graded_almost_prime_elementwise(const GradedRing& gr, const ElementSet& p);

/// Colon-ideal criteria for unital rings and proper graded two-sided
/// P, evaluated for all homogeneous x outside P and both colon sides,
/// under the chosen reading of <x>. Conditions 4 and 5 are reported
/// separately, each with its first failing x.
ColonCriterionResult almost_prime_colon_criterion(const GradedRing& gr,
                                                  const ElementSet& p, Reading reading);

/// Replays a negative verdict's witness through the definitional
/// checks; true iff the witness demonstrates a genuine violation.
bool verify_witness(const GradedRing& gr, const ElementSet& p, const Verdict& v);

struct IdealReport {
  ElementSet ideal;
  IdealFlags flags;
  Verdict prime;
  Verdict weakly_prime;
  Verdict almost_prime;
};

struct ClassificationReport {
  std::vector<IdealReport> ideals;             // proper graded right ideals
  std::vector<ElementSet> non_graded_right_ideals;  // proper right ideals, not graded
  bool all_almost_prime = true;
};

/// Full report over all proper graded right ideals, each predicate
/// decided by its definitional method; also lists the proper right
/// ideals that fail gradedness.
ClassificationReport classify_all(const GradedRing& gr, const Config& cfg = {});

/// The set {x*r*y : r in R}.
ElementSet sandwich_set(const FiniteRing& r, Elem x, Elem y);

}  // namespace gring
