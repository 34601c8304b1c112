#pragma once

#include <cstddef>
#include <vector>

#include "gring/config.hpp"

namespace gring {

/// Finite group given by its Cayley table. Element 0 is the identity.
/// Instances only exist after full validation (closure, identity,
/// associativity, inverses) and are immutable afterwards.
class FiniteGroup {
 public:
  static constexpr Elem identity = 0;

  /// Validates all group axioms. Throws DomainError for malformed
  /// tables or out-of-range entries, AxiomViolation (with the
  /// lexicographically smallest witness) when an axiom fails.
  static FiniteGroup validate(const std::vector<std::vector<Elem>>& cayley);

  std::size_t order() const noexcept { return order_; }
  Elem op(Elem a, Elem b) const;
  Elem inverse(Elem a) const;

  const std::vector<Elem>& table() const noexcept { return table_; }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Elem> table_;    // row-major order x order
  std::vector<Elem> inverse_;
};

}  // namespace gring
