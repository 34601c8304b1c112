#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gring/config.hpp"

namespace gring {

/// Finite associative ring given by addition and multiplication
/// tables. Element 0 is the additive zero; unity is optional and, when
/// declared, verified. The ring may be non-commutative and non-unital.
///
/// Axiom check order (fixed, so failing inputs always report the same
/// axiom with its lexicographically smallest witness):
///   add-identity, add-commutative, add-associative, add-inverse,
///   distributive-left, distributive-right, mul-associative, unity.
class FiniteRing {
 public:
  static constexpr Elem zero = 0;

  static FiniteRing validate(const std::vector<std::vector<Elem>>& add,
                             const std::vector<std::vector<Elem>>& mul,
                             std::optional<Elem> unity,
                             const Config& cfg = {});

  std::size_t order() const noexcept { return order_; }
  std::optional<Elem> unity() const noexcept { return unity_; }
  bool has_unity() const noexcept { return unity_.has_value(); }

  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;

  // Unchecked row access for inner loops.
  const Elem* add_row(Elem a) const { return add_.data() + std::size_t{a} * order_; }
  const Elem* mul_row(Elem a) const { return mul_.data() + std::size_t{a} * order_; }

  const std::vector<Elem>& add_table() const noexcept { return add_; }
  const std::vector<Elem>& mul_table() const noexcept { return mul_; }

 private:
  FiniteRing() = default;
  void check_index(Elem a) const;

  std::size_t order_ = 0;
  std::vector<Elem> add_;  // row-major
  std::vector<Elem> mul_;  // row-major
  std::vector<Elem> neg_;
  std::optional<Elem> unity_;
};

}  // namespace gring
