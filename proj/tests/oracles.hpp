#pragma once

// Test-only oracles, kept independent of the library's algorithms:
// subset-scan subgroup enumeration, repeated-pass closures, a separate
// Gaussian-integer model and a naive full-scan ring validator. Library
// results are compared against these, never the other way around.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/element_set.hpp"
#include "gring/grading.hpp"
#include "gring/ring.hpp"

namespace oracle {

using gring::Elem;
using gring::ElementSet;

struct AxiomFailure {
  std::string axiom;
  std::vector<std::size_t> witness;
};

/// Naive cubic validation scan in the library's documented axiom
/// order; nullopt when all ring axioms hold.
std::optional<AxiomFailure> naive_validate_ring(
    const std::vector<std::vector<Elem>>& add,
    const std::vector<std::vector<Elem>>& mul, std::optional<Elem> unity);

/// Every additive subgroup, found by scanning all subsets containing 0.
/// Only for rings of order <= 16.
std::vector<ElementSet> subgroups_by_subsets(const gring::FiniteRing& r);

/// Every additive subgroup, found by breadth-first generation (any
/// order).
std::vector<ElementSet> subgroups_by_generation(const gring::FiniteRing& r);

std::vector<ElementSet> filter_right_ideals(const gring::FiniteRing& r,
                                            const std::vector<ElementSet>& subgroups);
std::vector<ElementSet> filter_left_absorbing(const gring::FiniteRing& r,
                                              const std::vector<ElementSet>& sets);
std::vector<ElementSet> filter_graded(const gring::GradedRing& gr,
                                      const std::vector<ElementSet>& sets);

/// Additive closure by repeated full passes over the set.
ElementSet closure_by_passes(const gring::FiniteRing& r, const ElementSet& seed);

/// Additive closure of all pairwise products, via closure_by_passes.
ElementSet product_by_passes(const gring::FiniteRing& r, const ElementSet& x,
                             const ElementSet& y);

/// Self-contained model of the Gaussian integers modulo n; arithmetic
/// on (a, b) pairs, no ring tables involved.
struct GaussModel {
  long n;
  explicit GaussModel(long modulus) : n(modulus) {}
  Elem enc(long a, long b) const {
    return static_cast<Elem>(((a % n + n) % n) + n * ((b % n + n) % n));
  }
  std::pair<long, long> dec(Elem x) const { return {x % n, x / n}; }
  Elem mul(Elem x, Elem y) const {
    auto [a, b] = dec(x);
    auto [c, d] = dec(y);
    return enc(a * c - b * d, a * d + b * c);
  }
  Elem add(Elem x, Elem y) const {
    auto [a, b] = dec(x);
    auto [c, d] = dec(y);
    return enc(a + c, b + d);
  }
  std::size_t order() const { return static_cast<std::size_t>(n) * n; }
  /// The ideal dR = {d*a + d*b*i}.
  ElementSet multiples(long d) const;
  /// {x : k*x in p for all k in K}.
  ElementSet colon(const ElementSet& p, const ElementSet& k) const;
};

/// Expected quotient of `r` by the subgroup k: cosets named by their
/// least member, tables rebuilt from scratch. Returns (add, mul,
/// projection).
struct CosetModel {
  std::vector<std::vector<Elem>> add;
  std::vector<std::vector<Elem>> mul;
  std::vector<Elem> projection;
};
CosetModel quotient_by_cosets(const gring::FiniteRing& r, const ElementSet& k);

/// First pair (X, Y) of sets from `ideals` violating the requested
/// predicate at p, in the order given; nullopt when the predicate
/// holds. Products are computed with product_by_passes.
enum class Pred { prime, weakly, almost };
std::optional<std::pair<ElementSet, ElementSet>> first_violation(
    const gring::FiniteRing& r, const std::vector<ElementSet>& ideals,
    const ElementSet& p, Pred pred);

}  // namespace oracle
