#pragma once

#include <vector>

#include "gring/config.hpp"
#include "gring/element_set.hpp"
#include "gring/grading.hpp"
#include "gring/ring.hpp"

namespace gring {

/// Two readings of the principal two-sided ideal <x> in a unital ring:
/// the additive closure of xR, or of RxR.
enum class Reading { xr_only, rxr };

struct IdealFlags {
  bool is_additive_subgroup = false;
  bool is_right_ideal = false;
  bool is_twosided = false;
  bool is_graded = false;
  bool is_proper = false;
  bool is_idempotent = false;
};

/// Smallest subset containing seed and 0, closed under addition and
/// negation.
ElementSet additive_closure(const FiniteRing& r, const ElementSet& seed);

/// Smallest additive subgroup containing seed and absorbing right
/// multiplication by the whole ring. Without unity this includes the
/// additive span of the seed, not just seed*R.
ElementSet right_ideal_closure(const FiniteRing& r, const ElementSet& seed);

/// As above, absorbing multiplication on both sides.
ElementSet twosided_ideal_closure(const FiniteRing& r, const ElementSet& seed);

/// Right ideal generated by a single element.
ElementSet principal_right(const FiniteRing& r, Elem a);

/// <a> in a unital ring under the chosen reading. Throws NoUnity.
ElementSet principal_twosided(const FiniteRing& r, Elem a, Reading reading);

/// XY: additive closure of all pairwise products. Requires both
/// arguments to be additive subgroups.
ElementSet ideal_product(const FiniteRing& r, const ElementSet& x, const ElementSet& y);

/// Left-associated power; k >= 1, k == 1 returns p.
ElementSet ideal_power(const FiniteRing& r, const ElementSet& p, std::size_t k);

/// (P : K) = { x : Kx inside P }.
ElementSet colon_right(const FiniteRing& r, const ElementSet& p, const ElementSet& k);

/// (P :* K) = { x : xK inside P }.
ElementSet colon_left(const FiniteRing& r, const ElementSet& p, const ElementSet& k);

/// All flags for an arbitrary subset, each decided by definition.
IdealFlags classify_subset(const GradedRing& gr, const ElementSet& s);

/// Complete duplicate-free list of graded right ideals, ascending
/// bit-vector order, including the improper ideal R. Breadth-first
/// saturation from {0}, extending by one homogeneous element at a time.
std::vector<ElementSet> enumerate_graded_right_ideals(const GradedRing& gr,
                                                      const Config& cfg = {});

/// As above for graded two-sided ideals.
std::vector<ElementSet> enumerate_graded_twosided_ideals(const GradedRing& gr,
                                                         const Config& cfg = {});

/// All right ideals, graded or not (extension by arbitrary elements).
std::vector<ElementSet> enumerate_right_ideals(const GradedRing& gr,
                                               const Config& cfg = {});

/// Fixpoint of right-ideal closure and homogeneous-component closure;
/// the smallest graded right ideal containing seed.
ElementSet graded_right_ideal_closure(const GradedRing& gr, const ElementSet& seed);

ElementSet graded_twosided_ideal_closure(const GradedRing& gr, const ElementSet& seed);

}  // namespace gring
