#pragma once

#include <cstddef>
#include <vector>

#include "gring/config.hpp"
#include "gring/element_set.hpp"
#include "gring/group.hpp"
#include "gring/ring.hpp"

namespace gring {

/// A finite ring together with a validated grading by a finite group:
/// one additive subgroup S_g per group element, multiplicatively
/// compatible (S_g * S_h inside S_{gh}) and forming an internal direct
/// sum of the ring. Every element has a unique component tuple, cached
/// at validation time. If the ring declares a unity it must lie in the
/// identity component; this is verified, not assumed.
class GradedRing {
 public:
  static GradedRing validate(FiniteRing ring, FiniteGroup group,
                             std::vector<ElementSet> components, const Config& cfg = {});

  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return ring_.order(); }
  std::size_t group_order() const noexcept { return group_.order(); }

  const ElementSet& component(Elem g) const;
  const std::vector<ElementSet>& components() const noexcept { return components_; }

  /// h(R): union of all components.
  const ElementSet& homogeneous() const noexcept { return homogeneous_; }
  bool is_homogeneous(Elem x) const { return homogeneous_.test(x); }

  /// Unique tuple (x_g) with x_g in S_g and sum x; indexed by group element.
  std::vector<Elem> decompose(Elem x) const;
  Elem component_of(Elem x, Elem g) const;

 private:
  GradedRing(FiniteRing r, FiniteGroup g)
      : ring_(std::move(r)), group_(std::move(g)) {}

  FiniteRing ring_;
  FiniteGroup group_;
  std::vector<ElementSet> components_;
  ElementSet homogeneous_;
  std::vector<Elem> decomp_;  // row-major order x group_order
};

}  // namespace gring
