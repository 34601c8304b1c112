#pragma once

#include <vector>

#include "gring/config.hpp"
#include "gring/element_set.hpp"
#include "gring/grading.hpp"

namespace gring {

/// Grade-preserving ring homomorphism between two graded rings over the
/// same grading group, given as an element map. Validation checks, in
/// this order: grading preservation, additivity, multiplicativity.
/// Surjectivity is computed, never declared; the kernel is precomputed.
class GradedHom {
 public:
  static GradedHom validate(GradedRing source, GradedRing target, std::vector<Elem> map);

  const GradedRing& source() const noexcept { return source_; }
  const GradedRing& target() const noexcept { return target_; }
  const std::vector<Elem>& map() const noexcept { return map_; }

  Elem apply(Elem a) const;
  bool surjective() const noexcept { return surjective_; }
  const ElementSet& kernel() const noexcept { return kernel_; }

  /// Pointwise image. Requires a surjective map (NotEpimorphism
  /// otherwise); when the input is a graded right ideal of the source
  /// the image is verified to be a graded right ideal of the target.
  ElementSet image(const ElementSet& s) const;

  /// Pointwise preimage. When the input is a graded right ideal of the
  /// target, the preimage is verified to be a graded right ideal
  /// containing the kernel.
  ElementSet preimage(const ElementSet& s) const;

 private:
  GradedHom(GradedRing s, GradedRing t)
      : source_(std::move(s)), target_(std::move(t)), kernel_(source_.order()) {}

  GradedRing source_;
  GradedRing target_;
  std::vector<Elem> map_;
  ElementSet kernel_;
  bool surjective_ = false;
};

struct QuotientResult {
  GradedRing quotient;
  GradedHom projection;
  std::vector<Elem> coset_rep;  // parent element -> canonical representative
};

/// Graded quotient ring by a graded two-sided ideal. Cosets are named
/// by their smallest member; quotient element k is the k-th
/// representative in ascending order, so the coset of 0 is element 0.
/// Ring, grading and projection are re-validated from scratch.
QuotientResult quotient_ring(const GradedRing& gr, const ElementSet& k,
                             const Config& cfg = {});

}  // namespace gring
