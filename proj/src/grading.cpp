#include "gring/grading.hpp"

#include <string>

#include "gring/error.hpp"

namespace gring {

GradedRing GradedRing::validate(FiniteRing ring, FiniteGroup group,
                                std::vector<ElementSet> components, const Config&) {
  const std::size_t n = ring.order();
  const std::size_t m = group.order();
  if (components.size() != m)
    throw Error(ErrorKind::domain_error,
                "grading has " + std::to_string(components.size()) +
                    " components, expected one per group element (" + std::to_string(m) +
                    ")");
  for (std::size_t g = 0; g < m; ++g)
    if (components[g].universe() != n)
      throw Error(ErrorKind::domain_error,
                  "component " + std::to_string(g) + " is over universe " +
                      std::to_string(components[g].universe()) + ", expected " +
                      std::to_string(n));

  // Each component is an additive subgroup containing 0.
  for (std::size_t g = 0; g < m; ++g) {
    const ElementSet& s = components[g];
    if (!s.test(0)) throw Error::axiom("subgroup", {g}, "component misses 0");
    const std::vector<Elem> members = s.indices();
    for (Elem a : members) {
      if (!s.test(ring.neg(a)))
        throw Error::axiom("subgroup", {g, a}, "component not closed under negation");
      for (Elem b : members)
        if (!s.test(ring.add(a, b)))
          throw Error::axiom("subgroup", {g, a, b},
                             "component not closed under addition");
    }
  }

  // Multiplicativity: S_g * S_h inside S_{gh}.
  for (Elem g = 0; g < m; ++g) {
    const std::vector<Elem> ga = components[g].indices();
    for (Elem h = 0; h < m; ++h) {
      const std::vector<Elem> hb = components[h].indices();
      const ElementSet& target = components[group.op(g, h)];
      for (Elem a : ga)
        for (Elem b : hb)
          if (!target.test(ring.mul(a, b)))
            throw Error::axiom("multiplicativity", {g, h, a, b},
                               "product leaves the component of the product degree");
    }
  }

  // Internal direct sum: the sum map over the component product is a
  // bijection onto the ring. Tuples are enumerated as an odometer in
  // group-element order with each component ascending; a repeated sum
  // is found within n+1 tuples, so this never enumerates more.
  std::vector<std::vector<Elem>> comp_members(m);
  for (std::size_t g = 0; g < m; ++g) comp_members[g] = components[g].indices();

  std::vector<Elem> decomp(n * m, 0);
  std::vector<bool> hit(n, false);
  std::vector<std::size_t> odo(m, 0);
  std::size_t tuples = 0;
  bool done = false;
  while (!done) {
    Elem sum = 0;
    for (std::size_t g = 0; g < m; ++g) sum = ring.add(sum, comp_members[g][odo[g]]);
    if (hit[sum])
      throw Error::axiom("direct-sum", {sum}, "element has two decompositions");
    hit[sum] = true;
    for (std::size_t g = 0; g < m; ++g) decomp[std::size_t{sum} * m + g] = comp_members[g][odo[g]];
    ++tuples;
    // advance odometer (last component fastest)
    std::size_t g = m;
    while (g-- > 0) {
      if (++odo[g] < comp_members[g].size()) break;
      odo[g] = 0;
      if (g == 0) done = true;
    }
  }
  if (tuples < n) {
    for (std::size_t x = 0; x < n; ++x)
      if (!hit[x])
        throw Error::axiom("direct-sum", {x}, "element has no decomposition");
  }

  if (ring.has_unity()) {
    const Elem e = FiniteGroup::identity;
    if (!components[e].test(*ring.unity()))
      throw Error::axiom("unity-component", {*ring.unity()},
                         "unity lies outside the identity component");
  }

  GradedRing gr(std::move(ring), std::move(group));
  gr.homogeneous_ = ElementSet(n);
  for (const ElementSet& s : components) gr.homogeneous_ |= s;
  gr.components_ = std::move(components);
  gr.decomp_ = std::move(decomp);
  return gr;
}

const ElementSet& GradedRing::component(Elem g) const {
  if (g >= group_.order())
    throw Error(ErrorKind::domain_error, "group element index out of range");
  return components_[g];
}

std::vector<Elem> GradedRing::decompose(Elem x) const {
  if (x >= ring_.order())
    throw Error(ErrorKind::domain_error, "ring element index out of range");
  const std::size_t m = group_.order();
  const std::size_t base = std::size_t{x} * m;
  return std::vector<Elem>(decomp_.begin() + base, decomp_.begin() + base + m);
}

Elem GradedRing::component_of(Elem x, Elem g) const {
  if (x >= ring_.order() || g >= group_.order())
    throw Error(ErrorKind::domain_error, "index out of range");
  return decomp_[std::size_t{x} * group_.order() + g];
}

}  // namespace gring
