#include <vector>

#include "doctest.h"
#include "gring/catalog.hpp"
#include "gring/error.hpp"
#include "gring/grading.hpp"
#include "oracles.hpp"

using gring::Elem;
using gring::ElementSet;
using gring::Error;
using gring::ErrorKind;
using gring::FiniteGroup;
using gring::FiniteRing;
using gring::GradedRing;

namespace {

using Table = std::vector<std::vector<Elem>>;

const Table kZ3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
const Table kExample2Add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
const Table kExample2Mul = {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 2, 2, 0}, {0, 3, 3, 0}};

FiniteRing example2_ring() {
  return FiniteRing::validate(kExample2Add, kExample2Mul, std::nullopt);
}

}  // namespace

TEST_CASE("the order-4 ring accepts the Z3 grading S_0={0,x} S_1={0,z} S_2={0}") {
  const GradedRing gr = GradedRing::validate(
      example2_ring(), FiniteGroup::validate(kZ3),
      {ElementSet::of(4, {0, 1}), ElementSet::of(4, {0, 3}), ElementSet::of(4, {0})});
  CHECK(gr.homogeneous() == ElementSet::of(4, {0, 1, 3}));
  CHECK(gr.component(2) == ElementSet::of(4, {0}));
}

TEST_CASE("trivial grading is always valid") {
  const GradedRing gr = GradedRing::validate(example2_ring(),
                                             FiniteGroup::validate({{0}}),
                                             {ElementSet::full(4)});
  CHECK(gr.homogeneous().count() == 4);
  CHECK(gr.decompose(2) == std::vector<Elem>{2});
}

TEST_CASE("S_1={0,y} violates multiplicativity") {
  try {
    GradedRing::validate(
        example2_ring(), FiniteGroup::validate(kZ3),
        {ElementSet::of(4, {0, 1}), ElementSet::of(4, {0, 2}), ElementSet::of(4, {0})});
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
    CHECK(e.axiom_name() == "multiplicativity");
    // Witness (g, h, a, b) replays: a*b lands outside S_{gh}.
    REQUIRE(e.witness().size() == 4);
    const FiniteRing r = example2_ring();
    const FiniteGroup grp = FiniteGroup::validate(kZ3);
    const std::vector<ElementSet> comps = {ElementSet::of(4, {0, 1}),
                                           ElementSet::of(4, {0, 2}),
                                           ElementSet::of(4, {0})};
    const Elem g = static_cast<Elem>(e.witness()[0]);
    const Elem h = static_cast<Elem>(e.witness()[1]);
    const Elem a = static_cast<Elem>(e.witness()[2]);
    const Elem b = static_cast<Elem>(e.witness()[3]);
    CHECK(comps[g].test(a));
    CHECK(comps[h].test(b));
    CHECK_FALSE(comps[grp.op(g, h)].test(r.mul(a, b)));
  }
}

TEST_CASE("duplicated component violates the direct sum") {
  // S_1 = S_2 = {0,z} keeps multiplicativity (all products hit 0 or z*x=z)
  // but gives z two decompositions.
  try {
    GradedRing::validate(
        example2_ring(), FiniteGroup::validate(kZ3),
        {ElementSet::of(4, {0, 1}), ElementSet::of(4, {0, 3}), ElementSet::of(4, {0, 3})});
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.axiom_name() == "direct-sum");
    REQUIRE(e.witness().size() == 1);
    CHECK(e.witness()[0] == 3);  // z = z+0 = 0+z
  }
}

TEST_CASE("too-small components leave elements without decomposition") {
  // Z2 x Z2 componentwise ring, graded by Z2 with both components {0, (1,0)}:
  // cardinality matches nothing; (0,1) has no decomposition.
  const Table add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const Table mul = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  const FiniteRing r = FiniteRing::validate(add, mul, Elem{3});
  try {
    GradedRing::validate(r, FiniteGroup::validate({{0, 1}, {1, 0}}),
                         {ElementSet::of(4, {0, 1}), ElementSet::of(4, {0})});
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.axiom_name() == "direct-sum");
    REQUIRE(e.witness().size() == 1);
    CHECK(e.witness()[0] == 2);  // least element never hit
  }
}

TEST_CASE("decompose returns the unique component tuple") {
  const GradedRing gr = gring::catalog_build("example2");
  // y = x + z
  CHECK(gr.decompose(2) == std::vector<Elem>{1, 3, 0});
  CHECK(gr.decompose(0) == std::vector<Elem>{0, 0, 0});

  const GradedRing gauss = gring::catalog_build("gaussian-mod", 12);
  const oracle::GaussModel model(12);
  const std::vector<Elem> d = gauss.decompose(model.enc(3, 5));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == model.enc(3, 0));
  CHECK(d[1] == model.enc(0, 5));
}

TEST_CASE("decomposition round-trips and is additive") {
  for (const char* name : {"example2", "matrix-z2"}) {
    const GradedRing gr = gring::catalog_build(name);
    const std::size_t n = gr.order();
    for (Elem x = 0; x < n; ++x) {
      const std::vector<Elem> comps = gr.decompose(x);
      Elem sum = 0;
      for (Elem g = 0; g < gr.group_order(); ++g) {
        CHECK(gr.component(g).test(comps[g]));
        sum = gr.ring().add(sum, comps[g]);
      }
      CHECK(sum == x);
      for (Elem y = 0; y < n; ++y) {
        const std::vector<Elem> cy = gr.decompose(y);
        const std::vector<Elem> cxy = gr.decompose(gr.ring().add(x, y));
        for (Elem g = 0; g < gr.group_order(); ++g)
          CHECK(cxy[g] == gr.ring().add(comps[g], cy[g]));
      }
    }
  }
}

TEST_CASE("homogeneous elements of a homogeneous degree decompose to themselves") {
  const GradedRing gr = gring::catalog_build("gaussian-mod", 4);
  for (Elem g = 0; g < gr.group_order(); ++g)
    for (Elem a : gr.component(g).indices()) {
      const std::vector<Elem> d = gr.decompose(a);
      CHECK(d[g] == a);
      for (Elem h = 0; h < gr.group_order(); ++h)
        if (h != g && a != 0) CHECK(d[h] == 0);
    }
}

TEST_CASE("homogeneous element counts") {
  CHECK(gring::catalog_build("example2").homogeneous() == ElementSet::of(4, {0, 1, 3}));
  CHECK(gring::catalog_build("gaussian-mod", 12).homogeneous().count() == 23);
}

TEST_CASE("identity component is closed under multiplication") {
  for (const auto& [name, gr] : gring::default_corpus()) {
    (void)name;
    const ElementSet& se = gr.component(FiniteGroup::identity);
    for (Elem a : se.indices())
      for (Elem b : se.indices()) CHECK(se.test(gr.ring().mul(a, b)));
  }
}

TEST_CASE("unity lies in the identity component on all unital corpus rings") {
  for (const auto& [name, gr] : gring::default_corpus()) {
    (void)name;
    if (gr.ring().has_unity())
      CHECK(gr.component(FiniteGroup::identity).test(*gr.ring().unity()));
  }
}
