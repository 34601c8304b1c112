#include <vector>

#include "doctest.h"
#include "gring/catalog.hpp"
#include "gring/error.hpp"
#include "gring/group.hpp"
#include "gring/ring.hpp"
#include "oracles.hpp"

using gring::Elem;
using gring::Error;
using gring::ErrorKind;
using gring::FiniteGroup;
using gring::FiniteRing;

namespace {

using Table = std::vector<std::vector<Elem>>;

const Table kZ3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
const Table kExample2Add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
const Table kExample2Mul = {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 2, 2, 0}, {0, 3, 3, 0}};

}  // namespace

TEST_CASE("group validation accepts Z3 and the trivial group") {
  const FiniteGroup z3 = FiniteGroup::validate(kZ3);
  CHECK(z3.order() == 3);
  CHECK(z3.op(1, 2) == 0);
  CHECK(z3.inverse(1) == 2);

  const FiniteGroup trivial = FiniteGroup::validate({{0}});
  CHECK(trivial.order() == 1);
}

TEST_CASE("group validation rejects a table without inverses") {
  try {
    FiniteGroup::validate({{0, 1}, {1, 1}});
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
    CHECK(e.axiom_name() == "inverse");
    REQUIRE(e.witness().size() == 1);
    CHECK(e.witness()[0] == 1);
  }
}

TEST_CASE("group validation rejects out-of-range entries with DomainError") {
  try {
    FiniteGroup::validate({{0, 1}, {1, 7}});
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain_error);
  }
}

TEST_CASE("ring validation accepts the order-4 catalog ring and Z2") {
  const FiniteRing r = FiniteRing::validate(kExample2Add, kExample2Mul, std::nullopt);
  CHECK(r.order() == 4);
  CHECK_FALSE(r.has_unity());
  CHECK(r.mul(3, 3) == 0);  // z*z = 0
  CHECK(r.mul(3, 1) == 3);  // z*x = z

  const FiniteRing z2 = FiniteRing::validate({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, Elem{1});
  CHECK(z2.has_unity());
  CHECK(*z2.unity() == 1);
}

TEST_CASE("altering one product breaks an axiom with a replaying witness") {
  Table mul = kExample2Mul;
  mul[1][2] = 3;  // x*y was x
  try {
    FiniteRing::validate(kExample2Add, mul, std::nullopt);
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
    // The independent naive scan must agree on axiom and witness.
    const auto naive = oracle::naive_validate_ring(kExample2Add, mul, std::nullopt);
    REQUIRE(naive.has_value());
    CHECK(e.axiom_name() == naive->axiom);
    CHECK(e.witness() == naive->witness);
    CHECK(e.axiom_name() == "distributive-left");
    CHECK(e.witness() == std::vector<std::size_t>{1, 1, 2});
  }
}

TEST_CASE("fast validation verdict matches the naive scan on single-entry mutations") {
  // Mutate each table cell of the order-4 ring in turn and compare the
  // failing axiom with the naive full scan.
  for (bool mutate_add : {false, true}) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (Elem v = 0; v < 4; ++v) {
          Table add = kExample2Add;
          Table mul = kExample2Mul;
          Elem& cell = mutate_add ? add[i][j] : mul[i][j];
          if (cell == v) continue;
          cell = v;
          const auto naive = oracle::naive_validate_ring(add, mul, std::nullopt);
          try {
            FiniteRing::validate(add, mul, std::nullopt);
            CHECK_FALSE(naive.has_value());
          } catch (const Error& e) {
            REQUIRE(naive.has_value());
            CHECK(e.axiom_name() == naive->axiom);
            CHECK(e.witness() == naive->witness);
          }
        }
  }
}

TEST_CASE("validation is deterministic") {
  Table mul = kExample2Mul;
  mul[2][3] = 1;
  std::string first_message;
  for (int run = 0; run < 2; ++run) {
    try {
      FiniteRing::validate(kExample2Add, mul, std::nullopt);
      FAIL("expected AxiomViolation");
    } catch (const Error& e) {
      if (run == 0)
        first_message = e.what();
      else
        CHECK(first_message == e.what());
    }
  }
}

TEST_CASE("declared unity is verified") {
  try {
    FiniteRing::validate({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}, Elem{1});
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.axiom_name() == "unity");
  }
}

TEST_CASE("element operations are table lookups with range checks") {
  const FiniteRing r = FiniteRing::validate(kExample2Add, kExample2Mul, std::nullopt);
  for (Elem a = 0; a < 4; ++a) {
    CHECK(r.add(a, r.neg(a)) == 0);
    CHECK(r.neg(r.neg(a)) == a);  // involution
  }
  CHECK_THROWS_AS((void)r.add(0, 9), Error);
  CHECK_THROWS_AS((void)r.mul(9, 0), Error);
  CHECK_THROWS_AS((void)r.neg(4), Error);
}

TEST_CASE("gaussian-mod multiplication follows modular arithmetic") {
  const gring::GradedRing gr = gring::catalog_build("gaussian-mod", 12);
  const oracle::GaussModel model(12);
  // 4*4 = 16 = 4 (mod 12)
  CHECK(gr.ring().mul(model.enc(4, 0), model.enc(4, 0)) == model.enc(4, 0));
  // spot-check the whole table against the independent model
  for (std::size_t x = 0; x < gr.order(); x += 7)
    for (std::size_t y = 0; y < gr.order(); y += 5) {
      CHECK(gr.ring().mul(static_cast<Elem>(x), static_cast<Elem>(y)) ==
            model.mul(static_cast<Elem>(x), static_cast<Elem>(y)));
      CHECK(gr.ring().add(static_cast<Elem>(x), static_cast<Elem>(y)) ==
            model.add(static_cast<Elem>(x), static_cast<Elem>(y)));
    }
}

TEST_CASE("order cap is enforced") {
  gring::Config cfg;
  cfg.max_order = 3;
  try {
    FiniteRing::validate(kExample2Add, kExample2Mul, std::nullopt, cfg);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::cap_exceeded);
  }
}
