#include <algorithm>

#include "doctest.h"
#include "gring/catalog.hpp"
#include "gring/error.hpp"
#include "gring/primality.hpp"
#include "gring/report.hpp"
#include "gring/ringfile.hpp"
#include "oracles.hpp"

using gring::Elem;
using gring::ElementSet;
using gring::Error;
using gring::ErrorKind;
using gring::GradedRing;

TEST_CASE("catalog entries build and validate for sampled parameters") {
  CHECK(gring::catalog_build("example2").order() == 4);
  CHECK(gring::catalog_build("matrix-z2").order() == 4);
  for (long n : {2, 3, 4, 6, 8, 9, 12, 16})
    CHECK(gring::catalog_build("gaussian-mod", n).order() ==
          static_cast<std::size_t>(n * n));
  for (long p : {2, 3, 5, 7})
    CHECK(gring::catalog_build("upper-tri", p).order() ==
          static_cast<std::size_t>(p * p * p));
  for (long k : {1, 2, 3, 4})
    CHECK(gring::catalog_build("square-zero", k).order() == (std::size_t{1} << k));
}

TEST_CASE("catalog rejects unknown entries and bad parameters") {
  CHECK_THROWS_AS((void)gring::catalog_build("nonsense"), Error);
  try {
    gring::catalog_build("gaussian-mod", 65);
    FAIL("expected ParamOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::param_out_of_range);
  }
  CHECK_THROWS_AS((void)gring::catalog_build("upper-tri", 4), Error);
  CHECK_THROWS_AS((void)gring::catalog_build("square-zero", 9), Error);
  CHECK_THROWS_AS((void)gring::catalog_build("example2", 3), Error);
}

TEST_CASE("matrix-z2 tables coincide with the order-4 catalog ring") {
  const GradedRing a = gring::catalog_build("example2");
  const GradedRing b = gring::catalog_build("matrix-z2");
  CHECK(a.ring().add_table() == b.ring().add_table());
  CHECK(a.ring().mul_table() == b.ring().mul_table());
  CHECK(a.components() == b.components());
}

TEST_CASE("matrix-z2: P={0,A} almost prime, not prime") {
  const GradedRing gr = gring::catalog_build("matrix-z2");
  const ElementSet p = ElementSet::of(4, {0, 1});
  CHECK(is_graded_almost_prime_right(gr, p).value);
  const gring::Verdict v = is_graded_prime_right(gr, p);
  CHECK_FALSE(v.value);
  REQUIRE(v.ideal_pair.has_value());
  CHECK(v.ideal_pair->first == ElementSet::of(4, {0, 3}));
  CHECK(v.ideal_pair->second == ElementSet::of(4, {0, 3}));
}

TEST_CASE("square-zero rings square to zero and every subgroup is an ideal") {
  const GradedRing gr = gring::catalog_build("square-zero", 2);
  CHECK(gr.order() == 4);
  const ElementSet whole = ElementSet::full(4);
  CHECK(ideal_product(gr.ring(), whole, whole) == ElementSet::of(4, {0}));
  const auto subgroups = oracle::subgroups_by_subsets(gr.ring());
  auto as_ideals = oracle::filter_left_absorbing(
      gr.ring(), oracle::filter_right_ideals(gr.ring(), subgroups));
  CHECK(as_ideals == subgroups);
  // the coordinate-split grading leaves the diagonal line non-graded
  const auto graded = enumerate_graded_right_ideals(gr);
  CHECK(graded.size() == 4);
  CHECK_FALSE(classify_subset(gr, ElementSet::of(4, {0, 3})).is_graded);
}

TEST_CASE("upper-tri element encoding") {
  const GradedRing gr = gring::catalog_build("upper-tri", 3);
  // [[a,b],[0,c]] -> a*9 + b*3 + c; unity = [[1,0],[0,1]] -> 10
  REQUIRE(gr.ring().has_unity());
  CHECK(*gr.ring().unity() == 10);
  // E12 * E12 = 0, E12 in degree 2
  CHECK(gr.ring().mul(3, 3) == 0);
  CHECK(gr.component(2).test(3));
  CHECK(gr.component(0).count() == 9);
  CHECK(gr.component(2).count() == 3);
}

TEST_CASE("ring file round-trip is exact and byte-stable for every corpus entry") {
  for (const auto& [name, gr] : gring::default_corpus()) {
    CAPTURE(name);
    const std::string text = gring::emit_ring_file(name, gr);
    const gring::NamedRing back = gring::parse_ring_file(text);
    CHECK(back.name == name);
    CHECK(back.graded.ring().add_table() == gr.ring().add_table());
    CHECK(back.graded.ring().mul_table() == gr.ring().mul_table());
    CHECK(back.graded.ring().unity() == gr.ring().unity());
    CHECK(back.graded.group().table() == gr.group().table());
    CHECK(back.graded.components() == gr.components());
    CHECK(gring::emit_ring_file(back.name, back.graded) == text);
  }
}

TEST_CASE("parser accepts comments and blank lines") {
  const std::string text = R"(# a comment
ring tiny   # trailing comment

order 1
unity none
add
0
mul
0
group 1
cayley
0
grading
g0: 0
end
)";
  const gring::NamedRing nr = gring::parse_ring_file(text);
  CHECK(nr.name == "tiny");
  CHECK(nr.graded.order() == 1);
}

TEST_CASE("parser reports malformed input with line numbers") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      gring::parse_ring_file(text);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse_error);
    }
  };
  expect_parse_error("order 2\n");                        // missing header
  expect_parse_error("ring t\norder 2\nunity none\nadd\n0 1\n");  // short table
  expect_parse_error(
      "ring t\norder 2\nunity none\nadd\n0 1\n1 0 0\nmul\n0 0\n0 0\n"
      "group 1\ncayley\n0\ngrading\ng0: 0 1\nend\n");  // non-square add row
  expect_parse_error(
      "ring t\norder 2\nunity none\nadd\n0 1\n1 0\nmul\n0 0\n0 0\n"
      "group 1\ncayley\n0\ngrading\ng0: 1 0\nend\n");  // not ascending
}

TEST_CASE("axiom failures from parsed files carry the ring name") {
  const std::string text =
      "ring broken\norder 2\nunity none\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n"
      "group 1\ncayley\n0\ngrading\ng0: 0 1\nend\n";
  try {
    gring::parse_ring_file(text);
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
    CHECK(std::string(e.what()).find("broken") != std::string::npos);
  }
}

TEST_CASE("hand-written quotient file classifies correctly") {
  // the order-2 quotient of the order-4 catalog ring by J
  const std::string text =
      "ring e2-mod-j\norder 2\nunity none\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n"
      "group 3\ncayley\n0 1 2\n1 2 0\n2 0 1\ngrading\ng0: 0 1\ng1: 0\ng2: 0\nend\n";
  const gring::NamedRing nr = gring::parse_ring_file(text);
  const gring::ClassificationReport rep = classify_all(nr.graded);
  REQUIRE(rep.ideals.size() == 1);
  CHECK(rep.ideals[0].ideal == ElementSet::of(2, {0}));
  CHECK(rep.ideals[0].almost_prime.value);
  CHECK(rep.all_almost_prime);
}

TEST_CASE("machine report grammar is stable") {
  const GradedRing gr = gring::catalog_build("example2");
  const std::string out =
      gring::render_classification_machine("example2", gr, classify_all(gr));
  CHECK(out.find("ring\texample2\torder=4\tgroup=3\tunity=none\n") != std::string::npos);
  CHECK(out.find("ideal\t0,1\t") != std::string::npos);
  CHECK(out.find("prime=0") != std::string::npos);
  CHECK(out.find("prime_witness=0,3|0,3") != std::string::npos);
  CHECK(out.find("nongraded\t0,2\n") != std::string::npos);
  CHECK(out.find("summary\tideals=3\tnongraded=1\tall_almost_prime=1\n") !=
        std::string::npos);
  // byte-identical on a second run
  CHECK(out == gring::render_classification_machine("example2", gr, classify_all(gr)));
}

TEST_CASE("text report mentions the key facts") {
  const GradedRing gr = gring::catalog_build("example2");
  const std::string out =
      gring::render_classification_text("example2", gr, classify_all(gr));
  CHECK(out.find("proper graded right ideals: 3") != std::string::npos);
  CHECK(out.find("{0,2}") != std::string::npos);
  CHECK(out.find("all graded right ideals almost prime: yes") != std::string::npos);
}
