#include "gring/ring.hpp"

#include <string>

#include "gring/error.hpp"
#include "table_checks.hpp"

namespace gring {

namespace {

std::vector<Elem> flatten_checked(const std::vector<std::vector<Elem>>& table,
                                  const char* what, std::size_t n) {
  if (table.size() != n)
    throw Error(ErrorKind::domain_error,
                std::string(what) + " table has " + std::to_string(table.size()) +
                    " rows, expected " + std::to_string(n));
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw Error(ErrorKind::domain_error,
                  std::string(what) + " table is not square at row " + std::to_string(r));
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n)
        throw Error(ErrorKind::domain_error,
                    std::string(what) + " table entry (" + std::to_string(r) + "," +
                        std::to_string(c) + ") = " + std::to_string(table[r][c]) +
                        " out of range [0, " + std::to_string(n) + ")");
      flat.push_back(table[r][c]);
    }
  }
  return flat;
}

}  // namespace

FiniteRing FiniteRing::validate(const std::vector<std::vector<Elem>>& add,
                                const std::vector<std::vector<Elem>>& mul,
                                std::optional<Elem> unity, const Config& cfg) {
  const std::size_t n = add.size();
  if (n == 0) throw Error(ErrorKind::domain_error, "add table is empty");
  if (n > 65535)
    throw Error(ErrorKind::domain_error, "ring order exceeds the element index width");
  if (n > cfg.max_order)
    throw Error(ErrorKind::cap_exceeded,
                "ring order " + std::to_string(n) + " exceeds max-order cap " +
                    std::to_string(cfg.max_order));

  FiniteRing r;
  r.order_ = n;
  r.add_ = flatten_checked(add, "add", n);
  r.mul_ = flatten_checked(mul, "mul", n);
  const auto& A = r.add_;
  const auto& M = r.mul_;

  for (std::size_t a = 0; a < n; ++a) {
    if (detail::at(A, n, zero, static_cast<Elem>(a)) != a ||
        detail::at(A, n, static_cast<Elem>(a), zero) != a)
      throw Error::axiom("add-identity", {a}, "element 0 is not the additive zero");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (detail::at(A, n, static_cast<Elem>(a), static_cast<Elem>(b)) !=
          detail::at(A, n, static_cast<Elem>(b), static_cast<Elem>(a)))
        throw Error::axiom("add-commutative", {a, b});

  const std::vector<Elem> add_gens = detail::magma_generators(A, n);
  if (!detail::associative_light(A, n, add_gens)) {
    auto w = *detail::first_assoc_violation(A, n);
    throw Error::axiom("add-associative", {w[0], w[1], w[2]});
  }

  r.neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (detail::at(A, n, static_cast<Elem>(a), static_cast<Elem>(b)) == zero) {
        r.neg_[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    }
    if (!found) throw Error::axiom("add-inverse", {a}, "no additive inverse");
  }

  if (auto side = detail::distributive_fast(A, M, n, add_gens)) {
    const bool left = (*side == 'L');
    auto w = *detail::first_distrib_violation(A, M, n, left);
    throw Error::axiom(left ? "distributive-left" : "distributive-right",
                       {w[0], w[1], w[2]});
  }

  if (!detail::mul_associative_fast(M, n, add_gens)) {
    auto w = *detail::first_assoc_violation(M, n);
    throw Error::axiom("mul-associative", {w[0], w[1], w[2]});
  }

  if (unity) {
    if (*unity >= n)
      throw Error(ErrorKind::domain_error,
                  "unity index " + std::to_string(*unity) + " out of range");
    for (std::size_t x = 0; x < n; ++x)
      if (detail::at(M, n, *unity, static_cast<Elem>(x)) != x ||
          detail::at(M, n, static_cast<Elem>(x), *unity) != x)
        throw Error::axiom("unity", {x}, "declared unity does not act as identity");
    r.unity_ = unity;
  }
  return r;
}

void FiniteRing::check_index(Elem a) const {
  if (a >= order_)
    throw Error(ErrorKind::domain_error,
                "ring element index " + std::to_string(a) + " out of range [0, " +
                    std::to_string(order_) + ")");
}

Elem FiniteRing::add(Elem a, Elem b) const {
  check_index(a);
  check_index(b);
  return add_[std::size_t{a} * order_ + b];
}

Elem FiniteRing::mul(Elem a, Elem b) const {
  check_index(a);
  check_index(b);
  return mul_[std::size_t{a} * order_ + b];
}

Elem FiniteRing::neg(Elem a) const {
  check_index(a);
  return neg_[a];
}

}  // namespace gring
