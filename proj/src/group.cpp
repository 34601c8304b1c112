#include "gring/group.hpp"

#include <string>

#include "gring/error.hpp"
#include "table_checks.hpp"

namespace gring {

namespace {

std::vector<Elem> flatten_checked(const std::vector<std::vector<Elem>>& table,
                                  const char* what) {
  const std::size_t m = table.size();
  if (m == 0)
    throw Error(ErrorKind::domain_error, std::string(what) + " table is empty");
  if (m > 65535)
    throw Error(ErrorKind::domain_error,
                std::string(what) + " table exceeds the element index width");
  std::vector<Elem> flat;
  flat.reserve(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    if (table[r].size() != m)
      throw Error(ErrorKind::domain_error,
                  std::string(what) + " table is not square at row " + std::to_string(r));
    for (std::size_t c = 0; c < m; ++c) {
      if (table[r][c] >= m)
        throw Error(ErrorKind::domain_error,
                    std::string(what) + " table entry (" + std::to_string(r) + "," +
                        std::to_string(c) + ") = " + std::to_string(table[r][c]) +
                        " out of range [0, " + std::to_string(m) + ")");
      flat.push_back(table[r][c]);
    }
  }
  return flat;
}

}  // namespace

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<Elem>>& cayley) {
  FiniteGroup g;
  g.table_ = flatten_checked(cayley, "cayley");
  g.order_ = cayley.size();
  const std::size_t m = g.order_;
  const auto& t = g.table_;

  for (std::size_t e = 0; e < m; ++e) {
    if (detail::at(t, m, identity, static_cast<Elem>(e)) != e ||
        detail::at(t, m, static_cast<Elem>(e), identity) != e)
      throw Error::axiom("identity", {e}, "element 0 is not the identity");
  }

  if (!detail::associative_light(t, m, detail::magma_generators(t, m))) {
    auto w = *detail::first_assoc_violation(t, m);
    throw Error::axiom("associativity", {w[0], w[1], w[2]});
  }

  g.inverse_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m; ++b) {
      if (detail::at(t, m, static_cast<Elem>(a), static_cast<Elem>(b)) == identity) {
        g.inverse_[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    }
    if (!found) throw Error::axiom("inverse", {a}, "no right inverse");
  }
  return g;
}

Elem FiniteGroup::op(Elem a, Elem b) const {
  if (a >= order_ || b >= order_)
    throw Error(ErrorKind::domain_error, "group element index out of range");
  return detail::at(table_, order_, a, b);
}

Elem FiniteGroup::inverse(Elem a) const {
  if (a >= order_)
    throw Error(ErrorKind::domain_error, "group element index out of range");
  return inverse_[a];
}

}  // namespace gring
