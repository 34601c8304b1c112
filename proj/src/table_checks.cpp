#include "table_checks.hpp"

#include <array>

namespace gring::detail {

std::vector<Elem> magma_generators(const Table& t, std::size_t n) {
  std::vector<Elem> gens;
  std::vector<bool> reached(n, false);
  std::vector<Elem> members;
  members.reserve(n);

  auto close_with = [&](Elem seed) {
    // Worklist closure of the current member list under the table.
    std::size_t start = members.size();
    if (!reached[seed]) {
      reached[seed] = true;
      members.push_back(seed);
    }
    for (std::size_t i = start; i < members.size(); ++i) {
      const Elem x = members[i];
      for (std::size_t j = 0; j < members.size(); ++j) {
        const Elem y = members[j];
        for (Elem p : {at(t, n, x, y), at(t, n, y, x)}) {
          if (!reached[p]) {
            reached[p] = true;
            members.push_back(p);
          }
        }
      }
    }
  };

  for (std::size_t e = 0; e < n; ++e) {
    if (!reached[e]) {
      gens.push_back(static_cast<Elem>(e));
      close_with(static_cast<Elem>(e));
    }
  }
  return gens;
}

bool associative_light(const Table& t, std::size_t n, const std::vector<Elem>& gens) {
  for (Elem g : gens) {
    for (std::size_t a = 0; a < n; ++a) {
      const Elem ag = at(t, n, static_cast<Elem>(a), g);
      const Elem* row_ag = t.data() + std::size_t{ag} * n;
      const Elem* row_g = t.data() + std::size_t{g} * n;
      const Elem* row_a = t.data() + std::size_t{a} * n;
      for (std::size_t c = 0; c < n; ++c) {
        if (row_ag[c] != row_a[row_g[c]]) return false;
      }
    }
  }
  return true;
}

std::optional<std::array<std::size_t, 3>> first_assoc_violation(const Table& t,
                                                                std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = at(t, n, static_cast<Elem>(a), static_cast<Elem>(b));
      const Elem* row_ab = t.data() + std::size_t{ab} * n;
      const Elem* row_b = t.data() + std::size_t{b} * n;
      const Elem* row_a = t.data() + std::size_t{a} * n;
      for (std::size_t c = 0; c < n; ++c)
        if (row_ab[c] != row_a[row_b[c]]) return std::array<std::size_t, 3>{a, b, c};
    }
  return std::nullopt;
}

std::optional<char> distributive_fast(const Table& add, const Table& mul, std::size_t n,
                                      const std::vector<Elem>& add_gens) {
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* mul_a = mul.data() + a * n;      // x -> a*x
    for (Elem g : add_gens) {
      const Elem* add_g = add.data() + std::size_t{g} * n;  // x -> g+x
      const Elem* add_ag = add.data() + std::size_t{mul_a[g]} * n;
      for (std::size_t x = 0; x < n; ++x)
        if (mul_a[add_g[x]] != add_ag[mul_a[x]]) return 'L';
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (Elem g : add_gens) {
      const Elem* add_g = add.data() + std::size_t{g} * n;
      const Elem ga = at(mul, n, g, static_cast<Elem>(a));
      const Elem* add_ga = add.data() + std::size_t{ga} * n;
      for (std::size_t x = 0; x < n; ++x)
        if (at(mul, n, static_cast<Elem>(add_g[x]), static_cast<Elem>(a)) !=
            add_ga[at(mul, n, static_cast<Elem>(x), static_cast<Elem>(a))])
          return 'R';
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> first_distrib_violation(const Table& add,
                                                                  const Table& mul,
                                                                  std::size_t n,
                                                                  bool left) {
  // Witness (a,b,c) reads as a*(b+c) != a*b + a*c on the left and
  // (a+b)*c != a*c + b*c on the right, scanned in lexicographic order.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (left) {
          const Elem bc = at(add, n, static_cast<Elem>(b), static_cast<Elem>(c));
          if (at(mul, n, static_cast<Elem>(a), bc) !=
              at(add, n, at(mul, n, static_cast<Elem>(a), static_cast<Elem>(b)),
                 at(mul, n, static_cast<Elem>(a), static_cast<Elem>(c))))
            return std::array<std::size_t, 3>{a, b, c};
        } else {
          const Elem ab = at(add, n, static_cast<Elem>(a), static_cast<Elem>(b));
          if (at(mul, n, ab, static_cast<Elem>(c)) !=
              at(add, n, at(mul, n, static_cast<Elem>(a), static_cast<Elem>(c)),
                 at(mul, n, static_cast<Elem>(b), static_cast<Elem>(c))))
            return std::array<std::size_t, 3>{a, b, c};
        }
      }
  return std::nullopt;
}

bool mul_associative_fast(const Table& mul, std::size_t n,
                          const std::vector<Elem>& add_gens) {
  for (Elem a : add_gens)
    for (Elem b : add_gens) {
      const Elem ab = at(mul, n, a, b);
      for (Elem c : add_gens)
        if (at(mul, n, ab, c) != at(mul, n, a, at(mul, n, b, c))) return false;
    }
  return true;
}

}  // namespace gring::detail
