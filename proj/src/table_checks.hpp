#pragma once

// Internal helpers for exact table validation. The fast paths prove or
// refute an axiom without scanning all n^3 triples; when an axiom fails
// the caller re-scans naively to recover the lexicographically smallest
// witness.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "gring/config.hpp"

namespace gring::detail {

using Table = std::vector<Elem>;  // row-major n x n

inline Elem at(const Table& t, std::size_t n, Elem a, Elem b) {
  return t[std::size_t{a} * n + b];
}

/// Greedy generating set: smallest-index elements whose closure under
/// the table covers all of [0, n). For valid group tables this is small
/// (at most log2 n); arbitrary tables may need up to n generators.
std::vector<Elem> magma_generators(const Table& t, std::size_t n);

/// Light's associativity test over the given generators: the operation
/// is associative iff (a*g)*c == a*(g*c) for every generator g and all
/// a, c. Returns false iff some triple violates associativity.
bool associative_light(const Table& t, std::size_t n, const std::vector<Elem>& gens);

/// Lexicographically smallest (a,b,c) with (a*b)*c != a*(b*c).
std::optional<std::array<std::size_t, 3>> first_assoc_violation(const Table& t,
                                                                std::size_t n);

/// Given a verified abelian group table `add` and generators of it,
/// decides two-sided distributivity of `mul` over `add` exactly:
/// for fixed a the maps x -> a*x and x -> x*a are additive iff they are
/// additive against every generator. Returns {} when distributive, or
/// the failing side ('L' or 'R') otherwise.
std::optional<char> distributive_fast(const Table& add, const Table& mul, std::size_t n,
                                      const std::vector<Elem>& add_gens);

std::optional<std::array<std::size_t, 3>> first_distrib_violation(const Table& add,
                                                                  const Table& mul,
                                                                  std::size_t n,
                                                                  bool left);

/// With two-sided distributivity established, the associator
/// (ab)c - a(bc) is additive in each slot, so multiplication is
/// associative iff all generator triples associate.
bool mul_associative_fast(const Table& mul, std::size_t n,
                          const std::vector<Elem>& add_gens);

}  // namespace gring::detail
