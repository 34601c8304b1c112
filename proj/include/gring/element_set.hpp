#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gring/config.hpp"

namespace gring {

/// Subset of the elements of one ring, stored as a bit-vector over the
/// element indices [0, universe). Used for ideals, gradings, colon
/// ideals and products; all membership queries and set algebra are
/// exact. Sets over different universes never mix.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe, std::initializer_list<Elem> elems);
  static ElementSet from_indices(std::size_t universe, const std::vector<Elem>& elems);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  bool test(Elem e) const;
  void set(Elem e);
  void reset(Elem e);

  bool subset_of(const ElementSet& other) const;
  bool is_full() const noexcept { return count() == universe_; }
  /// The set {0}.
  bool is_zero_only() const { return count() == 1 && test(0); }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  ElementSet minus(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const noexcept = default;

  /// Canonical order: ascending value of the bit-vector read as an
  /// integer with bit i = membership of element i. Ideal lists and
  /// witness scans use this order everywhere.
  bool bitvector_less(const ElementSet& other) const noexcept;
  bool operator<(const ElementSet& other) const noexcept { return bitvector_less(other); }

  std::vector<Elem> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// "{0,4,8}"
  std::string to_string() const;

 private:
  void check_universe(const ElementSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gring
