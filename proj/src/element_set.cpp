#include "gring/element_set.hpp"

#include <bit>
#include <sstream>

#include "gring/error.hpp"

namespace gring {

namespace {
std::size_t words_for(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_(words_for(universe), 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

ElementSet ElementSet::of(std::size_t universe, std::initializer_list<Elem> elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.set(e);
  return s;
}

ElementSet ElementSet::from_indices(std::size_t universe, const std::vector<Elem>& elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.set(e);
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::test(Elem e) const {
  if (e >= universe_)
    throw Error(ErrorKind::domain_error,
                "element index " + std::to_string(e) + " out of range [0, " +
                    std::to_string(universe_) + ")");
  return (words_[e / 64] >> (e % 64)) & 1u;
}

void ElementSet::set(Elem e) {
  if (e >= universe_)
    throw Error(ErrorKind::domain_error,
                "element index " + std::to_string(e) + " out of range [0, " +
                    std::to_string(universe_) + ")");
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void ElementSet::reset(Elem e) {
  if (e >= universe_)
    throw Error(ErrorKind::domain_error,
                "element index " + std::to_string(e) + " out of range [0, " +
                    std::to_string(universe_) + ")");
  words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

void ElementSet::check_universe(const ElementSet& other) const {
  if (universe_ != other.universe_)
    throw Error(ErrorKind::domain_error,
                "element sets over different universes (" + std::to_string(universe_) +
                    " vs " + std::to_string(other.universe_) + ")");
}

bool ElementSet::subset_of(const ElementSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  check_universe(other);
  ElementSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    out.words_[w] = words_[w] & ~other.words_[w];
  return out;
}

bool ElementSet::bitvector_less(const ElementSet& other) const noexcept {
  if (universe_ != other.universe_) return universe_ < other.universe_;
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w] != other.words_[w]) return words_[w] < other.words_[w];
  return false;
}

std::vector<Elem> ElementSet::indices() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Elem e) {
    if (!first) os << ',';
    first = false;
    os << e;
  });
  os << '}';
  return os.str();
}

}  // namespace gring
