#pragma once

#include <cstddef>
#include <cstdint>

namespace gring {

/// Index of a ring or group element. Element 0 is always the additive
/// zero of a ring and the identity of a group.
using Elem = std::uint16_t;

/// Size caps. Validation accepts rings up to max_order; ideal
/// enumeration refuses rings above max_enum_order and aborts if the
/// number of discovered ideals exceeds max_ideals.
struct Config {
  std::size_t max_order = 4096;
  std::size_t max_enum_order = 256;
  std::size_t max_ideals = std::size_t{1} << 16;
};

}  // namespace gring
