#pragma once

#include <string>

#include "gring/config.hpp"
#include "gring/grading.hpp"

namespace gring {

struct NamedRing {
  std::string name;
  GradedRing graded;
};

/// Parses the line-oriented ring definition format (see README for the
/// grammar; '#' starts a comment, blank lines are ignored) and fully
/// validates the result. ParseError carries the line number; axiom
/// failures are rethrown with the ring name as context.
NamedRing parse_ring_file(const std::string& text, const Config& cfg = {});

NamedRing load_ring_file(const std::string& path, const Config& cfg = {});

/// Canonical emission; emit-parse-emit is byte-stable.
std::string emit_ring_file(const std::string& name, const GradedRing& gr);

}  // namespace gring
