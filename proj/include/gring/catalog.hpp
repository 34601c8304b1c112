#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gring/config.hpp"
#include "gring/grading.hpp"

namespace gring {

/// One built-in ring family. Every build result passes full ring and
/// grading validation before it is returned.
struct CatalogEntry {
  std::string name;
  bool takes_param = false;
  long default_param = 0;
  std::string param_doc;    // accepted range, empty when none
  std::string description;  // construction and element encoding
};

const std::vector<CatalogEntry>& catalog_entries();

/// Builds a catalog ring. Entries with a parameter use default_param
/// when none is given. Throws UnknownEntry / ParamOutOfRange.
GradedRing catalog_build(const std::string& name, std::optional<long> param = {},
                         const Config& cfg = {});

/// Stable instance name, e.g. "gaussian-mod-12".
std::string catalog_instance_name(const std::string& name, std::optional<long> param = {});

struct CorpusRing {
  std::string name;
  GradedRing graded;
};

/// The shipped corpus used by `audit --corpus` and the test suites:
/// example2, matrix-z2, gaussian-mod {4,6,8,9,12}, upper-tri {2,3},
/// square-zero {2,3}.
std::vector<CorpusRing> default_corpus(const Config& cfg = {});

}  // namespace gring
