#pragma once

#include <string>
#include <vector>

#include "gring/audit.hpp"
#include "gring/element_set.hpp"
#include "gring/grading.hpp"
#include "gring/primality.hpp"

namespace gring {

/// Human-readable classification report.
std::string render_classification_text(const std::string& name, const GradedRing& gr,
                                       const ClassificationReport& rep);

/// Machine form: one tab-separated record per line, ideals in canonical
/// order. Grammar documented in the README.
std::string render_classification_machine(const std::string& name, const GradedRing& gr,
                                          const ClassificationReport& rep);

/// One ideal per line, members comma-separated and ascending.
std::string render_ideal_list(const std::vector<ElementSet>& ideals);

std::string render_audit_line(const AuditResult& result);

}  // namespace gring
