#include "gring/error.hpp"

#include <sstream>

namespace gring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain_error: return "domain-error";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::no_unity: return "no-unity";
    case ErrorKind::not_proper: return "not-proper";
    case ErrorKind::not_twosided: return "not-twosided";
    case ErrorKind::not_graded_right_ideal: return "not-graded-right-ideal";
    case ErrorKind::not_graded: return "not-graded";
    case ErrorKind::not_epimorphism: return "not-epimorphism";
    case ErrorKind::unknown_entry: return "unknown-entry";
    case ErrorKind::param_out_of_range: return "param-out-of-range";
    case ErrorKind::unknown_theorem: return "unknown-theorem";
  }
  return "error";
}

Error Error::axiom(std::string name, std::vector<std::size_t> witness,
                   const std::string& detail) {
  std::ostringstream msg;
  msg << "axiom '" << name << "' violated at witness (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) msg << ", ";
    msg << witness[i];
  }
  msg << ")";
  if (!detail.empty()) msg << ": " << detail;
  Error err(ErrorKind::axiom_violation, msg.str());
  err.axiom_ = std::move(name);
  err.witness_ = std::move(witness);
  return err;
}

Error Error::with_context(const std::string& prefix) const {
  Error err(kind_, prefix + what());
  err.axiom_ = axiom_;
  err.witness_ = witness_;
  return err;
}

}  // namespace gring
