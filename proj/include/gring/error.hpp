#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gring {

enum class ErrorKind {
  domain_error,
  axiom_violation,
  parse_error,
  cap_exceeded,
  no_unity,
  not_proper,
  not_twosided,
  not_graded_right_ideal,
  not_graded,
  not_epimorphism,
  unknown_entry,
  param_out_of_range,
  unknown_theorem,
};

std::string_view to_string(ErrorKind kind);

/// Every failure carries a kind and a message; axiom violations also
/// carry the axiom name and a witness, the smallest one in
/// lexicographic index order.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  static Error axiom(std::string name, std::vector<std::size_t> witness,
                     const std::string& detail = "");

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& axiom_name() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

  /// Copy of this error with `prefix` prepended to the message
  /// (used to attach file / ring context).
  Error with_context(const std::string& prefix) const;

 private:
  ErrorKind kind_;
  std::string axiom_;
  std::vector<std::size_t> witness_;
};

}  // namespace gring
