#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arrcomb {

// Every library failure carries a short machine-readable code; the CLI turns
// it into an error JSON object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("parse_error", m) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error("dimension_mismatch", m) {}
};

struct InvalidSpec : Error {
  explicit InvalidSpec(const std::string& m) : Error("invalid_spec", m) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& m) : Error("invalid_argument", m) {}
};

struct NotAFlat : Error {
  explicit NotAFlat(const std::string& m) : Error("not_a_flat", m) {}
};

// Raised when a structural property that must hold for every deformed braid
// face does not, which points at a bug upstream.
struct StructureViolation : Error {
  explicit StructureViolation(const std::string& m) : Error("structure_violation", m) {}
};

}  // namespace arrcomb
