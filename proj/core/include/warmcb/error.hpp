#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace warmcb {

enum class Errc {
  invalid_argument,
  invalid_propensity,
  invalid_cost,
  empty_dataset,
  class_too_large,
  degenerate_objective,
  degenerate_bound,
  dimension_mismatch,
  too_few_examples,
  parse_error,
  schema_error,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

// All library failures surface as this type; code() is stable and machine readable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, Errc code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace warmcb
