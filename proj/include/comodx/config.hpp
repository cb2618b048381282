#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace comodx {

/// A structure failed one of its defining identities (simplicial identities,
/// r∘i = id, coaction compatibility, ...). The message names what failed.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search (hom-set enumeration, coset enumeration) ran out of budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction would produce simplices above the configured dimension cap.
class DimensionLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int read_max_dimension() {
  if (const char* env = std::getenv("COMODULE_MAX_DIM")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 32) return static_cast<int>(value);
  }
  return 8;
}

}  // namespace detail

/// Largest simplicial dimension any construction may produce.
/// Defaults to 8; the environment variable COMODULE_MAX_DIM overrides it.
inline int max_dimension() {
  static const int value = detail::read_max_dimension();
  return value;
}

inline void check_dimension(int dim, const std::string& what) {
  if (dim > max_dimension())
    throw DimensionLimit(what + ": dimension " + std::to_string(dim) + " exceeds the cap " +
                         std::to_string(max_dimension()));
}

}  // namespace comodx
