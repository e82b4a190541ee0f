#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ceer {

class CeerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad relation spec, violated precondition, unknown name.
class SpecError : public CeerError {
 public:
  using CeerError::CeerError;
};

/// A μ-search ran out of ν-queries. Either the relation is not IC (no coding
/// exists) or the fuel was too small; the two cannot be told apart.
class FuelExhausted : public CeerError {
 public:
  FuelExhausted(std::uint64_t step, std::uint64_t queries, std::string detail)
      : CeerError("fuel exhausted at step " + std::to_string(step) + " after " +
                  std::to_string(queries) + " queries: " + detail),
        step_(step),
        queries_(queries),
        detail_(std::move(detail)) {}

  std::uint64_t step() const noexcept { return step_; }
  std::uint64_t queries() const noexcept { return queries_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::uint64_t step_;
  std::uint64_t queries_;
  std::string detail_;
};

/// A literal evaluation was requested beyond its feasible scale.
class ScaleExceeded : public CeerError {
 public:
  using CeerError::CeerError;
};

/// No walk joins the requested nodes.
class NoWalk : public CeerError {
 public:
  using CeerError::CeerError;
};

}  // namespace ceer
