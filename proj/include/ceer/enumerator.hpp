#pragma once

// Enumerations ν: ℕ⁺ → ℕ², their extension to signed edge indices, and walks.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ceer/types.hpp"

namespace ceer {

/// A total, deterministic map from positive indices to pairs.
class Enumerator {
 public:
  using Fn = std::function<NodePair(Index)>;

  Enumerator() = default;
  Enumerator(Fn eval, std::string label) : eval_(std::move(eval)), label_(std::move(label)) {}

  /// Throws SpecError for k = 0.
  NodePair operator()(Index k) const;

  const std::string& label() const noexcept { return label_; }
  explicit operator bool() const noexcept { return static_cast<bool>(eval_); }

 private:
  Fn eval_;
  std::string label_;
};

/// A nonzero edge index x: x > 0 traverses ν(x) forwards, x < 0 traverses
/// ν(-x) backwards.
class SignedEdge {
 public:
  /// Throws SpecError for x = 0.
  explicit SignedEdge(std::int64_t x);

  std::int64_t index() const noexcept { return x_; }
  Index magnitude() const noexcept { return static_cast<Index>(x_ < 0 ? -x_ : x_); }
  bool forward() const noexcept { return x_ > 0; }
  SignedEdge reversed() const noexcept { return SignedEdge(-x_); }

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;

 private:
  std::int64_t x_;
};

/// Tail of x: proj1 ν(x) for x > 0, proj2 ν(-x) for x < 0.
Nat tau(SignedEdge x, const Enumerator& nu);
/// Head of x: proj2 ν(x) for x > 0, proj1 ν(-x) for x < 0.
Nat eta(SignedEdge x, const Enumerator& nu);

using Walk = std::vector<SignedEdge>;

/// True iff w is nonempty, τ(x₁) = i, η(xₙ) = j and η(x_k) = τ(x_{k+1}).
bool is_walk(const Walk& w, Nat i, Nat j, const Enumerator& nu);

Walk make_walk(std::initializer_list<std::int64_t> xs);
std::string to_string(const Walk& w);

}  // namespace ceer
