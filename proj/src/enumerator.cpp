#include "ceer/enumerator.hpp"

#include <sstream>

#include "ceer/errors.hpp"

namespace ceer {

NodePair Enumerator::operator()(Index k) const {
  if (k == 0) throw SpecError("enumerations are indexed from 1");
  return eval_(k);
}

SignedEdge::SignedEdge(std::int64_t x) : x_(x) {
  if (x == 0) throw SpecError("edge index 0 is not a signed edge");
}

Nat tau(SignedEdge x, const Enumerator& nu) {
  const NodePair p = nu(x.magnitude());
  return x.forward() ? p.first : p.second;
}

Nat eta(SignedEdge x, const Enumerator& nu) {
  const NodePair p = nu(x.magnitude());
  return x.forward() ? p.second : p.first;
}

bool is_walk(const Walk& w, Nat i, Nat j, const Enumerator& nu) {
  if (w.empty()) return false;
  if (tau(w.front(), nu) != i || eta(w.back(), nu) != j) return false;
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (eta(w[k], nu) != tau(w[k + 1], nu)) return false;
  return true;
}

Walk make_walk(std::initializer_list<std::int64_t> xs) {
  Walk w;
  w.reserve(xs.size());
  for (auto x : xs) w.emplace_back(x);
  return w;
}

std::string to_string(const Walk& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k].index();
  os << ')';
  return os.str();
}

}  // namespace ceer
