#include "tnfactor/grid.hpp"

#include <set>

namespace tnfactor {

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::strictly_increasing_positive: return "strictly-increasing-positive";
    case Ordering::strictly_increasing: return "strictly-increasing";
    case Ordering::distinct_only: return "distinct-only";
  }
  return "?";
}

Ordering ordering_from_string(const std::string& s) {
  if (s == "strictly-increasing-positive") return Ordering::strictly_increasing_positive;
  if (s == "strictly-increasing") return Ordering::strictly_increasing;
  if (s == "distinct-only") return Ordering::distinct_only;
  throw Error("unknown ordering flag: '" + s + "'");
}

void require_ordering(const std::vector<Rational>& nodes, Ordering o, const std::string& what) {
  if (nodes.empty()) throw Error("grid " + what + " must have at least one node");
  switch (o) {
    case Ordering::strictly_increasing_positive:
      if (nodes[0].sign() <= 0)
        throw Error("grid " + what + " declared strictly-increasing-positive but " + what +
                    "[1] = " + nodes[0].str() + " is not positive");
      [[fallthrough]];
    case Ordering::strictly_increasing:
      for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i - 1] < nodes[i]))
          throw Error("grid " + what + " is not strictly increasing at index " +
                      std::to_string(i + 1) + " (" + nodes[i - 1].str() + " !< " +
                      nodes[i].str() + ")");
      break;
    case Ordering::distinct_only: {
      std::set<std::string> seen;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!seen.insert(nodes[i].str()).second)
          throw Error("grid " + what + " has a repeated node " + nodes[i].str() + " at index " +
                      std::to_string(i + 1));
      break;
    }
  }
}

GridParams::GridParams(std::vector<Rational> x_nodes, std::vector<Rational> y_nodes, Ordering o)
    : x(std::move(x_nodes)), y(std::move(y_nodes)), ordering(o) {
  if (x.size() != y.size()) throw Error("grids x and y must have equal length");
  require_ordering(x, o, "x");
  require_ordering(y, o, "y");
}

GridParams GridParams::symmetric(std::vector<Rational> nodes, Ordering o) {
  auto copy = nodes;
  return GridParams(std::move(nodes), std::move(copy), o);
}

} // namespace tnfactor
