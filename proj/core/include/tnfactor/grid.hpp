#pragma once

#include <string>
#include <vector>

#include "tnfactor/rational.hpp"

namespace tnfactor {

/// Validity regime a grid declares (and is checked against). The
/// structured-matrix families need strictly increasing positive nodes
/// for their positivity claims, while the bidiagonal decompositions
/// survive on merely distinct nodes subject to nonvanishing conditions
/// that the decomposition routines re-check themselves.
enum class Ordering { strictly_increasing_positive, strictly_increasing, distinct_only };

std::string to_string(Ordering o);
Ordering ordering_from_string(const std::string& s);

/// Throws with the offending index when `nodes` does not satisfy `o`.
/// `what` names the grid in the message ("x", "y", "lambda", ...).
void require_ordering(const std::vector<Rational>& nodes, Ordering o, const std::string& what);

/// Node data for the two-grid matrix families. Both grids must have the
/// same length n >= 1 and satisfy the declared ordering.
struct GridParams {
  std::vector<Rational> x, y;
  Ordering ordering;

  GridParams(std::vector<Rational> x_nodes, std::vector<Rational> y_nodes, Ordering o);
  static GridParams symmetric(std::vector<Rational> nodes, Ordering o);

  std::size_t size() const { return x.size(); }
};

} // namespace tnfactor
