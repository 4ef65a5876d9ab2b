#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tnfactor/grid.hpp"

namespace tnfactor {

/// Strictly increasing positive grid of n nodes with numerators and
/// denominators bounded by max_num / max_den.
std::vector<Rational> random_increasing_nodes(std::mt19937_64& rng, std::size_t n, long max_num = 50,
                                              long max_den = 50);

/// Strictly increasing positive grid starting in [1/4, 1/2] with node
/// gaps in [3/4, 1]; keeps float minors of the structured families
/// comfortably away from sign tolerances.
std::vector<Rational> separated_increasing_nodes(std::mt19937_64& rng, std::size_t n);

struct SelftestCheck {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::size_t trials_per_check = 0;
  std::vector<SelftestCheck> checks;
  bool all_passed = false;
};

struct SelftestOptions {
  std::uint64_t seed = 20260808;
  std::size_t trials = 25;
};

/// Runs the library's invariant battery on seeded random grids:
/// scalar arithmetic laws, the exact certificate reconstructions, the
/// triangular-parts identities, the radical LU cross-checks, factor
/// nonnegativity and the Hadamard rank law.
SelftestReport run_selftest(const SelftestOptions& opts);

} // namespace tnfactor
