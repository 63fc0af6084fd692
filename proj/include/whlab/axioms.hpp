#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whlab/spaces.hpp"

namespace whlab {

/// Outcome of one executable Banach-function-norm property over a sample.
struct AxiomResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  double worst = 0.0; ///< largest observed violation measure (<= 0 means slack to spare)
  double tolerance = 0.0;
};

/// Seeded random complex functions on the grid: modulated Gaussian envelopes
/// with random centres and widths, half of them cut to a random sub-box.
std::vector<GridFunction> random_functions(const Grid& grid, int count, std::uint64_t seed);

/// Runs homogeneity, triangle inequality, lattice property, Fatou by
/// truncation, local finiteness of ball indicators, and generalised Hoelder
/// (factor 2) on `samples` random functions.
std::vector<AxiomResult> check_axioms(const SpaceSpec& space, int samples, std::uint64_t seed);

} // namespace whlab
