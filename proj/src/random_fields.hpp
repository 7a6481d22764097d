#pragma once

#include <cstdint>

#include "radial.hpp"

namespace nlheat {

// Strictly positive radial test profiles for the inequality suite.  Even
// indices draw Gaussian mixtures with positive coefficients (components may
// sit off-center; they are mirrored in r to stay even and smooth at the
// axis), odd indices draw stretched exponentials A e^{-(r/sigma)^a} with
// a in [1, 3].  Membership is keyed on (seed, index) alone, so requesting a
// longer suite never reshuffles earlier members.
RadialField suite_field(const GridPtr& grid, uint64_t seed, int index);

// Family label for a suite index ("gaussian_mixture" or
// "stretched_exponential").
const char* suite_family_name(int index);

}  // namespace nlheat
