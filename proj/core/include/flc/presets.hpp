#pragma once

#include <string>
#include <vector>

#include "flc/pointset.hpp"

namespace flc::presets {

/// Z^n ⊂ R^n.
PointSetDescriptor integer_lattice(std::size_t n);
/// Z ∪ (1/4 + Z): not uniformly discrete at scale 1/2.
PointSetDescriptor composite_lattice();
/// { a + b sqrt2 : |a - b sqrt2| <= 1 }, the silver-mean model set.
PointSetDescriptor silver_mean();
/// Integer Heisenberg group H(Z) inside H(R).
PointSetDescriptor heisenberg_lattice();
/// H(Z[sqrt2]) cut by the symmetrized box [-1,1]^3 in the Galois-conjugate copy.
PointSetDescriptor heisenberg_silver_mean();

/// "z", "z2", "composite", "silver_mean", "heisenberg_lattice", "heisenberg_silver_mean".
PointSetDescriptor by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace flc::presets
