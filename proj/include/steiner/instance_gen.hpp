#pragma once

#include <cstdint>
#include <random>

#include "steiner/embedded_tree.hpp"

namespace steiner {

// Deterministic uniform double in [0, 1) from the engine's raw output, so
// streams do not depend on the standard library's distribution internals.
double uniform01(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

// A uniformly random full Steiner topology on n terminals, built by merging
// random subtree pairs under fresh Steiner points and hanging the result off
// terminal 0.  Terminals get ids 0..n-1, Steiner points n..2n-3.
FullTopology random_full_topology(int n, std::mt19937_64& rng);

// A random eps-approximate tree on the topology: edge lengths log-uniform in
// [0.1, 1], per-Steiner angle errors with each pairwise angle within eps of
// 2pi/3 (two sectors uniform in [-eps/2, eps/2], the third balancing).
EmbeddedTree random_approx_tree(int n, double eps, std::mt19937_64& rng);

}  // namespace steiner
