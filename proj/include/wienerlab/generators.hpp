#pragma once

#include <cstddef>
#include <random>

#include "wienerlab/graph.hpp"

namespace wienerlab {

// A uniform random labeled tree on n vertices with every remaining pair added
// independently with probability `density`. Always connected.
Graph random_connected_graph(std::size_t n, double density, std::mt19937_64& rng);

// Same, with n drawn uniformly from [min_n, max_n] and density from
// [0, max_density].
Graph random_connected_graph(std::size_t min_n, std::size_t max_n, double max_density, std::mt19937_64& rng);

}  // namespace wienerlab
