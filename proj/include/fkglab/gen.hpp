#pragma once

#include <vector>

#include "fkglab/measure.hpp"
#include "fkglab/partition.hpp"
#include "fkglab/percolation.hpp"
#include "fkglab/realization.hpp"
#include "fkglab/rng.hpp"

namespace fkglab {

// Uniform over { num/den : 1 <= den <= max_den, 0 <= num <= den } after
// picking den first, so values land in [0, 1].
Rat random_rat01(Rng& rng, int max_den = 16);

// Same but restricted to the open interval (0, 1).
Rat random_rat_open01(Rng& rng, int max_den = 16);

Measure random_product_measure(Rng& rng, int n);

// Arbitrary normalized nonnegative weights; zeros allowed.
Measure random_measure(Rng& rng, int n);

// Random couplings B_ij in {1, ..., 3} scaled by small rationals >= 1 and
// positive fields, so the result always passes the lattice condition and has
// full support.
Measure random_ising_measure(Rng& rng, int n);

// Uniform over the upsets of {0,1}^m.
TruthTable random_monotone_table(Rng& rng, int m);

Realization random_realization(Rng& rng, int m, int outputs);

// A uniformly chosen upset A, then up to k pairwise compatible upsets
// V strictly above A (V n V' = A) taken greedily from a shuffled candidate
// list; C_i = V_i \ A, padded with empty blocks up to k.
Partition random_partition(Rng& rng, int n, int k);

// Every valid partition of {0,1}^n, with k the number of nonempty C blocks
// padded up to 2. Exhaustive; n <= 3 is the practical range.
std::vector<Partition> enumerate_valid_partitions(int n);

// Connected labels not required; vertex_count >= 3 and 1..max_edges edges
// on distinct pairs with probabilities in (0, 1).
EdgeGraph random_graph(Rng& rng, int max_vertices, int max_edges);

}  // namespace fkglab
