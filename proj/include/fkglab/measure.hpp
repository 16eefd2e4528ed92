#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fkglab/point.hpp"
#include "fkglab/rational.hpp"

namespace fkglab {

// Witness that mu(a v b) mu(a ^ b) < mu(a) mu(b).
struct FkgViolation {
  Point a;
  Point b;
  Rat lhs;
  Rat rhs;
};

// Witness pair of upsets with mu(E1 n E2) < mu(E1) mu(E2).
struct PaViolation {
  PointSet e1;
  PointSet e2;
  Rat gap;
};

// Probability measure on {0,1}^dim with exact rational weights.
class Measure {
 public:
  Measure(int dim, std::vector<Rat> weights);

  int dim() const { return dim_; }
  std::uint32_t size() const { return 1u << dim_; }
  const Rat& at(std::uint32_t v) const { return w_[v]; }
  const std::vector<Rat>& weights() const { return w_; }

  Rat mass(const PointSet& s) const;
  bool full_support() const;

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  int dim_;
  std::vector<Rat> w_;
};

// Independent coordinates, P(v_i = 1) = p[i-1].
Measure product_measure(const std::vector<Rat>& p);

// Distribution of the fixed-point set of a uniform permutation of {1..n},
// viewed as a subset of coordinates. Weight of S is D_{n-|S|} / n! with
// D_k the number of derangements of k elements.
Measure fixed_point_measure(int n);

// weight(v) proportional to prod_{i<j} B[i][j]^{v_i v_j} * prod_i C[i]^{v_i}.
// B symmetric with entries >= 1, C positive. Always lattice log-supermodular.
Measure ising_measure(const std::vector<std::vector<Rat>>& B,
                      const std::vector<Rat>& C);

// Scans unordered pairs in index order; first violation wins.
std::optional<FkgViolation> check_fkg_property(const Measure& mu,
                                               int workers = 1);

// Exhaustive scan over ordered pairs of upsets; dim <= kMaxUpsetDim.
std::optional<PaViolation> check_positive_association(const Measure& mu);

// Marginal on the first dim-1 coordinates plus the mass of the
// half-cube { v : v_dim = 0 }.
std::pair<Measure, Rat> project_last(const Measure& mu);

// P(v_{coord+1} = 0 | v_1..v_coord = prefix bits), coord 0-based.
// Errors when the conditioning event has zero mass.
Rat conditional_zero_prob(const Measure& mu, int coord, std::uint32_t prefix);

// True iff the lattice condition holds with equality for every pair.
bool is_product(const Measure& mu);

}  // namespace fkglab
