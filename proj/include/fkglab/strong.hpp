#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fkglab/measure.hpp"
#include "fkglab/partition.hpp"
#include "fkglab/rational.hpp"

namespace fkglab {

// Second elementary symmetric polynomial, ((sum x)^2 - sum x^2) / 2.
// Requires at least two arguments.
Rat e2(const std::vector<Rat>& xs);

struct InequalityReport {
  Rat lhs;
  Rat rhs;
  Rat margin;  // lhs - rhs
  bool holds;  // margin >= 0
};

struct BlockMasses {
  Rat a;
  Rat b;
  std::vector<Rat> c;
};

BlockMasses block_masses(const Measure& mu, const Partition& p);

// lhs = mu(A) mu(B), rhs = e2(mu(C_1), ..., mu(C_k)).
InequalityReport check_strong_inequality(const Measure& mu,
                                         const Partition& p);

// For k = 2 the margin equals the correlation gap of the two upsets
// E_i = A u C_i. Returns (margin, mu(E1 n E2) - mu(E1) mu(E2)).
std::pair<Rat, Rat> k2_identity_check(const Measure& mu, const Partition& p);

// Fiber decomposition of a product measure over the last coordinate.
// Every fiber v of the lower cube is classified by the label pattern
// (label(v), label(v with last coordinate set)):
//   (A,A) -> a0     (B,B) -> b0      (B,A) -> d
//   (C_i,A) -> c_plus[i]   (C_i,C_i) -> c_circ[i]   (B,C_i) -> c_minus[i]
// Any other pattern is impossible for a valid partition.
struct InductionTrace {
  int k = 0;
  Rat a0;
  Rat b0;
  Rat d;
  Rat q;  // mass of the face v_dim = 0
  std::vector<Rat> c_plus;
  std::vector<Rat> c_circ;
  std::vector<Rat> c_minus;
  // Block masses of the full measure, kept so the trace verifies on its own.
  Rat mass_a;
  Rat mass_b;
  std::vector<Rat> mass_c;
};

InductionTrace induction_trace(const Measure& mu, const Partition& p);

// Which face mass plays the mixing coefficient in the recomposition.
enum class FaceOrientation { kFaceZero, kFaceOne, kEither };

struct InductionVerdict {
  bool ok = false;
  // 0 when ok; otherwise 1 = induction hypotheses, 2 = quadratic bound,
  // 3 = recomposition identities.
  int failed_obligation = 0;
  FaceOrientation orientation = FaceOrientation::kEither;
  std::string detail;
};

// Checks the three facts the induction step rests on:
//   1. (a0 + d + sum c+) b0 >= e2(c_circ + c_minus)
//      a0 (b0 + d + sum c-) >= e2(c_circ + c_plus)
//   2. -(d + sum c+)(d + sum c-) <= e2(c_minus - c_plus)
//   3. the block masses recompose from the trace with coefficient
//      r in {1 - q, q}.
InductionVerdict verify_induction_step(const InductionTrace& t);

}  // namespace fkglab
