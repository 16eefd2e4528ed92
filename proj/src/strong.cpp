#include "fkglab/strong.hpp"

#include <stdexcept>
#include <string>

namespace fkglab {

Rat e2(const std::vector<Rat>& xs) {
  if (xs.size() < 2)
    throw std::invalid_argument("e2 needs at least two arguments");
  Rat sum = 0, sq = 0;
  for (const auto& x : xs) {
    sum += x;
    sq += x * x;
  }
  return (sum * sum - sq) / 2;
}

BlockMasses block_masses(const Measure& mu, const Partition& p) {
  if (mu.dim() != p.dim)
    throw std::invalid_argument("measure and partition dimensions differ");
  BlockMasses m;
  m.a = 0;
  m.b = 0;
  m.c.assign(p.k, Rat(0));
  for (std::uint32_t v = 0; v < mu.size(); ++v) {
    int l = p.labels[v];
    if (l == 0)
      m.a += mu.at(v);
    else if (l == p.k + 1)
      m.b += mu.at(v);
    else
      m.c[l - 1] += mu.at(v);
  }
  return m;
}

InequalityReport check_strong_inequality(const Measure& mu,
                                         const Partition& p) {
  BlockMasses m = block_masses(mu, p);
  InequalityReport r;
  r.lhs = m.a * m.b;
  r.rhs = e2(m.c);
  r.margin = r.lhs - r.rhs;
  r.holds = r.margin >= 0;
  return r;
}

std::pair<Rat, Rat> k2_identity_check(const Measure& mu, const Partition& p) {
  if (p.k != 2)
    throw std::invalid_argument("identity check needs exactly two C blocks");
  InequalityReport r = check_strong_inequality(mu, p);
  PointSet e1 = p.a_set() | p.c_set(1);
  PointSet e2set = p.a_set() | p.c_set(2);
  Rat gap = mu.mass(e1 & e2set) - mu.mass(e1) * mu.mass(e2set);
  return {r.margin, gap};
}

InductionTrace induction_trace(const Measure& mu, const Partition& p) {
  if (mu.dim() != p.dim)
    throw std::invalid_argument("measure and partition dimensions differ");
  if (mu.dim() < 1)
    throw std::invalid_argument("trace needs dimension >= 1");
  if (!is_product(mu))
    throw std::invalid_argument("trace requires a product measure");

  auto [lower, q] = project_last(mu);
  std::uint32_t top = 1u << (mu.dim() - 1);

  InductionTrace t;
  t.k = p.k;
  t.a0 = 0;
  t.b0 = 0;
  t.d = 0;
  t.q = q;
  t.c_plus.assign(p.k, Rat(0));
  t.c_circ.assign(p.k, Rat(0));
  t.c_minus.assign(p.k, Rat(0));

  for (std::uint32_t v = 0; v < top; ++v) {
    int l0 = p.labels[v];
    int l1 = p.labels[v | top];
    const Rat& w = lower.at(v);
    int b = p.k + 1;
    if (l0 == 0 && l1 == 0)
      t.a0 += w;
    else if (l0 == b && l1 == b)
      t.b0 += w;
    else if (l0 == b && l1 == 0)
      t.d += w;
    else if (l0 >= 1 && l0 <= p.k && l1 == 0)
      t.c_plus[l0 - 1] += w;
    else if (l0 >= 1 && l0 <= p.k && l1 == l0)
      t.c_circ[l0 - 1] += w;
    else if (l0 == b && l1 >= 1 && l1 <= p.k)
      t.c_minus[l1 - 1] += w;
    else
      throw std::invalid_argument(
          "illegal fiber pattern at " + point_str(Point{v, mu.dim() - 1}) +
          ": labels " + std::to_string(l0) + ", " + std::to_string(l1));
  }

  BlockMasses m = block_masses(mu, p);
  t.mass_a = m.a;
  t.mass_b = m.b;
  t.mass_c = m.c;
  return t;
}

namespace {

bool recompose_with(const InductionTrace& t, const Rat& r) {
  Rat sum_cp = 0, sum_cm = 0;
  for (int i = 0; i < t.k; ++i) {
    sum_cp += t.c_plus[i];
    sum_cm += t.c_minus[i];
  }
  if (t.mass_a != t.a0 + r * (t.d + sum_cp)) return false;
  if (t.mass_b != t.b0 + (1 - r) * (t.d + sum_cm)) return false;
  for (int i = 0; i < t.k; ++i)
    if (t.mass_c[i] != t.c_circ[i] + r * t.c_minus[i] + (1 - r) * t.c_plus[i])
      return false;
  return true;
}

}  // namespace

InductionVerdict verify_induction_step(const InductionTrace& t) {
  if (t.k < 2 || static_cast<int>(t.c_plus.size()) != t.k ||
      static_cast<int>(t.c_circ.size()) != t.k ||
      static_cast<int>(t.c_minus.size()) != t.k ||
      static_cast<int>(t.mass_c.size()) != t.k)
    throw std::invalid_argument("malformed trace");
  if (t.q < 0 || t.q > 1) throw std::invalid_argument("malformed trace");
  if (t.a0 < 0 || t.b0 < 0 || t.d < 0 || t.mass_a < 0 || t.mass_b < 0)
    throw std::invalid_argument("malformed trace");
  for (int i = 0; i < t.k; ++i)
    if (t.c_plus[i] < 0 || t.c_circ[i] < 0 || t.c_minus[i] < 0 ||
        t.mass_c[i] < 0)
      throw std::invalid_argument("malformed trace");

  InductionVerdict v;
  Rat sum_cp = 0, sum_cm = 0;
  std::vector<Rat> circ_minus(t.k), circ_plus(t.k), minus_less_plus(t.k);
  for (int i = 0; i < t.k; ++i) {
    sum_cp += t.c_plus[i];
    sum_cm += t.c_minus[i];
    circ_minus[i] = t.c_circ[i] + t.c_minus[i];
    circ_plus[i] = t.c_circ[i] + t.c_plus[i];
    minus_less_plus[i] = t.c_minus[i] - t.c_plus[i];
  }

  if ((t.a0 + t.d + sum_cp) * t.b0 < e2(circ_minus) ||
      t.a0 * (t.b0 + t.d + sum_cm) < e2(circ_plus)) {
    v.failed_obligation = 1;
    v.detail = "an induction hypothesis inequality fails on the fibers";
    return v;
  }

  if (-(t.d + sum_cp) * (t.d + sum_cm) > e2(minus_less_plus)) {
    v.failed_obligation = 2;
    v.detail = "the quadratic cross bound fails";
    return v;
  }

  bool face_one = recompose_with(t, 1 - t.q);
  bool face_zero = recompose_with(t, t.q);
  if (!face_one && !face_zero) {
    v.failed_obligation = 3;
    v.detail = "block masses do not recompose from the trace";
    return v;
  }
  v.ok = true;
  v.orientation = face_one && face_zero ? FaceOrientation::kEither
                  : face_one            ? FaceOrientation::kFaceOne
                                        : FaceOrientation::kFaceZero;
  return v;
}

}  // namespace fkglab
