#include "fkglab/measure.hpp"

#include <stdexcept>
#include <string>

#include "fkglab/parallel.hpp"
#include "fkglab/upsets.hpp"

namespace fkglab {

Measure::Measure(int dim, std::vector<Rat> weights)
    : dim_(dim), w_(std::move(weights)) {
  if (dim < 0 || dim > kMaxDim)
    throw std::invalid_argument("measure dimension out of range: " +
                                std::to_string(dim));
  if (w_.size() != (std::size_t{1} << dim))
    throw std::invalid_argument("weight vector must have 2^dim entries");
  Rat sum = 0;
  for (std::uint32_t v = 0; v < w_.size(); ++v) {
    if (w_[v] < 0)
      throw std::invalid_argument("negative weight at point " +
                                  point_str(Point{v, dim_}));
    sum += w_[v];
  }
  if (sum != 1)
    throw std::invalid_argument("weights sum to " + rat_str(sum) +
                                ", expected 1");
}

Rat Measure::mass(const PointSet& s) const {
  if (s.dim() != dim_)
    throw std::invalid_argument("point set dimension does not match measure");
  Rat out = 0;
  for (std::uint32_t v = 0; v < size(); ++v)
    if (s.test(v)) out += w_[v];
  return out;
}

bool Measure::full_support() const {
  for (const auto& w : w_)
    if (w == 0) return false;
  return true;
}

Measure product_measure(const std::vector<Rat>& p) {
  int n = static_cast<int>(p.size());
  if (n > kMaxDim)
    throw std::invalid_argument("too many coordinates: " + std::to_string(n));
  for (const auto& pi : p)
    if (pi < 0 || pi > 1)
      throw std::invalid_argument("coordinate probability " + rat_str(pi) +
                                  " outside [0, 1]");
  std::vector<Rat> w(std::size_t{1} << n, Rat(1));
  for (int i = 0; i < n; ++i) {
    std::uint32_t bit = 1u << i;
    for (std::uint32_t v = 0; v < w.size(); ++v)
      w[v] *= (v & bit) ? p[i] : 1 - p[i];
  }
  return Measure(n, std::move(w));
}

Measure fixed_point_measure(int n) {
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("fixed point measure needs 1 <= n <= " +
                                std::to_string(kMaxDim));
  // D_k counts derangements: D_0 = 1, D_1 = 0, D_k = (k-1)(D_{k-1} + D_{k-2}).
  std::vector<Int> d(n + 1);
  d[0] = 1;
  if (n >= 1) d[1] = 0;
  for (int k = 2; k <= n; ++k) d[k] = (k - 1) * (d[k - 1] + d[k - 2]);
  Int fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  std::vector<Rat> w(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < w.size(); ++v) {
    int free = n - __builtin_popcount(v);
    w[v] = Rat(d[free], fact);
    w[v].canonicalize();
  }
  return Measure(n, std::move(w));
}

Measure ising_measure(const std::vector<std::vector<Rat>>& B,
                      const std::vector<Rat>& C) {
  int n = static_cast<int>(C.size());
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("coupling measure needs 1 <= n <= " +
                                std::to_string(kMaxDim));
  if (B.size() != C.size())
    throw std::invalid_argument("B must be an n x n matrix");
  for (int i = 0; i < n; ++i) {
    if (B[i].size() != C.size())
      throw std::invalid_argument("B must be an n x n matrix");
    if (C[i] <= 0)
      throw std::invalid_argument("C entries must be positive");
    for (int j = 0; j < n; ++j) {
      if (B[i][j] < 1)
        throw std::invalid_argument("B entries must be >= 1");
      if (B[i][j] != B[j][i])
        throw std::invalid_argument("B must be symmetric");
    }
  }
  std::vector<Rat> w(std::size_t{1} << n, Rat(1));
  Rat total = 0;
  for (std::uint32_t v = 0; v < w.size(); ++v) {
    for (int i = 0; i < n; ++i) {
      if (!((v >> i) & 1u)) continue;
      w[v] *= C[i];
      for (int j = i + 1; j < n; ++j)
        if ((v >> j) & 1u) w[v] *= B[i][j];
    }
    total += w[v];
  }
  for (auto& x : w) x /= total;
  return Measure(n, std::move(w));
}

namespace {

struct FkgScanResult {
  bool found = false;
  FkgViolation v;
};

FkgScanResult scan_fkg_range(const Measure& mu, std::uint64_t lo,
                             std::uint64_t hi) {
  FkgScanResult res;
  std::uint64_t size = mu.size();
  for (std::uint64_t a = lo; a < hi; ++a) {
    for (std::uint64_t b = a + 1; b < size; ++b) {
      std::uint32_t jo = static_cast<std::uint32_t>(a | b);
      std::uint32_t me = static_cast<std::uint32_t>(a & b);
      Rat lhs = mu.at(jo) * mu.at(me);
      Rat rhs = mu.at(static_cast<std::uint32_t>(a)) *
                mu.at(static_cast<std::uint32_t>(b));
      if (lhs < rhs) {
        res.found = true;
        res.v = FkgViolation{Point{static_cast<std::uint32_t>(a), mu.dim()},
                             Point{static_cast<std::uint32_t>(b), mu.dim()},
                             lhs, rhs};
        return res;
      }
    }
  }
  return res;
}

}  // namespace

std::optional<FkgViolation> check_fkg_property(const Measure& mu,
                                               int workers) {
  workers = resolve_workers(workers);
  auto parts = run_partitioned<FkgScanResult>(
      0, mu.size(), workers,
      [&](int, std::uint64_t lo, std::uint64_t hi) {
        return scan_fkg_range(mu, lo, hi);
      });
  // Ranges are scanned in a-major order, so the first hit over the ordered
  // parts is the global index-lexicographic first violation.
  for (const auto& part : parts)
    if (part.found) return part.v;
  return std::nullopt;
}

std::optional<PaViolation> check_positive_association(const Measure& mu) {
  auto ups = enumerate_upsets(mu.dim());
  std::vector<Rat> masses(ups.size());
  for (std::size_t i = 0; i < ups.size(); ++i) masses[i] = mu.mass(ups[i]);
  for (std::size_t i = 0; i < ups.size(); ++i) {
    for (std::size_t j = 0; j < ups.size(); ++j) {
      Rat inter = mu.mass(ups[i] & ups[j]);
      Rat prod = masses[i] * masses[j];
      if (inter < prod)
        return PaViolation{ups[i], ups[j], prod - inter};
    }
  }
  return std::nullopt;
}

std::pair<Measure, Rat> project_last(const Measure& mu) {
  if (mu.dim() < 1)
    throw std::invalid_argument("cannot project a zero-dimensional measure");
  int m = mu.dim() - 1;
  std::uint32_t half = 1u << m;
  std::vector<Rat> w(half);
  Rat q = 0;
  for (std::uint32_t v = 0; v < half; ++v) {
    w[v] = mu.at(v) + mu.at(v | half);
    q += mu.at(v);
  }
  return {Measure(m, std::move(w)), q};
}

Rat conditional_zero_prob(const Measure& mu, int coord, std::uint32_t prefix) {
  if (coord < 0 || coord >= mu.dim())
    throw std::invalid_argument("coordinate out of range");
  if (coord < 32 && (prefix >> coord) != 0)
    throw std::invalid_argument("prefix has bits beyond the coordinate");
  std::uint32_t bit = 1u << coord;
  std::uint32_t rest = mu.dim() - coord - 1;
  Rat zero = 0, total = 0;
  for (std::uint32_t tail = 0; tail < (1u << rest); ++tail) {
    std::uint32_t base = prefix | (tail << (coord + 1));
    zero += mu.at(base);
    total += mu.at(base) + mu.at(base | bit);
  }
  if (total == 0)
    throw std::invalid_argument(
        "conditioning event has zero mass at prefix " +
        point_str(Point{prefix, coord}));
  return zero / total;
}

bool is_product(const Measure& mu) {
  std::uint32_t size = mu.size();
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t b = a + 1; b < size; ++b)
      if (mu.at(a | b) * mu.at(a & b) != mu.at(a) * mu.at(b)) return false;
  return true;
}

}  // namespace fkglab
