#include "fkglab/point.hpp"

#include <stdexcept>
#include <string>

namespace fkglab {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw std::invalid_argument("dimension out of range: " +
                                std::to_string(dim));
}

void check_pair(Point a, Point b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(a.dim) + " vs " +
                                std::to_string(b.dim));
}

}  // namespace

Point make_point(std::uint32_t bits, int dim) {
  check_dim(dim);
  if (dim < 32 && (bits >> dim) != 0)
    throw std::invalid_argument("point has bits outside dimension " +
                                std::to_string(dim));
  return Point{bits, dim};
}

Point join(Point a, Point b) {
  check_pair(a, b);
  return Point{a.bits | b.bits, a.dim};
}

Point meet(Point a, Point b) {
  check_pair(a, b);
  return Point{a.bits & b.bits, a.dim};
}

bool leq(Point a, Point b) {
  check_pair(a, b);
  return (a.bits & ~b.bits) == 0;
}

std::string point_str(Point p) {
  std::string s(p.dim, '0');
  for (int i = 0; i < p.dim; ++i)
    if ((p.bits >> i) & 1u) s[i] = '1';
  return s;
}

Point parse_point(std::string_view s) {
  int dim = static_cast<int>(s.size());
  check_dim(dim);
  std::uint32_t bits = 0;
  for (int i = 0; i < dim; ++i) {
    char c = s[i];
    if (c == '1')
      bits |= 1u << i;
    else if (c != '0')
      throw std::invalid_argument("bad point string: " + std::string(s));
  }
  return Point{bits, dim};
}

PointSet::PointSet(int dim) : dim_(dim) {
  check_dim(dim);
  blocks_.assign(((std::size_t{1} << dim) + 63) / 64, 0);
}

PointSet PointSet::full(int dim) {
  PointSet s(dim);
  std::uint64_t n = std::uint64_t{1} << dim;
  for (std::size_t b = 0; b < s.blocks_.size(); ++b) {
    std::uint64_t lo = b * 64;
    std::uint64_t width = n - lo >= 64 ? 64 : n - lo;
    s.blocks_[b] = width == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << width) - 1;
  }
  return s;
}

bool PointSet::contains(Point p) const {
  if (p.dim != dim_)
    throw std::invalid_argument("point dimension does not match set");
  return test(p.bits);
}

void PointSet::insert(Point p) {
  if (p.dim != dim_)
    throw std::invalid_argument("point dimension does not match set");
  set(p.bits);
}

std::uint64_t PointSet::count() const {
  std::uint64_t n = 0;
  for (auto b : blocks_) n += __builtin_popcountll(b);
  return n;
}

void PointSet::check_same_dim(const PointSet& o) const {
  if (dim_ != o.dim_)
    throw std::invalid_argument("point set dimensions differ");
}

PointSet PointSet::operator&(const PointSet& o) const {
  check_same_dim(o);
  PointSet r(dim_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    r.blocks_[i] = blocks_[i] & o.blocks_[i];
  return r;
}

PointSet PointSet::operator|(const PointSet& o) const {
  check_same_dim(o);
  PointSet r(dim_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    r.blocks_[i] = blocks_[i] | o.blocks_[i];
  return r;
}

PointSet PointSet::complement() const {
  PointSet r = full(dim_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= ~blocks_[i];
  return r;
}

bool PointSet::subset_of(const PointSet& o) const {
  check_same_dim(o);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & ~o.blocks_[i]) return false;
  return true;
}

std::vector<std::uint32_t> PointSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < universe(); ++v)
    if (test(v)) out.push_back(v);
  return out;
}

}  // namespace fkglab
