#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fkglab {

inline constexpr int kMaxDim = 20;

// Vertex of the hypercube {0,1}^dim. Coordinate i (1-based) lives in bit i-1.
struct Point {
  std::uint32_t bits = 0;
  int dim = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

Point make_point(std::uint32_t bits, int dim);

Point join(Point a, Point b);
Point meet(Point a, Point b);
bool leq(Point a, Point b);

// Binary string of length dim, leftmost character is coordinate 1.
std::string point_str(Point p);
Point parse_point(std::string_view s);

// Subset of {0,1}^dim, stored as one flag per vertex.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim);

  static PointSet full(int dim);

  int dim() const { return dim_; }
  std::uint32_t universe() const { return 1u << dim_; }

  bool test(std::uint32_t v) const {
    return (blocks_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(std::uint32_t v) { blocks_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::uint32_t v) {
    blocks_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  bool contains(Point p) const;
  void insert(Point p);

  std::uint64_t count() const;
  bool empty() const { return count() == 0; }

  PointSet operator&(const PointSet& o) const;
  PointSet operator|(const PointSet& o) const;
  PointSet complement() const;
  bool subset_of(const PointSet& o) const;

  std::vector<std::uint32_t> members() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> blocks_;

  void check_same_dim(const PointSet& o) const;
};

}  // namespace fkglab
