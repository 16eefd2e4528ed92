#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fkglab/measure.hpp"
#include "fkglab/rational.hpp"

namespace fkglab {

inline constexpr int kMaxSources = 24;

// Boolean function of m source bits, one bit per assignment.
// Assignment a places source j in bit j.
struct TruthTable {
  int m = 0;
  std::vector<std::uint64_t> bits;

  explicit TruthTable(int m_ = 0)
      : m(m_), bits((std::size_t{1} << m_) / 64 + 1, 0) {}

  bool test(std::uint32_t a) const {
    return (bits[a >> 6] >> (a & 63)) & 1u;
  }
  void set(std::uint32_t a, bool v) {
    if (v)
      bits[a >> 6] |= std::uint64_t{1} << (a & 63);
    else
      bits[a >> 6] &= ~(std::uint64_t{1} << (a & 63));
  }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

// Independent Bernoulli sources feeding monotone outputs.
struct Realization {
  std::vector<Rat> sources;          // success probability of each source
  std::vector<TruthTable> outputs;   // one table per output coordinate
  std::vector<std::string> names;    // diagnostic label per source

  int source_count() const { return static_cast<int>(sources.size()); }
  int output_count() const { return static_cast<int>(outputs.size()); }
};

// Compiles a full-support measure passing the lattice condition into an
// equivalent monotone circuit over independent sources. Each coordinate
// contributes one chain of sources per distinct conditional threshold.
Realization realize(const Measure& mu);

// Exact output distribution of the circuit. source_count <= kMaxSources.
Measure pushforward(const Realization& r, int workers = 1);

struct RealizationVerdict {
  bool ok = false;
  std::string detail;
};

// Checks every output table is monotone and the pushforward equals mu.
RealizationVerdict verify_realization(const Realization& r, const Measure& mu,
                                      int workers = 1);

}  // namespace fkglab
