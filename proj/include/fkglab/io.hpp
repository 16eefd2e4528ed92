#pragma once

#include <string>

#include "fkglab/measure.hpp"
#include "fkglab/partition.hpp"
#include "fkglab/percolation.hpp"
#include "fkglab/realization.hpp"

namespace fkglab {

// Measures: {"n": 3, "weights": {"110": "1/6", ...}}. Keys are point
// strings, leftmost character is coordinate 1; omitted points have weight 0.
// Writers emit lowest-terms rationals with keys sorted, so save/load/save
// round-trips are byte identical.
std::string measure_to_json(const Measure& mu);
Measure measure_from_json(const std::string& text);

// Partitions: {"n": 3, "k": 3, "A": [...], "B": [...], "C": [[...], ...]}
// with every point listed exactly once. Loading validates the partition.
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

// Realizations: {"m": 3, "sources": [...], "outputs": [{"table": "0101..."}],
// "names": [...]}. A table string has length 2^m and character a (0-based,
// leftmost first) gives the output under source assignment a.
std::string realization_to_json(const Realization& r);
Realization realization_from_json(const std::string& text);

// Graphs: first line "vertex_count edge_count", then one "u v p/q" line per
// edge with 0-based endpoints.
std::string graph_to_text(const EdgeGraph& g);
EdgeGraph graph_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Measure load_measure(const std::string& path);
void save_measure(const Measure& mu, const std::string& path);
Partition load_partition(const std::string& path);
void save_partition(const Partition& p, const std::string& path);
Realization load_realization(const std::string& path);
void save_realization(const Realization& r, const std::string& path);
EdgeGraph load_graph(const std::string& path);

}  // namespace fkglab
