#ifndef CB_GRAPH_HPP
#define CB_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cb/word.hpp"

namespace cb {

// Execution lane for the data-parallel kernels. Every parallel kernel
// has a serial twin producing bit-identical output; tests compare them
// and tools/bench times them.
enum class Exec { serial, parallel };

// Immutable undirected graph on dense bitset adjacency rows, with
// optional per-vertex word labels. No self-loops.
class Graph {
 public:
  Graph() = default;

  // Adjacency from a symmetric predicate over vertex indices. The
  // predicate is evaluated once per unordered pair.
  static Graph build(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adjacent,
                     std::vector<Word> labels = {}, Exec exec = Exec::parallel);

  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          std::vector<Word> labels = {});

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const;

  bool adjacent(std::size_t u, std::size_t v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  std::span<const std::uint64_t> row(std::size_t u) const {
    return {adj_.data() + u * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  std::size_t degree(std::size_t u) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Word>& labels() const { return labels_; }
  const Word& label(std::size_t u) const { return labels_[u]; }

  // Index of the vertex carrying this label; labels are kept in
  // lexicographic order, so this is a binary search.
  std::optional<std::size_t> index_of_label(const Word& w) const;

  Graph complement() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;  // n_ rows of words_ 64-bit blocks
  std::vector<Word> labels_;
};

// DIMACS undirected format: "p edge V E" header, 1-based "e u v" lines.
void write_dimacs(const Graph& g, const std::string& path);
Graph read_dimacs(const std::string& path);

// Label sidecar: one label per line, hex digit per symbol.
void write_labels(const Graph& g, const std::string& path);
std::vector<Word> read_labels(const std::string& path, int q);

}  // namespace cb

#endif
