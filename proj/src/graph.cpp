#include "cb/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cb/errors.hpp"

namespace cb {

Graph Graph::build(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adjacent,
                   std::vector<Word> labels, Exec exec) {
  if (!labels.empty() && labels.size() != n) throw DomainError("Graph: label count mismatch");
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.adj_.assign(n * g.words_, 0);
  g.labels_ = std::move(labels);
  // Each thread owns whole rows; the mirrored (v,u) bit is set in a
  // second pass so no two threads write the same word.
  const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::parallel)
  for (std::int64_t u = 0; u < ni; ++u) {
    auto* row = g.adj_.data() + static_cast<std::size_t>(u) * g.words_;
    for (std::size_t v = static_cast<std::size_t>(u) + 1; v < n; ++v)
      if (adjacent(static_cast<std::size_t>(u), v)) row[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  for (std::size_t u = 0; u < n; ++u) {
    const auto* row = g.adj_.data() + u * g.words_;
    for (std::size_t v = u + 1; v < n; ++v)
      if ((row[v >> 6] >> (v & 63)) & 1u)
        g.adj_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                        std::vector<Word> labels) {
  if (!labels.empty() && labels.size() != n) throw DomainError("Graph: label count mismatch");
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.adj_.assign(n * g.words_, 0);
  g.labels_ = std::move(labels);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw DomainError("Graph: edge endpoint out of range");
    if (u == v) throw DomainError("Graph: self-loop rejected");
    g.adj_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.adj_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  return g;
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (std::size_t u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(__builtin_popcountll(w));
  return d;
}

std::optional<std::size_t> Graph::index_of_label(const Word& w) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), w);
  if (it == labels_.end() || !(*it == w)) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Graph Graph::complement() const {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.adj_.assign(n_ * words_, 0);
  g.labels_ = labels_;
  for (std::size_t u = 0; u < n_; ++u) {
    const auto* src = adj_.data() + u * words_;
    auto* dst = g.adj_.data() + u * words_;
    for (std::size_t k = 0; k < words_; ++k) dst[k] = ~src[k];
    // clear the diagonal bit and the padding past vertex n_-1
    dst[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    const std::size_t tail = n_ & 63;
    if (tail != 0) dst[words_ - 1] &= (std::uint64_t{1} << tail) - 1;
  }
  return g;
}

void write_dimacs(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("write_dimacs: cannot open " + path);
  out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (std::size_t u = 0; u < g.num_vertices(); ++u)
    for (std::size_t v = u + 1; v < g.num_vertices(); ++v)
      if (g.adjacent(u, v)) out << "e " << (u + 1) << " " << (v + 1) << "\n";
  if (!out) throw DomainError("write_dimacs: write failed for " + path);
}

Graph read_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("read_dimacs: cannot open " + path);
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    char kind = 0;
    ls >> kind;
    if (kind == 'p') {
      std::string fmt;
      std::size_t m = 0;
      ls >> fmt >> n >> m;
      if (!ls || fmt != "edge") throw DomainError("read_dimacs: bad problem line");
      have_header = true;
    } else if (kind == 'e') {
      std::size_t u = 0, v = 0;
      ls >> u >> v;
      if (!ls || u < 1 || v < 1) throw DomainError("read_dimacs: bad edge line");
      if (!have_header) throw DomainError("read_dimacs: edge before problem line");
      if (u > n || v > n) throw DomainError("read_dimacs: endpoint exceeds vertex count");
      if (u != v) edges.emplace_back(u - 1, v - 1);
    }
  }
  if (!have_header) throw DomainError("read_dimacs: missing problem line");
  return Graph::from_edges(n, edges);
}

void write_labels(const Graph& g, const std::string& path) {
  if (!g.has_labels()) throw DomainError("write_labels: graph carries no labels");
  std::ofstream out(path);
  if (!out) throw DomainError("write_labels: cannot open " + path);
  for (const auto& w : g.labels()) out << w.str() << "\n";
}

std::vector<Word> read_labels(const std::string& path, int q) {
  std::ifstream in(path);
  if (!in) throw DomainError("read_labels: cannot open " + path);
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(Word::parse(line, q));
  return out;
}

}  // namespace cb
