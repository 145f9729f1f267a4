#include "cb/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "cb/errors.hpp"
#include "cb/exactnum.hpp"

namespace cb {

namespace {

void check_cap(const Int& count, const BuildOptions& opts, const char* what) {
  if (count > Int(static_cast<unsigned long>(opts.max_vertices)))
    throw CapExceededError(std::string(what) + ": vertex count " + to_decimal(count) +
                           " exceeds cap " + std::to_string(opts.max_vertices));
}

int intersection_size(const Word& a, const Word& b) {
  int s = 0;
  for (int i = 0; i < a.length(); ++i) s += (a.symbol(i) != 0 && b.symbol(i) != 0);
  return s;
}

}  // namespace

Graph build_hamming_graph(int q, int n, int d, const BuildOptions& opts) {
  make_unrestricted(q, n, d);  // domain validation
  check_cap(pow_int(q, static_cast<unsigned long>(n)), opts, "hamming graph");
  auto labels = all_words(q, n);
  return Graph::build(
      labels.size(),
      [&](std::size_t u, std::size_t v) { return hamming_distance(labels[u], labels[v]) >= d; },
      labels, opts.exec);
}

std::vector<Word> hamming_connection_set(int q, int n, int d) {
  std::vector<Word> out;
  for (const auto& w : all_words(q, n))
    if (w.weight() >= d) out.push_back(w);
  return out;
}

Graph build_hamming_graph_cayley(int q, int n, int d, const BuildOptions& opts) {
  make_unrestricted(q, n, d);
  check_cap(pow_int(q, static_cast<unsigned long>(n)), opts, "hamming graph");
  auto labels = all_words(q, n);
  std::vector<char> in_set(labels.size(), 0);
  for (const auto& s : hamming_connection_set(q, n, d)) in_set[s.rank()] = 1;
  const Word zero = Word::from_rank(0, q, n);
  return Graph::build(
      labels.size(),
      [&](std::size_t u, std::size_t v) {
        Word diff = labels[u].translated(zero, labels[v]);  // u - v mod q
        return in_set[diff.rank()] != 0;
      },
      labels, opts.exec);
}

Graph build_constant_weight_graph(int n, int d, int w, const BuildOptions& opts) {
  make_constant_weight(n, d, w);
  check_cap(binomial(static_cast<unsigned long>(n), w), opts, "constant-weight graph");
  const int delta = d / 2;
  auto labels = all_weight_words(n, w);
  return Graph::build(
      labels.size(),
      [&](std::size_t u, std::size_t v) {
        return intersection_size(labels[u], labels[v]) <= w - delta;
      },
      labels, opts.exec);
}

Graph build_doubly_graph(int w1, int n1, int w2, int n2, int d, bool bounded,
                         const BuildOptions& opts) {
  make_doubly(w1, n1, w2, n2, d, bounded);
  Int count(0);
  for (int i = bounded ? 0 : w1; i <= w1; ++i)
    count += binomial(static_cast<unsigned long>(n1), i) *
             binomial(static_cast<unsigned long>(n2), w1 + w2 - i);
  check_cap(count, opts, "doubly-constant graph");

  std::vector<Word> labels;
  for (int i = bounded ? 0 : w1; i <= w1; ++i) {
    int j = w1 + w2 - i;
    if (j < 0 || j > n2) continue;
    for (const auto& a : all_weight_words(n1, i))
      for (const auto& b : all_weight_words(n2, j)) {
        std::vector<std::uint8_t> sym(a.symbols());
        sym.insert(sym.end(), b.symbols().begin(), b.symbols().end());
        labels.emplace_back(std::move(sym), 2);
      }
  }
  std::sort(labels.begin(), labels.end());
  return Graph::build(
      labels.size(),
      [&](std::size_t u, std::size_t v) { return hamming_distance(labels[u], labels[v]) >= d; },
      labels, opts.exec);
}

Graph build_graph(const ParamKey& params, const BuildOptions& opts) {
  if (params.is_unrestricted()) {
    const auto& p = params.unrestricted();
    return build_hamming_graph(p.q, p.n, p.d, opts);
  }
  if (params.is_constant_weight()) {
    const auto& p = params.constant_weight();
    return build_constant_weight_graph(p.n, p.d, p.w, opts);
  }
  const auto& p = params.doubly();
  return build_doubly_graph(p.w1, p.n1, p.w2, p.n2, p.d, p.bounded, opts);
}

bool verify_vertex_map_automorphism(const Graph& g, const std::vector<std::size_t>& map) {
  const std::size_t n = g.num_vertices();
  if (map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto m : map) {
    if (m >= n || hit[m]) return false;
    hit[m] = 1;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(map[u], map[v])) return false;
  return true;
}

bool verify_translation_automorphism(int q, int n, int d, const Word& u, const Word& v,
                                     const BuildOptions& opts) {
  if (u.q() != q || v.q() != q || u.length() != n || v.length() != n)
    throw DomainError("translation witness: words do not match (q,n)");
  Graph g = build_hamming_graph(q, n, d, opts);
  std::vector<std::size_t> map(g.num_vertices());
  for (std::size_t x = 0; x < g.num_vertices(); ++x)
    map[x] = g.label(x).translated(v, u).rank();  // x + v - u
  if (map[u.rank()] != v.rank()) return false;
  return verify_vertex_map_automorphism(g, map);
}

bool verify_subset_transitivity(const Graph& g, std::size_t u, std::size_t v) {
  if (!g.has_labels()) throw DomainError("subset transitivity: graph carries no labels");
  const Word& a = g.label(u);
  const Word& b = g.label(v);
  const int n = a.length();
  // perm[i] = j means coordinate i of the image reads coordinate j of
  // the source; send support(a) onto support(b) position by position.
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  auto sa = a.support(), sb = b.support();
  if (sa.size() != sb.size()) return false;
  std::vector<int> ca, cc;
  for (int i = 0; i < n; ++i) {
    if (std::find(sa.begin(), sa.end(), i) == sa.end()) ca.push_back(i);
    if (std::find(sb.begin(), sb.end(), i) == sb.end()) cc.push_back(i);
  }
  for (std::size_t k = 0; k < sb.size(); ++k) perm[static_cast<std::size_t>(sb[k])] = sa[k];
  for (std::size_t k = 0; k < cc.size(); ++k) perm[static_cast<std::size_t>(cc[k])] = ca[k];

  std::vector<std::size_t> map(g.num_vertices());
  for (std::size_t x = 0; x < g.num_vertices(); ++x) {
    auto idx = g.index_of_label(g.label(x).permuted(perm));
    if (!idx) return false;
    map[x] = *idx;
  }
  if (map[u] != v) return false;
  return verify_vertex_map_automorphism(g, map);
}

bool verify_homomorphism(const HomWitness& w) {
  if (w.source == nullptr || w.target == nullptr)
    throw DomainError("homomorphism witness: missing graphs");
  const std::size_t n = w.source->num_vertices();
  if (w.map.size() != n) throw DomainError("homomorphism witness: map size mismatch");
  for (auto m : w.map)
    if (m >= w.target->num_vertices()) throw DomainError("homomorphism witness: index out of range");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (w.source->adjacent(u, v) && !w.target->adjacent(w.map[u], w.map[v])) return false;
  return true;
}

std::vector<std::size_t> inclusion_map(const Graph& sub, const Graph& super) {
  if (!sub.has_labels() || !super.has_labels())
    throw DomainError("inclusion map: both graphs must carry labels");
  std::vector<std::size_t> map(sub.num_vertices());
  for (std::size_t u = 0; u < sub.num_vertices(); ++u) {
    auto idx = super.index_of_label(sub.label(u));
    if (!idx) throw DomainError("inclusion map: label missing from super graph");
    map[u] = *idx;
  }
  return map;
}

std::vector<std::size_t> prefix_deletion_map(const Graph& from, const Graph& to, int keep_prefix) {
  if (!from.has_labels() || !to.has_labels())
    throw DomainError("prefix deletion map: both graphs must carry labels");
  std::vector<std::size_t> map(from.num_vertices());
  for (std::size_t u = 0; u < from.num_vertices(); ++u) {
    auto idx = to.index_of_label(from.label(u).prefix(keep_prefix));
    if (!idx) throw DomainError("prefix deletion map: prefix missing from target graph");
    map[u] = *idx;
  }
  return map;
}

}  // namespace cb
