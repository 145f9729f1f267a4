#ifndef CB_CONSTRUCTIONS_HPP
#define CB_CONSTRUCTIONS_HPP

#include <cstddef>
#include <vector>

#include "cb/graph.hpp"
#include "cb/params.hpp"
#include "cb/word.hpp"

namespace cb {

struct BuildOptions {
  std::size_t max_vertices = 4096;
  Exec exec = Exec::parallel;
};

// H_q(n,d): all q-ary words of length n, u ~ v iff d(u,v) >= d.
// Vertices in lexicographic label order.
Graph build_hamming_graph(int q, int n, int d, const BuildOptions& opts = {});

// The connection set {s : wt(s) >= d} of Z_q^n that generates H_q(n,d)
// as a Cayley graph, and the graph built from it via u ~ v iff
// (u - v) mod q lies in the set. Used to cross-check the distance
// builder.
std::vector<Word> hamming_connection_set(int q, int n, int d);
Graph build_hamming_graph_cayley(int q, int n, int d, const BuildOptions& opts = {});

// K(n,2*delta,w): w-subsets of [n] as binary words, P ~ Q iff the
// intersection |P n Q| <= w - delta. Equivalent to d(p,q) >= d on the
// label words.
Graph build_constant_weight_graph(int n, int d, int w, const BuildOptions& opts = {});

// Words of length n1+n2, weight w1+w2, with exactly (bounded: at most)
// w1 ones among the first n1 coordinates; u ~ v iff d(u,v) >= d.
Graph build_doubly_graph(int w1, int n1, int w2, int n2, int d, bool bounded,
                         const BuildOptions& opts = {});

Graph build_graph(const ParamKey& params, const BuildOptions& opts = {});

// True iff the vertex map is a bijection that preserves adjacency and
// non-adjacency (an automorphism witness check).
bool verify_vertex_map_automorphism(const Graph& g, const std::vector<std::size_t>& map);

// Checks that x -> x + v - u (coordinatewise mod q) is an automorphism
// of H_q(n,d) sending u to v. Holds for every valid input; the check is
// exhaustive over all vertex pairs.
bool verify_translation_automorphism(int q, int n, int d, const Word& u, const Word& v,
                                     const BuildOptions& opts = {});

// For a constant-weight graph: builds the coordinate permutation taking
// label(u) onto label(v) (supports to supports, complements to
// complements) and verifies it acts as an automorphism.
bool verify_subset_transitivity(const Graph& g, std::size_t u, std::size_t v);

struct HomWitness {
  const Graph* source = nullptr;
  const Graph* target = nullptr;
  std::vector<std::size_t> map;
};

// True iff every source edge maps to a target edge.
bool verify_homomorphism(const HomWitness& w);

// Vertex map of labelled graphs matching each source label to the
// vertex with the same label in the super graph.
std::vector<std::size_t> inclusion_map(const Graph& sub, const Graph& super);

// Vertex map sending each word to its first keep_prefix symbols,
// looked up in the target graph's labels.
std::vector<std::size_t> prefix_deletion_map(const Graph& from, const Graph& to, int keep_prefix);

}  // namespace cb

#endif
