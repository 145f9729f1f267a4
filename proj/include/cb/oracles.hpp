#ifndef CB_ORACLES_HPP
#define CB_ORACLES_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cb/exactnum.hpp"
#include "cb/graph.hpp"
#include "cb/params.hpp"

namespace cb::oracles {

struct SearchOptions {
  std::size_t max_vertices = 1024;
  double timeout_seconds = 300.0;
};

// Exact search outcome. For clique / independent-set searches the
// witness lists the vertices of an optimal set; for colorings it holds
// one color per vertex (values 0..chi-1). Witnesses are re-verified
// against the adjacency before being returned.
struct SearchResult {
  std::size_t value = 0;
  std::vector<std::size_t> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
};

bool is_clique(const Graph& g, const std::vector<std::size_t>& vs);
bool is_independent_set(const Graph& g, const std::vector<std::size_t>& vs);
bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors);

// Exact maximum clique by branch and bound with greedy-coloring upper
// bounds over bitset candidate sets; vertices pre-ordered by descending
// degree. Deterministic: identical input yields an identical witness.
SearchResult max_clique(const Graph& g, const SearchOptions& opts = {});

// alpha(g) as max_clique on the complement; the witness is re-verified
// as an independent set of g.
SearchResult max_independent_set(const Graph& g, const SearchOptions& opts = {});

struct ChromaticOptions {
  SearchOptions search;
  // Unconditional exact search is limited to this many vertices.
  std::size_t exact_cap = 64;
  // A caller holding a proper coloring and a matching lower bound may
  // pass both; when lower == colors used the value is certified without
  // search, and larger graphs are accepted.
  std::optional<std::size_t> lower_certificate;
  std::optional<std::vector<std::size_t>> coloring_certificate;
};

// Exact chromatic number (iterated k-colorability, saturation-guided
// backtracking seeded with a maximum clique).
SearchResult chromatic_number(const Graph& g, const ChromaticOptions& opts = {});

enum class ExtremalKind { N, M, T, Tprime };

// Ground truth for the extremal families by exhaustive search on the
// corresponding graph:
//   N {q,n,t}          max q-ary words of length n pairwise agreeing in
//                      at least t positions         = alpha(H_q(n, n-t+1))
//   M {n,w,t}          max w-subsets of [n] pairwise intersecting in at
//                      least t elements             = alpha(K(n, 2(w-t+1), w))
//   T {w1,n1,w2,n2,d}  doubly-constant-weight code  = omega of the T graph
//   Tprime             same with at-most-w1 first block
SearchResult exhaustive_extremal_family(ExtremalKind kind, const std::vector<int>& params,
                                        const SearchOptions& opts = {});

// omega of the distance graph for any code family key.
SearchResult exact_code_size(const ParamKey& params, const SearchOptions& opts = {});

}  // namespace cb::oracles

#endif
