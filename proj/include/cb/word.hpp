#ifndef CB_WORD_HPP
#define CB_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cb/errors.hpp"

namespace cb {

// A fixed-length sequence over the alphabet {0..q-1}. Words label the
// vertices of the distance graphs built in constructions.hpp.
class Word {
 public:
  Word() : q_(2) {}
  Word(std::vector<std::uint8_t> symbols, int q);

  // Word from its lexicographic rank among all q-ary words of length n
  // (symbol 0 is the most significant position).
  static Word from_rank(std::uint64_t rank, int q, int n);

  // Binary word with ones exactly at the given positions.
  static Word from_support(const std::vector<int>& support, int n);

  int q() const { return q_; }
  int length() const { return static_cast<int>(sym_.size()); }
  std::uint8_t symbol(int i) const { return sym_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& symbols() const { return sym_; }

  int weight() const;

  // Positions of the non-zero symbols.
  std::vector<int> support() const;

  // Coordinatewise x + a - b mod q.
  Word translated(const Word& a, const Word& b) const;

  // Coordinates permuted: result[i] = symbol(perm[i]).
  Word permuted(const std::vector<int>& perm) const;

  Word prefix(int len) const;

  std::uint64_t rank() const;

  // One hex digit per symbol (q <= 16).
  std::string str() const;
  static Word parse(const std::string& text, int q);

  bool operator==(const Word& o) const { return q_ == o.q_ && sym_ == o.sym_; }
  auto operator<=>(const Word& o) const = default;

 private:
  std::vector<std::uint8_t> sym_;
  int q_;
};

int hamming_distance(const Word& a, const Word& b);

// All q-ary words of length n in lexicographic order.
std::vector<Word> all_words(int q, int n);

// All binary words of length n and weight w, lexicographic order.
std::vector<Word> all_weight_words(int n, int w);

}  // namespace cb

#endif
