#include "cb/word.hpp"

#include <algorithm>

namespace cb {

namespace {
constexpr char kDigits[] = "0123456789abcdef";

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return 10 + (c - 'a');
  return -1;
}
}  // namespace

Word::Word(std::vector<std::uint8_t> symbols, int q) : sym_(std::move(symbols)), q_(q) {
  if (q < 2 || q > 16) throw DomainError("Word: alphabet size must be in [2,16]");
  for (auto s : sym_)
    if (s >= q) throw DomainError("Word: symbol out of alphabet");
}

Word Word::from_rank(std::uint64_t rank, int q, int n) {
  std::vector<std::uint8_t> sym(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    sym[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rank % static_cast<std::uint64_t>(q));
    rank /= static_cast<std::uint64_t>(q);
  }
  return Word(std::move(sym), q);
}

Word Word::from_support(const std::vector<int>& support, int n) {
  std::vector<std::uint8_t> sym(static_cast<std::size_t>(n), 0);
  for (int p : support) {
    if (p < 0 || p >= n) throw DomainError("Word: support position out of range");
    sym[static_cast<std::size_t>(p)] = 1;
  }
  return Word(std::move(sym), 2);
}

int Word::weight() const {
  int w = 0;
  for (auto s : sym_) w += (s != 0);
  return w;
}

std::vector<int> Word::support() const {
  std::vector<int> out;
  for (int i = 0; i < length(); ++i)
    if (sym_[static_cast<std::size_t>(i)] != 0) out.push_back(i);
  return out;
}

Word Word::translated(const Word& a, const Word& b) const {
  if (a.length() != length() || b.length() != length())
    throw DomainError("Word: translation length mismatch");
  std::vector<std::uint8_t> sym(sym_.size());
  for (std::size_t i = 0; i < sym_.size(); ++i) {
    int v = (sym_[i] + a.sym_[i] + q_ - b.sym_[i]) % q_;
    sym[i] = static_cast<std::uint8_t>(v);
  }
  return Word(std::move(sym), q_);
}

Word Word::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != length()) throw DomainError("Word: permutation size mismatch");
  std::vector<std::uint8_t> sym(sym_.size());
  for (std::size_t i = 0; i < sym_.size(); ++i) sym[i] = sym_[static_cast<std::size_t>(perm[i])];
  return Word(std::move(sym), q_);
}

Word Word::prefix(int len) const {
  return Word(std::vector<std::uint8_t>(sym_.begin(), sym_.begin() + len), q_);
}

std::uint64_t Word::rank() const {
  std::uint64_t r = 0;
  for (auto s : sym_) r = r * static_cast<std::uint64_t>(q_) + s;
  return r;
}

std::string Word::str() const {
  std::string out;
  out.reserve(sym_.size());
  for (auto s : sym_) out.push_back(kDigits[s]);
  return out;
}

Word Word::parse(const std::string& text, int q) {
  std::vector<std::uint8_t> sym;
  sym.reserve(text.size());
  for (char c : text) {
    int v = digit_value(c);
    if (v < 0 || v >= q) throw DomainError("Word: bad symbol '" + std::string(1, c) + "'");
    sym.push_back(static_cast<std::uint8_t>(v));
  }
  return Word(std::move(sym), q);
}

int hamming_distance(const Word& a, const Word& b) {
  if (a.length() != b.length()) throw DomainError("hamming_distance: length mismatch");
  int d = 0;
  for (int i = 0; i < a.length(); ++i) d += (a.symbol(i) != b.symbol(i));
  return d;
}

std::vector<Word> all_words(int q, int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(q);
  std::vector<Word> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(Word::from_rank(r, q, n));
  return out;
}

std::vector<Word> all_weight_words(int n, int w) {
  std::vector<Word> out;
  std::vector<std::uint8_t> sym(static_cast<std::size_t>(n), 0);
  std::fill(sym.end() - w, sym.end(), std::uint8_t{1});
  // next_permutation over the symbol vector walks binary strings of a
  // fixed weight in lexicographic order.
  do {
    out.emplace_back(sym, 2);
  } while (std::next_permutation(sym.begin(), sym.end()));
  return out;
}

}  // namespace cb
