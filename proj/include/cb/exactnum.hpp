#ifndef CB_EXACTNUM_HPP
#define CB_EXACTNUM_HPP

#include <gmpxx.h>

#include <string>

#include "cb/errors.hpp"

namespace cb {

// Exact signed integer of arbitrary magnitude. All combinatorial
// quantities in this project (q^n, binomials, bound numerators) are
// carried as Int; nothing is allowed to overflow silently.
using Int = mpz_class;

Int pow_int(const Int& base, unsigned long exp);
Int pow_int(long base, unsigned long exp);

// C(n, k). Returns 0 when k < 0 or k > n.
Int binomial(unsigned long n, long k);

// floor(num / den); den must be positive.
Int floor_div(const Int& num, const Int& den);

std::string to_decimal(const Int& v);

// Exact rational, always kept in lowest terms with a positive
// denominator. Division by an exact zero throws DomainError.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(const Int& value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long value) : v_(value) {}        // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  const Int num() const { return Int(v_.get_num()); }
  const Int den() const { return Int(v_.get_den()); }

  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const;

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  // Exact floor.
  Int floor() const;

  bool is_integer() const { return v_.get_den() == 1; }

  // "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  // Conversion used only at the boundary to the floating-point theta
  // module; throws DomainError when the value does not fit a double.
  double to_double_checked() const;

 private:
  explicit Rat(const mpq_class& v) : v_(v) {}
  mpq_class v_;
};

}  // namespace cb

#endif
