#include "cb/exactnum.hpp"

#include <cmath>
#include <limits>

namespace cb {

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int pow_int(long base, unsigned long exp) { return pow_int(Int(base), exp); }

Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Int floor_div(const Int& num, const Int& den) {
  if (den <= 0) throw DomainError("floor_div: denominator must be positive");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("Rat: zero denominator");
  v_ = mpq_class(num);
  v_ /= mpq_class(den);  // mpq division keeps the canonical form
}

Rat Rat::operator/(const Rat& o) const {
  if (o.v_ == 0) throw DomainError("Rat: division by zero");
  return Rat(mpq_class(v_ / o.v_));
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

double Rat::to_double_checked() const {
  double d = v_.get_d();
  if (!std::isfinite(d)) throw DomainError("Rat: value does not fit a double");
  return d;
}

}  // namespace cb
