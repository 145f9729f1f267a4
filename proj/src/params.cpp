#include "cb/params.hpp"

#include <sstream>

namespace cb {

ParamKey::ParamKey(UnrestrictedParams p) : v_(p) {}
ParamKey::ParamKey(ConstantWeightParams p) : v_(p) {}
ParamKey::ParamKey(DoublyParams p) : v_(p) {}

const UnrestrictedParams& ParamKey::unrestricted() const {
  if (!is_unrestricted()) throw DomainError("ParamKey: not an unrestricted-code key");
  return std::get<UnrestrictedParams>(v_);
}

const ConstantWeightParams& ParamKey::constant_weight() const {
  if (!is_constant_weight()) throw DomainError("ParamKey: not a constant-weight key");
  return std::get<ConstantWeightParams>(v_);
}

const DoublyParams& ParamKey::doubly() const {
  if (!is_doubly()) throw DomainError("ParamKey: not a doubly-constant key");
  return std::get<DoublyParams>(v_);
}

std::string ParamKey::family() const {
  if (is_unrestricted()) return "code";
  if (is_constant_weight()) return "constant_weight";
  return doubly().bounded ? "doubly_bounded" : "doubly_constant";
}

std::string ParamKey::str() const {
  std::ostringstream os;
  if (is_unrestricted()) {
    const auto& p = unrestricted();
    os << "A_" << p.q << "(" << p.n << "," << p.d << ")";
  } else if (is_constant_weight()) {
    const auto& p = constant_weight();
    os << "A(" << p.n << "," << p.d << "," << p.w << ")";
  } else {
    const auto& p = doubly();
    os << (p.bounded ? "T'(" : "T(") << p.w1 << "," << p.n1 << ";" << p.w2 << "," << p.n2 << ";"
       << p.d << ")";
  }
  return os.str();
}

ParamKey make_unrestricted(int q, int n, int d) {
  if (q < 2) throw DomainError("unrestricted code: q must be at least 2");
  if (n < 1 || d < 1 || d > n)
    throw DomainError("unrestricted code: need 1 <= d <= n, got " + std::to_string(d) + "," +
                      std::to_string(n));
  return UnrestrictedParams{q, n, d};
}

ParamKey make_constant_weight(int n, int d, int w) {
  if (n < 1 || w < 0 || w > n) throw DomainError("constant-weight code: need 0 <= w <= n");
  if (d < 0 || d % 2 != 0) throw DomainError("constant-weight code: distance must be even");
  return ConstantWeightParams{n, d, w};
}

ParamKey make_constant_weight_normalized(int n, int d, int w) {
  return make_constant_weight(n, d + (d % 2 != 0 ? 1 : 0), w);
}

ParamKey make_doubly(int w1, int n1, int w2, int n2, int d, bool bounded) {
  if (n1 < 1 || n2 < 1 || w1 < 0 || w1 > n1 || w2 < 0 || w2 > n2)
    throw DomainError("doubly-constant code: need 0 <= w1 <= n1 and 0 <= w2 <= n2");
  if (d < 0) throw DomainError("doubly-constant code: distance must be nonnegative");
  return DoublyParams{w1, n1, w2, n2, d, bounded};
}

}  // namespace cb
