#ifndef CB_PARAMS_HPP
#define CB_PARAMS_HPP

#include <compare>
#include <string>
#include <variant>

#include "cb/errors.hpp"

namespace cb {

// A_q(n,d): q-ary codes of length n, minimum distance d.
struct UnrestrictedParams {
  int q = 2;
  int n = 1;
  int d = 1;
  auto operator<=>(const UnrestrictedParams&) const = default;
};

// A(n,d,w): binary constant-weight codes; d = 2*delta is even.
struct ConstantWeightParams {
  int n = 1;
  int d = 2;
  int w = 0;
  auto operator<=>(const ConstantWeightParams&) const = default;
};

// T / T': binary codes of length n1+n2 and weight w1+w2 whose first n1
// coordinates carry exactly (bounded: at most) w1 ones.
struct DoublyParams {
  int w1 = 0;
  int n1 = 1;
  int w2 = 0;
  int n2 = 1;
  int d = 0;
  bool bounded = false;  // false: T (exact split); true: T' (at most w1)
  auto operator<=>(const DoublyParams&) const = default;
};

class ParamKey {
 public:
  ParamKey() : v_(UnrestrictedParams{}) {}
  ParamKey(UnrestrictedParams p);    // NOLINT(google-explicit-constructor)
  ParamKey(ConstantWeightParams p);  // NOLINT(google-explicit-constructor)
  ParamKey(DoublyParams p);          // NOLINT(google-explicit-constructor)

  bool is_unrestricted() const { return std::holds_alternative<UnrestrictedParams>(v_); }
  bool is_constant_weight() const { return std::holds_alternative<ConstantWeightParams>(v_); }
  bool is_doubly() const { return std::holds_alternative<DoublyParams>(v_); }

  const UnrestrictedParams& unrestricted() const;
  const ConstantWeightParams& constant_weight() const;
  const DoublyParams& doubly() const;

  // "code", "constant_weight", "doubly_constant" or "doubly_bounded".
  std::string family() const;

  // e.g. "A_2(8,4)", "A(8,4,3)", "T(1,2;1,2;4)", "T'(...)".
  std::string str() const;

  auto operator<=>(const ParamKey&) const = default;

 private:
  std::variant<UnrestrictedParams, ConstantWeightParams, DoublyParams> v_;
};

// Validated constructors: reject parameters outside the family domain.
ParamKey make_unrestricted(int q, int n, int d);
ParamKey make_constant_weight(int n, int d, int w);
ParamKey make_doubly(int w1, int n1, int w2, int n2, int d, bool bounded);

// Constant-weight distances are even; an odd requested distance is
// equivalent to the next even one.
ParamKey make_constant_weight_normalized(int n, int d, int w);

}  // namespace cb

#endif
