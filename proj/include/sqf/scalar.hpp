#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqf/multipoly.hpp"
#include "sqf/rational.hpp"

namespace sqf {

inline constexpr std::size_t kNumParams = 7;
const std::array<std::string, kNumParams>& param_names();
// index into param_names(), or -1
int param_index(std::string_view name);

using Assignment = std::map<std::string, Rational>;

// Element of Q(p,q,lambda,gamma,mu,nu,delta), kept as num/den with gcd(num,den)=1 and den monic.
class Scalar {
 public:
  Scalar() : num_(kNumParams), den_(MultiPoly::constant(1, kNumParams)) {}
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r);               // NOLINT(google-explicit-constructor)
  Scalar(MultiPoly num, MultiPoly den);

  static Scalar param(std::string_view name);
  static Scalar param(std::size_t index);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational to_rational() const;  // PreconditionViolated unless is_rational()
  bool is_polynomial() const { return den_.is_one(); }
  // parameters that occur, as a bitmask over param_names()
  unsigned occurring() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar pow(int k) const;

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Rational evaluate(const Assignment& at) const;
  // replaces the given parameters; others stay symbolic
  Scalar substitute(const std::map<std::size_t, Scalar>& subs) const;
  Scalar substitute(const Assignment& at) const;

  std::string str() const;

 private:
  void canonicalize();
  MultiPoly num_, den_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_identically_zero(const Scalar& s) { return s.is_zero(); }

enum class ArithOp { kAdd, kSub, kMul, kDiv };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
Rational evaluate(const Scalar& s, const Assignment& at);

// Grammar: rationals, parameter names, + - * / ^int, parentheses.
Scalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace sqf
