#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqf/rational.hpp"

namespace sqf {

// Exponent vectors ordered graded-lexicographically, largest first.
struct GrlexGreater {
  bool operator()(const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) const;
};

// Sparse polynomial over Q in a fixed number of variables.
class MultiPoly {
 public:
  using Exponent = std::vector<std::uint16_t>;
  using Terms = std::map<Exponent, Rational, GrlexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(const Rational& c, std::size_t nvars);
  static MultiPoly variable(std::size_t index, std::size_t nvars);
  static MultiPoly monomial(const Rational& c, Exponent e);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial
  bool is_one() const;

  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  int total_degree() const;
  int degree_in(std::size_t v) const;
  // highest variable index that occurs, or -1
  int main_variable() const;

  // coefficients of v^k as polynomials not involving v
  std::map<int, MultiPoly> coefficients_in(std::size_t v) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly pow(unsigned k) const;

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // exact quotient, or nullopt when o does not divide *this
  std::optional<MultiPoly> divide_exact(const MultiPoly& o) const;

  // scaled so the leading coefficient is 1
  MultiPoly monic() const;

  // values[i] must be set for every variable that occurs
  Rational evaluate(const std::vector<std::optional<Rational>>& values, std::size_t* unbound = nullptr) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

// monic gcd; gcd(0,0) = 0
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace sqf
