#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqf/lie_super.hpp"

namespace sqf {

// m(i,j,k): e_i . e_j = sum_k m(i,j,k) e_k
struct ProductTable {
  SuperSpace space;
  Tensor3 m;
};

// absent pairs are zero products; nothing is mirrored
ProductTable make_product(const SuperSpace& s, const std::vector<BracketSpec>& products);
bool is_even_product(const ProductTable& p);

Vec product(const ProductTable& p, const Vec& x, const Vec& y);
// (x,y,z) = (x.y).z - x.(y.z)
Vec associator(const ProductTable& p, const Vec& x, const Vec& y, const Vec& z);

// N(x,y,z) = (z.x).y - (-1)^{|x||y|}(z.y).x on basis vectors
Vec n_functional(const ProductTable& p, std::size_t x, std::size_t y, std::size_t z);
// T(x,y,z) = (x,y,z) - (-1)^{|x||y|}(y,x,z) on basis vectors
Vec t_functional(const ProductTable& p, std::size_t x, std::size_t y, std::size_t z);

struct LawReport {
  bool ok = true;
  std::vector<TripleResidual> failures;  // capped
};

LawReport is_left_symmetric(const ProductTable& p);

struct NovikovReport {
  bool ok = false;  // lssa and equal-parity right law
  bool lssa = true;
  bool equal_parity = true;
  bool mixed_parity = true;
  std::vector<TripleResidual> failures;
};
NovikovReport is_novikov(const ProductTable& p);

struct BNReport {
  bool ok = true;
  bool axiom1 = true;  // left symmetry and commutativity on eee, eeo, eoe, oee
  bool axiom2 = true;  // odd commutativity
  bool axiom3 = true;  // compatibility conditions
  std::vector<std::string> failures;
};
BNReport is_balinsky_novikov(const ProductTable& p);

// x.y - (-1)^{|x||y|} y.x
LieSuperStructure induced_bracket(const ProductTable& p);
// x.y - y.x on even pairs, x.y - 1/2 y.x for x even and y odd, x.y on odd pairs
LieSuperStructure bn_induced_bracket(const ProductTable& p);

struct CompatibilityReport {
  bool ok = true;
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;
};
CompatibilityReport compare_brackets(const LieSuperStructure& got, const LieSuperStructure& want);

// affine plus quadratic part over numbered unknowns
struct QuadExpr {
  Rational c;
  std::map<int, Rational> lin;
  std::map<std::pair<int, int>, Rational> quad;

  QuadExpr() = default;
  explicit QuadExpr(const Rational& r) : c(r) {}
  static QuadExpr var(int v);

  bool is_zero() const { return is_sqf_zero(c) && lin.empty() && quad.empty(); }
  bool is_affine() const { return quad.empty(); }
  bool is_constant() const { return lin.empty() && quad.empty(); }
  std::vector<int> variables() const;

  QuadExpr& operator+=(const QuadExpr& o);
  QuadExpr& operator-=(const QuadExpr& o);
  QuadExpr& operator*=(const Rational& r);
  friend QuadExpr operator+(QuadExpr a, const QuadExpr& b) { return a += b; }
  friend QuadExpr operator-(QuadExpr a, const QuadExpr& b) { return a -= b; }
  friend QuadExpr operator*(QuadExpr a, const Rational& r) { return a *= r; }
  // NonAffineExpression when the product exceeds degree two
  friend QuadExpr operator*(const QuadExpr& a, const QuadExpr& b);
  bool operator==(const QuadExpr& o) const { return c == o.c && lin == o.lin && quad == o.quad; }

  std::string str(const std::vector<std::string>& names) const;

 private:
  static bool is_sqf_zero(const Rational& r) { return sgn(r) == 0; }
  void prune();
};

// e_i . e_j = sum_k l^k_ij e_k with one unknown per parity-allowed triple
struct UnknownProduct {
  SuperSpace space;
  std::vector<std::vector<std::vector<QuadExpr>>> m;  // [i][j][k]
  std::vector<std::string> names;                     // "l3_14" = coefficient of e3 in e1.e4

  explicit UnknownProduct(const SuperSpace& s);
  int index(std::size_t k, std::size_t i, std::size_t j) const;  // 1-based, -1 if forbidden by parity
};

using QVec = std::vector<QuadExpr>;
QVec n_functional(const UnknownProduct& u, std::size_t x, std::size_t y, std::size_t z);
QVec t_functional(const UnknownProduct& u, std::size_t x, std::size_t y, std::size_t z);

// linear constraints kept in reduced form: pivot unknown = affine in free unknowns
class AffineStore {
 public:
  explicit AffineStore(std::size_t nvars) : nvars_(nvars) {}
  QuadExpr reduce(const QuadExpr& e) const;
  // false when the equation contradicts the store; NonAffineExpression if not affine after reduction
  bool add(const QuadExpr& e);
  bool implies(const QuadExpr& e) const { return reduce(e).is_zero(); }
  bool contradictory() const { return contradiction_; }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t nvars_;
  std::map<int, QuadExpr> pivots_;
  bool contradiction_ = false;
};

enum class StepKind { kImpose, kBranch, kClaim };

struct ObstructionStep {
  StepKind kind = StepKind::kImpose;
  char functional = 'N';  // 'N' or 'T'
  std::size_t x = 0, y = 0, z = 0;  // 1-based basis indices
  bool displayed = true;            // false for deductions added to close a gap
  std::vector<std::string> claims;  // each "lhs=rhs", affine in the unknowns
  // branch: the functional has a component univariate in var whose roots are exactly roots
  std::string var;
  std::vector<Rational> roots;
  Rational keep;
  std::vector<ObstructionStep> closing;  // run on every other root, must end in a contradiction
};

struct StepOutcome {
  std::string description;
  bool displayed = true;
  std::vector<std::string> equations;
};

struct ObstructionReport {
  std::string entry_id;
  bool ok = false;
  std::vector<StepOutcome> steps;
  std::vector<std::string> displayed_constraints;  // verified consequences of the compatibility block
  std::vector<QuadExpr> terminal;                  // N(e3,e4,e4)
  Rational terminal_coefficient;                   // of e3
};

// scripted elimination for D10_0_1 and D10_0_2; UnknownCertificate otherwise
ObstructionReport novikov_obstruction_replay(const std::string& entry_id, const LieSuperStructure& l);

// parses "lhs=rhs" with lhs, rhs affine in names and rationals
QuadExpr parse_affine(const std::string& s, const UnknownProduct& u);

}  // namespace sqf
