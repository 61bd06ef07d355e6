#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqf/super_linear.hpp"

namespace sqf {

// c(i,j,k): [e_i, e_j] = sum_k c(i,j,k) e_k
struct Tensor3 {
  std::size_t d = 0;
  std::vector<Scalar> v;

  Tensor3() = default;
  explicit Tensor3(std::size_t n) : d(n), v(n * n * n) {}
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return v[(i * d + j) * d + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return v[(i * d + j) * d + k]; }
  bool operator==(const Tensor3& o) const { return d == o.d && v == o.v; }
  Tensor3 map(const std::function<Scalar(const Scalar&)>& f) const;
};

// bilinear extension of a structure tensor
Vec apply_tensor(const Tensor3& c, const Vec& x, const Vec& y);

struct LieSuperStructure {
  SuperSpace space;
  Tensor3 c;
};

struct BracketSpec {
  std::size_t i, j;  // 0-based
  Vec rhs;
};

// fills [e_j,e_i] = -(-1)^{|i||j|}[e_i,e_j] for every listed pair
LieSuperStructure make_lie(const SuperSpace& s, const std::vector<BracketSpec>& brackets);

Vec bracket(const LieSuperStructure& l, const Vec& x, const Vec& y);

struct TripleResidual {
  std::size_t i, j, k;
  Vec value;
};

struct AxiomReport {
  bool ok = true;
  std::vector<TripleResidual> failures;  // capped
  std::string detail;
};

AxiomReport check_anticommutativity(const LieSuperStructure& l);
AxiomReport check_jacobi(const LieSuperStructure& l);

struct ClosednessReport {
  bool closed = true;
  std::size_t i = 0, j = 0, k = 0;
  Scalar residual;
};
ClosednessReport is_closed(const LieSuperStructure& l, const ScalarMatrix& values);

struct CocycleSpace {
  Parity parity;
  std::vector<ScalarMatrix> basis;  // value matrices
};

// ParametricUnsupported unless every structure constant is rational
CocycleSpace closed_form_space(const LieSuperStructure& l, Parity parity);

enum class Verdict { kEven, kOdd, kBoth, kNH, kNone };
std::string verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(const std::string& s);

struct QFClassification {
  Verdict verdict = Verdict::kNone;
  std::size_t dim_even = 0, dim_odd = 0;
  bool even_generic_nondegenerate = false;
  bool odd_generic_nondegenerate = false;
  bool nh_generic_nondegenerate = false;
};

// generic Gram determinant of the closed-form space, tested for identical vanishing
QFClassification quasi_frobenius_classify(const LieSuperStructure& l);
bool generic_determinant_vanishes(const std::vector<ScalarMatrix>& basis);

bool is_ideal(const LieSuperStructure& l, const SubSpace& s);
bool is_lagrangian_ideal(const LieSuperStructure& l, const SubSpace& s, const ScalarMatrix& values);

// f with w(x,y) = f([x,y]), as coordinates on the dual basis
std::optional<Vec> is_exact(const LieSuperStructure& l, const ScalarMatrix& values);

LieSuperStructure substitute(const LieSuperStructure& l, const Assignment& at);
LieSuperStructure substitute(const LieSuperStructure& l, const std::map<std::size_t, Scalar>& subs);

}  // namespace sqf
