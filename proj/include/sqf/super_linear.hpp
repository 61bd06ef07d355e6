#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sqf/linalg.hpp"
#include "sqf/scalar.hpp"

namespace sqf {

enum class Parity : std::uint8_t { kEven = 0, kOdd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(int k) { return (k & 1) ? Parity::kOdd : Parity::kEven; }
inline Parity operator+(Parity a, Parity b) { return parity_of(bit(a) + bit(b)); }
inline Parity flip(Parity p) { return parity_of(bit(p) + 1); }
// (-1)^k
inline int sgn_pow(int k) { return (k & 1) ? -1 : 1; }

struct BasisElement {
  std::string label;
  Parity parity;
};

struct SuperSpace {
  std::string name;
  std::vector<BasisElement> basis;

  std::size_t dim() const { return basis.size(); }
  Parity parity(std::size_t i) const { return basis[i].parity; }
  std::pair<int, int> sdim() const;
  std::vector<Parity> parities() const;
  // labels unique
  bool valid() const;
};

// e1..em even, then odd
SuperSpace standard_space(int m, int n, const std::string& name = "g");
SuperSpace make_space(const std::string& name, const std::vector<std::pair<std::string, Parity>>& basis);

SuperSpace parity_shift(const SuperSpace& v);

using Vec = std::vector<Scalar>;

Vec unit_vector(std::size_t i, std::size_t d);
Vec zero_vector(std::size_t d);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
bool is_zero_vector(const Vec& v);
// homogeneous iff all nonzero coordinates share one parity; zero counts as even
bool is_homogeneous(const SuperSpace& s, const Vec& v, Parity* out = nullptr);
std::string vec_str(const SuperSpace& s, const Vec& v);

class SubSpace {
 public:
  SubSpace() = default;
  explicit SubSpace(std::size_t ambient_dim) : ambient_(ambient_dim), rows_(0, ambient_dim) {}
  static SubSpace span(std::size_t ambient_dim, const std::vector<Vec>& gens);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.rows; }
  const ScalarMatrix& rows() const { return rows_; }
  std::vector<Vec> basis() const;
  bool contains(const Vec& v) const;
  bool operator==(const SubSpace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

 private:
  std::size_t ambient_ = 0;
  ScalarMatrix rows_;
};

struct LinearMap {
  ScalarMatrix matrix;  // codomain-dim x domain-dim
  Parity parity = Parity::kEven;

  // column-wise parity check
  bool respects_parity(const SuperSpace& domain, const SuperSpace& codomain) const;
};

// Gram convention: gram(i,j) = (-1)^{|w||v_i|} w(v_i, v_j).
struct BilForm {
  Parity parity = Parity::kEven;
  ScalarMatrix gram;
};

struct WedgeTerm {
  Scalar coeff;
  std::size_t i, j;  // 0-based
};

ScalarMatrix form_values(const SuperSpace& s, const BilForm& w);
BilForm form_from_values(const SuperSpace& s, Parity parity, const ScalarMatrix& values);
bool is_homogeneous_form(const SuperSpace& s, const BilForm& w);

// sum of coeff * e_i^* wedge e_j^*, with a^b = a(x)b - (-1)^{|a||b|} b(x)a
BilForm wedge_form(const std::vector<WedgeTerm>& terms, const SuperSpace& s, Parity parity);
// value matrix of the same sum without the parity check
ScalarMatrix wedge_values(const std::vector<WedgeTerm>& terms, const SuperSpace& s);

BilForm upsetting(const SuperSpace& s, const BilForm& w);

enum class Symmetry { kSymmetric, kAntiSymmetric, kNeither };
// the zero form reports kAntiSymmetric
Symmetry symmetry_class(const SuperSpace& s, const BilForm& w);
bool is_antisymmetric_values(const SuperSpace& s, const ScalarMatrix& values);

Scalar eval_form(const SuperSpace& s, const BilForm& w, const Vec& x, const Vec& y);
Scalar eval_values(const ScalarMatrix& values, const Vec& x, const Vec& y);

struct NondegeneracyReport {
  bool nondegenerate = false;  // det not identically zero
  Scalar det;
  std::vector<std::pair<Assignment, Rational>> sample_dets;
  bool samples_ok = true;  // det nonzero at every sample
};
NondegeneracyReport is_nondegenerate(const BilForm& w, const std::vector<Assignment>& samples = {});

// true when the superdimension proposition holds; PreconditionViolated for a degenerate form
bool check_superdim_constraints(const SuperSpace& s, const BilForm& w);

SubSpace orthogonal_complement(const SubSpace& sub, const ScalarMatrix& values);

}  // namespace sqf
