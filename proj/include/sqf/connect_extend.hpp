#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqf/lie_super.hpp"

namespace sqf {

// Gamma(i,j,k): nabla_{e_i} e_j = sum_k Gamma(i,j,k) e_k
struct Connection {
  LieSuperStructure algebra;
  Tensor3 gamma;
};

Vec nabla(const Connection& c, const Vec& x, const Vec& y);
bool is_even(const Connection& c);

// nabla_x y - (-1)^{|x||y|} nabla_y x - [x,y], bilinear over basis pairs
Vec torsion(const Connection& c, const Vec& x, const Vec& y);
// nabla_x nabla_y z - (-1)^{|x||y|} nabla_y nabla_x z - nabla_{[x,y]} z
Vec curvature(const Connection& c, const Vec& x, const Vec& y, const Vec& z);

struct ConnectionReport {
  bool ok = true;
  std::vector<std::size_t> witness;  // failing basis indices
  Vec residual;
};
ConnectionReport is_torsion_free(const Connection& c);
ConnectionReport is_flat(const Connection& c);

struct Representation {
  SuperSpace module;
  std::vector<ScalarMatrix> action;  // one matrix per algebra basis vector
};

// rho(u) xi = -(-1)^{|u||xi|} xi o nabla_u on the dual basis
Representation dual_rep(const Connection& c);
// chi(u) = (-1)^{|u|} Pi o rho(u) o Pi on Pi(h^*)
Representation pi_dual_rep(const Connection& c);

struct RepresentationReport {
  bool ok = true;
  std::size_t i = 0, j = 0;
  bool parity_ok = true;
};
RepresentationReport check_representation(const Representation& r, const LieSuperStructure& l);

enum class ExtensionKind { kTStar, kPiTStar };
std::string extension_kind_name(ExtensionKind k);

// alpha(e_i,e_j) as module coordinates
struct ModuleCocycle {
  ExtensionKind target = ExtensionKind::kTStar;
  std::vector<std::vector<Vec>> values;  // [i][j]
};

struct CocycleTerm {
  Vec target;  // module coordinates
  Scalar coeff;
  std::size_t i, j;  // coeff * e_i^* wedge e_j^*
};
ModuleCocycle make_cocycle(ExtensionKind kind, const SuperSpace& base, const std::vector<CocycleTerm>& terms);

struct CocycleReport {
  bool cocycle_law = true;  // Z^2(h, module)
  bool cyclic = true;       // scalar cyclic condition
  std::vector<std::size_t> witness;
};
CocycleReport cocycle_condition(const ModuleCocycle& a, const LieSuperStructure& l, const Connection& c);

struct Extension {
  ExtensionKind kind;
  LieSuperStructure g;
  BilForm form;
  ScalarMatrix values;
  SubSpace ideal;       // dual summand
  SubSpace complement;  // base summand
  std::size_t n = 0;    // base dimension
};

Extension t_star_extend(const LieSuperStructure& h, const Connection& c, const ModuleCocycle& alpha);
Extension pi_t_star_extend(const LieSuperStructure& h, const Connection& c, const ModuleCocycle& beta);
Extension extend(ExtensionKind kind, const LieSuperStructure& h, const Connection& c, const ModuleCocycle& a);

struct QuotientResult {
  LieSuperStructure h;
  Connection nabla;
};

// lifts span the complementary subspace N; the quotient basis is their image
QuotientResult quotient_flat_connection(const LieSuperStructure& g, const ScalarMatrix& values, const SubSpace& a,
                                        const std::vector<Vec>& lifts);

struct IsoReport {
  bool ok = true;
  bool parity_ok = true;
  bool bracket_ok = true;
  bool form_ok = true;
  Scalar ratio;  // values2(Fx,Fy) = ratio * values1(x,y)
  std::size_t i = 0, j = 0;
  std::string detail;
};
// f maps g1 coordinates to g2 coordinates; NotBijective when singular
IsoReport verify_iso(const LinearMap& f, const LieSuperStructure& g1, const LieSuperStructure& g2,
                     const ScalarMatrix* values1 = nullptr, const ScalarMatrix* values2 = nullptr);

}  // namespace sqf
