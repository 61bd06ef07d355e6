#include <gtest/gtest.h>

#include "sqf/connect_extend.hpp"
#include "sqf/verify.hpp"
#include "test_util.hpp"

using namespace sqf;
using namespace sqf::testing;

namespace {

const SuperSpace k20 = standard_space(2, 0);

// D6 base: abelian span{e1,e2}, nabla_{e1}e1=-e1, nabla_{e1}e2=-e2, nabla_{e2}e1=-e2, nabla_{e2}e2=e1
Connection d6_base() {
  Connection c{make_lie(k20, {}), Tensor3(2)};
  c.gamma(0, 0, 0) = Scalar(-1);
  c.gamma(0, 1, 1) = Scalar(-1);
  c.gamma(1, 0, 1) = Scalar(-1);
  c.gamma(1, 1, 0) = Scalar(1);
  return c;
}

Vec e(std::size_t i, std::size_t d) { return unit_vector(i - 1, d); }

BuiltExtension built(const std::string& id, std::size_t k = 0) {
  const auto& en = shipped().find(id);
  const auto& x = en.extensions.at(k);
  return build_extension(en, x, x.at ? *x.at : Assignment{});
}

std::vector<std::string> constructive_ids() {
  std::vector<std::string> ids;
  for (const auto& en : shipped().entries)
    if (!en.extensions.empty()) ids.push_back(en.id);
  return ids;
}

ScalarMatrix rand_even_invertible(std::mt19937& g, const SuperSpace& s) {
  std::size_t d = s.dim();
  for (;;) {
    ScalarMatrix p(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (s.parity(i) == s.parity(j)) p(i, j) = Scalar(rand_rational(g, 2));
    if (!det(p).is_zero()) return p;
  }
}

// the same algebra and connection written in the basis f_j = sum_k P(k,j) e_k
Connection transport(const Connection& c, const ScalarMatrix& p) {
  std::size_t d = c.algebra.space.dim();
  ScalarMatrix pinv = *inverse(p);
  Connection t{LieSuperStructure{c.algebra.space, Tensor3(d)}, Tensor3(d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec b = pinv.apply(bracket(c.algebra, p.col(i), p.col(j)));
      Vec n = pinv.apply(nabla(c, p.col(i), p.col(j)));
      for (std::size_t k = 0; k < d; ++k) {
        t.algebra.c(i, j, k) = b[k];
        t.gamma(i, j, k) = n[k];
      }
    }
  return t;
}

}  // namespace

TEST(Torsion, D6DisplayedValues) {
  Connection c = d6_base();
  Vec n12 = nabla(c, e(1, 2), e(2, 2)), n21 = nabla(c, e(2, 2), e(1, 2));
  EXPECT_EQ(n12, Scalar(-1) * e(2, 2));
  EXPECT_EQ(n21, Scalar(-1) * e(2, 2));
  EXPECT_TRUE(is_zero_vector(bracket(c.algebra, e(1, 2), e(2, 2))));
  EXPECT_TRUE(is_zero_vector(torsion(c, e(1, 2), e(2, 2))));
  Vec x = vec({"1", "3"});
  EXPECT_TRUE(is_zero_vector(torsion(c, x, x)));
}

TEST(Curvature, D6DisplayedValues) {
  Connection c = d6_base();
  // R(e1,e2)e1 = nabla_e1(-e2) - nabla_e2(-e1) = e2 - e2
  EXPECT_EQ(nabla(c, e(1, 2), nabla(c, e(2, 2), e(1, 2))), e(2, 2));
  EXPECT_EQ(nabla(c, e(2, 2), nabla(c, e(1, 2), e(1, 2))), e(2, 2));
  EXPECT_TRUE(is_zero_vector(curvature(c, e(1, 2), e(2, 2), e(1, 2))));
  // R(e1,e2)e2 = nabla_e1(e1) - nabla_e2(-e2) = -e1 + e1
  EXPECT_EQ(nabla(c, e(1, 2), nabla(c, e(2, 2), e(2, 2))), Scalar(-1) * e(1, 2));
  EXPECT_EQ(nabla(c, e(2, 2), nabla(c, e(1, 2), e(2, 2))), Scalar(-1) * e(1, 2));
  EXPECT_TRUE(is_zero_vector(curvature(c, e(1, 2), e(2, 2), e(2, 2))));
  Connection z{make_lie(k20, {}), Tensor3(2)};
  EXPECT_TRUE(is_zero_vector(curvature(z, e(1, 2), e(2, 2), e(1, 2))));
}

TEST(Connections, EveryCatalogConnectionIsTorsionFreeAndFlat) {
  for (const auto& id : constructive_ids()) {
    const auto& en = shipped().find(id);
    for (std::size_t k = 0; k < en.extensions.size(); ++k) {
      auto b = built(id, k);
      EXPECT_TRUE(is_even(b.nabla)) << id;
      EXPECT_TRUE(is_torsion_free(b.nabla).ok) << id;
      EXPECT_TRUE(is_flat(b.nabla).ok) << id;
    }
  }
}

TEST(Connections, D10qBaseFlatForAllQ) {
  auto b = built("D10_q");
  EXPECT_EQ(b.nabla.gamma(0, 0, 0), S("-q-1"));
  EXPECT_TRUE(is_torsion_free(b.nabla).ok);
  EXPECT_TRUE(is_flat(b.nabla).ok);
}

TEST(Connections, PerturbedGammaFails) {
  std::mt19937 g(41);
  int flagged = 0;
  for (int it = 0; it < kIterations; ++it) {
    Connection c = d6_base();
    std::uniform_int_distribution<std::size_t> ix(0, 1);
    // off-diagonal slots: nabla_{e_i}e_j - nabla_{e_j}e_i moves while [e_i,e_j] stays 0
    std::size_t i = ix(g), k = ix(g);
    Scalar bump = Scalar(rand_rational(g, 2)) + Scalar(Rational(1, 7));
    c.gamma(i, 1 - i, k) += bump;
    auto t = is_torsion_free(c);
    EXPECT_FALSE(t.ok);
    flagged += !t.ok;
  }
  EXPECT_EQ(flagged, kIterations);
}

TEST(DualRep, D6AndZero) {
  Representation r = dual_rep(d6_base());
  EXPECT_EQ(r.action[0].col(0), e(1, 2));
  EXPECT_EQ(r.action[0].col(1), e(2, 2));
  // entry (k,b) of rho(e_a) is -(-1)^{|a||b|} Gamma(a,k,b)
  Connection c = d6_base();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t b = 0; b < 2; ++b) EXPECT_EQ(r.action[a](k, b), -c.gamma(a, k, b));
  Representation z = dual_rep(Connection{make_lie(k20, {}), Tensor3(2)});
  for (const auto& m : z.action) EXPECT_TRUE(m.is_zero_matrix());
  EXPECT_TRUE(check_representation(r, c.algebra).ok);
}

TEST(DualRep, PiTwist) {
  auto b = built("D10_q");
  Representation r = dual_rep(b.nabla), chi = pi_dual_rep(b.nabla);
  EXPECT_EQ(chi.module.parities(), parity_shift(r.module).parities());
  for (std::size_t a = 0; a < 2; ++a) {
    Scalar s = b.h.space.parity(a) == Parity::kEven ? Scalar(1) : Scalar(-1);
    for (std::size_t k = 0; k < r.action[a].a.size(); ++k) EXPECT_EQ(chi.action[a].a[k], s * r.action[a].a[k]);
  }
  EXPECT_TRUE(check_representation(chi, b.h).ok);
}

TEST(DualRep, D5TwistedBracketMatchesTable) {
  auto b = built("D5");
  // identification e3 = Pi(e1*): [e1,e3] = e3 in the constructed algebra
  const auto& g = b.ext.g;
  Vec img = b.identification.matrix.col(2);
  ASSERT_EQ(img, e(3, 4));
  EXPECT_EQ(bracket(g, e(1, 4), e(3, 4)), e(3, 4));
  EXPECT_EQ(run_check(shipped().find("D5"), "extension", 3).status, Status::kPass);
}

TEST(DualRep, NonFlatFailsWithWitness) {
  // nabla_{e1}e1 = -2e1 gives R(e1,e2)e1 = e2 - 2e2
  Connection c = d6_base();
  c.gamma(0, 0, 0) = Scalar(-2);
  EXPECT_TRUE(is_torsion_free(c).ok);
  EXPECT_EQ(curvature(c, e(1, 2), e(2, 2), e(1, 2)), Scalar(-1) * e(2, 2));
  EXPECT_FALSE(is_flat(c).ok);
  auto rep = check_representation(dual_rep(c), c.algebra);
  EXPECT_FALSE(rep.ok);
  EXPECT_NE(rep.i, rep.j);
}

TEST(DualRepProperty, RandomFlatConnections) {
  std::mt19937 g(42);
  std::vector<std::string> ids = constructive_ids();
  for (int it = 0; it < kIterations; ++it) {
    Connection c;
    if (it % 2 == 0) {
      // abelian even algebra acting through polynomials in one matrix
      std::size_t d = 1 + it % 3;
      SuperSpace s = standard_space(static_cast<int>(d), 0);
      ScalarMatrix a(d, d);
      for (auto& x : a.a) x = Scalar(rand_rational(g, 2));
      ScalarMatrix a2 = a * a;
      c = Connection{make_lie(s, {}), Tensor3(d)};
      for (std::size_t i = 0; i < d; ++i) {
        Scalar u(rand_rational(g)), v(rand_rational(g)), w(rand_rational(g));
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            c.gamma(i, j, k) = (j == k ? u : Scalar()) + v * a(k, j) + w * a2(k, j);
      }
    } else {
      auto b = built(ids[static_cast<std::size_t>(it / 2) % ids.size()]);
      if (!b.nabla.gamma.v.empty() &&
          std::any_of(b.nabla.gamma.v.begin(), b.nabla.gamma.v.end(), [](const Scalar& x) { return !x.is_rational(); }))
        continue;
      c = transport(b.nabla, rand_even_invertible(g, b.h.space));
    }
    ASSERT_TRUE(is_flat(c).ok);
    EXPECT_TRUE(check_representation(dual_rep(c), c.algebra).ok);
    EXPECT_TRUE(check_representation(pi_dual_rep(c), c.algebra).ok);
  }
}

TEST(Cocycles, Examples) {
  auto zero = built("D6");
  EXPECT_TRUE(cocycle_condition(zero.cocycle, zero.h, zero.nabla).cocycle_law);
  for (const char* id : {"C1_1_A", "2A11_2A_3p"}) {
    auto b = built(id);
    bool nonzero = false;
    for (const auto& row : b.cocycle.values)
      for (const auto& v : row) nonzero = nonzero || !is_zero_vector(v);
    EXPECT_TRUE(nonzero) << id;
    auto r = cocycle_condition(b.cocycle, b.h, b.nabla);
    EXPECT_TRUE(r.cocycle_law) << id;
    EXPECT_TRUE(r.cyclic) << id;
  }
}

TEST(Cocycles, EveryCatalogCocyclePassesBothConditions) {
  for (const auto& id : constructive_ids()) {
    const auto& en = shipped().find(id);
    for (std::size_t k = 0; k < en.extensions.size(); ++k) {
      auto b = built(id, k);
      auto r = cocycle_condition(b.cocycle, b.h, b.nabla);
      EXPECT_TRUE(r.cocycle_law) << id;
      EXPECT_TRUE(r.cyclic) << id;
    }
  }
}

TEST(Cocycles, PerturbedCocycleFails) {
  auto b = built("C1_1_A");
  // alpha(x,x) gains e1*: the cyclic sum on (e1,x,x) moves by 1
  ModuleCocycle bad = b.cocycle;
  bad.values[1][1][0] += Scalar(1);
  auto r = cocycle_condition(bad, b.h, b.nabla);
  EXPECT_FALSE(r.cyclic);
}

TEST(Extend, TStarExamples) {
  for (const char* id : {"D7_pmp", "C3_A"}) EXPECT_EQ(run_check(shipped().find(id), "extension", 3).status, Status::kPass) << id;
  auto c3 = built("C3_A");
  EXPECT_EQ(c3.identification.matrix.col(2), vec({"1/2", "0", "0", "0"}));  // e1 = 2 e2*
  EXPECT_EQ(c3.ext.form.parity, Parity::kEven);
  SuperSpace empty = standard_space(1, 1);
  Connection z{make_lie(empty, {}), Tensor3(2)};
  Extension x = t_star_extend(z.algebra, z, make_cocycle(ExtensionKind::kTStar, empty, {}));
  EXPECT_TRUE(x.g.c.v == Tensor3(4).v);
  EXPECT_FALSE(det(x.values).is_zero());
  EXPECT_TRUE(is_lagrangian_ideal(x.g, x.ideal, x.values));
}

TEST(Extend, PiTStarExamples) {
  auto d6 = built("D6");
  const auto& cat = shipped().find("D6").lie();
  EXPECT_EQ(d6.ext.g.c, cat.c);  // identity identification
  EXPECT_EQ(d6.ext.form.parity, Parity::kOdd);
  auto p = built("2A11_2A_3p");
  auto iso = verify_iso(p.identification, p.ext.g, substitute(shipped().find("2A11_2A_3p").lie(), Assignment{{"p", Q("1/2")}}));
  EXPECT_TRUE(iso.ok);
  auto l = substitute(shipped().find("2A11_2A_3p").lie(), Assignment{{"p", Q("1/2")}});
  EXPECT_EQ(bracket(l, e(3, 4), e(3, 4)), e(1, 4));
  EXPECT_EQ(bracket(l, e(4, 4), e(4, 4)), e(2, 4));
  EXPECT_EQ(bracket(l, e(3, 4), e(4, 4)), vec({"1/2", "1/2", "0", "0"}));
}

TEST(Extend, PreconditionsNamed) {
  Connection bad = d6_base();
  bad.gamma(0, 0, 0) = Scalar(-2);
  try {
    pi_t_star_extend(bad.algebra, bad, make_cocycle(ExtensionKind::kPiTStar, k20, {}));
    FAIL();
  } catch (const PreconditionViolated& ex) {
    EXPECT_NE(std::string(ex.what()).find("flat"), std::string::npos) << ex.what();
  }
  Connection c = d6_base();
  EXPECT_THROW(t_star_extend(c.algebra, c, make_cocycle(ExtensionKind::kPiTStar, k20, {})), PreconditionViolated);
}

TEST(Quotient, D6RecoversConnection) {
  auto b = built("D6");
  auto q = quotient_flat_connection(b.ext.g, b.ext.values, b.ext.ideal, {e(1, 4), e(2, 4)});
  EXPECT_EQ(q.nabla.gamma, d6_base().gamma);
  EXPECT_TRUE(is_flat(q.nabla).ok);
  EXPECT_TRUE(is_torsion_free(q.nabla).ok);
}

TEST(Quotient, RoundTripEveryConstructiveEntry) {
  for (const auto& id : constructive_ids()) {
    const auto& en = shipped().find(id);
    for (std::size_t k = 0; k < en.extensions.size(); ++k) {
      auto b = built(id, k);
      std::size_t n = b.h.space.dim();
      std::vector<Vec> lifts;
      for (std::size_t a = 0; a < n; ++a) lifts.push_back(unit_vector(a, 2 * n));
      auto q = quotient_flat_connection(b.ext.g, b.ext.values, b.ext.ideal, lifts);
      EXPECT_EQ(q.h.c, b.h.c) << id;
      EXPECT_EQ(q.nabla.gamma, b.nabla.gamma) << id;
    }
  }
}

TEST(Quotient, AbelianGivesZeroConnection) {
  SuperSpace s = standard_space(2, 2);
  ScalarMatrix w = wedge_values({wt("1", 1, 2), wt("1", 3, 3), wt("1", 4, 4)}, s);
  SubSpace a = SubSpace::span(4, {e(2, 4), vec({"0", "0", "1", "1"})});  // w(e3+e4,e3+e4) = -4
  ScalarMatrix w2 = wedge_values({wt("1", 1, 2), wt("1", 3, 4)}, s);
  SubSpace lag = SubSpace::span(4, {e(2, 4), e(4, 4)});
  auto q = quotient_flat_connection(make_lie(s, {}), w2, lag, {e(1, 4), e(3, 4)});
  for (const auto& x : q.nabla.gamma.v) EXPECT_TRUE(x.is_zero());
  EXPECT_THROW(quotient_flat_connection(make_lie(s, {}), w, a, {e(1, 4), e(3, 4)}), NotStronglyPolarized);
}

// a different isotropic complement u + phi(u) yields the same connection
TEST(Quotient, IndependentOfTheComplement) {
  std::mt19937 g(43);
  int tried = 0;
  for (const auto& id : constructive_ids()) {
    auto b = built(id);
    if (std::any_of(b.ext.values.a.begin(), b.ext.values.a.end(), [](const Scalar& x) { return !x.is_rational(); }))
      continue;
    std::size_t n = b.h.space.dim(), d = 2 * n;
    const SuperSpace& s = b.ext.g.space;
    // unknown phi(k,a): coefficient of dual k in the lift of u_a, parity preserving
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k)
        if (s.parity(a) == s.parity(n + k)) slots.push_back({k, a});
    auto lift = [&](const std::vector<Rational>& phi, std::size_t a) {
      Vec v = unit_vector(a, d);
      for (std::size_t t = 0; t < slots.size(); ++t)
        if (slots[t].second == a) v[n + slots[t].first] += Scalar(phi[t]);
      return v;
    };
    // isotropy is linear in phi since the ideal is isotropic
    RationalMatrix eqs(n * n, slots.size());
    for (std::size_t t = 0; t < slots.size(); ++t) {
      std::vector<Rational> unit(slots.size(), 0);
      unit[t] = 1;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
          eqs(a * n + c, t) = eval_values(b.ext.values, lift(unit, a), lift(unit, c)).to_rational() -
                              eval_values(b.ext.values, unit_vector(a, d), unit_vector(c, d)).to_rational();
    }
    auto null = nullspace(eqs);
    if (null.empty()) continue;
    for (int it = 0; it < 5; ++it) {
      std::vector<Rational> phi(slots.size(), 0);
      for (const auto& v : null) {
        Rational c = rand_rational(g);
        for (std::size_t t = 0; t < slots.size(); ++t) phi[t] += c * v[t];
      }
      std::vector<Vec> lifts;
      for (std::size_t a = 0; a < n; ++a) lifts.push_back(lift(phi, a));
      auto q = quotient_flat_connection(b.ext.g, b.ext.values, b.ext.ideal, lifts);
      EXPECT_EQ(q.nabla.gamma, b.nabla.gamma) << id;
      ++tried;
    }
  }
  EXPECT_GT(tried, 0);
}

TEST(Quotient, RejectsNonLagrangian) {
  auto b = built("D6");
  SubSpace s13 = SubSpace::span(4, {e(1, 4), e(3, 4)});
  EXPECT_THROW(quotient_flat_connection(b.ext.g, b.ext.values, s13, {e(2, 4), e(4, 4)}), NotStronglyPolarized);
  EXPECT_THROW(quotient_flat_connection(b.ext.g, b.ext.values, b.ext.ideal, {e(1, 4), e(3, 4)}), NotStronglyPolarized);
}

TEST(VerifyIso, Examples) {
  const auto& d6 = shipped().find("D6").lie();
  LinearMap id{ScalarMatrix::identity(4), Parity::kEven};
  EXPECT_TRUE(verify_iso(id, d6, d6).ok);
  auto b = built("D6");
  EXPECT_TRUE(verify_iso(b.identification, b.ext.g, d6, &b.ext.values, &b.ext.values).ok);
  const auto& d5 = shipped().find("D5").lie();
  LinearMap swap{ScalarMatrix(4, 4), Parity::kEven};
  swap.matrix(0, 0) = swap.matrix(1, 1) = swap.matrix(3, 2) = swap.matrix(2, 3) = Scalar(1);
  auto r = verify_iso(swap, d5, d5);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.bracket_ok);
  EXPECT_THROW(verify_iso(LinearMap{ScalarMatrix(4, 4), Parity::kEven}, d5, d5), NotBijective);
  ScalarMatrix scaled = b.ext.values;
  for (auto& x : scaled.a) x *= Scalar(3);
  auto s = verify_iso(b.identification, b.ext.g, d6, &b.ext.values, &scaled);
  EXPECT_TRUE(s.ok);
  EXPECT_EQ(s.ratio, Scalar(3));
}
