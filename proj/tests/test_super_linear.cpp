#include <gtest/gtest.h>

#include "sqf/super_linear.hpp"
#include "test_util.hpp"

using namespace sqf;
using namespace sqf::testing;

namespace {

const SuperSpace k22 = standard_space(2, 2);

// D6 form e3*^e1* + e4*^e2*
BilForm d6_form() { return wedge_form({wt("1", 3, 1), wt("1", 4, 2)}, k22, Parity::kOdd); }

BilForm d7_form() {
  return wedge_form({wt("1", 1, 2), wt("-1/2", 3, 3), wt("-1/2", 4, 4)}, k22, Parity::kEven);
}

std::vector<WedgeTerm> rand_terms(std::mt19937& g, const SuperSpace& s, Parity par) {
  std::vector<WedgeTerm> ts;
  std::uniform_int_distribution<std::size_t> ix(0, s.dim() - 1);
  for (int k = 0; k < 6; ++k) {
    std::size_t i = ix(g), j = ix(g);
    if ((s.parity(i) + s.parity(j)) != par) continue;
    ts.push_back({Scalar(rand_rational(g)), i, j});
  }
  return ts;
}

}  // namespace

TEST(ParityShift, FlipsAndInvolutes) {
  SuperSpace p = parity_shift(k22);
  EXPECT_EQ(p.sdim(), std::make_pair(2, 2));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(p.parity(i), flip(k22.parity(i)));
  EXPECT_EQ(parity_shift(p).parities(), k22.parities());
  SuperSpace dual = make_space("h*", {{"e1*", Parity::kEven}, {"e4*", Parity::kOdd}});
  SuperSpace pd = parity_shift(dual);
  EXPECT_EQ(pd.parity(0), Parity::kOdd);
  EXPECT_EQ(pd.parity(1), Parity::kEven);
  EXPECT_TRUE(pd.valid());
}

TEST(Upsetting, Examples) {
  SuperSpace ev = standard_space(3, 0);
  BilForm id{Parity::kEven, ScalarMatrix::identity(3)};
  EXPECT_EQ(upsetting(ev, id).gram, id.gram);
  BilForm w = d6_form();
  BilForm u = upsetting(k22, w);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(u.gram.a[k], -w.gram.a[k]);
  BilForm z{Parity::kEven, ScalarMatrix(4, 4)};
  EXPECT_TRUE(upsetting(k22, z).gram.is_zero_matrix());
}

TEST(SymmetryClass, Examples) {
  EXPECT_EQ(symmetry_class(k22, d6_form()), Symmetry::kAntiSymmetric);
  EXPECT_EQ(symmetry_class(standard_space(4, 0), BilForm{Parity::kEven, ScalarMatrix::identity(4)}),
            Symmetry::kSymmetric);
  ScalarMatrix v(4, 4);
  v(2, 0) = Scalar(1);  // e3*(x)e1* alone
  EXPECT_EQ(symmetry_class(k22, form_from_values(k22, Parity::kOdd, v)), Symmetry::kNeither);
}

TEST(WedgeForm, WorkedComputations) {
  // v = l1 e1 + ... + l4 e4 with l_i played by p, q, lambda, gamma
  Vec v = vec({"p", "q", "lambda", "gamma"});
  EXPECT_EQ(eval_form(k22, d6_form(), v, unit_vector(2, 4)), S("-p"));
  Vec y = vec({"0", "0", "p", "q"});
  EXPECT_EQ(eval_form(k22, d7_form(), y, y), S("p^2+q^2"));
  BilForm w = wedge_form({wt("1", 4, 4)}, k22, Parity::kEven);
  EXPECT_EQ(eval_form(k22, w, unit_vector(3, 4), unit_vector(3, 4)), Scalar(-2));
  EXPECT_THROW(wedge_form({wt("1", 1, 3)}, k22, Parity::kEven), MixedParityTerm);
}

TEST(WedgeForm, MatchesPairingOracle) {
  std::mt19937 g(21);
  for (int it = 0; it < kIterations; ++it) {
    SuperSpace s = rand_space(g);
    Parity par = parity_of(it);
    auto ts = rand_terms(g, s, par);
    BilForm w = wedge_form(ts, s, par);
    EXPECT_EQ(form_values(s, w), oracle_wedge(ts, s));
    EXPECT_EQ(symmetry_class(s, w), Symmetry::kAntiSymmetric);
    EXPECT_TRUE(is_homogeneous_form(s, w));
  }
}

TEST(EvalForm, Examples) {
  EXPECT_EQ(eval_form(k22, d6_form(), unit_vector(0, 4), unit_vector(2, 4)), Scalar(-1));
  EXPECT_EQ(eval_form(k22, d6_form(), vec({"1", "2", "3", "4"}), zero_vector(4)), Scalar());
  EXPECT_THROW(eval_form(k22, d6_form(), zero_vector(3), zero_vector(4)), DimensionMismatch);
}

TEST(Nondegeneracy, Examples) {
  auto r = is_nondegenerate(d6_form());
  EXPECT_TRUE(r.nondegenerate);
  EXPECT_EQ(r.det, Scalar(1));
  EXPECT_EQ(oracle_det(form_values(k22, d6_form())), Scalar(1));
  EXPECT_FALSE(is_nondegenerate(BilForm{Parity::kEven, ScalarMatrix(4, 4)}).nondegenerate);
  BilForm d10 = wedge_form({wt("1+q", 1, 3), wt("1", 2, 4)}, k22, Parity::kOdd);
  auto s = is_nondegenerate(d10, {{{"q", Q("1")}}, {{"q", Q("-1")}}, {{"q", Q("1/2")}}});
  EXPECT_TRUE(s.nondegenerate);
  EXPECT_FALSE(s.samples_ok);
  ASSERT_EQ(s.sample_dets.size(), 3u);
  EXPECT_EQ(s.sample_dets[1].second, 0);
  EXPECT_NE(s.sample_dets[0].second, 0);
  EXPECT_NE(s.sample_dets[2].second, 0);
  EXPECT_EQ(s.det.substitute(Assignment{{"q", Q("-1")}}), Scalar());
}

TEST(Superdimension, Examples) {
  EXPECT_TRUE(check_superdim_constraints(k22, d7_form()));
  EXPECT_TRUE(check_superdim_constraints(k22, d6_form()));
  SuperSpace k31 = standard_space(3, 1);
  ScalarMatrix v(4, 4);
  for (std::size_t i = 0; i < 4; ++i) v(i, 3 - i) = Scalar(1);
  BilForm fake{Parity::kOdd, v};  // hypothetical odd non-degenerate form on 3|1
  EXPECT_FALSE(check_superdim_constraints(k31, fake));
  EXPECT_THROW(check_superdim_constraints(k22, BilForm{Parity::kEven, ScalarMatrix(4, 4)}), PreconditionViolated);
}

TEST(OrthogonalComplement, Examples) {
  ScalarMatrix w6 = form_values(k22, d6_form());
  SubSpace s34 = SubSpace::span(4, {unit_vector(2, 4), unit_vector(3, 4)});
  EXPECT_EQ(orthogonal_complement(s34, w6), s34);
  SubSpace all = SubSpace::span(4, {unit_vector(0, 4), unit_vector(1, 4), unit_vector(2, 4), unit_vector(3, 4)});
  EXPECT_EQ(orthogonal_complement(all, w6).dim(), 0u);
  ScalarMatrix w7 = form_values(k22, d7_form());
  SubSpace s24 = SubSpace::span(4, {unit_vector(1, 4), unit_vector(3, 4)});
  EXPECT_FALSE(orthogonal_complement(s24, w7) == s24);
  EXPECT_EQ(eval_values(w7, unit_vector(3, 4), unit_vector(3, 4)), Scalar(1));
  EXPECT_THROW(orthogonal_complement(s24, ScalarMatrix(4, 4)), DegenerateForm);
}

TEST(SubSpace, EchelonCanonical) {
  SubSpace a = SubSpace::span(3, {vec({"1", "2", "0"}), vec({"2", "4", "1"}), vec({"3", "6", "1"})});
  EXPECT_EQ(a.dim(), 2u);
  SubSpace b = SubSpace::span(3, {vec({"0", "0", "5"}), vec({"-1", "-2", "0"})});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(vec({"1", "2", "7"})));
  EXPECT_FALSE(a.contains(vec({"0", "1", "0"})));
}

TEST(LinearMap, ParityCheck) {
  LinearMap id{ScalarMatrix::identity(4), Parity::kEven};
  EXPECT_TRUE(id.respects_parity(k22, k22));
  LinearMap pi{ScalarMatrix::identity(4), Parity::kOdd};
  EXPECT_TRUE(pi.respects_parity(k22, parity_shift(k22)));
  EXPECT_FALSE(id.respects_parity(k22, parity_shift(k22)));
}

TEST(SuperLinearProperty, UpsettingIsInvolution) {
  std::mt19937 g(22);
  for (int it = 0; it < kIterations; ++it) {
    SuperSpace s = rand_space(g);
    Parity par = parity_of(it);
    ScalarMatrix v(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j)
        if ((s.parity(i) + s.parity(j)) == par) v(i, j) = Scalar(rand_rational(g));
    BilForm w = form_from_values(s, par, v);
    BilForm u = upsetting(s, w);
    EXPECT_EQ(upsetting(s, u).gram, w.gram);
    EXPECT_EQ(symmetry_class(s, u), symmetry_class(s, w));
  }
}

TEST(SuperLinearProperty, ComplementDimensions) {
  std::mt19937 g(23);
  int checked = 0;
  for (int it = 0; it < kIterations * 3 && checked < kIterations; ++it) {
    SuperSpace s = rand_space(g);
    Parity par = parity_of(it);
    ScalarMatrix v = form_values(s, wedge_form(rand_terms(g, s, par), s, par));
    if (det(v).is_zero()) continue;
    std::uniform_int_distribution<int> ng(0, static_cast<int>(s.dim()));
    std::vector<Vec> gens;
    for (int k = ng(g); k > 0; --k) {
      Vec x(s.dim());
      for (auto& c : x) c = Scalar(rand_rational(g, 2));
      gens.push_back(x);
    }
    SubSpace sub = SubSpace::span(s.dim(), gens);
    SubSpace perp = orthogonal_complement(sub, v);
    EXPECT_EQ(sub.dim() + perp.dim(), s.dim());
    for (const auto& x : sub.basis())
      for (const auto& y : perp.basis()) EXPECT_TRUE(eval_values(v, y, x).is_zero());
    ++checked;
  }
  EXPECT_GE(checked, 100);
}
