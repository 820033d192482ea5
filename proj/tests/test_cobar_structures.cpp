#include <gtest/gtest.h>

#include "support.hpp"

namespace hochlab {
namespace {

using testing::agree;
using testing::bar_words;
using testing::fixture;

class Structures : public ::testing::TestWithParam<std::string> {};

BasisBounds length_bound(int n) {
  BasisBounds b;
  b.max_length = n;
  return b;
}

std::vector<Word> cobar_words(int letters, int max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int k = 0; k < max_length; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int c = 0; c < letters; ++c) {
        Word v = w;
        v.push_back(c);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

TEST_P(Structures, SquareOfDerivationAndTheta) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  const auto& A = fx->dual;
  const int L = 4;
  const auto words = bar_words(testing::dual_letters(C), L - 1);
  const auto candidates = cobar_words(C.size(), L);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> deg(-4, 3);
  for (int trial = 0; trial < 4; ++trial) {
    auto f = random_coalgebra_cochain(C, fx->tilde, deg(rng), 900 + trial, length_bound(L), false);
    auto F = D1(C, f);
    Derivation theta = gamma_C(fx->tilde, f);
    auto as_map = [&theta](const Word& u) { return theta(u); };
    for (const auto& w : words) {
      Functional lhs = transpose(Theta(C, w), bar_degree(A, w), as_map, theta.degree(), candidates).scaled(-1);
      Functional rhs = Theta(C, beta_A(A, F, w));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST_P(Structures, ThetaIsChainMapAndMatchesTwistingCochains) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  const auto& A = fx->dual;
  const auto candidates = cobar_words(C.size(), 4);
  for (const auto& w : bar_words(testing::dual_letters(C), 3)) {
    Functional lhs = Theta(C, bar_differential(A, w));
    Functional rhs = dual_differential(fx->tilde, Theta(C, w), bar_degree(A, w), candidates);
    EXPECT_EQ(lhs, rhs);
    Element expected = bar_twisting_cochain(w);
    Element got;
    Functional xi = Theta(C, w);
    for (int c = 0; c < C.size(); ++c)
      got.add(Word{c}, xi.coefficient(Word{c}) * parity_sign(-bar_degree(A, w)));
    EXPECT_EQ(got, expected);
  }
}

TEST_P(Structures, ThetaIsMultiplicative) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  const auto& A = fx->dual;
  const auto words = bar_words(testing::dual_letters(C), 2);
  for (const auto& u : words)
    for (const auto& v : words) {
      BarWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const Scalar a = Theta(C, u).coefficient(bar_letters(u));
      const Scalar b = Theta(C, v).coefficient(bar_letters(v));
      EXPECT_EQ(Theta(C, uv).coefficient(bar_letters(uv)),
                a * b * parity_sign(bar_degree(A, u) * bar_degree(A, v)));
    }
}

TEST_P(Structures, TwoSidedComplexesAndRestrictionIsomorphisms) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  for (int r = 0; r < C.size(); ++r)
    for (const auto& w : cobar_words(C.size(), 3))
      for (int l = 0; l < C.size(); ++l) {
        auto d = two_sided_cobar_differential(C, CobarTriple{r, w, l});
        EXPECT_TRUE(two_sided_cobar_differential(C, d).empty());
      }
  for (int n = -3; n <= 3; ++n) {
    auto phi = random_coalgebra_cochain(C, fx->tilde, n, 1000 + n, length_bound(4), false);
    auto psi = Psi_C(C, phi);
    EXPECT_EQ(Psi_C_inverse(psi), phi);
    EXPECT_EQ(Psi_C_inverse(bicomodule_hom_differential(C, psi)), coalgebra_hochschild_D(C, fx->tilde, phi, false));
  }
  const auto& A = fx->dual;
  const auto words = bar_words(testing::dual_letters(C), 3);
  for (int n = -3; n <= 3; ++n) {
    auto f = random_algebra_cochain(A, A, n, 1100 + n, length_bound(4));
    auto F = Phi_inverse(A, f);
    EXPECT_TRUE(agree(Phi(A, F), f, words));
    EXPECT_TRUE(agree(Phi(A, bimodule_hom_differential(A, F)), algebra_hochschild_D(A, f), words));
    for (int m = 0; m < C.size(); ++m)
      for (const auto& w : words) {
        auto d = two_sided_bar_differential(A, TwoSidedWord{Word{m}, w, Word{0}});
        EXPECT_TRUE(two_sided_bar_differential(A, d).empty());
      }
  }
}

TEST_P(Structures, ResolutionsAndComparisonOfResolutions) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  const auto& Ab = fx->bar;
  BimoduleResolution K(Ab, BimoduleResolution::Kind::K);
  BimoduleResolution Kt(Ab, BimoduleResolution::Kind::KTilde);
  for (int d = -1; d <= 6; ++d) {
    for (const auto& t : K.basis(d, length_bound(3))) EXPECT_TRUE(K.differential(K.differential(t)).empty());
    for (const auto& t : Kt.basis(d, length_bound(3))) EXPECT_TRUE(Kt.differential(Kt.differential(t)).empty());
  }
  std::vector<int> mids{kScalarSlot};
  for (int c = 1; c < C.size(); ++c) mids.push_back(c);
  for (int mid : mids) {
    Triple t{Word{}, mid, Word{}};
    EXPECT_EQ(nabla_infty(C, Kt.differential(t)), two_sided_bar_differential(Ab, nabla_infty(C, t)));
    EXPECT_EQ(Pi(Ab, nabla_infty(C, t)), TripleElement(t));
  }
}

TEST_P(Structures, NormalizedInclusionCommutesWithDuals) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  const auto words = bar_words(testing::dual_letters(C), 3);
  for (int n = -3; n <= 3; ++n) {
    auto psi = random_coalgebra_cochain(C, fx->bar, n, 1200 + n, length_bound(4), true);
    EXPECT_TRUE(agree(D1(C, inclusion_normalized(psi)), extend_by_zero_on_units(fx->dual, D1_bar(C, psi)), words));
  }
}

INSTANTIATE_TEST_SUITE_P(All, Structures, ::testing::ValuesIn(testing::catalogue_names()));

TEST(Theta, SpecExamples) {
  auto fx = fixture("sphere2");
  const auto& C = fx->coalgebra;
  EXPECT_EQ(Theta(C, BarWord{}).coefficient(Word{}), 1);
  EXPECT_EQ(Theta(C, BarWord{}).coefficient(Word{1}), 0);
  // n = 1: the sequence s, f_1, s^-1, c_1 is already in target order.
  EXPECT_EQ(Theta(C, BarWord{Word{1}}).coefficient(Word{1}), -1);
  EXPECT_EQ(Theta(C, BarWord{Word{1}, Word{1}}).coefficient(Word{1}), 0);
}

TEST(SigmaAndD2, SpecExamples) {
  auto fx = fixture("projplane");
  const auto& C = fx->coalgebra;
  const int x = C.index("x"), y = C.index("y");
  EXPECT_EQ(sigma_C(C, x), BarElement(BarWord{Word{x}}));
  BarElement expected(BarWord{Word{y}});
  expected.add(BarWord{Word{x}, Word{x}}, 1);
  EXPECT_EQ(sigma_C(C, y), expected);
  auto g = random_algebra_cochain(fx->bar, fx->bar, 1, 77, length_bound(4));
  auto D2g = D2(C, g);
  EXPECT_EQ(D2g(x), g(BarWord{Word{x}}));
  EXPECT_EQ(D2g(y), g(BarWord{Word{y}}) + g(BarWord{Word{x}, Word{x}}));
}

}  // namespace
}  // namespace hochlab
