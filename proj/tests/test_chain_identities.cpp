#include <gtest/gtest.h>

#include "support.hpp"

namespace hochlab {
namespace {

using testing::agree;
using testing::bar_words;
using testing::fixture;
using testing::negated;

class Catalogue : public ::testing::TestWithParam<std::string> {};

BasisBounds length_bound(int n) {
  BasisBounds b;
  b.max_length = n;
  return b;
}

TEST_P(Catalogue, BarAndHochschildSquareToZero) {
  auto fx = fixture(GetParam());
  const std::vector<std::pair<const Algebra*, std::vector<Word>>> cases{
      {&fx->dual, testing::dual_letters(fx->coalgebra)},
      {&fx->bar, testing::cobar_letters(fx->bar, 4, 6)}};
  std::uint64_t seed = 11;
  for (const auto& [A, letters] : cases) {
    const auto words = bar_words(letters, 3);
    for (const auto& w : words) EXPECT_TRUE(bar_differential(*A, bar_differential(*A, w)).empty());
    for (int n = -3; n < 3; ++n) {
      auto f = random_algebra_cochain(*A, *A, n, seed++, length_bound(5));
      auto DDf = algebra_hochschild_D(*A, algebra_hochschild_D(*A, f));
      EXPECT_TRUE(agree(DDf, AlgebraCochain::zero(n - 2), bar_words(std::vector<Word>(letters.begin(), letters.begin() + std::min<std::size_t>(5, letters.size())), 3)));
    }
  }
}

TEST_P(Catalogue, BetaAnticommutesWithDifferentials) {
  auto fx = fixture(GetParam());
  const std::vector<std::pair<const Algebra*, std::vector<Word>>> cases{
      {&fx->dual, testing::dual_letters(fx->coalgebra)},
      {&fx->bar, testing::cobar_letters(fx->bar, 3, 5)}};
  std::uint64_t seed = 21;
  for (const auto& [A, letters] : cases) {
    for (int n = -3; n < 3; ++n) {
      auto g = random_algebra_cochain(*A, *A, n, seed++, length_bound(5));
      auto Dg = algebra_hochschild_D(*A, g);
      for (const auto& w : bar_words(letters, 3))
        EXPECT_EQ(beta_A(*A, Dg, w), coderivation_differential(*A, g, w).scaled(-1));
    }
  }
}

TEST_P(Catalogue, ExtendedDerivationMaps) {
  auto fx = fixture(GetParam());
  const FreeDGA& A = fx->bar;
  FreeDGA At = tilde_A(A);
  EXPECT_TRUE(differential_squares_to_zero(At));
  const auto words = bar_words(testing::cobar_letters(A, 3, 6), 3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> deg(-2, 3);
  for (int trial = 0; trial < 6; ++trial) {
    auto a = testing::random_extended_derivation(A, deg(rng), rng);
    auto b = testing::random_extended_derivation(A, deg(rng), rng);
    auto DDa = tilde_D(tilde_D(a));
    EXPECT_TRUE(DDa.x.empty());
    for (const auto& [g, v] : DDa.theta.values()) EXPECT_TRUE(v.empty()) << g;
    EXPECT_EQ(j_A(At, tilde_D(a)), derivation_differential(j_A(At, a)));
    EXPECT_EQ(j_A(At, ext_bracket(a, b)), derivation_bracket(j_A(At, a), j_A(At, b)));
    auto ia = i_A(a);
    auto iDa = i_A(tilde_D(a));
    auto Dia = algebra_hochschild_D(A, ia);
    EXPECT_TRUE(agree(iDa, negated(Dia), words));
    EXPECT_TRUE(agree(i_A(ext_bracket(a, b)), gerstenhaber_bracket(A, ia, i_A(b)), words));
  }
}

TEST_P(Catalogue, CoalgebraSideIdentities) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> deg(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = deg(rng);
    auto phi = random_coalgebra_cochain(C, fx->tilde, n, 100 + trial, length_bound(4), false);
    auto Dphi = coalgebra_hochschild_D(C, fx->tilde, phi, false);
    auto DDphi = coalgebra_hochschild_D(C, fx->tilde, Dphi, false);
    for (const auto& v : DDphi.values) EXPECT_TRUE(v.empty());
    EXPECT_EQ(gamma_C(fx->tilde, Dphi), derivation_differential(gamma_C(fx->tilde, phi)).scaled(-1));

    auto psi = random_coalgebra_cochain(C, fx->bar, n, 200 + trial, length_bound(4), true);
    auto Dpsi = coalgebra_hochschild_D(C, fx->bar, psi, true);
    for (const auto& v : coalgebra_hochschild_D(C, fx->bar, Dpsi, true).values) EXPECT_TRUE(v.empty());
    EXPECT_EQ(coalgebra_hochschild_D(C, fx->tilde, inclusion_normalized(psi), false), Dpsi);
    auto g1 = gamma_bar_C(fx->bar, Dpsi);
    auto g2 = tilde_D(gamma_bar_C(fx->bar, psi));
    EXPECT_EQ(g1.theta, g2.theta.scaled(-1));
    EXPECT_EQ(g1.x, g2.x.scaled(-1));
  }
}

TEST_P(Catalogue, DualComparisonIdentities) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  const auto& A = fx->dual;
  const int L = 4;
  const auto all = bar_words(testing::dual_letters(C), L);
  const auto shorter = bar_words(testing::dual_letters(C), L - 1);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(-4, 3);
  for (int trial = 0; trial < 5; ++trial) {
    auto phi = random_coalgebra_cochain(C, fx->tilde, deg(rng), 300 + trial, length_bound(L), false);
    auto psi = random_coalgebra_cochain(C, fx->tilde, deg(rng), 400 + trial, length_bound(L), false);
    EXPECT_TRUE(agree(D1(C, coalgebra_hochschild_D(C, fx->tilde, phi, false)),
                      algebra_hochschild_D(A, D1(C, phi)), shorter));
    EXPECT_TRUE(agree(D1(C, coalgebra_cup(C, fx->tilde, phi, psi)), algebra_cup(A, D1(C, phi), D1(C, psi)), all));
    auto h = coalgebra_bracket(C, fx->tilde, phi, psi);
    EXPECT_TRUE(agree(D1(C, h), gerstenhaber_bracket(A, D1(C, phi), D1(C, psi)), shorter));
  }
}

TEST_P(Catalogue, CobarComparisonIdentities) {
  auto fx = fixture(GetParam());
  const auto& C = fx->coalgebra;
  const auto& Ab = fx->bar;
  std::vector<Word> letters;
  BasisBounds three = length_bound(3);
  for (int d = 0; d < 7; ++d)
    for (const auto& w : Ab.basis(d, three)) letters.push_back(w);
  std::vector<BarWord> words;
  for (const auto& w : bar_words(letters, 2))
    if (bar_degree(Ab, w) <= 8) words.push_back(w);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(-4, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = deg(rng);
    auto g = random_algebra_cochain(Ab, Ab, n, 500 + trial, length_bound(5));
    EXPECT_EQ(D2(C, algebra_hochschild_D(Ab, g)), coalgebra_hochschild_D(C, Ab, D2(C, g), true));
    auto phi = random_coalgebra_cochain(C, Ab, n, 600 + trial, length_bound(4), true);
    auto psi = random_coalgebra_cochain(C, Ab, deg(rng), 700 + trial, length_bound(4), true);
    auto G = Gamma(C, Ab, phi);
    EXPECT_EQ(D2(C, G), phi);
    EXPECT_TRUE(agree(Gamma(C, Ab, coalgebra_hochschild_D(C, Ab, phi, true)), algebra_hochschild_D(Ab, G), words));
    auto l3 = Gamma(C, Ab, normalized_coalgebra_bracket(C, Ab, phi, psi));
    auto r3 = gerstenhaber_bracket(Ab, G, Gamma(C, Ab, psi));
    // The section reverses the sign of the bracket at cochain level.
    EXPECT_TRUE(agree(l3, negated(r3), words));
    EXPECT_TRUE(agree(G, negated(i_A(gamma_bar_C(Ab, phi))), words));
    auto g2 = random_algebra_cochain(Ab, Ab, deg(rng), 800 + trial, length_bound(5));
    EXPECT_EQ(D2(C, algebra_cup(Ab, g, g2)), coalgebra_cup(C, Ab, D2(C, g), D2(C, g2)));
    FreeDGA At = tilde_A(Ab);
    EXPECT_EQ(j_A(At, gamma_bar_C(Ab, phi)).values(), gamma_C(fx->tilde, phi).values());
  }
  for (const auto& w : words) {
    TripleElement lhs = Pi(Ab, two_sided_bar_differential(Ab, TwoSidedWord{Word{}, w, Word{}}));
    BimoduleResolution K(Ab, BimoduleResolution::Kind::KTilde);
    EXPECT_EQ(lhs, K.differential(Pi(Ab, TwoSidedWord{Word{}, w, Word{}})));
  }
}

INSTANTIATE_TEST_SUITE_P(All, Catalogue, ::testing::ValuesIn(testing::catalogue_names()));

}  // namespace
}  // namespace hochlab
