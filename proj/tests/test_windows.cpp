#include <gtest/gtest.h>

#include "hochlab/windows.hpp"
#include "support.hpp"

namespace hochlab {
namespace {

using testing::catalogue_names;
using testing::fixture;

class Windows : public ::testing::TestWithParam<std::string> {};

SparseVector apply(const CochainWindow& w, int n, const SparseVector& v) { return w.window().differential(n).apply(v); }

TEST_P(Windows, NormalizedCoalgebraComplexMatchesDifferential) {
  auto fx = fixture(GetParam());
  const int top = fx->coalgebra.max_degree();
  auto win = normalized_coalgebra_window(fx->coalgebra, fx->bar, -top, 4);
  EXPECT_TRUE(win.window->window().square_failures().empty());
  for (int n = -top + 1; n <= 4; ++n) {
    BasisBounds bounds;
    bounds.max_length = 16;
    auto f = random_coalgebra_cochain(fx->coalgebra, fx->bar, n, 11 + n, bounds, true);
    auto v = win.vector(n, f);
    auto Df = coalgebra_hochschild_D(fx->coalgebra, fx->bar, f, true);
    EXPECT_EQ(apply(*win.window, n, v), win.vector(n - 1, Df)) << "degree " << n;
    EXPECT_EQ(win.cochain(n, v), f);
  }
}

TEST_P(Windows, UnnormalizedCoalgebraWindowsAreSubcomplexes) {
  auto fx = fixture(GetParam());
  const int top = fx->coalgebra.max_degree();
  auto win = coalgebra_window(fx->coalgebra, fx->tilde, -top, 3, 5);
  const auto& c = win.window->complex();
  EXPECT_TRUE(c.full.square_failures().empty());
  for (int level = 0; level <= 5; ++level) EXPECT_NO_THROW(c.restrict(level));
  BasisBounds bounds;
  bounds.max_length = 2;
  auto f = random_coalgebra_cochain(fx->coalgebra, fx->tilde, 1, 5, bounds, false);
  auto Df = coalgebra_hochschild_D(fx->coalgebra, fx->tilde, f, false);
  EXPECT_EQ(apply(*win.window, 1, win.vector(1, f)), win.vector(0, Df));
}

TEST_P(Windows, CobarQuotientWindowMatchesDifferential) {
  auto fx = fixture(GetParam());
  AlgebraWindowParams p;
  p.lo = -2;
  p.hi = 3;
  p.max_level = 7;
  p.value_min = 0;
  p.letter_min = 1;
  p.letter_max = 6;
  p.letter_bounds.max_length = 8;
  p.value_bounds.max_length = 16;
  auto win = algebra_window(AlgebraMap::identity(fx->bar), p);
  const auto& c = win.window->complex();
  EXPECT_TRUE(c.full.square_failures().empty());
  for (int n = p.lo + 1; n <= p.hi; ++n) {
    auto f = random_algebra_cochain(fx->bar, fx->bar, n, 3 + n, p.value_bounds);
    auto Df = algebra_hochschild_D(fx->bar, f);
    EXPECT_EQ(apply(*win.window, n, win.vector(n, f)), win.vector(n - 1, Df)) << "degree " << n;
  }
}

TEST_P(Windows, DualAlgebraWindowMatchesDifferential) {
  auto fx = fixture(GetParam());
  const int top = fx->coalgebra.max_degree();
  for (bool normalized : {true, false}) {
    AlgebraWindowParams p;
    p.lo = -2;
    p.hi = 2;
    p.normalized = normalized;
    p.level = AlgebraWindowParams::Level::Length;
    p.max_level = 4;
    p.value_min = -top;
    p.value_max = 0;
    p.letter_min = -top;
    p.letter_max = 0;
    auto win = algebra_window(AlgebraMap::identity(fx->dual), p);
    EXPECT_TRUE(win.window->window().square_failures().empty());
    for (int n = p.lo + 1; n <= p.hi; ++n) {
      auto f = random_algebra_cochain(fx->dual, fx->dual, n, 7 + n, p.value_bounds);
      auto Df = algebra_hochschild_D(fx->dual, f);
      if (normalized) {
        // Normalized cochains vanish on words containing the unit.
        auto g = extend_by_zero_on_units(fx->dual, f);
        Df = algebra_hochschild_D(fx->dual, g);
        auto v = win.vector(n, g);
        EXPECT_EQ(apply(*win.window, n, v), win.vector(n - 1, Df)) << "degree " << n;
      } else {
        // Quotient window: compare on sources below the top level only.
        auto dv = apply(*win.window, n, win.vector(n, f));
        auto expected = win.vector(n - 1, Df);
        EXPECT_EQ(dv, expected) << "degree " << n;
      }
    }
  }
}

TEST_P(Windows, DerivationWindowsMatchDifferentials) {
  auto fx = fixture(GetParam());
  std::mt19937_64 rng(17);
  auto der = derivation_window(fx->bar, false, -3, 3);
  auto ext = derivation_window(fx->bar, true, -3, 3);
  EXPECT_TRUE(der.window->window().square_failures().empty());
  EXPECT_TRUE(ext.window->window().square_failures().empty());
  for (int n = -2; n <= 3; ++n) {
    auto xi = testing::random_extended_derivation(fx->bar, n, rng);
    EXPECT_EQ(apply(*der.window, n, der.vector(n, xi.theta)), der.vector(n - 1, derivation_differential(xi.theta)));
    EXPECT_EQ(apply(*ext.window, n, ext.vector(n, xi)), ext.vector(n - 1, tilde_D(xi)));
    EXPECT_EQ(ext.extended_derivation(n, ext.vector(n, xi)), xi);
  }
}

INSTANTIATE_TEST_SUITE_P(Catalogue, Windows, ::testing::ValuesIn(catalogue_names()));

}  // namespace
}  // namespace hochlab
