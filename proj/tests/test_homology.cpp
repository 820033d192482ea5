#include <gtest/gtest.h>

#include <random>

#include "hochlab/assemble.hpp"
#include "hochlab/hh.hpp"
#include "hochlab/modular.hpp"
#include "hochlab/smith.hpp"
#include "support.hpp"

using namespace hochlab;
using namespace hochlab::testing;

namespace {

std::size_t rational_rank(const SparseMatrix& m) {
  Echelon e;
  std::size_t r = 0;
  for (const auto& c : m.columns)
    if (e.insert(c)) ++r;
  return r;
}

// Number of ordered sequences of parts >= 2 summing to n, with at most `parts` parts.
long compositions(int n, int parts) {
  std::vector<std::vector<long>> table(parts + 1, std::vector<long>(n + 1, 0));
  table[0][0] = 1;
  for (int k = 1; k <= parts; ++k)
    for (int total = 0; total <= n; ++total)
      for (int first = 2; first <= total; ++first) table[k][total] += table[k - 1][total - first];
  long sum = 0;
  for (int k = 0; k <= parts; ++k) sum += table[k][n];
  return sum;
}

ComplexWindow two_step(const Scalar& entry) {
  ComplexWindow w;
  w.lo = 0;
  w.hi = 1;
  w.dims = {{0, 1}, {1, 1}};
  SparseMatrix d(1, 1);
  d.columns[0] = {{0, entry}};
  w.d.emplace(1, d);
  return w;
}

}  // namespace

TEST(ComplexWindow, ZeroComplexIsEmpty) {
  auto w = assemble_window<Word>(
      0, 4, [](int) { return std::vector<Word>{}; }, [](const Word&) { return Element(); }, false);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(w.dim(n), 0);
  EXPECT_TRUE(w.square_failures().empty());
  EXPECT_EQ(homology(w, 2).dimension(), 0);
}

TEST(ComplexWindow, IsomorphismHasNoHomology) {
  auto w = two_step(1);
  EXPECT_EQ(homology(w, 0).dimension(), 0);
  EXPECT_EQ(homology(w, 1).dimension(), 0);
}

TEST(ComplexWindow, NormalizedBarOfFreeAlgebra) {
  // The cobar algebra of the 2-sphere is T(u) with |u| = 1 and d = 0.
  auto fx = fixture("sphere2");
  const FreeDGA& T = fx->bar;
  ASSERT_EQ(T.generators().size(), 1u);
  EXPECT_EQ(T.generators()[0].degree, 1);
  const int L = 6;
  auto basis = [&](int n) {
    std::vector<BarWord> out;
    BarWord w;
    std::function<void(int)> grow = [&](int degree) {
      if (degree == n) out.push_back(w);
      if (static_cast<int>(w.size()) == L) return;
      for (int k = 1; degree + k + 1 <= n; ++k) {
        w.push_back(Word(k, T.generators()[0].id));
        grow(degree + k + 1);
        w.pop_back();
      }
    };
    grow(0);
    return out;
  };
  auto w = assemble_window<BarWord>(
      0, 6, basis, [&](const BarWord& b) { return normalized_bar_differential(T, b); }, false);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(w.dim(n), compositions(n, L)) << n;
  EXPECT_TRUE(w.square_failures().empty());
  // The bar construction of a free algebra has homology k + sV.
  for (int n = 1; n < 6; ++n) EXPECT_EQ(homology(w, n).dimension(), n == 2 ? 1 : 0) << n;
}

TEST(ComplexWindow, FreeAlgebraWithZeroDifferential) {
  auto fx = fixture("sphere2");
  const FreeDGA& T = fx->bar;
  BasisBounds b;
  b.max_length = 8;
  auto w = assemble_window<Word>(
      0, 6, [&](int n) { return T.basis(n, b); }, [&](const Word& x) { return T.differential(x); }, false);
  for (int n = 1; n < 6; ++n) {
    auto h = homology(w, n);
    EXPECT_EQ(h.dimension(), 1);
    EXPECT_EQ(h.dimension(), h.cycles() - h.boundaries());
  }
}

TEST(Smith, TorsionDetected) {
  auto w = two_step(2);
  EXPECT_EQ(invariant_factors(w.d.at(1)), std::vector<mpz_class>{2});
  auto h = integral_homology(w.d.at(1), SparseMatrix(0, 1), 1);
  EXPECT_EQ(h.free_rank, 0);
  EXPECT_EQ(h.torsion, std::vector<mpz_class>{2});
  SparseMatrix m(2, 2);
  m.columns[0] = {{0, Scalar(2)}};
  m.columns[1] = {{1, Scalar(3)}};
  EXPECT_EQ(invariant_factors(m), (std::vector<mpz_class>{1, 6}));
  EXPECT_EQ(homology(w, 0).dimension(), 0);  // over Q the torsion disappears
}

TEST(Modular, RanksAgreeWithRationalRanks) {
  for (const auto& name : catalogue_names()) {
    auto inst = Instance::load(HOCHLAB_CATALOGUE_DIR, name);
    auto w = dual_hochschild_window(*inst, -4, 4, true);
    for (int n = -3; n <= 4; ++n) {
      auto d = w.window->window().differential(n);
      EXPECT_EQ(modular::rank(d, modular::kMaxPrime), rational_rank(d)) << name << " " << n;
    }
  }
}

TEST(Modular, PrimeFieldRankTables) {
  for (const auto& name : catalogue_names()) {
    auto inst = Instance::load(HOCHLAB_CATALOGUE_DIR, name);
    for (Side side : {Side::Dual, Side::Coalgebra}) {
      auto q = hh_ranks(*inst, side, -4, 4, 5, 8);
      auto p = hh_ranks(*inst, side, -4, 4, 5, 8, 101);
      ASSERT_EQ(q.rows.size(), p.rows.size());
      for (std::size_t i = 0; i < q.rows.size(); ++i) EXPECT_EQ(q.rows[i].rank, p.rows[i].rank) << name;
    }
  }
  auto inst = Instance::load(HOCHLAB_CATALOGUE_DIR, "sphere2");
  EXPECT_THROW(hh_ranks(*inst, Side::Algebra, -2, 2, 5, 4, 101), std::invalid_argument);
  EXPECT_THROW(hh_ranks(*inst, Side::Dual, -2, 2, 5, 4, 100), std::invalid_argument);
}

TEST(Modular, VectorKernelMatchesScalarKernel) {
  if (!modular::avx2_available()) GTEST_SKIP() << "no AVX2 on this machine";
#if defined(__x86_64__) || defined(__i386__)
  std::mt19937 rng(11);
  for (std::uint32_t p : {3u, 101u, modular::kMaxPrime}) {
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    for (std::size_t n : {1u, 7u, 8u, 9u, 31u, 64u, 100u}) {
      std::vector<std::uint32_t> a(n), b(n);
      for (auto& x : a) x = entry(rng);
      for (auto& x : b) x = entry(rng);
      auto c = a;
      const std::uint32_t f = entry(rng);
      modular::row_axpy_scalar(a.data(), b.data(), f, p, n);
      modular::row_axpy_avx2(c.data(), b.data(), f, p, n);
      EXPECT_EQ(a, c);
    }
  }
  std::uniform_int_distribution<int> small(-2, 2), coin(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix m(30, 40);
    for (int j = 0; j < 40; ++j)
      for (int i = 0; i < 30; ++i)
        if (coin(rng) == 0 && trial % 2) m.columns[j].push_back({i, Scalar(small(rng))});
    for (auto& col : m.columns) std::erase_if(col, [](const auto& e) { return sgn(e.second) == 0; });
    EXPECT_EQ(modular::rank(m, 101, modular::Kernel::Scalar), modular::rank(m, 101, modular::Kernel::Avx2));
  }
#endif
}

TEST(InducedMap, IdentityAndZero) {
  auto inst = Instance::load(HOCHLAB_CATALOGUE_DIR, "sphere2");
  auto w = dual_hochschild_window(*inst, -4, 4, true);
  auto classes = all_classes(w.window->window(), 0);
  ASSERT_GT(classes.dimension(), 0);
  auto identity = induced_map(classes, classes, classes.basis.representatives);
  EXPECT_TRUE(identity.isomorphism());
  std::vector<SparseVector> zeros(classes.dimension());
  auto zero = induced_map(classes, classes, zeros);
  EXPECT_FALSE(zero.isomorphism());
  EXPECT_EQ(zero.rank, 0);
}

TEST(Filtration, LevelZeroKeepsOnlyTheEmptyWord) {
  auto inst = Instance::load(HOCHLAB_CATALOGUE_DIR, "sphere2");
  auto w = cobar_hochschild_window(*inst, -2, 2, 0);
  ASSERT_EQ(w.words.size(), 1u);
  EXPECT_TRUE(w.words[0].empty());
}

TEST(Filtration, SphereRanksStabilize) {
  auto inst = Instance::load(HOCHLAB_CATALOGUE_DIR, "sphere2");
  auto at8 = hh_ranks(*inst, Side::Algebra, -4, 4, 5, 8);
  auto at10 = hh_ranks(*inst, Side::Algebra, -4, 4, 5, 10);
  ASSERT_EQ(at8.rows.size(), at10.rows.size());
  for (std::size_t i = 0; i < at8.rows.size(); ++i) {
    EXPECT_TRUE(at8.rows[i].stable);
    EXPECT_EQ(at8.rows[i].rank, at10.rows[i].rank) << at8.rows[i].degree;
    EXPECT_EQ(at8.rows[i].rank, at8.rows[i].degree >= -2 ? 1 : 0);
  }
}

TEST(Filtration, SidesAgreeForTheSphere) {
  auto inst = Instance::load(HOCHLAB_CATALOGUE_DIR, "sphere2");
  auto algebra = hh_ranks(*inst, Side::Algebra, -4, 4, 5, 8);
  auto dual = hh_ranks(*inst, Side::Dual, -4, 4, 5, 8);
  auto coalgebra = hh_ranks(*inst, Side::Coalgebra, -4, 4, 5, 8);
  for (std::size_t i = 0; i < algebra.rows.size(); ++i) {
    EXPECT_EQ(algebra.rows[i].rank, dual.rows[i].rank);
    EXPECT_EQ(algebra.rows[i].rank, coalgebra.rows[i].rank);
  }
}
