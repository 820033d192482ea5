#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace hochlab;
using namespace hochlab::testing;

namespace {

// Sign of a graded permutation counted directly: every inverted pair of odd
// elements contributes a factor -1.
int inversion_sign(const std::vector<int>& degrees, const std::vector<int>& order) {
  int sign = 1;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (order[a] > order[b] && (degrees[order[a]] & 1) && (degrees[order[b]] & 1)) sign = -sign;
  return sign;
}

ModulePtr module(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const GradedModule>(GradedModule{std::move(names), std::move(degrees)});
}

GradedMap map_of(ModulePtr s, ModulePtr t, int degree, std::vector<Linear<int>> columns) {
  GradedMap f = GradedMap::zero(s, t, degree);
  f.columns = std::move(columns);
  return f;
}

}  // namespace

TEST(KoszulSign, Examples) {
  EXPECT_EQ(koszul_sign({{"a", 3}, {"b", 1}, {"c", 2}}, {"a", "b", "c"}), 1);
  EXPECT_EQ(koszul_sign({{"a", 1}, {"b", 1}}, {"b", "a"}), -1);
  EXPECT_EQ(koszul_sign({{"s", 1}, {"f1", -2}, {"s-1", -1}, {"c1", 2}}, {"f1", "s", "s-1", "c1"}), 1);
  EXPECT_THROW(koszul_sign({{"a", 1}, {"b", 1}}, {"a", "c"}), std::exception);
}

TEST(KoszulSign, AgreesWithInversionCountAndIsMultiplicative) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> degrees(5);
    for (int& d : degrees) d = deg(rng);
    std::vector<int> p{0, 1, 2, 3, 4}, q{0, 1, 2, 3, 4};
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    EXPECT_EQ(koszul_sign(degrees, p), inversion_sign(degrees, p));
    // Apply p, then q to the reordered list.
    std::vector<int> after_p;
    for (int i : p) after_p.push_back(degrees[i]);
    std::vector<int> composite;
    for (int j : q) composite.push_back(p[j]);
    EXPECT_EQ(koszul_sign(degrees, composite), koszul_sign(degrees, p) * koszul_sign(after_p, q));
  }
}

TEST(Suspension, ShiftsDegrees) {
  GradedModule m{{"x"}, {2}};
  EXPECT_EQ(suspend(m, 1).degrees, std::vector<int>{3});
  EXPECT_EQ(suspend(suspend(m, 1), -1).degrees, m.degrees);
  GradedModule cbar{{"a", "b"}, {2, 2}};
  EXPECT_EQ(suspend(cbar, -1).degrees, (std::vector<int>{1, 1}));
}

TEST(HomDifferential, Examples) {
  // C = {1, x2, y3} with dy = x; k in degree 0.
  auto C = module({"1", "x", "y"}, {0, 2, 3});
  auto k = module({"1"}, {0});
  auto dC = map_of(C, C, -1, {{}, {}, Linear<int>(1)});
  auto dk = GradedMap::zero(k, k, -1);
  EXPECT_EQ(hom_differential(GradedMap::identity(C), dC, dC), GradedMap::zero(C, C, -1));
  auto zero_C = GradedMap::zero(C, C, -1);
  auto f_any = map_of(C, C, 3, {Linear<int>(2), {}, {}});
  EXPECT_EQ(hom_differential(f_any, zero_C, zero_C), GradedMap::zero(C, C, 2));
  EXPECT_THROW(hom_differential(map_of(C, C, 1, {Linear<int>(2), {}, {}}), dC, dC), GradingError);

  // f : y -> 1 kills the image of d, so Df = 0.
  auto f = map_of(C, k, -3, {{}, {}, Linear<int>(0)});
  EXPECT_EQ(hom_differential(f, dC, dk), GradedMap::zero(C, k, -4));
  // g : x -> 1 has Dg(y) = -(-1)^{-2} g(x) = -1 and Dg vanishes elsewhere.
  auto g = map_of(C, k, -2, {{}, Linear<int>(0), {}});
  auto Dg = hom_differential(g, dC, dk);
  EXPECT_EQ(Dg.degree, -3);
  EXPECT_EQ(Dg.columns[2], Linear<int>(0, -1));
  EXPECT_TRUE(Dg.columns[0].empty() && Dg.columns[1].empty());
  EXPECT_EQ(hom_differential(Dg, dC, dk), GradedMap::zero(C, k, -4));
}

TEST(Commutator, Examples) {
  auto M = module({"a", "b"}, {0, 0});
  auto p1 = map_of(M, M, 0, {Linear<int>(0), {}});
  auto p2 = map_of(M, M, 0, {{}, Linear<int>(1)});
  EXPECT_EQ(commutator(p1, p2), GradedMap::zero(M, M, 0));
  EXPECT_EQ(commutator(p1, p1), GradedMap::zero(M, M, 0));
  auto N = module({"u", "v", "w"}, {0, 1, 2});
  auto g = map_of(N, N, 1, {Linear<int>(1), Linear<int>(2, 3), {}});
  EXPECT_EQ(commutator(GradedMap::identity(N), g), GradedMap::zero(N, N, 1));
}

TEST(Commutator, AntisymmetryAndJacobi) {
  auto N = module({"u", "v", "w", "z"}, {0, 1, 2, 3});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_map = [&](int degree) {
    GradedMap f = GradedMap::zero(N, N, degree);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (N->degrees[j] == N->degrees[i] + degree) f.columns[i].add(j, coeff(rng));
    return f;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const int a = trial % 3 - 1, b = (trial / 3) % 3 - 1, c = (trial / 9) % 3 - 1;
    auto f = random_map(a), g = random_map(b), h = random_map(c);
    EXPECT_EQ(add_maps(commutator(f, g), commutator(g, f), (a * b) % 2 ? -1 : 1), GradedMap::zero(N, N, a + b));
    auto sign = [](int x) { return (x % 2) ? -1 : 1; };
    auto j1 = commutator(f, commutator(g, h));
    auto j2 = commutator(g, commutator(h, f));
    auto j3 = commutator(h, commutator(f, g));
    auto sum = add_maps(add_maps(GradedMap::zero(N, N, a + b + c), j1, sign(a * c)), j2, sign(b * a));
    EXPECT_EQ(add_maps(sum, j3, sign(c * b)), GradedMap::zero(N, N, a + b + c));
  }
}

TEST(CupProduct, UnitAndExamples) {
  auto k = module({"1"}, {0});
  AlgebraTable field{k, [](int, int) { return Linear<int>(0); }, 0};
  for (const std::string name : {"sphere2", "projplane"}) {
    auto C = load(name);
    auto table = C.table();
    const int x = C.index("x");
    auto unit = map_of(table.module, k, 0, std::vector<Linear<int>>(C.size()));
    unit.columns[0] = Linear<int>(0);
    auto xdual = map_of(table.module, k, -2, std::vector<Linear<int>>(C.size()));
    xdual.columns[x] = Linear<int>(0);
    EXPECT_EQ(cup_product(unit, xdual, table, field), xdual);
    EXPECT_EQ(cup_product(xdual, unit, table, field), xdual);
    auto square = cup_product(xdual, xdual, table, field);
    EXPECT_TRUE(square.columns[x].empty());
    if (name == "projplane") EXPECT_EQ(square.columns[C.index("y")], Linear<int>(0));
  }
}

TEST(Coalgebra, ValidationExamples) {
  EXPECT_TRUE(validate(load("sphere2")).ok());
  EXPECT_TRUE(validate(load("acyclic23")).ok());
  for (const auto& name : catalogue_names()) EXPECT_TRUE(validate(load(name)).ok()) << name;

  // Delta-bar z = x (x) y - y (x) x: (Delta-bar (x) 1) gives -x x x, (1 (x) Delta-bar) gives x x x.
  DGCoalgebra broken({{"x", 2}, {"y", 4}, {"z", 6}}, DGCoalgebra::Case::II,
                     {{}, {}, {{1, 1, 1}}, {{1, 2, 1}, {2, 1, -1}}}, {});
  auto report = validate(broken);
  EXPECT_FALSE(report.ok());
  bool found = false;
  for (const auto& law : report.checks)
    if (law.law == "coassociativity") {
      found = true;
      EXPECT_FALSE(law.passed);
      EXPECT_EQ(law.witness, "z");
    }
  EXPECT_TRUE(found);
}

TEST(Coalgebra, IteratedDiagonal) {
  auto S = load("sphere2");
  EXPECT_TRUE(reduced_diagonal_iterate(S, Linear<int>(S.index("x")), 1).empty());
  auto P = load("projplane");
  const int x = P.index("x"), y = P.index("y");
  EXPECT_EQ(reduced_diagonal_iterate(P, Linear<int>(y), 1), Linear<Word>(Word{x, x}));
  EXPECT_TRUE(reduced_diagonal_iterate(P, Linear<int>(y), 2).empty());
  EXPECT_EQ(reduced_diagonal_iterate(P, Linear<int>(y), 0), Linear<Word>(Word{y}));
  for (const auto& name : catalogue_names()) {
    auto C = load(name);
    for (int c = 1; c < C.size(); ++c)
      for (int k = 1; k <= 4; ++k)
        EXPECT_EQ(reduced_diagonal_iterate(C, Linear<int>(c), k, true),
                  reduced_diagonal_iterate(C, Linear<int>(c), k, false))
            << name << " " << c << " " << k;
  }
}

TEST(Coalgebra, Conilpotency) {
  auto S = check_conilpotent(load("sphere2"), 8);
  EXPECT_EQ(S.status, ConilpotencyResult::Status::Conilpotent);
  EXPECT_EQ(S.order.at(1), 1);
  auto P = load("projplane");
  auto p = check_conilpotent(P, 8);
  EXPECT_EQ(p.status, ConilpotencyResult::Status::Conilpotent);
  EXPECT_EQ(p.order.at(P.index("y")), 2);
  DGCoalgebra mock({{"g", 0}}, DGCoalgebra::Case::I, {{}, {{1, 1, 1}}}, {});
  EXPECT_NE(check_conilpotent(mock, 6).status, ConilpotencyResult::Status::Conilpotent);
}

TEST(DualAlgebra, Examples) {
  auto S = load("sphere2");
  DualAlgebra As(S);
  const Word xs{S.index("x")};
  EXPECT_EQ(As.degree(xs), -2);
  EXPECT_TRUE(As.multiply(xs, xs).empty());
  EXPECT_TRUE(As.differential(xs).empty());
  auto P = load("projplane");
  DualAlgebra Ap(P);
  const Word xp{P.index("x")}, yp{P.index("y")};
  EXPECT_EQ(Ap.multiply(xp, xp), Element(yp));
  EXPECT_TRUE(Ap.multiply(Ap.multiply(xp, xp), Element(xp)).empty());
}

TEST(DualAlgebra, AssociativeUnitalAndDifferentialIsDerivation) {
  for (const auto& name : catalogue_names()) {
    auto C = load(name);
    DualAlgebra A(C);
    std::vector<Word> basis;
    for (int c = 0; c < C.size(); ++c) basis.push_back(Word{c});
    for (const auto& a : basis) {
      EXPECT_EQ(A.multiply(A.unit(), a), Element(a));
      EXPECT_EQ(A.multiply(a, A.unit()), Element(a));
      EXPECT_TRUE(A.differential(A.differential(Element(a))).empty());
      for (const auto& b : basis) {
        const int sign = (A.degree(a) % 2) ? -1 : 1;
        Element leibniz = A.multiply(A.differential(Element(a)), Element(b));
        leibniz.add(A.multiply(Element(a), A.differential(Element(b))), sign);
        EXPECT_EQ(A.differential(A.multiply(a, b)), leibniz) << name;
        for (const auto& c : basis)
          EXPECT_EQ(A.multiply(A.multiply(a, b), Element(c)), A.multiply(Element(a), A.multiply(b, c))) << name;
      }
    }
  }
}

TEST(DualAlgebra, EvaluationIsChainMap) {
  // <d f, c> + (-1)^{|f|} <f, d c> = 0 for the dual basis.
  for (const auto& name : catalogue_names()) {
    auto C = load(name);
    DualAlgebra A(C);
    for (int f = 0; f < C.size(); ++f)
      for (int c = 0; c < C.size(); ++c) {
        Scalar lhs = A.differential(Word{f}).coefficient(Word{c});
        Scalar rhs = C.differential(c).coefficient(f);
        EXPECT_EQ(lhs + ((A.degree(Word{f}) % 2) ? -rhs : rhs), 0) << name;
      }
  }
}
