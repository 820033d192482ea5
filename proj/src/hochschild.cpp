#include "hochlab/hochschild.hpp"

#include <random>

namespace hochlab {

AlgebraMap AlgebraMap::identity(const Algebra& algebra) {
  return AlgebraMap{&algebra, &algebra, [](const Word& a) { return Element(a); }};
}

Element AlgebraMap::operator()(const Element& x) const {
  Element out;
  for (const auto& [a, c] : x) out.add(on_basis(a), c);
  return out;
}

namespace {

BarWord slice(const BarWord& w, std::size_t from, std::size_t to) {
  return BarWord(w.begin() + from, w.begin() + to);
}

}  // namespace

std::vector<CochainTerm<BarWord>> algebra_hochschild_terms(const AlgebraMap& phi, const BarWord& w, int n) {
  const Algebra& A = *phi.source;
  std::vector<CochainTerm<BarWord>> terms;
  terms.push_back({w, Scalar(1), true, std::nullopt, std::nullopt});
  int eps = n;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& [k, c] : A.differential(w[i])) {
      BarWord v = w;
      v[i] = k;
      terms.push_back({v, c * parity_sign(eps), false, std::nullopt, std::nullopt});
    }
    eps += A.degree(w[i]) + 1;
  }
  if (w.empty()) return terms;

  int first = A.degree(w[0]) + 1;
  for (const auto& [b, c] : phi(w[0]))
    terms.push_back({slice(w, 1, w.size()), -c * parity_sign(first * n), false, b, std::nullopt});
  eps = n + first;
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (const auto& [k, c] : A.multiply(w[i - 1], w[i])) {
      BarWord v(w.begin(), w.begin() + i - 1);
      v.push_back(k);
      v.insert(v.end(), w.begin() + i + 1, w.end());
      terms.push_back({v, -c * parity_sign(eps), false, std::nullopt, std::nullopt});
    }
    eps += A.degree(w[i]) + 1;
  }
  BarWord head = slice(w, 0, w.size() - 1);
  int last = n + bar_degree(A, head);
  for (const auto& [b, c] : phi(w.back()))
    terms.push_back({head, c * parity_sign(last), false, std::nullopt, b});
  return terms;
}

AlgebraCochain algebra_hochschild_D(const AlgebraMap& phi, const AlgebraCochain& f) {
  AlgebraMap coefficients = phi;
  return AlgebraCochain(f.degree() - 1, [coefficients, f](const BarWord& w) {
    std::function<Element(const BarWord&)> eval = [&f](const BarWord& v) { return f(v); };
    return apply_terms(*coefficients.target, algebra_hochschild_terms(coefficients, w, f.degree()), eval);
  });
}

AlgebraCochain algebra_hochschild_D(const Algebra& algebra, const AlgebraCochain& f) {
  return algebra_hochschild_D(AlgebraMap::identity(algebra), f);
}

AlgebraCochain Phi(const Algebra& algebra, const BimoduleMap& f) {
  Word unit = algebra.unit();
  return AlgebraCochain(f.degree, [f, unit](const BarWord& w) { return f(TwoSidedWord{unit, w, unit}); });
}

BimoduleMap Phi_inverse(const Algebra& algebra, const AlgebraCochain& f) {
  const Algebra* A = &algebra;
  return BimoduleMap{f.degree(), [A, f](const TwoSidedWord& t) {
                       const auto& [m, w, n] = t;
                       Element v = A->multiply(A->multiply(Element(m), f(w)), Element(n));
                       return v.scaled(parity_sign(f.degree() * A->degree(m)));
                     }};
}

BimoduleMap bimodule_hom_differential(const Algebra& algebra, const BimoduleMap& f) {
  const Algebra* A = &algebra;
  return BimoduleMap{f.degree - 1, [A, f](const TwoSidedWord& t) {
                       Element out = A->differential(f(t));
                       for (const auto& [u, c] : two_sided_bar_differential(*A, t))
                         out.add(f(u), -c * parity_sign(f.degree));
                       return out;
                     }};
}

BarElement beta_A(const Algebra& A, const AlgebraCochain& g, const BarWord& w) {
  BarElement out;
  int shift = g.degree() + 1;
  int prefix = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (i > 0) prefix += A.degree(w[i - 1]) + 1;
    int sign = parity_sign(shift * prefix);
    for (std::size_t j = i; j <= w.size(); ++j) {
      for (const auto& [k, c] : g(slice(w, i, j))) {
        BarWord v(w.begin(), w.begin() + i);
        v.push_back(k);
        v.insert(v.end(), w.begin() + j, w.end());
        out.add(v, c * sign);
      }
    }
  }
  return out;
}

BarElement beta_A(const Algebra& A, const AlgebraCochain& g, const BarElement& x) {
  BarElement out;
  for (const auto& [w, c] : x) out.add(beta_A(A, g, w), c);
  return out;
}

AlgebraCochain beta_A_inverse(std::function<BarElement(const BarWord&)> coderivation, int degree) {
  return AlgebraCochain(degree - 1, [coderivation](const BarWord& w) {
    Element out;
    for (const auto& [v, c] : coderivation(w))
      if (v.size() == 1) out.add(v[0], c);
    return out;
  });
}

BarElement coderivation_differential(const Algebra& A, const AlgebraCochain& g, const BarWord& w) {
  BarElement out = bar_differential(A, beta_A(A, g, w));
  out.add(beta_A(A, g, bar_differential(A, w)), -parity_sign(g.degree() + 1));
  return out;
}

AlgebraCochain gerstenhaber_circle(const Algebra& algebra, const AlgebraCochain& f, const AlgebraCochain& g) {
  const Algebra* A = &algebra;
  return AlgebraCochain(f.degree() + g.degree() + 1,
                        [A, f, g](const BarWord& w) { return f.apply(beta_A(*A, g, w)); });
}

AlgebraCochain gerstenhaber_bracket(const Algebra& algebra, const AlgebraCochain& f, const AlgebraCochain& g) {
  AlgebraCochain fg = gerstenhaber_circle(algebra, f, g);
  AlgebraCochain gf = gerstenhaber_circle(algebra, g, f);
  int sign = -parity_sign((f.degree() + 1) * (g.degree() + 1));
  return AlgebraCochain(fg.degree(), [fg, gf, sign](const BarWord& w) {
    Element out = fg(w);
    out.add(gf(w), sign);
    return out;
  });
}

AlgebraCochain algebra_cup(const AlgebraMap& phi, const AlgebraCochain& f, const AlgebraCochain& g) {
  AlgebraMap coefficients = phi;
  return AlgebraCochain(f.degree() + g.degree(), [coefficients, f, g](const BarWord& w) {
    const Algebra& A = *coefficients.source;
    const Algebra& B = *coefficients.target;
    Element out;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      BarWord u = slice(w, 0, i), v = slice(w, i, w.size());
      out.add(B.multiply(f(u), g(v)), parity_sign(g.degree() * bar_degree(A, u)));
    }
    return out;
  });
}

AlgebraCochain algebra_cup(const Algebra& algebra, const AlgebraCochain& f, const AlgebraCochain& g) {
  return algebra_cup(AlgebraMap::identity(algebra), f, g);
}

std::vector<CochainTerm<int>> coalgebra_hochschild_terms(const DGCoalgebra& C, int c, int n, bool normalized) {
  std::vector<CochainTerm<int>> terms;
  terms.push_back({c, Scalar(1), true, std::nullopt, std::nullopt});
  for (const auto& [x, k] : C.differential(c)) terms.push_back({x, -k * parity_sign(n), false, std::nullopt, std::nullopt});
  for (const auto& t : C.diagonal(c)) {
    if (!(normalized && t.left == 0))
      terms.push_back({t.right, -t.coeff * parity_sign(n * C.degree(t.left)), false, Word{t.left}, std::nullopt});
    if (!(normalized && t.right == 0))
      terms.push_back({t.left, t.coeff * parity_sign(n + C.degree(t.left)), false, std::nullopt, Word{t.right}});
  }
  return terms;
}

CoalgebraCochain coalgebra_hochschild_D(const DGCoalgebra& C, const FreeDGA& T, const CoalgebraCochain& phi,
                                        bool normalized) {
  CoalgebraCochain out{phi.degree - 1, std::vector<Element>(C.size())};
  std::function<Element(const int&)> eval = [&phi](const int& x) { return phi(x); };
  for (int c = 0; c < C.size(); ++c)
    out.values[c] = apply_terms(T, coalgebra_hochschild_terms(C, c, phi.degree, normalized), eval);
  return out;
}

CoalgebraCochain coalgebra_cup(const DGCoalgebra& C, const FreeDGA& T, const CoalgebraCochain& f,
                               const CoalgebraCochain& g) {
  CoalgebraCochain out{f.degree + g.degree, std::vector<Element>(C.size())};
  for (int c = 0; c < C.size(); ++c) {
    for (const auto& t : C.diagonal(c))
      out.values[c].add(T.multiply(f(t.left), g(t.right)), t.coeff * parity_sign(g.degree * C.degree(t.left)));
  }
  return out;
}

BicomoduleMap Psi_C(const DGCoalgebra& C, const CoalgebraCochain& phi) {
  BicomoduleMap out{phi.degree, std::vector<CobarTripleElement>(C.size())};
  for (int c = 0; c < C.size(); ++c) {
    for (const auto& t : C.diagonal(c)) {
      for (const auto& s : C.diagonal(t.left)) {
        Scalar coeff = t.coeff * s.coeff * parity_sign(phi.degree * C.degree(s.left));
        for (const auto& [w, v] : phi(s.right)) out.values[c].add(CobarTriple{s.left, w, t.right}, coeff * v);
      }
    }
  }
  return out;
}

CoalgebraCochain Psi_C_inverse(const BicomoduleMap& f) {
  CoalgebraCochain out{f.degree, std::vector<Element>(f.values.size())};
  for (std::size_t c = 0; c < f.values.size(); ++c) {
    for (const auto& [t, v] : f.values[c]) {
      const auto& [r, w, l] = t;
      if (r == 0 && l == 0) out.values[c].add(w, v);
    }
  }
  return out;
}

BicomoduleMap bicomodule_hom_differential(const DGCoalgebra& C, const BicomoduleMap& f) {
  BicomoduleMap out{f.degree - 1, std::vector<CobarTripleElement>(C.size())};
  for (int c = 0; c < C.size(); ++c) {
    out.values[c] = two_sided_cobar_differential(C, f.values[c]);
    for (const auto& [x, k] : C.differential(c)) out.values[c].add(f.values[x], -k * parity_sign(f.degree));
  }
  return out;
}

Derivation gamma_C(const FreeDGA& tilde, const CoalgebraCochain& phi) {
  std::map<int, Element> values;
  for (std::size_t c = 0; c < phi.values.size(); ++c)
    values.emplace(static_cast<int>(c), phi.values[c].scaled(parity_sign(phi.degree)));
  return Derivation(tilde, phi.degree + 1, std::move(values));
}

CoalgebraCochain gamma_C_inverse(const DGCoalgebra& C, const Derivation& theta) {
  CoalgebraCochain out{theta.degree() - 1, std::vector<Element>(C.size())};
  for (int c = 0; c < C.size(); ++c) out.values[c] = theta.value(c).scaled(parity_sign(theta.degree() - 1));
  return out;
}

ExtendedDerivation gamma_bar_C(const FreeDGA& bar, const CoalgebraCochain& phi) {
  std::map<int, Element> values;
  for (std::size_t c = 1; c < phi.values.size(); ++c)
    values.emplace(static_cast<int>(c), phi.values[c].scaled(parity_sign(phi.degree)));
  return {Derivation(bar, phi.degree + 1, std::move(values)), phi.values.at(0).scaled(-1)};
}

CoalgebraCochain gamma_bar_C_inverse(const DGCoalgebra& C, const ExtendedDerivation& xi) {
  CoalgebraCochain out{xi.degree() - 1, std::vector<Element>(C.size())};
  out.values[0] = xi.x.scaled(-1);
  for (int c = 1; c < C.size(); ++c) out.values[c] = xi.theta.value(c).scaled(parity_sign(xi.degree() - 1));
  return out;
}

CoalgebraCochain coalgebra_bracket(const DGCoalgebra& C, const FreeDGA& tilde, const CoalgebraCochain& f,
                                   const CoalgebraCochain& g) {
  return gamma_C_inverse(C, derivation_bracket(gamma_C(tilde, f), gamma_C(tilde, g)));
}

CoalgebraCochain normalized_coalgebra_bracket(const DGCoalgebra& C, const FreeDGA& bar, const CoalgebraCochain& f,
                                              const CoalgebraCochain& g) {
  return gamma_bar_C_inverse(C, ext_bracket(gamma_bar_C(bar, f), gamma_bar_C(bar, g)));
}

CoalgebraCochain random_coalgebra_cochain(const DGCoalgebra& C, const FreeDGA& T, int degree, std::uint64_t seed,
                                          const BasisBounds& bounds, bool normalized) {
  CoalgebraCochain out{degree, std::vector<Element>(C.size())};
  for (int c = 0; c < C.size(); ++c) {
    std::mt19937_64 rng(hash_bar_word(seed, BarWord{Word{c}}));
    std::uniform_int_distribution<int> coin(0, 99);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const auto& w : T.basis(C.degree(c) + degree, bounds)) {
      bool has_unit = false;
      for (int x : w) has_unit = has_unit || x == 0;
      if (normalized && has_unit) continue;
      if (coin(rng) < 60) out.values[c].add(w, coeff(rng));
    }
  }
  return out;
}

}  // namespace hochlab
