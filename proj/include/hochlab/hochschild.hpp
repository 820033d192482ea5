#pragma once

#include <optional>

#include "hochlab/bar_cobar.hpp"
#include "hochlab/cochains.hpp"
#include "hochlab/free_dga.hpp"

namespace hochlab {

// One summand of a cochain differential evaluated at a fixed source:
//   coeff * left * op(f(source)) * right,  op = identity or d.
template <class Source>
struct CochainTerm {
  Source source;
  Scalar coeff;
  bool differentiate = false;
  std::optional<Word> left;
  std::optional<Word> right;
};

// Algebra map A -> B on basis elements, used for coefficients M = B.
struct AlgebraMap {
  const Algebra* source = nullptr;
  const Algebra* target = nullptr;
  std::function<Element(const Word&)> on_basis;

  static AlgebraMap identity(const Algebra& algebra);
  Element operator()(const Word& a) const { return on_basis(a); }
  Element operator()(const Element& x) const;
};

template <class Source>
Element apply_terms(const Algebra& values, const std::vector<CochainTerm<Source>>& terms,
                    const std::function<Element(const Source&)>& f) {
  Element out;
  for (const auto& t : terms) {
    Element v = f(t.source);
    if (t.differentiate) v = values.differential(v);
    if (t.left) v = values.multiply(Element(*t.left), v);
    if (t.right) v = values.multiply(v, Element(*t.right));
    out.add(v, t.coeff);
  }
  return out;
}

// (Df)(w) for f of the given degree with values in B along `coefficients`.
std::vector<CochainTerm<BarWord>> algebra_hochschild_terms(const AlgebraMap& coefficients,
                                                           const BarWord& w, int degree);
AlgebraCochain algebra_hochschild_D(const AlgebraMap& coefficients, const AlgebraCochain& f);
AlgebraCochain algebra_hochschild_D(const Algebra& algebra, const AlgebraCochain& f);

// Bimodule maps out of B(A;A;A) and the restriction isomorphism Phi.
struct BimoduleMap {
  int degree = 0;
  std::function<Element(const TwoSidedWord&)> rule;
  Element operator()(const TwoSidedWord& t) const { return rule(t); }
};
AlgebraCochain Phi(const Algebra& algebra, const BimoduleMap& f);
BimoduleMap Phi_inverse(const Algebra& algebra, const AlgebraCochain& f);
BimoduleMap bimodule_hom_differential(const Algebra& algebra, const BimoduleMap& f);

// beta_A(g) applied to a bar word, and as a map on bar elements.
BarElement beta_A(const Algebra& algebra, const AlgebraCochain& g, const BarWord& w);
BarElement beta_A(const Algebra& algebra, const AlgebraCochain& g, const BarElement& x);
AlgebraCochain beta_A_inverse(std::function<BarElement(const BarWord&)> coderivation, int degree);
// D(beta g) = d o beta g - (-1)^{|beta g|} beta g o d on the non-unital bar construction.
BarElement coderivation_differential(const Algebra& algebra, const AlgebraCochain& g, const BarWord& w);

AlgebraCochain gerstenhaber_circle(const Algebra& algebra, const AlgebraCochain& f, const AlgebraCochain& g);
// Desuspended value of [sf, sg]; degree |f| + |g| + 1.
AlgebraCochain gerstenhaber_bracket(const Algebra& algebra, const AlgebraCochain& f, const AlgebraCochain& g);
AlgebraCochain algebra_cup(const AlgebraMap& coefficients, const AlgebraCochain& f, const AlgebraCochain& g);
AlgebraCochain algebra_cup(const Algebra& algebra, const AlgebraCochain& f, const AlgebraCochain& g);

// Coalgebra side: cochains C -> T(s^-1 C) (values in Omega~ C) or, for the
// normalized complex, C -> T(s^-1 C-bar) (values in Omega-bar C).
std::vector<CochainTerm<int>> coalgebra_hochschild_terms(const DGCoalgebra& coalgebra, int c, int degree,
                                                         bool normalized);
CoalgebraCochain coalgebra_hochschild_D(const DGCoalgebra& coalgebra, const FreeDGA& values,
                                        const CoalgebraCochain& phi, bool normalized);
CoalgebraCochain coalgebra_cup(const DGCoalgebra& coalgebra, const FreeDGA& values, const CoalgebraCochain& f,
                               const CoalgebraCochain& g);

// Psi for the bicomodule C itself, and its inverse.
struct BicomoduleMap {
  int degree = 0;
  std::vector<CobarTripleElement> values;
};
BicomoduleMap Psi_C(const DGCoalgebra& coalgebra, const CoalgebraCochain& phi);
CoalgebraCochain Psi_C_inverse(const BicomoduleMap& f);
BicomoduleMap bicomodule_hom_differential(const DGCoalgebra& coalgebra, const BicomoduleMap& f);

Derivation gamma_C(const FreeDGA& tilde, const CoalgebraCochain& phi);
CoalgebraCochain gamma_C_inverse(const DGCoalgebra& coalgebra, const Derivation& theta);
ExtendedDerivation gamma_bar_C(const FreeDGA& bar, const CoalgebraCochain& phi);
CoalgebraCochain gamma_bar_C_inverse(const DGCoalgebra& coalgebra, const ExtendedDerivation& xi);

// Brackets transported through gamma_C and gamma-bar_C.
CoalgebraCochain coalgebra_bracket(const DGCoalgebra& coalgebra, const FreeDGA& tilde, const CoalgebraCochain& f,
                                   const CoalgebraCochain& g);
CoalgebraCochain normalized_coalgebra_bracket(const DGCoalgebra& coalgebra, const FreeDGA& bar,
                                              const CoalgebraCochain& f, const CoalgebraCochain& g);

CoalgebraCochain random_coalgebra_cochain(const DGCoalgebra& coalgebra, const FreeDGA& values, int degree,
                                          std::uint64_t seed, const BasisBounds& bounds, bool normalized);

}  // namespace hochlab
