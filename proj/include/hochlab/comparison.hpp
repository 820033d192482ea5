#pragma once

#include "hochlab/hochschild.hpp"

namespace hochlab {

// A functional on a cobar construction, stored by its values on cobar words.
using Functional = Linear<Word>;

// Coefficient (-1)^n eps_sigma of Theta([c_1^v|...|c_n^v]) on <c_1|...|c_n>.
Scalar theta_coefficient(const DGCoalgebra& coalgebra, const Word& letters);

// Theta : B~(C^v) -> (Omega~ C)^v on a bar word whose letters are dual basis
// elements.  Theta-bar is the same formula on normalized words.
Functional Theta(const DGCoalgebra& coalgebra, const BarWord& w);
Functional Theta(const DGCoalgebra& coalgebra, const BarElement& x);
Functional Theta_bar(const DGCoalgebra& coalgebra, const BarWord& w);

// Word of coalgebra indices underlying a bar word over C^v.
Word bar_letters(const BarWord& w);
BarWord letters_to_bar(const Word& letters);

// Transpose of a linear endomorphism of a cobar algebra.
Functional transpose(const Functional& xi, int xi_degree,
                     const std::function<Element(const Word&)>& map, int map_degree,
                     const std::vector<Word>& candidates);
// Dual differential on functionals: (d xi)(u) = -(-1)^{|xi|} xi(du).
Functional dual_differential(const Algebra& cobar, const Functional& xi, int xi_degree,
                             const std::vector<Word>& candidates);

// D1(phi) = phi^v o Theta, with values in C^v.  D1_bar is the normalized
// variant: phi takes values in Omega-bar C and the result is defined on words
// with no unit letter.
AlgebraCochain D1(const DGCoalgebra& coalgebra, const CoalgebraCochain& phi);
AlgebraCochain D1_bar(const DGCoalgebra& coalgebra, const CoalgebraCochain& phi);

// Precomposition with the projection onto the normalized bar construction.
AlgebraCochain extend_by_zero_on_units(const Algebra& algebra, const AlgebraCochain& f);

// D2(g) = g o sigma_C, a normalized coalgebra cochain.
CoalgebraCochain D2(const DGCoalgebra& coalgebra, const AlgebraCochain& g);
// Section of D2: nonzero only on words of length at most one.
AlgebraCochain Gamma(const DGCoalgebra& coalgebra, const FreeDGA& bar, const CoalgebraCochain& phi);

// Normalized coalgebra cochains regarded as cochains with values in Omega~ C.
CoalgebraCochain inclusion_normalized(const CoalgebraCochain& phi);

// The composite C*(Omega-bar C; Omega-bar C) -> C*(C^v; C^v).
AlgebraCochain D_C(const DGCoalgebra& coalgebra, const AlgebraCochain& g);

// Degree-zero morphism of supplemented DG coalgebras, on basis elements.
struct CoalgebraMap {
  const DGCoalgebra* source = nullptr;
  const DGCoalgebra* target = nullptr;
  std::vector<Linear<int>> images;

  // Sends each basis element to the target basis element with the same name.
  static CoalgebraMap by_names(const DGCoalgebra& source, const DGCoalgebra& target);
};

// Degree, unit, differential and diagonal compatibility.
ValidationReport validate(const CoalgebraMap& f);

// f^v : D^v -> C^v and Omega-bar f : Omega-bar C -> Omega-bar D.
AlgebraMap dual_map(const CoalgebraMap& f, const DualAlgebra& source_dual, const DualAlgebra& target_dual);
AlgebraMap cobar_map(const CoalgebraMap& f, const FreeDGA& source_bar, const FreeDGA& target_bar);

// Precomposition g -> g o (f (x) ... (x) f) along an algebra map f : A -> B,
// taking C*(B; M) to C*(A; M).
AlgebraCochain precompose(const AlgebraMap& f, const AlgebraCochain& g);
// Postcomposition g -> f o g.
AlgebraCochain postcompose(const AlgebraMap& f, const AlgebraCochain& g);

}  // namespace hochlab
