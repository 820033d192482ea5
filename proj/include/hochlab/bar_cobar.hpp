#pragma once

#include "hochlab/coalgebra.hpp"
#include "hochlab/free_dga.hpp"

namespace hochlab {

// Non-unital bar construction on T(sA) (all basis letters, including the unit).
BarElement bar_differential(const Algebra& algebra, const BarWord& w);
BarElement bar_differential(const Algebra& algebra, const BarElement& x);

// Normalized bar construction on T(s A-bar): letters must avoid the unit and
// degenerate terms are dropped.
BarElement normalized_bar_differential(const Algebra& algebra, const BarWord& w);

// Two-sided bar construction B(A;A;A), words m[a_1|...|a_k]n.
using TwoSidedWord = std::tuple<Word, BarWord, Word>;
using TwoSidedElement = Linear<TwoSidedWord>;
int two_sided_degree(const Algebra& algebra, const TwoSidedWord& w);
TwoSidedElement two_sided_bar_differential(const Algebra& algebra, const TwoSidedWord& w);
TwoSidedElement two_sided_bar_differential(const Algebra& algebra, const TwoSidedElement& x);
// The augmentation B(A;A;A) -> A, m[ ]n -> mn.
Element bar_augmentation(const Algebra& algebra, const TwoSidedElement& x);

// Cobar constructions of a coalgebra, as free DG algebras.  Generator ids
// are coalgebra indices: 1..m for the normalized one, 0..m for the
// non-counital one (id 0 is epsilon = <1_C>).  Weights are coalgebra degrees.
FreeDGA omega_bar(const DGCoalgebra& coalgebra);
FreeDGA omega_tilde(const DGCoalgebra& coalgebra);

// Two-sided cobar construction Omega(C;C;C) with non-reduced diagonals.
using CobarTriple = std::tuple<int, Word, int>;
using CobarTripleElement = Linear<CobarTriple>;
int two_sided_cobar_degree(const DGCoalgebra& coalgebra, const CobarTriple& t);
CobarTripleElement two_sided_cobar_differential(const DGCoalgebra& coalgebra, const CobarTriple& t);
CobarTripleElement two_sided_cobar_differential(const DGCoalgebra& coalgebra, const CobarTripleElement& x);

// tau on the non-unital bar construction: [a] -> a, other lengths -> 0.
Element bar_twisting_cochain(const BarWord& w);
// tau on the non-counital cobar construction: c -> <c>.
Element cobar_twisting_cochain(int c);

struct CobarFreeModel {
  FreeModelFiltration filtration;            // greedy filtration of Omega-bar C
  std::vector<std::vector<int>> kernel_stages;  // generators killed by the k-th reduced iterate
  bool tilde_matches = false;                // Omega~ C equals tilde_A(Omega-bar C) on generators
  std::vector<int> mismatches;
};

CobarFreeModel cobar_free_model(const DGCoalgebra& coalgebra, int bound);

// sigma_C : C -> B-bar(Omega-bar C); the unit goes to the empty word.
BarElement sigma_C(const DGCoalgebra& coalgebra, int c);
BarElement sigma_C(const DGCoalgebra& coalgebra, const Linear<int>& x);

// Pi : B(A;A;A) -> K~_A and its section A (x) sigma_C (x) A for A = Omega-bar C.
TripleElement Pi(const FreeDGA& algebra, const TwoSidedWord& w);
TripleElement Pi(const FreeDGA& algebra, const TwoSidedElement& x);
TwoSidedElement nabla_infty(const DGCoalgebra& coalgebra, const Triple& t);
TwoSidedElement nabla_infty(const DGCoalgebra& coalgebra, const TripleElement& x);

// alpha (x) v (x) beta -> alpha v beta.
Word universal_coderivation(const Word& alpha, int v, const Word& beta);

}  // namespace hochlab
