#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hochlab/windows.hpp"

namespace hochlab {

// A catalogue coalgebra with the algebras built from it.  Instances are
// held by pointer since the algebras refer to the coalgebra.
struct Instance {
  std::string name;
  DGCoalgebra coalgebra;
  DualAlgebra dual;
  FreeDGA bar;
  FreeDGA tilde;
  FreeDGA bar_tilde;  // tilde_A of the cobar algebra

  Instance(std::string name, DGCoalgebra c);
  static std::unique_ptr<Instance> load(const std::string& directory, const std::string& name);
};

// Normalized C*(Omega-bar C; Omega-bar C) along `coefficients` (identity by
// default), degrees [lo, hi], quotient windows up to source bar degree max_level.
AlgebraCochainWindow cobar_hochschild_window(const Instance& inst, int lo, int hi, int max_level);
AlgebraCochainWindow cobar_hochschild_window(const AlgebraMap& coefficients, int lo, int hi, int max_level);
// Normalized C*(C^v; C^v) (finite) or the unnormalized complex in quotient
// windows by word length <= max_length.
AlgebraCochainWindow dual_hochschild_window(const Instance& inst, int lo, int hi, bool normalized,
                                            int max_length = 0);
// Normalized C*(A; B) along a map of dual algebras; letters of A lie in
// degrees [-letter_top, -1] and B in [-value_top, 0].
AlgebraCochainWindow dual_hochschild_window(const AlgebraMap& coefficients, int letter_top, int value_top, int lo,
                                            int hi);

enum class Side { Algebra, Coalgebra, Cobar, Dual };
Side parse_side(const std::string& name);

struct RankRow {
  int degree = 0;
  int rank = 0;
  int near_rank = 0;  // rank at the nearer truncation level
  bool stable = true;
};

struct RankTable {
  std::string complex;
  std::vector<int> dims;  // window dimensions, degrees lo..hi
  std::vector<RankRow> rows;
};

// Homology ranks on the interior degrees of [lo, hi].
// Algebra: normalized C*(Omega-bar C; Omega-bar C), levels N, N+1, N+2.
// Coalgebra: normalized C*(C; C), finite.
// Cobar: C*(C; C) with values in Omega~ C, levels L, L+1, L+2.
// Dual: normalized C*(C^v; C^v), finite.
// A nonzero prime computes ranks over F_p (coalgebra and dual sides only).
RankTable hh_ranks(const Instance& inst, Side side, int lo, int hi, int lmax, int ncap, std::uint32_t prime = 0);

// Images of the basis classes of `source` under a map of full-window vectors.
InducedMap map_on_classes(const StableClasses& source, const StableClasses& target,
                          const std::function<SparseVector(const SparseVector&)>& f);

}  // namespace hochlab
