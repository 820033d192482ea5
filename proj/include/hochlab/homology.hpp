#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hochlab/sparse.hpp"

namespace hochlab {

// Finite piece of a chain complex with differential of degree -1.  Degrees
// lo..hi carry a basis; d[n] : C_n -> C_{n-1} is stored for lo < n <= hi.
struct ComplexWindow {
  int lo = 0;
  int hi = -1;
  std::map<int, int> dims;
  std::map<int, SparseMatrix> d;

  int dim(int n) const;
  // Zero matrix when d[n] is not stored.
  SparseMatrix differential(int n) const;
  bool interior(int n) const { return lo < n && n < hi; }
  // Degrees n with d[n-1] o d[n] != 0.
  std::vector<int> square_failures() const;
};

class Homology {
 public:
  // out = d_n : C_n -> C_{n-1},  in = d_{n+1} : C_{n+1} -> C_n.
  Homology(const SparseMatrix& out, const SparseMatrix& in, int dimension);

  int dimension() const { return static_cast<int>(representatives_.size()); }
  int cycles() const { return cycles_; }
  int boundaries() const { return boundaries_; }
  int components() const { return components_; }
  const std::vector<SparseVector>& representatives() const { return representatives_; }

  bool is_cycle(const SparseVector& v) const;
  // Coordinates of the class of a cycle in the representative basis.
  std::optional<SparseVector> coordinates(const SparseVector& cycle) const;

 private:
  SparseMatrix out_;
  int cycles_ = 0;
  int boundaries_ = 0;
  int components_ = 0;
  std::vector<SparseVector> representatives_;
  Echelon echelon_;  // boundaries (untagged) followed by representatives
};

Homology homology(const ComplexWindow& w, int n);

// A window together with a filtration level for every basis element.
// Quotient windows X_l keep the elements of level <= l and form an inverse
// system under projection; subcomplex windows form a direct system under
// inclusion.
struct FilteredComplex {
  enum class Kind { Quotient, Subcomplex };
  Kind kind = Kind::Quotient;
  ComplexWindow full;
  std::map<int, std::vector<int>> levels;

  int max_level() const;
  // Window X_l and, per degree, the kept indices of the full window.
  ComplexWindow restrict(int level, std::map<int, std::vector<int>>* kept = nullptr) const;
};

// Vector of the full window -> vector of X_l (coordinates outside X_l dropped).
SparseVector project(const SparseVector& v, const std::vector<int>& kept);
// Vector of X_l -> vector of the full window.
SparseVector embed(const SparseVector& v, const std::vector<int>& kept);

// A subspace of the homology of some window with a chosen basis.
struct ClassBasis {
  std::vector<SparseVector> representatives;  // cycles, coordinates of the full window
  std::vector<SparseVector> coordinates;      // in the reference homology
  int reference_dimension = 0;
  Echelon span;                               // coordinates, tagged by basis index

  // Expresses reference coordinates in this basis; nullopt when outside the span.
  std::optional<SparseVector> solve(const SparseVector& reference_coordinates) const;
  int dimension() const { return static_cast<int>(representatives.size()); }
};

// The stable classes of a filtered complex in degree n between levels l and
// l2 > l: the image of H(X_l2) -> H(X_l) for quotient windows and of
// H(X_l) -> H(X_l2) for subcomplex windows.  The reference homology is that of
// X_l (quotient) or X_l2 (subcomplex).
struct StableClasses {
  int degree = 0;
  int level = 0;
  int level2 = 0;
  FilteredComplex::Kind kind = FilteredComplex::Kind::Quotient;
  ClassBasis basis;
  std::vector<int> reference_kept;  // kept indices of the reference window
  int reference_betti = 0;

  int dimension() const { return basis.dimension(); }
  // Reference coordinates of a cycle of the full window; nullopt if not a cycle there.
  std::optional<SparseVector> reference_coordinates(const SparseVector& full_cycle) const;
  std::optional<Homology> reference;
};

StableClasses stable_classes(const FilteredComplex& c, int n, int level, int level2);

// Stable classes between level and level + 2 delta, together with the
// dimension obtained between level and level + delta.  Ranks are trusted when
// the two agree.
struct Stabilized {
  StableClasses classes;
  int near_dimension = 0;
  bool stable() const { return near_dimension == classes.dimension(); }
};
Stabilized stabilized_classes(const FilteredComplex& c, int n, int level, int delta);

// Every class of a finite window in degree n, as a ClassBasis of its own homology.
StableClasses all_classes(const ComplexWindow& w, int n);

struct InducedMap {
  int degree = 0;
  int source_dimension = 0;
  int target_dimension = 0;
  int rank = 0;
  std::vector<SparseVector> columns;  // target coordinates of each source basis class
  bool outside_target = false;        // some image left the target class span
  bool injective() const { return !outside_target && rank == source_dimension; }
  bool surjective() const { return !outside_target && rank == target_dimension; }
  bool isomorphism() const { return injective() && surjective(); }
  std::string verdict() const;
};

// image(i) is the full-window cycle of the target assigned to source basis class i.
InducedMap induced_map(const StableClasses& source, const StableClasses& target,
                       const std::vector<SparseVector>& images);

}  // namespace hochlab
