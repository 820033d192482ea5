#pragma once

#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hochlab/comparison.hpp"
#include "hochlab/homology.hpp"

namespace hochlab {

// A complex of cochains: finitely many sources, each with a degree and a
// level; in degree n a cochain assigns to a source s a value of degree
// |s| + n in `values`, and the differential is given by term lists.
struct CochainDescriptor {
  std::string name;
  const Algebra* values = nullptr;
  FilteredComplex::Kind kind = FilteredComplex::Kind::Quotient;
  std::vector<int> source_degree;
  std::vector<int> source_level;
  std::function<std::vector<CochainTerm<int>>(int source, int n)> terms;
  // Value words allowed at a source in cochain degree n.
  std::function<std::vector<Word>(int source, int n)> value_basis;
  // Level of a basis element; defaults to the source level.
  std::function<int(int source, const Word& value, int n)> level;
  // When set, value words missing from the window span a subcomplex and the
  // window is the quotient by it; otherwise a missing word is a saturation.
  bool quotient_values = false;
};

class CochainWindow {
 public:
  CochainWindow(CochainDescriptor descriptor, int lo, int hi);

  const CochainDescriptor& descriptor() const { return descriptor_; }
  const FilteredComplex& complex() const { return complex_; }
  const ComplexWindow& window() const { return complex_.full; }
  int lo() const { return complex_.full.lo; }
  int hi() const { return complex_.full.hi; }
  int sources() const { return static_cast<int>(descriptor_.source_degree.size()); }

  int dim(int n) const { return complex_.full.dim(n); }
  const std::pair<int, Word>& basis_element(int n, int i) const { return basis_.at(n).at(i); }
  int index(int n, int source, const Word& value) const;

  // Coordinates of the cochain s -> f(s); throws SaturationError when a
  // value word is not in the window.
  SparseVector vector(int n, const std::function<Element(int)>& f) const;
  // Values of a vector, by source.
  std::map<int, Element> values(int n, const SparseVector& v) const;

 private:
  CochainDescriptor descriptor_;
  FilteredComplex complex_;
  std::map<int, std::vector<std::pair<int, Word>>> basis_;
  std::map<int, std::vector<std::map<Word, int>>> index_;
};

// ---- algebra side: C*(A; B) along an algebra map A -> B -------------------

struct AlgebraWindowParams {
  int lo = 0;
  int hi = 0;
  bool normalized = true;
  enum class Level { SourceDegree, Length } level = Level::SourceDegree;
  int max_level = 0;
  // Degree range in which the coefficient algebra has a basis.
  int value_min = INT_MIN;
  int value_max = INT_MAX;
  // Letters are basis elements of A of these degrees.
  int letter_min = 0;
  int letter_max = 0;
  BasisBounds letter_bounds;
  BasisBounds value_bounds;
  // Treat value_bounds.max_length as a quotient by longer values (valid when
  // the value algebra never shortens words).
  bool value_length_quotient = false;
};

struct AlgebraCochainWindow {
  AlgebraMap coefficients;
  bool normalized = true;
  int value_min = INT_MIN;
  int value_max = INT_MAX;
  std::vector<BarWord> words;
  std::map<BarWord, int> index;
  std::unique_ptr<CochainWindow> window;

  int source_index(const BarWord& w) const;
  SparseVector vector(int n, const AlgebraCochain& f) const;
  // Cochain defined on every source of level <= max_level; saturation outside.
  AlgebraCochain cochain(int n, const SparseVector& v, int max_level = INT_MAX) const;
};

AlgebraCochainWindow algebra_window(const AlgebraMap& coefficients, const AlgebraWindowParams& params);

// ---- coalgebra side: C*(C; C) with values in Omega-bar C or Omega~ C --------

struct CoalgebraCochainWindow {
  const DGCoalgebra* coalgebra = nullptr;
  const FreeDGA* values = nullptr;
  bool normalized = true;
  std::unique_ptr<CochainWindow> window;

  SparseVector vector(int n, const CoalgebraCochain& f) const;
  CoalgebraCochain cochain(int n, const SparseVector& v) const;
};

// Normalized complex: values in Omega-bar C, finite in each degree.
CoalgebraCochainWindow normalized_coalgebra_window(const DGCoalgebra& c, const FreeDGA& bar, int lo, int hi);
// Values in Omega~ C; subcomplex windows of level len(value) + n <= max_level.
CoalgebraCochainWindow coalgebra_window(const DGCoalgebra& c, const FreeDGA& tilde, int lo, int hi, int max_level);
// Values in Omega~ C of length <= max_length, as the quotient by longer values.
CoalgebraCochainWindow coalgebra_window_quotient(const DGCoalgebra& c, const FreeDGA& tilde, int lo, int hi,
                                                 int max_length);

// ---- derivations ------------------------------------------------------------

struct DerivationWindow {
  const FreeDGA* algebra = nullptr;
  bool extended = false;            // ~Der A = Der A + sA, the last source being sA
  std::vector<int> generator_ids;   // source index -> generator id
  std::unique_ptr<CochainWindow> window;

  SparseVector vector(int n, const Derivation& theta) const;
  SparseVector vector(int n, const ExtendedDerivation& xi) const;
  Derivation derivation(int n, const SparseVector& v) const;
  ExtendedDerivation extended_derivation(int n, const SparseVector& v) const;
};

// Der A or ~Der A for a free algebra with generators of positive degree.
DerivationWindow derivation_window(const FreeDGA& algebra, bool extended, int lo, int hi);
// Der of an algebra with generators of non-positive degree (such as A~),
// subcomplex windows of level len(value) + n <= max_level.
DerivationWindow derivation_window(const FreeDGA& algebra, int lo, int hi, int max_level);
// Der of such an algebra with values of length <= max_length, as the quotient
// by longer values.
DerivationWindow derivation_window_quotient(const FreeDGA& algebra, int lo, int hi, int max_length);

}  // namespace hochlab
