#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hochlab/hh.hpp"

namespace hochlab {

// Cup product and bracket on a homology window, in a chosen basis per degree.
// A product landing outside the window is reported as nullopt and skipped.
struct HomologyOperations {
  std::map<int, int> dims;  // degree -> dimension of the homology
  // Coordinates of x_i * y_j in degree n + m, for x_i in degree n and y_j in degree m.
  std::function<std::optional<SparseVector>(int n, int i, int m, int j)> cup;
  // Coordinates of {x_i, y_j} in degree n + m + 1.
  std::function<std::optional<SparseVector>(int n, int i, int m, int j)> bracket;
};

struct GerstenhaberReport {
  struct Law {
    std::string name;
    long instances = 0;
    long failures = 0;
    std::string witness;  // first failing instance
  };
  std::vector<Law> laws;

  bool ok() const;
  std::string summary() const;
};

// Graded commutativity of the cup product, antisymmetry and Jacobi for the
// bracket of degree +1, and the derivation law, on all basis pairs and triples.
GerstenhaberReport verify_gerstenhaber(const HomologyOperations& ops);

// Operations on the homology of a finite cochain window in degrees
// (w.lo, w.hi), computed from representatives.  The window and the algebra
// must outlive the result.
HomologyOperations window_operations(const AlgebraCochainWindow& w, const Algebra& algebra);

}  // namespace hochlab
