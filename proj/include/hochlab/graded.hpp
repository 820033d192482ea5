#pragma once

#include <climits>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hochlab/linear.hpp"

namespace hochlab {

class GradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sign of the graded permutation taking `source` (label, degree) to the
// order listed in `target`, computed by bubble reordering.
int koszul_sign(const std::vector<std::pair<std::string, int>>& source,
                const std::vector<std::string>& target);
// Same, with the permutation given as the source indices in target order.
int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& order);

struct GradedModule {
  std::vector<std::string> names;
  std::vector<int> degrees;

  std::size_t size() const { return degrees.size(); }
  std::optional<int> degree(const Linear<int>& x) const;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

// (s^k V)_n = V_{n-k}.  Names are prefixed by the suspension power.
GradedModule suspend(const GradedModule& module, int k);

struct GradedMap {
  ModulePtr source;
  ModulePtr target;
  int degree = 0;
  std::vector<Linear<int>> columns;  // image of each source basis vector

  static GradedMap zero(ModulePtr source, ModulePtr target, int degree);
  static GradedMap identity(ModulePtr module);

  Linear<int> apply(const Linear<int>& x) const;
  bool homogeneous() const;
  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.degree == b.degree && a.columns == b.columns;
  }
};

GradedMap compose(const GradedMap& f, const GradedMap& g);  // f after g
GradedMap add_maps(const GradedMap& f, const GradedMap& g, const Scalar& factor = 1);

// Df = d_tgt o f - (-1)^{|f|} f o d_src.
GradedMap hom_differential(const GradedMap& f, const GradedMap& d_src, const GradedMap& d_tgt);

// [f,g] = f o g - (-1)^{|f||g|} g o f.
GradedMap commutator(const GradedMap& f, const GradedMap& g);

struct DiagonalTerm {
  int left;
  int right;
  Scalar coeff;
};

// Full diagonal of a finite coalgebra, indexed like its module.
struct CoalgebraTable {
  ModulePtr module;
  std::vector<std::vector<DiagonalTerm>> diagonal;
};

struct AlgebraTable {
  ModulePtr module;
  std::function<Linear<int>(int, int)> product;
  int unit = 0;
};

// f u g = mu o (f (x) g) o Delta with the Koszul rule on (f (x) g).
GradedMap cup_product(const GradedMap& f, const GradedMap& g, const CoalgebraTable& coalgebra,
                      const AlgebraTable& algebra);

struct BasisBounds {
  int max_length = 8;
  int max_weight = INT_MAX;
};

// Graded algebra whose basis elements are encoded as words.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual int degree(const Word& basis) const = 0;
  virtual int weight(const Word&) const { return 0; }
  virtual Element multiply(const Word& a, const Word& b) const = 0;
  virtual Element differential(const Word& a) const = 0;
  virtual Word unit() const = 0;
  virtual std::vector<Word> basis(int degree, const BasisBounds& bounds) const = 0;
  virtual std::string label(const Word& basis) const = 0;
  virtual int length(const Word& basis) const { return static_cast<int>(basis.size()); }

  Element multiply(const Element& x, const Element& y) const;
  Element differential(const Element& x) const;
  std::optional<int> degree(const Element& x) const;
  bool is_unit(const Word& basis) const { return basis == unit(); }
  std::string format(const Element& x) const;
};

}  // namespace hochlab
