#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hochlab/graded.hpp"

namespace hochlab {

// Raised when a value outside a finite window would be needed.
class SaturationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int bar_degree(const Algebra& algebra, const BarWord& w);
std::string format_bar_word(const Algebra& algebra, const BarWord& w);

// Hochschild cochain on the algebra side: a homogeneous linear map from the
// tensor coalgebra on sA to a coefficient algebra, given by its value on bar
// words.
class AlgebraCochain {
 public:
  using Rule = std::function<Element(const BarWord&)>;

  AlgebraCochain() = default;
  AlgebraCochain(int degree, Rule rule) : degree_(degree), rule_(std::move(rule)) {}

  static AlgebraCochain zero(int degree);
  // Values outside `inside` raise SaturationError; inside but absent means 0.
  static AlgebraCochain from_table(int degree, std::map<BarWord, Element> table,
                                   std::function<bool(const BarWord&)> inside);

  int degree() const { return degree_; }
  Element operator()(const BarWord& w) const { return rule_ ? rule_(w) : Element(); }
  Element apply(const BarElement& x) const;

  // Same map, with values cached behind a mutex.
  AlgebraCochain memoized() const;

 private:
  int degree_ = 0;
  Rule rule_;
};

// Hochschild cochain on the coalgebra side, indexed by the basis of C.
struct CoalgebraCochain {
  int degree = 0;
  std::vector<Element> values;

  const Element& operator()(int c) const { return values.at(c); }
  friend bool operator==(const CoalgebraCochain& a, const CoalgebraCochain& b) {
    return a.degree == b.degree && a.values == b.values;
  }
};

// Deterministic pseudo-random cochain: the value on each bar word is drawn
// from a generator seeded by (seed, word).
AlgebraCochain random_algebra_cochain(const Algebra& values, const Algebra& source, int degree,
                                      std::uint64_t seed, const BasisBounds& bounds,
                                      int density_percent = 60);

std::uint64_t hash_bar_word(std::uint64_t seed, const BarWord& w);

}  // namespace hochlab
