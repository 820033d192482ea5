#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hochlab/comparison.hpp"

namespace hochlab::testing {

inline const std::vector<std::string>& catalogue_names() {
  static const std::vector<std::string> names{"sphere2", "sphere3", "projplane", "acyclic23", "product"};
  return names;
}

inline DGCoalgebra load(const std::string& name) {
  return DGCoalgebra::load(std::string(HOCHLAB_CATALOGUE_DIR) + "/" + name + ".json");
}

// A coalgebra with the algebras built from it, kept together so the raw
// pointers inside them stay valid.
struct Fixture {
  explicit Fixture(const std::string& name)
      : coalgebra(load(name)), dual(coalgebra), bar(omega_bar(coalgebra)), tilde(omega_tilde(coalgebra)) {}
  DGCoalgebra coalgebra;
  DualAlgebra dual;
  FreeDGA bar;
  FreeDGA tilde;
};

inline std::unique_ptr<Fixture> fixture(const std::string& name) { return std::make_unique<Fixture>(name); }

inline void extend_words(const std::vector<Word>& letters, std::size_t max_length, BarWord& prefix,
                         std::vector<BarWord>& out) {
  out.push_back(prefix);
  if (prefix.size() == max_length) return;
  for (const auto& a : letters) {
    prefix.push_back(a);
    extend_words(letters, max_length, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<BarWord> bar_words(const std::vector<Word>& letters, std::size_t max_length) {
  std::vector<BarWord> out;
  BarWord prefix;
  extend_words(letters, max_length, prefix, out);
  return out;
}

inline std::vector<Word> dual_letters(const DGCoalgebra& C) {
  std::vector<Word> out;
  for (int c = 0; c < C.size(); ++c) out.push_back(Word{c});
  return out;
}

inline std::vector<Word> cobar_letters(const FreeDGA& A, int max_degree, std::size_t limit) {
  std::vector<Word> out;
  BasisBounds bounds;
  bounds.max_length = 4;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& w : A.basis(d, bounds)) out.push_back(w);
  if (out.size() > limit) out.resize(limit);
  return out;
}

inline bool agree(const AlgebraCochain& f, const AlgebraCochain& g, const std::vector<BarWord>& words) {
  for (const auto& w : words)
    if (f(w) != g(w)) return false;
  return true;
}

inline AlgebraCochain negated(const AlgebraCochain& f) {
  return AlgebraCochain(f.degree(), [f](const BarWord& w) { return f(w).scaled(-1); });
}

inline Element random_element(const Algebra& A, int degree, const BasisBounds& bounds, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element out;
  for (const auto& b : A.basis(degree, bounds))
    if (coin(rng) < 60) out.add(b, coeff(rng));
  return out;
}

inline ExtendedDerivation random_extended_derivation(const FreeDGA& A, int degree, std::mt19937_64& rng) {
  BasisBounds bounds;
  bounds.max_length = 4;
  std::map<int, Element> values;
  for (const auto& g : A.generators()) values[g.id] = random_element(A, g.degree + degree, bounds, rng);
  return {Derivation(A, degree, std::move(values)), random_element(A, degree - 1, bounds, rng)};
}

}  // namespace hochlab::testing
