#pragma once

#include <climits>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "hochlab/cochains.hpp"
#include "hochlab/graded.hpp"

namespace hochlab {

struct Generator {
  int id = 0;
  std::string name;
  int degree = 0;
  int weight = 0;
};

// Tensor algebra T(V) with a differential given on generators.  Basis words
// are sequences of generator ids, the unit is the empty word.
class FreeDGA : public Algebra {
 public:
  FreeDGA(std::vector<Generator> generators, std::map<int, Element> differential,
          std::string name = "TV");
  FreeDGA(const FreeDGA& other);

  int degree(const Word& basis) const override;
  int weight(const Word& basis) const override;
  Element multiply(const Word& a, const Word& b) const override { return Element(concat(a, b)); }
  Element differential(const Word& a) const override;
  Word unit() const override { return {}; }
  std::vector<Word> basis(int degree, const BasisBounds& bounds) const override;
  std::string label(const Word& basis) const override;

  using Algebra::degree;
  using Algebra::differential;
  using Algebra::multiply;

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(int id) const;
  bool has_generator(int id) const { return index_.count(id) > 0; }
  const Element& generator_differential(int id) const;
  int min_id() const;

  // Set when this algebra was produced by tilde_A.
  std::optional<int> epsilon() const { return epsilon_; }
  void set_epsilon(int id) { epsilon_ = id; }

 private:
  std::string name_;
  std::vector<Generator> generators_;
  std::map<int, std::size_t> index_;
  std::map<int, Element> differential_;
  std::optional<int> epsilon_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::tuple<int, int, int>, std::vector<Word>> basis_cache_;
};

// Checks that d squares to zero on every generator.
bool differential_squares_to_zero(const FreeDGA& algebra);

// Derivation of a free algebra, stored by its values on generators.
class Derivation {
 public:
  Derivation(const FreeDGA& base, int degree, std::map<int, Element> values = {});

  const FreeDGA& base() const { return *base_; }
  int degree() const { return degree_; }
  const Element& value(int generator) const;
  const std::map<int, Element>& values() const { return values_; }

  Element operator()(const Word& w) const;
  Element operator()(const Element& x) const;

  friend bool operator==(const Derivation& a, const Derivation& b);
  friend Derivation operator+(const Derivation& a, const Derivation& b);
  Derivation scaled(const Scalar& c) const;

 private:
  const FreeDGA* base_;
  int degree_;
  std::map<int, Element> values_;
};

// Extends generator values by the Leibniz rule; rejects inhomogeneous values.
Derivation extend_derivation(const FreeDGA& base, std::map<int, Element> values, int degree);
Derivation algebra_differential(const FreeDGA& base);
Derivation derivation_bracket(const Derivation& a, const Derivation& b);
// D(theta) = [d, theta].
Derivation derivation_differential(const Derivation& theta);
// ad_x(y) = xy - (-1)^{|x||y|} yx.
Derivation ad(const FreeDGA& base, const Element& x, int degree);

// theta + sx with |theta| = |sx| = |x| + 1.
struct ExtendedDerivation {
  Derivation theta;
  Element x;

  int degree() const { return theta.degree(); }
  friend bool operator==(const ExtendedDerivation& a, const ExtendedDerivation& b) {
    return a.theta == b.theta && a.x == b.x;
  }
};

ExtendedDerivation tilde_D(const ExtendedDerivation& xi);
ExtendedDerivation ext_bracket(const ExtendedDerivation& a, const ExtendedDerivation& b);

// T(V + k epsilon) with |epsilon| = -1, d(epsilon) = epsilon^2 and
// d(v) = dv + epsilon v - (-1)^{|v|} v epsilon.  Epsilon takes the id just
// below the smallest generator id.
FreeDGA tilde_A(const FreeDGA& algebra);

struct FreeModelFiltration {
  bool ok = false;
  std::vector<std::vector<int>> stages;  // generator ids in V(0), V(1), ...
  std::vector<int> witness;              // generators never absorbed
};

FreeModelFiltration check_free_model(const FreeDGA& algebra, int bound);

// Elements of A (x) (k + sV) (x) A.  The middle slot holds a generator id, or
// kScalarSlot for the summand k.
constexpr int kScalarSlot = INT_MIN;
using Triple = std::tuple<Word, int, Word>;
using TripleElement = Linear<Triple>;

TripleElement universal_derivation(const FreeDGA& algebra, const Word& w);       // S_V, degree 0
TripleElement universal_derivation_bar(const FreeDGA& algebra, const Word& w);   // S-bar_V, degree 1
TripleElement universal_derivation_bar(const FreeDGA& algebra, const Element& x);

class BimoduleResolution {
 public:
  enum class Kind { K, KTilde };
  BimoduleResolution(const FreeDGA& algebra, Kind kind) : algebra_(&algebra), kind_(kind) {}

  Kind kind() const { return kind_; }
  int degree(const Triple& t) const;
  TripleElement differential(const Triple& t) const;
  TripleElement differential(const TripleElement& x) const;
  // Basis triples of the given degree with all words of length <= max_length.
  std::vector<Triple> basis(int degree, const BasisBounds& bounds) const;

 private:
  const FreeDGA* algebra_;
  Kind kind_;
};

// A bimodule map out of K or K-tilde, stored by its values on 1 (x) sv (x) 1
// and on 1 (x) 1_k (x) 1.
struct MiddleMap {
  int degree = 0;
  std::map<int, Element> on_generators;
  Element on_scalar;
};

Element evaluate_middle_map(const FreeDGA& algebra, const MiddleMap& y, const TripleElement& x);

Derivation alpha_A(const FreeDGA& algebra, const MiddleMap& y);
ExtendedDerivation alpha_tilde_A(const FreeDGA& algebra, const MiddleMap& y);
// phi given on the generators sv.
Derivation gamma_sV(const FreeDGA& algebra, const std::map<int, Element>& phi, int degree);

AlgebraCochain i_A(const ExtendedDerivation& xi);
Derivation j_A(const FreeDGA& tilde, const ExtendedDerivation& xi);

}  // namespace hochlab
