#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hochlab/graded.hpp"

namespace hochlab {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoalgebraGenerator {
  std::string name;
  int degree = 0;
};

// Finite-type supplemented DG coalgebra C = k + C-bar.  Basis index 0 is the
// coaugmentation 1_C; indices 1..m are the generators of the supplement.
// Only the reduced diagonal is stored.
class DGCoalgebra {
 public:
  enum class Case { I, II };

  DGCoalgebra(std::vector<CoalgebraGenerator> generators, Case kind,
              std::vector<std::vector<DiagonalTerm>> reduced_diagonal,
              std::vector<Linear<int>> differential, std::string scalars = "Q");

  static DGCoalgebra from_json(const nlohmann::json& doc);
  static DGCoalgebra load(const std::string& path);
  nlohmann::json to_json() const;

  int size() const { return static_cast<int>(degrees_.size()); }
  int degree(int i) const { return degrees_.at(i); }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& name) const;
  int max_degree() const;
  Case kind() const { return kind_; }
  const std::string& scalars() const { return scalars_; }

  const std::vector<DiagonalTerm>& reduced_diagonal(int i) const { return reduced_.at(i); }
  // c (x) 1 + 1 (x) c + reduced part, and 1 (x) 1 on the unit.
  std::vector<DiagonalTerm> diagonal(int i) const;
  const Linear<int>& differential(int i) const { return differential_.at(i); }
  bool has_zero_differential() const;

  GradedModule module() const;
  CoalgebraTable table() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<std::vector<DiagonalTerm>> reduced_;
  std::vector<Linear<int>> differential_;
  Case kind_;
  std::string scalars_;
};

struct LawCheck {
  std::string law;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<LawCheck> checks;
  bool ok() const;
  nlohmann::json to_json() const;
};

ValidationReport validate(const DGCoalgebra& coalgebra);

// Iterated reduced diagonal as a combination of tensor words of length k+1.
// refine_left chooses which tensor factor is split at each step.
Linear<Word> reduced_diagonal_iterate(const DGCoalgebra& coalgebra, const Linear<int>& c, int k,
                                      bool refine_left = true);

struct ConilpotencyResult {
  enum class Status { Conilpotent, Counterexample, Inconclusive };
  Status status = Status::Conilpotent;
  std::vector<int> order;  // per generator index (0 unused): smallest k with iterate zero
  int witness = -1;
};

ConilpotencyResult check_conilpotent(const DGCoalgebra& coalgebra, int bound);

// The dual algebra.  Basis words are Word{i} for the dual of basis element i.
class DualAlgebra : public Algebra {
 public:
  explicit DualAlgebra(const DGCoalgebra& coalgebra);

  int degree(const Word& basis) const override;
  int weight(const Word& basis) const override;
  Element multiply(const Word& a, const Word& b) const override;
  Element differential(const Word& a) const override;
  Word unit() const override { return Word{0}; }
  std::vector<Word> basis(int degree, const BasisBounds& bounds) const override;
  std::string label(const Word& basis) const override;

  using Algebra::degree;
  using Algebra::differential;
  using Algebra::multiply;

  const DGCoalgebra& coalgebra() const { return *coalgebra_; }
  std::vector<Word> augmentation_basis() const;

 private:
  const DGCoalgebra* coalgebra_;
  std::vector<std::vector<Element>> products_;
  std::vector<Element> differentials_;
};

}  // namespace hochlab
