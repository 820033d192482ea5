#include "hochlab/coalgebra.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hochlab {

namespace {

Scalar json_scalar(const nlohmann::json& value) {
  if (value.is_string()) return parse_scalar(value.get<std::string>());
  if (value.is_number_integer()) return Scalar(value.get<long>());
  throw ParseError("coefficient must be an integer or a rational string");
}

nlohmann::json scalar_json(const Scalar& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) return value.get_num().get_si();
  return value.get_str();
}

Linear<Word> diagonal_word(const DGCoalgebra& c, int i) {
  Linear<Word> out;
  for (const auto& t : c.diagonal(i)) out.add(Word{t.left, t.right}, t.coeff);
  return out;
}

}  // namespace

DGCoalgebra::DGCoalgebra(std::vector<CoalgebraGenerator> generators, Case kind,
                         std::vector<std::vector<DiagonalTerm>> reduced_diagonal,
                         std::vector<Linear<int>> differential, std::string scalars)
    : kind_(kind), scalars_(std::move(scalars)) {
  names_.push_back("1");
  degrees_.push_back(0);
  for (auto& g : generators) {
    names_.push_back(g.name);
    degrees_.push_back(g.degree);
  }
  reduced_ = std::move(reduced_diagonal);
  differential_ = std::move(differential);
  reduced_.resize(names_.size());
  differential_.resize(names_.size());
}

DGCoalgebra DGCoalgebra::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("coalgebra document must be a JSON object");
  std::string scalars = doc.value("scalars", std::string("Q"));
  if (scalars != "Q" && scalars != "Fp" && scalars != "Z")
    throw ParseError("unknown scalars '" + scalars + "'");
  Case kind = Case::II;
  if (doc.contains("case")) {
    std::string text = doc.at("case").get<std::string>();
    if (text == "i") kind = Case::I;
    else if (text != "ii") throw ParseError("case must be \"i\" or \"ii\"");
  }
  if (!doc.contains("generators") || !doc.at("generators").is_array())
    throw ParseError("missing generator list");

  std::vector<CoalgebraGenerator> generators;
  std::map<std::string, int> index;
  for (const auto& g : doc.at("generators")) {
    CoalgebraGenerator gen{g.at("name").get<std::string>(), g.at("degree").get<int>()};
    if (gen.name == "1") throw ParseError("generator name '1' is reserved for the unit");
    if (!index.emplace(gen.name, static_cast<int>(generators.size()) + 1).second)
      throw ParseError("duplicate generator '" + gen.name + "'");
    generators.push_back(gen);
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError("unknown generator '" + name + "'");
    return it->second;
  };

  std::vector<std::vector<DiagonalTerm>> reduced(generators.size() + 1);
  for (const auto& entry : doc.value("diagonal", nlohmann::json::array())) {
    int on = lookup(entry.at("on").get<std::string>());
    for (const auto& term : entry.at("terms")) {
      reduced[on].push_back({lookup(term.at("left").get<std::string>()),
                             lookup(term.at("right").get<std::string>()),
                             json_scalar(term.value("coeff", nlohmann::json(1)))});
    }
  }
  std::vector<Linear<int>> differential(generators.size() + 1);
  for (const auto& entry : doc.value("differential", nlohmann::json::array())) {
    int on = lookup(entry.at("on").get<std::string>());
    for (const auto& term : entry.at("value")) {
      const auto& word = term.at("word");
      if (word.size() != 1) throw ParseError("differential values must be single generators");
      differential[on].add(lookup(word.at(0).get<std::string>()),
                           json_scalar(term.value("coeff", nlohmann::json(1))));
    }
  }
  return DGCoalgebra(std::move(generators), kind, std::move(reduced), std::move(differential),
                     scalars);
}

DGCoalgebra DGCoalgebra::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

nlohmann::json DGCoalgebra::to_json() const {
  nlohmann::json doc;
  doc["scalars"] = scalars_;
  doc["case"] = kind_ == Case::I ? "i" : "ii";
  doc["generators"] = nlohmann::json::array();
  doc["diagonal"] = nlohmann::json::array();
  doc["differential"] = nlohmann::json::array();
  for (int i = 1; i < size(); ++i) {
    doc["generators"].push_back({{"name", names_[i]}, {"degree", degrees_[i]}});
    if (!reduced_[i].empty()) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : reduced_[i])
        terms.push_back({{"left", names_[t.left]}, {"right", names_[t.right]}, {"coeff", scalar_json(t.coeff)}});
      doc["diagonal"].push_back({{"on", names_[i]}, {"terms", terms}});
    }
    if (!differential_[i].empty()) {
      nlohmann::json value = nlohmann::json::array();
      for (const auto& [j, c] : differential_[i])
        value.push_back({{"word", {names_[j]}}, {"coeff", scalar_json(c)}});
      doc["differential"].push_back({{"on", names_[i]}, {"value", value}});
    }
  }
  return doc;
}

int DGCoalgebra::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw ParseError("unknown generator '" + name + "'");
}

int DGCoalgebra::max_degree() const {
  int m = 0;
  for (int d : degrees_) m = std::max(m, d);
  return m;
}

std::vector<DiagonalTerm> DGCoalgebra::diagonal(int i) const {
  if (i == 0) return {{0, 0, Scalar(1)}};
  std::vector<DiagonalTerm> out{{i, 0, Scalar(1)}, {0, i, Scalar(1)}};
  out.insert(out.end(), reduced_.at(i).begin(), reduced_.at(i).end());
  return out;
}

bool DGCoalgebra::has_zero_differential() const {
  for (const auto& d : differential_)
    if (!d.empty()) return false;
  return true;
}

GradedModule DGCoalgebra::module() const { return GradedModule{names_, degrees_}; }

CoalgebraTable DGCoalgebra::table() const {
  CoalgebraTable t;
  t.module = std::make_shared<GradedModule>(module());
  for (int i = 0; i < size(); ++i) t.diagonal.push_back(diagonal(i));
  return t;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json row{{"law", c.law}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) row["witness"] = c.witness;
    out.push_back(row);
  }
  return out;
}

ValidationReport validate(const DGCoalgebra& c) {
  ValidationReport report;
  auto record = [&](const std::string& law, int witness) {
    report.checks.push_back({law, witness < 0, witness < 0 ? "" : c.name(witness)});
  };

  int bad = -1;
  for (int i = 1; i < c.size() && bad < 0; ++i) {
    if (c.kind() == DGCoalgebra::Case::II && c.degree(i) < 2) bad = i;
    if (c.kind() == DGCoalgebra::Case::I && c.degree(i) > 0) bad = i;
  }
  record(c.kind() == DGCoalgebra::Case::II ? "case-ii degrees >= 2" : "case-i degrees <= 0", bad);

  bad = -1;
  for (int i = 1; i < c.size() && bad < 0; ++i) {
    for (const auto& t : c.reduced_diagonal(i))
      if (t.left == 0 || t.right == 0 || c.degree(t.left) + c.degree(t.right) != c.degree(i)) bad = i;
    for (const auto& [j, coeff] : c.differential(i))
      if (j == 0 || c.degree(j) != c.degree(i) - 1) bad = i;
  }
  record("homogeneous structure constants", bad);

  bad = -1;
  for (int i = 0; i < c.size() && bad < 0; ++i) {
    Linear<Word> left, right;
    for (const auto& t : c.diagonal(i)) {
      for (const auto& s : c.diagonal(t.left)) left.add(Word{s.left, s.right, t.right}, t.coeff * s.coeff);
      for (const auto& s : c.diagonal(t.right)) right.add(Word{t.left, s.left, s.right}, t.coeff * s.coeff);
    }
    if (left != right) bad = i;
  }
  record("coassociativity", bad);

  bad = -1;
  for (int i = 0; i < c.size() && bad < 0; ++i) {
    Linear<int> left, right, self(i);
    for (const auto& t : c.diagonal(i)) {
      if (t.left == 0) left.add(t.right, t.coeff);
      if (t.right == 0) right.add(t.left, t.coeff);
    }
    if (left != self || right != self) bad = i;
  }
  record("counit", bad);

  bad = -1;
  for (int i = 0; i < c.size() && bad < 0; ++i) {
    Linear<Word> lhs, rhs;
    for (const auto& [j, coeff] : c.differential(i)) lhs.add(diagonal_word(c, j), coeff);
    for (const auto& t : c.diagonal(i)) {
      for (const auto& [j, coeff] : c.differential(t.left)) rhs.add(Word{j, t.right}, t.coeff * coeff);
      int sign = parity_sign(c.degree(t.left));
      for (const auto& [j, coeff] : c.differential(t.right)) rhs.add(Word{t.left, j}, t.coeff * coeff * sign);
    }
    if (lhs != rhs) bad = i;
  }
  record("coderivation", bad);

  bad = -1;
  for (int i = 0; i < c.size() && bad < 0; ++i) {
    Linear<int> dd;
    for (const auto& [j, coeff] : c.differential(i)) dd.add(c.differential(j), coeff);
    if (!dd.empty()) bad = i;
  }
  record("d^2 = 0", bad);
  return report;
}

Linear<Word> reduced_diagonal_iterate(const DGCoalgebra& c, const Linear<int>& x, int k, bool refine_left) {
  Linear<Word> current;
  for (const auto& [i, coeff] : x) current.add(Word{i}, coeff);
  for (int step = 0; step < k; ++step) {
    Linear<Word> next;
    for (const auto& [w, coeff] : current) {
      std::size_t pos = refine_left ? 0 : w.size() - 1;
      for (const auto& t : c.reduced_diagonal(w[pos])) {
        Word refined(w.begin(), w.begin() + pos);
        refined.push_back(t.left);
        refined.push_back(t.right);
        refined.insert(refined.end(), w.begin() + pos + 1, w.end());
        next.add(refined, coeff * t.coeff);
      }
    }
    current = std::move(next);
  }
  return current;
}

ConilpotencyResult check_conilpotent(const DGCoalgebra& c, int bound) {
  ConilpotencyResult result;
  result.order.assign(c.size(), 0);
  for (int i = 1; i < c.size(); ++i) {
    Linear<Word> current(Word{i});
    int k = 0;
    while (!current.empty() && k <= bound) {
      Linear<Word> next;
      for (const auto& [w, coeff] : current) {
        for (const auto& t : c.reduced_diagonal(w[0])) {
          Word refined{t.left, t.right};
          refined.insert(refined.end(), w.begin() + 1, w.end());
          next.add(refined, coeff * t.coeff);
        }
      }
      current = std::move(next);
      ++k;
    }
    if (!current.empty()) {
      result.status = ConilpotencyResult::Status::Inconclusive;
      // A degree-0 generator whose reduced diagonal reproduces itself on both
      // sides never dies.
      for (const auto& t : c.reduced_diagonal(i))
        if (t.left == i && t.right == i) result.status = ConilpotencyResult::Status::Counterexample;
      result.witness = i;
      return result;
    }
    result.order[i] = k;
  }
  return result;
}

DualAlgebra::DualAlgebra(const DGCoalgebra& coalgebra) : coalgebra_(&coalgebra) {
  int n = coalgebra.size();
  products_.assign(n, std::vector<Element>(n));
  differentials_.assign(n, Element());
  for (int k = 0; k < n; ++k) {
    for (const auto& t : coalgebra.diagonal(k)) {
      int sign = parity_sign(coalgebra.degree(t.left) * coalgebra.degree(t.right));
      products_[t.left][t.right].add(Word{k}, t.coeff * sign);
    }
    for (const auto& [i, coeff] : coalgebra.differential(k)) {
      differentials_[i].add(Word{k}, -coeff * parity_sign(-coalgebra.degree(i)));
    }
  }
}

int DualAlgebra::degree(const Word& basis) const { return -coalgebra_->degree(basis.at(0)); }

int DualAlgebra::weight(const Word& basis) const { return coalgebra_->degree(basis.at(0)); }

Element DualAlgebra::multiply(const Word& a, const Word& b) const {
  return products_.at(a.at(0)).at(b.at(0));
}

Element DualAlgebra::differential(const Word& a) const { return differentials_.at(a.at(0)); }

std::vector<Word> DualAlgebra::basis(int degree, const BasisBounds&) const {
  std::vector<Word> out;
  for (int i = 0; i < coalgebra_->size(); ++i)
    if (-coalgebra_->degree(i) == degree) out.push_back(Word{i});
  return out;
}

std::string DualAlgebra::label(const Word& basis) const {
  return basis.at(0) == 0 ? std::string("1") : coalgebra_->name(basis.at(0)) + "^v";
}

std::vector<Word> DualAlgebra::augmentation_basis() const {
  std::vector<Word> out;
  for (int i = 1; i < coalgebra_->size(); ++i) out.push_back(Word{i});
  return out;
}

}  // namespace hochlab
