#include "hochlab/graded.hpp"

#include <algorithm>
#include <sstream>

namespace hochlab {

Scalar parse_scalar(const std::string& text) {
  Scalar value;
  if (value.set_str(text, 10) != 0) throw GradingError("invalid scalar '" + text + "'");
  value.canonicalize();
  return value;
}

std::string scalar_string(const Scalar& value) { return value.get_str(); }

int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& order) {
  std::vector<int> current(degrees.size());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = static_cast<int>(i);
  std::vector<int> rank(degrees.size());
  for (std::size_t t = 0; t < order.size(); ++t) rank[order[t]] = static_cast<int>(t);
  int odd_swaps = 0;
  // Bubble the source sequence into target order, one adjacent swap at a time.
  for (std::size_t pass = 0; pass < current.size(); ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (rank[current[i]] > rank[current[i + 1]]) {
        if ((degrees[current[i]] & 1) && (degrees[current[i + 1]] & 1)) ++odd_swaps;
        std::swap(current[i], current[i + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return parity_sign(odd_swaps);
}

int koszul_sign(const std::vector<std::pair<std::string, int>>& source,
                const std::vector<std::string>& target) {
  if (source.size() != target.size())
    throw GradingError("koszul_sign: source and target have different lengths");
  std::vector<int> degrees;
  std::vector<bool> used(source.size(), false);
  std::vector<int> order;
  for (const auto& entry : source) degrees.push_back(entry.second);
  for (const auto& label : target) {
    int found = -1;
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (!used[i] && source[i].first == label) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) throw GradingError("koszul_sign: label '" + label + "' not in source");
    used[found] = true;
    order.push_back(found);
  }
  return koszul_sign(degrees, order);
}

std::optional<int> GradedModule::degree(const Linear<int>& x) const {
  std::optional<int> deg;
  for (const auto& [i, c] : x) {
    int d = degrees.at(i);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

GradedModule suspend(const GradedModule& module, int k) {
  GradedModule out;
  for (std::size_t i = 0; i < module.size(); ++i) {
    std::string prefix;
    if (k == 1) prefix = "s";
    else if (k == -1) prefix = "s^-1";
    else if (k != 0) prefix = "s^" + std::to_string(k);
    out.names.push_back(prefix + module.names[i]);
    out.degrees.push_back(module.degrees[i] + k);
  }
  return out;
}

GradedMap GradedMap::zero(ModulePtr source, ModulePtr target, int degree) {
  GradedMap f;
  f.columns.resize(source->size());
  f.source = std::move(source);
  f.target = std::move(target);
  f.degree = degree;
  return f;
}

GradedMap GradedMap::identity(ModulePtr module) {
  GradedMap f = zero(module, module, 0);
  for (std::size_t i = 0; i < module->size(); ++i) f.columns[i].add(static_cast<int>(i), 1);
  return f;
}

Linear<int> GradedMap::apply(const Linear<int>& x) const {
  Linear<int> out;
  for (const auto& [i, c] : x) out.add(columns.at(i), c);
  return out;
}

bool GradedMap::homogeneous() const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (const auto& [j, c] : columns[i]) {
      if (target->degrees.at(j) != source->degrees.at(i) + degree) return false;
    }
  }
  return true;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (g.target->size() != f.source->size()) throw GradingError("compose: module mismatch");
  GradedMap h = GradedMap::zero(g.source, f.target, f.degree + g.degree);
  for (std::size_t i = 0; i < g.columns.size(); ++i) h.columns[i] = f.apply(g.columns[i]);
  return h;
}

GradedMap add_maps(const GradedMap& f, const GradedMap& g, const Scalar& factor) {
  if (f.columns.size() != g.columns.size() || f.degree != g.degree)
    throw GradingError("add_maps: shape or degree mismatch");
  GradedMap h = f;
  for (std::size_t i = 0; i < h.columns.size(); ++i) h.columns[i].add(g.columns[i], factor);
  return h;
}

GradedMap hom_differential(const GradedMap& f, const GradedMap& d_src, const GradedMap& d_tgt) {
  if (!f.homogeneous()) throw GradingError("hom_differential: map is not homogeneous");
  return add_maps(compose(d_tgt, f), compose(f, d_src), -parity_sign(f.degree));
}

GradedMap commutator(const GradedMap& f, const GradedMap& g) {
  if (f.source->size() != f.target->size() || g.source->size() != f.source->size() ||
      g.target->size() != f.source->size())
    throw GradingError("commutator: maps are not endomorphisms of one module");
  return add_maps(compose(f, g), compose(g, f), -parity_sign(f.degree * g.degree));
}

GradedMap cup_product(const GradedMap& f, const GradedMap& g, const CoalgebraTable& coalgebra,
                      const AlgebraTable& algebra) {
  if (f.source->size() != coalgebra.module->size() || g.source->size() != coalgebra.module->size() ||
      f.target->size() != algebra.module->size() || g.target->size() != algebra.module->size())
    throw GradingError("cup_product: source/target mismatch");
  GradedMap h = GradedMap::zero(coalgebra.module, algebra.module, f.degree + g.degree);
  for (std::size_t c = 0; c < coalgebra.diagonal.size(); ++c) {
    for (const auto& term : coalgebra.diagonal[c]) {
      int sign = parity_sign(g.degree * coalgebra.module->degrees[term.left]);
      for (const auto& [a, ca] : f.columns[term.left]) {
        for (const auto& [b, cb] : g.columns[term.right]) {
          h.columns[c].add(algebra.product(a, b), term.coeff * ca * cb * sign);
        }
      }
    }
  }
  return h;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(multiply(a, b), ca * cb);
  return out;
}

Element Algebra::differential(const Element& x) const {
  Element out;
  for (const auto& [a, ca] : x) out.add(differential(a), ca);
  return out;
}

std::optional<int> Algebra::degree(const Element& x) const {
  std::optional<int> deg;
  for (const auto& [a, c] : x) {
    int d = degree(a);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::string Algebra::format(const Element& x) const {
  if (x.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : x) {
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    Scalar mag = abs(c);
    if (mag != 1) out << mag.get_str() << "*";
    out << label(a);
  }
  return out.str();
}

}  // namespace hochlab
