#include "hochlab/free_dga.hpp"

#include <algorithm>
#include <set>

namespace hochlab {

FreeDGA::FreeDGA(std::vector<Generator> generators, std::map<int, Element> differential, std::string name)
    : name_(std::move(name)), generators_(std::move(generators)), differential_(std::move(differential)) {
  std::sort(generators_.begin(), generators_.end(),
            [](const Generator& a, const Generator& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!index_.emplace(generators_[i].id, i).second)
      throw GradingError("duplicate generator id " + std::to_string(generators_[i].id));
  }
  for (const auto& [id, value] : differential_) {
    if (!has_generator(id)) throw GradingError("differential on unknown generator");
    auto deg = Algebra::degree(value);
    if (!value.empty() && (!deg || *deg != generator(id).degree - 1))
      throw GradingError("differential of " + generator(id).name + " is not of degree -1");
  }
}

FreeDGA::FreeDGA(const FreeDGA& other)
    : Algebra(other),
      name_(other.name_),
      generators_(other.generators_),
      index_(other.index_),
      differential_(other.differential_),
      epsilon_(other.epsilon_) {}

const Generator& FreeDGA::generator(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw GradingError("unknown generator id " + std::to_string(id));
  return generators_[it->second];
}

const Element& FreeDGA::generator_differential(int id) const {
  static const Element zero;
  auto it = differential_.find(id);
  return it == differential_.end() ? zero : it->second;
}

int FreeDGA::min_id() const { return generators_.empty() ? 0 : generators_.front().id; }

int FreeDGA::degree(const Word& w) const {
  int total = 0;
  for (int g : w) total += generator(g).degree;
  return total;
}

int FreeDGA::weight(const Word& w) const {
  int total = 0;
  for (int g : w) total += generator(g).weight;
  return total;
}

Element FreeDGA::differential(const Word& w) const {
  Element out;
  int prefix = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& [t, c] : generator_differential(w[i])) {
      Word v(w.begin(), w.begin() + i);
      v.insert(v.end(), t.begin(), t.end());
      v.insert(v.end(), w.begin() + i + 1, w.end());
      out.add(v, c * parity_sign(prefix));
    }
    prefix += generator(w[i]).degree;
  }
  return out;
}

std::vector<Word> FreeDGA::basis(int degree, const BasisBounds& bounds) const {
  auto key = std::make_tuple(degree, bounds.max_length, bounds.max_weight);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = basis_cache_.find(key);
    if (it != basis_cache_.end()) return it->second;
  }
  int min_deg = 0, max_deg = 0;
  bool any_nonpositive = false;
  bool weight_bounds_degree = bounds.max_weight != INT_MAX;
  long ratio_p = 0, ratio_q = 1;  // largest degree/weight over generators of positive degree
  for (const auto& g : generators_) {
    min_deg = std::min(min_deg, g.degree);
    max_deg = std::max(max_deg, g.degree);
    if (g.degree <= 0) any_nonpositive = true;
    if (g.weight <= 0 && g.degree >= 0) weight_bounds_degree = false;
    if (g.degree > 0 && g.weight > 0 && static_cast<long>(g.degree) * ratio_q > ratio_p * g.weight) {
      ratio_p = g.degree;
      ratio_q = g.weight;
    }
  }
  if (any_nonpositive && bounds.max_length == INT_MAX && !weight_bounds_degree)
    throw GradingError(name_ + ": basis enumeration needs a length or weight bound");

  auto feasible = [&](int deg, int wt, long remaining) {
    long gap = static_cast<long>(degree) - deg;
    if (bounds.max_length != INT_MAX) {
      if (gap < remaining * min_deg || gap > remaining * max_deg) return false;
    } else if (!any_nonpositive && gap < 0) {
      return false;
    }
    if (weight_bounds_degree && gap > 0 && gap * ratio_q > (static_cast<long>(bounds.max_weight) - wt) * ratio_p)
      return false;
    return true;
  };

  std::vector<Word> out;
  Word current;
  std::function<void(int, int)> grow = [&](int deg, int wt) {
    if (deg == degree) out.push_back(current);
    if (static_cast<int>(current.size()) >= bounds.max_length) return;
    long remaining = bounds.max_length == INT_MAX ? 0 : bounds.max_length - static_cast<long>(current.size()) - 1;
    for (const auto& g : generators_) {
      int nd = deg + g.degree;
      int nw = wt + g.weight;
      if (nw > bounds.max_weight || !feasible(nd, nw, remaining)) continue;
      current.push_back(g.id);
      grow(nd, nw);
      current.pop_back();
    }
  };
  grow(0, 0);
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(cache_mutex_);
  basis_cache_.emplace(key, out);
  return out;
}

std::string FreeDGA::label(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (int g : w) out += generator(g).name;
  return out;
}

bool differential_squares_to_zero(const FreeDGA& algebra) {
  for (const auto& g : algebra.generators()) {
    if (!algebra.differential(algebra.generator_differential(g.id)).empty()) return false;
  }
  return true;
}

Derivation::Derivation(const FreeDGA& base, int degree, std::map<int, Element> values)
    : base_(&base), degree_(degree) {
  for (auto& [g, v] : values)
    if (!v.empty()) values_.emplace(g, std::move(v));
}

const Element& Derivation::value(int generator) const {
  static const Element zero;
  auto it = values_.find(generator);
  return it == values_.end() ? zero : it->second;
}

Element Derivation::operator()(const Word& w) const {
  Element out;
  int prefix = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int sign = parity_sign(degree_ * prefix);
    for (const auto& [t, c] : value(w[i])) {
      Word v(w.begin(), w.begin() + i);
      v.insert(v.end(), t.begin(), t.end());
      v.insert(v.end(), w.begin() + i + 1, w.end());
      out.add(v, c * sign);
    }
    prefix += base_->generator(w[i]).degree;
  }
  return out;
}

Element Derivation::operator()(const Element& x) const {
  Element out;
  for (const auto& [w, c] : x) out.add((*this)(w), c);
  return out;
}

bool operator==(const Derivation& a, const Derivation& b) {
  return a.degree_ == b.degree_ && a.values_ == b.values_;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  if (a.degree_ != b.degree_) throw GradingError("sum of derivations of different degrees");
  std::map<int, Element> values = a.values_;
  for (const auto& [g, v] : b.values_) values[g].add(v);
  return Derivation(*a.base_, a.degree_, std::move(values));
}

Derivation Derivation::scaled(const Scalar& c) const {
  std::map<int, Element> values;
  for (const auto& [g, v] : values_) values.emplace(g, v.scaled(c));
  return Derivation(*base_, degree_, std::move(values));
}

Derivation extend_derivation(const FreeDGA& base, std::map<int, Element> values, int degree) {
  for (const auto& [g, v] : values) {
    if (v.empty()) continue;
    auto deg = base.Algebra::degree(v);
    if (!deg || *deg != base.generator(g).degree + degree)
      throw GradingError("derivation value on " + base.generator(g).name + " has the wrong degree");
  }
  return Derivation(base, degree, std::move(values));
}

Derivation algebra_differential(const FreeDGA& base) {
  std::map<int, Element> values;
  for (const auto& g : base.generators()) values.emplace(g.id, base.generator_differential(g.id));
  return Derivation(base, -1, std::move(values));
}

Derivation derivation_bracket(const Derivation& a, const Derivation& b) {
  std::map<int, Element> values;
  int sign = -parity_sign(a.degree() * b.degree());
  for (const auto& g : a.base().generators()) {
    Element v = a(b.value(g.id));
    v.add(b(a.value(g.id)), sign);
    values.emplace(g.id, std::move(v));
  }
  return Derivation(a.base(), a.degree() + b.degree(), std::move(values));
}

Derivation derivation_differential(const Derivation& theta) {
  return derivation_bracket(algebra_differential(theta.base()), theta);
}

Derivation ad(const FreeDGA& base, const Element& x, int degree) {
  std::map<int, Element> values;
  for (const auto& g : base.generators()) {
    Element v;
    for (const auto& [w, c] : x) {
      v.add(concat(w, Word{g.id}), c);
      v.add(concat(Word{g.id}, w), -c * parity_sign(degree * g.degree));
    }
    values.emplace(g.id, std::move(v));
  }
  return Derivation(base, degree, std::move(values));
}

ExtendedDerivation tilde_D(const ExtendedDerivation& xi) {
  const FreeDGA& base = xi.theta.base();
  Derivation theta = derivation_differential(xi.theta) + ad(base, xi.x, xi.degree() - 1).scaled(-1);
  return {theta, base.differential(xi.x).scaled(-1)};
}

ExtendedDerivation ext_bracket(const ExtendedDerivation& a, const ExtendedDerivation& b) {
  if (&a.theta.base() != &b.theta.base()) throw GradingError("extended derivations over different algebras");
  Element x = a.theta(b.x).scaled(parity_sign(a.degree()));
  x.add(b.theta(a.x), -parity_sign(a.degree() * b.degree() + b.degree()));
  return {derivation_bracket(a.theta, b.theta), x};
}

FreeDGA tilde_A(const FreeDGA& algebra) {
  int e = algebra.min_id() - 1;
  std::vector<Generator> generators = algebra.generators();
  generators.push_back({e, "e", -1, 0});
  std::map<int, Element> differential;
  differential.emplace(e, Element(Word{e, e}));
  for (const auto& g : algebra.generators()) {
    Element v = algebra.generator_differential(g.id);
    v.add(Word{e, g.id}, 1);
    v.add(Word{g.id, e}, -parity_sign(g.degree));
    differential.emplace(g.id, std::move(v));
  }
  FreeDGA out(std::move(generators), std::move(differential), algebra.name() + "~");
  out.set_epsilon(e);
  return out;
}

FreeModelFiltration check_free_model(const FreeDGA& algebra, int bound) {
  FreeModelFiltration result;
  std::set<int> absorbed;
  for (int stage = 0; stage <= bound; ++stage) {
    std::vector<int> next;
    for (const auto& g : algebra.generators()) {
      bool inside = true;
      for (const auto& [w, c] : algebra.generator_differential(g.id))
        for (int letter : w)
          if (!absorbed.count(letter)) inside = false;
      if (inside) next.push_back(g.id);
    }
    result.stages.push_back(next);
    std::set<int> grown(next.begin(), next.end());
    if (grown.size() == algebra.generators().size()) {
      result.ok = true;
      return result;
    }
    if (grown == absorbed) break;
    absorbed = std::move(grown);
  }
  for (const auto& g : algebra.generators())
    if (!absorbed.count(g.id)) result.witness.push_back(g.id);
  return result;
}

TripleElement universal_derivation(const FreeDGA& algebra, const Word& w) {
  TripleElement out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out.add(Triple{Word(w.begin(), w.begin() + i), w[i], Word(w.begin() + i + 1, w.end())}, 1);
  (void)algebra;
  return out;
}

TripleElement universal_derivation_bar(const FreeDGA& algebra, const Word& w) {
  TripleElement out;
  int prefix = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.add(Triple{Word(w.begin(), w.begin() + i), w[i], Word(w.begin() + i + 1, w.end())},
            parity_sign(prefix));
    prefix += algebra.generator(w[i]).degree;
  }
  return out;
}

TripleElement universal_derivation_bar(const FreeDGA& algebra, const Element& x) {
  TripleElement out;
  for (const auto& [w, c] : x) out.add(universal_derivation_bar(algebra, w), c);
  return out;
}

int BimoduleResolution::degree(const Triple& t) const {
  const auto& [l, m, r] = t;
  int mid = m == kScalarSlot ? 0 : algebra_->generator(m).degree + 1;
  return algebra_->degree(l) + mid + algebra_->degree(r);
}

TripleElement BimoduleResolution::differential(const Triple& t) const {
  const auto& [l, m, r] = t;
  TripleElement out;
  for (const auto& [w, c] : algebra_->differential(l)) out.add(Triple{w, m, r}, c);
  int left_sign = parity_sign(algebra_->degree(l));
  if (m != kScalarSlot) {
    TripleElement core = universal_derivation_bar(*algebra_, algebra_->generator_differential(m)).scaled(-1);
    if (kind_ == Kind::KTilde) {
      core.add(Triple{Word{m}, kScalarSlot, Word{}}, 1);
      core.add(Triple{Word{}, kScalarSlot, Word{m}}, -1);
    }
    for (const auto& [u, c] : core) {
      const auto& [l2, m2, r2] = u;
      out.add(Triple{concat(l, l2), m2, concat(r2, r)}, c * left_sign);
    }
  }
  int mid = m == kScalarSlot ? 0 : algebra_->generator(m).degree + 1;
  int right_sign = parity_sign(algebra_->degree(l) + mid);
  for (const auto& [w, c] : algebra_->differential(r)) out.add(Triple{l, m, w}, c * right_sign);
  return out;
}

TripleElement BimoduleResolution::differential(const TripleElement& x) const {
  TripleElement out;
  for (const auto& [t, c] : x) out.add(differential(t), c);
  return out;
}

std::vector<Triple> BimoduleResolution::basis(int degree, const BasisBounds& bounds) const {
  int min_deg = 0, max_deg = 0;
  for (const auto& g : algebra_->generators()) {
    min_deg = std::min(min_deg, g.degree);
    max_deg = std::max(max_deg, g.degree);
  }
  int lo = bounds.max_length * min_deg, hi = bounds.max_length * max_deg;
  std::vector<int> middles;
  if (kind_ == Kind::KTilde) middles.push_back(kScalarSlot);
  for (const auto& g : algebra_->generators()) middles.push_back(g.id);
  std::vector<Triple> out;
  for (int m : middles) {
    int mid = m == kScalarSlot ? 0 : algebra_->generator(m).degree + 1;
    for (int dl = lo; dl <= hi; ++dl) {
      int dr = degree - mid - dl;
      if (dr < lo || dr > hi) continue;
      auto left = algebra_->basis(dl, bounds);
      if (left.empty()) continue;
      auto right = algebra_->basis(dr, bounds);
      for (const auto& l : left)
        for (const auto& r : right) out.push_back(Triple{l, m, r});
    }
  }
  return out;
}

Element evaluate_middle_map(const FreeDGA& algebra, const MiddleMap& y, const TripleElement& x) {
  Element out;
  for (const auto& [t, c] : x) {
    const auto& [l, m, r] = t;
    const Element* core = &y.on_scalar;
    static const Element zero;
    if (m != kScalarSlot) {
      auto it = y.on_generators.find(m);
      core = it == y.on_generators.end() ? &zero : &it->second;
    }
    int sign = parity_sign(y.degree * algebra.degree(l));
    for (const auto& [w, v] : *core) out.add(concat(concat(l, w), r), c * v * sign);
  }
  return out;
}

Derivation alpha_A(const FreeDGA& algebra, const MiddleMap& y) {
  std::map<int, Element> values;
  for (const auto& [g, v] : y.on_generators) values.emplace(g, v.scaled(parity_sign(y.degree)));
  return Derivation(algebra, y.degree + 1, std::move(values));
}

ExtendedDerivation alpha_tilde_A(const FreeDGA& algebra, const MiddleMap& y) {
  return {alpha_A(algebra, y), y.on_scalar.scaled(-1)};
}

Derivation gamma_sV(const FreeDGA& algebra, const std::map<int, Element>& phi, int degree) {
  std::map<int, Element> values;
  for (const auto& [g, v] : phi) values.emplace(g, v.scaled(parity_sign(degree)));
  return Derivation(algebra, degree + 1, std::move(values));
}

AlgebraCochain i_A(const ExtendedDerivation& xi) {
  auto theta = std::make_shared<Derivation>(xi.theta);
  Element x = xi.x;
  int sign = parity_sign(xi.degree());
  return AlgebraCochain(xi.degree() - 1, [theta, x, sign](const BarWord& w) {
    if (w.empty()) return x;
    if (w.size() == 1) return (*theta)(w[0]).scaled(sign);
    return Element();
  });
}

Derivation j_A(const FreeDGA& tilde, const ExtendedDerivation& xi) {
  if (!tilde.epsilon()) throw GradingError("j_A expects an algebra built by tilde_A");
  std::map<int, Element> values = xi.theta.values();
  values[*tilde.epsilon()] = xi.x.scaled(parity_sign(xi.degree()));
  return Derivation(tilde, xi.degree(), std::move(values));
}

}  // namespace hochlab
