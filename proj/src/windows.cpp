#include "hochlab/windows.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "hochlab/parallel.hpp"

namespace hochlab {

CochainWindow::CochainWindow(CochainDescriptor descriptor, int lo, int hi) : descriptor_(std::move(descriptor)) {
  const auto& desc = descriptor_;
  const int sources = static_cast<int>(desc.source_degree.size());
  complex_.kind = desc.kind;
  complex_.full.lo = lo;
  complex_.full.hi = hi;

  // Column groups by source, per degree.
  std::map<int, std::vector<std::vector<std::pair<int, Word>>>> by_source;
  for (int n = lo; n <= hi; ++n) {
    auto& basis = basis_[n];
    auto& index = index_[n];
    auto& levels = complex_.levels[n];
    auto& groups = by_source[n];
    index.resize(sources);
    groups.resize(sources);
    std::vector<std::vector<Word>> words(sources);
    parallel_for(sources, [&](std::size_t s) { words[s] = desc.value_basis(static_cast<int>(s), n); });
    for (int s = 0; s < sources; ++s) {
      for (auto& u : words[s]) {
        const int i = static_cast<int>(basis.size());
        index[s].emplace(u, i);
        levels.push_back(desc.level ? desc.level(s, u, n) : desc.source_level.at(s));
        groups[s].emplace_back(i, u);
        basis.emplace_back(s, std::move(u));
      }
    }
    complex_.full.dims[n] = static_cast<int>(basis.size());
  }

  for (int n = lo + 1; n <= hi; ++n) {
    const auto& groups = by_source[n];
    const auto& rows = index_[n - 1];
    std::vector<std::map<std::pair<int, int>, Scalar>> parts(sources);
    parallel_for(sources, [&](std::size_t si) {
      const int s = static_cast<int>(si);
      if (rows[s].empty()) return;
      auto& part = parts[s];
      std::map<Word, Element> differentials;
      for (const auto& t : desc.terms(s, n)) {
        for (const auto& [col, v] : groups.at(t.source)) {
          Element value;
          if (t.differentiate) {
            auto it = differentials.find(v);
            if (it == differentials.end()) it = differentials.emplace(v, desc.values->differential(v)).first;
            value = it->second;
          } else {
            value = Element(v);
          }
          if (t.left) value = desc.values->multiply(Element(*t.left), value);
          if (t.right) value = desc.values->multiply(value, Element(*t.right));
          for (const auto& [u, c] : value) {
            auto r = rows[s].find(u);
            if (r == rows[s].end()) {
              if (desc.quotient_values) continue;
              throw SaturationError(desc.name + ": differential leaves the window in degree " + std::to_string(n - 1));
            }
            auto slot = part.try_emplace({col, r->second}, 0).first;
            slot->second += t.coeff * c;
          }
        }
      }
    });
    SparseMatrix m(dim(n - 1), dim(n));
    for (auto& part : parts)
      for (auto& [key, c] : part)
        if (sgn(c) != 0) m.columns[key.first].emplace_back(key.second, std::move(c));
    complex_.full.d.emplace(n, std::move(m));
  }
}

int CochainWindow::index(int n, int source, const Word& value) const {
  auto it = index_.find(n);
  if (it == index_.end()) return -1;
  const auto& m = it->second.at(source);
  auto w = m.find(value);
  return w == m.end() ? -1 : w->second;
}

SparseVector CochainWindow::vector(int n, const std::function<Element(int)>& f) const {
  std::map<int, Scalar> entries;
  for (int s = 0; s < sources(); ++s) {
    for (const auto& [u, c] : f(s)) {
      const int i = index(n, s, u);
      if (i < 0) {
        if (descriptor_.quotient_values) continue;
        throw SaturationError(descriptor_.name + ": cochain value outside the window");
      }
      entries[i] += c;
    }
  }
  return sparse_from_map(entries);
}

std::map<int, Element> CochainWindow::values(int n, const SparseVector& v) const {
  std::map<int, Element> out;
  for (const auto& [i, c] : v) {
    const auto& [s, u] = basis_element(n, i);
    out[s].add(u, c);
  }
  return out;
}

// ---- algebra side -------------------------------------------------------------

namespace {

bool has_unit_letter(const Algebra& A, const BarWord& w) {
  for (const auto& a : w)
    if (A.is_unit(a)) return true;
  return false;
}

}  // namespace

int AlgebraCochainWindow::source_index(const BarWord& w) const {
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

SparseVector AlgebraCochainWindow::vector(int n, const AlgebraCochain& f) const {
  return window->vector(n, [&](int s) { return f(words[s]); });
}

AlgebraCochain AlgebraCochainWindow::cochain(int n, const SparseVector& v, int max_level) const {
  std::map<BarWord, Element> table;
  for (auto& [s, e] : window->values(n, v)) table.emplace(words[s], std::move(e));
  auto levels = std::make_shared<std::map<BarWord, int>>();
  const auto& source_level = window->descriptor().source_level;
  for (const auto& [w, s] : index) levels->emplace(w, source_level[s]);
  // Outside the window the cochain is still known to vanish on words with a
  // unit letter (normalized case) and on words with no value degree in range.
  const Algebra* source = coefficients.source;
  const bool unit_zero = normalized;
  const long lo = value_min == INT_MIN ? LONG_MIN : static_cast<long>(value_min) - n;
  const long hi = value_max == INT_MAX ? LONG_MAX : static_cast<long>(value_max) - n;
  return AlgebraCochain::from_table(n, std::move(table), [=](const BarWord& w) {
    auto it = levels->find(w);
    if (it != levels->end()) return it->second <= max_level;
    if (unit_zero && std::any_of(w.begin(), w.end(), [source](const Word& a) { return source->is_unit(a); }))
      return true;
    const long degree = bar_degree(*source, w);
    return degree < lo || degree > hi;
  });
}

AlgebraCochainWindow algebra_window(const AlgebraMap& coefficients, const AlgebraWindowParams& p) {
  const Algebra& A = *coefficients.source;
  const Algebra& B = *coefficients.target;
  AlgebraCochainWindow out;
  out.coefficients = coefficients;
  out.normalized = p.normalized;
  out.value_min = p.value_min;
  out.value_max = p.value_max;

  struct Letter {
    Word word;
    int bar;
    int level;
  };
  std::vector<Letter> letters;
  for (int d = p.letter_min; d <= p.letter_max; ++d)
    for (const auto& a : A.basis(d, p.letter_bounds)) {
      if (p.normalized && A.is_unit(a)) continue;
      const int bar = d + 1;
      const int level = p.level == AlgebraWindowParams::Level::Length ? 1 : bar;
      if (level <= 0) throw GradingError("algebra window: letters must raise the level");
      letters.push_back({a, bar, level});
    }
  bool all_positive = true, all_negative = true;
  for (const auto& l : letters) {
    all_positive = all_positive && l.bar > 0;
    all_negative = all_negative && l.bar < 0;
  }
  // A source matters when some degree n in [lo, hi] gives a value degree in range:
  // value_min <= bar + n <= value_max.
  const long need_min = p.value_min == INT_MIN ? LONG_MIN : static_cast<long>(p.value_min) - p.hi;
  const long need_max = p.value_max == INT_MAX ? LONG_MAX : static_cast<long>(p.value_max) - p.lo;

  std::vector<int> degrees, levels;
  BarWord current;
  std::function<void(long, int)> grow = [&](long bar, int level) {
    if (bar >= need_min && bar <= need_max) {
      out.index.emplace(current, static_cast<int>(out.words.size()));
      out.words.push_back(current);
      degrees.push_back(static_cast<int>(bar));
      levels.push_back(level);
    }
    for (const auto& l : letters) {
      const int nl = level + l.level;
      const long nb = bar + l.bar;
      if (nl > p.max_level) continue;
      if (all_positive && nb > need_max) continue;
      if (all_negative && nb < need_min) continue;
      current.push_back(l.word);
      grow(nb, nl);
      current.pop_back();
    }
  };
  grow(0, 0);

  CochainDescriptor desc;
  desc.name = "C*(" + std::string(p.normalized ? "normalized" : "unnormalized") + ")";
  desc.values = &B;
  desc.kind = FilteredComplex::Kind::Quotient;
  desc.quotient_values = p.value_length_quotient;
  desc.source_degree = degrees;
  desc.source_level = levels;
  const bool normalized = p.normalized;
  const int value_min = p.value_min, value_max = p.value_max;
  const AlgebraMap coeffs = coefficients;
  auto words = std::make_shared<const std::vector<BarWord>>(out.words);
  auto index = std::make_shared<const std::map<BarWord, int>>(out.index);
  desc.terms = [coeffs, words, index, normalized, value_min, value_max](int s, int n) {
    std::vector<CochainTerm<int>> terms;
    for (auto& t : algebra_hochschild_terms(coeffs, (*words)[s], n)) {
      auto it = index->find(t.source);
      if (it == index->end()) {
        if (normalized && has_unit_letter(*coeffs.source, t.source)) continue;
        const long deg = static_cast<long>(bar_degree(*coeffs.source, t.source)) + n;
        if (deg < value_min || deg > value_max) continue;
        throw SaturationError("algebra window: differential needs a source outside the window");
      }
      terms.push_back({it->second, t.coeff, t.differentiate, std::move(t.left), std::move(t.right)});
    }
    return terms;
  };
  const std::vector<int> src_degrees = degrees;
  const Algebra* target = &B;
  const BasisBounds bounds = p.value_bounds;
  desc.value_basis = [src_degrees, target, bounds, value_min, value_max](int s, int n) {
    const long deg = static_cast<long>(src_degrees[s]) + n;
    if (deg < value_min || deg > value_max) return std::vector<Word>{};
    return target->basis(static_cast<int>(deg), bounds);
  };
  out.window = std::make_unique<CochainWindow>(std::move(desc), p.lo, p.hi);
  return out;
}

// ---- coalgebra side -------------------------------------------------------------

SparseVector CoalgebraCochainWindow::vector(int n, const CoalgebraCochain& f) const {
  return window->vector(n, [&](int c) { return f(c); });
}

CoalgebraCochain CoalgebraCochainWindow::cochain(int n, const SparseVector& v) const {
  CoalgebraCochain out{n, std::vector<Element>(coalgebra->size())};
  for (auto& [s, e] : window->values(n, v)) out.values[s] = std::move(e);
  return out;
}

namespace {

CoalgebraCochainWindow coalgebra_window_impl(const DGCoalgebra& C, const FreeDGA& values, bool normalized, int lo,
                                             int hi, int max_level, bool length_quotient = false) {
  CoalgebraCochainWindow out;
  out.coalgebra = &C;
  out.values = &values;
  out.normalized = normalized;
  CochainDescriptor desc;
  desc.name = normalized ? "C-bar*(C;C)" : "C*(C;C)";
  desc.values = &values;
  desc.kind = FilteredComplex::Kind::Subcomplex;
  for (int c = 0; c < C.size(); ++c) {
    desc.source_degree.push_back(C.degree(c));
    desc.source_level.push_back(0);
  }
  const DGCoalgebra* coalgebra = &C;
  const FreeDGA* T = &values;
  desc.terms = [coalgebra, normalized](int c, int n) {
    return coalgebra_hochschild_terms(*coalgebra, c, n, normalized);
  };
  if (normalized) {
    desc.value_basis = [coalgebra, T](int c, int n) {
      const int degree = coalgebra->degree(c) + n;
      BasisBounds b;
      b.max_length = std::max(0, degree);
      return T->basis(degree, b);
    };
  } else if (length_quotient) {
    desc.kind = FilteredComplex::Kind::Quotient;
    desc.quotient_values = true;
    desc.value_basis = [coalgebra, T, max_level](int c, int n) {
      BasisBounds b;
      b.max_length = max_level;
      return T->basis(coalgebra->degree(c) + n, b);
    };
    desc.level = [](int, const Word& u, int) { return static_cast<int>(u.size()); };
  } else {
    desc.value_basis = [coalgebra, T, max_level](int c, int n) {
      if (max_level - n < 0) return std::vector<Word>{};
      BasisBounds b;
      b.max_length = max_level - n;
      return T->basis(coalgebra->degree(c) + n, b);
    };
    desc.level = [](int, const Word& u, int n) { return static_cast<int>(u.size()) + n; };
  }
  out.window = std::make_unique<CochainWindow>(std::move(desc), lo, hi);
  return out;
}

}  // namespace

CoalgebraCochainWindow normalized_coalgebra_window(const DGCoalgebra& c, const FreeDGA& bar, int lo, int hi) {
  return coalgebra_window_impl(c, bar, true, lo, hi, 0);
}

CoalgebraCochainWindow coalgebra_window(const DGCoalgebra& c, const FreeDGA& tilde, int lo, int hi, int max_level) {
  return coalgebra_window_impl(c, tilde, false, lo, hi, max_level);
}

CoalgebraCochainWindow coalgebra_window_quotient(const DGCoalgebra& c, const FreeDGA& tilde, int lo, int hi,
                                                 int max_length) {
  return coalgebra_window_impl(c, tilde, false, lo, hi, max_length, true);
}

// ---- derivations -------------------------------------------------------------------

SparseVector DerivationWindow::vector(int n, const Derivation& theta) const {
  return window->vector(n, [&](int s) {
    if (s >= static_cast<int>(generator_ids.size())) return Element();
    return theta.value(generator_ids[s]);
  });
}

SparseVector DerivationWindow::vector(int n, const ExtendedDerivation& xi) const {
  return window->vector(n, [&](int s) {
    if (s >= static_cast<int>(generator_ids.size())) return xi.x;
    return xi.theta.value(generator_ids[s]);
  });
}

Derivation DerivationWindow::derivation(int n, const SparseVector& v) const {
  std::map<int, Element> values;
  for (auto& [s, e] : window->values(n, v))
    if (s < static_cast<int>(generator_ids.size())) values[generator_ids[s]] = std::move(e);
  return Derivation(*algebra, n, std::move(values));
}

ExtendedDerivation DerivationWindow::extended_derivation(int n, const SparseVector& v) const {
  std::map<int, Element> values;
  Element x;
  for (auto& [s, e] : window->values(n, v)) {
    if (s < static_cast<int>(generator_ids.size())) values[generator_ids[s]] = std::move(e);
    else x = std::move(e);
  }
  return {Derivation(*algebra, n, std::move(values)), x};
}

namespace {

DerivationWindow derivation_window_impl(const FreeDGA& A, bool extended, int lo, int hi, bool bounded,
                                        int max_level, bool length_quotient = false) {
  DerivationWindow out;
  out.algebra = &A;
  out.extended = extended;
  CochainDescriptor desc;
  desc.name = extended ? "~Der" : "Der";
  desc.values = &A;
  desc.kind = FilteredComplex::Kind::Subcomplex;
  std::map<int, int> source_of;
  for (const auto& g : A.generators()) {
    source_of[g.id] = static_cast<int>(out.generator_ids.size());
    out.generator_ids.push_back(g.id);
    desc.source_degree.push_back(g.degree);
    desc.source_level.push_back(0);
  }
  const int slot = static_cast<int>(out.generator_ids.size());
  if (extended) {
    desc.source_degree.push_back(-1);
    desc.source_level.push_back(0);
  }
  const FreeDGA* algebra = &A;
  const std::vector<int> ids = out.generator_ids;
  desc.terms = [algebra, ids, source_of, extended, slot](int s, int n) {
    std::vector<CochainTerm<int>> terms;
    terms.push_back({s, Scalar(1), true, std::nullopt, std::nullopt});
    if (s == slot) {
      terms.back().coeff = -1;
      return terms;
    }
    const int g = ids[s];
    for (const auto& [w, c] : algebra->generator_differential(g)) {
      int prefix = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Word pre(w.begin(), w.begin() + i), suf(w.begin() + i + 1, w.end());
        Scalar coeff = -c * parity_sign(n) * parity_sign(n * prefix);
        terms.push_back({source_of.at(w[i]), coeff, false,
                         pre.empty() ? std::nullopt : std::optional<Word>(pre),
                         suf.empty() ? std::nullopt : std::optional<Word>(suf)});
        prefix += algebra->generator(w[i]).degree;
      }
    }
    if (extended) {
      const int gd = algebra->generator(g).degree;
      terms.push_back({slot, Scalar(-1), false, std::nullopt, Word{g}});
      terms.push_back({slot, Scalar(parity_sign((n - 1) * gd)), false, Word{g}, std::nullopt});
    }
    return terms;
  };
  const std::vector<int> src_degrees = desc.source_degree;
  if (length_quotient) {
    desc.kind = FilteredComplex::Kind::Quotient;
    desc.quotient_values = true;
    desc.value_basis = [algebra, src_degrees, max_level](int s, int n) {
      BasisBounds b;
      b.max_length = max_level;
      return algebra->basis(src_degrees[s] + n, b);
    };
    desc.level = [](int, const Word& u, int) { return static_cast<int>(u.size()); };
    out.window = std::make_unique<CochainWindow>(std::move(desc), lo, hi);
    return out;
  }
  desc.value_basis = [algebra, src_degrees, bounded, max_level](int s, int n) {
    BasisBounds b;
    if (bounded) {
      if (max_level - n < 0) return std::vector<Word>{};
      b.max_length = max_level - n;
    } else {
      // Generators of positive degree: the length is at most the degree.
      b.max_length = std::max(0, src_degrees[s] + n);
    }
    return algebra->basis(src_degrees[s] + n, b);
  };
  if (bounded) desc.level = [](int, const Word& u, int n) { return static_cast<int>(u.size()) + n; };
  out.window = std::make_unique<CochainWindow>(std::move(desc), lo, hi);
  return out;
}

}  // namespace

DerivationWindow derivation_window(const FreeDGA& A, bool extended, int lo, int hi) {
  return derivation_window_impl(A, extended, lo, hi, false, 0);
}

DerivationWindow derivation_window(const FreeDGA& A, int lo, int hi, int max_level) {
  return derivation_window_impl(A, false, lo, hi, true, max_level);
}

DerivationWindow derivation_window_quotient(const FreeDGA& A, int lo, int hi, int max_length) {
  return derivation_window_impl(A, false, lo, hi, true, max_length, true);
}

}  // namespace hochlab
