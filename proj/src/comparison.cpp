#include "hochlab/comparison.hpp"

namespace hochlab {

Scalar theta_coefficient(const DGCoalgebra& C, const Word& letters) {
  const int n = static_cast<int>(letters.size());
  std::vector<int> degrees;
  for (int c : letters) {
    degrees.push_back(1);
    degrees.push_back(-C.degree(c));
  }
  for (int c : letters) {
    degrees.push_back(-1);
    degrees.push_back(C.degree(c));
  }
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    order.insert(order.end(), {2 * i + 1, 2 * i, 2 * n + 2 * i, 2 * n + 2 * i + 1});
  }
  return parity_sign(n) * koszul_sign(degrees, order);
}

Word bar_letters(const BarWord& w) {
  Word out;
  for (const auto& a : w) {
    if (a.size() != 1) throw GradingError("bar word over C^v has a letter that is not a dual basis element");
    out.push_back(a[0]);
  }
  return out;
}

BarWord letters_to_bar(const Word& letters) {
  BarWord out;
  for (int c : letters) out.push_back(Word{c});
  return out;
}

Functional Theta(const DGCoalgebra& C, const BarWord& w) {
  Word letters = bar_letters(w);
  Functional out;
  out.add(letters, theta_coefficient(C, letters));
  return out;
}

Functional Theta(const DGCoalgebra& C, const BarElement& x) {
  Functional out;
  for (const auto& [w, c] : x) out.add(Theta(C, w), c);
  return out;
}

Functional Theta_bar(const DGCoalgebra& C, const BarWord& w) {
  for (int c : bar_letters(w))
    if (c == 0) throw GradingError("normalized bar word contains the unit");
  return Theta(C, w);
}

Functional transpose(const Functional& xi, int xi_degree, const std::function<Element(const Word&)>& map,
                     int map_degree, const std::vector<Word>& candidates) {
  Functional out;
  const int sign = parity_sign(map_degree * xi_degree);
  for (const auto& u : candidates) {
    Scalar total;
    for (const auto& [v, c] : map(u)) total += c * xi.coefficient(v);
    if (total != 0) out.add(u, total * sign);
  }
  return out;
}

Functional dual_differential(const Algebra& cobar, const Functional& xi, int xi_degree,
                             const std::vector<Word>& candidates) {
  Functional out;
  for (const auto& u : candidates) {
    Scalar total;
    for (const auto& [v, c] : cobar.differential(u)) total += c * xi.coefficient(v);
    if (total != 0) out.add(u, -total * parity_sign(xi_degree));
  }
  return out;
}

namespace {

AlgebraCochain dual_of(const DGCoalgebra& C, const CoalgebraCochain& phi, bool normalized) {
  const DGCoalgebra* coalgebra = &C;
  return AlgebraCochain(phi.degree, [coalgebra, phi, normalized](const BarWord& w) {
    Word letters = bar_letters(w);
    Element out;
    if (normalized) {
      for (int c : letters)
        if (c == 0) return out;
    }
    int bar = 0;
    for (int c : letters) bar += 1 - coalgebra->degree(c);
    const Scalar theta = theta_coefficient(*coalgebra, letters) * parity_sign(phi.degree * bar);
    for (int c = 0; c < coalgebra->size(); ++c) {
      const Scalar v = phi(c).coefficient(letters);
      if (v != 0) out.add(Word{c}, theta * v);
    }
    return out;
  });
}

}  // namespace

AlgebraCochain D1(const DGCoalgebra& C, const CoalgebraCochain& phi) { return dual_of(C, phi, false); }

AlgebraCochain D1_bar(const DGCoalgebra& C, const CoalgebraCochain& phi) { return dual_of(C, phi, true); }

AlgebraCochain extend_by_zero_on_units(const Algebra& algebra, const AlgebraCochain& f) {
  const Algebra* A = &algebra;
  return AlgebraCochain(f.degree(), [A, f](const BarWord& w) {
    for (const auto& a : w)
      if (A->is_unit(a)) return Element();
    return f(w);
  });
}

CoalgebraCochain D2(const DGCoalgebra& C, const AlgebraCochain& g) {
  CoalgebraCochain out{g.degree(), std::vector<Element>(C.size())};
  for (int c = 0; c < C.size(); ++c) out.values[c] = g.apply(sigma_C(C, c));
  return out;
}

AlgebraCochain Gamma(const DGCoalgebra&, const FreeDGA& bar, const CoalgebraCochain& phi) {
  const FreeDGA* A = &bar;
  return AlgebraCochain(phi.degree, [A, phi](const BarWord& w) {
    Element out;
    if (w.empty()) return phi(0);
    if (w.size() > 1) return out;
    const Word& a = w[0];
    int prefix = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Word pre(a.begin(), a.begin() + i);
      const Word suf(a.begin() + i + 1, a.end());
      const int sign = parity_sign((phi.degree + 1) * prefix);
      for (const auto& [t, c] : phi(a[i])) out.add(concat(concat(pre, t), suf), c * sign);
      prefix += A->generator(a[i]).degree;
    }
    return out;
  });
}

CoalgebraCochain inclusion_normalized(const CoalgebraCochain& phi) { return phi; }

AlgebraCochain D_C(const DGCoalgebra& C, const AlgebraCochain& g) {
  return D1_bar(C, D2(C, g));
}

}  // namespace hochlab

namespace hochlab {

CoalgebraMap CoalgebraMap::by_names(const DGCoalgebra& source, const DGCoalgebra& target) {
  CoalgebraMap f{&source, &target, {}};
  f.images.emplace_back(0);
  for (int c = 1; c < source.size(); ++c) f.images.emplace_back(target.index(source.name(c)));
  return f;
}

ValidationReport validate(const CoalgebraMap& f) {
  const DGCoalgebra& C = *f.source;
  const DGCoalgebra& D = *f.target;
  ValidationReport report;
  auto check = [&](const std::string& law, bool ok, const std::string& witness) {
    report.checks.push_back({law, ok, ok ? "" : witness});
  };
  auto image = [&](const Linear<int>& x) {
    Linear<int> out;
    for (const auto& [c, a] : x) out.add(f.images.at(c), a);
    return out;
  };
  check("size", static_cast<int>(f.images.size()) == C.size(), "one image per basis element");
  bool unit = f.images.at(0) == Linear<int>(0);
  for (int c = 1; c < C.size(); ++c) unit = unit && f.images[c].coefficient(0) == 0;
  check("unit", unit, "f(1) = 1 and f(C-bar) in D-bar");
  std::string degree_witness, d_witness, diagonal_witness;
  for (int c = 0; c < C.size(); ++c) {
    for (const auto& [e, a] : f.images[c])
      if (D.degree(e) != C.degree(c)) degree_witness = C.name(c);
    Linear<int> lhs, rhs = image(C.differential(c));
    for (const auto& [e, a] : f.images[c]) lhs.add(D.differential(e), a);
    if (!(lhs == rhs)) d_witness = C.name(c);
    Linear<std::pair<int, int>> l, r;
    for (const auto& t : C.reduced_diagonal(c))
      for (const auto& [x, a] : f.images[t.left])
        for (const auto& [y, b] : f.images[t.right]) r.add({x, y}, t.coeff * a * b);
    for (const auto& [e, a] : f.images[c])
      for (const auto& t : D.reduced_diagonal(e)) l.add({t.left, t.right}, t.coeff * a);
    if (!(l == r)) diagonal_witness = C.name(c);
  }
  check("degree", degree_witness.empty(), "degree changed on " + degree_witness);
  check("differential", d_witness.empty(), "d f != f d on " + d_witness);
  check("diagonal", diagonal_witness.empty(), "reduced diagonal not preserved on " + diagonal_witness);
  return report;
}

AlgebraMap dual_map(const CoalgebraMap& f, const DualAlgebra& source_dual, const DualAlgebra& target_dual) {
  std::vector<Element> images(f.target->size());
  for (int c = 0; c < f.source->size(); ++c)
    for (const auto& [e, a] : f.images[c]) images[e].add(Word{c}, a);
  return AlgebraMap{&target_dual, &source_dual, [images](const Word& w) { return images.at(w.at(0)); }};
}

AlgebraMap cobar_map(const CoalgebraMap& f, const FreeDGA& source_bar, const FreeDGA& target_bar) {
  std::vector<Element> letters(f.source->size());
  for (int c = 1; c < f.source->size(); ++c)
    for (const auto& [e, a] : f.images[c]) letters[c].add(Word{e}, a);
  const FreeDGA* B = &target_bar;
  return AlgebraMap{&source_bar, &target_bar, [letters, B](const Word& w) {
                      Element out(Word{});
                      for (int g : w) out = B->multiply(out, letters.at(g));
                      return out;
                    }};
}

AlgebraCochain precompose(const AlgebraMap& f, const AlgebraCochain& g) {
  return AlgebraCochain(g.degree(), [f, g](const BarWord& w) {
    BarElement images(BarWord{});
    for (const auto& a : w) {
      BarElement next;
      for (const auto& [prefix, c] : images)
        for (const auto& [b, e] : f(a)) {
          BarWord v = prefix;
          v.push_back(b);
          next.add(v, c * e);
        }
      images = std::move(next);
    }
    return g.apply(images);
  });
}

AlgebraCochain postcompose(const AlgebraMap& f, const AlgebraCochain& g) {
  return AlgebraCochain(g.degree(), [f, g](const BarWord& w) { return f(g(w)); });
}

}  // namespace hochlab
