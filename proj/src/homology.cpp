#include "hochlab/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hochlab/parallel.hpp"

namespace hochlab {

int ComplexWindow::dim(int n) const {
  auto it = dims.find(n);
  return it == dims.end() ? 0 : it->second;
}

SparseMatrix ComplexWindow::differential(int n) const {
  auto it = d.find(n);
  if (it != d.end()) return it->second;
  return SparseMatrix(dim(n - 1), dim(n));
}

std::vector<int> ComplexWindow::square_failures() const {
  std::vector<int> bad;
  for (const auto& [n, m] : d) {
    auto below = d.find(n - 1);
    if (below == d.end()) continue;
    if (!multiply(below->second, m).is_zero()) bad.push_back(n);
  }
  return bad;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

struct Block {
  std::vector<int> below, middle, above;  // sorted global indices in C_{n-1}, C_n, C_{n+1}
};

struct BlockResult {
  int cycles = 0;
  int boundaries = 0;
  std::vector<SparseVector> representatives;  // global C_n indices
  std::vector<SparseVector> rows;             // echelon rows, global indices
  std::vector<SparseVector> tags;             // local representative numbering
};

SparseVector relabel(const SparseVector& v, const std::vector<int>& local_of) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(local_of[i], c);
  return out;
}

SparseVector globalize(const SparseVector& v, const std::vector<int>& global) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(global[i], c);
  return out;
}

BlockResult solve_block(const Block& b, const SparseMatrix& out, const SparseMatrix& in,
                        const std::vector<int>& local_below, const std::vector<int>& local_middle) {
  SparseMatrix out_local(static_cast<int>(b.below.size()), static_cast<int>(b.middle.size()));
  for (std::size_t j = 0; j < b.middle.size(); ++j) out_local.columns[j] = relabel(out.columns[b.middle[j]], local_below);
  BlockResult r;
  const auto cycles = kernel(out_local);
  r.cycles = static_cast<int>(cycles.size());
  Echelon e;
  for (int k : b.above)
    if (e.insert(relabel(in.columns[k], local_middle))) ++r.boundaries;
  int next = 0;
  for (const auto& z : cycles) {
    if (e.insert(z, SparseVector{{next, Scalar(1)}})) {
      r.representatives.push_back(globalize(z, b.middle));
      ++next;
    }
  }
  for (std::size_t i = 0; i < e.rows().size(); ++i) {
    r.rows.push_back(globalize(e.rows()[i], b.middle));
    r.tags.push_back(e.tags()[i]);
  }
  return r;
}

}  // namespace

Homology::Homology(const SparseMatrix& out, const SparseMatrix& in, int dimension) : out_(out) {
  if (out.cols != dimension || in.rows != dimension) throw std::invalid_argument("homology: shape mismatch");
  const int a = out.rows, b = dimension, c = in.cols;
  DisjointSets sets(a + b + c);
  for (int j = 0; j < b; ++j)
    for (const auto& [i, v] : out.columns[j]) sets.unite(a + j, i);
  for (int k = 0; k < c; ++k)
    for (const auto& [i, v] : in.columns[k]) sets.unite(a + b + k, a + i);

  std::map<int, Block> blocks;
  for (int j = 0; j < b; ++j) blocks[sets.find(a + j)].middle.push_back(j);
  for (int i = 0; i < a; ++i) {
    auto it = blocks.find(sets.find(i));
    if (it != blocks.end()) it->second.below.push_back(i);
  }
  for (int k = 0; k < c; ++k) {
    auto it = blocks.find(sets.find(a + b + k));
    if (it != blocks.end()) it->second.above.push_back(k);
  }
  std::vector<Block> list;
  for (auto& [root, blk] : blocks) list.push_back(std::move(blk));
  components_ = static_cast<int>(list.size());

  std::vector<int> local_below(a, -1), local_middle(b, -1);
  for (const auto& blk : list) {
    for (std::size_t i = 0; i < blk.below.size(); ++i) local_below[blk.below[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < blk.middle.size(); ++j) local_middle[blk.middle[j]] = static_cast<int>(j);
  }
  // Largest blocks first.
  std::vector<std::size_t> order(list.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return list[x].middle.size() > list[y].middle.size(); });
  std::vector<BlockResult> results(list.size());
  parallel_for(order.size(), [&](std::size_t t) {
    const std::size_t i = order[t];
    results[i] = solve_block(list[i], out, in, local_below, local_middle);
  });

  for (auto& r : results) {
    const int offset = static_cast<int>(representatives_.size());
    cycles_ += r.cycles;
    boundaries_ += r.boundaries;
    for (auto& rep : r.representatives) representatives_.push_back(std::move(rep));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      SparseVector tag = r.tags[i];
      for (auto& e : tag) e.first += offset;
      echelon_.append(std::move(r.rows[i]), std::move(tag));
    }
  }
}

bool Homology::is_cycle(const SparseVector& v) const { return out_.apply(v).empty(); }

std::optional<SparseVector> Homology::coordinates(const SparseVector& cycle) const {
  if (!is_cycle(cycle)) return std::nullopt;
  Echelon::Reduction r = echelon_.reduce(cycle);
  if (!r.residual.empty()) throw std::logic_error("cycle outside boundaries plus representatives");
  for (auto& e : r.tag) e.second = -e.second;
  return r.tag;
}

Homology homology(const ComplexWindow& w, int n) {
  return Homology(w.differential(n), w.differential(n + 1), w.dim(n));
}

int FilteredComplex::max_level() const {
  int top = 0;
  for (const auto& [n, lv] : levels)
    for (int l : lv) top = std::max(top, l);
  return top;
}

ComplexWindow FilteredComplex::restrict(int level, std::map<int, std::vector<int>>* kept_out) const {
  std::map<int, std::vector<int>> kept;
  std::map<int, std::vector<int>> position;
  for (int n = full.lo; n <= full.hi; ++n) {
    auto& k = kept[n];
    auto& pos = position[n];
    pos.assign(full.dim(n), -1);
    const auto lv = levels.find(n);
    for (int i = 0; i < full.dim(n); ++i) {
      if (lv == levels.end() || lv->second.at(i) <= level) {
        pos[i] = static_cast<int>(k.size());
        k.push_back(i);
      }
    }
  }
  ComplexWindow out;
  out.lo = full.lo;
  out.hi = full.hi;
  for (int n = full.lo; n <= full.hi; ++n) out.dims[n] = static_cast<int>(kept[n].size());
  for (const auto& [n, m] : full.d) {
    SparseMatrix sub(out.dim(n - 1), out.dim(n));
    const auto& rows = position[n - 1];
    for (std::size_t j = 0; j < kept[n].size(); ++j) {
      for (const auto& [i, c] : m.columns[kept[n][j]]) {
        if (rows[i] >= 0) {
          sub.columns[j].emplace_back(rows[i], c);
        } else if (kind == Kind::Subcomplex) {
          throw std::logic_error("subcomplex window is not closed under the differential");
        }
      }
    }
    out.d.emplace(n, std::move(sub));
  }
  if (kept_out) *kept_out = std::move(kept);
  return out;
}

SparseVector project(const SparseVector& v, const std::vector<int>& kept) {
  SparseVector out;
  for (const auto& [i, c] : v) {
    auto it = std::lower_bound(kept.begin(), kept.end(), i);
    if (it != kept.end() && *it == i) out.emplace_back(static_cast<int>(it - kept.begin()), c);
  }
  return out;
}

SparseVector embed(const SparseVector& v, const std::vector<int>& kept) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(kept.at(i), c);
  return out;
}

namespace {

bool inside(const SparseVector& v, const std::vector<int>& kept) {
  for (const auto& [i, c] : v)
    if (!std::binary_search(kept.begin(), kept.end(), i)) return false;
  return true;
}

}  // namespace

std::optional<SparseVector> ClassBasis::solve(const SparseVector& reference_coordinates) const {
  Echelon::Reduction r = span.reduce(reference_coordinates);
  if (!r.residual.empty()) return std::nullopt;
  for (auto& e : r.tag) e.second = -e.second;
  return r.tag;
}

std::optional<SparseVector> StableClasses::reference_coordinates(const SparseVector& full_cycle) const {
  if (kind == FilteredComplex::Kind::Subcomplex && !inside(full_cycle, reference_kept)) return std::nullopt;
  return reference->coordinates(project(full_cycle, reference_kept));
}

namespace {

void add_class(ClassBasis& basis, const SparseVector& representative, const SparseVector& coords) {
  const int index = basis.dimension();
  if (basis.span.insert(coords, SparseVector{{index, Scalar(1)}})) {
    basis.representatives.push_back(representative);
    basis.coordinates.push_back(coords);
  }
}

}  // namespace

namespace {

// Stable classes from the homology of X_level (h1) and X_level2 (h2).
StableClasses stable_from(FilteredComplex::Kind kind, int n, int level, int level2, const Homology& h1,
                          const std::vector<int>& kept1, const Homology& h2, const std::vector<int>& kept2) {
  StableClasses out;
  out.degree = n;
  out.level = level;
  out.level2 = level2;
  out.kind = kind;
  const bool quotient = kind == FilteredComplex::Kind::Quotient;
  const Homology& reference = quotient ? h1 : h2;
  const Homology& source = quotient ? h2 : h1;
  const std::vector<int>& reference_kept = quotient ? kept1 : kept2;
  const std::vector<int>& source_kept = quotient ? kept2 : kept1;
  out.reference_kept = reference_kept;
  out.reference_betti = reference.dimension();
  out.basis.reference_dimension = reference.dimension();
  for (const auto& r : source.representatives()) {
    const SparseVector full = embed(r, source_kept);
    auto coords = reference.coordinates(project(full, reference_kept));
    if (!coords) throw std::logic_error("comparison map does not send cycles to cycles");
    add_class(out.basis, full, *coords);
  }
  out.reference = reference;
  return out;
}

}  // namespace

StableClasses stable_classes(const FilteredComplex& c, int n, int level, int level2) {
  if (level2 < level) throw std::invalid_argument("stable_classes: level2 < level");
  std::map<int, std::vector<int>> kept1, kept2;
  const ComplexWindow x1 = c.restrict(level, &kept1);
  const ComplexWindow x2 = c.restrict(level2, &kept2);
  const Homology h1 = homology(x1, n);
  const Homology h2 = homology(x2, n);
  return stable_from(c.kind, n, level, level2, h1, kept1[n], h2, kept2[n]);
}

Stabilized stabilized_classes(const FilteredComplex& c, int n, int level, int delta) {
  if (delta <= 0) throw std::invalid_argument("stabilized_classes: delta must be positive");
  std::map<int, std::vector<int>> k0, k1, k2;
  const Homology h0 = homology(c.restrict(level, &k0), n);
  const Homology h1 = homology(c.restrict(level + delta, &k1), n);
  const Homology h2 = homology(c.restrict(level + 2 * delta, &k2), n);
  Stabilized out;
  out.near_dimension = stable_from(c.kind, n, level, level + delta, h0, k0[n], h1, k1[n]).dimension();
  out.classes = stable_from(c.kind, n, level, level + 2 * delta, h0, k0[n], h2, k2[n]);
  return out;
}

StableClasses all_classes(const ComplexWindow& w, int n) {
  StableClasses out;
  out.degree = n;
  out.kind = FilteredComplex::Kind::Subcomplex;
  Homology h = homology(w, n);
  out.reference_kept.resize(w.dim(n));
  std::iota(out.reference_kept.begin(), out.reference_kept.end(), 0);
  out.reference_betti = h.dimension();
  out.basis.reference_dimension = h.dimension();
  for (int i = 0; i < h.dimension(); ++i) add_class(out.basis, h.representatives()[i], SparseVector{{i, Scalar(1)}});
  out.reference = std::move(h);
  return out;
}

std::string InducedMap::verdict() const {
  if (outside_target) return "image outside target classes";
  if (isomorphism()) return "iso";
  if (injective()) return "injective";
  if (surjective()) return "surjective";
  return "neither";
}

InducedMap induced_map(const StableClasses& source, const StableClasses& target,
                       const std::vector<SparseVector>& images) {
  if (static_cast<int>(images.size()) != source.dimension()) throw std::invalid_argument("induced_map: image count");
  InducedMap m;
  m.degree = source.degree;
  m.source_dimension = source.dimension();
  m.target_dimension = target.dimension();
  Echelon e;
  for (const auto& image : images) {
    auto coords = target.reference_coordinates(image);
    std::optional<SparseVector> column;
    if (coords) column = target.basis.solve(*coords);
    if (!column) {
      m.outside_target = true;
      m.columns.emplace_back();
      continue;
    }
    e.insert(*column);
    m.columns.push_back(*column);
  }
  m.rank = static_cast<int>(e.rank());
  return m;
}

}  // namespace hochlab
