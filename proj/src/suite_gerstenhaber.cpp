#include "hochlab/gerstenhaber.hpp"
#include "hochlab/suites.hpp"

namespace hochlab {

void suite_gerstenhaber(const RunConfig& cfg, const std::string& entry, Checks& checks) {
  auto inst = Instance::load(cfg.catalogue_dir, entry);
  // The product has many more classes per degree; its window is shorter.
  const int lo = entry == "product" ? -6 : -8;
  const int hi = entry == "product" ? 4 : 8;
  auto window = dual_hochschild_window(*inst, lo, hi, true);
  std::optional<HomologyOperations> ops;
  checks.run("laws", "Hochschild cohomology is a Gerstenhaber algebra", [&] {
    ops = window_operations(window, inst->dual);
    return verify_gerstenhaber(*ops).summary();
  });
  checks.run("mutation-detected", "a sign-twisted bracket is rejected", [&] {
    if (!ops) return std::string("operations unavailable");
    HomologyOperations twisted = *ops;
    auto bracket = ops->bracket;
    twisted.bracket = [bracket](int n, int i, int m, int j) {
      auto r = bracket(n, i, m, j);
      if (r && (n & 1))
        for (auto& e : *r) e.second = -e.second;
      return r;
    };
    if (verify_gerstenhaber(twisted).ok()) return std::string("the twisted bracket passes every law");
    return std::string();
  });
}

}  // namespace hochlab
