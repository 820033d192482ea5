#include "hochlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "hochlab/parallel.hpp"

namespace hochlab {

const std::vector<std::string>& catalogue_names() {
  static const std::vector<std::string> names{"sphere2", "sphere3", "projplane", "acyclic23", "product"};
  return names;
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<std::string> all = catalogue_names();
  static const std::vector<SuiteInfo> suites{
      {"signs", 1, "every assembled differential squares to zero", all},
      {"beta", 2, "beta_A turns the Hochschild differential into minus the coderivation differential", all},
      {"gamma", 3, "gamma_C turns the coalgebra Hochschild differential into minus the derivation differential", all},
      {"derivations", 4, "s o i_A and j_A are Lie quasi-isomorphisms out of ~Der A", {"sphere2", "projplane"}},
      {"normalization", 5, "the normalized coalgebra complex includes quasi-isomorphically",
       {"sphere2", "sphere3", "projplane", "acyclic23"}},
      {"dual-comparison", 6, "D1 compares the coalgebra complex with the complex of the dual algebra", all},
      {"cobar-comparison", 7, "D2 compares the cobar algebra complex with the normalized coalgebra complex",
       {"sphere2", "sphere3", "projplane", "acyclic23"}},
      {"end-to-end", 8, "H(D_C) is an isomorphism of Gerstenhaber algebras", {"sphere2", "sphere3", "projplane"}},
      {"cobar-model", 9, "Omega~ C is tilde_A of the free model Omega-bar C", all},
      {"theta-square", 10, "Theta intertwines gamma_C and beta_A of D1", all},
      {"naturality", 11, "H(D_C) is natural for a quasi-isomorphism of coalgebras", {"sphere2"}},
      {"gerstenhaber", 12, "Hochschild cohomology of exterior-type duals is a Gerstenhaber algebra",
       {"sphere2", "sphere3", "product"}},
  };
  return suites;
}

namespace {

long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

const std::map<std::string, SuiteBody>& bodies() {
  static const std::map<std::string, SuiteBody> map{
      {"signs", suite_signs},
      {"beta", suite_beta},
      {"gamma", suite_gamma},
      {"derivations", suite_derivation_models},
      {"normalization", suite_normalization},
      {"dual-comparison", suite_dual_comparison},
      {"cobar-comparison", suite_cobar_comparison},
      {"end-to-end", suite_end_to_end},
      {"cobar-model", suite_cobar_model},
      {"theta-square", suite_theta_square},
      {"naturality", suite_naturality},
      {"gerstenhaber", suite_gerstenhaber},
  };
  return map;
}

}  // namespace

void Checks::run(const std::string& name, const std::string& anchor, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Status status = Status::Pass;
  std::string witness;
  try {
    witness = body();
    if (!witness.empty()) status = Status::Fail;
  } catch (const SaturationError& e) {
    status = Status::Unstable;
    witness = std::string("saturation: ") + e.what();
  } catch (const std::exception& e) {
    status = Status::Error;
    witness = e.what();
  }
  records_.push_back({module_, entry_ + "/" + name, anchor, status, witness, elapsed_ms(start)});
}

void Checks::record(const std::string& name, const std::string& anchor, Status status, const std::string& witness) {
  records_.push_back({module_, entry_ + "/" + name, anchor, status, witness, 0});
}

Report run_suites(const RunConfig& config) {
  struct Task {
    std::string suite;
    std::string entry;
  };
  std::vector<Task> tasks;
  for (const auto& info : suite_registry()) {
    if (std::find(config.suites.begin(), config.suites.end(), info.name) == config.suites.end()) continue;
    const auto& entries = config.any_entry ? config.catalogue : info.entries;
    for (const auto& e : entries)
      if (config.any_entry || config.catalogue.empty() ||
          std::find(config.catalogue.begin(), config.catalogue.end(), e) != config.catalogue.end())
        tasks.push_back({info.name, e});
  }
  std::vector<std::vector<Record>> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    Checks checks(tasks[i].suite, tasks[i].entry);
    try {
      bodies().at(tasks[i].suite)(config, tasks[i].entry, checks);
    } catch (const std::exception& e) {
      checks.record("setup", "suite setup", Status::Error, e.what());
    }
    results[i] = std::move(checks.records());
  });
  Report report;
  for (auto& r : results)
    for (auto& rec : r) report.records.push_back(std::move(rec));
  report.sort();
  return report;
}

}  // namespace hochlab
