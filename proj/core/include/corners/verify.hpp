#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace corners {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int max_dim = 4;
  int cases = 0;  // 0: the suite's default
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::map<std::string, std::size_t> counters;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }

  void check(bool ok, const std::string& what);
  void merge(const SuiteResult& other);
};

// Composition and identity laws for C(f) and the hat variant, plus the
// basic germ invariants, on random composable pairs.
SuiteResult functor_suite(const SuiteOptions& opt);
// Counts of strata and iterated boundaries of products against brute force.
SuiteResult product_suite(const SuiteOptions& opt);
// Lowering polynomial maps to germs commutes with composition.
SuiteResult poly_suite(const SuiteOptions& opt);
// Dimension, depth, interface conditions and kernel identification of fibre
// products of random transverse pairs.
SuiteResult fibre_suite(const SuiteOptions& opt);
// The corner identity for strongly transverse pairs.
SuiteResult corner_identity_suite(const SuiteOptions& opt);
// Mediators of random cones.
SuiteResult universal_suite(const SuiteOptions& opt);
// Orientation identities on projection instances and random germs.
SuiteResult sign_suite(const SuiteOptions& opt);
// Unoriented boundary formulas, including the b-submersive variants.
SuiteResult formula_suite(const SuiteOptions& opt);
// Classification chain and corner counts on the built-in complexes.
SuiteResult complex_suite(const SuiteOptions& opt);

std::vector<std::string> suite_names();
// "all" runs every suite. Throws std::invalid_argument for unknown names.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace corners
