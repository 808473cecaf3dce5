#pragma once

#include "gendem/hull.hpp"

namespace gendem {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;  // first counterexample on failure, summary on pass
};

struct VerifyReport {
  Word word;
  Multidegree mdeg;
  long long depth = 1;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Cross-checks the crystal and piecewise-linear descriptions on one
// instance, for dilation levels up to `depth`:
//   lattice   - the string parameterization image equals the lattice points
//   transform - omega = A omega' + B m with unimodular A, B
//   eps       - the clamped PL formula reproduces eps_i everywhere
//   semigroup - sums of level-1 points satisfy level-2 membership
//   cone      - cone membership coincides with the parameterization test
//               against a large dominant weight
// Failures are data, not errors.
VerifyReport verify(const CartanData& cd, const Word& word, const Multidegree& m,
                    long long depth, std::size_t cap = kDefaultCap);

}  // namespace gendem
