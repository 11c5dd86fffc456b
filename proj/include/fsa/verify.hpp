#pragma once

// Randomized sweep comparing hom_dim against hom_oracle.
//
// Even trials use generic random modules. Odd trials use a random direct sum
// of catalog modules under a random base change: generic modules have the same
// Hom into every homogeneous tube, so they cannot tell lambda from -lambda.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fsa/catalog.hpp"
#include "fsa/homdim.hpp"
#include "fsa/lambda_module.hpp"

namespace fsa {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  // Every n_v of a test module is at most max_dim.
  std::size_t max_dim = 6;
  EnumerationBounds bounds;
  std::optional<SpecMutation> mutation;
};

struct Mismatch {
  std::size_t trial = 0;
  LambdaModule module;
  IndecDescriptor desc;
  std::size_t formula = 0;
  std::size_t oracle = 0;
};

struct VerifyReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<Mismatch> mismatches;

  bool all_agree() const noexcept { return mismatches.empty(); }
};

VerifyReport verify(Field field, const VerifyOptions& options);

}  // namespace fsa
