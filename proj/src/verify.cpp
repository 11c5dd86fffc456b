#include "fsa/verify.hpp"

#include <algorithm>
#include <random>

#include "fsa/oracle.hpp"

namespace fsa {

namespace {

bool fits(const DimVector& d, std::size_t bound) {
  return std::all_of(d.d.begin(), d.d.end(), [&](std::size_t x) { return x <= bound; });
}

struct Pool {
  std::vector<LambdaModule> all;
  std::vector<LambdaModule> regular;
};

// Half of the summands come from the tubes, where generic modules are blind.
LambdaModule structured_module(const Pool& pool, std::size_t max_dim, Field field,
                               std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::bernoulli_distribution from_tubes(0.5);
  std::vector<LambdaModule> parts;
  DimVector total;
  const std::size_t wanted = count(rng);
  for (std::size_t attempt = 0; attempt < 20 && parts.size() < wanted; ++attempt) {
    const auto& source = from_tubes(rng) && !pool.regular.empty() ? pool.regular : pool.all;
    std::uniform_int_distribution<std::size_t> pick(0, source.size() - 1);
    const LambdaModule& x = source[pick(rng)];
    const DimVector next = total + x.dim_vector();
    if (!fits(next, max_dim)) continue;
    parts.push_back(x);
    total = next;
  }
  return random_base_change(module_direct_sum(parts, field), rng);
}

}  // namespace

VerifyReport verify(Field field, const VerifyOptions& options) {
  const std::vector<IndecDescriptor> descs = enumerate(options.bounds);
  std::vector<LambdaModule> targets;
  targets.reserve(descs.size());
  for (const auto& desc : descs) targets.push_back(build(desc, field));

  Pool pool;
  for (std::size_t k = 0; k < descs.size(); ++k) {
    if (!fits(targets[k].dim_vector(), options.max_dim)) continue;
    pool.all.push_back(targets[k]);
    if (descs[k].is_regular()) pool.regular.push_back(targets[k]);
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> dim(0, options.max_dim);
  const SpecMutation* mutation = options.mutation ? &*options.mutation : nullptr;

  VerifyReport report;
  for (std::size_t t = 0; t < options.trials; ++t) {
    LambdaModule m = LambdaModule::zero(field);
    if (t % 2 == 1 && !pool.all.empty()) {
      m = structured_module(pool, options.max_dim, field, rng);
    } else {
      DimVector d;
      for (std::size_t v = 0; v < 5; ++v) d[v] = dim(rng);
      m = random_module(field, d, rng);
    }
    for (std::size_t k = 0; k < descs.size(); ++k) {
      const std::size_t formula = hom_dim(m, descs[k], mutation);
      const std::size_t oracle = hom_oracle(m, targets[k]);
      ++report.checks;
      if (formula != oracle) report.mismatches.push_back({t, m, descs[k], formula, oracle});
    }
    ++report.trials;
  }
  return report;
}

}  // namespace fsa
