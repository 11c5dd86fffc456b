#pragma once

#include <random>

#include "fsa/exactmat.hpp"
#include "fsa/lambda_module.hpp"

namespace fsa::test {

inline Field gf(std::uint64_t p = 32003) { return Field::prime(p); }
inline Field q() { return Field::rationals(); }

inline DimVector random_dims(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> pick(0, max_dim);
  DimVector d;
  for (std::size_t v = 0; v < 5; ++v) d[v] = pick(rng);
  return d;
}

inline LambdaModule module_of(Field f, std::initializer_list<std::initializer_list<long long>> a,
                              std::initializer_list<std::initializer_list<long long>> b,
                              std::initializer_list<std::initializer_list<long long>> c,
                              std::initializer_list<std::initializer_list<long long>> d) {
  return LambdaModule(ExactMatrix(f, a), ExactMatrix(f, b), ExactMatrix(f, c), ExactMatrix(f, d));
}

}  // namespace fsa::test
