#pragma once

// Reference Hom computation straight from the definition: the unknowns are
// the entries of F_0..F_4 and the equations are F_0 A = A' F_1, F_0 B = B' F_2,
// F_0 C = C' F_3, F_0 D = D' F_4. Deliberately unstructured; it exists to
// check the coefficient-matrix formulas.

#include <array>
#include <cstddef>
#include <vector>

#include "fsa/exactmat.hpp"
#include "fsa/lambda_module.hpp"

namespace fsa {

struct HomSystem {
  // One row per scalar equation, one column per unknown.
  ExactMatrix coefficients;
  // Column offset of the first entry of F_v; entries of F_v are row-major.
  std::array<std::size_t, 5> offsets{};
  DimVector source;
  DimVector target;

  std::size_t unknowns() const noexcept { return coefficients.cols(); }
};

// Homomorphism m -> x as (F_0, ..., F_4) with F_v of size target_v x source_v.
using Homomorphism = std::array<ExactMatrix, 5>;

HomSystem hom_system(const LambdaModule& m, const LambdaModule& x);

std::size_t hom_oracle(const LambdaModule& m, const LambdaModule& x);

// A basis of Hom(m, x) read off the null space of hom_system(m, x).
std::vector<Homomorphism> hom_basis(const LambdaModule& m, const LambdaModule& x);

bool is_homomorphism(const LambdaModule& m, const LambdaModule& x, const Homomorphism& f);

}  // namespace fsa
