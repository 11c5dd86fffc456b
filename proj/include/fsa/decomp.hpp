#pragma once

// Direct-summand multiplicities from hom-dimension vectors.
//
// For a candidate set T of indecomposables, hom_vector(M, T) is additive in M,
// so M = sum mu_Y Y gives G^T mu = hom_vector(M, T) with G[Y][X] = [Y, X].
// The system is solved exactly over Q and the answer is accepted only if mu is
// a non-negative integer vector that also conserves the dimension vector.

#include <cstddef>
#include <vector>

#include "fsa/catalog.hpp"
#include "fsa/exactmat.hpp"
#include "fsa/lambda_module.hpp"

namespace fsa {

struct Summand {
  IndecDescriptor desc;
  std::size_t multiplicity = 0;

  friend bool operator==(const Summand&, const Summand&) = default;
};

// Summands in candidate (enumeration) order, multiplicities >= 1.
using Multiset = std::vector<Summand>;

std::string to_string(const Multiset& summands);

class Decomposer {
 public:
  Decomposer(Field field, EnumerationBounds bounds);

  const std::vector<IndecDescriptor>& candidates() const noexcept { return candidates_; }
  // Integer matrix G[Y][X] = [Y, X] over the candidates.
  const ExactMatrix& gram() const noexcept { return gram_; }

  Multiset decompose(const LambdaModule& m) const;

 private:
  Field field_;
  std::vector<IndecDescriptor> candidates_;
  std::vector<DimVector> dims_;
  ExactMatrix gram_;
  bool singular_ = false;
};

Multiset decompose(const LambdaModule& m, const EnumerationBounds& bounds);

bool is_isomorphic(const LambdaModule& m, const LambdaModule& n, const EnumerationBounds& bounds);

// Direct sum of build(desc)^multiplicity over the multiset.
LambdaModule assemble_multiset(const Multiset& summands, Field field);

}  // namespace fsa
