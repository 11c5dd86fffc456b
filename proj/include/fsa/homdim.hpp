#pragma once

// dim Hom(M, X) for indecomposable X as the corank of a structured
// coefficient matrix.
//
// For each family the homomorphism conditions reduce to a system in the rows
// y_1..y_{m_0} of F_0 alone (every y is a 1 x n_0 row). Written in a suitable
// order of the y's, the system reads [y_.. y_..] * N = 0 where N is "almost
// block diagonal": a head pattern, followed by copies of a step pattern placed
// along the diagonal, consecutive copies tied together by a link pattern.
// Every block of N is zero or +-A, +-B, +-C, +-D (or -lambda*D), so N has
// (block rows * n_0) scalar rows and dim Hom(M, X) = corank(N).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsa/catalog.hpp"
#include "fsa/exactmat.hpp"
#include "fsa/lambda_module.hpp"

namespace fsa {

// One block of a pattern: sign * (lambda if scaled) * map(slot), slot 1..4
// for A..D; slot 0 is a zero block.
struct BlockTerm {
  int slot = 0;
  int sign = 1;
  bool lambda_scaled = false;

  bool is_zero() const noexcept { return slot == 0; }
  friend bool operator==(const BlockTerm&, const BlockTerm&) = default;
};

using BlockPattern = std::vector<std::vector<BlockTerm>>;

// How consecutive step copies are tied together.
enum class BuilderKind {
  // The link sits in the rows just below the previous copy, in its last
  // columns.
  LinkBelow,
  // The link sits in the last rows of the previous copy, in the first columns
  // of the next one.
  LinkAbove,
  // As LinkAbove, and one more link closes the final copy in fresh columns.
  LinkAboveClosed,
};

// The base families the coefficient patterns are written for; every other
// family is a vertex relabeling of one of these.
enum class SpecFamily {
  PostprojectiveZero,  // P(n,0), n >= 1
  PostprojectiveOdd,   // P(2n+1,i)
  PostprojectiveEven,  // P(2n,i)
  PreinjectiveZero,    // I(n,0), n >= 1
  PreinjectiveOdd,     // I(2n+1,i)
  PreinjectiveEven,    // I(2n,i), n >= 1
  Homogeneous,         // R(l,lambda) and R(s,2l,t)
  ExceptionalOdd,      // R(s,2l-1,t)
};

std::string_view to_string(SpecFamily family);

struct CoeffSpec {
  SpecFamily family = SpecFamily::Homogeneous;
  BuilderKind kind = BuilderKind::LinkAbove;
  BlockPattern head;
  BlockPattern step;
  BlockPattern link;
  std::size_t repetitions = 0;
  // 1-based indices of the rows of F_0, in block-row order.
  std::vector<std::size_t> y_order;
  // Value substituted into lambda-scaled terms.
  std::optional<FieldElement> lambda;

  std::size_t block_rows() const;
  std::size_t block_cols() const;
};

// A deliberate corruption of one nonzero block of one base family's pattern,
// used to check that the verification sweep notices wrong formulas.
enum class PatternPart { Head, Step, Link };
enum class MutationKind { FlipSign, Zero };

struct SpecMutation {
  SpecFamily family;
  PatternPart part;
  std::size_t row;
  std::size_t col;
  MutationKind kind = MutationKind::FlipSign;

  // "<family>:<head|step|link>:<row>:<col>[:flip|:zero]", family one of p0,
  // p-odd, p-even, i0, i-odd, i-even, r-hom, r-odd.
  static SpecMutation parse(std::string_view text);
  std::string to_string() const;
};

// True for P(0,0), I(0,0) and I(0,i), which have closed forms.
bool has_closed_form(const IndecDescriptor& desc);

// InvalidParams for closed-form descriptors.
CoeffSpec coeff_spec(const IndecDescriptor& desc, const SpecMutation* mutation = nullptr);

// Substitutes the maps of m into the pattern layout.
ExactMatrix assemble(const CoeffSpec& spec, const LambdaModule& m);

ExactMatrix coeff_matrix(const LambdaModule& m, const IndecDescriptor& desc,
                         const SpecMutation* mutation = nullptr);

std::size_t hom_dim(const LambdaModule& m, const IndecDescriptor& desc,
                    const SpecMutation* mutation = nullptr);

std::vector<std::size_t> hom_vector(const LambdaModule& m, const std::vector<IndecDescriptor>& descs,
                                    const SpecMutation* mutation = nullptr);

}  // namespace fsa
