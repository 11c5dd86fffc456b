#pragma once

// Matrix representatives of every indecomposable representation of the four
// subspace quiver, named by their family and parameters.
//
//   P(m, j), I(m, j)   postprojective / preinjective, m >= 0, j = 0..4
//   R(l, lambda)       homogeneous tube, l >= 1, lambda not in {0, 1}
//   R(s, m, t)         exceptional tubes t in {0, 1, inf}, s in {0, 1}, m >= 1
//
// The "table parameter" of a descriptor is the n (or l) the families are
// indexed by: P(2n+1, i) and P(2n, i) both have parameter n, R(s, 2l, t) and
// R(s, 2l-1, t) both have parameter l.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsa/exactmat.hpp"
#include "fsa/lambda_module.hpp"

namespace fsa {

enum class Family { Postprojective, Preinjective, RegularHomogeneous, RegularExceptional };

enum class TubePoint { Zero, One, Infinity };

std::string_view to_string(TubePoint point);

class IndecDescriptor {
 public:
  static IndecDescriptor postprojective(std::size_t index, int vertex);
  static IndecDescriptor preinjective(std::size_t index, int vertex);
  static IndecDescriptor homogeneous(std::size_t length, FieldElement lambda);
  static IndecDescriptor exceptional(int s, std::size_t length, TubePoint point);

  Family family() const noexcept { return family_; }
  // m for P(m, j) / I(m, j); l for R(l, lambda); m for R(s, m, t).
  std::size_t index() const noexcept { return index_; }
  int vertex() const noexcept { return vertex_; }
  int s() const noexcept { return s_; }
  TubePoint point() const noexcept { return point_; }
  const std::optional<FieldElement>& lambda() const noexcept { return lambda_; }

  std::size_t parameter() const noexcept;
  bool is_postprojective() const noexcept { return family_ == Family::Postprojective; }
  bool is_preinjective() const noexcept { return family_ == Family::Preinjective; }
  bool is_regular() const noexcept {
    return family_ == Family::RegularHomogeneous || family_ == Family::RegularExceptional;
  }

  std::string to_string() const;

  friend bool operator==(const IndecDescriptor&, const IndecDescriptor&) = default;

 private:
  IndecDescriptor() = default;

  Family family_ = Family::Postprojective;
  std::size_t index_ = 0;
  int vertex_ = 0;
  int s_ = 0;
  TubePoint point_ = TubePoint::Zero;
  std::optional<FieldElement> lambda_;
};

// Accepts "P(n,j)", "I(n,j)", "R(l,lambda)" and "R(s,m,t)" with t in
// {0, 1, inf}; whitespace is ignored and lambda is read in `field`.
IndecDescriptor parse_descriptor(std::string_view text, Field field);

LambdaModule build(const IndecDescriptor& desc, Field field);

// The homogeneous-tube construction evaluated at an arbitrary lambda,
// including the points 0 and 1 that descriptors reject.
LambdaModule homogeneous_construction(std::size_t length, const FieldElement& lambda);

// Dimension vector as given by the family formula, independent of build().
DimVector declared_dim_vector(const IndecDescriptor& desc);

struct EnumerationBounds {
  std::size_t max_n = 0;
  std::size_t max_l = 0;
  // Homogeneous tube labels; 0 and 1 are skipped (they are exceptional).
  std::vector<FieldElement> lambdas;
};

// Postprojectives by ascending parameter, then regulars by ascending l, then
// preinjectives by descending parameter. Duplicate-free.
std::vector<IndecDescriptor> enumerate(const EnumerationBounds& bounds);

// The vertex permutation relating an exceptional family (s, t) to R(0, m, 0):
// build(R(s,m,t)) == permute_vertices(build(R(0,m,0)), exceptional_relabeling(s,t)).
VertexPermutation exceptional_relabeling(int s, TubePoint point);

}  // namespace fsa
