#pragma once

// Representations of the four subspace quiver: four arrows i -> 0, i = 1..4,
// encoded as matrices (A, B, C, D) that share the row count n_0.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "fsa/exactmat.hpp"

namespace fsa {

struct DimVector {
  std::array<std::size_t, 5> d{};

  std::size_t operator[](std::size_t v) const { return d[v]; }
  std::size_t& operator[](std::size_t v) { return d[v]; }

  friend DimVector operator+(const DimVector& a, const DimVector& b) {
    DimVector out;
    for (std::size_t v = 0; v < 5; ++v) out.d[v] = a.d[v] + b.d[v];
    return out;
  }
  friend DimVector operator*(std::size_t k, const DimVector& a) {
    DimVector out;
    for (std::size_t v = 0; v < 5; ++v) out.d[v] = k * a.d[v];
    return out;
  }
  friend bool operator==(const DimVector&, const DimVector&) = default;

  std::string to_string() const;
};

// A permutation of the subspace vertices {1,2,3,4}; vertex 0 is fixed.
class VertexPermutation {
 public:
  // images[i-1] = sigma(i).
  explicit VertexPermutation(std::array<int, 4> images);

  static VertexPermutation identity() { return VertexPermutation({1, 2, 3, 4}); }
  // The cycle (1 2 3 4).
  static VertexPermutation rotation() { return VertexPermutation({2, 3, 4, 1}); }
  static std::vector<VertexPermutation> all();

  int operator()(int vertex) const;
  VertexPermutation inverse() const;
  // (a * b)(i) = a(b(i))
  friend VertexPermutation operator*(const VertexPermutation& a, const VertexPermutation& b);
  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

  VertexPermutation power(int k) const;

  const std::array<int, 4>& images() const noexcept { return images_; }

 private:
  std::array<int, 4> images_;
};

class LambdaModule {
 public:
  // Throws DimensionMismatch when row counts differ and FieldMismatch when
  // the matrices live over different fields.
  LambdaModule(ExactMatrix a, ExactMatrix b, ExactMatrix c, ExactMatrix d);

  // All spaces zero-dimensional.
  static LambdaModule zero(Field field);

  const Field& field() const noexcept { return maps_[0].field(); }
  // Slot 1..4 for A..D.
  const ExactMatrix& map(int slot) const;
  const ExactMatrix& a() const noexcept { return maps_[0]; }
  const ExactMatrix& b() const noexcept { return maps_[1]; }
  const ExactMatrix& c() const noexcept { return maps_[2]; }
  const ExactMatrix& d() const noexcept { return maps_[3]; }

  std::size_t top_dim() const noexcept { return maps_[0].rows(); }
  DimVector dim_vector() const;

  friend bool operator==(const LambdaModule&, const LambdaModule&) = default;

 private:
  std::array<ExactMatrix, 4> maps_;
};

DimVector dim_vector(const LambdaModule& m);

// Componentwise block-diagonal sum.
LambdaModule module_direct_sum(const LambdaModule& m, const LambdaModule& n);
LambdaModule module_direct_sum(const std::vector<LambdaModule>& summands, Field field);

// Slot sigma(i) of the result holds slot i of the input; the rotation maps
// (A, B, C, D) to (D, A, B, C).
LambdaModule permute_vertices(const LambdaModule& m, const VertexPermutation& sigma);

// <d, e> = sum_v d_v e_v - sum_{i=1..4} d_i e_0
long long euler_form(const DimVector& d, const DimVector& e);

// (U A V_1, U B V_2, U C V_3, U D V_4). With U and V_i invertible the result
// is isomorphic to m.
LambdaModule base_change(const LambdaModule& m, const ExactMatrix& u,
                         const std::array<ExactMatrix, 4>& v);

// Random helpers used by the verification sweep and by tests.
ExactMatrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
ExactMatrix random_invertible(Field field, std::size_t n, std::mt19937_64& rng);
// Each map is a product of two random factors through a random inner
// dimension, so ranks vary instead of being generically maximal.
LambdaModule random_module(Field field, const DimVector& dims, std::mt19937_64& rng);
LambdaModule random_base_change(const LambdaModule& m, std::mt19937_64& rng);

}  // namespace fsa
