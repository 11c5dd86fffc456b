#include "fsa/lambda_module.hpp"

#include <algorithm>
#include <numeric>

namespace fsa {

std::string DimVector::to_string() const {
  std::string out = "[";
  for (std::size_t v = 0; v < 5; ++v) out += (v ? "," : "") + std::to_string(d[v]);
  return out + "]";
}

VertexPermutation::VertexPermutation(std::array<int, 4> images) : images_(images) {
  std::array<int, 4> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{1, 2, 3, 4}) {
    throw Error(ErrorCode::InvalidParams, "vertex permutation must be a bijection of {1,2,3,4}");
  }
}

std::vector<VertexPermutation> VertexPermutation::all() {
  std::vector<VertexPermutation> out;
  std::array<int, 4> images{1, 2, 3, 4};
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

int VertexPermutation::operator()(int vertex) const {
  if (vertex == 0) return 0;
  if (vertex < 1 || vertex > 4) throw Error(ErrorCode::InvalidParams, "vertex out of range");
  return images_[vertex - 1];
}

VertexPermutation VertexPermutation::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 1; i <= 4; ++i) inv[images_[i - 1] - 1] = i;
  return VertexPermutation(inv);
}

VertexPermutation operator*(const VertexPermutation& a, const VertexPermutation& b) {
  std::array<int, 4> out{};
  for (int i = 1; i <= 4; ++i) out[i - 1] = a(b(i));
  return VertexPermutation(out);
}

VertexPermutation VertexPermutation::power(int k) const {
  const VertexPermutation base = k < 0 ? inverse() : *this;
  VertexPermutation out = identity();
  for (int i = 0; i < std::abs(k); ++i) out = base * out;
  return out;
}

LambdaModule::LambdaModule(ExactMatrix a, ExactMatrix b, ExactMatrix c, ExactMatrix d)
    : maps_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (int k = 1; k < 4; ++k) {
    require_same_field(maps_[0].field(), maps_[k].field(), "LambdaModule");
    if (maps_[k].rows() != maps_[0].rows()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "LambdaModule: map " + std::to_string(k + 1) + " has " +
                      std::to_string(maps_[k].rows()) + " rows, expected " +
                      std::to_string(maps_[0].rows()));
    }
  }
}

LambdaModule LambdaModule::zero(Field field) {
  return LambdaModule(zeros(field, 0, 0), zeros(field, 0, 0), zeros(field, 0, 0),
                      zeros(field, 0, 0));
}

const ExactMatrix& LambdaModule::map(int slot) const {
  if (slot < 1 || slot > 4) throw Error(ErrorCode::InvalidParams, "slot must be 1..4");
  return maps_[slot - 1];
}

DimVector LambdaModule::dim_vector() const {
  return DimVector{{maps_[0].rows(), maps_[0].cols(), maps_[1].cols(), maps_[2].cols(),
                    maps_[3].cols()}};
}

DimVector dim_vector(const LambdaModule& m) { return m.dim_vector(); }

LambdaModule module_direct_sum(const LambdaModule& m, const LambdaModule& n) {
  require_same_field(m.field(), n.field(), "module_direct_sum");
  return LambdaModule(direct_sum(m.a(), n.a()), direct_sum(m.b(), n.b()),
                      direct_sum(m.c(), n.c()), direct_sum(m.d(), n.d()));
}

LambdaModule module_direct_sum(const std::vector<LambdaModule>& summands, Field field) {
  LambdaModule out = LambdaModule::zero(field);
  for (const auto& s : summands) out = module_direct_sum(out, s);
  return out;
}

LambdaModule permute_vertices(const LambdaModule& m, const VertexPermutation& sigma) {
  std::array<const ExactMatrix*, 4> slots{};
  for (int i = 1; i <= 4; ++i) slots[sigma(i) - 1] = &m.map(i);
  return LambdaModule(*slots[0], *slots[1], *slots[2], *slots[3]);
}

long long euler_form(const DimVector& d, const DimVector& e) {
  long long out = 0;
  for (std::size_t v = 0; v < 5; ++v) out += static_cast<long long>(d[v] * e[v]);
  for (std::size_t i = 1; i <= 4; ++i) out -= static_cast<long long>(d[i] * e[0]);
  return out;
}

LambdaModule base_change(const LambdaModule& m, const ExactMatrix& u,
                         const std::array<ExactMatrix, 4>& v) {
  return LambdaModule(u * m.a() * v[0], u * m.b() * v[1], u * m.c() * v[2], u * m.d() * v[3]);
}

ExactMatrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  ExactMatrix out(field, rows, cols);
  if (field.is_prime()) {
    std::uniform_int_distribution<long long> dist(0, static_cast<long long>(field.characteristic()) - 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out.set(i, j, dist(rng));
  } else {
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out.set(i, j, dist(rng));
  }
  return out;
}

ExactMatrix random_invertible(Field field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    ExactMatrix candidate = random_matrix(field, n, n, rng);
    if (rank(candidate) == n) return candidate;
  }
}

LambdaModule random_module(Field field, const DimVector& dims, std::mt19937_64& rng) {
  std::array<ExactMatrix, 4> maps{zeros(field, 0, 0), zeros(field, 0, 0), zeros(field, 0, 0),
                                  zeros(field, 0, 0)};
  for (std::size_t i = 1; i <= 4; ++i) {
    const std::size_t full = std::min(dims[0], dims[i]);
    std::uniform_int_distribution<std::size_t> inner(0, full);
    const std::size_t r = inner(rng);
    maps[i - 1] = random_matrix(field, dims[0], r, rng) * random_matrix(field, r, dims[i], rng);
  }
  return LambdaModule(maps[0], maps[1], maps[2], maps[3]);
}

LambdaModule random_base_change(const LambdaModule& m, std::mt19937_64& rng) {
  const auto dims = m.dim_vector();
  const Field f = m.field();
  return base_change(m, random_invertible(f, dims[0], rng),
                     {random_invertible(f, dims[1], rng), random_invertible(f, dims[2], rng),
                      random_invertible(f, dims[3], rng), random_invertible(f, dims[4], rng)});
}

}  // namespace fsa
