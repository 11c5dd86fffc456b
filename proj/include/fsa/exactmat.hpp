#pragma once

// Exact scalars (rationals or a prime field) and dense matrices over them.
//
// Zero-row and zero-column matrices are ordinary values: a 1x0 matrix has
// rank 0 and corank 1, and it is the neutral element of hstack in its
// row dimension.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fsa/errors.hpp"

namespace fsa {

class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws InvalidParams unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);
  // Accepts "rationals" or "prime:<p>".
  static Field parse(std::string_view text);

  bool is_rationals() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  // 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

void require_same_field(const Field& a, const Field& b, std::string_view context);

class FieldElement {
 public:
  explicit FieldElement(Field field) : field_(field) {}
  FieldElement(Field field, long long value);
  // Reduces num/den into the field; InvalidParams if den vanishes there.
  static FieldElement from_rational(Field field, const mpq_class& value);
  // "a", "-a" or "a/b" in decimal.
  static FieldElement parse(Field field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Only meaningful for the matching field kind.
  const mpq_class& rational() const noexcept { return q_; }
  std::uint64_t residue() const noexcept { return r_; }

  FieldElement inverse() const;

  // "a/b" (or "a" for integers) over the rationals, canonical residue mod p.
  std::string to_string() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

class ExactMatrix {
 public:
  // rows x cols zero matrix.
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);
  // Integer literal rows; all rows must have the same length.
  ExactMatrix(Field field, std::initializer_list<std::initializer_list<long long>> rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  FieldElement at(std::size_t i, std::size_t j) const;
  bool is_zero_at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FieldElement& value);
  void set(std::size_t i, std::size_t j, long long value);

  // Copies `block` into this matrix with its top-left corner at (row, col).
  void paste(std::size_t row, std::size_t col, const ExactMatrix& block);
  ExactMatrix block(std::size_t row, std::size_t col, std::size_t nrows,
                    std::size_t ncols) const;

  ExactMatrix transpose() const;
  ExactMatrix scaled(const FieldElement& factor) const;
  ExactMatrix operator-() const;
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  bool is_zero() const noexcept;

  std::string to_string() const;

 private:
  friend class Elimination;

  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * cols_ + j; }
  void check_index(std::size_t i, std::size_t j) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  // Exactly one of these is populated, depending on the field kind.
  std::vector<mpq_class> q_;
  std::vector<std::uint64_t> r_;
};

ExactMatrix zeros(Field field, std::size_t m, std::size_t n);
ExactMatrix identity(Field field, std::size_t n);
// Ones on the anti-diagonal.
ExactMatrix anti_identity(Field field, std::size_t n);
// Upper-triangular Jordan block: lambda on the diagonal, ones above it.
ExactMatrix jordan(std::size_t n, const FieldElement& lambda);
// [I_n | 0]: n x (n+1), kills the last basis vector.
ExactMatrix pi_drop_last(Field field, std::size_t n);
// [0 | I_n]: n x (n+1), kills the first basis vector.
ExactMatrix pi_drop_first(Field field, std::size_t n);

// Concatenation. All blocks must share a field; DimensionMismatch names the
// first offending block. An empty list is rejected with InvalidParams.
ExactMatrix hstack(std::span<const ExactMatrix> blocks);
ExactMatrix vstack(std::span<const ExactMatrix> blocks);
ExactMatrix hstack(std::initializer_list<ExactMatrix> blocks);
ExactMatrix vstack(std::initializer_list<ExactMatrix> blocks);

using BlockGrid = std::vector<std::vector<ExactMatrix>>;
// Every block row must agree on height and every block column on width.
ExactMatrix block_grid(const BlockGrid& grid);

// [[a, 0], [0, b]]
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

std::size_t rank(const ExactMatrix& a);
// rows - rank: the dimension of the left null space.
std::size_t corank(const ExactMatrix& a);

// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm rref(const ExactMatrix& a);

// Columns form a basis of {x : a x = 0}; cols(a) x nullity. The basis is the
// standard one read off the RREF (one vector per free column, in order).
ExactMatrix kernel_basis(const ExactMatrix& a);

// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace fsa
