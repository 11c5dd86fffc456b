#include "fsa/exactmat.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

namespace fsa {

namespace {

constexpr std::uint64_t kMaxPrime = 0xFFFFFFFFull;

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw Error(ErrorCode::ParseError, "not a decimal integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

struct ModOps {
  using Scalar = std::uint64_t;
  std::uint64_t p;

  bool is_zero(Scalar a) const { return a == 0; }
  Scalar inverse(Scalar a) const { return inv_mod(a, p); }
  void scale(Scalar& a, Scalar f) const { a = a * f % p; }
  // a -= f * b
  void axpy(Scalar& a, Scalar f, Scalar b) const { a = (a + (p - f) * b) % p; }
};

struct RatOps {
  using Scalar = mpq_class;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  Scalar inverse(const Scalar& a) const { return 1 / a; }
  void scale(Scalar& a, const Scalar& f) const { a *= f; }
  void axpy(Scalar& a, const Scalar& f, const Scalar& b) const { a -= f * b; }
};

// Gauss-Jordan in place on a row-major rows x cols buffer. When `reduce_above`
// is false only the rows below each pivot are cleared, which is all rank needs.
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, std::vector<typename Ops::Scalar>& a,
                                   std::size_t rows, std::size_t cols, bool reduce_above) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && ops.is_zero(a[found * cols + col])) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = col; j < cols; ++j) {
        std::swap(a[found * cols + j], a[pivot_row * cols + j]);
      }
    }
    auto* prow = &a[pivot_row * cols];
    const auto inv = ops.inverse(prow[col]);
    for (std::size_t j = col; j < cols; ++j) ops.scale(prow[j], inv);

    const std::size_t first = reduce_above ? 0 : pivot_row + 1;
    for (std::size_t r = first; r < rows; ++r) {
      if (r == pivot_row) continue;
      auto* row = &a[r * cols];
      if (ops.is_zero(row[col])) continue;
      const auto factor = row[col];
      for (std::size_t j = col; j < cols; ++j) ops.axpy(row[j], factor, prow[j]);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime_number(p)) {
    throw Error(ErrorCode::InvalidParams,
                "field characteristic must be a prime below 2^32, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t == "rationals" || t == "Q") return rationals();
  constexpr std::string_view prefix = "prime:";
  if (t.rfind(prefix, 0) == 0) {
    const std::string digits = t.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorCode::ParseError, "bad prime in field spec '" + t + "'");
    }
    return prime(p);
  }
  throw Error(ErrorCode::ParseError, "field spec must be 'rationals' or 'prime:<p>', got '" + t + "'");
}

std::string Field::to_string() const {
  return is_rationals() ? std::string("rationals") : "prime:" + std::to_string(p_);
}

void require_same_field(const Field& a, const Field& b, std::string_view context) {
  if (a != b) {
    throw Error(ErrorCode::FieldMismatch, std::string(context) + ": " + a.to_string() + " vs " +
                                              b.to_string());
  }
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Field field, long long value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = mpq_class(mpz_class(std::to_string(value), 10));
  } else {
    const auto p = static_cast<long long>(field_.characteristic());
    long long r = value % p;
    if (r < 0) r += p;
    r_ = static_cast<std::uint64_t>(r);
  }
}

FieldElement FieldElement::from_rational(Field field, const mpq_class& value) {
  FieldElement out(field);
  if (field.is_rationals()) {
    out.q_ = value;
    out.q_.canonicalize();
    return out;
  }
  const auto p = field.characteristic();
  const auto den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorCode::InvalidParams,
                "denominator vanishes in " + field.to_string() + ": " + value.get_str());
  }
  out.r_ = reduce_mpz(value.get_num(), p) * inv_mod(den, p) % p;
  return out;
}

FieldElement FieldElement::parse(Field field, std::string_view text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  mpq_class value;
  if (slash == std::string::npos) {
    value = mpq_class(parse_integer(t));
  } else {
    const mpz_class num = parse_integer(trim(std::string_view(t).substr(0, slash)));
    const mpz_class den = parse_integer(trim(std::string_view(t).substr(slash + 1)));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + t + "'");
    value = mpq_class(num, den);
    value.canonicalize();
  }
  return from_rational(field, value);
}

bool FieldElement::is_zero() const noexcept {
  return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0;
}

bool FieldElement::is_one() const noexcept {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidParams, "division by zero");
  FieldElement out(field_);
  if (field_.is_rationals()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = inv_mod(r_, field_.characteristic());
  }
  return out;
}

std::string FieldElement::to_string() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "FieldElement +");
  FieldElement out(a.field_);
  if (a.field_.is_rationals()) {
    out.q_ = a.q_ + b.q_;
  } else {
    out.r_ = (a.r_ + b.r_) % a.field_.characteristic();
  }
  return out;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "FieldElement *");
  FieldElement out(a.field_);
  if (a.field_.is_rationals()) {
    out.q_ = a.q_ * b.q_;
  } else {
    out.r_ = a.r_ * b.r_ % a.field_.characteristic();
  }
  return out;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::operator-() const {
  FieldElement out(field_);
  if (field_.is_rationals()) {
    out.q_ = -q_;
  } else {
    out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_rationals()) {
    q_.resize(rows * cols);
  } else {
    r_.assign(rows * cols, 0);
  }
}

ExactMatrix::ExactMatrix(Field field, std::initializer_list<std::initializer_list<long long>> rows)
    : ExactMatrix(field, rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix literal row " + std::to_string(i) + " has " +
                      std::to_string(row.size()) + " entries, expected " + std::to_string(cols_));
    }
    std::size_t j = 0;
    for (long long v : row) set(i, j++, v);
    ++i;
  }
}

void ExactMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                    std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  }
}

FieldElement ExactMatrix::at(std::size_t i, std::size_t j) const {
  check_index(i, j);
  if (field_.is_rationals()) return FieldElement::from_rational(field_, q_[index(i, j)]);
  return FieldElement(field_, static_cast<long long>(r_[index(i, j)]));
}

bool ExactMatrix::is_zero_at(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return field_.is_rationals() ? sgn(q_[index(i, j)]) == 0 : r_[index(i, j)] == 0;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const FieldElement& value) {
  check_index(i, j);
  require_same_field(field_, value.field(), "ExactMatrix::set");
  if (field_.is_rationals()) {
    q_[index(i, j)] = value.rational();
  } else {
    r_[index(i, j)] = value.residue();
  }
}

void ExactMatrix::set(std::size_t i, std::size_t j, long long value) {
  set(i, j, FieldElement(field_, value));
}

void ExactMatrix::paste(std::size_t row, std::size_t col, const ExactMatrix& block) {
  require_same_field(field_, block.field_, "ExactMatrix::paste");
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "block " + std::to_string(block.rows_) + "x" + std::to_string(block.cols_) +
                    " at (" + std::to_string(row) + "," + std::to_string(col) +
                    ") does not fit in " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (std::size_t i = 0; i < block.rows_; ++i) {
    for (std::size_t j = 0; j < block.cols_; ++j) {
      if (field_.is_rationals()) {
        q_[index(row + i, col + j)] = block.q_[block.index(i, j)];
      } else {
        r_[index(row + i, col + j)] = block.r_[block.index(i, j)];
      }
    }
  }
}

ExactMatrix ExactMatrix::block(std::size_t row, std::size_t col, std::size_t nrows,
                               std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block extraction outside matrix");
  }
  ExactMatrix out(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      if (field_.is_rationals()) {
        out.q_[out.index(i, j)] = q_[index(row + i, col + j)];
      } else {
        out.r_[out.index(i, j)] = r_[index(row + i, col + j)];
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_rationals()) {
        out.q_[out.index(j, i)] = q_[index(i, j)];
      } else {
        out.r_[out.index(j, i)] = r_[index(i, j)];
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::scaled(const FieldElement& factor) const {
  require_same_field(field_, factor.field(), "ExactMatrix::scaled");
  ExactMatrix out = *this;
  if (field_.is_rationals()) {
    for (auto& v : out.q_) v *= factor.rational();
  } else {
    const auto p = field_.characteristic();
    for (auto& v : out.r_) v = v * factor.residue() % p;
  }
  return out;
}

ExactMatrix ExactMatrix::operator-() const { return scaled(FieldElement(field_, -1)); }

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a.field_, b.field_, "ExactMatrix +");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum of differently shaped operands");
  }
  ExactMatrix out = a;
  if (a.field_.is_rationals()) {
    for (std::size_t k = 0; k < out.q_.size(); ++k) out.q_[k] += b.q_[k];
  } else {
    const auto p = a.field_.characteristic();
    for (std::size_t k = 0; k < out.r_.size(); ++k) out.r_[k] = (out.r_[k] + b.r_[k]) % p;
  }
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + (-b); }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a.field_, b.field_, "ExactMatrix *");
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  ExactMatrix out(a.field_, a.rows_, b.cols_);
  if (a.field_.is_rationals()) {
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const mpq_class& aik = a.q_[a.index(i, k)];
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out.q_[out.index(i, j)] += aik * b.q_[b.index(k, j)];
      }
    }
  } else {
    const auto p = a.field_.characteristic();
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto aik = a.r_[a.index(i, k)];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          auto& o = out.r_[out.index(i, j)];
          o = (o + aik * b.r_[b.index(k, j)]) % p;
        }
      }
    }
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.q_ == b.q_ &&
         a.r_ == b.r_;
}

bool ExactMatrix::is_zero() const noexcept {
  if (field_.is_rationals()) {
    return std::all_of(q_.begin(), q_.end(), [](const mpq_class& v) { return sgn(v) == 0; });
  }
  return std::all_of(r_.begin(), r_.end(), [](std::uint64_t v) { return v == 0; });
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " [";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Elimination-backed queries. Friend access lets these work on the raw buffers.

class Elimination {
 public:
  static std::size_t rank(const ExactMatrix& a) {
    if (a.empty()) return 0;
    // Eliminate along the shorter side; rank(A) = rank(A^T).
    const bool flip = a.rows_ > a.cols_;
    const ExactMatrix& src = a;
    const std::size_t rows = flip ? a.cols_ : a.rows_;
    const std::size_t cols = flip ? a.rows_ : a.cols_;
    if (a.field_.is_rationals()) {
      std::vector<mpq_class> buf = flip ? src.transpose().q_ : src.q_;
      return eliminate(RatOps{}, buf, rows, cols, false).size();
    }
    std::vector<std::uint64_t> buf = flip ? src.transpose().r_ : src.r_;
    return eliminate(ModOps{a.field_.characteristic()}, buf, rows, cols, false).size();
  }

  static EchelonForm rref(const ExactMatrix& a) {
    ExactMatrix reduced = a;
    std::vector<std::size_t> pivots;
    if (a.field_.is_rationals()) {
      pivots = eliminate(RatOps{}, reduced.q_, a.rows_, a.cols_, true);
    } else {
      pivots = eliminate(ModOps{a.field_.characteristic()}, reduced.r_, a.rows_, a.cols_, true);
    }
    return {std::move(reduced), std::move(pivots)};
  }
};

std::size_t rank(const ExactMatrix& a) { return Elimination::rank(a); }

std::size_t corank(const ExactMatrix& a) { return a.rows() - rank(a); }

EchelonForm rref(const ExactMatrix& a) { return Elimination::rref(a); }

ExactMatrix kernel_basis(const ExactMatrix& a) {
  const auto [reduced, pivots] = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  ExactMatrix basis(a.field(), n, n - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, k, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!reduced.is_zero_at(r, free)) basis.set(pivots[r], k, -reduced.at(r, free));
    }
    ++k;
  }
  return basis;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a.field(), b.field(), "solve");
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side has wrong row count");
  }
  const auto [reduced, pivots] = rref(hstack({a, b}));
  const std::size_t n = a.cols();
  ExactMatrix x(a.field(), n, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= n) return std::nullopt;  // pivot in the augmented part
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[r], j, reduced.at(r, n + j));
  }
  return x;
}

// ---------------------------------------------------------------------------
// Builders

ExactMatrix zeros(Field field, std::size_t m, std::size_t n) { return ExactMatrix(field, m, n); }

ExactMatrix identity(Field field, std::size_t n) {
  ExactMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

ExactMatrix anti_identity(Field field, std::size_t n) {
  ExactMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, n - 1 - i, 1);
  return out;
}

ExactMatrix jordan(std::size_t n, const FieldElement& lambda) {
  ExactMatrix out(lambda.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i, i, lambda);
    if (i + 1 < n) out.set(i, i + 1, 1);
  }
  return out;
}

ExactMatrix pi_drop_last(Field field, std::size_t n) {
  ExactMatrix out(field, n, n + 1);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

ExactMatrix pi_drop_first(Field field, std::size_t n) {
  ExactMatrix out(field, n, n + 1);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i + 1, 1);
  return out;
}

ExactMatrix hstack(std::span<const ExactMatrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidParams, "hstack of an empty block list");
  const auto& first = blocks.front();
  std::size_t cols = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    require_same_field(first.field(), blocks[k].field(), "hstack block " + std::to_string(k));
    if (blocks[k].rows() != first.rows()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "hstack block " + std::to_string(k) + " has " + std::to_string(blocks[k].rows()) +
                      " rows, expected " + std::to_string(first.rows()));
    }
    cols += blocks[k].cols();
  }
  ExactMatrix out(first.field(), first.rows(), cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    out.paste(0, offset, b);
    offset += b.cols();
  }
  return out;
}

ExactMatrix vstack(std::span<const ExactMatrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidParams, "vstack of an empty block list");
  const auto& first = blocks.front();
  std::size_t rows = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    require_same_field(first.field(), blocks[k].field(), "vstack block " + std::to_string(k));
    if (blocks[k].cols() != first.cols()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vstack block " + std::to_string(k) + " has " + std::to_string(blocks[k].cols()) +
                      " cols, expected " + std::to_string(first.cols()));
    }
    rows += blocks[k].rows();
  }
  ExactMatrix out(first.field(), rows, first.cols());
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    out.paste(offset, 0, b);
    offset += b.rows();
  }
  return out;
}

ExactMatrix hstack(std::initializer_list<ExactMatrix> blocks) {
  return hstack(std::span<const ExactMatrix>(blocks.begin(), blocks.size()));
}

ExactMatrix vstack(std::initializer_list<ExactMatrix> blocks) {
  return vstack(std::span<const ExactMatrix>(blocks.begin(), blocks.size()));
}

ExactMatrix block_grid(const BlockGrid& grid) {
  if (grid.empty() || grid.front().empty()) {
    throw Error(ErrorCode::InvalidParams, "block_grid needs at least one block");
  }
  const std::size_t nbr = grid.size();
  const std::size_t nbc = grid.front().size();
  const Field field = grid.front().front().field();
  std::vector<std::size_t> heights(nbr), widths(nbc);
  for (std::size_t i = 0; i < nbr; ++i) {
    if (grid[i].size() != nbc) {
      throw Error(ErrorCode::DimensionMismatch, "block_grid row " + std::to_string(i) +
                                                    " has " + std::to_string(grid[i].size()) +
                                                    " blocks, expected " + std::to_string(nbc));
    }
    heights[i] = grid[i].front().rows();
  }
  for (std::size_t j = 0; j < nbc; ++j) widths[j] = grid.front()[j].cols();
  for (std::size_t i = 0; i < nbr; ++i) {
    for (std::size_t j = 0; j < nbc; ++j) {
      const auto& b = grid[i][j];
      require_same_field(field, b.field(), "block_grid");
      if (b.rows() != heights[i] || b.cols() != widths[j]) {
        throw Error(ErrorCode::DimensionMismatch,
                    "block_grid block (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ", expected " +
                        std::to_string(heights[i]) + "x" + std::to_string(widths[j]));
      }
    }
  }
  std::size_t total_rows = 0, total_cols = 0;
  for (auto h : heights) total_rows += h;
  for (auto w : widths) total_cols += w;
  ExactMatrix out(field, total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < nbr; ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < nbc; ++j) {
      out.paste(r0, c0, grid[i][j]);
      c0 += widths[j];
    }
    r0 += heights[i];
  }
  return out;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a.field(), b.field(), "direct_sum");
  ExactMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.paste(0, 0, a);
  out.paste(a.rows(), a.cols(), b);
  return out;
}

}  // namespace fsa
