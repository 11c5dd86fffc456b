#include "fsa/homdim.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace fsa {

namespace {

constexpr int kA = 1, kB = 2, kC = 3, kD = 4;

BlockTerm zero() { return {}; }
BlockTerm pos(int slot) { return {slot, 1, false}; }
BlockTerm neg(int slot) { return {slot, -1, false}; }
BlockTerm neg_lambda(int slot) { return {slot, -1, true}; }

struct NamedFamily {
  SpecFamily family;
  std::string_view key;
};

constexpr std::array<NamedFamily, 8> kFamilyKeys{{
    {SpecFamily::PostprojectiveZero, "p0"},
    {SpecFamily::PostprojectiveOdd, "p-odd"},
    {SpecFamily::PostprojectiveEven, "p-even"},
    {SpecFamily::PreinjectiveZero, "i0"},
    {SpecFamily::PreinjectiveOdd, "i-odd"},
    {SpecFamily::PreinjectiveEven, "i-even"},
    {SpecFamily::Homogeneous, "r-hom"},
    {SpecFamily::ExceptionalOdd, "r-odd"},
}};

std::size_t pattern_rows(const BlockPattern& p) { return p.size(); }
std::size_t pattern_cols(const BlockPattern& p) { return p.empty() ? 0 : p.front().size(); }

// Specs for the base families, parameter n (or l).

CoeffSpec postprojective_zero(std::size_t n) {
  CoeffSpec s;
  s.family = SpecFamily::PostprojectiveZero;
  s.kind = BuilderKind::LinkAboveClosed;
  s.head = {{pos(kA), zero(), pos(kB), zero(), pos(kC), pos(kD)},
            {zero(), zero(), zero(), pos(kB), zero(), neg(kD)},
            {zero(), pos(kA), zero(), zero(), neg(kC), zero()}};
  s.step = {{zero(), neg(kD), zero(), pos(kB)}, {neg(kC), zero(), pos(kA), zero()}};
  s.link = {{pos(kC), zero()}, {zero(), pos(kD)}};
  s.repetitions = n - 1;
  s.y_order = {n + 1};
  for (std::size_t k = 1; k <= n; ++k) {
    s.y_order.push_back(n + 1 - k);
    s.y_order.push_back(n + 1 + k);
  }
  return s;
}

CoeffSpec postprojective_odd(std::size_t n) {
  CoeffSpec s;
  s.family = SpecFamily::PostprojectiveOdd;
  s.kind = BuilderKind::LinkAboveClosed;
  s.step = {{pos(kA), zero(), pos(kC), pos(kD)}, {zero(), pos(kB), zero(), neg(kD)}};
  s.head = s.step;
  s.link = {{neg(kA)}};
  s.repetitions = n;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    s.y_order.push_back(i);
    s.y_order.push_back(n + 1 + i);
  }
  return s;
}

CoeffSpec postprojective_even(std::size_t n) {
  CoeffSpec s;
  s.family = SpecFamily::PostprojectiveEven;
  s.kind = BuilderKind::LinkBelow;
  s.head = {{pos(kB), pos(kC), pos(kD)}};
  s.step = {{pos(kC), pos(kA), zero(), zero()}, {neg(kC), zero(), pos(kB), pos(kD)}};
  s.link = {{neg(kD)}};
  s.repetitions = n;
  s.y_order = {1};
  for (std::size_t i = 1; i <= n; ++i) {
    s.y_order.push_back(n + 1 + i);
    s.y_order.push_back(i + 1);
  }
  return s;
}

CoeffSpec preinjective_zero(std::size_t n) {
  CoeffSpec s;
  s.family = SpecFamily::PreinjectiveZero;
  s.kind = BuilderKind::LinkAbove;
  s.head = {{pos(kD), pos(kC), zero(), zero()},
            {zero(), neg(kC), zero(), pos(kB)},
            {neg(kD), zero(), pos(kA), zero()}};
  s.step = {{zero(), neg(kC), zero(), pos(kB)}, {neg(kD), zero(), pos(kA), zero()}};
  s.link = {{pos(kD), zero()}, {zero(), pos(kC)}};
  s.repetitions = n - 1;
  s.y_order = {n + 1};
  for (std::size_t k = 1; k <= n; ++k) {
    s.y_order.push_back(n + 1 + k);
    s.y_order.push_back(n + 1 - k);
  }
  return s;
}

CoeffSpec preinjective_odd(std::size_t n) {
  CoeffSpec s;
  s.family = SpecFamily::PreinjectiveOdd;
  s.kind = BuilderKind::LinkAbove;
  s.head = {{pos(kA)}};
  s.step = {{pos(kC), pos(kD), zero(), pos(kB)}, {zero(), neg(kD), pos(kA), zero()}};
  s.link = {{neg(kC)}};
  s.repetitions = n;
  s.y_order = {n + 1};
  for (std::size_t k = 1; k <= n; ++k) {
    s.y_order.push_back(2 * n + 2 - k);
    s.y_order.push_back(n + 1 - k);
  }
  return s;
}

CoeffSpec preinjective_even(std::size_t n) {
  CoeffSpec s;
  s.family = SpecFamily::PreinjectiveEven;
  s.kind = BuilderKind::LinkAbove;
  s.head = {{pos(kB), zero(), pos(kD)}, {zero(), pos(kC), neg(kD)}};
  s.step = {{pos(kA), pos(kB), zero(), pos(kD)}, {zero(), zero(), pos(kC), neg(kD)}};
  s.link = {{neg(kA)}};
  s.repetitions = n - 1;
  for (std::size_t p = 1; p <= n; ++p) {
    s.y_order.push_back(p);
    s.y_order.push_back(n + p);
  }
  return s;
}

CoeffSpec homogeneous(std::size_t l, FieldElement lambda) {
  CoeffSpec s;
  s.family = SpecFamily::Homogeneous;
  s.kind = BuilderKind::LinkAbove;
  s.step = {{pos(kD), pos(kC), pos(kB), zero()}, {neg_lambda(kD), neg(kC), zero(), pos(kA)}};
  s.head = s.step;
  s.link = {{neg(kD)}};
  s.repetitions = l - 1;
  for (std::size_t i = 1; i <= l; ++i) {
    s.y_order.push_back(l + 1 - i);
    s.y_order.push_back(2 * l + 1 - i);
  }
  s.lambda = std::move(lambda);
  return s;
}

CoeffSpec exceptional_odd(std::size_t l) {
  CoeffSpec s;
  s.family = SpecFamily::ExceptionalOdd;
  s.kind = BuilderKind::LinkAbove;
  s.head = {{pos(kA), pos(kC)}};
  s.step = {{pos(kB), pos(kD), zero(), pos(kA)}, {zero(), zero(), pos(kC), neg(kA)}};
  s.link = {{neg(kB)}};
  s.repetitions = l - 1;
  s.y_order = {l};
  for (std::size_t p = 1; p + 1 <= l; ++p) {
    s.y_order.push_back(p);
    s.y_order.push_back(l + p);
  }
  return s;
}

void relabel(BlockPattern& pattern, const VertexPermutation& sigma) {
  for (auto& row : pattern) {
    for (auto& term : row) {
      if (!term.is_zero()) term.slot = sigma(term.slot);
    }
  }
}

// A family X = sigma(X_base) satisfies Hom(M, X) = Hom(sigma^{-1} M, X_base),
// and slot i of sigma^{-1} M is slot sigma(i) of M.
void relabel(CoeffSpec& spec, const VertexPermutation& sigma) {
  relabel(spec.head, sigma);
  relabel(spec.step, sigma);
  relabel(spec.link, sigma);
}

void apply(CoeffSpec& spec, const SpecMutation& mutation) {
  if (spec.family != mutation.family) return;
  BlockPattern* pattern = mutation.part == PatternPart::Head   ? &spec.head
                          : mutation.part == PatternPart::Step ? &spec.step
                                                               : &spec.link;
  if (mutation.row >= pattern_rows(*pattern) || mutation.col >= pattern_cols(*pattern)) {
    throw Error(ErrorCode::InvalidParams, "mutation " + mutation.to_string() + " is out of range");
  }
  BlockTerm& term = (*pattern)[mutation.row][mutation.col];
  if (term.is_zero()) {
    throw Error(ErrorCode::InvalidParams, "mutation " + mutation.to_string() + " targets a zero block");
  }
  if (mutation.kind == MutationKind::FlipSign) {
    term.sign *= -1;
  } else {
    term = BlockTerm{};
  }
}

// With lambda = 0 the scaled blocks vanish; the table prints them as zeros.
void drop_lambda_terms(CoeffSpec& spec) {
  for (BlockPattern* p : {&spec.head, &spec.step, &spec.link}) {
    for (auto& row : *p) {
      for (auto& term : row) {
        if (term.lambda_scaled) term = BlockTerm{};
      }
    }
  }
  spec.lambda.reset();
}

void place(std::vector<std::vector<BlockTerm>>& grid, const BlockPattern& pattern, std::size_t r0,
           std::size_t c0) {
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    for (std::size_t j = 0; j < pattern[i].size(); ++j) {
      const BlockTerm& t = pattern[i][j];
      if (t.is_zero()) continue;
      auto& cell = grid[r0 + i][c0 + j];
      if (!cell.is_zero()) {
        throw Error(ErrorCode::InvalidParams, "coefficient patterns overlap");
      }
      cell = t;
    }
  }
}

std::vector<std::vector<BlockTerm>> layout(const CoeffSpec& spec) {
  std::vector<std::vector<BlockTerm>> grid(spec.block_rows(),
                                           std::vector<BlockTerm>(spec.block_cols()));
  place(grid, spec.head, 0, 0);
  std::size_t row_end = pattern_rows(spec.head);
  std::size_t col_end = pattern_cols(spec.head);
  const std::size_t link_rows = pattern_rows(spec.link);
  const std::size_t link_cols = pattern_cols(spec.link);
  for (std::size_t k = 0; k < spec.repetitions; ++k) {
    if (spec.kind == BuilderKind::LinkBelow) {
      place(grid, spec.link, row_end, col_end - link_cols);
    } else {
      place(grid, spec.link, row_end - link_rows, col_end);
    }
    place(grid, spec.step, row_end, col_end);
    row_end += pattern_rows(spec.step);
    col_end += pattern_cols(spec.step);
  }
  if (spec.kind == BuilderKind::LinkAboveClosed) {
    place(grid, spec.link, row_end - link_rows, col_end);
  }
  return grid;
}

}  // namespace

std::string_view to_string(SpecFamily family) {
  for (const auto& named : kFamilyKeys) {
    if (named.family == family) return named.key;
  }
  return "?";
}

std::size_t CoeffSpec::block_rows() const {
  return pattern_rows(head) + repetitions * pattern_rows(step);
}

std::size_t CoeffSpec::block_cols() const {
  std::size_t cols = pattern_cols(head) + repetitions * pattern_cols(step);
  if (kind == BuilderKind::LinkAboveClosed) cols += pattern_cols(link);
  return cols;
}

SpecMutation SpecMutation::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  const std::string whole(text);
  if (parts.size() != 4 && parts.size() != 5) {
    throw Error(ErrorCode::ParseError,
                "mutation must be family:part:row:col[:flip|:zero], got '" + whole + "'");
  }
  SpecMutation m{SpecFamily::Homogeneous, PatternPart::Step, 0, 0, MutationKind::FlipSign};
  if (parts.size() == 5) {
    if (parts[4] == "zero") {
      m.kind = MutationKind::Zero;
    } else if (parts[4] != "flip") {
      throw Error(ErrorCode::ParseError, "mutation kind must be flip or zero in '" + whole + "'");
    }
  }
  bool known = false;
  for (const auto& named : kFamilyKeys) {
    if (named.key == parts[0]) {
      m.family = named.family;
      known = true;
    }
  }
  if (!known) throw Error(ErrorCode::ParseError, "unknown family key in mutation '" + whole + "'");
  if (parts[1] == "head") {
    m.part = PatternPart::Head;
  } else if (parts[1] == "step") {
    m.part = PatternPart::Step;
  } else if (parts[1] == "link") {
    m.part = PatternPart::Link;
  } else {
    throw Error(ErrorCode::ParseError, "mutation part must be head, step or link in '" + whole + "'");
  }
  for (auto [index, target] : {std::pair{2, &m.row}, std::pair{3, &m.col}}) {
    const std::string& digits = parts[static_cast<std::size_t>(index)];
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), *target);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
      throw Error(ErrorCode::ParseError, "bad mutation coordinates in '" + whole + "'");
    }
  }
  return m;
}

std::string SpecMutation::to_string() const {
  const char* part_name = part == PatternPart::Head ? "head" : part == PatternPart::Step ? "step" : "link";
  return std::string(fsa::to_string(family)) + ":" + part_name + ":" + std::to_string(row) + ":" +
         std::to_string(col) + (kind == MutationKind::Zero ? ":zero" : ":flip");
}

bool has_closed_form(const IndecDescriptor& desc) {
  if (desc.family() == Family::Postprojective) return desc.index() == 0 && desc.vertex() == 0;
  if (desc.family() == Family::Preinjective) return desc.index() == 0;
  return false;
}

CoeffSpec coeff_spec(const IndecDescriptor& desc, const SpecMutation* mutation) {
  if (has_closed_form(desc)) {
    throw Error(ErrorCode::InvalidParams, desc.to_string() + " has a closed form, not a coefficient matrix");
  }
  const std::size_t n = desc.parameter();
  const bool odd = desc.index() % 2 == 1;
  CoeffSpec spec;
  VertexPermutation sigma = VertexPermutation::identity();
  switch (desc.family()) {
    case Family::Postprojective:
      if (desc.vertex() == 0) {
        spec = postprojective_zero(n);
      } else {
        spec = odd ? postprojective_odd(n) : postprojective_even(n);
        sigma = VertexPermutation::rotation().power(desc.vertex() - 1);
      }
      break;
    case Family::Preinjective:
      if (desc.vertex() == 0) {
        spec = preinjective_zero(n);
      } else {
        spec = odd ? preinjective_odd(n) : preinjective_even(n);
        sigma = VertexPermutation::rotation().power(desc.vertex() - 1);
      }
      break;
    case Family::RegularHomogeneous:
      spec = homogeneous(n, *desc.lambda());
      break;
    case Family::RegularExceptional:
      // R(0, 2l, 0) is the homogeneous construction at lambda = 0.
      spec = odd ? exceptional_odd(n) : homogeneous(n, FieldElement(Field::rationals(), 0));
      sigma = exceptional_relabeling(desc.s(), desc.point());
      break;
  }
  if (mutation) apply(spec, *mutation);
  if (desc.family() == Family::RegularExceptional && !odd) drop_lambda_terms(spec);
  relabel(spec, sigma);
  return spec;
}

ExactMatrix assemble(const CoeffSpec& spec, const LambdaModule& m) {
  const Field field = m.field();
  const auto grid = layout(spec);
  const std::size_t nbr = grid.size();
  const std::size_t nbc = nbr == 0 ? 0 : grid.front().size();
  const std::size_t n0 = m.top_dim();

  std::vector<std::size_t> widths(nbc, 0), offsets(nbc, 0);
  for (std::size_t j = 0; j < nbc; ++j) {
    int slot = 0;
    for (std::size_t i = 0; i < nbr; ++i) {
      const int s = grid[i][j].slot;
      if (s == 0) continue;
      if (slot != 0 && slot != s) {
        throw Error(ErrorCode::InvalidParams, "block column " + std::to_string(j) + " mixes maps");
      }
      slot = s;
    }
    widths[j] = slot == 0 ? 0 : m.map(slot).cols();
  }
  std::size_t total_cols = 0;
  for (std::size_t j = 0; j < nbc; ++j) {
    offsets[j] = total_cols;
    total_cols += widths[j];
  }

  // Lambda-scaled terms only make sense in the module's field; a zero lambda
  // carries over from any field.
  std::optional<FieldElement> lambda;
  if (spec.lambda) {
    if (spec.lambda->is_zero()) {
      lambda = FieldElement(field, 0);
    } else {
      require_same_field(field, spec.lambda->field(), "coefficient lambda");
      lambda = spec.lambda;
    }
  }

  ExactMatrix out(field, nbr * n0, total_cols);
  for (std::size_t i = 0; i < nbr; ++i) {
    for (std::size_t j = 0; j < nbc; ++j) {
      const BlockTerm& t = grid[i][j];
      if (t.is_zero() || widths[j] == 0 || n0 == 0) continue;
      FieldElement factor(field, t.sign);
      if (t.lambda_scaled) {
        if (!lambda) throw Error(ErrorCode::InvalidParams, "lambda-scaled block without a lambda");
        factor = factor * *lambda;
      }
      if (factor.is_zero()) continue;
      out.paste(i * n0, offsets[j], m.map(t.slot).scaled(factor));
    }
  }
  return out;
}

ExactMatrix coeff_matrix(const LambdaModule& m, const IndecDescriptor& desc,
                         const SpecMutation* mutation) {
  return assemble(coeff_spec(desc, mutation), m);
}

std::size_t hom_dim(const LambdaModule& m, const IndecDescriptor& desc,
                    const SpecMutation* mutation) {
  if (desc.lambda()) require_same_field(m.field(), desc.lambda()->field(), "hom_dim " + desc.to_string());
  if (has_closed_form(desc)) {
    if (desc.family() == Family::Postprojective) {
      return corank(hstack({m.a(), m.b(), m.c(), m.d()}));
    }
    return m.dim_vector()[static_cast<std::size_t>(desc.vertex())];
  }
  return corank(coeff_matrix(m, desc, mutation));
}

std::vector<std::size_t> hom_vector(const LambdaModule& m, const std::vector<IndecDescriptor>& descs,
                                    const SpecMutation* mutation) {
  std::vector<std::size_t> out;
  out.reserve(descs.size());
  for (const auto& d : descs) out.push_back(hom_dim(m, d, mutation));
  return out;
}

}  // namespace fsa
