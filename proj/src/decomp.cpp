#include "fsa/decomp.hpp"

#include <sstream>
#include <utility>

#include "fsa/errors.hpp"
#include "fsa/homdim.hpp"

namespace fsa {

namespace {

ExactMatrix column(const std::vector<std::size_t>& values) {
  ExactMatrix out(Field::rationals(), values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.set(i, 0, static_cast<long long>(values[i]));
  }
  return out;
}

constexpr std::size_t kListed = 12;

// Non-empty entries as "desc=value", truncated.
std::string listing(const std::vector<IndecDescriptor>& candidates,
                    const std::vector<std::string>& values) {
  std::ostringstream os;
  os << "[";
  std::size_t shown = 0;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].empty()) continue;
    ++nonzero;
    if (shown == kListed) continue;
    os << (shown > 0 ? ", " : "") << candidates[i].to_string() << "=" << values[i];
    ++shown;
  }
  if (nonzero > shown) os << ", ... " << nonzero - shown << " more";
  os << "]";
  return os.str();
}

}  // namespace

std::string to_string(const Multiset& summands) {
  std::ostringstream os;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i > 0) os << " + ";
    os << summands[i].multiplicity << " x " << summands[i].desc.to_string();
  }
  return os.str();
}

Decomposer::Decomposer(Field field, EnumerationBounds bounds)
    : field_(field), candidates_(enumerate(bounds)), gram_(Field::rationals(), 0, 0) {
  for (const auto& lambda : bounds.lambdas) require_same_field(lambda.field(), field, "Decomposer");
  const std::size_t k = candidates_.size();
  std::vector<LambdaModule> modules;
  modules.reserve(k);
  for (const auto& desc : candidates_) {
    modules.push_back(build(desc, field_));
    dims_.push_back(modules.back().dim_vector());
  }
  gram_ = ExactMatrix(Field::rationals(), k, k);
  for (std::size_t y = 0; y < k; ++y) {
    const auto row = hom_vector(modules[y], candidates_);
    for (std::size_t x = 0; x < k; ++x) {
      if (row[x] != 0) gram_.set(y, x, static_cast<long long>(row[x]));
    }
  }
  singular_ = rank(gram_) < k;
}

Multiset Decomposer::decompose(const LambdaModule& m) const {
  require_same_field(m.field(), field_, "decompose");
  const std::size_t k = candidates_.size();
  const std::vector<std::size_t> h = hom_vector(m, candidates_);
  const ExactMatrix gt = gram_.transpose();
  const auto solution = solve(gt, column(h));

  if (!solution) {
    std::vector<std::string> h_text(k);
    for (std::size_t x = 0; x < k; ++x) {
      if (h[x] != 0) h_text[x] = std::to_string(h[x]);
    }
    throw Error(ErrorCode::IncompleteCandidates,
                "hom vector is not a combination of the candidates; residual hom vector " +
                    listing(candidates_, h_text));
  }
  if (singular_) {
    throw Error(ErrorCode::AmbiguousSolution,
                "Gram matrix of the " + std::to_string(k) +
                    " candidates is singular; multiplicities are not determined");
  }

  std::vector<mpq_class> mu(k);
  std::vector<std::string> offending(k);
  bool integral = true;
  for (std::size_t i = 0; i < k; ++i) {
    mu[i] = solution->at(i, 0).rational();
    if (mu[i] < 0 || mu[i].get_den() != 1) {
      integral = false;
      offending[i] = mu[i].get_str();
    }
  }
  if (!integral) {
    // What remains of h once the acceptable multiplicities are accounted for.
    std::vector<mpq_class> residual(h.begin(), h.end());
    for (std::size_t y = 0; y < k; ++y) {
      if (!offending[y].empty() || mu[y] == 0) continue;
      for (std::size_t x = 0; x < k; ++x) residual[x] -= mu[y] * gram_.at(y, x).rational();
    }
    std::vector<std::string> residual_text(k);
    for (std::size_t x = 0; x < k; ++x) {
      if (residual[x] != 0) residual_text[x] = residual[x].get_str();
    }
    throw Error(ErrorCode::IncompleteCandidates,
                "no non-negative integer multiplicities; offending " + listing(candidates_, offending) +
                    "; residual hom vector " + listing(candidates_, residual_text));
  }

  Multiset out;
  DimVector total;
  for (std::size_t i = 0; i < k; ++i) {
    if (mu[i] == 0) continue;
    const std::size_t count = mu[i].get_num().get_ui();
    out.push_back({candidates_[i], count});
    total = total + count * dims_[i];
  }
  if (!(total == m.dim_vector())) {
    throw Error(ErrorCode::IncompleteCandidates,
                "summands " + to_string(out) + " have dimension vector " + total.to_string() +
                    ", module has " + m.dim_vector().to_string());
  }
  return out;
}

Multiset decompose(const LambdaModule& m, const EnumerationBounds& bounds) {
  return Decomposer(m.field(), bounds).decompose(m);
}

bool is_isomorphic(const LambdaModule& m, const LambdaModule& n, const EnumerationBounds& bounds) {
  require_same_field(m.field(), n.field(), "is_isomorphic");
  if (!(m.dim_vector() == n.dim_vector())) return false;
  const Decomposer decomposer(m.field(), bounds);
  return decomposer.decompose(m) == decomposer.decompose(n);
}

LambdaModule assemble_multiset(const Multiset& summands, Field field) {
  std::vector<LambdaModule> parts;
  for (const auto& s : summands) {
    const LambdaModule x = build(s.desc, field);
    for (std::size_t i = 0; i < s.multiplicity; ++i) parts.push_back(x);
  }
  return module_direct_sum(parts, field);
}

}  // namespace fsa
