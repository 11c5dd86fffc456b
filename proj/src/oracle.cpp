#include "fsa/oracle.hpp"

namespace fsa {

HomSystem hom_system(const LambdaModule& m, const LambdaModule& x) {
  require_same_field(m.field(), x.field(), "hom_system");
  const Field field = m.field();
  const DimVector src = m.dim_vector();
  const DimVector dst = x.dim_vector();

  HomSystem sys{zeros(field, 0, 0), {}, src, dst};
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < 5; ++v) {
    sys.offsets[v] = unknowns;
    unknowns += dst[v] * src[v];
  }
  std::size_t equations = 0;
  for (std::size_t i = 1; i <= 4; ++i) equations += dst[0] * src[i];

  ExactMatrix coeffs(field, equations, unknowns);
  // Entry (r, c) of F_0 X_i - X'_i F_i:
  //   sum_k F_0[r,k] X_i[k,c] - sum_k X'_i[r,k] F_i[k,c].
  auto f0 = [&](std::size_t r, std::size_t k) { return sys.offsets[0] + r * src[0] + k; };
  std::size_t eq = 0;
  for (int i = 1; i <= 4; ++i) {
    const auto vi = static_cast<std::size_t>(i);
    const ExactMatrix& xi = m.map(i);
    const ExactMatrix& yi = x.map(i);
    auto fi = [&](std::size_t k, std::size_t c) { return sys.offsets[vi] + k * src[vi] + c; };
    for (std::size_t r = 0; r < dst[0]; ++r) {
      for (std::size_t c = 0; c < src[vi]; ++c, ++eq) {
        for (std::size_t k = 0; k < src[0]; ++k) {
          if (!xi.is_zero_at(k, c)) coeffs.set(eq, f0(r, k), xi.at(k, c));
        }
        for (std::size_t k = 0; k < dst[vi]; ++k) {
          if (!yi.is_zero_at(r, k)) coeffs.set(eq, fi(k, c), -yi.at(r, k));
        }
      }
    }
  }
  sys.coefficients = std::move(coeffs);
  return sys;
}

std::size_t hom_oracle(const LambdaModule& m, const LambdaModule& x) {
  const HomSystem sys = hom_system(m, x);
  return sys.unknowns() - rank(sys.coefficients);
}

std::vector<Homomorphism> hom_basis(const LambdaModule& m, const LambdaModule& x) {
  const HomSystem sys = hom_system(m, x);
  const ExactMatrix kernel = kernel_basis(sys.coefficients);
  const Field field = m.field();
  std::vector<Homomorphism> out;
  out.reserve(kernel.cols());
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    Homomorphism f{zeros(field, 0, 0), zeros(field, 0, 0), zeros(field, 0, 0), zeros(field, 0, 0),
                   zeros(field, 0, 0)};
    for (std::size_t v = 0; v < 5; ++v) {
      ExactMatrix fv(field, sys.target[v], sys.source[v]);
      for (std::size_t r = 0; r < sys.target[v]; ++r) {
        for (std::size_t c = 0; c < sys.source[v]; ++c) {
          const std::size_t u = sys.offsets[v] + r * sys.source[v] + c;
          if (!kernel.is_zero_at(u, k)) fv.set(r, c, kernel.at(u, k));
        }
      }
      f[v] = std::move(fv);
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool is_homomorphism(const LambdaModule& m, const LambdaModule& x, const Homomorphism& f) {
  const DimVector src = m.dim_vector();
  const DimVector dst = x.dim_vector();
  for (std::size_t v = 0; v < 5; ++v) {
    if (f[v].rows() != dst[v] || f[v].cols() != src[v]) return false;
  }
  for (int i = 1; i <= 4; ++i) {
    if (!(f[0] * m.map(i) == x.map(i) * f[static_cast<std::size_t>(i)])) return false;
  }
  return true;
}

}  // namespace fsa
