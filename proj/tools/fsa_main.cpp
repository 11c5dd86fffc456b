#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsa/catalog.hpp"
#include "fsa/decomp.hpp"
#include "fsa/errors.hpp"
#include "fsa/homdim.hpp"
#include "fsa/module_io.hpp"
#include "fsa/oracle.hpp"
#include "fsa/verify.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int exit_code(fsa::ErrorCode code) { return 10 + static_cast<int>(code); }

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

struct BoundsFlags {
  std::size_t max_n = 4;
  std::size_t max_l = 4;
  std::vector<std::string> lambdas;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-n", max_n, "largest postprojective/preinjective parameter n")
        ->capture_default_str();
    cmd->add_option("--max-l", max_l, "largest regular parameter l")->capture_default_str();
    cmd->add_option("--lambda", lambdas, "homogeneous tube parameter (repeatable)");
  }

  fsa::EnumerationBounds resolve(const fsa::Field& field) const {
    fsa::EnumerationBounds b{max_n, max_l, {}};
    for (const auto& text : lambdas) b.lambdas.push_back(fsa::FieldElement::parse(field, text));
    return b;
  }
};

int run_catalog(const std::string& desc_text, const std::string& field_text) {
  const fsa::Field field = fsa::Field::parse(field_text);
  const auto desc = fsa::parse_descriptor(desc_text, field);
  std::cout << fsa::serialize_module(fsa::build(desc, field));
  return 0;
}

int run_homdim(const std::string& path, const std::string& desc_text, bool all, bool oracle,
               const BoundsFlags& flags) {
  const fsa::LambdaModule m = fsa::read_module_file(path);
  std::vector<fsa::IndecDescriptor> descs;
  if (all) {
    descs = fsa::enumerate(flags.resolve(m.field()));
  } else {
    descs.push_back(fsa::parse_descriptor(desc_text, m.field()));
  }
  for (const auto& desc : descs) {
    const std::size_t value =
        oracle ? fsa::hom_oracle(m, fsa::build(desc, m.field())) : fsa::hom_dim(m, desc);
    std::cout << desc.to_string() << '\t' << value << '\n';
  }
  return 0;
}

int run_decompose(const std::string& path, const BoundsFlags& flags) {
  const fsa::LambdaModule m = fsa::read_module_file(path);
  const fsa::Multiset summands = fsa::decompose(m, flags.resolve(m.field()));
  for (const auto& s : summands) {
    std::cout << s.multiplicity << " × " << s.desc.to_string() << '\n';
  }
  return 0;
}

int run_verify(fsa::VerifyOptions options, const std::string& field_text, const BoundsFlags& flags,
               const std::string& mutation) {
  const fsa::Field field = fsa::Field::parse(field_text);
  BoundsFlags resolved = flags;
  if (resolved.lambdas.empty()) resolved.lambdas = {"2", "5"};
  options.bounds = resolved.resolve(field);
  if (!mutation.empty()) options.mutation = fsa::SpecMutation::parse(mutation);

  const fsa::VerifyReport report = fsa::verify(field, options);
  for (const auto& mm : report.mismatches) {
    std::cout << "mismatch trial=" << mm.trial << " dim=" << mm.module.dim_vector().to_string()
              << " desc=" << mm.desc.to_string() << " formula=" << mm.formula
              << " oracle=" << mm.oracle << " module=" << fsa::serialize_module_compact(mm.module)
              << '\n';
  }
  if (report.all_agree()) {
    std::cout << "all agree (" << report.checks << " checks over " << report.trials
              << " modules)\n";
    return 0;
  }
  std::cout << report.mismatches.size() << " mismatches in " << report.checks << " checks\n";
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homomorphism dimensions and decompositions for four subspace modules"};
  app.require_subcommand(1);

  std::string field_text = "rationals";
  std::string desc_text;
  auto* catalog = app.add_subcommand("catalog", "print the representative of an indecomposable");
  catalog->add_option("desc", desc_text, "descriptor, e.g. P(2,1), R(3,5), R(0,3,inf)")->required();
  catalog->add_option("--field", field_text, "rationals or prime:p")->capture_default_str();

  std::string path;
  bool all = false;
  bool oracle = false;
  BoundsFlags homdim_bounds;
  auto* homdim = app.add_subcommand("homdim", "dim Hom(M, X) for indecomposable X");
  homdim->add_option("file", path, "module file")->required()->check(CLI::ExistingFile);
  auto* homdim_desc = homdim->add_option("desc", desc_text, "descriptor X");
  auto* homdim_all = homdim->add_flag("--all", all, "every descriptor within the bounds");
  homdim_desc->excludes(homdim_all);
  homdim->add_flag("--oracle", oracle, "solve the homomorphism equations directly");
  homdim_bounds.add_to(homdim);

  BoundsFlags decompose_bounds;
  auto* decompose = app.add_subcommand("decompose", "multiplicities of indecomposable summands");
  decompose->add_option("file", path, "module file")->required()->check(CLI::ExistingFile);
  decompose_bounds.add_to(decompose);

  fsa::VerifyOptions verify_options;
  BoundsFlags verify_bounds;
  std::string verify_field = "prime:32003";
  std::string mutation;
  auto* verify = app.add_subcommand("verify", "compare formulas with the oracle on random modules");
  verify->add_option("--seed", verify_options.seed)->capture_default_str();
  verify->add_option("--trials", verify_options.trials)->capture_default_str();
  verify->add_option("--max-dim", verify_options.max_dim, "largest n_v of a random module")
      ->capture_default_str();
  verify->add_option("--field", verify_field)->capture_default_str();
  verify->add_option("--mutate", mutation,
                     "corrupt one pattern block first: family:head|step|link:row:col[:flip|:zero]");
  verify_bounds.add_to(verify);
  verify->footer("--lambda defaults to 2 and 5.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error Usage: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (*catalog) return run_catalog(desc_text, field_text);
    if (*homdim) {
      if (!all && desc_text.empty()) {
        std::cerr << "error Usage: homdim needs a descriptor or --all\n";
        return kExitUsage;
      }
      return run_homdim(path, desc_text, all, oracle, homdim_bounds);
    }
    if (*decompose) return run_decompose(path, decompose_bounds);
    if (*verify) return run_verify(verify_options, verify_field, verify_bounds, mutation);
  } catch (const fsa::Error& e) {
    std::cerr << "error " << fsa::to_string(e.code()) << ": " << one_line(e.what()) << '\n';
    return exit_code(e.code());
  }
  return kExitUsage;
}
