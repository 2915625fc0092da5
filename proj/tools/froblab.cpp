// froblab: local cohomology and Frobenius diagnostics for face rings and
// graded hypersurfaces.
//
//   froblab analyze-complex <facets> --prime p [--trunc T] [--box B]
//                           [--enumerate-cap N] [--format text|json]
//   froblab analyze-hypersurface --poly f --prime p [--nvars n] [--params l1,l2]
//                                [--c c1,c2] [--class r] [--level t] [--emax E]
//                                [--format text|json]
//
// Exit status: 0 success, 1 bad input, 2 an internal cross-check disagreed.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "froblab/analysis.hpp"
#include "froblab/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

template <typename Report>
int emit(const Report& report, const std::string& format) {
  std::cout << (format == "json" ? froblab::render_json(report) : froblab::render_text(report));
  if (report.has_mismatch()) {
    std::cerr << "froblab: internal cross-check mismatch\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local cohomology and Frobenius diagnostics"};
  app.set_version_flag("--version", froblab::tool_version());
  app.require_subcommand(1);

  std::string format = "text";
  std::uint32_t prime = 0;

  auto* complex_cmd = app.add_subcommand("analyze-complex", "Face ring of a simplicial complex");
  std::string path;
  froblab::Caps caps;
  complex_cmd->add_option("path", path, "Facet-list file")->required();
  complex_cmd->add_option("--prime,-p", prime, "Characteristic")->required();
  complex_cmd->add_option("--trunc", caps.trunc, "Truncation depth T")->capture_default_str()->check(CLI::PositiveNumber);
  complex_cmd->add_option("--box", caps.box, "Oracle box [-B, 1]^n")->capture_default_str()->check(CLI::NonNegativeNumber);
  complex_cmd->add_option("--enumerate-cap", caps.enumerate_cap, "Search cap")->capture_default_str();
  complex_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* hyper_cmd = app.add_subcommand("analyze-hypersurface", "Graded hypersurface F_p[x]/(f)");
  std::string poly;
  froblab::HypersurfaceOptions hopts;
  hyper_cmd->add_option("--poly", poly, "Homogeneous polynomial, e.g. x^3+y^3+z^3")->required();
  hyper_cmd->add_option("--prime,-p", prime, "Characteristic")->required();
  hyper_cmd->add_option("--nvars", hopts.n_vars, "Number of variables (default: inferred)");
  hyper_cmd->add_option("--params", hopts.params, "Linear parameters")->delimiter(',');
  hyper_cmd->add_option("--c", hopts.multipliers, "Tight-closure multipliers")->delimiter(',');
  hyper_cmd->add_option("--class", hopts.class_rep, "Representative r of the class <r; l^t>");
  hyper_cmd->add_option("--level", hopts.class_level, "Level t of the class")->capture_default_str()->check(CLI::PositiveNumber);
  hyper_cmd->add_option("--emax", hopts.e_max, "Largest Frobenius exponent checked")->capture_default_str();
  hyper_cmd->add_option("--degree-cap", hopts.degree_cap, "Degree cap (default 3 p^2 t deg f)");
  hyper_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (complex_cmd->parsed()) {
      std::ifstream in(path);
      if (!in) throw froblab::ParseError("cannot open " + path);
      const auto complex = froblab::parse_facet_list(in);
      froblab::ComplexOptions opts;
      opts.p = prime;
      opts.caps = caps;
      return emit(froblab::analyze_complex(complex, path, opts), format);
    }
    hopts.p = prime;
    return emit(froblab::analyze_hypersurface(poly, hopts), format);
  } catch (const froblab::Error& e) {
    std::cerr << "froblab: " << e.what() << "\n";
    return kExitInput;
  }
}
