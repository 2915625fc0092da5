#pragma once

// End-to-end pipelines behind the command-line tool.

#include <string>
#include <vector>

#include "froblab/report.hpp"
#include "froblab/simplicial.hpp"

namespace froblab {

struct ComplexOptions {
  Residue p = 2;
  Caps caps;
};

/// Decomposition, depth and CM (two routes), Fedder, FH counts with their
/// brute-force validation, anti-nilpotence and the graded oracle over
/// [-box, 1]^n. Searches that exceed the cap are reported as skipped.
ComplexReport analyze_complex(const SimplicialComplex& c, const std::string& source,
                              const ComplexOptions& options);

struct HypersurfaceOptions {
  Residue p = 2;
  std::size_t n_vars = 0;            // 0: infer from the polynomial
  std::vector<std::string> params;   // empty: default parameters
  std::vector<std::string> multipliers;  // empty: each variable nonzero mod f
  std::string class_rep;             // empty: no tight-closure query
  std::uint64_t class_level = 1;
  std::uint32_t e_max = 2;
  std::uint64_t degree_cap = 0;      // 0: default
};

HypersurfaceReport analyze_hypersurface(const std::string& poly, const HypersurfaceOptions& options);

}  // namespace froblab
