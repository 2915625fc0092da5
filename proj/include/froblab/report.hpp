#pragma once

// Analysis reports and their serialization. JSON objects are emitted with
// sorted keys, so identical reports serialize to identical bytes.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace froblab {

std::string tool_version();

struct Caps {
  std::uint32_t trunc = 2;
  int box = 3;
  std::uint64_t enumerate_cap = 1u << 16;

  bool operator==(const Caps&) const = default;
};

struct ComplexInput {
  std::string source;
  std::size_t n_vertices = 0;
  std::vector<std::vector<int>> facets;

  bool operator==(const ComplexInput&) const = default;
};

struct TableRow {
  int i = 0;
  std::vector<int> nu;
  std::size_t mult = 0;

  bool operator==(const TableRow&) const = default;
};

inline constexpr const char* kStatusValidated = "validated";
inline constexpr const char* kStatusMismatch = "mismatch";
inline constexpr const char* kStatusSkipped = "skipped: cap";

struct FhCountRow {
  int i = 0;
  std::uint64_t count = 0;
  std::string label;
  bool validated = false;
  std::string status;
  std::uint64_t enumerated = 0;  // 0 when skipped
  std::uint64_t unstable = 0;

  bool operator==(const FhCountRow&) const = default;
};

struct AntinilpotentRow {
  int i = 0;
  std::string status;  // "holds", "fails" or "skipped: cap"
  std::size_t nilpotent_factors = 0;

  bool operator==(const AntinilpotentRow&) const = default;
};

struct OracleSummary {
  int lo = -3;
  int hi = 1;
  std::size_t degrees_checked = 0;
  std::size_t mismatches = 0;

  bool operator==(const OracleSummary&) const = default;
};

struct ComplexReport {
  std::string tool = "froblab";
  std::string version;
  std::string kind = "complex";
  ComplexInput input;
  std::uint32_t p = 2;
  Caps caps;
  int dim = 0;
  int depth = 0;
  bool is_cm = false;
  bool reisner_cm = false;
  bool f_pure = false;
  std::vector<TableRow> table;
  std::vector<FhCountRow> fh_counts;
  std::vector<AntinilpotentRow> antinilpotent;
  OracleSummary oracle;
  std::string scope;

  /// True when an internal cross-check disagreed.
  bool has_mismatch() const;
  friend bool operator==(const ComplexReport&, const ComplexReport&) = default;
};

struct HypersurfaceInput {
  std::string poly;
  std::size_t n_vars = 0;
  std::vector<std::string> params;

  bool operator==(const HypersurfaceInput&) const = default;
};

struct HypersurfaceCaps {
  std::uint32_t e_max = 2;
  std::uint64_t degree_cap = 0;

  bool operator==(const HypersurfaceCaps&) const = default;
};

struct FInjectivity {
  bool t1 = false;
  bool t2 = false;

  bool operator==(const FInjectivity&) const = default;
};

struct TightClosureRow {
  std::string c;
  std::string verdict;  // "consistent-up-to-e", "fails-at-e" or "skipped: degree cap"

  bool operator==(const TightClosureRow&) const = default;
};

struct TightClosureSection {
  std::string class_rep;  // empty when no class was requested
  std::uint64_t level = 1;
  std::vector<TightClosureRow> verdicts;
  std::string caveat;

  bool operator==(const TightClosureSection&) const = default;
};

struct ProbeSection {
  bool found = false;
  std::string witness;
  std::uint64_t level = 1;
  std::string reason;
  std::string multiplier;
  std::string status;  // "ok" or "skipped: degree cap"

  bool operator==(const ProbeSection&) const = default;
};

struct HypersurfaceReport {
  std::string tool = "froblab";
  std::string version;
  std::string kind = "hypersurface";
  HypersurfaceInput input;
  std::uint32_t p = 2;
  HypersurfaceCaps caps;
  bool f_pure = false;
  FInjectivity f_injective;
  TightClosureSection tight_closure;
  ProbeSection simplicity_probe;

  /// F-pure must agree with F-injective (f is Gorenstein) and F-injectivity
  /// must not depend on the level.
  bool has_mismatch() const;
  friend bool operator==(const HypersurfaceReport&, const HypersurfaceReport&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Caps, trunc, box, enumerate_cap)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComplexInput, source, n_vertices, facets)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TableRow, i, nu, mult)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FhCountRow, i, count, label, validated, status, enumerated,
                                   unstable)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AntinilpotentRow, i, status, nilpotent_factors)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleSummary, lo, hi, degrees_checked, mismatches)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComplexReport, tool, version, kind, input, p, caps, dim, depth,
                                   is_cm, reisner_cm, f_pure, table, fh_counts, antinilpotent,
                                   oracle, scope)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HypersurfaceInput, poly, n_vars, params)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HypersurfaceCaps, e_max, degree_cap)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FInjectivity, t1, t2)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TightClosureRow, c, verdict)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TightClosureSection, class_rep, level, verdicts, caveat)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProbeSection, found, witness, level, reason, multiplier, status)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HypersurfaceReport, tool, version, kind, input, p, caps, f_pure,
                                   f_injective, tight_closure, simplicity_probe)

std::string render_json(const ComplexReport& r);
std::string render_json(const HypersurfaceReport& r);
std::string render_text(const ComplexReport& r);
std::string render_text(const HypersurfaceReport& r);

}  // namespace froblab
