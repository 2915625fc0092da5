#include "froblab/analysis.hpp"

#include "froblab/errors.hpp"
#include "froblab/fmodule.hpp"
#include "froblab/hochster.hpp"
#include "froblab/hypersurface.hpp"
#include "froblab/macaulay.hpp"
#include "froblab/stanley_reisner.hpp"

namespace froblab {

namespace {

constexpr const char* kFhLabel = "count (validated by brute force at desk scale)";
constexpr const char* kScope = "F-stable submodules are searched among Z^n-graded profiles only";
constexpr const char* kCaveat =
    "bounded check: consistency up to e_max does not prove membership in the tight closure of 0";

}  // namespace

ComplexReport analyze_complex(const SimplicialComplex& c, const std::string& source,
                              const ComplexOptions& options) {
  require_prime(options.p);
  if (c.is_void()) throw InvalidParameters("the void complex has no face ring");
  ComplexReport r;
  r.version = tool_version();
  r.input.source = source;
  r.input.n_vertices = c.n_vertices();
  for (auto f : c.facets()) r.input.facets.push_back(f.vertices());
  r.p = options.p;
  r.caps = options.caps;
  r.scope = kScope;

  const auto table = decomposition(c, options.p);
  const auto info = depth_and_cm(table, c);
  r.dim = info.dim;
  r.depth = info.depth;
  r.is_cm = info.is_cm;
  r.reisner_cm = info.reisner_cm;
  r.f_pure = fedder_fpure_monomial(FaceRing(c, options.p));
  for (const auto& [key, mult] : table.entries()) r.table.push_back({key.first, key.second.vertices(), mult});

  for (int i = 0; i <= info.dim; ++i) {
    FhCountRow fh;
    fh.i = i;
    fh.count = fh_count(table, i);
    fh.label = kFhLabel;
    AntinilpotentRow an;
    an.i = i;
    const auto t = build_truncation(c, options.p, i, options.caps.trunc);
    for (const auto& f : lyubeznik_profile(t).factors) {
      if (f.kind == LyubeznikFactor::Kind::Nilpotent) an.nilpotent_factors += f.dim;
    }
    try {
      const auto e = enumerate_f_stable_submodules(t, options.caps.enumerate_cap);
      fh.enumerated = e.count;
      fh.unstable = e.unstable;
      fh.validated = e.count == fh.count;
      fh.status = fh.validated ? kStatusValidated : kStatusMismatch;
    } catch (const CapacityExceeded&) {
      fh.status = kStatusSkipped;
    }
    try {
      an.status = check_antinilpotent(t, options.caps.enumerate_cap).holds ? "holds" : "fails";
    } catch (const CapacityExceeded&) {
      an.status = kStatusSkipped;
    }
    r.fh_counts.push_back(fh);
    r.antinilpotent.push_back(an);
  }

  const auto oracle = compare_with_oracle(c, options.p, -options.caps.box, 1);
  r.oracle.lo = -options.caps.box;
  r.oracle.hi = 1;
  r.oracle.degrees_checked = oracle.degrees_checked;
  r.oracle.mismatches = oracle.mismatches.size();
  return r;
}

HypersurfaceReport analyze_hypersurface(const std::string& poly, const HypersurfaceOptions& options) {
  require_prime(options.p);
  const Residue p = options.p;
  const std::size_t n = options.n_vars != 0 ? options.n_vars : infer_variable_count(poly);
  const auto f = parse_polynomial(poly, p, n);
  if (!f.is_homogeneous()) throw UnsupportedInput("f must be homogeneous");
  std::vector<PolynomialFp> params;
  for (const auto& text : options.params) params.push_back(parse_polynomial(text, p, n));
  const auto h = params.empty() ? GradedHypersurface::with_default_params(f)
                                 : GradedHypersurface(f, params);

  HypersurfaceReport r;
  r.version = tool_version();
  r.input.poly = f.to_string();
  r.input.n_vars = n;
  for (const auto& l : h.params()) r.input.params.push_back(l.to_string());
  r.p = p;
  r.caps.e_max = options.e_max;
  r.caps.degree_cap = options.degree_cap != 0 ? options.degree_cap : default_degree_cap(h, 1);
  r.f_pure = fedder_fpure_principal(h);
  r.f_injective.t1 = f_injective_top(h, 1);
  r.f_injective.t2 = f_injective_top(h, 2);

  r.tight_closure.caveat = kCaveat;
  r.tight_closure.level = options.class_level;
  if (!options.class_rep.empty()) {
    const LocalCohomClass u{parse_polynomial(options.class_rep, p, n), options.class_level};
    r.tight_closure.class_rep = u.r.to_string();
    std::vector<PolynomialFp> multipliers;
    for (const auto& text : options.multipliers) multipliers.push_back(parse_polynomial(text, p, n));
    if (multipliers.empty()) {
      GradedIdealBasis principal(p, n, {h.f()}, 0);
      for (std::size_t j = 0; j < n; ++j) {
        auto x = PolynomialFp::variable(p, n, j);
        if (!GradedPiece(principal, 1).contains(x)) multipliers.push_back(std::move(x));
      }
    }
    const auto cap = options.degree_cap != 0 ? options.degree_cap : default_degree_cap(h, u.t);
    for (const auto& c : multipliers) {
      TightClosureRow row{c.to_string(), {}};
      try {
        row.verdict = tight_closure_zero_bounded(h, u, c, options.e_max, cap).to_string();
      } catch (const DegreeOverflow&) {
        row.verdict = "skipped: degree cap";
      }
      r.tight_closure.verdicts.push_back(std::move(row));
    }
  }

  r.simplicity_probe.level = 1;
  try {
    const auto probe = rf_simplicity_probe(h, 1, options.e_max, options.degree_cap);
    r.simplicity_probe.status = "ok";
    r.simplicity_probe.found = probe.witness.has_value();
    if (probe.witness) r.simplicity_probe.witness = probe.witness->r.to_string();
    r.simplicity_probe.reason = probe.witness ? probe.reason : "no-proper-nonzero-F-stable-found";
    if (probe.multiplier) r.simplicity_probe.multiplier = probe.multiplier->to_string();
  } catch (const DegreeOverflow&) {
    r.simplicity_probe.status = "skipped: degree cap";
  }
  return r;
}

}  // namespace froblab
