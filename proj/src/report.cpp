#include "froblab/report.hpp"

#include <sstream>

namespace froblab {

std::string tool_version() { return FROBLAB_VERSION; }

bool ComplexReport::has_mismatch() const {
  if (oracle.mismatches != 0 || is_cm != reisner_cm) return true;
  for (const auto& row : fh_counts) {
    if (row.status == kStatusMismatch) return true;
  }
  for (const auto& row : antinilpotent) {
    if (row.status == "fails") return true;
  }
  return false;
}

bool HypersurfaceReport::has_mismatch() const {
  return f_pure != f_injective.t1 || f_injective.t1 != f_injective.t2;
}

std::string render_json(const ComplexReport& r) { return nlohmann::json(r).dump(2) + "\n"; }

std::string render_json(const HypersurfaceReport& r) { return nlohmann::json(r).dump(2) + "\n"; }

namespace {

std::string face_text(const std::vector<int>& nu) {
  std::string out = "{";
  for (std::size_t k = 0; k < nu.size(); ++k) out += (k ? "," : "") + std::to_string(nu[k]);
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const ComplexReport& r) {
  std::ostringstream out;
  out << r.tool << " " << r.version << "  complex " << r.input.source << "\n";
  out << "vertices " << r.input.n_vertices << ", facets";
  for (const auto& f : r.input.facets) out << " " << face_text(f);
  out << "\n";
  out << "p = " << r.p << "  trunc " << r.caps.trunc << "  box [-" << r.caps.box << ",1]  cap "
      << r.caps.enumerate_cap << "\n\n";
  out << "dim " << r.dim << "  depth " << r.depth << "  Cohen-Macaulay " << yes_no(r.is_cm)
      << " (link criterion " << yes_no(r.reisner_cm) << ")\n";
  out << "F-pure (Fedder) " << yes_no(r.f_pure) << "\n\n";
  out << "local cohomology summands (i, nu, multiplicity):\n";
  if (r.table.empty()) out << "  none\n";
  for (const auto& row : r.table) out << "  H^" << row.i << "  " << face_text(row.nu) << "  " << row.mult << "\n";
  out << "\nF-stable submodules per H^i, " << (r.fh_counts.empty() ? "" : r.fh_counts.front().label) << ":\n";
  for (const auto& row : r.fh_counts) {
    out << "  H^" << row.i << "  " << row.count << "  " << row.status;
    if (row.status != kStatusSkipped) out << " (enumerated " << row.enumerated << ")";
    if (row.unstable != 0) out << "  unstable profiles " << row.unstable;
    out << "\n";
  }
  out << "\nanti-nilpotence:\n";
  for (const auto& row : r.antinilpotent) {
    out << "  H^" << row.i << "  " << row.status << "  nilpotent factors " << row.nilpotent_factors << "\n";
  }
  out << "\ngraded oracle on [" << r.oracle.lo << "," << r.oracle.hi << "]^n: " << r.oracle.degrees_checked
      << " degrees, " << r.oracle.mismatches << " mismatches\n";
  out << "note: " << r.scope << "\n";
  return out.str();
}

std::string render_text(const HypersurfaceReport& r) {
  std::ostringstream out;
  out << r.tool << " " << r.version << "  hypersurface f = " << r.input.poly << " over F_" << r.p << "\n";
  out << "parameters:";
  for (const auto& l : r.input.params) out << " " << l;
  out << "\ne_max " << r.caps.e_max << "  degree cap " << r.caps.degree_cap << "\n\n";
  out << "F-pure (Fedder) " << yes_no(r.f_pure) << "\n";
  out << "F-injective on top local cohomology: t=1 " << yes_no(r.f_injective.t1) << ", t=2 "
      << yes_no(r.f_injective.t2) << "\n";
  if (!r.tight_closure.class_rep.empty()) {
    out << "\ntight closure of 0, class <" << r.tight_closure.class_rep << "; l^" << r.tight_closure.level
        << ">:\n";
    for (const auto& row : r.tight_closure.verdicts) out << "  c = " << row.c << "  " << row.verdict << "\n";
    out << "  " << r.tight_closure.caveat << "\n";
  }
  out << "\nsimplicity probe: ";
  if (r.simplicity_probe.status != "ok") {
    out << r.simplicity_probe.status << "\n";
  } else if (r.simplicity_probe.found) {
    out << "witness <" << r.simplicity_probe.witness << "; l^" << r.simplicity_probe.level << "> ("
        << r.simplicity_probe.reason;
    if (!r.simplicity_probe.multiplier.empty()) out << ", c = " << r.simplicity_probe.multiplier;
    out << ")\n";
  } else {
    out << r.simplicity_probe.reason << "\n";
  }
  return out.str();
}

}  // namespace froblab
