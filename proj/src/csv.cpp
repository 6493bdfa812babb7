#include "ctls/csv.hpp"

#include <cstdio>
#include <sstream>

namespace ctls {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_comment_block(std::ostream& os, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) os << "# " << line << '\n';
}

void write_trace_csv(std::ostream& os, const std::vector<StroboscopicTrace>& traces, const TlsParams& s,
                     const ChirpDrive& d) {
  os << "method,j,t,omega_t,delta_t,r_x,r_y,r_z,p_x\n";
  for (const auto& tr : traces) {
    const std::string_view name = method_name(tr.method);
    for (const auto& rec : tr.records) {
      os << name << ',' << rec.j << ',' << format_number(rec.t) << ',' << format_number(omega_at(d, rec.t) / kTwoPi)
         << ',' << format_number(detuning_at(s, d, rec.t) / kTwoPi) << ',' << format_number(rec.r.x()) << ','
         << format_number(rec.r.y()) << ',' << format_number(rec.r.z()) << ',' << format_number(p_x(rec.r)) << '\n';
    }
  }
}

void write_lz_csv(std::ostream& os, const std::vector<LzPoint>& points) {
  os << "alpha,p_exact,p_formula,abs_err\n";
  for (const auto& p : points) {
    os << format_number(p.alpha / kTwoPi) << ',' << format_number(p.p_exact) << ',' << format_number(p.p_formula)
       << ',' << format_number(p.abs_err) << '\n';
  }
}

void write_resonance_csv(std::ostream& os, const ResonanceScan& scan, const TlsParams& s) {
  os << "method,omega0_peak,offset,predicted_offset\n";
  for (const auto& [m, peak] : scan.peak) {
    const double predicted = (m == Method::Magnus2 || m == Method::Exact) ? -scan.predicted_shift : 0.0;
    os << method_name(m) << ',' << format_number(peak / kTwoPi) << ','
       << format_number((peak - s.splitting()) / kTwoPi) << ',' << format_number(predicted / kTwoPi) << '\n';
  }
}

}  // namespace ctls
