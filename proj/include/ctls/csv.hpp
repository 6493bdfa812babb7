#pragma once

#include "ctls/analysis.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace ctls {

/// 17 significant digits; parses back to the same double.
std::string format_number(double v);

/// Writes every line of text prefixed with "# ".
void write_comment_block(std::ostream& os, const std::string& text);

/// Columns: method,j,t,omega_t,delta_t,r_x,r_y,r_z,p_x. Frequencies in GHz,
/// times in ns; one block of rows per trace, in the given order.
void write_trace_csv(std::ostream& os, const std::vector<StroboscopicTrace>& traces, const TlsParams& s,
                     const ChirpDrive& d);

/// Columns: alpha,p_exact,p_formula,abs_err with alpha in GHz/ns.
void write_lz_csv(std::ostream& os, const std::vector<LzPoint>& points);

/// Columns: method,omega0_peak,offset,predicted_offset in GHz. offset is the
/// peak position minus the level splitting; predicted_offset is -3 eta^2/(4 Delta).
void write_resonance_csv(std::ostream& os, const ResonanceScan& scan, const TlsParams& s);

}  // namespace ctls
