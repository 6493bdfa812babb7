#pragma once

// Evolution backends over the stroboscopic period grid.

#include "ctls/chirp_protocol.hpp"
#include "ctls/hamiltonians.hpp"
#include "ctls/integrator.hpp"
#include "ctls/su2.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctls {

enum class Method { Exact, RWA, Magnus1, Magnus2 };

inline constexpr Method kAllMethods[] = {Method::Exact, Method::RWA, Method::Magnus1, Method::Magnus2};

std::string_view method_name(Method m);  // "exact", "rwa", "magnus1", "magnus2"
std::optional<Method> parse_method(std::string_view name);

struct TraceRecord {
  int j = 0;
  double t = 0.0;
  BlochVector r;
};

struct StroboscopicTrace {
  Method method = Method::Exact;
  std::vector<TraceRecord> records;

  /// Largest | |r(t_j)| - |r(0)| | over the trace.
  double norm_drift() const;
};

StroboscopicTrace run_exact(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, const BlochVector& r0,
                            const IntegratorConfig& cfg);

StroboscopicTrace run_rwa(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, const BlochVector& r0,
                          const IntegratorConfig& cfg);

/// One-period Bloch maps M_1 ... M_N of the effective Hamiltonians.
std::vector<RotationMatrix> magnus_maps(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g,
                                        MagnusOrder order);

StroboscopicTrace run_magnus(const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, const BlochVector& r0,
                             MagnusOrder order);

/// Dispatch on the method tag; cfg is ignored by the Magnus backends.
StroboscopicTrace run(Method m, const TlsParams& s, const ChirpDrive& d, const PeriodGrid& g, const BlochVector& r0,
                      const IntegratorConfig& cfg);

/// 1 - exp(-pi u^2 eta^2 / (4 alpha)). Throws std::invalid_argument for alpha <= 0.
double lz_probability(const TlsParams& s, double eta, double alpha);

}  // namespace ctls
