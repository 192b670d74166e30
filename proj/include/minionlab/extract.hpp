#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minionlab/boolfn.hpp"
#include "minionlab/minors.hpp"

namespace minionlab {

/// Parameters of the threshold-minor extraction. a, eps and gamma are tied
/// to L exactly: a = gamma = 1/L^3, eps = 2^-(L+1).
struct ExtractParams {
  unsigned L = 3;
  Rat a;
  Rat eps;
  Rat gamma;
  unsigned retries = 1024;
  Rat tol;

  static ExtractParams for_target(unsigned L);
};

enum class ExtractCase { trivial_constant, low_pc, high_pc, mid_pc };

const char* extract_case_str(ExtractCase c);

/// Witness that THR_{L', tau} is a minor of the source function. tau may be
/// L' + 1 for the constant-0 source, where the empty threshold (never fires)
/// is the only representable minor.
struct ThresholdCertificate {
  unsigned L_prime = 0;
  unsigned tau = 0;
  VarMap map;
  ExtractCase case_taken = ExtractCase::mid_pc;
};

/// Truth table of "1 iff hw >= tau" allowing tau = L + 1 (constant 0).
BoolFn generalized_threshold(unsigned L, unsigned tau);

/// True iff g == THR_{L,1}, decided from g(empty) and the singletons only
/// (valid for monotone g).
bool is_or_function(const BoolFn& g);

struct ExtractOutcome {
  std::optional<ThresholdCertificate> certificate;
  std::string failure;  // empty on success
  // diagnostics
  std::string case_attempted;
  std::optional<RootBracket> pc;
  std::optional<Rat> p1, p2;
  std::optional<Rat> max_shapley;  // reported on failure

  bool ok() const { return certificate.has_value(); }
};

/// Extraction procedure: constant functions get a trivial certificate;
/// otherwise the critical probability picks one of three routes (sampled
/// OR-minors when p_c < a, the dual of that when p_c > 1-a, and sampled
/// threshold minors guided by the (eps, 1-eps) crossing window in between).
/// Deterministic in (f, params, seed). Never throws on retry exhaustion;
/// inspect the outcome.
ExtractOutcome extract_threshold_minor(const BoolFn& f,
                                       const ExtractParams& params,
                                       std::uint64_t seed);

}  // namespace minionlab
