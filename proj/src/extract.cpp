#include "minionlab/extract.hpp"

#include <stdexcept>

#include "minionlab/rng.hpp"
#include "minionlab/shapley.hpp"

namespace minionlab {

ExtractParams ExtractParams::for_target(unsigned L) {
  if (L < 2) throw std::invalid_argument("extraction target L must be >= 2");
  ExtractParams p;
  p.L = L;
  p.a = Rat(1, Int(L) * L * L);
  p.a.canonicalize();
  p.eps = dyadic(L + 1);
  p.gamma = p.a;
  p.tol = default_tol();
  return p;
}

const char* extract_case_str(ExtractCase c) {
  switch (c) {
    case ExtractCase::trivial_constant: return "trivial_constant";
    case ExtractCase::low_pc: return "low_pc";
    case ExtractCase::high_pc: return "high_pc";
    default: return "mid_pc";
  }
}

BoolFn generalized_threshold(unsigned L, unsigned tau) {
  if (tau <= L) return BoolFn::threshold(L, tau);
  if (tau == L + 1) return BoolFn::constant(L, false);
  throw std::invalid_argument("tau out of [0, L+1]");
}

bool is_or_function(const BoolFn& g) {
  if (g.get(0)) return false;
  for (unsigned c = 0; c < g.arity(); ++c)
    if (!g.get(std::uint64_t(1) << c)) return false;
  return true;
}

namespace {

VarMap sample_uniform_map(unsigned n, unsigned m, Rng& rng) {
  VarMap pi;
  pi.from_arity = n;
  pi.to_arity = m;
  pi.image.resize(n);
  for (auto& v : pi.image) v = static_cast<unsigned>(rng.below(m));
  return pi;
}

void reverify(const BoolFn& f, const ThresholdCertificate& cert) {
  if (apply_minor(f, cert.map) !=
      generalized_threshold(cert.L_prime, cert.tau))
    throw std::logic_error("certificate failed re-verification");
}

// Samples iid-uniform maps [n] -> [L] until the minor equals THR_{L,1}.
std::optional<VarMap> search_or_minor(const BoolFn& f, unsigned L,
                                      unsigned retries, std::uint64_t seed) {
  for (unsigned r = 0; r < retries; ++r) {
    Rng rng = Rng::derive(seed, r);
    VarMap pi = sample_uniform_map(f.arity(), L, rng);
    if (is_or_function(apply_minor(f, pi))) return pi;
  }
  return std::nullopt;
}

}  // namespace

ExtractOutcome extract_threshold_minor(const BoolFn& f,
                                       const ExtractParams& params,
                                       std::uint64_t seed) {
  if (!f.is_monotone())
    throw std::invalid_argument("extraction requires a monotone function");
  ExtractOutcome out;
  unsigned L = params.L;
  if (f.arity() < L) {
    out.case_attempted = "none";
    out.failure = "target arity exceeds source arity";
    return out;
  }

  if (f.is_constant()) {
    ThresholdCertificate cert;
    cert.L_prime = L;
    cert.tau = f.get(0) ? 0 : L + 1;
    cert.case_taken = ExtractCase::trivial_constant;
    cert.map.from_arity = f.arity();
    cert.map.to_arity = L;
    cert.map.image.assign(f.arity(), 0);
    reverify(f, cert);
    out.certificate = cert;
    out.case_attempted = extract_case_str(cert.case_taken);
    return out;
  }

  RootBracket pc = critical_bracket(f, params.tol);
  out.pc = pc;

  auto fail = [&](const std::string& reason) {
    out.failure = reason;
    out.max_shapley = Rat(0);
    for (const Rat& v : shapley_exact(f).values)
      if (v > *out.max_shapley) out.max_shapley = v;
    return out;
  };

  // Case dispatch must be certain at the bracket's resolution.
  bool low = pc.hi < params.a;
  bool high = pc.lo > Rat(1) - params.a;
  bool mid = pc.lo >= params.a && pc.hi <= Rat(1) - params.a;
  if (!low && !high && !mid) {
    out.case_attempted = "indeterminate";
    return fail("indeterminate case: p_c bracket straddles a case boundary");
  }

  if (low || high) {
    out.case_attempted =
        extract_case_str(low ? ExtractCase::low_pc : ExtractCase::high_pc);
    const BoolFn target = low ? f : f.dual();
    if (auto pi = search_or_minor(target, L, params.retries, seed)) {
      ThresholdCertificate cert;
      cert.L_prime = L;
      cert.tau = low ? 1 : L;
      cert.map = *pi;
      cert.case_taken = low ? ExtractCase::low_pc : ExtractCase::high_pc;
      reverify(f, cert);
      out.certificate = cert;
      return out;
    }
    return fail("retries exhausted");
  }

  // Middle regime: certified (p1, p2) with P_{p1} <= eps, P_{p2} >= 1-eps.
  out.case_attempted = extract_case_str(ExtractCase::mid_pc);
  auto [p1, p2] = threshold_interval(f, params.eps, params.tol);
  out.p1 = p1;
  out.p2 = p2;

  // Look for a grid point pair (tau-1)/L' <= p1 < p2 <= tau/L'. When the
  // crossing window is narrower than 1/(L(L+1)) one exists; otherwise fall
  // back to accepting any threshold minor the sampler produces.
  // L+1 is only reachable when the source has at least that many inputs.
  std::vector<unsigned> arities{L};
  if (L + 1 <= f.arity()) arities.push_back(L + 1);

  std::optional<std::pair<unsigned, unsigned>> targeted;
  for (unsigned Lp : arities) {
    for (unsigned tau = 1; tau <= Lp && !targeted; ++tau) {
      Rat lo_grid(tau - 1, Lp), hi_grid(tau, Lp);
      lo_grid.canonicalize();
      hi_grid.canonicalize();
      if (lo_grid <= p1 && hi_grid >= p2) targeted = {Lp, tau};
    }
    if (targeted) break;
  }

  // Accepted (L', tau) targets and their tables, grouped by L'.
  struct Target {
    unsigned L_prime;
    std::vector<std::pair<unsigned, BoolFn>> taus;  // (tau, table)
  };
  std::vector<Target> targets;
  if (targeted) {
    targets.push_back(
        {targeted->first,
         {{targeted->second,
           BoolFn::threshold(targeted->first, targeted->second)}}});
  } else {
    for (unsigned Lp : arities) {
      Target t{Lp, {}};
      for (unsigned tau = 1; tau <= Lp; ++tau)
        t.taus.emplace_back(tau, BoolFn::threshold(Lp, tau));
      targets.push_back(std::move(t));
    }
  }

  for (unsigned r = 0; r < params.retries; ++r) {
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      Rng rng = Rng::derive(seed, r * targets.size() + ti);
      VarMap pi = sample_uniform_map(f.arity(), targets[ti].L_prime, rng);
      BoolFn g = apply_minor(f, pi);
      for (const auto& [tau, table] : targets[ti].taus) {
        if (g != table) continue;
        ThresholdCertificate cert;
        cert.L_prime = targets[ti].L_prime;
        cert.tau = tau;
        cert.map = pi;
        cert.case_taken = ExtractCase::mid_pc;
        reverify(f, cert);
        out.certificate = cert;
        return out;
      }
    }
  }
  return fail(targeted ? "retries exhausted"
                       : "threshold interval exceeds grid gap");
}

}  // namespace minionlab
