#include "minionlab/verify.hpp"

#include <stdexcept>

#include "minionlab/enumerate.hpp"
#include "minionlab/minors.hpp"
#include "minionlab/pair_density.hpp"
#include "minionlab/rng.hpp"
#include "minionlab/shapley.hpp"

namespace minionlab {

namespace {

std::string rat_note(const std::string& label, const Rat& v) {
  return label + "=" + rat_str(v) + " (" + std::to_string(rat_double(v)) + ")";
}

}  // namespace

SweepResult sweep_collapse_halving(unsigned arity, unsigned samples,
                                   std::uint64_t seed) {
  if (arity % 2 != 0 || arity < 4)
    throw std::invalid_argument("halving sweep needs even arity >= 4");
  SweepResult res;
  res.name = "collapse-halving arity " + std::to_string(arity);
  auto check = [&](const BoolFn& f) {
    Rat before = shapley_exact(f).values[0];
    Rat after = shapley_exact(pi1_collapse(f)).values[0];
    ++res.checked;
    if (after < before / 2) ++res.violations;
  };
  if (arity <= 5 && samples == 0) {
    for_each_monotone(arity, check);
  } else {
    Rng rng(seed);
    for (unsigned i = 0; i < (samples ? samples : 200); ++i)
      check(random_monotone(arity, rng));
  }
  return res;
}

SweepResult sweep_pairing_expectation(unsigned arity, unsigned count,
                                      std::uint64_t seed) {
  if (arity % 2 == 0 || arity < 3)
    throw std::invalid_argument("pairing sweep needs odd arity >= 3");
  unsigned n = (arity + 1) / 2;
  SweepResult res;
  res.name = "pairing-expectation arity " + std::to_string(arity);
  auto pairings = enumerate_pairings(n);
  Rng rng(seed);
  for (unsigned it = 0; it < count; ++it) {
    BoolFn fprime = random_monotone(arity, rng);
    LevelProfile src = boundary_profile(fprime);
    std::vector<Rat> avg(n, Rat(0));
    for (const VarMap& pi : pairings) {
      LevelProfile dst = boundary_profile(apply_minor(fprime, pi));
      for (unsigned j = 0; j < n; ++j) avg[j] += dst.density(0, j);
    }
    bool ok = true;
    for (unsigned j = 0; j < n; ++j)
      if (avg[j] / static_cast<long>(pairings.size()) != src.density(0, 2 * j))
        ok = false;
    ++res.checked;
    if (!ok) ++res.violations;
  }
  return res;
}

SweepResult sweep_even_mass(unsigned arity) {
  if (arity % 2 == 0 || arity > 5)
    throw std::invalid_argument("even-mass sweep needs odd arity <= 5");
  SweepResult res;
  res.name = "even-mass arity " + std::to_string(arity);
  Rat min_ratio(-1);
  for_each_monotone(arity, [&](const BoolFn& f) {
    EvenMassReport r = verify_even_mass(f, 0);
    if (!r.premise_met) {
      ++res.skipped;
      return;
    }
    ++res.checked;
    if (!r.positive) {
      ++res.violations;
      return;
    }
    if (min_ratio < 0 || r.ratio < min_ratio) min_ratio = r.ratio;
  });
  if (min_ratio >= 0)
    res.notes.push_back(rat_note("min mass/phi^2", min_ratio));
  return res;
}

SweepResult sweep_two_step_positivity(unsigned arity, unsigned count,
                                      std::uint64_t seed) {
  if (arity % 2 != 0 || arity < 4 || arity > 12)
    throw std::invalid_argument("two-step sweep needs even arity in [4, 12]");
  unsigned n = arity / 2;
  SweepResult res;
  res.name = "two-step-positivity arity " + std::to_string(arity);
  Rat min_avg(-1);
  Rat premise(1, n);
  premise.canonicalize();
  auto check = [&](const BoolFn& f) {
    Rat phi1 = shapley_exact(f).values[0];
    if (phi1 < premise) {
      ++res.skipped;
      return;
    }
    Rat avg(0);
    unsigned terms = 0;
    for (unsigned partner = 1; partner < arity; ++partner) {
      BoolFn fprime = apply_minor(f, collapse_map(arity, partner));
      for (const VarMap& pi : enumerate_pairings(n)) {
        avg += shapley_exact(apply_minor(fprime, pi)).values[0];
        ++terms;
      }
    }
    avg /= terms;
    ++res.checked;
    if (avg <= 0) {
      ++res.violations;
      return;
    }
    Rat gamma = avg / (phi1 * phi1);
    if (min_avg < 0 || gamma < min_avg) min_avg = gamma;
  };
  if (arity == 4 && count == 0) {
    for_each_monotone(arity, check);
  } else {
    Rng rng(seed);
    for (unsigned i = 0; i < (count ? count : 20); ++i) {
      BoolFn f = random_monotone(arity, rng);
      if (i % 2 == 0) {
        // plant a heavy first coordinate so the premise is regularly met
        for (std::uint64_t x = 1; x < f.size(); x += 2) f.set(x, true);
      }
      check(f);
    }
  }
  if (min_avg >= 0)
    res.notes.push_back(rat_note("min observed avg/phi^2", min_avg));
  return res;
}

SweepResult sweep_russo(unsigned max_arity, const std::vector<Rat>& nus) {
  SweepResult res;
  res.name = "russo-scaling arity <= " + std::to_string(max_arity);
  Rat tol = default_tol();
  for (unsigned n = 1; n <= max_arity; ++n) {
    for_each_monotone(n, [&](const BoolFn& f) {
      if (f.is_constant()) return;
      for (const Rat& nu : nus) {
        try {
          Verdict v = russo_inequality_check(f, nu, tol);
          if (v == Verdict::kIndeterminate) {
            ++res.skipped;
          } else {
            ++res.checked;
            if (v == Verdict::kFalse) ++res.violations;
          }
        } catch (const std::invalid_argument&) {
          ++res.skipped;
        }
      }
    });
  }
  return res;
}

SweepResult sweep_sandwich(unsigned max_arity, unsigned samples5,
                           std::uint64_t seed) {
  SweepResult res;
  res.name = "boundary-sandwich arity <= " + std::to_string(max_arity);
  auto scan = [&](const BoolFn& f) {
    unsigned n = f.arity();
    for (unsigned c = 0; c < n; ++c) {
      std::uint64_t bit = std::uint64_t(1) << c;
      std::vector<std::uint64_t> boundary;
      for (std::uint64_t s = 0; s < f.size(); ++s)
        if (!(s & bit) && !f.get(s) && f.get(s | bit)) boundary.push_back(s);
      for (auto s1 : boundary)
        for (auto s2 : boundary) {
          if ((s1 & ~s2) != 0) continue;
          ++res.checked;
          if (!sandwich_check(f, c, s1, s2)) ++res.violations;
        }
    }
  };
  for (unsigned n = 2; n <= std::min(max_arity, 4u); ++n)
    for_each_monotone(n, scan);
  if (max_arity >= 5) {
    Rng rng(seed);
    for (unsigned i = 0; i < samples5; ++i) scan(random_monotone(5, rng));
  }
  return res;
}

AdversarialSweep sweep_adversarial(const std::vector<unsigned>& sizes) {
  AdversarialSweep sw;
  sw.result.name = "adversarial-construction";
  for (unsigned n : sizes) {
    AdversarialReport r = verify_adversarial(n);
    ++sw.result.checked;
    if (!r.minor_identity || r.phi_g_first != r.expected_phi_g_first ||
        r.phi_full_ignored != 0)
      ++sw.result.violations;
    sw.reports.push_back(std::move(r));
  }
  // trend of the first coordinate's value in the padded function
  for (std::size_t i = 1; i < sw.reports.size(); ++i) {
    if (sw.reports[i].phi_full.values[0] >
        sw.reports[i - 1].phi_full.values[0]) {
      sw.result.notes.push_back(
          "phi_full(1) trend not monotone between n=" +
          std::to_string(sw.reports[i - 1].n) + " and n=" +
          std::to_string(sw.reports[i].n));
    }
  }
  return sw;
}

}  // namespace minionlab
