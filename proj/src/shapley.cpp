#include "minionlab/shapley.hpp"

#include <cmath>
#include <stdexcept>

#include "minionlab/rng.hpp"

namespace minionlab {

Rat ShapleyVector::sum() const {
  Rat s(0);
  for (const Rat& v : values) s += v;
  return s;
}

unsigned ShapleyVector::argmax() const {
  unsigned best = 0;
  for (unsigned i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

ShapleyVector shapley_exact(const LevelProfile& profile) {
  ShapleyVector phi;
  phi.values.reserve(profile.arity);
  for (unsigned c = 0; c < profile.arity; ++c)
    phi.values.push_back(profile.shapley(c));
  return phi;
}

ShapleyVector shapley_exact(const BoolFn& f) {
  return shapley_exact(boundary_profile(f));
}

Rat McShapley::estimate(unsigned coord) const {
  Rat r(Int(pivots[coord]), Int(samples));
  r.canonicalize();
  return r;
}

Rat McShapley::halfwidth_sq() const {
  // Hoeffding at 99%: hw^2 = ln(2/0.01) / (2m), with ln(200) rounded up.
  Rat r(Rat(53, 10) / (2 * Int(samples)));
  r.canonicalize();
  return r;
}

double McShapley::halfwidth() const {
  return std::sqrt(rat_double(halfwidth_sq()));
}

bool McShapley::covers(unsigned coord, const Rat& value) const {
  Rat d = estimate(coord) - value;
  return d * d <= halfwidth_sq();
}

McShapley shapley_montecarlo(const BoolFn& f, std::uint64_t samples,
                             std::uint64_t seed) {
  if (!f.is_monotone())
    throw std::invalid_argument("shapley_montecarlo requires a monotone function");
  unsigned n = f.arity();
  McShapley mc;
  mc.arity = n;
  mc.samples = samples;
  mc.pivots.assign(n, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Rng rng = Rng::derive(seed, s);
    auto perm = rng.permutation(n);
    std::uint64_t x = 0;
    if (f.get(0)) continue;  // constant 1: no 0 -> 1 pivot on the chain
    for (unsigned step = 0; step < n; ++step) {
      x |= std::uint64_t(1) << perm[step];
      if (f.get(x)) {
        ++mc.pivots[perm[step]];
        break;
      }
    }
  }
  return mc;
}

DecodeSet decode(const ShapleyVector& phi, bool constant_fn,
                 const Rat& lambda) {
  DecodeSet d;
  d.lambda = lambda;
  for (unsigned i = 0; i < phi.values.size(); ++i)
    if (phi.values[i] >= lambda) d.coords.push_back(i);
  if (d.coords.empty() && !constant_fn) {
    d.coords.push_back(phi.argmax());
    d.used_fallback = true;
  }
  return d;
}

DecodeSet decode(const BoolFn& f, const Rat& lambda) {
  return decode(shapley_exact(f), f.is_constant(), lambda);
}

}  // namespace minionlab
