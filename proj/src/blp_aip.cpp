#include "minionlab/blp_aip.hpp"

#include <stdexcept>

namespace minionlab {

std::string RelaxationSystem::Weight::name() const {
  if (!is_tuple)
    return "v" + std::to_string(var) + "=" + std::to_string(value);
  return "c" + std::to_string(constraint) + ":t" + std::to_string(tuple);
}

LpProblem RelaxationSystem::lp() const {
  LpProblem p;
  p.num_vars = static_cast<unsigned>(weights.size());
  for (const auto& eq : equations) {
    std::vector<Rat> row(p.num_vars, Rat(0));
    for (auto [w, c] : eq.terms) row[w] += c;
    p.rows.push_back(std::move(row));
    p.rhs.push_back(Rat(eq.rhs));
  }
  return p;
}

IntSystem RelaxationSystem::integer_system(
    const std::vector<char>& support) const {
  // Keep only supported weights as columns.
  std::vector<int> col(weights.size(), -1);
  unsigned n = 0;
  for (unsigned w = 0; w < weights.size(); ++w)
    if (support[w]) col[w] = static_cast<int>(n++);
  IntSystem sys;
  sys.num_vars = n;
  for (const auto& eq : equations) {
    std::vector<Int> row(n, 0);
    for (auto [w, c] : eq.terms)
      if (col[w] >= 0) row[col[w]] += c;
    sys.rows.push_back(std::move(row));
    sys.rhs.push_back(Int(eq.rhs));
  }
  return sys;
}

RelaxationSystem build_relaxation(const Instance& inst, const Template& t) {
  t.validate();
  inst.validate(t);
  RelaxationSystem sys;
  // variable weights first: (v, 0) and (v, 1)
  for (unsigned v = 0; v < inst.num_vars; ++v)
    for (unsigned d = 0; d < 2; ++d)
      sys.weights.push_back({false, v, d, 0, 0});
  auto var_w = [](unsigned v, unsigned d) { return 2 * v + d; };

  for (unsigned v = 0; v < inst.num_vars; ++v) {
    RelaxationSystem::Equation eq;
    eq.terms = {{var_w(v, 0), 1}, {var_w(v, 1), 1}};
    eq.rhs = 1;
    sys.equations.push_back(std::move(eq));
  }

  for (unsigned ci = 0; ci < inst.constraints.size(); ++ci) {
    const Constraint& con = inst.constraints[ci];
    const Relation& A = t.pairs[con.pair_index].A;
    unsigned k = A.k;
    // scope-consistent tuples of A
    std::vector<unsigned> tuples;
    for (unsigned tv : A.members()) {
      bool consistent = true;
      for (unsigned p = 0; p < k && consistent; ++p)
        for (unsigned q = p + 1; q < k && consistent; ++q)
          if (con.scope[p] == con.scope[q] &&
              (((tv >> p) ^ (tv >> q)) & 1u))
            consistent = false;
      if (consistent) tuples.push_back(tv);
    }
    unsigned base = static_cast<unsigned>(sys.weights.size());
    for (unsigned tv : tuples) sys.weights.push_back({true, 0, 0, ci, tv});
    if (sys.weights.size() > 100000)
      throw std::invalid_argument("relaxation too large");

    RelaxationSystem::Equation norm;
    for (unsigned i = 0; i < tuples.size(); ++i)
      norm.terms.push_back({base + i, 1});
    norm.rhs = 1;
    sys.equations.push_back(std::move(norm));

    // marginal per position, value 0 (value 1 follows from normalizations)
    for (unsigned p = 0; p < k; ++p) {
      RelaxationSystem::Equation marg;
      for (unsigned i = 0; i < tuples.size(); ++i)
        if (!((tuples[i] >> p) & 1u)) marg.terms.push_back({base + i, 1});
      marg.terms.push_back({var_w(con.scope[p], 0), -1});
      marg.rhs = 0;
      sys.equations.push_back(std::move(marg));
    }
  }
  return sys;
}

BlpResult solve_blp(const RelaxationSystem& sys) {
  BlpResult res;
  LpProblem lp = sys.lp();
  LpResult base = lp_feasible_point(lp);
  if (!base.feasible) return res;
  res.feasible = true;

  unsigned n = lp.num_vars;
  std::vector<std::vector<Rat>> points{base.point};
  res.support.assign(n, 0);
  for (unsigned w = 0; w < n; ++w)
    if (base.point[w] > 0) res.support[w] = 1;

  for (unsigned w = 0; w < n; ++w) {
    if (res.support[w]) continue;
    std::vector<Rat> c(n, Rat(0));
    c[w] = 1;
    LpResult mx = lp_maximize(lp, c);
    if (mx.objective > 0) {
      points.push_back(mx.point);
      for (unsigned u = 0; u < n; ++u)
        if (mx.point[u] > 0) res.support[u] = 1;
    }
    // objective 0: the weight is identically zero over the polytope
  }

  res.interior.assign(n, Rat(0));
  for (const auto& pt : points)
    for (unsigned u = 0; u < n; ++u) res.interior[u] += pt[u];
  for (unsigned u = 0; u < n; ++u)
    res.interior[u] /= static_cast<long>(points.size());
  return res;
}

bool solve_aip(const RelaxationSystem& sys, const std::vector<char>& support) {
  return solve_integer_system(sys.integer_system(support)).has_value();
}

DecideVerdict decide(const Instance& inst, const Template& t) {
  RelaxationSystem sys = build_relaxation(inst, t);
  DecideVerdict v;
  BlpResult blp = solve_blp(sys);
  v.blp_feasible = blp.feasible;
  if (!blp.feasible) return v;
  for (char s : blp.support) v.support_size += s;
  v.aip_feasible = solve_aip(sys, blp.support);
  v.accept = v.aip_feasible;
  return v;
}

}  // namespace minionlab
