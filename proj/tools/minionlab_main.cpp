#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "minionlab/adversarial.hpp"
#include "minionlab/blp_aip.hpp"
#include "minionlab/extract.hpp"
#include "minionlab/gadget.hpp"
#include "minionlab/io.hpp"
#include "minionlab/pair_density.hpp"
#include "minionlab/verify.hpp"

using namespace minionlab;

namespace {

// All experiment output goes through here so every artifact starts with the
// exact invocation that produced it.
class Output {
 public:
  Output(const std::string& config, const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
    stream() << "# " << config << "\n";
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string decimal(const Rat& r) {
  std::ostringstream ss;
  ss.precision(12);
  ss << rat_double(r);
  return ss.str();
}

int run_sweep_and_report(Output& out, const SweepResult& res) {
  out.stream() << "check,checked,violations,skipped,pass\n";
  out.stream() << res.name << ',' << res.checked << ',' << res.violations
               << ',' << res.skipped << ',' << (res.pass() ? "yes" : "no")
               << "\n";
  for (const auto& n : res.notes) out.stream() << "# " << n << "\n";
  return res.pass() ? 0 : 2;
}

void print_adversarial_rows(Output& out, const AdversarialSweep& sw) {
  out.stream() << "n,phi_g_1,phi_g_1_dec,expected_phi_g_1,argmax_g,"
                  "argmax_full,phi_full_argmax,phi_full_1,phi_full_1_dec,"
                  "minor_identity,argmax_disagrees,within_pair_sym,"
                  "across_pair_sym\n";
  for (const auto& r : sw.reports) {
    out.stream() << r.n << ',' << rat_str(r.phi_g_first) << ','
                 << decimal(r.phi_g_first) << ','
                 << rat_str(r.expected_phi_g_first) << ',' << r.argmax_g + 1
                 << ',' << r.argmax_full + 1 << ','
                 << rat_str(r.phi_full.values[r.argmax_full]) << ','
                 << rat_str(r.phi_full.values[0]) << ','
                 << decimal(r.phi_full.values[0]) << ','
                 << (r.minor_identity ? "yes" : "no") << ','
                 << (r.argmax_disagrees ? "yes" : "no") << ','
                 << (r.within_pair_symmetry ? "yes" : "no") << ','
                 << (r.across_pair_symmetry ? "yes" : "no") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string config;
  for (int i = 0; i < argc; ++i) {
    if (i) config += ' ';
    config += argv[i];
  }

  CLI::App app{"exact toolkit for monotone Boolean functions, Shapley "
               "values, minors, and Boolean promise CSPs"};
  app.require_subcommand(1);

  std::string fn_path, template_path, instance_path, lc_path, out_path;
  std::string map_text, assignment_path, emit_dir, lambda_text = "1/4";
  std::string lemma, thm, prop, side_text = "strong";
  std::uint64_t seed = 0;
  std::uint64_t mc_samples = 0;
  unsigned arity = 4, target_L = 3, retries = 1024, adv_n = 10, coord = 1;
  unsigned sigma = 2, copies = 1, trials = 100, count = 100;
  std::vector<unsigned> sizes;
  bool exact_flag = false, monotone_only = false, random21 = false;
  bool explain = false, dictator_flag = false;

  auto* sh = app.add_subcommand("shapley", "Shapley values of a function");
  sh->add_option("--fn", fn_path, "function file")->required();
  sh->add_flag("--exact", exact_flag, "exact values (default)");
  sh->add_option("--mc", mc_samples, "Monte-Carlo sample count");
  auto* sh_seed = sh->add_option("--seed", seed, "sample seed");
  sh->add_option("--out", out_path, "output CSV path");

  auto* mi = app.add_subcommand("minor", "apply or sample a coordinate map");
  mi->add_option("--fn", fn_path, "function file")->required();
  mi->add_option("--map", map_text, "1-based images, e.g. 1,1,2,2");
  mi->add_flag("--random-2to1", random21, "sample a uniform 2-to-1 map");
  auto* mi_seed = mi->add_option("--seed", seed, "map seed");
  mi->add_option("--out", out_path, "output path");

  auto* ex = app.add_subcommand("extract", "threshold-minor extraction");
  ex->add_option("--fn", fn_path, "function file")->required();
  ex->add_option("--L", target_L, "target threshold arity")->required();
  ex->add_option("--seed", seed, "retry seed")->required();
  ex->add_option("--retries", retries, "retry budget (default 1024)");
  ex->add_option("--out", out_path, "output path");

  auto* ad = app.add_subcommand("adversarial", "build and verify the "
                                "Shapley-flipping minor pair");
  ad->add_option("--n", adv_n, "half arity (>= 2)")->required();
  ad->add_option("--emit-fns", emit_dir, "write g/f_half/f_full files here");
  ad->add_option("--out", out_path, "output CSV path");

  auto* pc = app.add_subcommand("pcsp", "promise-CSP tooling");
  pc->require_subcommand(1);
  auto* cp = pc->add_subcommand("check-poly", "polymorphism membership");
  cp->add_option("--fn", fn_path)->required();
  cp->add_option("--template", template_path)->required();
  auto* en = pc->add_subcommand("enumerate", "small-arity polymorphisms");
  en->add_option("--template", template_path)->required();
  en->add_option("--arity", arity)->required();
  en->add_flag("--monotone", monotone_only, "monotone candidates only");
  en->add_option("--out", out_path);
  auto* br = pc->add_subcommand("brute", "exhaustive satisfiability");
  br->add_option("--template", template_path)->required();
  br->add_option("--instance", instance_path)->required();
  br->add_option("--side", side_text, "strong|weak");
  auto* de = pc->add_subcommand("decide", "LP + affine decision procedure");
  de->add_option("--template", template_path)->required();
  de->add_option("--instance", instance_path)->required();
  de->add_flag("--explain", explain, "dump the equation system");

  auto* ga = app.add_subcommand("gadget", "label-cover reduction tooling");
  ga->require_subcommand(1);
  auto* gm = ga->add_subcommand("make", "rich 2-to-1 instance");
  gm->add_option("--sigma", sigma)->required();
  gm->add_option("--copies", copies, "left vertices (default 1)");
  gm->add_option("--out", out_path);
  auto* gr = ga->add_subcommand("reduce", "long-code reduction");
  gr->add_option("--labelcover", lc_path)->required();
  gr->add_option("--template", template_path)->required();
  gr->add_option("--out", out_path);
  auto* gs = ga->add_subcommand("soundness", "decode-and-label experiment");
  gs->add_option("--labelcover", lc_path)->required();
  gs->add_option("--template", template_path)->required();
  gs->add_flag("--dictator", dictator_flag,
               "use the dictator assignment of a perfect labeling");
  gs->add_option("--assignment", assignment_path,
                 "0/1 line per merged variable");
  gs->add_option("--lambda", lambda_text, "decode threshold (default 1/4)");
  gs->add_option("--seed", seed)->required();
  gs->add_option("--trials", trials, "labeling trials (default 100)");
  gs->add_option("--out", out_path);

  auto* ve = app.add_subcommand("verify", "named verification suites");
  ve->add_option("--lemma", lemma, "3.1 | 4.1 | 4.2 | 4.3 | 4.4 | even");
  ve->add_option("--thm", thm, "5.1");
  ve->add_option("--prop", prop, "2.6");
  ve->add_option("--arity", arity, "sweep arity");
  ve->add_option("--count", count, "random-function count");
  ve->add_option("--seed", seed, "sweep seed");
  ve->add_option("--fn", fn_path, "single-function report input");
  ve->add_option("--coord", coord, "1-based coordinate");
  ve->add_option("--sizes", sizes, "construction sizes (default 6 8 10 12)");
  ve->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sh) {
      BoolFn f = read_function_file(fn_path);
      Output out(config, out_path);
      if (mc_samples > 0) {
        if (sh_seed->count() == 0)
          throw CLI::ValidationError("--mc requires --seed");
        McShapley mc = shapley_montecarlo(f, mc_samples, seed);
        out.stream() << "coord,estimate,decimal,halfwidth\n";
        for (unsigned i = 0; i < f.arity(); ++i)
          out.stream() << i + 1 << ',' << rat_str(mc.estimate(i)) << ','
                       << decimal(mc.estimate(i)) << ',' << mc.halfwidth()
                       << "\n";
      } else {
        ShapleyVector phi = shapley_exact(f);
        out.stream() << "coord,value,decimal\n";
        for (unsigned i = 0; i < f.arity(); ++i)
          out.stream() << i + 1 << ',' << rat_str(phi.values[i]) << ','
                       << decimal(phi.values[i]) << "\n";
      }
      return 0;
    }

    if (*mi) {
      BoolFn f = read_function_file(fn_path);
      Output out(config, out_path);
      if (random21) {
        if (mi_seed->count() == 0)
          throw CLI::ValidationError("--random-2to1 requires --seed");
        if (f.arity() % 2 != 0)
          throw std::invalid_argument("2-to-1 maps need even arity");
        VarMap pi = sample_two_to_one(f.arity() / 2, seed);
        out.stream() << "# map " << varmap_to_string(pi) << "\n";
        write_function(out.stream(), apply_minor(f, pi));
      } else if (!map_text.empty()) {
        VarMap pi = parse_varmap(map_text);
        write_function(out.stream(), apply_minor(f, pi));
      } else {
        throw CLI::ValidationError("need --map or --random-2to1");
      }
      return 0;
    }

    if (*ex) {
      BoolFn f = read_function_file(fn_path);
      ExtractParams params = ExtractParams::for_target(target_L);
      params.retries = retries;
      ExtractOutcome res = extract_threshold_minor(f, params, seed);
      Output out(config, out_path);
      if (res.ok()) {
        out.stream() << "status,case,L_prime,tau,map\n";
        out.stream() << "ok," << extract_case_str(res.certificate->case_taken)
                     << ',' << res.certificate->L_prime << ','
                     << res.certificate->tau << ','
                     << varmap_to_string(res.certificate->map) << "\n";
        return 0;
      }
      out.stream() << "status,case,reason,max_shapley\n";
      out.stream() << "failed," << res.case_attempted << ',' << res.failure
                   << ','
                   << (res.max_shapley ? rat_str(*res.max_shapley) : "")
                   << "\n";
      if (res.pc)
        out.stream() << "# p_c in [" << rat_str(res.pc->lo) << ", "
                     << rat_str(res.pc->hi) << "]\n";
      if (res.p1)
        out.stream() << "# crossing window [" << rat_str(*res.p1) << ", "
                     << rat_str(*res.p2) << "]\n";
      return 2;
    }

    if (*ad) {
      AdversarialSweep sw = sweep_adversarial({adv_n});
      Output out(config, out_path);
      print_adversarial_rows(out, sw);
      if (!emit_dir.empty()) {
        auto dump = [&](const std::string& name, const BoolFn& f) {
          std::ofstream os(emit_dir + "/" + name + ".fn");
          if (!os) throw std::runtime_error("cannot write to " + emit_dir);
          write_function(os, f);
        };
        dump("g", build_g(adv_n));
        dump("f_half", build_f_half(adv_n));
        dump("f_full", build_f_full(adv_n));
      }
      return sw.result.pass() ? 0 : 2;
    }

    if (*cp) {
      BoolFn f = read_function_file(fn_path);
      Template t = read_template_file(template_path);
      bool ok = check_polymorphism(f, t);
      std::cout << (ok ? "polymorphism" : "not a polymorphism") << "\n";
      return 0;
    }

    if (*en) {
      Template t = read_template_file(template_path);
      auto polys = enumerate_polymorphisms(t, arity, monotone_only);
      Output out(config, out_path);
      out.stream() << "# " << polys.size() << " polymorphisms of arity "
                   << arity << "\n";
      for (const BoolFn& f : polys) write_function(out.stream(), f);
      return 0;
    }

    if (*br) {
      Template t = read_template_file(template_path);
      Instance inst = read_instance_file(instance_path, t);
      Side side = side_text == "weak" ? Side::weak : Side::strong;
      bool ok = brute_force_decide(inst, t, side);
      std::cout << (ok ? "satisfiable" : "unsatisfiable") << "\n";
      return 0;
    }

    if (*de) {
      Template t = read_template_file(template_path);
      Instance inst = read_instance_file(instance_path, t);
      if (explain) {
        RelaxationSystem sys = build_relaxation(inst, t);
        std::cout << "# " << sys.weights.size() << " weights, "
                  << sys.equations.size() << " equations\n";
        for (const auto& eq : sys.equations) {
          bool first = true;
          for (auto [w, c] : eq.terms) {
            std::cout << (first ? "" : " + ")
                      << (c == 1 ? "" : std::to_string(c) + "*")
                      << sys.weights[w].name();
            first = false;
          }
          std::cout << " = " << eq.rhs << "\n";
        }
      }
      DecideVerdict v = decide(inst, t);
      std::cout << "verdict," << (v.accept ? "accept" : "reject")
                << ",blp=" << (v.blp_feasible ? 1 : 0)
                << ",aip=" << (v.aip_feasible ? 1 : 0)
                << ",support=" << v.support_size << "\n";
      return 0;
    }

    if (*gm) {
      LabelCover lc = make_rich_instance(sigma, copies);
      Output out(config, out_path);
      write_labelcover(out.stream(), lc);
      return 0;
    }

    if (*gr) {
      LabelCover lc = read_labelcover_file(lc_path);
      Template t = read_template_file(template_path);
      ReducedInstance ri = reduce(lc, t);
      Output out(config, out_path);
      out.stream() << "# " << ri.num_nodes << " nodes merged into "
                   << ri.instance.num_vars << " variables\n";
      write_instance(out.stream(), ri.instance);
      return 0;
    }

    if (*gs) {
      LabelCover lc = read_labelcover_file(lc_path);
      Template t = read_template_file(template_path);
      ReducedInstance ri = reduce(lc, t);
      std::vector<unsigned> values;
      if (dictator_flag) {
        std::vector<unsigned> left(lc.num_left, 0), right(lc.num_right, 0);
        for (const auto& e : lc.edges) right[e.v] = e.proj.image[left[e.u]];
        values = dictator_assignment(ri, lc, left, right);
      } else if (!assignment_path.empty()) {
        std::ifstream in(assignment_path);
        if (!in) throw std::runtime_error("cannot open " + assignment_path);
        std::string bits;
        in >> bits;
        if (bits.size() != ri.instance.num_vars)
          throw std::runtime_error("assignment length != variable count");
        for (char c : bits) values.push_back(c == '1' ? 1 : 0);
      } else {
        throw CLI::ValidationError("need --dictator or --assignment");
      }
      SoundnessResult res = soundness_experiment(
          lc, t, ri, values, parse_rat(lambda_text), seed, trials);
      Output out(config, out_path);
      out.stream() << "mean_fraction,decimal,trials,degenerate\n";
      out.stream() << rat_str(res.mean_fraction) << ','
                   << decimal(res.mean_fraction) << ',' << res.trials << ','
                   << (res.degenerate ? "yes" : "no") << "\n";
      return 0;
    }

    if (*ve) {
      if (!thm.empty()) {
        if (thm != "5.1") throw CLI::ValidationError("unknown --thm");
        if (sizes.empty()) sizes = {6, 8, 10, 12};
        AdversarialSweep sw = sweep_adversarial(sizes);
        Output out(config, out_path);
        print_adversarial_rows(out, sw);
        for (const auto& n : sw.result.notes)
          out.stream() << "# " << n << "\n";
        return sw.result.pass() ? 0 : 2;
      }
      if (!prop.empty()) {
        if (prop != "2.6") throw CLI::ValidationError("unknown --prop");
        Output out(config, out_path);
        return run_sweep_and_report(
            out, sweep_sandwich(std::max(arity, 4u), 25, seed));
      }
      if (lemma == "3.1") {
        Output out(config, out_path);
        return run_sweep_and_report(
            out, sweep_russo(std::min(arity, 4u),
                             {Rat(1, 2), Rat(1, 4), Rat(1, 8)}));
      }
      if (lemma == "4.1") {
        Output out(config, out_path);
        return run_sweep_and_report(out,
                                    sweep_collapse_halving(arity, 0, seed));
      }
      if (lemma == "4.2") {
        Output out(config, out_path);
        return run_sweep_and_report(out, sweep_even_mass(arity | 1u));
      }
      if (lemma == "even") {
        BoolFn f = read_function_file(fn_path);
        if (coord == 0 || coord > f.arity())
          throw CLI::ValidationError("--coord out of range");
        EvenMassReport r = verify_even_mass(f, coord - 1);
        std::cout << "coord=" << coord << " phi=" << rat_str(r.phi)
                  << " even_mass=" << rat_str(r.mass) << " premise="
                  << (r.premise_met ? "met" : "unmet");
        if (r.premise_met)
          std::cout << " positive=" << (r.positive ? "yes" : "no")
                    << " mass/phi^2=" << rat_str(r.ratio);
        std::cout << "\n";
        return r.premise_met && !r.positive ? 2 : 0;
      }
      if (lemma == "4.3") {
        Output out(config, out_path);
        return run_sweep_and_report(
            out, sweep_pairing_expectation(arity | 1u, count, seed));
      }
      if (lemma == "4.4") {
        Output out(config, out_path);
        return run_sweep_and_report(
            out, sweep_two_step_positivity(arity & ~1u, count, seed));
      }
      throw CLI::ValidationError("pick one of --lemma/--thm/--prop");
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
