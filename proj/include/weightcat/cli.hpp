// Command-line front end: model validation, object analysis, complex
// operations, the two graded quotient functors, and the scenario verifier.
//
// Exit codes: 0 all requested checks pass; 1 check failures or invalid
// content (bad model data, malformed expressions); 2 usage errors (unknown
// flags, unknown subcommands, unknown scenario names); 3 I/O errors.

#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weightcat/ideals.hpp"
#include "weightcat/model_io.hpp"
#include "weightcat/numfun.hpp"
#include "weightcat/scenarios.hpp"
#include "weightcat/weights.hpp"

namespace weightcat {

namespace detail {

// One-line rendering of a morphism: named semisimple and nilpotent blocks.
inline std::string mor_text(const CategorySpec& spec, const Mor& m) {
  std::string out;
  for (const auto& [s, b] : m.ss) {
    if (b.is_zero()) continue;
    out += (out.empty() ? "" : ", ") + s + " " + b.str();
  }
  for (const auto& [key, blocks] : m.nil) {
    const auto& names = spec.bimodule_names(key.first, key.second);
    for (std::size_t k = 0; k < blocks.size() && k < names.size(); ++k)
      if (!blocks[k].is_zero()) out += (out.empty() ? "" : ", ") + names[k] + " " + blocks[k].str();
  }
  return out.empty() ? "0" : out;
}

inline std::string complex_text(const CategorySpec& spec, const Complex& x) {
  std::string out;
  for (const auto& [i, c] : x.comp) {
    if (c.is_zero()) continue;
    out += "  degree " + std::to_string(i) + ": " + c.str() + "\n";
    auto it = x.diff.find(i);
    if (it != x.diff.end() && !it->second.is_zero())
      out += "    d = " + mor_text(spec, it->second) + "\n";
  }
  if (out.empty()) out = "  (zero complex)\n";
  return out;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "weightcat: exact-arithmetic workbench for a semisimple category with a "
      "square-zero thickening, bounded complexes over it, and the graded "
      "quotient functors"};
  app.require_subcommand(1);

  std::string spec_path, obj_expr, tensor_expr, cx_path, scenario, report_path;
  bool do_min = false, do_len = false, do_all = false, do_pi = false, do_p = false;
  int truncate_b = 0;
  std::uint64_t seed = 1;
  int bound = 8;

  CLI::App* validate_cmd = app.add_subcommand("validate", "load a model file and check its coherence");
  validate_cmd->add_option("spec", spec_path, "model file (JSON)")->required();

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "hom dimensions, ideals, traces and power ranks of an object");
  analyze_cmd->add_option("spec", spec_path, "model file (JSON)")->required();
  analyze_cmd->add_option("--obj", obj_expr, "object expression: name | expr \"+\" expr | n \"*\" name")->required();
  analyze_cmd->add_option("--tensor", tensor_expr, "tensor the object with this second expression");
  analyze_cmd->add_option("--bound", bound, "search depth for nilpotency and power vanishing (default 8)")
      ->envname("WEIGHTCAT_BOUND");

  CLI::App* complex_cmd = app.add_subcommand("complex", "minimal models, weight truncation and weight length");
  complex_cmd->add_option("spec", spec_path, "model file (JSON)")->required();
  complex_cmd->add_option("--file", cx_path, "complex file (JSON)")->required();
  CLI::Option_group* cmode = complex_cmd->add_option_group("mode");
  cmode->add_flag("--minimize", do_min, "print the minimal model");
  CLI::Option* trunc_opt = cmode->add_option("--truncate", truncate_b, "split at this weight");
  cmode->add_flag("--length", do_len, "print the weight window and length");
  cmode->require_option(1);

  CLI::App* functor_cmd = app.add_subcommand("functor", "apply a graded quotient functor to a complex");
  functor_cmd->add_option("spec", spec_path, "model file (JSON)")->required();
  functor_cmd->add_option("--file", cx_path, "complex file (JSON)")->required();
  CLI::Option_group* fmode = functor_cmd->add_option_group("mode");
  fmode->add_flag("--pi", do_pi, "graded semisimplification of the minimal model");
  fmode->add_flag("--p", do_p, "naive quotient by the numerical ideal");
  fmode->require_option(1);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification scenarios against a model");
  verify_cmd->add_option("spec", spec_path, "model file (JSON)")->required();
  CLI::Option_group* vmode = verify_cmd->add_option_group("mode");
  vmode->add_option("--scenario", scenario, "run a single named scenario");
  vmode->add_flag("--all", do_all, "run the full scenario battery");
  vmode->require_option(1);
  verify_cmd->add_option("--report", report_path, "also write the report as JSON to this path");
  verify_cmd->add_option("--seed", seed, "seed for randomized sample generation (default 1)");
  verify_cmd->add_option("--bound", bound, "search depth for nilpotency and power checks (default 8)")
      ->envname("WEIGHTCAT_BOUND");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) {
      CategorySpec spec = load_spec(spec_path);
      std::string names;
      for (const SimpleObject& s : spec.simples)
        names += (names.empty() ? "" : ", ") + s.name + " (" + parity_name(s.parity) +
                 ", rank " + std::to_string(s.rank) + ")";
      std::size_t bdim = 0;
      for (const auto& [key, e] : spec.bimodule) bdim += (std::size_t)e.dim;
      out << "model OK: " << spec.simples.size() << " simples: " << names << "\n";
      out << "unit: " << spec.unit << "\n";
      out << "fusion rows: " << spec.fusion.size() << "\n";
      out << "nilpotent bimodule dimension: " << bdim << "\n";
      out << "duals declared: " << spec.duals.size() << "\n";
      return 0;
    }

    if (*analyze_cmd) {
      CategorySpec spec = load_spec(spec_path);
      Obj x = parse_obj_expr(spec, obj_expr);
      if (!tensor_expr.empty()) x = tensor_obj(spec, x, parse_obj_expr(spec, tensor_expr));
      out << "object: " << x.str() << "\n";

      const std::size_t end_dim = hom_dim(spec, x, x);
      std::size_t ss_dim = 0;
      for (const auto& [s, m] : x.mult) ss_dim += (std::size_t)m * (std::size_t)m;
      const IdealSubspace n = numerical_ideal(spec, x, x);
      const IdealSubspace r = radical(spec, x, x);
      out << "endomorphisms: dimension " << end_dim << " (semisimple " << ss_dim
          << ", nilpotent " << end_dim - ss_dim << ")\n";
      out << "numerical ideal: dimension " << n.dim() << "\n";
      out << "radical: dimension " << r.dim()
          << (same_ideal(spec, r, n) ? " (equals the numerical ideal)"
                                     : " (differs from the numerical ideal)")
          << "\n";
      const auto idx = nilpotency_index(spec, x, n, bound);
      out << "nilpotency index of the numerical ideal: "
          << (idx ? std::to_string(*idx) : "not reached within bound " + std::to_string(bound))
          << "\n";
      out << "trace of the identity: " << trace(spec, mor_identity(x)).str() << "\n";
      out << "trace table:\n";
      for (const auto& [s, m] : x.mult)
        out << "  " << s << ": multiplicity " << m << ", identity trace "
            << trace(spec, mor_identity(Obj::of(s))).str() << "\n";

      out << "power ranks (n: sym, wedge):\n";
      int sym_zero = 0, wedge_zero = 0;
      const int top = std::max(1, bound);
      for (int k = 1; k <= top; ++k) {
        const auto srk = sym_power_rank(spec, x, k);
        const auto wrk = wedge_power_rank(spec, x, k);
        if (k <= 6) out << "  " << k << ": " << srk << ", " << wrk << "\n";
        if (sym_zero == 0 && srk == 0) sym_zero = k;
        if (wedge_zero == 0 && wrk == 0) wedge_zero = k;
      }
      if (sym_zero && wedge_zero)
        out << "profile: degenerate (sym^" << sym_zero << " and wedge^" << wedge_zero
            << " vanish)\n";
      else if (sym_zero)
        out << "profile: odd (sym^" << sym_zero << " vanishes)\n";
      else if (wedge_zero)
        out << "profile: even (wedge^" << wedge_zero << " vanishes)\n";
      else
        out << "profile: mixed (no pure power vanishes up to " << top << ")\n";
      return 0;
    }

    if (*complex_cmd) {
      CategorySpec spec = load_spec(spec_path);
      Complex x = load_complex(spec, cx_path);
      if (do_min) {
        MinimizeResult r = minimize(spec, x);
        out << "minimal model (homotopy equivalent, radical differentials):\n"
            << detail::complex_text(spec, r.m);
        const LengthReport l = length(spec, x);
        if (l.empty_window)
          out << "weight window: empty (contractible)\n";
        else
          out << "weight window: " << l.a << ".." << l.b << "\n";
      } else if (trunc_opt->count() > 0) {
        const WeightDecomposition dec = weight_truncate(spec, x, truncate_b);
        out << "cut at weight " << truncate_b << "\n";
        out << "low part (weights <= " << truncate_b << "):\n"
            << detail::complex_text(spec, dec.low);
        out << "high part (weights >= " << truncate_b + 1 << "):\n"
            << detail::complex_text(spec, dec.high);
        bool radical_delta = true;
        for (const auto& [i, m] : dec.delta.comp)
          radical_delta = radical_delta && !radical_nonmember_witness(m);
        out << "connecting map radical: " << (radical_delta ? "yes" : "NO") << "\n";
      } else if (do_len) {
        const LengthReport l = length(spec, x);
        if (l.empty_window)
          out << "zero up to homotopy: every weight window contains it; length 0\n";
        else
          out << "weights " << l.a << ".." << l.b << ", length " << l.length << "\n";
      }
      return 0;
    }

    if (*functor_cmd) {
      CategorySpec spec = load_spec(spec_path);
      Complex x = load_complex(spec, cx_path);
      if (do_pi) {
        out << "graded semisimplification (minimal model, degreewise quotient):\n";
        out << "  " << pi_obj(spec, x).str() << "\n";
      } else if (do_p) {
        out << "naive quotient (components kept, differentials reduced):\n";
        for (const auto& [i, c] : x.comp) {
          if (c.is_zero()) continue;
          out << "  degree " << i << ": " << c.str() << "\n";
          auto it = x.diff.find(i);
          if (it == x.diff.end()) continue;
          const Mor q = quotient_num(it->second);
          if (!q.is_zero()) out << "    d = " << detail::mor_text(spec, q) << "\n";
        }
      }
      return 0;
    }

    if (*verify_cmd) {
      CategorySpec spec = load_spec(spec_path);
      RunReport rep;
      if (do_all) {
        rep = run_all_scenarios(spec, spec_path, seed, bound);
      } else {
        rep.model = spec_path;
        rep.seed = seed;
        rep.bound = bound;
        try {
          rep.add(run_scenario(scenario, spec, seed, bound));
        } catch (const UnsupportedModel& e) {
          ScenarioReport sr;
          sr.scenario = scenario;
          sr.record("model requirements", false, e.what());
          rep.add(std::move(sr));
        }
      }
      out << report_text(rep);
      if (!report_path.empty())
        detail::write_file(report_path, report_json(rep).dump(2) + "\n");
      return rep.ok() ? 0 : 1;
    }
  } catch (const UnknownScenario& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace weightcat
