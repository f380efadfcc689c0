#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "degree_forge/bounds.hpp"
#include "degree_forge/constructions.hpp"
#include "degree_forge/enumerate.hpp"
#include "degree_forge/errors.hpp"
#include "degree_forge/family_io.hpp"
#include "degree_forge/search.hpp"
#include "degree_forge/shadows.hpp"
#include "degree_forge/sweep.hpp"
#include "degree_forge/transforms.hpp"
#include "degree_forge/transversal.hpp"
#include "emit.hpp"

namespace degree_forge::cli {

namespace {

struct Options {
  std::string in_path;
  std::string out_path;
  std::string format = "json";

  std::string kind;
  std::string id;
  std::string mode = "lex_greedy";
  std::string restrict = "all";
  std::string grid;
  std::string a_path;
  std::string b_path;

  int n = 0;
  int k = 0;
  std::optional<int> t;
  std::optional<int> ell;
  std::optional<int> d;
  std::optional<int> r;
  std::optional<int> i;
  std::optional<int> j;
  std::int64_t param = 0;
  int workers = 1;
  bool classify = false;
  bool timing = false;
  std::uint64_t max_families = 0;
};

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw ParameterError("unknown format '" + name + "'");
}

UniformFamily load_family(const std::string& path, std::istream& fallback) {
  if (path.empty() || path == "-") return read_family(fallback);
  std::ifstream file(path);
  if (!file) throw ParameterError("cannot open '" + path + "'");
  return read_family(file);
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ParameterError("cannot write '" + path + "'");
      target_ = &file_;
    }
  }
  std::ostream& stream() { return *target_; }

 private:
  std::ofstream file_;
  std::ostream* target_;
};

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void require_json(Format f, const char* command) {
  if (f != Format::json && f != Format::text) {
    throw ParameterError(std::string(command) + " supports --format json or text");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree bounds for intersecting families: constructions, transforms, exhaustive search", "degree_forge"};
  app.require_subcommand(1);
  Options o;
  o.workers = default_workers();
  std::function<int()> action;

  auto add_io = [&](CLI::App* sub, bool family_in, bool with_format) {
    if (family_in) sub->add_option("--in", o.in_path, "Family file (default: stdin)");
    sub->add_option("--out", o.out_path, "Output file (default: stdout)");
    if (with_format) {
      sub->add_option("--format", o.format, "json, csv or text")
          ->check(CLI::IsMember({"json", "csv", "text"}));
    }
  };

  // construct
  auto* construct = app.add_subcommand("construct", "Build a named family");
  construct->add_option("--kind", o.kind, "star, H_ell, H_nkt, L_r, lex_segment, colex_segment, triangle")
      ->required();
  construct->add_option("--n", o.n)->required();
  construct->add_option("--k", o.k)->required();
  construct->add_option("--param", o.param, "x, ell, t, r or m depending on the kind");
  add_io(construct, false, false);
  construct->callback([&] {
    action = [&] {
      const auto kind = parse_construction_kind(o.kind);
      if (!kind) throw ParameterError("unknown construction '" + o.kind + "'");
      ConstructionSpec spec{*kind, o.n, o.k, o.param};
      if (*kind == ConstructionKind::star && o.param == 0) spec.param = 1;
      Sink sink(o.out_path, out);
      write_family(sink.stream(), build(spec));
      return kExitOk;
    };
  });

  // degrees
  auto* degrees = app.add_subcommand("degrees", "Degree sequence of a family");
  add_io(degrees, true, true);
  degrees->callback([&] {
    action = [&] {
      const auto f = load_family(o.in_path, in);
      Sink sink(o.out_path, out);
      switch (parse_format(o.format)) {
        case Format::json: emit_json(sink.stream(), degrees_to_json(f)); break;
        case Format::csv: sink.stream() << degrees_csv(f); break;
        case Format::text: sink.stream() << degrees_text(f); break;
      }
      return kExitOk;
    };
  });

  // shift
  auto* shift = app.add_subcommand("shift", "Apply S_ij, or shift to a fixpoint");
  shift->add_option("--i", o.i);
  shift->add_option("--j", o.j);
  add_io(shift, true, false);
  shift->callback([&] {
    action = [&] {
      if (o.i.has_value() != o.j.has_value()) throw ParameterError("--i and --j go together");
      const auto f = load_family(o.in_path, in);
      Sink sink(o.out_path, out);
      write_family(sink.stream(), o.i ? shift_ij(f, *o.i, *o.j) : make_shifted(f));
      return kExitOk;
    };
  });

  // saturate
  auto* saturate_cmd = app.add_subcommand("saturate", "Extend to a maximal t-intersecting family");
  saturate_cmd->add_option("--t", o.t)->required();
  saturate_cmd->add_option("--mode", o.mode, "lex_greedy or shift_alternate");
  add_io(saturate_cmd, true, false);
  saturate_cmd->callback([&] {
    action = [&] {
      const auto mode = parse_saturation_mode(o.mode);
      if (!mode) throw ParameterError("unknown saturation mode '" + o.mode + "'");
      const auto f = load_family(o.in_path, in);
      Sink sink(o.out_path, out);
      write_family(sink.stream(), saturate(f, *o.t, *mode));
      return kExitOk;
    };
  });

  // transversal
  auto* transversal = app.add_subcommand("transversal", "t-transversals, basis, covering number and basis lemma checks");
  transversal->add_option("--t", o.t)->required();
  add_io(transversal, true, false);
  transversal->callback([&] {
    action = [&] {
      const auto f = load_family(o.in_path, in);
      Sink sink(o.out_path, out);
      const auto report = check_basis_lemmas(f, *o.t);
      Json j = transversal_to_json(report.transversal);
      j["lemmas"] = basis_lemmas_to_json(report);
      emit_json(sink.stream(), j);
      const bool ok = report.lemma31.value_or(true) && report.lemma32.value_or(true) &&
                      report.claim54.value_or(true);
      return ok ? kExitOk : kExitFailed;
    };
  });

  // shadow
  auto* shadow_cmd = app.add_subcommand("shadow", "The ell-shadow of a family");
  shadow_cmd->add_option("--ell", o.ell)->required();
  add_io(shadow_cmd, true, false);
  shadow_cmd->callback([&] {
    action = [&] {
      const auto f = load_family(o.in_path, in);
      Sink sink(o.out_path, out);
      write_family(sink.stream(), shadow(f, *o.ell));
      return kExitOk;
    };
  });

  // crosscheck
  auto* crosscheck = app.add_subcommand("crosscheck", "Cross-intersection checks for a pair");
  crosscheck->add_option("--a", o.a_path)->required();
  crosscheck->add_option("--b", o.b_path)->required();
  crosscheck->add_option("--d", o.d);
  crosscheck->add_option("--r", o.r);
  add_io(crosscheck, false, false);
  crosscheck->callback([&] {
    action = [&] {
      const auto a = load_family(o.a_path, in);
      const auto b = load_family(o.b_path, in);
      const auto report = cross_check(a, b);
      std::vector<InequalityResult> ineq;
      if (report.cross) ineq = cross_inequalities(a, b, {o.d, o.r});
      Sink sink(o.out_path, out);
      emit_json(sink.stream(), crosscheck_to_json(report, ineq));
      const bool ok = report.daykin_ok.value_or(true) && report.lex_transfer_ok.value_or(true) &&
                      std::all_of(ineq.begin(), ineq.end(), [](const auto& r) { return r.pass; });
      return ok ? kExitOk : kExitFailed;
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound and its hypothesis");
  bounds->add_option("--id", o.id)->required();
  bounds->add_option("--n", o.n)->required();
  bounds->add_option("--k", o.k)->required();
  bounds->add_option("--t", o.t);
  bounds->add_option("--ell", o.ell);
  add_io(bounds, false, false);
  bounds->callback([&] {
    action = [&] {
      const auto id = parse_bound_id(o.id);
      if (!id) throw ParameterError("unknown bound id '" + o.id + "'");
      Sink sink(o.out_path, out);
      emit_json(sink.stream(), bound_to_json(evaluate(*id, {o.n, o.k, o.t, o.ell})));
      return kExitOk;
    };
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Check an inequality over a parameter grid");
  sweep->add_option("--id", o.id)->required();
  sweep->add_option("--grid", o.grid, "e.g. k=3..12,n=6k-9..6k+30 (default: hypothesis range)");
  add_io(sweep, false, true);
  sweep->callback([&] {
    action = [&] {
      const auto id = parse_sweep_id(o.id);
      if (!id) throw ParameterError("unknown sweep id '" + o.id + "'");
      const auto report = inequality_sweep(*id, o.grid.empty() ? default_grid(*id) : o.grid);
      Sink sink(o.out_path, out);
      switch (parse_format(o.format)) {
        case Format::json: emit_json(sink.stream(), sweep_to_json(report)); break;
        case Format::csv: sink.stream() << sweep_csv(report); break;
        case Format::text: sink.stream() << sweep_text(report); break;
      }
      return report.pass ? kExitOk : kExitFailed;
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Max degree profile over maximal t-intersecting families");
  search->add_option("--n", o.n)->required();
  search->add_option("--k", o.k)->required();
  search->add_option("--t", o.t)->required();
  search->add_option("--restrict", o.restrict, "all or shifted");
  search->add_option("--workers", o.workers, "Worker threads (default: DEGREE_FORGE_WORKERS or 1)");
  search->add_flag("--classify", o.classify, "Count isomorphism classes");
  search->add_flag("--timing", o.timing, "Include wall_time_ms");
  search->add_option("--max-families", o.max_families,
                     "Stop after this many families; the report is then non-exhaustive");
  add_io(search, false, true);
  search->callback([&] {
    action = [&] {
      const auto r = parse_restrict(o.restrict);
      if (!r) throw ParameterError("unknown restriction '" + o.restrict + "'");
      const auto report = max_degree_profile(o.n, o.k, *o.t, {*r, o.workers, o.classify, o.max_families});
      Sink sink(o.out_path, out);
      switch (parse_format(o.format)) {
        case Format::json: emit_json(sink.stream(), search_to_json(report, o.timing)); break;
        case Format::csv: sink.stream() << search_csv(report); break;
        case Format::text: sink.stream() << search_text(report); break;
      }
      return kExitOk;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustively check a bound at small (n,k)");
  verify->add_option("--id", o.id)->required();
  verify->add_option("--n", o.n)->required();
  verify->add_option("--k", o.k)->required();
  verify->add_option("--t", o.t);
  verify->add_option("--ell", o.ell);
  verify->add_option("--workers", o.workers);
  add_io(verify, false, true);
  verify->callback([&] {
    action = [&] {
      const auto id = parse_bound_id(o.id);
      if (!id) throw ParameterError("unknown bound id '" + o.id + "'");
      const Format f = parse_format(o.format);
      require_json(f, "verify");
      const auto v = verify_theorem(*id, o.n, o.k, o.t, o.ell, o.workers);
      Sink sink(o.out_path, out);
      if (f == Format::json) {
        emit_json(sink.stream(), verification_to_json(v));
      } else {
        sink.stream() << verification_text(v);
      }
      if (v.verdict == Verdict::inapplicable) {
        err << "verify: " << v.reason << '\n';
        return kExitUsage;
      }
      return v.verdict == Verdict::pass ? kExitOk : kExitFailed;
    };
  });

  // probe
  auto* probe = app.add_subcommand("probe", "Evidence for an open conjecture");
  probe->add_option("--id", o.id, "C71, C72 or P110")->required();
  probe->add_option("--n", o.n)->required();
  probe->add_option("--k", o.k)->required();
  probe->add_option("--t", o.t);
  probe->add_option("--ell", o.ell);
  probe->add_option("--workers", o.workers);
  add_io(probe, false, true);
  probe->callback([&] {
    action = [&] {
      const auto id = parse_probe_id(o.id);
      if (!id) throw ParameterError("unknown probe id '" + o.id + "'");
      const Format f = parse_format(o.format);
      require_json(f, "probe");
      const auto report = conjecture_probe(*id, o.n, o.k, o.t, o.ell, o.workers);
      Sink sink(o.out_path, out);
      if (f == Format::json) {
        emit_json(sink.stream(), probe_to_json(report));
      } else {
        sink.stream() << probe_text(report);
      }
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: parse failure at " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace degree_forge::cli
