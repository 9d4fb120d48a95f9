#include "caycodes/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "caycodes/classify.hpp"

namespace caycodes {

namespace {

using nlohmann::json;

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

GenPair parse_gens_spec(const AbelianGroup& g, const std::string& text) {
  auto sep = text.find(';');
  if (sep == std::string::npos || text.find(';', sep + 1) != std::string::npos)
    throw std::invalid_argument(
        "gens spec must be two elements separated by ';', e.g. \"(1);(2)\"");
  return GenPair{parse_element(g, text.substr(0, sep)),
                 parse_element(g, text.substr(sep + 1))};
}

GammaParams parse_gamma_triple(const std::string& text) {
  std::vector<long long> vals;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) vals.push_back(std::stoll(item));
  if (vals.size() != 3)
    throw std::invalid_argument("gamma spec must be M,L,H");
  return GammaParams{vals[0], vals[1], vals[2]};
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  json j;
  f >> j;
  return j;
}

int jobs_from_env() {
  const char* v = std::getenv("CAYLEY_CODES_JOBS");
  if (!v || !*v) return 1;
  int jobs = std::atoi(v);
  return jobs < 0 ? 1 : jobs;  // 0 = one worker per hardware thread
}

json params_json(const GammaParams& p) {
  return {{"m", p.m}, {"l", p.l}, {"h", p.h}};
}

json conditions_json(const ConditionReport& r) {
  return {{"div3_m", r.div3_m},
          {"div3_lh", r.div3_lh},
          {"sigma_ok", r.sigma_ok},
          {"admits_code", r.admits_code},
          {"cayley_abelian", r.cayley_abelian}};
}

json labels_of(const Digraph& d, const std::vector<int>& vertices) {
  auto arr = json::array();
  for (int v : vertices) arr.push_back(d.label(v));
  return arr;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::perfect: return "perfect";
    case Verdict::failed: return "failed";
    default: return "unverified";
  }
}

struct VerifyFlags {
  int max_order = 36;
  int max_m = 30;
  int max_l = 10;
  std::string report_path;
  std::string csv_path;
  bool early_exit = false;
};

int run_sweep_verify(const VerifyFlags& flags, const std::vector<std::string>& gate,
                     std::ostream& out, std::ostream& err) {
  SweepOptions so;
  so.max_order = flags.max_order;
  so.jobs = jobs_from_env();
  so.early_exit = flags.early_exit;
  SweepReport report = sweep(so);

  if (!flags.report_path.empty())
    write_output(flags.report_path, dump(report_to_json(report)), out);
  if (!flags.csv_path.empty())
    write_output(flags.csv_path, report_to_csv(report), out);

  out << "max_order: " << report.max_order << "\n";
  out << "instances: " << report.instance_count << "\n";
  out << "positive: " << report.positive_count << "\n";
  long long gated = 0;
  out << "discrepancies:";
  for (const char* cls : {"thm1", "agreement", "sigma", "iso", "structure", "thm2", "lemma"}) {
    long long c = report.discrepancy_count(cls);
    out << ' ' << cls << '=' << c;
    if (std::find(gate.begin(), gate.end(), cls) != gate.end()) gated += c;
  }
  out << "\n";
  out << "result: " << (gated == 0 ? "PASS" : "FAIL") << "\n";
  err << "elapsed_seconds: " << report.elapsed_seconds << "\n";
  return gated == 0 ? 0 : 1;
}

int run_grid_verify(const GridReport& report, std::ostream& out) {
  out << "instances: " << report.instances << "\n";
  out << "failures: " << report.failures.size() << "\n";
  for (const auto& f : report.failures)
    out << "  (m=" << f.params.m << ",l=" << f.params.l << ",h=" << f.params.h
        << "): " << f.reason << "\n";
  out << "result: " << (report.failures.empty() ? "PASS" : "FAIL") << "\n";
  return report.failures.empty() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-valent Cayley digraphs on abelian groups and their perfect codes"};
  app.require_subcommand(1);

  long long m = 0, l = 0, h = 0;
  std::string group_spec, gens_spec, gamma_spec, input_path;
  std::string containing_label;
  std::string format = "dot";
  std::string output_path;
  int size_cap = 200;
  VerifyFlags vf;

  auto add_triple = [&](CLI::App* cmd) {
    cmd->add_option("-m", m, "first parameter (row modulus)")->required();
    cmd->add_option("-l", l, "second parameter (column count)")->required();
    cmd->add_option("-H", h, "wrap offset, 0 <= h < m")->required();
  };

  CLI::App* gamma = app.add_subcommand("gamma", "the three-parameter digraph family");
  gamma->require_subcommand(1);
  CLI::App* gamma_build = gamma->add_subcommand("build", "emit the digraph");
  add_triple(gamma_build);
  gamma_build->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  gamma_build->add_option("-o,--output", output_path, "output file (default stdout)");
  CLI::App* gamma_check = gamma->add_subcommand("check", "print the condition report");
  add_triple(gamma_check);
  CLI::App* gamma_code = gamma->add_subcommand("code", "print the canonical perfect code");
  add_triple(gamma_code);
  CLI::App* gamma_realize =
      gamma->add_subcommand("realize", "realize as a Cayley digraph on an abelian group");
  add_triple(gamma_realize);

  CLI::App* cayley = app.add_subcommand("cayley", "Cayley digraphs from explicit groups");
  cayley->require_subcommand(1);
  CLI::App* cayley_params = cayley->add_subcommand(
      "params", "extracted (m,l,h) and conditions for both assignments");
  cayley_params->add_option("--group", group_spec, "invariant factors, e.g. 3,6")->required();
  cayley_params->add_option("--gens", gens_spec, "generating pair, e.g. \"(1,0);(0,1)\"")
      ->required();

  CLI::App* codes = app.add_subcommand("codes", "perfect-code search");
  codes->require_subcommand(1);
  auto add_codes_flags = [&](CLI::App* cmd) {
    cmd->add_option("--group", group_spec, "invariant factors, e.g. 6");
    cmd->add_option("--gens", gens_spec, "generating pair, e.g. \"(1);(2)\"");
    cmd->add_option("--gamma", gamma_spec, "gamma parameters M,L,H");
    cmd->add_option("--input", input_path, "digraph JSON file");
    cmd->add_option("--containing", containing_label, "only codes containing this vertex label");
    cmd->add_option("--size-cap", size_cap, "largest vertex count accepted");
    cmd->add_option("-o,--output", output_path, "output file (default stdout)");
  };
  CLI::App* codes_find = codes->add_subcommand("find", "find one perfect code");
  add_codes_flags(codes_find);
  CLI::App* codes_enum = codes->add_subcommand("enum", "enumerate all perfect codes");
  add_codes_flags(codes_enum);

  CLI::App* verify = app.add_subcommand("verify", "exhaustive verification suites");
  verify->require_subcommand(1);
  auto add_sweep_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", vf.max_order, "largest group order to sweep");
    cmd->add_option("--report", vf.report_path, "write the full JSON report here");
    cmd->add_option("--csv", vf.csv_path, "write the flat CSV report here");
  };
  CLI::App* verify_thm1 =
      verify->add_subcommand("thm1", "predicate vs exact-cover oracle, both directions");
  add_sweep_flags(verify_thm1);
  verify_thm1->add_flag("--early-exit", vf.early_exit,
                        "stop the oracle at the first code per instance");
  CLI::App* verify_thm2 =
      verify->add_subcommand("thm2", "identity-code uniqueness and code-set structure");
  add_sweep_flags(verify_thm2);
  CLI::App* verify_lemmas =
      verify->add_subcommand("lemmas", "structural facts on every oracle-found code");
  add_sweep_flags(verify_lemmas);
  CLI::App* verify_prop24 =
      verify->add_subcommand("prop24", "canonical codes across the parameter grid");
  verify_prop24->add_option("--max-m", vf.max_m, "largest m in the grid");
  verify_prop24->add_option("--max-l", vf.max_l, "largest l in the grid");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(gamma)) {
      const GammaParams p{m, l, h};
      if (gamma->got_subcommand(gamma_build)) {
        GammaDigraph gd = build_gamma(p);
        if (format == "json") {
          write_output(output_path, dump(gd.digraph().to_json()), out);
        } else {
          std::ostringstream os;
          gd.digraph().write_dot(os);
          write_output(output_path, os.str(), out);
        }
      } else if (gamma->got_subcommand(gamma_check)) {
        json j = conditions_json(check_conditions(p));
        j["params"] = params_json(p);
        out << dump(j);
      } else if (gamma->got_subcommand(gamma_code)) {
        GammaDigraph gd = build_gamma(p);
        CodeSet cs = verify_code(gd.digraph(), code_vertices(gd, canonical_code(p)));
        json j;
        j["params"] = params_json(p);
        j["code"] = labels_of(gd.digraph(), cs.vertices);
        j["size"] = cs.vertices.size();
        j["verdict"] = verdict_name(cs.verdict);
        out << dump(j);
      } else {
        CayleyRealization r = realize_as_cayley(p);
        json j;
        j["params"] = params_json(p);
        j["proper"] = r.proper;
        j["group"] = r.group.spec();
        j["s"] = r.group.format(r.gens.s);
        j["s_prime"] = r.group.format(r.gens.s_prime);
        j["order_of_s"] = r.order_of_s;
        j["minimal_l"] = r.minimal_l;
        j["isomorphism_verified"] = r.proper;
        out << dump(j);
      }
      return 0;
    }

    if (app.got_subcommand(cayley)) {
      AbelianGroup g = parse_group_spec(group_spec);
      GenPair gens = parse_gens_spec(g, gens_spec);
      CayleyDigraph cd = build_cayley(g, gens);
      json assignments = json::array();
      for (const GenPair& assignment : {gens, swapped(gens)}) {
        AssignmentParams p = extract_params(cd, assignment);
        json a = conditions_json(check_conditions(GammaParams{p.m, p.l, p.h}));
        a["s"] = g.format(assignment.s);
        a["s_prime"] = g.format(assignment.s_prime);
        a["m"] = p.m;
        a["l"] = p.l;
        a["h"] = p.h;
        a["predicate"] = classification_predicate(GammaParams{p.m, p.l, p.h});
        assignments.push_back(std::move(a));
      }
      json j;
      j["group"] = g.spec();
      j["assignments"] = std::move(assignments);
      out << dump(j);
      return 0;
    }

    if (app.got_subcommand(codes)) {
      int sources = (group_spec.empty() ? 0 : 1) + (gamma_spec.empty() ? 0 : 1) +
                    (input_path.empty() ? 0 : 1);
      if (sources != 1)
        throw std::invalid_argument(
            "exactly one of --group/--gens, --gamma or --input is required");
      std::optional<Digraph> dg;
      if (!group_spec.empty()) {
        if (gens_spec.empty()) throw std::invalid_argument("--group requires --gens");
        AbelianGroup g = parse_group_spec(group_spec);
        dg = build_cayley(g, parse_gens_spec(g, gens_spec)).digraph();
      } else if (!gamma_spec.empty()) {
        dg = build_gamma(parse_gamma_triple(gamma_spec)).digraph();
      } else {
        dg = Digraph::from_json(load_json_file(input_path));
      }

      EnumerateOptions eo;
      eo.size_cap = size_cap;
      eo.early_exit = codes->got_subcommand(codes_find);
      if (!containing_label.empty()) {
        const auto& labels = dg->labels();
        auto it = std::find(labels.begin(), labels.end(), containing_label);
        if (it == labels.end())
          throw std::invalid_argument("no vertex has label '" + containing_label + "'");
        eo.require_vertex = static_cast<int>(it - labels.begin());
      }
      std::vector<CodeSet> found = enumerate_codes(*dg, eo);
      json codes_json = json::array();
      for (const auto& cs : found)
        codes_json.push_back(
            {{"code", labels_of(*dg, cs.vertices)}, {"verdict", verdict_name(cs.verdict)}});
      json j;
      j["codes"] = std::move(codes_json);
      j["count"] = found.size();
      write_output(output_path, dump(j), out);
      return 0;
    }

    // verify
    if (verify->got_subcommand(verify_thm1))
      return run_sweep_verify(vf, {"thm1", "agreement", "sigma", "iso", "structure"}, out, err);
    if (verify->got_subcommand(verify_thm2))
      return run_sweep_verify(vf, {"thm2", "structure"}, out, err);
    if (verify->got_subcommand(verify_lemmas))
      return run_sweep_verify(vf, {"lemma", "structure"}, out, err);
    return run_grid_verify(verify_canonical_codes(vf.max_m, vf.max_l), out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace caycodes
