#include "caycodes/classify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace caycodes {

bool classification_predicate(const GammaParams& p) {
  ConditionReport r = check_conditions(p);
  return r.div3_m && r.div3_lh && r.sigma_ok;
}

long long SweepReport::discrepancy_count(const std::string& cls) const {
  long long n = 0;
  for (const auto& d : discrepancies)
    if (d.cls == cls) ++n;
  return n;
}

namespace {

struct Task {
  std::size_t group_index;
  GenPair pair;
};

struct TaskResult {
  InstanceRecord record;
  std::vector<Discrepancy> problems;
};

std::string instance_key(const InstanceRecord& rec) {
  return "G=" + rec.group_spec + ";s=" + rec.s_label + ";s'=" + rec.s_prime_label;
}

TaskResult run_instance(const AbelianGroup& g, const GenPair& pair,
                        const SweepOptions& opt) {
  TaskResult tr;
  InstanceRecord& rec = tr.record;
  rec.group_factors = g.invariant_factors();
  rec.group_spec = g.spec();
  rec.s_label = g.format(pair.s);
  rec.s_prime_label = g.format(pair.s_prime);
  const std::string key = instance_key(rec);
  auto flag = [&](const char* cls, const std::string& reason) {
    tr.problems.push_back({cls, key, reason});
  };

  CayleyDigraph cd = build_cayley(g, pair);
  if (!cd.digraph().is_k_valent(2)) flag("structure", "digraph is not 2-valent");
  if (!cd.digraph().is_strongly_connected())
    flag("structure", "digraph is not strongly connected");

  AssignmentParams params = extract_params(cd, pair);
  rec.m = params.m;
  rec.l = params.l;
  rec.h = params.h;
  const GammaParams gp{params.m, params.l, params.h};
  rec.flags = check_conditions(gp);
  rec.predicate = rec.flags.div3_m && rec.flags.div3_lh && rec.flags.sigma_ok;
  if (!rec.flags.sigma_ok)
    flag("sigma", "valuation condition failed on extracted parameters");

  try {
    GammaDigraph gd = build_gamma(gp);
    std::vector<int> map = natural_map(cd, params);
    IsoWitness witness;
    if (!verify_isomorphism(gd.digraph(), cd.digraph(), map, &witness))
      flag("iso", "natural map is not an isomorphism: " + witness.reason);
  } catch (const std::exception& e) {
    flag("iso", std::string("constructive isomorphism failed: ") + e.what());
  }

  EnumerateOptions eopt;
  eopt.early_exit = opt.early_exit;
  eopt.size_cap = opt.size_cap;
  std::vector<CodeSet> codes = enumerate_codes(cd.digraph(), eopt);
  rec.oracle_code_count = static_cast<long long>(codes.size());
  rec.oracle_exists = !codes.empty();
  if (rec.predicate != rec.oracle_exists)
    flag("thm1", rec.predicate ? "predicate true but the oracle found no perfect code"
                               : "oracle found a perfect code but the predicate is false");

  if (!opt.early_exit && rec.oracle_exists) {
    const int n = cd.digraph().vertex_count();
    if (codes.size() != 3) {
      std::ostringstream os;
      os << "expected exactly 3 perfect codes, oracle found " << codes.size();
      flag("thm2", os.str());
    }
    std::vector<int> times_covered(n, 0);
    for (const auto& code : codes)
      for (int v : code.vertices) ++times_covered[v];
    if (std::any_of(times_covered.begin(), times_covered.end(),
                    [](int t) { return t != 1; }))
      flag("thm2", "the perfect codes do not partition the vertex set");

    EnumerateOptions idopt;
    idopt.size_cap = opt.size_cap;
    idopt.require_vertex = cd.vertex_of(g.identity());
    std::vector<CodeSet> identity_codes = enumerate_codes(cd.digraph(), idopt);
    if (identity_codes.size() != 1) {
      std::ostringstream os;
      os << "expected exactly one identity-containing code, found " << identity_codes.size();
      flag("thm2", os.str());
      rec.identity_code_matches_family = false;
    } else if (rec.flags.admits_code) {
      CodeSet family = identity_code_family(cd, params);
      bool match = family.verdict == Verdict::perfect &&
                   family.vertices == identity_codes[0].vertices;
      rec.identity_code_matches_family = match;
      if (!match)
        flag("thm2", "identity-containing code differs from the predicted family");
    }

    LemmaReport all{true, true, true, true};
    for (const auto& code : codes) {
      LemmaReport lr = check_lemmas(cd, code);
      all.no_involution &= lr.no_involution;
      all.diagonal_closed &= lr.diagonal_closed;
      all.spacing_ok &= lr.spacing_ok;
      all.wrap_offset_div3 &= lr.wrap_offset_div3;
    }
    rec.lemmas = all;
    if (!all.all()) flag("lemma", "a structural code fact failed on an oracle code");
  }
  return tr;
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  if (options.max_order < 3)
    throw std::invalid_argument("sweep: max_order must be at least 3");
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<AbelianGroup> groups;
  for (long long n = 1; n <= options.max_order; ++n) {
    std::vector<AbelianGroup> of_order = enumerate_groups(n);
    std::sort(of_order.begin(), of_order.end(),
              [](const AbelianGroup& a, const AbelianGroup& b) {
                return a.invariant_factors() < b.invariant_factors();
              });
    for (auto& g : of_order) groups.push_back(std::move(g));
  }

  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (const GenPair& pair : enumerate_genpairs(groups[gi]))
      tasks.push_back(Task{gi, pair});

  std::vector<TaskResult> results(tasks.size());
  auto run_range = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < tasks.size(); i += stride) {
      try {
        results[i] = run_instance(groups[tasks[i].group_index], tasks[i].pair, options);
      } catch (const std::exception& e) {
        const AbelianGroup& g = groups[tasks[i].group_index];
        InstanceRecord rec;
        rec.group_factors = g.invariant_factors();
        rec.group_spec = g.spec();
        rec.s_label = g.format(tasks[i].pair.s);
        rec.s_prime_label = g.format(tasks[i].pair.s_prime);
        results[i].record = rec;
        results[i].problems.push_back(
            {"structure", instance_key(rec), std::string("exception: ") + e.what()});
      }
    }
  };

  int jobs = options.jobs == 0
                 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                 : std::max(1, options.jobs);
  if (!tasks.empty() && static_cast<std::size_t>(jobs) > tasks.size())
    jobs = static_cast<int>(tasks.size());
  if (jobs <= 1) {
    run_range(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back(run_range, static_cast<std::size_t>(w),
                           static_cast<std::size_t>(jobs));
    for (auto& t : workers) t.join();
  }

  SweepReport report;
  report.max_order = options.max_order;
  report.instance_count = static_cast<long long>(tasks.size());
  std::map<std::string, std::size_t> by_key;
  for (std::size_t i = 0; i < results.size(); ++i) {
    report.records.push_back(std::move(results[i].record));
    for (auto& p : results[i].problems) report.discrepancies.push_back(std::move(p));
    const InstanceRecord& rec = report.records.back();
    if (rec.predicate) ++report.positive_count;
    by_key[instance_key(rec)] = i;
  }

  // The two orderings of one unordered pair must agree on the predicate and
  // on oracle existence.
  for (const auto& rec : report.records) {
    if (!(rec.s_label < rec.s_prime_label)) continue;
    InstanceRecord partner_probe;
    partner_probe.group_spec = rec.group_spec;
    partner_probe.s_label = rec.s_prime_label;
    partner_probe.s_prime_label = rec.s_label;
    auto it = by_key.find(instance_key(partner_probe));
    if (it == by_key.end()) {
      report.discrepancies.push_back(
          {"agreement", instance_key(rec), "swapped assignment missing from the sweep"});
      continue;
    }
    const InstanceRecord& other = report.records[it->second];
    if (rec.predicate != other.predicate)
      report.discrepancies.push_back(
          {"agreement", instance_key(rec), "assignments disagree on the predicate"});
    if (rec.oracle_exists != other.oracle_exists)
      report.discrepancies.push_back(
          {"agreement", instance_key(rec), "assignments disagree on oracle existence"});
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

nlohmann::json tri_state(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

nlohmann::json report_to_json(const SweepReport& report) {
  nlohmann::json j;
  j["max_order"] = report.max_order;
  j["instance_count"] = report.instance_count;
  j["positive_count"] = report.positive_count;
  auto records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json rj;
    rj["group"] = r.group_spec;
    rj["s"] = r.s_label;
    rj["s_prime"] = r.s_prime_label;
    rj["m"] = r.m;
    rj["l"] = r.l;
    rj["h"] = r.h;
    rj["div3_m"] = r.flags.div3_m;
    rj["div3_lh"] = r.flags.div3_lh;
    rj["sigma_ok"] = r.flags.sigma_ok;
    rj["admits_code"] = r.flags.admits_code;
    rj["cayley_abelian"] = r.flags.cayley_abelian;
    rj["predicate"] = r.predicate;
    rj["oracle_exists"] = r.oracle_exists;
    rj["oracle_code_count"] = r.oracle_code_count;
    rj["identity_code_matches_family"] = tri_state(r.identity_code_matches_family);
    if (r.lemmas) {
      rj["lemmas"] = {{"no_involution", r.lemmas->no_involution},
                      {"diagonal_closed", r.lemmas->diagonal_closed},
                      {"spacing_ok", r.lemmas->spacing_ok},
                      {"wrap_offset_div3", r.lemmas->wrap_offset_div3}};
    } else {
      rj["lemmas"] = nullptr;
    }
    records.push_back(std::move(rj));
  }
  j["records"] = std::move(records);
  auto discrepancies = nlohmann::json::array();
  for (const auto& d : report.discrepancies)
    discrepancies.push_back({{"class", d.cls}, {"key", d.key}, {"reason", d.reason}});
  j["discrepancies"] = std::move(discrepancies);
  return j;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* csv_bool(bool b) { return b ? "true" : "false"; }

std::string csv_tri(const std::optional<bool>& v) {
  return v ? csv_bool(*v) : "na";
}

}  // namespace

std::string report_to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "group,s,s_prime,m,l,h,div3_m,div3_lh,sigma_ok,admits_code,cayley_abelian,"
        "predicate,oracle_exists,oracle_code_count,identity_code_matches_family,"
        "lemma_no_involution,lemma_diagonal_closed,lemma_spacing_ok,lemma_wrap_offset_div3\n";
  for (const auto& r : report.records) {
    os << csv_quote(r.group_spec) << ',' << csv_quote(r.s_label) << ','
       << csv_quote(r.s_prime_label) << ',' << r.m << ',' << r.l << ',' << r.h << ','
       << csv_bool(r.flags.div3_m) << ',' << csv_bool(r.flags.div3_lh) << ','
       << csv_bool(r.flags.sigma_ok) << ',' << csv_bool(r.flags.admits_code) << ','
       << csv_bool(r.flags.cayley_abelian) << ',' << csv_bool(r.predicate) << ','
       << csv_bool(r.oracle_exists) << ',' << r.oracle_code_count << ','
       << csv_tri(r.identity_code_matches_family);
    if (r.lemmas) {
      os << ',' << csv_bool(r.lemmas->no_involution) << ','
         << csv_bool(r.lemmas->diagonal_closed) << ',' << csv_bool(r.lemmas->spacing_ok)
         << ',' << csv_bool(r.lemmas->wrap_offset_div3);
    } else {
      os << ",na,na,na,na";
    }
    os << '\n';
  }
  return os.str();
}

GridReport verify_canonical_codes(int max_m, int max_l) {
  GridReport report;
  for (long long m = 3; m <= max_m; m += 3) {
    for (long long l = 1; l <= max_l; ++l) {
      for (long long h = 0; h < m; ++h) {
        if ((l - h) % 3 != 0) continue;
        const GammaParams p{m, l, h};
        ++report.instances;
        auto fail = [&](const std::string& reason) {
          report.failures.push_back({p, reason});
        };
        try {
          const long long b = std::gcd(l - h, m);
          auto parts = canonical_code_parts(p);
          if (static_cast<long long>(parts.size()) != b / 3)
            fail("wrong number of parts");
          std::set<GammaCoord> all;
          std::size_t total = 0;
          for (const auto& part : parts) {
            if (static_cast<long long>(part.size()) != m * l / b)
              fail("part has wrong cardinality");
            total += part.size();
            all.insert(part.begin(), part.end());
          }
          if (all.size() != total) fail("parts are not pairwise disjoint");
          if (static_cast<long long>(all.size()) != m * l / 3)
            fail("code has wrong cardinality");
          GammaDigraph gd = build_gamma(p);
          CodeSet cs = verify_code(gd.digraph(),
                                   code_vertices(gd, {all.begin(), all.end()}));
          if (cs.verdict != Verdict::perfect) {
            std::ostringstream os;
            os << "canonical code is not perfect (witness vertex " << cs.witness << ")";
            fail(os.str());
          }
        } catch (const std::exception& e) {
          fail(std::string("exception: ") + e.what());
        }
      }
    }
  }
  return report;
}

GridReport verify_realizations(int max_product) {
  GridReport report;
  for (long long m = 2; m <= max_product; ++m) {
    for (long long l = 1; m * l <= max_product; ++l) {
      for (long long h = 0; h < m; ++h) {
        const GammaParams p{m, l, h};
        if (is_degenerate(p)) continue;
        ++report.instances;
        try {
          CayleyRealization r = realize_as_cayley(p);
          if (!r.proper) {
            std::ostringstream os;
            os << "improper realization (order of s = " << r.order_of_s
               << ", minimal l = " << r.minimal_l << ")";
            report.failures.push_back({p, os.str()});
          }
        } catch (const std::exception& e) {
          report.failures.push_back({p, std::string("exception: ") + e.what()});
        }
      }
    }
  }
  return report;
}

}  // namespace caycodes
