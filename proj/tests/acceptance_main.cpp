// Acceptance suite: one pass/fail line per criterion, exit status equal to
// the number of failed criteria. Runs the full sweep at order 36 once and
// reuses it for the criteria it covers.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "caycodes/classify.hpp"
#include "caycodes/cli.hpp"

using namespace caycodes;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << number << "] " << name;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  SweepOptions options;
  options.max_order = 36;
  SweepReport sweep36 = sweep(options);
  {
    std::ostringstream os;
    os << "swept " << sweep36.instance_count << " instances ("
       << sweep36.positive_count << " positive) in " << sweep36.elapsed_seconds << "s";
    std::cout << os.str() << "\n";
  }

  // 1. Predicate vs exact-cover oracle, both directions, plus the
  //    sigma/structure/assignment-agreement assertions that back it.
  {
    long long bad = sweep36.discrepancy_count("thm1") +
                    sweep36.discrepancy_count("agreement") +
                    sweep36.discrepancy_count("sigma") +
                    sweep36.discrepancy_count("structure");
    std::ostringstream os;
    os << bad << " discrepancies over " << sweep36.instance_count << " instances";
    report(1, "admission predicate matches the oracle at max order 36", bad == 0, os.str());
  }

  // 2. Identity-containing code is unique and equals the predicted family;
  //    the full code set has exactly 3 codes partitioning the vertices.
  {
    long long bad = sweep36.discrepancy_count("thm2");
    long long checked = 0;
    bool fields_ok = true;
    for (const auto& r : sweep36.records) {
      if (!r.predicate) continue;
      ++checked;
      fields_ok = fields_ok && r.oracle_code_count == 3 &&
                  r.identity_code_matches_family.value_or(false);
    }
    std::ostringstream os;
    os << checked << " positive instances, " << bad << " structure discrepancies";
    report(2, "identity code unique, equals the family, 3 codes partition V",
           bad == 0 && fields_ok && checked > 0, os.str());
  }

  // 3. Canonical codes across the grid m <= 30, l <= 10.
  {
    GridReport grid = verify_canonical_codes(30, 10);
    std::ostringstream os;
    os << grid.instances << " triples, " << grid.failures.size() << " failures";
    report(3, "canonical code perfect with |C| = ml/3 and |C_r| = ml/b",
           grid.instances > 0 && grid.failures.empty(), os.str());
  }

  // 4. Realization as a Cayley digraph for every triple with ml <= 144.
  {
    GridReport grid = verify_realizations(144);
    std::ostringstream os;
    os << grid.instances << " triples, " << grid.failures.size() << " failures";
    report(4, "realization verified arc-by-arc, zero improper markers",
           grid.instances > 0 && grid.failures.empty(), os.str());
  }

  // 5. Constructive isomorphism for every (group, assignment) at order <= 36.
  {
    long long bad = sweep36.discrepancy_count("iso");
    std::ostringstream os;
    os << bad << " failures over " << sweep36.instance_count << " instances";
    report(5, "extracted parameters give a verified isomorphism", bad == 0, os.str());
  }

  // 6. Structural facts on every oracle-found code.
  {
    long long bad = sweep36.discrepancy_count("lemma");
    bool fields_ok = true;
    for (const auto& r : sweep36.records)
      if (r.oracle_exists) fields_ok = fields_ok && r.lemmas && r.lemmas->all();
    std::ostringstream os;
    os << bad << " failures";
    report(6, "involution/diagonal/spacing/offset facts on all codes",
           bad == 0 && fields_ok, os.str());
  }

  // 7. Worked fixed points.
  {
    bool ok = true;
    std::string detail = "all fixed points as expected";
    AbelianGroup z6({6});
    auto codes12 = enumerate_codes(
        build_cayley(z6, GenPair{z6.element({1}), z6.element({2})}).digraph());
    std::vector<std::vector<int>> want{{0, 3}, {1, 4}, {2, 5}};
    std::vector<std::vector<int>> got;
    for (const auto& c : codes12) got.push_back(c.vertices);
    if (got != want) {
      ok = false;
      detail = "codes of Cay(Z6,{1,2}) wrong";
    }
    if (!enumerate_codes(
             build_cayley(z6, GenPair{z6.element({1}), z6.element({4})}).digraph())
             .empty()) {
      ok = false;
      detail = "Cay(Z6,{1,4}) unexpectedly has a code";
    }
    if (!enumerate_codes(
             build_cayley(z6, GenPair{z6.element({1}), z6.element({3})}).digraph())
             .empty()) {
      ok = false;
      detail = "Cay(Z6,{1,3}) unexpectedly has a code";
    }
    CayleyRealization r = realize_as_cayley({3, 2, 2});
    std::set<std::string> gens;
    if (r.proper) {
      gens = {r.group.format(r.gens.s), r.group.format(r.gens.s_prime)};
    }
    if (!r.proper || r.group.invariant_factors() != std::vector<int>{6} ||
        gens != std::set<std::string>{"(1)", "(2)"}) {
      ok = false;
      detail = "realization of the (3,2,2) instance wrong";
    }
    report(7, "worked fixed points frozen from the oracle", ok, detail);
  }

  // 8. Byte-identical reports across two consecutive verify runs.
  {
    auto dir = std::filesystem::temp_directory_path();
    auto p1 = dir / "caycodes_acceptance_rep1.json";
    auto p2 = dir / "caycodes_acceptance_rep2.json";
    std::ostringstream sink, errsink;
    int s1 = run_cli({"verify", "thm1", "--max-order", "24", "--report", p1.string()},
                     sink, errsink);
    int s2 = run_cli({"verify", "thm1", "--max-order", "24", "--report", p2.string()},
                     sink, errsink);
    bool ok = s1 == 0 && s2 == 0 && !slurp(p1).empty() && slurp(p1) == slurp(p2);
    report(8, "two consecutive verify runs produce identical reports", ok,
           ok ? "byte-identical" : "reports differ or runs failed");
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
            << elapsed << "s total)\n";
  return failures;
}
