#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "caycodes/abelian.hpp"
#include "caycodes/cayley.hpp"
#include "caycodes/codes.hpp"
#include "caycodes/gamma.hpp"

namespace caycodes {

// The admission predicate on an extracted parameter triple: 3 | m,
// 3 | (l - h), and the valuation condition for every prime of m*l.
bool classification_predicate(const GammaParams& p);

// One row of the verification sweep: a group, one ordered assignment of a
// generating pair, the extracted parameters with their condition flags, and
// the oracle outcomes.
struct InstanceRecord {
  std::vector<int> group_factors;
  std::string group_spec;
  std::string s_label;
  std::string s_prime_label;
  long long m = 0, l = 0, h = 0;
  ConditionReport flags;
  bool predicate = false;
  bool oracle_exists = false;
  long long oracle_code_count = 0;
  std::optional<bool> identity_code_matches_family;  // empty = not applicable
  std::optional<LemmaReport> lemmas;                 // empty = not applicable
};

// Discrepancy classes: "structure" (valency/connectivity assertion),
// "sigma" (valuation condition failed on extracted parameters),
// "iso" (constructive isomorphism failed), "thm1" (predicate vs oracle),
// "agreement" (the two assignments of one pair disagree),
// "thm2" (code-set structure), "lemma" (a structural fact failed).
struct Discrepancy {
  std::string cls;
  std::string key;
  std::string reason;
};

struct SweepOptions {
  int max_order = 36;
  int jobs = 1;             // 0 = one per hardware thread
  bool early_exit = false;  // existence-only oracle; skips code-structure checks
  int size_cap = 200;
};

struct SweepReport {
  int max_order = 0;
  long long instance_count = 0;
  long long positive_count = 0;
  std::vector<InstanceRecord> records;
  std::vector<Discrepancy> discrepancies;
  // Wall-clock time; deliberately excluded from the serialized reports so
  // identical runs produce identical bytes.
  double elapsed_seconds = 0;

  long long discrepancy_count(const std::string& cls) const;
};

// Exhaustive verification harness: every abelian group of order up to
// max_order, every ordered generating pair. Builds the Cayley digraph,
// asserts 2-valent and strongly connected, extracts parameters, evaluates
// the predicate, runs the exact-cover oracle, checks the constructive
// isomorphism, the identity-code structure and the lemma facts, and records
// any disagreement as data. Deterministic regardless of worker count.
SweepReport sweep(const SweepOptions& options);

nlohmann::json report_to_json(const SweepReport& report);
std::string report_to_csv(const SweepReport& report);

struct GridFailure {
  GammaParams params;
  std::string reason;
};

struct GridReport {
  long long instances = 0;
  std::vector<GridFailure> failures;
};

// Canonical-code grid: for every (m, l, h) with 3 | m, m <= max_m,
// l <= max_l, 3 | (l - h), the canonical code is a perfect code of size
// m*l/3 whose parts are pairwise disjoint of size m*l/gcd(l-h, m).
GridReport verify_canonical_codes(int max_m, int max_l);

// Realization grid: every non-degenerate (m, l, h) with m*l <= max_product
// realizes as a Cayley digraph on an abelian group with an arc-verified
// natural map.
GridReport verify_realizations(int max_product);

}  // namespace caycodes
