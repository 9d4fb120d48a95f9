#pragma once

#include <iosfwd>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

namespace caycodes {

// Finite simple digraph: vertices 0..n-1 with opaque string labels and a set
// of arcs between distinct vertices. Loops and duplicate arcs are
// construction errors, never silent merges. Immutable once built; all read
// operations are safe to call concurrently.
class Digraph {
 public:
  explicit Digraph(int vertex_count);
  Digraph(int vertex_count, std::vector<std::string> labels);

  void add_arc(int from, int to);

  int vertex_count() const { return n_; }
  long long arc_count() const { return static_cast<long long>(arc_keys_.size()); }
  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_arc(int from, int to) const;

  // Sorted ascending.
  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;

  bool is_k_valent(int k) const;
  bool is_strongly_connected() const;

  // All arcs sorted lexicographically.
  std::vector<std::pair<int, int>> sorted_arcs() const;

  void write_dot(std::ostream& os) const;
  nlohmann::json to_json() const;
  static Digraph from_json(const nlohmann::json& j);

 private:
  void check_vertex(int v) const;
  long long arc_key(int from, int to) const {
    return static_cast<long long>(from) * n_ + to;
  }

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::unordered_set<long long> arc_keys_;
};

struct IsoWitness {
  std::string reason;
  int u = -1, v = -1;  // offending arc endpoints, when applicable
};

// Checks that the GIVEN map (indexed by vertices of a) is a bijection onto
// b's vertices carrying arcs exactly onto arcs. No isomorphism search.
bool verify_isomorphism(const Digraph& a, const Digraph& b,
                        const std::vector<int>& map,
                        IsoWitness* witness = nullptr);

}  // namespace caycodes
