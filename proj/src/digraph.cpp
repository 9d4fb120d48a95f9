#include "caycodes/digraph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace caycodes {

Digraph::Digraph(int vertex_count) : n_(vertex_count) {
  if (n_ <= 0) throw std::invalid_argument("Digraph: vertex count must be positive");
  labels_.reserve(n_);
  for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  out_.resize(n_);
  in_.resize(n_);
}

Digraph::Digraph(int vertex_count, std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
  if (n_ <= 0) throw std::invalid_argument("Digraph: vertex count must be positive");
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("Digraph: label count must match vertex count");
  out_.resize(n_);
  in_.resize(n_);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex out of range");
}

void Digraph::add_arc(int from, int to) {
  check_vertex(from);
  check_vertex(to);
  if (from == to)
    throw std::invalid_argument("Digraph: loop arc (" + labels_[from] + " -> itself)");
  if (!arc_keys_.insert(arc_key(from, to)).second)
    throw std::invalid_argument("Digraph: duplicate arc (" + labels_[from] + " -> " +
                                labels_[to] + ")");
  auto& o = out_[from];
  o.insert(std::lower_bound(o.begin(), o.end(), to), to);
  auto& i = in_[to];
  i.insert(std::lower_bound(i.begin(), i.end(), from), from);
}

const std::string& Digraph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

bool Digraph::has_arc(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  return arc_keys_.count(arc_key(from, to)) > 0;
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[v];
}

bool Digraph::is_k_valent(int k) const {
  for (int v = 0; v < n_; ++v) {
    if (static_cast<int>(out_[v].size()) != k) return false;
    if (static_cast<int>(in_[v].size()) != k) return false;
  }
  return true;
}

namespace {

int reachable_count(int n, int start, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool Digraph::is_strongly_connected() const {
  return reachable_count(n_, 0, out_) == n_ && reachable_count(n_, 0, in_) == n_;
}

std::vector<std::pair<int, int>> Digraph::sorted_arcs() const {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(arc_keys_.size());
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) arcs.emplace_back(u, v);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void Digraph::write_dot(std::ostream& os) const {
  os << "digraph {\n";
  for (int v = 0; v < n_; ++v) os << "  " << dot_quote(labels_[v]) << ";\n";
  for (const auto& [u, v] : sorted_arcs())
    os << "  " << dot_quote(labels_[u]) << " -> " << dot_quote(labels_[v]) << ";\n";
  os << "}\n";
}

nlohmann::json Digraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = labels_;
  auto arcs = nlohmann::json::array();
  for (const auto& [u, v] : sorted_arcs()) arcs.push_back({u, v});
  j["arcs"] = std::move(arcs);
  return j;
}

Digraph Digraph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
    throw std::invalid_argument("digraph json: expected object with 'vertices' and 'arcs'");
  std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
  const int n = static_cast<int>(labels.size());
  Digraph d(n, std::move(labels));
  for (const auto& arc : j.at("arcs")) {
    if (!arc.is_array() || arc.size() != 2)
      throw std::invalid_argument("digraph json: each arc must be a pair [u, v]");
    d.add_arc(arc.at(0).get<int>(), arc.at(1).get<int>());
  }
  return d;
}

bool verify_isomorphism(const Digraph& a, const Digraph& b,
                        const std::vector<int>& map, IsoWitness* witness) {
  auto fail = [&](const std::string& reason, int u = -1, int v = -1) {
    if (witness) *witness = IsoWitness{reason, u, v};
    return false;
  };
  if (a.vertex_count() != b.vertex_count())
    return fail("vertex counts differ");
  if (static_cast<int>(map.size()) != a.vertex_count())
    return fail("map is not total");
  std::vector<char> hit(b.vertex_count(), 0);
  for (int v = 0; v < a.vertex_count(); ++v) {
    if (map[v] < 0 || map[v] >= b.vertex_count() || hit[map[v]])
      return fail("map is not a bijection", v);
    hit[map[v]] = 1;
  }
  if (a.arc_count() != b.arc_count()) {
    for (const auto& [u, v] : b.sorted_arcs()) {
      // Report some arc of b with no preimage.
      bool found = false;
      for (int x = 0; x < a.vertex_count() && !found; ++x)
        for (int y : a.out_neighbors(x))
          if (map[x] == u && map[y] == v) {
            found = true;
            break;
          }
      if (!found) return fail("arc of second digraph has no preimage", u, v);
    }
    return fail("arc counts differ");
  }
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v : a.out_neighbors(u))
      if (!b.has_arc(map[u], map[v]))
        return fail("arc image missing in second digraph", u, v);
  return true;
}

}  // namespace caycodes
