#include "zetatop/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "zetatop/error.hpp"

namespace zetatop {

std::string_view to_string(VertexKind k) {
  switch (k) {
    case VertexKind::exceptional:
      return "exceptional";
    case VertexKind::branch_arrow:
      return "branch-arrow";
    case VertexKind::form_arrow:
      return "form-arrow";
  }
  return "?";
}

std::optional<VertexKind> parse_vertex_kind(std::string_view s) {
  if (s == "exceptional") return VertexKind::exceptional;
  if (s == "branch-arrow" || s == "branch") return VertexKind::branch_arrow;
  if (s == "form-arrow" || s == "form") return VertexKind::form_arrow;
  return std::nullopt;
}

ResGraph::ResGraph(std::string label, std::vector<Vertex> vertices, std::vector<Edge> edges,
                   std::vector<QPoint> qpoints)
    : label_(std::move(label)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      qpoints_(std::move(qpoints)) {
  reindex();
}

void ResGraph::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i].id, i);
}

void ResGraph::add_vertex(Vertex v) {
  index_.emplace(v.id, vertices_.size());
  vertices_.push_back(std::move(v));
}

void ResGraph::add_edge(Edge e) { edges_.push_back(std::move(e)); }
void ResGraph::add_qpoint(QPoint q) { qpoints_.push_back(std::move(q)); }

void ResGraph::remove_vertex(std::string_view id) {
  std::erase_if(vertices_, [&](const Vertex& v) { return v.id == id; });
  std::erase_if(edges_, [&](const Edge& e) { return e.a == id || e.b == id; });
  std::erase_if(qpoints_, [&](const QPoint& q) { return q.vertex == id; });
  reindex();
}

bool ResGraph::contains(std::string_view id) const { return index_.find(id) != index_.end(); }

std::size_t ResGraph::index_of(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw ValidationError("unknown-vertex", "unknown vertex '" + std::string(id) + "'");
  }
  return it->second;
}

const Vertex& ResGraph::vertex(std::string_view id) const { return vertices_[index_of(id)]; }
Vertex& ResGraph::vertex_mut(std::string_view id) { return vertices_[index_of(id)]; }

std::vector<std::size_t> ResGraph::incident_edges(std::string_view id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].a == id || edges_[i].b == id) out.push_back(i);
  }
  return out;
}

std::vector<std::string> ResGraph::neighbors(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& e : edges_) {
    if (e.a == id) out.push_back(e.b);
    if (e.b == id) out.push_back(e.a);
  }
  return out;
}

std::size_t ResGraph::degree(std::string_view id) const { return incident_edges(id).size(); }

std::size_t ResGraph::exceptional_count() const {
  return static_cast<std::size_t>(std::count_if(
      vertices_.begin(), vertices_.end(), [](const Vertex& v) { return !v.is_arrow(); }));
}

bool ResGraph::is_ordinary() const {
  return qpoints_.empty() &&
         std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.order == 1; });
}

std::vector<std::string> validate(const ResGraph& g) {
  std::vector<std::string> out;
  const auto& vs = g.vertices();
  if (vs.empty()) {
    out.emplace_back("graph has no vertices");
    return out;
  }

  std::set<std::string, std::less<>> seen;
  for (const auto& v : vs) {
    const std::string at = "vertex '" + v.id + "'";
    if (v.id.empty()) out.emplace_back("vertex with empty id");
    if (!seen.insert(v.id).second) out.push_back("duplicate " + at);
    if (v.genus < 0) out.push_back(at + ": negative genus");
    switch (v.kind) {
      case VertexKind::exceptional:
        if (v.N < 1) out.push_back(at + ": exceptional vertex needs N >= 1");
        if (v.nu < 1) out.push_back(at + ": exceptional vertex needs nu >= 1");
        break;
      case VertexKind::branch_arrow:
        if (v.N < 1) out.push_back(at + ": branch arrow needs N >= 1");
        if (v.nu < 1) out.push_back(at + ": branch arrow needs nu >= 1");
        if (v.genus != 0) out.push_back(at + ": arrows carry no genus");
        break;
      case VertexKind::form_arrow:
        if (v.N != 0) out.push_back(at + ": form arrow needs N = 0");
        if (v.nu < 1) out.push_back(at + ": form arrow needs nu >= 1");
        if (v.genus != 0) out.push_back(at + ": arrows carry no genus");
        break;
    }
  }

  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : g.edges()) {
    const std::string at = "edge '" + e.id() + "'";
    if (!g.contains(e.a) || !g.contains(e.b)) {
      out.push_back(at + ": endpoint is not a vertex");
      continue;
    }
    if (e.a == e.b) out.push_back(at + ": loop");
    if (e.order < 1) out.push_back(at + ": order must be >= 1");
    if (g.vertex(e.a).is_arrow() && g.vertex(e.b).is_arrow()) {
      out.push_back(at + ": joins two arrows");
    }
    const auto key = std::minmax(e.a, e.b);
    if (!pairs.emplace(key.first, key.second).second) out.push_back("duplicate " + at);
  }

  for (const auto& q : g.qpoints()) {
    if (!g.contains(q.vertex)) {
      out.push_back("qpoint on unknown vertex '" + q.vertex + "'");
      continue;
    }
    if (g.vertex(q.vertex).is_arrow()) {
      out.push_back("qpoint on arrow '" + q.vertex + "'");
    }
    if (q.order < 2) out.push_back("qpoint on '" + q.vertex + "': order must be >= 2");
  }

  const std::size_t n_exc = g.exceptional_count();
  if (n_exc == 0) {
    // Smooth germ: the single branch itself, nothing blown up.
    if (vs.size() != 1 || vs[0].kind != VertexKind::branch_arrow || !g.edges().empty()) {
      out.emplace_back("graph without exceptional vertices must be a single branch arrow");
    }
    return out;
  }

  for (const auto& v : vs) {
    if (!v.is_arrow()) continue;
    const auto inc = g.incident_edges(v.id);
    if (inc.size() != 1) {
      out.push_back("arrow '" + v.id + "' must have exactly one incident edge");
      continue;
    }
    const auto& e = g.edges()[inc[0]];
    const auto& other = e.a == v.id ? e.b : e.a;
    if (g.contains(other) && g.vertex(other).is_arrow()) {
      out.push_back("arrow '" + v.id + "' must attach to an exceptional vertex");
    }
  }

  // Connectivity and acyclicity of the exceptional subgraph.
  std::map<std::string, std::vector<std::string>, std::less<>> adj;
  std::size_t exc_edges = 0;
  for (const auto& v : vs) {
    if (!v.is_arrow()) adj[v.id];
  }
  for (const auto& e : g.edges()) {
    if (adj.count(e.a) != 0 && adj.count(e.b) != 0 && e.a != e.b) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
      ++exc_edges;
    }
  }
  std::set<std::string, std::less<>> reached;
  std::vector<std::string> stack{adj.begin()->first};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (!reached.insert(cur).second) continue;
    for (const auto& n : adj[cur]) stack.push_back(n);
  }
  if (reached.size() != n_exc) out.emplace_back("exceptional subgraph is not connected");
  if (!g.allow_cycles() && reached.size() == n_exc && exc_edges != n_exc - 1) {
    out.emplace_back("exceptional subgraph is not a tree");
  }
  return out;
}

void require_valid(const ResGraph& g) {
  auto v = validate(g);
  if (!v.empty()) throw ValidationError(std::move(v));
}

std::int64_t chi_open(const ResGraph& g, std::string_view v) {
  const auto& vert = g.vertex(v);
  if (vert.is_arrow()) {
    throw ValidationError("arrow-stratum", "chi_open is defined for exceptional vertices only, '" +
                                               std::string(v) + "' is an arrow");
  }
  const auto q = std::count_if(g.qpoints().begin(), g.qpoints().end(),
                               [&](const QPoint& p) { return p.vertex == v; });
  return 2 - 2 * static_cast<std::int64_t>(vert.genus) -
         static_cast<std::int64_t>(g.degree(v)) - static_cast<std::int64_t>(q);
}

std::int64_t chi_open_of_f(const ResGraph& g, std::string_view v) {
  std::int64_t chi = chi_open(g, v);
  for (const auto& n : g.neighbors(v)) {
    if (g.vertex(n).kind == VertexKind::form_arrow) ++chi;
  }
  return chi;
}

ResGraph parse_graph(std::string_view json_text, bool check_invariants) {
  using detail::json;
  const json doc = detail::parse_json(json_text);
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object", 1, 1);

  ResGraph g;
  if (doc.contains("label") && doc["label"].is_string()) g.set_label(doc["label"].get<std::string>());
  if (doc.contains("allow_cycles")) g.set_allow_cycles(doc["allow_cycles"].get<bool>());

  if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty()) {
    throw ValidationError("empty-graph", "graph has no vertices");
  }
  for (const auto& jv : doc["vertices"]) {
    Vertex v;
    v.id = detail::get_string(jv, "id", "vertex");
    const std::string where = "vertex '" + v.id + "'";
    const std::string kind = jv.contains("kind") ? jv["kind"].get<std::string>() : "exceptional";
    const auto k = parse_vertex_kind(kind);
    if (!k) throw ValidationError("bad-kind", where + ": unknown kind '" + kind + "'");
    v.kind = *k;
    const std::int64_t default_n = v.kind == VertexKind::form_arrow ? 0 : 1;
    v.N = detail::get_int(jv, "N", default_n, where);
    v.nu = detail::get_int(jv, "nu", 1, where);
    v.genus = static_cast<int>(detail::get_int(jv, "genus", 0, where));
    g.add_vertex(std::move(v));
  }
  if (doc.contains("edges")) {
    for (const auto& je : doc["edges"]) {
      Edge e;
      e.a = detail::get_string(je, "a", "edge");
      e.b = detail::get_string(je, "b", "edge");
      e.order = detail::get_int(je, "order", 1, "edge '" + e.id() + "'");
      g.add_edge(std::move(e));
    }
  }
  if (doc.contains("qpoints")) {
    for (const auto& jq : doc["qpoints"]) {
      QPoint q;
      q.vertex = detail::get_string(jq, "vertex", "qpoint");
      q.order = detail::get_int(jq, "order", 2, "qpoint on '" + q.vertex + "'");
      g.add_qpoint(std::move(q));
    }
  }
  if (check_invariants) require_valid(g);
  return g;
}

std::string serialize_graph(const ResGraph& g) {
  using detail::json;
  json doc;
  doc["label"] = g.label();
  json vs = json::array();
  for (const auto& v : g.vertices()) {
    json jv;
    jv["id"] = v.id;
    jv["kind"] = std::string(to_string(v.kind));
    jv["N"] = v.N;
    jv["nu"] = v.nu;
    jv["genus"] = v.genus;
    vs.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(vs);
  json es = json::array();
  for (const auto& e : g.edges()) es.push_back({{"a", e.a}, {"b", e.b}, {"order", e.order}});
  doc["edges"] = std::move(es);
  json qs = json::array();
  for (const auto& q : g.qpoints()) qs.push_back({{"vertex", q.vertex}, {"order", q.order}});
  doc["qpoints"] = std::move(qs);
  if (g.allow_cycles()) doc["allow_cycles"] = true;
  return doc.dump(2) + "\n";
}

namespace {

std::string vertex_label(const ResGraph& g, const Vertex& v) {
  std::vector<std::int64_t> q;
  for (const auto& p : g.qpoints()) {
    if (p.vertex == v.id) q.push_back(p.order);
  }
  std::sort(q.begin(), q.end());
  std::ostringstream os;
  os << to_string(v.kind)[0] << v.N << ',' << v.nu;
  if (v.genus != 0) os << 'g' << v.genus;
  for (auto o : q) os << 'q' << o;
  return os.str();
}

}  // namespace

std::string canonical_form(const ResGraph& g) {
  const auto n = g.vertices().size();
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(n);
  for (const auto& e : g.edges()) {
    const auto a = g.index_of(e.a);
    const auto b = g.index_of(e.b);
    adj[a].emplace_back(b, e.order);
    adj[b].emplace_back(a, e.order);
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = vertex_label(g, g.vertices()[i]);

  std::function<std::string(std::size_t, std::size_t)> encode = [&](std::size_t v, std::size_t parent) {
    std::vector<std::string> kids;
    for (const auto& [w, order] : adj[v]) {
      if (w == parent) continue;
      kids.push_back(std::to_string(order) + ":" + encode(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + labels[v];
    for (const auto& k : kids) s += k;
    return s + ")";
  };

  // Components are encoded from their tree centers.
  std::vector<bool> done(n, false);
  std::vector<std::string> comps;
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (done[v]) continue;
      done[v] = true;
      comp.push_back(v);
      for (const auto& [w, o] : adj[v]) stack.push_back(w);
    }
    std::size_t edge_count = 0;
    for (auto v : comp) edge_count += adj[v].size();
    edge_count /= 2;
    if (edge_count + 1 != comp.size()) {
      // Not a tree: sorted labels and degree sequence only.
      std::vector<std::string> sig;
      for (auto v : comp) sig.push_back(labels[v] + "/" + std::to_string(adj[v].size()));
      std::sort(sig.begin(), sig.end());
      std::string s = "cyclic[";
      for (const auto& x : sig) s += x + ";";
      comps.push_back(s + "]");
      continue;
    }
    std::vector<std::size_t> deg(n, 0);
    std::vector<std::size_t> leaves;
    for (auto v : comp) {
      deg[v] = adj[v].size();
      if (deg[v] <= 1) leaves.push_back(v);
    }
    std::size_t remaining = comp.size();
    while (remaining > 2) {
      std::vector<std::size_t> next;
      for (auto v : leaves) {
        --remaining;
        for (const auto& [w, o] : adj[v]) {
          if (--deg[w] == 1) next.push_back(w);
        }
      }
      leaves = std::move(next);
    }
    std::string best;
    for (auto c : leaves) {
      auto s = encode(c, n);
      if (best.empty() || s < best) best = std::move(s);
    }
    comps.push_back(best);
  }
  std::sort(comps.begin(), comps.end());
  std::string out;
  for (const auto& c : comps) out += c;
  return out;
}

std::string adjacency_dump(const ResGraph& g) {
  std::ostringstream os;
  if (!g.label().empty()) os << "# " << g.label() << '\n';
  for (const auto& v : g.vertices()) {
    os << v.id << " [" << to_string(v.kind) << " (" << v.N << ',' << v.nu << ")";
    if (v.genus != 0) os << " g=" << v.genus;
    os << "] ->";
    for (auto idx : g.incident_edges(v.id)) {
      const auto& e = g.edges()[idx];
      os << ' ' << (e.a == v.id ? e.b : e.a);
      if (e.order != 1) os << '[' << e.order << ']';
    }
    for (const auto& q : g.qpoints()) {
      if (q.vertex == v.id) os << " q[" << q.order << ']';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace zetatop
