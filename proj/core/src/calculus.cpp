#include "zetatop/calculus.hpp"

#include <algorithm>

#include "json_util.hpp"
#include "zetatop/error.hpp"
#include "zetatop/exact/linsolve.hpp"

namespace zetatop {

bool FormSpec::is_standard() const {
  return std::all_of(exponents.begin(), exponents.end(), [](const auto& kv) { return kv.second == 0; });
}

std::int64_t FormSpec::exponent(std::string_view curve) const {
  for (const auto& [id, c] : exponents) {
    if (id == curve) return c;
  }
  return 0;
}

namespace {

std::vector<std::string> exceptional_ids(const ResGraph& g) {
  std::vector<std::string> ids;
  for (const auto& v : g.vertices()) {
    if (!v.is_arrow()) ids.push_back(v.id);
  }
  return ids;
}

// Intersection matrix of the exceptional curves.
std::vector<std::vector<Rat>> intersection_matrix(const ResGraph& g, const std::vector<std::string>& ids,
                                                  const std::map<std::string, std::int64_t>& self_int) {
  const auto n = ids.size();
  std::map<std::string, std::size_t, std::less<>> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(ids[i], i);
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = self_int.find(ids[i]);
    if (it == self_int.end()) {
      throw ValidationError("missing-self-intersection", "no self-intersection for '" + ids[i] + "'");
    }
    m[i][i] = Rat(it->second);
  }
  for (const auto& e : g.edges()) {
    const auto a = pos.find(e.a);
    const auto b = pos.find(e.b);
    if (a == pos.end() || b == pos.end()) continue;
    m[a->second][b->second] += Rat(1);
    m[b->second][a->second] += Rat(1);
  }
  return m;
}

std::int64_t certify_integer(const Rat& r, const std::string& what) {
  if (!r.is_integer()) {
    throw InconsistencyError("non-integer-solution", what + " is not an integer: " + r.str());
  }
  return r.to_int64();
}

void require_ordinary_valid(const ResGraph& g) {
  require_valid(g);
  if (!g.is_ordinary()) {
    throw ValidationError("not-ordinary", "intersection calculus needs an ordinary graph");
  }
}

}  // namespace

std::map<std::string, std::int64_t> self_intersections(const ResGraph& g) {
  require_ordinary_valid(g);
  std::map<std::string, std::int64_t> out;
  for (const auto& v : g.vertices()) {
    if (v.is_arrow()) continue;
    std::int64_t sum = 0;
    for (const auto& n : g.neighbors(v.id)) sum += g.vertex(n).N;
    if (sum % v.N != 0 || sum == 0) {
      throw InconsistencyError("inconsistent-multiplicities",
                               "E^2 of '" + v.id + "' would be -" + std::to_string(sum) + "/" +
                                   std::to_string(v.N) + ", not a negative integer");
    }
    out[v.id] = -sum / v.N;
  }
  return out;
}

std::map<std::string, std::int64_t> canonical_nu(const ResGraph& g,
                                                 const std::map<std::string, std::int64_t>& self_int) {
  const auto ids = exceptional_ids(g);
  auto m = intersection_matrix(g, ids, self_int);
  std::vector<Rat> b(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    b[i] = -m[i][i] - Rat(2) + Rat(2 * g.vertex(ids[i]).genus);
  }
  const auto k = solve_linear(std::move(m), std::move(b));
  if (!k) throw InconsistencyError("singular-system", "intersection matrix is singular");
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto nu = certify_integer((*k)[i] + Rat(1), "canonical nu of '" + ids[i] + "'");
    if (nu < 1) {
      throw InconsistencyError("nonpositive-nu", "canonical nu of '" + ids[i] + "' is " + std::to_string(nu));
    }
    out[ids[i]] = nu;
  }
  return out;
}

std::map<std::string, std::int64_t> curve_multiplicities(const ResGraph& g,
                                                         const std::vector<Attachment>& attachment) {
  if (attachment.empty()) throw ValidationError("empty-attachment", "curve has no attachment");
  const auto ids = exceptional_ids(g);
  auto m = intersection_matrix(g, ids, self_intersections(g));
  std::vector<Rat> rhs(ids.size());
  for (const auto& a : attachment) {
    const auto it = std::find(ids.begin(), ids.end(), a.vertex);
    if (it == ids.end()) {
      throw ValidationError("bad-attachment", "attachment vertex '" + a.vertex + "' is not exceptional");
    }
    rhs[static_cast<std::size_t>(it - ids.begin())] -= Rat(a.count);
  }
  const auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) throw InconsistencyError("singular-system", "intersection matrix is singular");
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto v = certify_integer((*sol)[i], "multiplicity on '" + ids[i] + "'");
    if (v < 0) throw InconsistencyError("negative-multiplicity", "negative multiplicity on '" + ids[i] + "'");
    out[ids[i]] = v;
  }
  return out;
}

MultTable derive_multtable(const ResGraph& g,
                           const std::map<std::string, std::vector<Attachment>>& attachments) {
  MultTable t;
  for (const auto& [id, nu] : canonical_nu(g, self_intersections(g))) t.canonical[id] = nu - 1;
  for (const auto& [curve, att] : attachments) {
    t.curves[curve] = CurveMultiplicities{curve_multiplicities(g, att), att};
  }
  return t;
}

std::vector<std::string> admissibility_violations(const ResGraph& g, const MultTable& t,
                                                  const FormSpec& w) {
  std::vector<std::string> out;
  std::map<std::string, std::int64_t> added;
  for (const auto& [curve, c] : w.exponents) {
    if (c < 0) out.push_back("negative exponent for curve '" + curve + "'");
    if (c <= 0) continue;
    const auto it = t.curves.find(curve);
    if (it == t.curves.end()) {
      out.push_back("curve '" + curve + "' missing from the multiplicity table");
      continue;
    }
    const auto& att = it->second.attachment;
    if (att.size() != 1) {
      out.push_back("curve '" + curve + "' must meet the graph at a single vertex");
    }
    for (const auto& a : att) {
      if (!g.contains(a.vertex) || g.vertex(a.vertex).is_arrow()) {
        out.push_back("curve '" + curve + "' attaches to unknown vertex '" + a.vertex + "'");
        continue;
      }
      if (a.count != 1) out.push_back("curve '" + curve + "' is not transversal at '" + a.vertex + "'");
      ++added[a.vertex];
    }
  }
  for (const auto& [vid, k] : added) {
    if (!g.contains(vid)) continue;
    std::int64_t base = 0;
    for (const auto& n : g.neighbors(vid)) {
      if (g.vertex(n).kind != VertexKind::form_arrow) ++base;
    }
    if (base < 3 && base + k >= 3) {
      out.push_back("form arrows at '" + vid + "' would create a new branching component");
    }
  }
  return out;
}

ResGraph decorate(const ResGraph& g, const MultTable& t, const FormSpec& w) {
  require_ordinary_valid(g);
  for (const auto& [curve, c] : w.exponents) {
    if (c > 0 && t.curves.find(curve) == t.curves.end()) {
      throw ValidationError("missing-curve", "curve '" + curve + "' missing from the multiplicity table");
    }
  }
  ResGraph out = g;
  std::vector<std::string> old_forms;
  for (const auto& v : out.vertices()) {
    if (v.kind == VertexKind::form_arrow) old_forms.push_back(v.id);
  }
  for (const auto& id : old_forms) out.remove_vertex(id);

  auto violations = admissibility_violations(out, t, w);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  for (const auto& v : g.vertices()) {
    if (v.is_arrow()) continue;
    const auto k = t.canonical.find(v.id);
    if (k == t.canonical.end()) {
      throw ValidationError("missing-canonical", "no canonical multiplicity for '" + v.id + "'");
    }
    std::int64_t nu = 1 + k->second;
    for (const auto& [curve, c] : w.exponents) {
      if (c <= 0) continue;
      const auto& m = t.curves.at(curve).m;
      const auto mi = m.find(v.id);
      if (mi == m.end()) {
        throw ValidationError("missing-multiplicity",
                              "curve '" + curve + "' has no multiplicity on '" + v.id + "'");
      }
      nu += c * mi->second;
    }
    out.vertex_mut(v.id).nu = nu;
  }
  for (const auto& [curve, c] : w.exponents) {
    if (c <= 0) continue;
    const auto& att = t.curves.at(curve).attachment;
    for (std::size_t i = 0; i < att.size(); ++i) {
      std::string id = "w:" + curve;
      if (att.size() > 1) id += "#" + std::to_string(i + 1);
      while (out.contains(id)) id += "'";
      out.add_vertex(Vertex{id, VertexKind::form_arrow, 0, 1 + c, 0});
      out.add_edge(Edge{att[i].vertex, id, 1});
    }
  }
  return out;
}

MultTable parse_multtable(std::string_view json_text) {
  using detail::json;
  const json doc = detail::parse_json(json_text);
  MultTable t;
  if (doc.contains("canonical")) {
    for (const auto& [id, k] : doc["canonical"].items()) {
      t.canonical[id] = detail::get_int(doc["canonical"], id.c_str(), 0, "canonical");
    }
  }
  if (doc.contains("curves")) {
    for (const auto& jc : doc["curves"]) {
      const auto id = detail::get_string(jc, "id", "curve");
      CurveMultiplicities c;
      if (jc.contains("attachment")) {
        for (const auto& ja : jc["attachment"]) {
          c.attachment.push_back(
              Attachment{detail::get_string(ja, "vertex", "attachment of '" + id + "'"),
                         detail::get_int(ja, "count", 1, "attachment of '" + id + "'")});
        }
      }
      if (jc.contains("m")) {
        for (const auto& [vid, mv] : jc["m"].items()) {
          c.m[vid] = detail::get_int(jc["m"], vid.c_str(), 0, "curve '" + id + "'");
        }
      }
      t.curves[id] = std::move(c);
    }
  }
  return t;
}

std::string serialize_multtable(const MultTable& t) {
  using detail::json;
  json doc;
  doc["canonical"] = json::object();
  for (const auto& [id, k] : t.canonical) doc["canonical"][id] = k;
  json curves = json::array();
  for (const auto& [id, c] : t.curves) {
    json jc;
    jc["id"] = id;
    json att = json::array();
    for (const auto& a : c.attachment) att.push_back({{"vertex", a.vertex}, {"count", a.count}});
    jc["attachment"] = std::move(att);
    jc["m"] = json::object();
    for (const auto& [vid, m] : c.m) jc["m"][vid] = m;
    curves.push_back(std::move(jc));
  }
  doc["curves"] = std::move(curves);
  return doc.dump(2) + "\n";
}

MultTable complete_multtable(const ResGraph& g, MultTable t) {
  if (t.canonical.empty()) {
    for (const auto& [id, nu] : canonical_nu(g, self_intersections(g))) t.canonical[id] = nu - 1;
  }
  for (auto& [id, c] : t.curves) {
    if (c.m.empty()) c.m = curve_multiplicities(g, c.attachment);
  }
  return t;
}

FormSpec parse_formspec(std::string_view json_text) {
  using detail::json;
  const json doc = detail::parse_json(json_text);
  FormSpec w;
  const json& ex = doc.contains("exponents") ? doc["exponents"] : doc;
  for (const auto& [id, c] : ex.items()) {
    if (id == "label") continue;
    w.exponents[id] = detail::get_int(ex, id.c_str(), 0, "form");
  }
  return w;
}

std::string serialize_formspec(const FormSpec& w) {
  detail::json doc;
  doc["exponents"] = detail::json::object();
  for (const auto& [id, c] : w.exponents) doc["exponents"][id] = c;
  return doc.dump(2) + "\n";
}

}  // namespace zetatop
