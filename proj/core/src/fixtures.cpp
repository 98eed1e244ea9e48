#include "zetatop/fixtures.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "zetatop/error.hpp"
#include "zetatop/expr.hpp"

namespace zetatop {

namespace detail {
struct EmbeddedFixture {
  const char* id;
  const char* text;
};
extern const EmbeddedFixture kEmbeddedFixtures[];
extern const std::size_t kEmbeddedFixtureCount;
}  // namespace detail

namespace {

const std::map<std::string, std::pair<std::string, std::string>, std::less<>>& descriptions() {
  static const std::map<std::string, std::pair<std::string, std::string>, std::less<>> d = {
      {"fab_fig1", {"graph", "f_{2,3}: dual resolution graph with the standard form dxdy"}},
      {"fab_fig2", {"graph", "f_{2,3} decorated with x^3 dxdy"}},
      {"fab_fig3", {"graph", "f_{2,3} decorated with a form in the maximal contact curves"}},
      {"fab_fig4", {"graph", "f_{2,3} decorated with x^4 y^4 dxdy"}},
      {"gpq_fig5", {"graph-template", "Q-resolution of (y^p+x^q)(y^q+x^p), parameters p, q, a"}},
      {"fab_multtable", {"multtable", "attachment points of the auxiliary curves on fab_fig1"}},
      {"fab_curves", {"curves", "branches of f_{2,3} with seven auxiliary curves"}},
      {"fab_curves_a4b5", {"curves", "branches of f_{4,5} with seven auxiliary curves"}},
      {"omega1", {"form", "x^3 dxdy"}},
      {"omega2", {"form", "x (x-y^2)^2 (x-2y^2)^2 (x-3y^2)^2 y^2 (y-x^2)^4 (y+x^2)^4 dxdy"}},
      {"omega3", {"form", "x^4 y^4 dxdy"}},
      {"node", {"graph", "x^2+y^2 after one blowup"}},
      {"node_multtable", {"multtable", "attachment points of x and y on the node graph"}},
      {"node_curves", {"curves", "x^2+y^2 with auxiliaries x, y"}},
      {"cusp", {"graph", "y^2+x^3 after three blowups"}},
      {"cusp_multtable", {"multtable", "attachment points of x and y on the cusp graph"}},
      {"cusp_curves", {"curves", "y^2+x^3 with auxiliaries x, y"}},
      {"expected", {"expected", "printed and classical reference values"}},
  };
  return d;
}

std::int64_t eval_param(const detail::json& v, const std::map<std::string, std::int64_t>& params,
                        const std::string& where) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (!v.is_string()) throw ValidationError("bad-template", where + ": expected an expression string");
  std::set<std::string, std::less<>> vars;
  for (const auto& [k, x] : params) vars.insert(k);
  const auto node = expr::parse(v.get<std::string>(), vars);
  std::function<Rat(const expr::Node&)> ev = [&](const expr::Node& n) -> Rat {
    using Op = expr::Node::Op;
    switch (n.op) {
      case Op::number:
        return n.value;
      case Op::variable:
        return Rat(params.at(n.name));
      case Op::add:
        return ev(*n.lhs) + ev(*n.rhs);
      case Op::sub:
        return ev(*n.lhs) - ev(*n.rhs);
      case Op::mul:
        return ev(*n.lhs) * ev(*n.rhs);
      case Op::div:
        return ev(*n.lhs) / ev(*n.rhs);
      case Op::pow:
        return pow(ev(*n.lhs), static_cast<int>(n.exponent));
      case Op::neg:
        return -ev(*n.lhs);
    }
    return Rat(0);
  };
  const Rat r = ev(*node);
  if (!r.is_integer()) throw ValidationError("bad-template", where + ": expression is not an integer");
  return r.to_int64();
}

}  // namespace

const FixtureCatalog& FixtureCatalog::embedded() {
  static const FixtureCatalog cat = [] {
    FixtureCatalog c;
    for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i) {
      c.docs_.emplace(detail::kEmbeddedFixtures[i].id, detail::kEmbeddedFixtures[i].text);
    }
    return c;
  }();
  return cat;
}

FixtureCatalog FixtureCatalog::from_directory(const std::filesystem::path& dir) {
  FixtureCatalog c;
  if (!std::filesystem::is_directory(dir)) {
    throw ValidationError("bad-fixture-dir", "not a directory: " + dir.string());
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    std::ostringstream ss;
    ss << in.rdbuf();
    c.docs_[entry.path().stem().string()] = ss.str();
  }
  return c;
}

std::vector<FixtureInfo> FixtureCatalog::list() const {
  std::vector<FixtureInfo> out;
  for (const auto& [id, text] : docs_) {
    const auto it = descriptions().find(id);
    if (it == descriptions().end()) {
      out.push_back({id, "unknown", ""});
    } else {
      out.push_back({id, it->second.first, it->second.second});
    }
  }
  return out;
}

bool FixtureCatalog::contains(std::string_view id) const { return docs_.find(id) != docs_.end(); }

const std::string& FixtureCatalog::text(std::string_view id) const {
  const auto it = docs_.find(id);
  if (it == docs_.end()) throw ValidationError("unknown-fixture", "no fixture named '" + std::string(id) + "'");
  return it->second;
}

void FixtureCatalog::set_text(const std::string& id, std::string text) { docs_[id] = std::move(text); }

ResGraph FixtureCatalog::graph(std::string_view id) const {
  if (id == "gpq_fig5") {
    const auto doc = detail::parse_json(text(id));
    const auto& p = doc.at("parameters");
    return gpq_graph({p.at("p").get<std::int64_t>(), p.at("q").get<std::int64_t>(), p.at("a").get<std::int64_t>()});
  }
  ResGraph g = parse_graph(text(id));
  if (g.label().empty()) g.set_label(std::string(id));
  return g;
}

ResGraph FixtureCatalog::gpq_graph(const GpqParams& gp) const {
  require_valid(gp);
  auto doc = detail::parse_json(text("gpq_fig5"));
  const std::map<std::string, std::int64_t> params{{"p", gp.p}, {"q", gp.q}, {"a", gp.a}};
  for (auto& v : doc["vertices"]) {
    const std::string id = v.at("id").get<std::string>();
    for (const char* key : {"N", "nu"}) v[key] = eval_param(v.at(key), params, "vertex '" + id + "'");
  }
  for (auto& e : doc["edges"]) {
    if (e.contains("order")) e["order"] = eval_param(e.at("order"), params, "edge");
  }
  doc.erase("parameters");
  doc["label"] = "gpq_fig5" + gp.str();
  return parse_graph(doc.dump());
}

MultTable FixtureCatalog::multtable(std::string_view id) const { return parse_multtable(text(id)); }

CurveInput FixtureCatalog::curves(std::string_view id) const { return parse_curve_input(text(id)); }

FormSpec FixtureCatalog::form(std::string_view id) const { return parse_formspec(text(id)); }

}  // namespace zetatop
