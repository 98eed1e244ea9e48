#include "zetatop/explore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json_util.hpp"
#include "zetatop/error.hpp"

namespace zetatop {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    const auto end = pos == std::string_view::npos ? s.size() : pos;
    out.push_back(trim(s.substr(start, end - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_exponent(const std::string& s, const std::string& item) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("bad-bounds", "bad exponent '" + s + "' in '" + item + "'");
}

std::string root_of(const ResGraph& g, const std::optional<std::string>& root) {
  if (root) {
    if (!g.contains(*root) || g.vertex(*root).is_arrow()) {
      throw ValidationError("bad-root", "root '" + *root + "' is not an exceptional vertex");
    }
    return *root;
  }
  const Vertex* best = nullptr;
  for (const auto& v : g.vertices()) {
    if (v.kind == VertexKind::exceptional && (best == nullptr || v.N < best->N)) best = &v;
  }
  if (best == nullptr) throw ValidationError("bad-root", "graph has no exceptional vertex");
  return best->id;
}

// Side label per exceptional vertex: the root's neighbour heading its subtree.
std::map<std::string, std::string> sides(const ResGraph& g, const std::string& root) {
  std::map<std::string, std::string> side{{root, "root"}};
  for (const auto& head : g.neighbors(root)) {
    if (g.vertex(head).is_arrow()) continue;
    std::vector<std::string> stack{head};
    side[head] = head;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto& n : g.neighbors(v)) {
        if (g.vertex(n).is_arrow() || side.count(n) != 0) continue;
        side[n] = head;
        stack.push_back(n);
      }
    }
  }
  return side;
}

// The graph compiled to flat arrays for per-form evaluation. Nodes are the
// exceptional vertices followed by branch arrows (N = nu = 1).
struct Compiled {
  std::size_t exceptional = 0;
  std::vector<std::int64_t> N;
  std::vector<std::int64_t> base_nu;
  std::vector<std::int64_t> base_chi;
  std::vector<std::int64_t> base_degree;           // incident edges without form arrows
  std::vector<std::vector<std::int64_t>> m;        // [curve][exceptional]
  std::vector<std::vector<std::size_t>> attach;    // [curve] -> exceptional nodes
  std::vector<bool> curve_ok;                      // single transversal attachment
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adj;
  std::size_t root = 0;
};

Compiled compile(const ResGraph& g, const MultTable& t, const SearchBox& box, const std::string& root) {
  if (!g.is_ordinary()) throw ValidationError("not-ordinary", "sweeps need an ordinary graph");
  require_valid(g);
  Compiled c;
  std::map<std::string, std::size_t> index;
  for (const auto& v : g.vertices()) {
    if (v.kind != VertexKind::exceptional) continue;
    index[v.id] = c.N.size();
    c.N.push_back(v.N);
    const auto k = t.canonical.find(v.id);
    if (k == t.canonical.end()) {
      throw ValidationError("missing-canonical", "no canonical multiplicity for '" + v.id + "'");
    }
    c.base_nu.push_back(1 + k->second);
    c.base_chi.push_back(chi_open_of_f(g, v.id));
    std::int64_t deg = 0;
    for (const auto& n : g.neighbors(v.id)) {
      if (g.vertex(n).kind != VertexKind::form_arrow) ++deg;
    }
    c.base_degree.push_back(deg);
  }
  c.exceptional = c.N.size();
  for (const auto& v : g.vertices()) {
    if (v.kind != VertexKind::branch_arrow) continue;
    index[v.id] = c.N.size();
    c.N.push_back(v.N);
    c.base_nu.push_back(v.nu);
  }
  c.adj.resize(c.N.size());
  for (const auto& e : g.edges()) {
    const auto ia = index.find(e.a);
    const auto ib = index.find(e.b);
    if (ia == index.end() || ib == index.end()) continue;
    c.edges.emplace_back(ia->second, ib->second);
    c.adj[ia->second].push_back(ib->second);
    c.adj[ib->second].push_back(ia->second);
  }
  for (const auto& id : box.curves) {
    const auto it = t.curves.find(id);
    if (it == t.curves.end()) {
      throw ValidationError("missing-curve", "curve '" + id + "' missing from the multiplicity table");
    }
    std::vector<std::int64_t> mv(c.exceptional, 0);
    for (const auto& [vid, i] : index) {
      if (i >= c.exceptional) continue;
      const auto mi = it->second.m.find(vid);
      if (mi == it->second.m.end()) {
        throw ValidationError("missing-multiplicity",
                              "curve '" + id + "' has no multiplicity on '" + vid + "'");
      }
      mv[i] = mi->second;
    }
    c.m.push_back(std::move(mv));
    std::vector<std::size_t> at;
    bool ok = it->second.attachment.size() == 1;
    for (const auto& a : it->second.attachment) {
      const auto ia = index.find(a.vertex);
      if (ia == index.end() || ia->second >= c.exceptional) {
        throw ValidationError("bad-attachment", "curve '" + id + "' attaches to unknown vertex '" + a.vertex + "'");
      }
      ok = ok && a.count == 1;
      at.push_back(ia->second);
    }
    c.attach.push_back(std::move(at));
    c.curve_ok.push_back(ok);
  }
  c.root = index.at(root);
  return c;
}

struct FormPoles {
  bool admissible = true;
  std::vector<Rat> doubles;  // ascending
  std::vector<Rat> simples;  // ascending
};

class Evaluator {
 public:
  explicit Evaluator(const Compiled& c) : c_(c), nu_(c.N.size()), arrows_(c.exceptional), formw_(c.exceptional) {}

  FormPoles eval(const std::vector<std::int64_t>& exps) {
    FormPoles out;
    const std::size_t n = c_.N.size();
    std::fill(arrows_.begin(), arrows_.end(), 0);
    for (std::size_t i = 0; i < c_.exceptional; ++i) formw_[i] = Rat(0);
    for (std::size_t i = 0; i < n; ++i) nu_[i] = c_.base_nu[i];
    for (std::size_t g = 0; g < exps.size(); ++g) {
      const std::int64_t e = exps[g];
      if (e == 0) continue;
      if (!c_.curve_ok[g]) out.admissible = false;
      const auto& mv = c_.m[g];
      for (std::size_t i = 0; i < c_.exceptional; ++i) nu_[i] += e * mv[i];
      for (const auto a : c_.attach[g]) {
        ++arrows_[a];
        formw_[a] += Rat(1, 1 + e);
      }
    }
    for (std::size_t i = 0; i < c_.exceptional; ++i) {
      if (arrows_[i] > 0 && c_.base_degree[i] < 3 && c_.base_degree[i] + arrows_[i] >= 3) out.admissible = false;
    }
    if (!out.admissible) return out;

    for (const auto& [a, b] : c_.edges) {
      if (nu_[a] * c_.N[b] == nu_[b] * c_.N[a]) out.doubles.push_back(Rat(-nu_[a], c_.N[a]));
    }
    std::sort(out.doubles.begin(), out.doubles.end());
    out.doubles.erase(std::unique(out.doubles.begin(), out.doubles.end()), out.doubles.end());

    // Group nodes by nu/N; a group that is not a double pole has residue
    //   sum_v (chi_v + formw_v + sum_{w adj} N_v / (nu_w N_v - N_w nu_v)) / N_v.
    std::vector<bool> done(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      const Rat s0(-nu_[v], c_.N[v]);
      std::vector<std::size_t> group;
      for (std::size_t w = v; w < n; ++w) {
        if (!done[w] && nu_[w] * c_.N[v] == nu_[v] * c_.N[w]) {
          done[w] = true;
          group.push_back(w);
        }
      }
      if (std::binary_search(out.doubles.begin(), out.doubles.end(), s0)) continue;
      Rat residue;
      for (const auto u : group) {
        if (u >= c_.exceptional) {
          // branch arrows carry no vertex term
          for (const auto w : c_.adj[u]) {
            residue += Rat(1) / Rat(nu_[w] * c_.N[u] - c_.N[w] * nu_[u]);
          }
          continue;
        }
        Rat r = Rat(c_.base_chi[static_cast<std::size_t>(u)] - arrows_[u]) + formw_[u];
        for (const auto w : c_.adj[u]) r += Rat(c_.N[u]) / Rat(nu_[w] * c_.N[u] - c_.N[w] * nu_[u]);
        residue += r / Rat(c_.N[u]);
      }
      if (!residue.is_zero()) out.simples.push_back(s0);
    }
    std::sort(out.simples.begin(), out.simples.end());
    return out;
  }

  std::int64_t nu(std::size_t i) const { return nu_[i]; }

 private:
  const Compiled& c_;
  std::vector<std::int64_t> nu_;
  std::vector<std::int64_t> arrows_;
  std::vector<Rat> formw_;
};

struct Partial {
  std::uint64_t forms = 0;
  std::uint64_t inadmissible = 0;
  std::uint64_t target_matches = 0;
  std::vector<std::uint64_t> hits;
  std::map<std::vector<Rat>, std::pair<std::uint64_t, std::uint64_t>> classes;  // count, first
  std::uint64_t non_eigen = 0;
  std::vector<std::uint64_t> non_eigen_idx;
  std::set<std::int64_t> pole_orders;
  std::uint64_t root_double = 0;
  std::uint64_t root_double_second = 0;
};

std::vector<std::int64_t> exponents_at(const SearchBox& box, std::uint64_t index) {
  std::vector<std::int64_t> e(box.curves.size());
  for (std::size_t i = box.curves.size(); i-- > 0;) {
    const auto& r = box.bounds.at(box.curves[i]);
    const auto width = static_cast<std::uint64_t>(r.hi - r.lo + 1);
    e[i] = r.lo + static_cast<std::int64_t>(index % width);
    index /= width;
  }
  return e;
}

void run_range(const Compiled& c, const SearchBox& box, const CycProduct& delta, std::size_t max_hits,
               std::uint64_t begin, std::uint64_t end, Partial& p) {
  Evaluator ev(c);
  std::unordered_map<std::int64_t, bool> eigen;
  auto is_eigen = [&](const Rat& s0) {
    const std::int64_t d = s0.den().get_si();
    auto it = eigen.find(d);
    if (it == eigen.end()) it = eigen.emplace(d, delta.root_multiplicity(d) > 0).first;
    return it->second;
  };
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const auto exps = exponents_at(box, idx);
    const FormPoles fp = ev.eval(exps);
    ++p.forms;
    if (!fp.admissible) {
      ++p.inadmissible;
      continue;
    }
    auto& cls = p.classes[fp.doubles];
    if (cls.first++ == 0) cls.second = idx;

    bool qualifies = false;
    if (box.target) {
      qualifies = std::all_of(box.target->begin(), box.target->end(), [&](const Rat& s) {
        return std::binary_search(fp.doubles.begin(), fp.doubles.end(), s);
      });
    } else {
      qualifies = !fp.doubles.empty();
    }
    if (qualifies) {
      ++p.target_matches;
      if (p.hits.size() < max_hits) p.hits.push_back(idx);
    }

    bool all_eigen = true;
    for (const auto* list : {&fp.doubles, &fp.simples}) {
      for (const auto& s0 : *list) {
        p.pole_orders.insert(s0.den().get_si());
        all_eigen = all_eigen && is_eigen(s0);
      }
    }
    if (!all_eigen) {
      ++p.non_eigen;
      if (p.non_eigen_idx.size() < max_hits) p.non_eigen_idx.push_back(idx);
    }

    const Rat root_pole(-ev.nu(c.root), c.N[c.root]);
    if (std::binary_search(fp.doubles.begin(), fp.doubles.end(), root_pole)) {
      ++p.root_double;
      if (fp.doubles.size() >= 2) ++p.root_double_second;
    }
  }
}

bool same_poles(const ZetaReport& r, const std::vector<Rat>& doubles, const std::vector<Rat>& simples) {
  std::vector<Rat> d;
  std::vector<Rat> s;
  for (const auto& p : r.poles) (p.order >= 2 ? d : s).push_back(p.location);
  return d == doubles && s == simples;
}

}  // namespace

std::uint64_t SearchBox::size() const {
  std::uint64_t n = 1;
  for (const auto& id : curves) {
    const auto& r = bounds.at(id);
    const auto width = static_cast<std::uint64_t>(r.hi - r.lo + 1);
    if (n > (std::uint64_t{1} << 62) / width) return std::uint64_t{1} << 62;
    n *= width;
  }
  return n;
}

FormSpec SearchBox::form_at(std::uint64_t index) const {
  FormSpec w;
  const auto e = exponents_at(*this, index);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (e[i] != 0) w.exponents[curves[i]] = e[i];
  }
  return w;
}

SearchBox parse_bounds(std::string_view spec, const MultTable& t) {
  SearchBox box;
  const std::string s = trim(spec);
  if (s.empty() || s == "none") return box;
  if (s == "default") {
    for (const auto& [id, cm] : t.curves) {
      box.curves.push_back(id);
      box.bounds[id] = {0, kDefaultBound};
    }
    return box;
  }
  for (const auto& item : split(s, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) {
      throw ValidationError("bad-bounds", "bound '" + item + "' needs the form curve:max or curve:lo..hi");
    }
    const std::string id = trim(std::string_view(item).substr(0, colon));
    const std::string range = trim(std::string_view(item).substr(colon + 1));
    ExponentRange r;
    const auto dots = range.find("..");
    if (dots == std::string::npos) {
      r.hi = parse_exponent(range, item);
    } else {
      r.lo = parse_exponent(trim(std::string_view(range).substr(0, dots)), item);
      r.hi = parse_exponent(trim(std::string_view(range).substr(dots + 2)), item);
    }
    if (r.lo > r.hi) throw ValidationError("bad-bounds", "empty range in '" + item + "'");
    if (t.curves.find(id) == t.curves.end()) {
      throw ValidationError("missing-curve", "curve '" + id + "' missing from the multiplicity table");
    }
    if (box.bounds.count(id) != 0) throw ValidationError("bad-bounds", "curve '" + id + "' bounded twice");
    box.curves.push_back(id);
    box.bounds[id] = r;
  }
  return box;
}

std::set<Rat> parse_targets(std::string_view spec) {
  std::set<Rat> out;
  if (trim(spec).empty()) return out;
  for (const auto& item : split(spec, ',')) {
    try {
      out.insert(Rat::parse(item));
    } catch (const Error&) {
      throw ValidationError("bad-target", "target '" + item + "' is not a rational number");
    }
  }
  return out;
}

std::string Certificate::str() const {
  std::ostringstream os;
  os << edge << " [" << side << "]: gcd(" << N_a << "," << N_b << ") = " << gcd << ", denominators {";
  for (std::size_t i = 0; i < admissible_denominators.size(); ++i) {
    os << (i ? "," : "") << admissible_denominators[i];
  }
  os << "}";
  return os.str();
}

std::vector<Certificate> gcd_certificates(const ResGraph& g, const std::optional<std::string>& root) {
  const std::string r = root_of(g, root);
  const auto side = sides(g, r);
  std::vector<Certificate> out;
  for (const auto& e : double_pole_candidates(g)) {
    Certificate c;
    c.edge = e.edge;
    c.side = (e.a == r || e.b == r) ? "root" : side.at(e.a);
    c.N_a = e.N_a;
    c.N_b = e.N_b;
    c.gcd = e.gcd;
    c.admissible_denominators = e.admissible_denominators;
    out.push_back(std::move(c));
  }
  return out;
}

SearchResult sweep(const ResGraph& g, const MultTable& t, const SearchBox& box, const SweepOptions& opt) {
  const std::uint64_t total = box.size();
  if (total > opt.max_forms) {
    throw ValidationError("search-too-large", "box holds " + std::to_string(total) + " forms, cap is " +
                                                  std::to_string(opt.max_forms));
  }
  const std::string root = root_of(g, opt.root);
  const Compiled c = compile(g, t, box, root);
  const CycProduct delta = char_poly(g);

  const auto jobs = static_cast<std::uint64_t>(std::max(1, opt.jobs));
  const std::uint64_t chunks = std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1));
  std::vector<Partial> parts(chunks);
  auto bound = [&](std::uint64_t i) { return total * i / chunks; };
  if (chunks == 1) {
    run_range(c, box, delta, opt.max_hits, 0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    for (std::uint64_t i = 0; i < chunks; ++i) {
      pool.emplace_back([&, i] {
        try {
          run_range(c, box, delta, opt.max_hits, bound(i), bound(i + 1), parts[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  Partial all;
  for (auto& p : parts) {
    all.forms += p.forms;
    all.inadmissible += p.inadmissible;
    all.target_matches += p.target_matches;
    all.hits.insert(all.hits.end(), p.hits.begin(), p.hits.end());
    for (const auto& [k, v] : p.classes) {
      auto [it, fresh] = all.classes.emplace(k, v);
      if (!fresh) {
        it->second.first += v.first;
        it->second.second = std::min(it->second.second, v.second);
      }
    }
    all.non_eigen += p.non_eigen;
    all.non_eigen_idx.insert(all.non_eigen_idx.end(), p.non_eigen_idx.begin(), p.non_eigen_idx.end());
    all.pole_orders.insert(p.pole_orders.begin(), p.pole_orders.end());
    all.root_double += p.root_double;
    all.root_double_second += p.root_double_second;
  }
  std::sort(all.hits.begin(), all.hits.end());
  if (all.hits.size() > opt.max_hits) all.hits.resize(opt.max_hits);
  std::sort(all.non_eigen_idx.begin(), all.non_eigen_idx.end());
  if (all.non_eigen_idx.size() > opt.max_hits) all.non_eigen_idx.resize(opt.max_hits);

  SearchResult out;
  out.forms = all.forms;
  out.inadmissible = all.inadmissible;
  out.target_matches = all.target_matches;
  out.non_eigenvalue_count = all.non_eigen;
  out.pole_orders = std::move(all.pole_orders);
  out.root_double_forms = all.root_double;
  out.root_double_with_second = all.root_double_second;
  for (const auto& [poles, cf] : all.classes) {
    out.classes.push_back({poles, cf.first, cf.second, box.form_at(cf.second)});
  }
  for (const auto idx : all.non_eigen_idx) out.non_eigenvalue_forms.push_back(box.form_at(idx));

  Evaluator ev(c);
  for (const auto idx : all.hits) {
    Hit h;
    h.index = idx;
    h.form = box.form_at(idx);
    h.report = zeta_ordinary(decorate(g, t, h.form));
    const FormPoles fp = ev.eval(exponents_at(box, idx));
    if (!same_poles(h.report, fp.doubles, fp.simples)) {
      throw InconsistencyError("sweep-recheck", "pole orders of form " + serialize_formspec(h.form) +
                                                    " disagree between the sweep and zeta_ordinary");
    }
    out.hits.push_back(std::move(h));
  }
  out.certificates = gcd_certificates(g, root);
  return out;
}

RemarkReport verify_remark(const ResGraph& g, const MultTable& t, const SearchBox& box, const SweepOptions& opt) {
  SearchBox b = box;
  b.target = std::set<Rat>{Rat(-2, 3), Rat(-3, 2)};
  SweepOptions o = opt;
  o.max_hits = 1;
  const SearchResult r = sweep(g, t, b, o);
  RemarkReport rep;
  rep.forms = r.forms;
  rep.both_targets = r.target_matches;
  if (!r.hits.empty()) rep.both_example = r.hits.front().form;
  rep.root_double_forms = r.root_double_forms;
  rep.root_double_with_second = r.root_double_with_second;
  rep.certificates = r.certificates;
  std::map<std::string, bool> side_excludes;
  for (const auto& c : rep.certificates) {
    if (c.side == "root") continue;
    auto [it, fresh] = side_excludes.emplace(c.side, true);
    it->second = it->second && c.excludes(3);
  }
  for (const auto& [side, ex] : side_excludes) {
    if (ex) rep.sides_excluding_3.push_back(side);
  }
  rep.no_pair = rep.both_targets == 0;
  rep.certificate_holds = !rep.sides_excluding_3.empty();
  rep.root_isolated = rep.root_double_with_second == 0;
  return rep;
}

CoverageReport eigenvalue_coverage(const ResGraph& g, const MultTable& t, const SearchBox& box,
                                   const SweepOptions& opt) {
  SearchBox b = box;
  b.target.reset();
  SweepOptions o = opt;
  o.max_hits = 0;
  const SearchResult r = sweep(g, t, b, o);
  const CycProduct delta = char_poly(g);
  CoverageReport rep;
  for (const auto& [m, e] : delta.factors()) {
    for (std::int64_t d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      const std::int64_t k = delta.root_multiplicity(d);
      if (k > 0) rep.eigen_orders[d] = k;
    }
  }
  for (const auto& [d, k] : rep.eigen_orders) {
    (r.pole_orders.count(d) != 0 ? rep.covered : rep.uncovered).insert(d);
  }
  for (const auto d : r.pole_orders) {
    if (rep.eigen_orders.count(d) == 0) rep.non_eigen_pole_orders.insert(d);
  }
  return rep;
}

namespace {

std::string join_rats(const std::vector<Rat>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

template <typename C>
std::string join_ints(const C& v) {
  std::string s = "{";
  bool first = true;
  for (const auto& x : v) {
    s += (first ? "" : ", ") + std::to_string(x);
    first = false;
  }
  return s + "}";
}

std::string form_str(const FormSpec& w) {
  if (w.is_standard()) return "dxdy";
  std::string s;
  for (const auto& [g, c] : w.exponents) {
    if (c == 0) continue;
    s += "(" + g + ")";
    if (c > 1) s += "^" + std::to_string(c);
    s += " ";
  }
  return s + "dxdy";
}

detail::json certs_json(const std::vector<Certificate>& cs) {
  auto arr = detail::json::array();
  for (const auto& c : cs) {
    arr.push_back({{"edge", c.edge},
                   {"side", c.side},
                   {"N", {c.N_a, c.N_b}},
                   {"gcd", c.gcd},
                   {"denominators", c.admissible_denominators}});
  }
  return arr;
}

detail::json rats_json(const std::vector<Rat>& v) {
  auto arr = detail::json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

}  // namespace

std::string render_text(const SearchResult& r) {
  std::ostringstream os;
  os << "forms enumerated: " << r.forms << " (inadmissible " << r.inadmissible << ")\n";
  os << "matching forms:   " << r.target_matches << '\n';
  os << "double-pole sets:\n";
  for (const auto& c : r.classes) {
    os << "  " << join_rats(c.poles) << "  x" << c.count << "  e.g. " << form_str(c.first) << '\n';
  }
  os << "forms with a pole that is not an eigenvalue: " << r.non_eigenvalue_count << '\n';
  for (const auto& w : r.non_eigenvalue_forms) os << "  " << form_str(w) << '\n';
  os << "root-witnessed double poles: " << r.root_double_forms << " (with a second double pole: "
     << r.root_double_with_second << ")\n";
  os << "hits:\n";
  for (const auto& h : r.hits) {
    os << "  #" << h.index << "  " << form_str(h.form) << "  double poles "
       << join_rats(h.report.poles_of_order(2)) << '\n';
  }
  os << "gcd certificates:\n";
  for (const auto& c : r.certificates) os << "  " << c.str() << '\n';
  return os.str();
}

std::string render_json(const SearchResult& r) {
  detail::json doc;
  doc["forms"] = r.forms;
  doc["inadmissible"] = r.inadmissible;
  doc["matching"] = r.target_matches;
  auto classes = detail::json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"double_poles", rats_json(c.poles)},
                       {"count", c.count},
                       {"first_index", c.first_index},
                       {"first", detail::json::parse(serialize_formspec(c.first))}});
  }
  doc["classes"] = std::move(classes);
  doc["non_eigenvalue_count"] = r.non_eigenvalue_count;
  auto ne = detail::json::array();
  for (const auto& w : r.non_eigenvalue_forms) ne.push_back(detail::json::parse(serialize_formspec(w)));
  doc["non_eigenvalue_forms"] = std::move(ne);
  doc["pole_orders"] = r.pole_orders;
  doc["root_double_forms"] = r.root_double_forms;
  doc["root_double_with_second"] = r.root_double_with_second;
  auto hits = detail::json::array();
  for (const auto& h : r.hits) {
    hits.push_back({{"index", h.index},
                    {"form", detail::json::parse(serialize_formspec(h.form))},
                    {"zeta", detail::json::parse(render_json(h.report))}});
  }
  doc["hits"] = std::move(hits);
  doc["certificates"] = certs_json(r.certificates);
  return doc.dump(2) + "\n";
}

std::string render_text(const RemarkReport& r) {
  std::ostringstream os;
  os << "forms enumerated: " << r.forms << '\n';
  os << "(a) forms with -2/3 and -3/2 both double: " << r.both_targets << (r.no_pair ? "  [holds in box]" : "  [fails]")
     << '\n';
  if (r.both_example) os << "    e.g. " << form_str(*r.both_example) << '\n';
  os << "(b) sides excluding denominator 3 on every edge: " << (r.sides_excluding_3.empty() ? "none" : "");
  for (std::size_t i = 0; i < r.sides_excluding_3.size(); ++i) os << (i ? ", " : "") << r.sides_excluding_3[i];
  os << (r.certificate_holds ? "  [structural]" : "  [fails]") << '\n';
  for (const auto& c : r.certificates) os << "    " << c.str() << '\n';
  os << "(c) root-witnessed double poles: " << r.root_double_forms << ", with a second double pole: "
     << r.root_double_with_second << (r.root_isolated ? "  [holds in box]" : "  [fails]") << '\n';
  return os.str();
}

std::string render_json(const RemarkReport& r) {
  detail::json doc;
  doc["forms"] = r.forms;
  doc["a"] = {{"holds", r.no_pair}, {"strength", "bounded-search"}, {"forms_with_both", r.both_targets}};
  if (r.both_example) doc["a"]["example"] = detail::json::parse(serialize_formspec(*r.both_example));
  doc["b"] = {{"holds", r.certificate_holds}, {"strength", "structural"}, {"sides_excluding_3", r.sides_excluding_3}};
  doc["c"] = {{"holds", r.root_isolated},
              {"strength", "bounded-search"},
              {"root_double_forms", r.root_double_forms},
              {"with_second", r.root_double_with_second}};
  doc["certificates"] = certs_json(r.certificates);
  return doc.dump(2) + "\n";
}

std::string render_text(const CoverageReport& r) {
  std::ostringstream os;
  os << "eigenvalue orders (d: multiplicity):";
  for (const auto& [d, k] : r.eigen_orders) os << ' ' << d << ':' << k;
  os << "\ncovered by poles:   " << join_ints(r.covered) << '\n';
  os << "not covered:        " << join_ints(r.uncovered) << '\n';
  os << "pole orders that are no eigenvalue: " << join_ints(r.non_eigen_pole_orders) << '\n';
  return os.str();
}

std::string render_json(const CoverageReport& r) {
  detail::json doc;
  auto eo = detail::json::object();
  for (const auto& [d, k] : r.eigen_orders) eo[std::to_string(d)] = k;
  doc["eigen_orders"] = std::move(eo);
  doc["covered"] = r.covered;
  doc["uncovered"] = r.uncovered;
  doc["non_eigen_pole_orders"] = r.non_eigen_pole_orders;
  return doc.dump(2) + "\n";
}

}  // namespace zetatop
