#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetatop/calculus.hpp"
#include "zetatop/error.hpp"
#include "zetatop/explore.hpp"
#include "zetatop/family.hpp"
#include "zetatop/fixtures.hpp"
#include "zetatop/monodromy.hpp"
#include "zetatop/resolve.hpp"
#include "zetatop/verify.hpp"
#include "zetatop/zeta.hpp"

namespace zetatop::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::string format = "text";
  int jobs = 1;
  int budget = 64;
  bool json() const { return format == "json"; }
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ValidationError("io-error", "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("io-error", "cannot write " + path);
  out << text;
}

// A path to an existing file, or otherwise the id of an embedded fixture.
bool is_file(const std::string& spec) { return std::filesystem::is_regular_file(spec); }

std::string load_text(const std::string& spec) {
  if (is_file(spec)) return read_file(spec);
  return FixtureCatalog::embedded().text(spec);
}

struct GpqArgs {
  std::optional<std::int64_t> p, q, a;
};

ResGraph load_graph(const std::string& spec, const GpqArgs& gp = {}) {
  if (!is_file(spec) && spec == "gpq_fig5") {
    const auto& cat = FixtureCatalog::embedded();
    GpqParams params{2, 3, 1};
    if (gp.p) params.p = *gp.p;
    if (gp.q) params.q = *gp.q;
    if (gp.a) params.a = *gp.a;
    return cat.gpq_graph(params);
  }
  if (!is_file(spec)) return FixtureCatalog::embedded().graph(spec);
  return parse_graph(read_file(spec));
}

FormSpec parse_exponent_list(const std::string& text) {
  FormSpec w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) throw ValidationError("bad-form", "exponent '" + item + "' needs curve:power");
    try {
      w.exponents[item.substr(0, colon)] = std::stoll(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw ValidationError("bad-form", "bad exponent in '" + item + "'");
    }
  }
  return w;
}

json graph_json(const ResGraph& g) { return json::parse(serialize_graph(g)); }

// --- subcommands -----------------------------------------------------------

void cmd_zeta(const Globals& gl, const std::string& spec, const std::string& engine, const GpqArgs& gp,
              std::ostream& out) {
  const ResGraph g = load_graph(spec, gp);
  bool use_q = engine == "q";
  if (engine == "auto") use_q = !g.is_ordinary();
  const ZetaReport r = use_q ? zeta_q(g) : zeta_ordinary(g);
  if (gl.json()) {
    json doc = json::parse(render_json(r));
    doc["graph"] = g.label();
    doc["engine"] = use_q ? "q" : "ordinary";
    out << doc.dump(2) << '\n';
  } else {
    out << "graph: " << g.label() << " (" << (use_q ? "Q-resolution" : "ordinary") << " formula)\n";
    out << render_text(r);
  }
}

void cmd_resolve(const Globals& gl, const std::string& curves, const std::string& out_graph,
                 const std::string& out_table, bool aux_defaults, std::optional<std::uint64_t> seed,
                 std::ostream& out) {
  CurveInput c = parse_curve_input(load_text(curves));
  if (aux_defaults) c.add_default_auxiliaries();
  ResolveOptions opt;
  opt.budget = gl.budget;
  opt.shuffle_seed = seed;
  const Resolution r = resolve(c, opt);
  if (!out_graph.empty()) write_file(out_graph, serialize_graph(r.graph));
  if (!out_table.empty()) write_file(out_table, serialize_multtable(r.table));
  if (gl.json()) {
    json doc;
    doc["blowups"] = r.blowups;
    doc["milnor"] = r.milnor;
    doc["graph"] = graph_json(r.graph);
    doc["multtable"] = json::parse(serialize_multtable(r.table));
    out << doc.dump(2) << '\n';
  } else {
    out << "blowups: " << r.blowups << "\nmilnor number: " << r.milnor << '\n';
    out << adjacency_dump(r.graph);
    for (const auto& [id, cm] : r.table.curves) {
      out << "curve " << id << " meets";
      for (const auto& a : cm.attachment) out << ' ' << a.vertex;
      out << '\n';
    }
  }
}

void cmd_decorate(const Globals& gl, const std::string& graph, const std::string& table, const std::string& form,
                  const std::string& exps, const std::string& out_graph, std::ostream& out) {
  const ResGraph g = load_graph(graph);
  const MultTable t = complete_multtable(g, parse_multtable(load_text(table)));
  FormSpec w;
  if (!form.empty()) w = parse_formspec(load_text(form));
  if (!exps.empty()) {
    for (const auto& [k, v] : parse_exponent_list(exps).exponents) w.exponents[k] = v;
  }
  const ResGraph d = decorate(g, t, w);
  if (!out_graph.empty()) write_file(out_graph, serialize_graph(d));
  if (gl.json()) {
    out << serialize_graph(d);
  } else {
    out << adjacency_dump(d);
  }
}

void cmd_monodromy(const Globals& gl, const std::string& spec, const std::vector<std::string>& eigen,
                   std::ostream& out) {
  const ResGraph g = load_graph(spec);
  const CycProduct d = char_poly(g);
  const std::int64_t mu = milnor(g);
  std::vector<std::pair<Rat, EigenvalueQuery>> queries;
  for (const auto& s : eigen) {
    const Rat s0 = Rat::parse(s);
    queries.emplace_back(s0, is_eigenvalue(d, s0));
  }
  if (gl.json()) {
    json doc;
    doc["graph"] = g.label();
    json f = json::object();
    for (const auto& [m, e] : d.factors()) f[std::to_string(m)] = e;
    doc["factors"] = std::move(f);
    doc["char_poly"] = d.str();
    doc["milnor"] = mu;
    json q = json::array();
    for (const auto& [s0, r] : queries) {
      q.push_back({{"s0", s0.str()}, {"eigenvalue", r.is_eigenvalue}, {"order", r.order}, {"multiplicity", r.multiplicity}});
    }
    doc["queries"] = std::move(q);
    out << doc.dump(2) << '\n';
  } else {
    out << "graph: " << g.label() << "\ncharacteristic polynomial: " << d.str() << "\nmilnor number: " << mu << '\n';
    for (const auto& [s0, r] : queries) {
      out << "exp(2 pi i (" << s0 << ")): order " << r.order << ", multiplicity " << r.multiplicity
          << (r.is_eigenvalue ? "" : " (not an eigenvalue)") << '\n';
    }
  }
}

void cmd_gpq(const Globals& gl, const GpqParams& p, const std::string& engine, bool compare, std::ostream& out) {
  require_valid(p);
  ResolveOptions ro;
  ro.budget = gl.budget;
  struct Row {
    std::string engine;
    std::optional<RatFunc> value;
    std::string note;
  };
  auto compute = [&](const std::string& e) -> Row {
    Row r{e, std::nullopt, ""};
    try {
      if (e == "q") r.value = zeta_q(FixtureCatalog::embedded().gpq_graph(p)).value;
      if (e == "full") r.value = gpq_full_resolution(p, ro).value;
      if (e == "printed") r.value = gpq_printed_closed_form(p);
      if (e == "derived") r.value = gpq_derived_closed_form(p);
    } catch (const ComputationError& ex) {
      if (!compare) throw;
      r.note = ex.what();
    }
    return r;
  };
  std::vector<Row> rows;
  if (compare) {
    for (const char* e : {"q", "full", "derived", "printed"}) rows.push_back(compute(e));
  } else {
    rows.push_back(compute(engine));
  }
  const auto& ref = rows.front().value;
  if (gl.json()) {
    json doc;
    doc["params"] = {{"p", p.p}, {"q", p.q}, {"a", p.a}};
    json arr = json::array();
    for (const auto& r : rows) {
      json x{{"engine", r.engine}};
      if (r.value) {
        x["value"] = r.value->str();
        x["at_0"] = r.value->evaluate(Rat(0)).str();
        x["pole_order_at_-a/p"] = r.value->pole_order(Rat(-p.a, p.p));
        if (compare) x["equals_q"] = ref.has_value() && *r.value == *ref;
      } else {
        x["undefined"] = r.note;
      }
      arr.push_back(std::move(x));
    }
    doc["results"] = std::move(arr);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "g_{p,q} with " << p.str() << '\n';
  for (const auto& r : rows) {
    out << "  " << r.engine << ": ";
    if (!r.value) {
      out << "undefined (" << r.note << ")\n";
      continue;
    }
    out << r.value->str() << "\n    Z(0) = " << r.value->evaluate(Rat(0)) << ", order of pole at "
        << Rat(-p.a, p.p) << " = " << r.value->pole_order(Rat(-p.a, p.p));
    if (compare) out << (ref && *r.value == *ref ? ", equal to q" : ", DIFFERS from q");
    out << '\n';
  }
}

void cmd_explore(const Globals& gl, const std::string& graph, const std::string& table, const std::string& bounds,
                 const std::string& target, bool remark, bool coverage, std::size_t max_hits, const std::string& root,
                 std::ostream& out) {
  const ResGraph g = load_graph(graph);
  const MultTable t = complete_multtable(g, parse_multtable(load_text(table)));
  SearchBox box = parse_bounds(bounds, t);
  if (!target.empty()) box.target = parse_targets(target);
  SweepOptions opt;
  opt.jobs = gl.jobs;
  opt.max_hits = max_hits;
  if (!root.empty()) opt.root = root;
  if (!gl.json()) out << "search space: " << box.size() << " forms\n";
  if (remark) {
    const auto r = verify_remark(g, t, box, opt);
    out << (gl.json() ? render_json(r) : render_text(r));
    return;
  }
  if (coverage) {
    const auto r = eigenvalue_coverage(g, t, box, opt);
    out << (gl.json() ? render_json(r) : render_text(r));
    return;
  }
  const auto r = sweep(g, t, box, opt);
  out << (gl.json() ? render_json(r) : render_text(r));
}

int cmd_verify(const Globals& gl, const std::string& only, const std::string& dir, const std::string& bounds,
               std::ostream& out) {
  VerifyOptions opt;
  if (!only.empty()) opt.only = only;
  opt.jobs = gl.jobs;
  opt.budget = gl.budget;
  opt.bounds = bounds;
  const FixtureCatalog cat = dir.empty() ? FixtureCatalog::embedded() : FixtureCatalog::from_directory(dir);
  const VerifyReport r = run_verify(cat, opt);
  out << (gl.json() ? render_json(r) : render_text(r));
  return r.ok() ? 0 : 1;
}

void cmd_fixtures_list(const Globals& gl, std::ostream& out) {
  const auto list = FixtureCatalog::embedded().list();
  if (gl.json()) {
    json arr = json::array();
    for (const auto& f : list) arr.push_back({{"id", f.id}, {"kind", f.kind}, {"description", f.description}});
    out << arr.dump(2) << '\n';
    return;
  }
  for (const auto& f : list) out << f.id << "  [" << f.kind << "]  " << f.description << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological zeta functions, resolutions and monodromy of plane curve germs", "zetatop"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", gl.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--budget", gl.budget, "Maximum number of blowups")->check(CLI::PositiveNumber);

  std::string graph;
  std::string engine = "auto";
  GpqArgs gp;
  auto* zeta = app.add_subcommand("zeta", "Topological zeta function of a graph file or fixture");
  zeta->add_option("graph", graph, "Graph file or fixture id")->required();
  zeta->add_option("--engine", engine, "Stratum formula")->check(CLI::IsMember({"auto", "ordinary", "q"}));
  zeta->add_option("--p", gp.p, "Template parameter p (gpq_fig5)");
  zeta->add_option("--q", gp.q, "Template parameter q (gpq_fig5)");
  zeta->add_option("--a", gp.a, "Template parameter a (gpq_fig5)");

  std::string curves;
  std::string out_graph;
  std::string out_table;
  bool aux_defaults = false;
  std::optional<std::uint64_t> seed;
  auto* res = app.add_subcommand("resolve", "Embedded resolution of a curve file or fixture");
  res->add_option("--curves", curves, "Curve file or fixture id")->required();
  res->add_option("--out", out_graph, "Write the resolution graph here");
  res->add_option("--multtable-out", out_table, "Write the multiplicity table here");
  res->add_flag("--aux-defaults", aux_defaults, "Track x and y as auxiliary curves");
  res->add_option("--seed", seed, "Process centers in a shuffled order");

  std::string table;
  std::string form;
  std::string exps;
  auto* dec = app.add_subcommand("decorate", "Decorate a graph with a monomial form");
  dec->add_option("--graph", graph, "Graph file or fixture id")->required();
  dec->add_option("--multtable", table, "Multiplicity table file or fixture id")->required();
  dec->add_option("--form", form, "Form file or fixture id");
  dec->add_option("--exponents", exps, "Exponents as curve:power,...");
  dec->add_option("--out", out_graph, "Write the decorated graph here");

  std::vector<std::string> eigen;
  auto* mono = app.add_subcommand("monodromy", "Characteristic polynomial and Milnor number");
  mono->add_option("graph", graph, "Graph file or fixture id")->required();
  mono->add_option("--eigen", eigen, "Query exp(2 pi i s0) for these s0")->delimiter(',');

  GpqParams params;
  std::string gpq_engine = "q";
  bool compare = false;
  auto* gpq = app.add_subcommand("gpq", "Zeta function of (y^p+x^q)(y^q+x^p) with (xy)^(a-1) dxdy");
  gpq->add_option("--p", params.p, "p")->required();
  gpq->add_option("--q", params.q, "q")->required();
  gpq->add_option("--a", params.a, "a")->required();
  gpq->add_option("--engine", gpq_engine, "Which value to print")
      ->check(CLI::IsMember({"q", "full", "printed", "derived"}));
  gpq->add_flag("--compare", compare, "Print all four values and compare them");

  std::string bounds = "default";
  std::string target;
  bool remark = false;
  bool coverage = false;
  std::size_t max_hits = 20;
  std::string root;
  auto* exp = app.add_subcommand("explore", "Sweep monomial forms for double poles");
  exp->add_option("--graph", graph, "Graph file or fixture id")->required();
  exp->add_option("--multtable", table, "Multiplicity table file or fixture id")->required();
  exp->add_option("--bounds", bounds, "curve:max or curve:lo..hi list, 'default' or 'none'");
  exp->add_option("--target", target, "Double poles every hit must have, e.g. -2/3,-3/2");
  exp->add_flag("--remark", remark, "Check the three double-pole exclusion statements");
  exp->add_flag("--coverage", coverage, "Compare pole orders with monodromy eigenvalues");
  exp->add_option("--max-hits", max_hits, "Hits to recompute and print");
  exp->add_option("--root", root, "Root vertex for certificates");

  std::string only;
  std::string dir;
  std::string verify_bounds;
  auto* ver = app.add_subcommand("verify", "Replay all reference computations");
  ver->add_option("--only", only, "Run one group")->check(CLI::IsMember(verify_groups()));
  ver->add_option("--fixtures", dir, "Read fixtures from this directory instead");
  ver->add_option("--bounds", verify_bounds, "Exploration bounds");

  std::string fixture_id;
  auto* fix = app.add_subcommand("fixtures", "Embedded fixtures");
  fix->require_subcommand(1);
  auto* fix_list = fix->add_subcommand("list", "List fixtures");
  auto* fix_dump = fix->add_subcommand("dump", "Print one fixture");
  fix_dump->add_option("id", fixture_id, "Fixture id")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ErrorKind::validation);
  }

  try {
    if (*zeta) cmd_zeta(gl, graph, engine, gp, out);
    if (*res) cmd_resolve(gl, curves, out_graph, out_table, aux_defaults, seed, out);
    if (*dec) cmd_decorate(gl, graph, table, form, exps, out_graph, out);
    if (*mono) cmd_monodromy(gl, graph, eigen, out);
    if (*gpq) cmd_gpq(gl, params, gpq_engine, compare, out);
    if (*exp) cmd_explore(gl, graph, table, bounds, target, remark, coverage, max_hits, root, out);
    if (*ver) return cmd_verify(gl, only, dir, verify_bounds, out);
    if (*fix_list) cmd_fixtures_list(gl, out);
    if (*fix_dump) out << FixtureCatalog::embedded().text(fixture_id);
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::inconsistency);
  }
  return 0;
}

}  // namespace zetatop::cli
