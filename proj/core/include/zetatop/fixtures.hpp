#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zetatop/calculus.hpp"
#include "zetatop/family.hpp"
#include "zetatop/graph.hpp"
#include "zetatop/resolve.hpp"

namespace zetatop {

struct FixtureInfo {
  std::string id;
  std::string kind;  // graph, graph-template, multtable, curves, form, expected
  std::string description;
};

// Named JSON documents shipped with the library. The embedded catalog is
// compiled in from core/fixtures; copies can be edited in memory or loaded
// from a directory to test how consumers react to altered data.
class FixtureCatalog {
 public:
  static const FixtureCatalog& embedded();
  // Every *.json file of the directory, keyed by stem.
  static FixtureCatalog from_directory(const std::filesystem::path& dir);

  std::vector<FixtureInfo> list() const;
  bool contains(std::string_view id) const;
  // Throws ValidationError "unknown-fixture".
  const std::string& text(std::string_view id) const;
  void set_text(const std::string& id, std::string text);

  ResGraph graph(std::string_view id) const;
  // Instantiates the parametric g_{p,q} template.
  ResGraph gpq_graph(const GpqParams& p) const;
  MultTable multtable(std::string_view id) const;
  CurveInput curves(std::string_view id) const;
  FormSpec form(std::string_view id) const;

 private:
  std::map<std::string, std::string, std::less<>> docs_;
};

}  // namespace zetatop
