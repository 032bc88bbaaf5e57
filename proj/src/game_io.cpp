#include "bnpg/game_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bnpg/errors.hpp"

namespace bnpg {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string& msg) { throw ParseError(msg); }

int line_of_byte(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + end, '\n'));
}

}  // namespace

GameDocument game_from_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), line_of_byte(text, e.byte));
  }
  if (!j.is_object()) field_error("game document must be a JSON object");

  if (!j.contains("n") || !j["n"].is_number_integer())
    field_error("field 'n' must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1) field_error("field 'n' must be positive");

  if (!j.contains("edges") || !j["edges"].is_array())
    field_error("field 'edges' must be an array of pairs");
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      field_error("each edge must be a pair of integers");
    const int a = e[0].get<int>();
    const int b = e[1].get<int>();
    if (a < 1 || a > n || b < 1 || b > n)
      field_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                  ") out of range 1.." + std::to_string(n));
    // Self-loops and duplicates are kept here so validate() can report
    // them with player identity.
    adjacency[static_cast<std::size_t>(a - 1)].push_back(b - 1);
    if (a != b) adjacency[static_cast<std::size_t>(b - 1)].push_back(a - 1);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());

  if (!j.contains("costs") || !j["costs"].is_array() ||
      static_cast<int>(j["costs"].size()) != n)
    field_error("field 'costs' must be an array of n numbers");
  std::vector<double> costs;
  costs.reserve(static_cast<std::size_t>(n));
  for (const auto& c : j["costs"]) {
    if (!c.is_number()) field_error("costs must be numbers");
    costs.push_back(c.get<double>());
  }

  if (!j.contains("g") || !j["g"].is_array() || static_cast<int>(j["g"].size()) != n)
    field_error("field 'g' must be an array of n arrays");
  std::vector<ExternalityTable> tables(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& row = j["g"][static_cast<std::size_t>(i)];
    if (!row.is_array() || row.empty())
      field_error("g[" + std::to_string(i + 1) + "] must be a non-empty array");
    for (const auto& v : row) {
      if (!v.is_number())
        field_error("g[" + std::to_string(i + 1) + "] must contain numbers");
      tables[static_cast<std::size_t>(i)].values.push_back(v.get<double>());
    }
  }

  Homogeneity tag = Homogeneity::heterogeneous;
  if (j.contains("homogeneity")) {
    if (!j["homogeneity"].is_string()) field_error("field 'homogeneity' must be a string");
    const auto parsed = homogeneity_from_string(j["homogeneity"].get<std::string>());
    if (!parsed) field_error("unknown homogeneity tag '" +
                             j["homogeneity"].get<std::string>() + "'");
    tag = *parsed;
  }

  GameDocument doc{
      BnpgInstance(Graph::from_adjacency(std::move(adjacency)), std::move(costs),
                   std::move(tables), tag),
      j.contains("provenance") ? j["provenance"] : ordered_json(nullptr)};

  auto violations = validate(doc.instance);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return doc;
}

GameDocument load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open game file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return game_from_string(buf.str());
}

std::string game_to_string(const BnpgInstance& inst, const ordered_json& provenance) {
  ordered_json j;
  j["n"] = inst.n();
  auto edges = ordered_json::array();
  for (const auto& [a, b] : inst.graph().edges())
    edges.push_back({a + 1, b + 1});
  j["edges"] = std::move(edges);
  j["costs"] = inst.costs();
  auto g = ordered_json::array();
  for (int i = 0; i < inst.n(); ++i) g.push_back(inst.externality(i).values);
  j["g"] = std::move(g);
  j["homogeneity"] = to_string(inst.declared_homogeneity());
  if (!provenance.is_null()) j["provenance"] = provenance;
  return j.dump(2) + "\n";
}

void save_game(const BnpgInstance& inst, const std::string& path,
               const ordered_json& provenance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write game file: " + path);
  out << game_to_string(inst, provenance);
}

}  // namespace bnpg
