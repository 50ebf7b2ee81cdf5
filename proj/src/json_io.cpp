#include "qcover/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace qcover {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ShapeError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int element_index(const FiniteRack& X, const json& j, const std::string& what) {
  if (j.is_number_integer()) {
    int v = j.get<int>();
    if (v < 0 || v >= X.order()) throw ShapeError(what + " index out of range");
    return v;
  }
  if (j.is_string()) {
    int v = X.index_of(j.get<std::string>());
    if (v < 0) throw ShapeError("unknown " + what + " '" + j.get<std::string>() + "'");
    return v;
  }
  throw ShapeError(what + " must be an index or a label");
}

}  // namespace

RackPtr rack_from_json(const json& j, const std::string& fallback_name, bool row_acts) {
  if (!j.is_object() || !j.contains("table")) throw ShapeError("rack JSON needs a 'table'");
  std::string name = j.value("name", fallback_name);
  std::vector<std::string> labels;
  if (j.contains("elements")) labels = j["elements"].get<std::vector<std::string>>();
  auto table = j["table"].get<std::vector<std::vector<int>>>();
  if (row_acts) {
    const std::size_t n = table.size();
    for (const auto& row : table)
      if (row.size() != n) throw ShapeError("table is not square");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) t[x][y] = table[y][x];
    table = std::move(t);
  }
  return make_rack(FiniteRack::validate(std::move(name), std::move(labels), table));
}

RackPtr load_rack_file(const std::string& path, bool row_acts) {
  if (path.rfind("tn:", 0) == 0) {
    int n = std::stoi(path.substr(3));
    if (n <= 0) throw ShapeError("tn:N needs N >= 1");
    return trivial_rack(n);
  }
  return rack_from_json(read_json_file(path), stem_of(path), row_acts);
}

json rack_to_json(const FiniteRack& X) {
  json j;
  j["name"] = X.name();
  j["elements"] = X.labels();
  std::vector<std::vector<int>> table(X.order(), std::vector<int>(X.order()));
  for (int x = 0; x < X.order(); ++x)
    for (int y = 0; y < X.order(); ++y) table[x][y] = X.fwd(x, y);
  j["table"] = table;
  return j;
}

namespace {

RackPtr rack_from_ref(const json& j, const std::filesystem::path& base, const std::string& what,
                      bool row_acts) {
  if (j.is_string()) {
    std::string ref = j.get<std::string>();
    if (ref.rfind("tn:", 0) == 0) return load_rack_file(ref);
    std::filesystem::path p(ref);
    if (p.is_relative()) p = base / p;
    return load_rack_file(p.string(), row_acts);
  }
  return rack_from_json(j, what, row_acts);
}

}  // namespace

RackHom load_hom_file(const std::string& path, bool row_acts) {
  json j = read_json_file(path);
  if (!j.contains("dom") || !j.contains("cod") || !j.contains("map"))
    throw ShapeError("hom JSON needs 'dom', 'cod' and 'map'");
  auto base = std::filesystem::path(path).parent_path();
  RackPtr dom = rack_from_ref(j["dom"], base, stem_of(path) + ".dom", row_acts);
  RackPtr cod = rack_from_ref(j["cod"], base, stem_of(path) + ".cod", row_acts);
  return check_hom(std::move(dom), std::move(cod), j["map"].get<std::vector<int>>());
}

RackPtr load_group_file_as_conj(const std::string& path) {
  json j = read_json_file(path);
  if (!j.contains("cayley")) throw ShapeError("group JSON needs a 'cayley' table");
  std::vector<std::string> labels;
  if (j.contains("elements")) labels = j["elements"].get<std::vector<std::string>>();
  return conj_of_group("conj_" + stem_of(path), std::move(labels),
                       j["cayley"].get<std::vector<std::vector<int>>>());
}

Horn load_horn_file(const std::string& path, bool row_acts) {
  json j = read_json_file(path);
  if (!j.contains("hom") || !j.contains("base") || !j.contains("steps"))
    throw ShapeError("horn JSON needs 'hom', 'base' and 'steps'");
  auto base_dir = std::filesystem::path(path).parent_path();
  std::string hom_ref = j["hom"].get<std::string>();
  std::filesystem::path p(hom_ref);
  if (p.is_relative()) p = base_dir / p;
  Horn h;
  h.hom = load_hom_file(p.string(), row_acts);
  h.base = element_index(*h.hom.dom, j["base"], "base");
  for (const json& s : j["steps"]) {
    if (!s.is_array() || s.size() != 3) throw ShapeError("each step is [a, b, delta]");
    h.steps.push_back({element_index(*h.hom.dom, s[0], "step"),
                       element_index(*h.hom.dom, s[1], "step"), s[2].get<int>()});
  }
  return h;
}

std::string classes_str(const FiniteRack& X, const Congruence& C) {
  std::string out;
  for (const auto& cls : C.classes()) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ",";
      out += X.label(cls[i]);
    }
    out += "}";
  }
  return out;
}

json congruence_classes_json(const FiniteRack& X, const Congruence& C) {
  json out = json::array();
  for (const auto& cls : C.classes()) {
    json block = json::array();
    for (int x : cls) block.push_back(X.label(x));
    out.push_back(block);
  }
  return out;
}

std::string dot_pi0(const FiniteRack& X, const Pi0Result& p) {
  std::string out = "graph pi0 {\n";
  auto classes = p.co.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out += "  subgraph cluster_" + std::to_string(c) + " {\n";
    out += "    label=\"[" + X.label(classes[c][0]) + "]\";\n";
    for (int x : classes[c]) out += "    \"" + X.label(x) + "\";\n";
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string dot_skeleton(const FiniteRack& X, const SkeletonReport& rep) {
  std::string out = "digraph skeleton {\n";
  for (std::size_t c = 0; c < rep.components.size(); ++c) {
    std::string node = "[" + X.label(rep.components[c][0]) + "]";
    out += "  \"" + node + "\" [label=\"" + node +
           " (loop order " + std::to_string(rep.loop_orders[c]) + ", Inn-truncated)\"];\n";
    for (const Perm& g : rep.loop_generators[c])
      out += "  \"" + node + "\" -> \"" + node + "\" [label=\"" + perm_cycles(g, X.labels()) +
             "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace qcover
