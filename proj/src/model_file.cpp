#include "seriate/model_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace seriate {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void only_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ModelLoadError(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ModelLoadError(where + ": unknown field '" + it.key() + "'");
  }
}

std::vector<std::string> names_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw ModelLoadError(where + ": expected an array of point names");
  std::vector<std::string> out;
  for (const json& x : j) {
    if (!x.is_string()) throw ModelLoadError(where + ": point names are strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string id_of(const json& j, const std::string& where) {
  if (!j.contains("id") || !j["id"].is_string()) throw ModelLoadError(where + ": missing string field 'id'");
  return j["id"].get<std::string>();
}

const json& required(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ModelLoadError(where + ": missing field '" + key + "'");
  return j[key];
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string vertex_name(Coord v) { return "V^" + std::to_string(v.r * static_cast<int>(kLatticeStride) + v.c); }

std::string point_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "N^" + std::to_string(i);
}

ModelFile ModelFile::from_json(const json& j) {
  only_fields(j, {"points", "lines", "rings", "families", "areas"}, "model");
  ModelFile m;
  if (j.contains("points")) m.points = names_of(j["points"], "points");
  auto list = [&](const char* key) -> const json& {
    static const json empty = json::array();
    if (!j.contains(key)) return empty;
    if (!j[key].is_array()) throw ModelLoadError(std::string(key) + ": expected an array");
    return j[key];
  };
  for (const json& x : list("lines")) {
    only_fields(x, {"id", "seq"}, "line");
    std::string id = id_of(x, "line");
    m.lines.push_back({id, names_of(required(x, "seq", "line '" + id + "'"), "line '" + id + "'")});
  }
  for (const json& x : list("rings")) {
    only_fields(x, {"id", "cyc"}, "ring");
    std::string id = id_of(x, "ring");
    m.rings.push_back({id, names_of(required(x, "cyc", "ring '" + id + "'"), "ring '" + id + "'")});
  }
  for (const json& x : list("families")) {
    only_fields(x, {"id", "rows"}, "family");
    std::string id = id_of(x, "family");
    Family f{id, {}};
    const json& rows = required(x, "rows", "family '" + id + "'");
    if (!rows.is_array()) throw ModelLoadError("family '" + id + "': rows must be an array");
    for (const json& r : rows) f.rows.push_back(names_of(r, "family '" + id + "'"));
    m.families.push_back(std::move(f));
  }
  for (const json& x : list("areas")) {
    only_fields(x, {"id", "cells"}, "area");
    std::string id = id_of(x, "area");
    Area a{id, {}};
    const json& cells = required(x, "cells", "area '" + id + "'");
    if (!cells.is_array()) throw ModelLoadError("area '" + id + "': cells must be an array");
    for (const json& c : cells) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
        throw ModelLoadError("area '" + id + "': cells are [row, col] integer pairs");
      }
      a.cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    m.areas.push_back(std::move(a));
  }
  return m;
}

ordered_json ModelFile::to_json() const {
  ordered_json j;
  j["points"] = points;
  j["lines"] = ordered_json::array();
  for (const Seq& s : lines) j["lines"].push_back({{"id", s.id}, {"seq", s.pts}});
  j["rings"] = ordered_json::array();
  for (const Seq& s : rings) j["rings"].push_back({{"id", s.id}, {"cyc", s.pts}});
  j["families"] = ordered_json::array();
  for (const Family& f : families) j["families"].push_back({{"id", f.id}, {"rows", f.rows}});
  j["areas"] = ordered_json::array();
  for (const Area& a : areas) {
    ordered_json cells = ordered_json::array();
    for (Coord c : a.cells) cells.push_back({c.r, c.c});
    j["areas"].push_back({{"id", a.id}, {"cells", cells}});
  }
  return j;
}

LoadedModel load_model(const ModelFile& m) {
  LoadedModel out;
  std::uint32_t next = 0;
  auto declare = [&](const std::string& name) -> PointId {
    if (auto it = out.env.names.find(name); it != out.env.names.end()) return it->second;
    PointId id;
    if (name.size() > 2 && name.compare(0, 2, "V^") == 0 && name.find_first_not_of("0123456789", 2) == std::string::npos) {
      long k = std::stol(name.substr(2));
      id = vertex_id({static_cast<int>(k / kLatticeStride), static_cast<int>(k % kLatticeStride)});
    } else {
      id = PointId{next++};
    }
    out.env.names[name] = id;
    out.names[id] = name;
    out.universe = add_point(out.universe, id);
    return id;
  };
  std::set<std::string> declared;
  for (const std::string& n : m.points) {
    if (!declared.insert(n).second) throw ModelLoadError("points: duplicate point '" + n + "'");
    declare(n);
  }
  auto resolve = [&](const std::vector<std::string>& names, const std::string& where) {
    std::vector<PointId> ids;
    for (const std::string& n : names) {
      auto it = out.env.names.find(n);
      if (it == out.env.names.end()) throw ModelLoadError(where + ": unknown point '" + n + "'");
      ids.push_back(it->second);
    }
    return ids;
  };
  auto bind = [&](const std::string& id, std::vector<lang::Referent> refs, const std::string& where) {
    if (!out.env.vars.emplace(id, std::move(refs)).second) throw ModelLoadError(where + ": duplicate object id");
  };
  auto admit = [&](const ModelObject& obj, const std::string& where) {
    try {
      out.universe = assert_object(out.universe, obj);
    } catch (const Error& e) {
      throw ModelLoadError(where + ": " + e.what());
    }
  };
  auto points_refs = [](const std::vector<PointId>& ids) {
    std::vector<lang::Referent> r(ids.begin(), ids.end());
    return r;
  };

  try {
    for (const ModelFile::Seq& s : m.lines) {
      std::string where = "line '" + s.id + "'";
      std::vector<PointId> ids = resolve(s.pts, where);
      Line l = Line::from(ids);
      admit(l, where);
      bind(s.id, points_refs(ids), where);
    }
    for (const ModelFile::Seq& s : m.rings) {
      std::string where = "ring '" + s.id + "'";
      std::vector<PointId> ids = resolve(s.pts, where);
      admit(Ring::from(ids), where);
      bind(s.id, points_refs(ids), where);
    }
    for (const ModelFile::Family& f : m.families) {
      std::string where = "family '" + f.id + "'";
      std::vector<std::vector<PointId>> rows;
      for (const auto& r : f.rows) rows.push_back(resolve(r, where));
      bool rect = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r.size() == rows.front().size(); });
      LineFamily fam = LineFamily::from_rows(rows, rect && !rows.empty() ? Fixedness::fixed : Fixedness::unfixed);
      admit(fam, where);
      std::vector<lang::Referent> refs;
      for (std::size_t i = 0; i < fam.row_count(); ++i) refs.push_back(fam.row_line(i));
      bind(f.id, std::move(refs), where);
    }
    for (const ModelFile::Area& a : m.areas) {
      std::string where = "area '" + a.id + "'";
      LatticeArea area = area_from_cells(a.cells);
      std::vector<PointId> verts;
      for (Coord v : area.vertices()) verts.push_back(declare(vertex_name(v)));
      admit(area, where);
      bind(a.id, points_refs(verts), where);
    }
  } catch (const Error& e) {
    throw ModelLoadError(e.what());
  }
  return out;
}

ModelFile read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelLoadError("cannot open model file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ModelLoadError(std::string("malformed JSON: ") + e.what());
  }
  return ModelFile::from_json(j);
}

std::string render_dot(const ModelFile& m) {
  std::ostringstream os;
  os << "graph model {\n  node [shape=circle];\n";
  for (const std::string& p : m.points) os << "  " << quoted(p) << ";\n";
  auto chain = [&](const std::vector<std::string>& pts, bool closed, const std::string& attrs) {
    if (pts.size() < 2) return;
    os << "  ";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " -- " : "") << quoted(pts[i]);
    if (closed) os << " -- " << quoted(pts.front());
    os << " [" << attrs << "];\n";
  };
  for (const auto& l : m.lines) chain(l.pts, false, "label=" + quoted(l.id));
  for (const auto& r : m.rings) chain(r.pts, true, "label=" + quoted(r.id) + ", style=dashed");
  int cluster = 0;
  for (const auto& f : m.families) {
    os << "  subgraph cluster_" << cluster++ << " {\n    label=" << quoted(f.id) << ";\n";
    for (const auto& row : f.rows) {
      os << "    { rank=same;";
      for (const std::string& p : row) os << " " << quoted(p) << ";";
      os << " }\n";
    }
    os << "  }\n";
    for (const auto& row : f.rows) chain(row, false, "color=blue");
  }
  for (const auto& a : m.areas) {
    os << "  subgraph cluster_" << cluster++ << " {\n    label=" << quoted(a.id) << ";\n";
    std::set<std::pair<Coord, Coord>> edges;
    for (Coord c : a.cells) {
      Coord k[4] = {{c.r, c.c}, {c.r, c.c + 1}, {c.r + 1, c.c + 1}, {c.r + 1, c.c}};
      for (int i = 0; i < 4; ++i) edges.insert(std::minmax(k[i], k[(i + 1) % 4]));
    }
    for (const auto& [u, v] : edges) {
      os << "    " << quoted(vertex_name(u)) << " -- " << quoted(vertex_name(v)) << " [color=gray];\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace seriate
