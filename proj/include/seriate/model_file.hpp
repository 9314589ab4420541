#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "seriate/statement.hpp"
#include "seriate/universe.hpp"

namespace seriate {

struct ModelFile {
  struct Seq {
    std::string id;
    std::vector<std::string> pts;
  };
  struct Family {
    std::string id;
    std::vector<std::vector<std::string>> rows;
  };
  struct Area {
    std::string id;
    std::vector<Coord> cells;
  };

  std::vector<std::string> points;
  std::vector<Seq> lines;  // "seq"
  std::vector<Seq> rings;  // "cyc"
  std::vector<Family> families;
  std::vector<Area> areas;

  // Unknown fields anywhere are rejected.
  static ModelFile from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

class ModelLoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedModel {
  ModelUniverse universe;
  lang::Environment env;  // every point name, every object id as a variable
  std::map<PointId, std::string> names;
};

// Lattice vertices are named V^k with k = r*1000 + c.
std::string vertex_name(Coord v);
// A, B, ..., Z, then N^26, N^27, ...
std::string point_name(std::size_t i);

LoadedModel load_model(const ModelFile& m);
ModelFile read_model_file(const std::string& path);

std::string render_dot(const ModelFile& m);

}  // namespace seriate
