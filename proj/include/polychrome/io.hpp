#pragma once

#include "polychrome/geom.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polychrome {

using Json = nlohmann::json;

/// On-disk problem instance: a point set or a half-plane family, with exact
/// rational coordinates serialized as "p/q" strings, plus free-form metadata.
struct Instance {
  std::string kind;  // "points" | "halfplanes"
  std::vector<Point> points;
  std::vector<HalfPlane> halfplanes;
  Json metadata = Json::object();
};

inline Json rat_json(const Rat& v) { return to_string(v); }

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected exact rational as integer or \"p/q\" string");
}

inline Json point_json(const Point& p) { return Json::array({rat_json(p.x), rat_json(p.y)}); }

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be [x, y]");
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

inline Json halfplane_json(const HalfPlane& h) {
  return Json::array({rat_json(h.a()), rat_json(h.b()), rat_json(h.c())});
}

inline HalfPlane halfplane_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("half-plane must be [a, b, c]");
  return HalfPlane(rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]));
}

inline Json instance_json(const Instance& inst) {
  Json elements = Json::array();
  if (inst.kind == "points")
    for (const auto& p : inst.points) elements.push_back(point_json(p));
  else
    for (const auto& h : inst.halfplanes) elements.push_back(halfplane_json(h));
  return Json{{"kind", inst.kind}, {"elements", elements}, {"metadata", inst.metadata}};
}

inline Instance instance_from_json(const Json& j) {
  Instance inst;
  if (!j.is_object() || !j.contains("kind") || !j.contains("elements"))
    throw std::invalid_argument("instance must have \"kind\" and \"elements\"");
  inst.kind = j.at("kind").get<std::string>();
  if (inst.kind != "points" && inst.kind != "halfplanes")
    throw std::invalid_argument("instance kind must be \"points\" or \"halfplanes\"");
  for (const auto& e : j.at("elements")) {
    if (inst.kind == "points")
      inst.points.push_back(point_from_json(e));
    else
      inst.halfplanes.push_back(halfplane_from_json(e));
  }
  if (j.contains("metadata")) {
    if (!j.at("metadata").is_object()) throw std::invalid_argument("metadata must be an object");
    inst.metadata = j.at("metadata");
  }
  return inst;
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

inline Instance load_instance(const std::string& path) {
  return instance_from_json(load_json(path));
}

/// Writes via a temporary file in the same directory plus an atomic rename,
/// so readers never observe a partial file.
inline void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

inline void write_json(const std::string& path, const Json& j) {
  atomic_write_file(path, j.dump(2) + "\n");
}

}  // namespace polychrome
