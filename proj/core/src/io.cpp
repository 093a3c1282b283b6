#include "farey/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace farey::io {

using nlohmann::json;

namespace {

json labels(const std::vector<FareyFraction>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

}  // namespace

std::string map_to_json(const FareyMap& map, int indent) {
  json doc;
  doc["level"] = map.level();
  doc["vertices"] = labels({map.vertices().begin(), map.vertices().end()});
  json edges = json::array();
  for (auto [u, v] : map.edges()) edges.push_back({map.vertex(u).str(), map.vertex(v).str()});
  doc["edges"] = std::move(edges);
  json faces = json::array();
  for (const auto& f : map.faces()) faces.push_back({f.v[0].str(), f.v[1].str(), f.v[2].str()});
  doc["faces"] = std::move(faces);
  return doc.dump(indent);
}

FareyMap map_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const int n = doc.at("level").get<int>();
    std::vector<FareyFraction> vertices;
    for (const auto& v : doc.at("vertices")) vertices.push_back(FareyFraction::parse(v.get<std::string>(), n));
    std::vector<Face> faces;
    for (const auto& f : doc.at("faces")) {
      if (f.size() != 3) throw Error(ErrorCode::ParseError, "face must have three vertices");
      faces.push_back(make_face(FareyFraction::parse(f[0].get<std::string>(), n),
                                FareyFraction::parse(f[1].get<std::string>(), n),
                                FareyFraction::parse(f[2].get<std::string>(), n)));
    }
    auto map = FareyMap::from_faces(n, std::move(vertices), faces);
    if (doc.at("edges").size() != map.num_edges()) {
      throw Error(ErrorCode::ParseError, "edge list disagrees with the faces");
    }
    for (const auto& e : doc.at("edges")) {
      const int u = map.index_of(FareyFraction::parse(e.at(0).get<std::string>(), n));
      const int v = map.index_of(FareyFraction::parse(e.at(1).get<std::string>(), n));
      if (!map.adjacent(u, v)) throw Error(ErrorCode::ParseError, "edge list disagrees with the faces");
    }
    return map;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string map_to_dot(const FareyMap& map) {
  std::ostringstream os;
  os << "graph M3_" << map.level() << " {\n";
  for (const auto& v : map.vertices()) os << "  \"" << v.str() << "\";\n";
  for (auto [u, v] : map.edges()) os << "  \"" << map.vertex(u).str() << "\" -- \"" << map.vertex(v).str() << "\";\n";
  os << "}\n";
  return os.str();
}

std::string join(const std::vector<FareyFraction>& fs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += sep;
    out += fs[i].str();
  }
  return out;
}

std::string circuits_to_json(int p, int indent) {
  json doc;
  doc["p"] = p;
  doc["S1"] = labels(circuit_S1(p).vertices);
  doc["S2"] = labels(circuit_S2(p).vertices);
  doc["poles"] = labels(poles(p));
  return doc.dump(indent);
}

std::string fourteen_gon_to_json(const klein7::FourteenGon& gon, const klein7::SidePairing& pairing,
                                 int indent) {
  json doc;
  json sides = json::array();
  for (const auto& s : gon.sides) {
    sides.push_back({{"index", s.index}, {"labels", labels({s.traversed.begin(), s.traversed.end()})}});
  }
  doc["sides"] = std::move(sides);
  json pairs = json::array();
  for (auto [i, j] : pairing.pairs) pairs.push_back({i, j});
  doc["pairs"] = std::move(pairs);
  return doc.dump(indent);
}

std::string boundary_to_json(const BoundaryWalk& walk, const std::vector<std::pair<int, int>>& pairs,
                             int indent) {
  json doc;
  doc["walk"] = labels(walk.vertices);
  json jp = json::array();
  for (auto [i, j] : pairs) jp.push_back({i, j});
  doc["pairs"] = std::move(jp);
  json rows = json::array();
  for (const auto& row : eleven::table_rows(walk)) rows.push_back(labels(row));
  doc["rows"] = std::move(rows);
  return doc.dump(indent);
}

}  // namespace farey::io
