#include "jsj/metadata.hpp"

#include "jsj/error.hpp"

namespace jsj {

using nlohmann::json;

namespace {

json face_json(const FaceRef& f) { return json::array({f.tet, f.face}); }

json faces_json(const std::array<FaceRef, 2>& faces) {
  return json::array({face_json(faces[0]), face_json(faces[1])});
}

std::array<FaceRef, 2> faces_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw StructureError("expected a pair of faces");
  std::array<FaceRef, 2> out;
  for (int i = 0; i < 2; ++i) out[i] = FaceRef{j[i].at(0).get<int>(), j[i].at(1).get<int>()};
  return out;
}

Int int_from(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (!j.is_string()) throw StructureError("expected an integer string");
  try {
    return Int(j.get<std::string>());
  } catch (const std::exception&) {
    throw StructureError("bad integer '" + j.get<std::string>() + "'");
  }
}

Exactness exactness_from(const std::string& s) {
  if (s == "exact") return Exactness::exact;
  if (s == "upper_bound") return Exactness::upper_bound;
  if (s == "lower_bound") return Exactness::lower_bound;
  throw StructureError("unknown exactness '" + s + "'");
}

std::string flips_string(const std::vector<Flip>& flips) {
  std::string out;
  for (Flip f : flips) {
    if (!out.empty()) out += ' ';
    out += to_string(f);
  }
  return out;
}

std::vector<Flip> flips_from(const std::string& s) {
  std::vector<Flip> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(' ', i);
    if (j == std::string::npos) j = s.size();
    auto tok = s.substr(i, j - i);
    if (tok == "x") out.push_back(Flip::x);
    else if (tok == "y") out.push_back(Flip::y);
    else if (tok == "xy") out.push_back(Flip::diagonal);
    else if (!tok.empty()) throw StructureError("unknown flip '" + tok + "'");
    i = j + 1;
  }
  return out;
}

}  // namespace

json to_json(const TorusMap& m) {
  return json::array({json::array({m.a().str(), m.b().str()}), json::array({m.c().str(), m.d().str()})});
}

TorusMap torus_map_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw StructureError("expected a 2x2 matrix");
  return {int_from(j[0][0]), int_from(j[0][1]), int_from(j[1][0]), int_from(j[1][1])};
}

json to_json(const AssemblyMetadata& meta) {
  json j;
  j["delta"] = meta.delta;
  j["K"] = meta.K;
  j["distance_budget"] = meta.distance_budget();
  j["delta_overridden"] = meta.delta_overridden;
  j["seed"] = meta.seed;
  j["treewidth"] = {{"value", meta.treewidth}, {"exactness", std::string(to_string(meta.treewidth_exactness))}};
  j["pathwidth"] = {{"value", meta.pathwidth}, {"exactness", std::string(to_string(meta.pathwidth_exactness))}};
  j["fiber_slope"] = json::array({meta.fiber_slope.p().str(), meta.fiber_slope.q().str()});
  j["total_tetrahedra"] = meta.total_tetrahedra;
  json nodes = json::array();
  for (const auto& n : meta.nodes) {
    json tori = json::array();
    for (const auto& t : n.tori) tori.push_back(faces_json(t));
    nodes.push_back({{"node", n.node}, {"k", n.k}, {"first", n.first}, {"count", n.count}, {"tori", tori}});
  }
  j["nodes"] = nodes;
  json arcs = json::array();
  for (const auto& a : meta.arcs) {
    arcs.push_back({{"arc", a.arc},
                    {"u", a.u},
                    {"v", a.v},
                    {"tori", json::array({a.tori[0], a.tori[1]})},
                    {"map", to_json(a.map)},
                    {"terminal", to_json(a.terminal)},
                    {"flips", flips_string(a.flips)},
                    {"achieved_distance", a.achieved_distance},
                    {"first", a.first},
                    {"count", a.count},
                    {"source_faces", faces_json(a.source_faces)},
                    {"target_faces", faces_json(a.target_faces)}});
  }
  j["arcs"] = arcs;
  return j;
}

AssemblyMetadata metadata_from_json(const json& j) {
  try {
    AssemblyMetadata meta;
    meta.delta = j.at("delta").get<std::int64_t>();
    meta.K = j.at("K").get<std::int64_t>();
    meta.delta_overridden = j.at("delta_overridden").get<bool>();
    meta.seed = j.at("seed").get<std::uint64_t>();
    meta.treewidth = j.at("treewidth").at("value").get<int>();
    meta.treewidth_exactness = exactness_from(j.at("treewidth").at("exactness").get<std::string>());
    meta.pathwidth = j.at("pathwidth").at("value").get<int>();
    meta.pathwidth_exactness = exactness_from(j.at("pathwidth").at("exactness").get<std::string>());
    meta.fiber_slope = Slope(int_from(j.at("fiber_slope").at(0)), int_from(j.at("fiber_slope").at(1)));
    meta.total_tetrahedra = j.at("total_tetrahedra").get<int>();
    for (const auto& n : j.at("nodes")) {
      NodeRecord rec;
      rec.node = n.at("node").get<int>();
      rec.k = n.at("k").get<int>();
      rec.first = n.at("first").get<int>();
      rec.count = n.at("count").get<int>();
      for (const auto& t : n.at("tori")) rec.tori.push_back(faces_from(t));
      meta.nodes.push_back(rec);
    }
    for (const auto& a : j.at("arcs")) {
      ArcRecord rec;
      rec.arc = a.at("arc").get<int>();
      rec.u = a.at("u").get<int>();
      rec.v = a.at("v").get<int>();
      rec.tori = {a.at("tori").at(0).get<int>(), a.at("tori").at(1).get<int>()};
      rec.map = torus_map_from_json(a.at("map"));
      rec.terminal = torus_map_from_json(a.at("terminal"));
      rec.flips = flips_from(a.at("flips").get<std::string>());
      rec.achieved_distance = a.at("achieved_distance").get<std::int64_t>();
      rec.first = a.at("first").get<int>();
      rec.count = a.at("count").get<int>();
      rec.source_faces = faces_from(a.at("source_faces"));
      rec.target_faces = faces_from(a.at("target_faces"));
      meta.arcs.push_back(rec);
    }
    return meta;
  } catch (const json::exception& e) {
    throw StructureError(std::string("metadata: ") + e.what());
  } catch (const InputError& e) {
    throw StructureError(std::string("metadata: ") + e.what());
  }
}

json to_json(const Block& block) {
  json j;
  j["k"] = block.k;
  j["tetrahedra"] = block.triangulation.size();
  j["fiber_slope"] = json::array({block.fiber_slope.p().str(), block.fiber_slope.q().str()});
  json tori = json::array();
  for (const auto& torus : block.tori) {
    json positions = json::array();
    for (int i = 0; i < 2; ++i) {
      json labels = json::object();
      for (int v = 0; v < 4; ++v) {
        if (v == torus.faces[i].face) continue;
        const auto& p = torus.position[i][v];
        labels[std::to_string(v)] = json::array({p.x.str(), p.y.str()});
      }
      positions.push_back(labels);
    }
    tori.push_back({{"faces", faces_json(torus.faces)}, {"positions", positions}});
  }
  j["tori"] = tori;
  return j;
}

}  // namespace jsj
