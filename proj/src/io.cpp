#include "terngrid/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace terngrid {

Json tree_to_json(const TernaryTree& t) {
  Json children = Json::array();
  for (NodeId v = 0; v < t.size(); ++v) {
    Json row = Json::array();
    for (NodeId c : t.children(v)) row.push_back(c);
    children.push_back(std::move(row));
  }
  Json j;
  j["n"] = t.size();
  j["root"] = 0;
  j["children"] = std::move(children);
  return j;
}

TernaryTree tree_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("tree: expected an object");
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1 || n > std::numeric_limits<NodeId>::max()) throw ParseError("tree: bad n");
    if (j.at("root").get<std::int64_t>() != 0) throw ParseError("tree: root must be 0");
    const Json& ch = j.at("children");
    if (!ch.is_array() || static_cast<std::int64_t>(ch.size()) != n) {
      throw ParseError("tree: children must list n entries");
    }
    std::vector<std::vector<NodeId>> children(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < children.size(); ++v) {
      if (!ch[v].is_array()) throw ParseError("tree: children[" + std::to_string(v) + "] is not an array");
      for (const Json& c : ch[v]) {
        const auto id = c.get<std::int64_t>();
        if (id < 0 || id >= n) throw ParseError("tree: child id out of range");
        children[v].push_back(static_cast<NodeId>(id));
      }
    }
    return TernaryTree::from_children(children);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json drawing_to_json(const GridDrawing& d) {
  Json pos = Json::array();
  for (Point p : d.positions()) pos.push_back(Json::array({p.x, p.y}));
  Json j;
  j["tree"] = tree_to_json(d.tree());
  j["pos"] = std::move(pos);
  return j;
}

namespace {

// Returns false for a finite non-integral value.
bool as_coord(const Json& v, Coord& out) {
  if (v.is_number_integer()) {
    out = v.get<Coord>();
    return true;
  }
  if (!v.is_number_float()) throw ParseError("drawing: coordinates must be numbers");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError("drawing: non-finite coordinate");
  if (std::floor(x) != x || std::fabs(x) > 9.0e15) return false;
  out = static_cast<Coord>(x);
  return true;
}

}  // namespace

ParsedDrawing drawing_from_json(const Json& j) {
  ParsedDrawing out;
  try {
    if (!j.is_object()) throw ParseError("drawing: expected an object");
    out.tree = std::make_shared<const TernaryTree>(tree_from_json(j.at("tree")));
    const Json& pos = j.at("pos");
    if (!pos.is_array() || pos.size() != static_cast<std::size_t>(out.tree->size())) {
      throw ParseError("drawing: pos must list one point per node");
    }
    std::vector<Point> pts(pos.size());
    bool integral = true;
    for (std::size_t v = 0; v < pos.size(); ++v) {
      if (!pos[v].is_array() || pos[v].size() != 2) throw ParseError("drawing: each pos entry must be [x, y]");
      integral = as_coord(pos[v][0], pts[v].x) && integral;
      integral = as_coord(pos[v][1], pts[v].y) && integral;
    }
    if (integral) out.drawing.emplace(out.tree, std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("drawing: ") + e.what());
  }
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["planar"] = r.planar;
  j["orthogonal"] = r.orthogonal;
  j["onGrid"] = r.on_grid;
  j["topVisible"] = r.top_visible;
  j["subtreeSeparated"] = r.subtree_separated;
  j["width"] = r.extents.width;
  j["height"] = r.extents.height;
  j["leftWidth"] = r.extents.left;
  j["rightWidth"] = r.extents.right;
  j["topHeight"] = r.extents.top;
  j["bottomHeight"] = r.extents.bottom;
  j["area"] = r.extents.area();
  if (r.legs) {
    j["legLength"] = r.legs->leg;
    j["leftArmLength"] = r.legs->left_arm;
    j["rightArmLength"] = r.legs->right_arm;
  } else {
    j["legLength"] = nullptr;
    j["leftArmLength"] = nullptr;
    j["rightArmLength"] = nullptr;
  }
  return j;
}

Json off_grid_report_json() {
  Json j;
  for (const char* k : {"planar", "orthogonal", "onGrid", "topVisible", "subtreeSeparated"}) j[k] = false;
  for (const char* k : {"width", "height", "leftWidth", "rightWidth", "topHeight", "bottomHeight", "area",
                        "legLength", "leftArmLength", "rightArmLength"}) {
    j[k] = nullptr;
  }
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace terngrid
