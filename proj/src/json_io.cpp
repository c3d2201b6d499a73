#include "flatribbon/json_io.hpp"

namespace flatribbon {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json grid_to_json(const GridDiagram& d) {
  ordered_json j;
  j["size"] = d.size();
  j["black"] = d.black();
  j["white"] = d.white();
  return j;
}

GridDiagram grid_from_json(const json& j) {
  if (!j.is_object()) throw GridFormatError("grid JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "size" && key != "black" && key != "white") {
      throw GridFormatError("unexpected key \"" + key + "\" in grid JSON");
    }
  }
  for (const char* key : {"size", "black", "white"}) {
    if (!j.contains(key)) throw GridFormatError(std::string("grid JSON lacks \"") + key + "\"");
  }
  if (!j["size"].is_number_integer()) throw GridFormatError("\"size\" must be an integer");
  const long long size = j["size"].get<long long>();
  if (size < 1 || size > 100000) throw GridFormatError("\"size\" out of range");

  auto column_list = [&](const char* key) {
    const json& a = j[key];
    if (!a.is_array()) throw GridFormatError(std::string("\"") + key + "\" must be an array");
    if (static_cast<long long>(a.size()) != size) {
      throw GridFormatError(std::string("\"") + key + "\" has " + std::to_string(a.size()) +
                            " entries, size is " + std::to_string(size));
    }
    std::vector<int> out;
    out.reserve(a.size());
    for (const auto& v : a) {
      if (!v.is_number_integer()) throw GridFormatError(std::string("\"") + key + "\" entries must be integers");
      const long long c = v.get<long long>();
      if (c < 0 || c >= size) throw GridFormatError(std::string("\"") + key + "\" entry out of range");
      out.push_back(static_cast<int>(c));
    }
    return out;
  };
  return GridDiagram(column_list("black"), column_list("white"));
}

GridDiagram parse_grid(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GridFormatError(std::string("malformed JSON: ") + e.what());
  }
  return grid_from_json(j);
}

ordered_json to_json(const Rational& r) {
  ordered_json j;
  j["num"] = r.num;
  j["den"] = r.den;
  j["text"] = r.to_string();
  j["value"] = r.to_double();
  return j;
}

ordered_json to_json(const RibbonLengthReport& r) {
  ordered_json j;
  j["horizontal_sum"] = r.horizontal_sum;
  j["vertical_sum"] = r.vertical_sum;
  j["total"] = r.total;
  j["width"] = r.width;
  j["ratio"] = to_json(r.ratio);
  return j;
}

ordered_json to_json(const BoundCertificate& c) {
  ordered_json j;
  j["knot"] = c.knot_label;
  j["crossing_number"] = c.crossing_number;
  j["computed_length"] = c.computed_length;
  j["bound_kind"] = to_string(c.bound_kind);
  j["bound_value"] = c.bound_value;
  j["holds"] = c.holds;
  j["ratio"] = to_json(c.ratio);
  if (c.grid_size) {
    j["grid_size"] = *c.grid_size;
    j["grid_bound"] = *c.grid_bound;
    j["grid_bound_holds"] = *c.grid_bound_holds;
  }
  return j;
}

ordered_json to_json(const AnnealReport& r) {
  ordered_json j;
  j["steps"] = r.steps;
  j["accepted"] = r.accepted;
  j["rejected"] = r.rejected;
  j["initial_length"] = r.initial_length;
  j["best_length"] = r.best_length;
  j["initial_size"] = r.initial_size;
  j["best_size"] = r.best_size;
  j["best_restart"] = r.best_restart;
  j["trajectory"] = r.trajectory;
  return j;
}

ordered_json to_json(const LaurentPoly& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

ordered_json to_json(const fold::FoldedRibbonLayout& layout, bool include_points) {
  ordered_json j;
  j["width"] = layout.width;
  j["half_twists"] = layout.half_twists;
  j["fold_offset"] = layout.fold_offset;
  j["tan_half_theta2"] = layout.tan_half_theta2;
  if (include_points) {
    ordered_json pts = ordered_json::object();
    for (const auto& [name, p] : layout.points) pts[name] = {p.x, p.y};
    j["points"] = pts;
  }
  ordered_json segs = ordered_json::object();
  for (const auto& [name, v] : fold::segment_lengths(layout)) segs[name] = v;
  j["segment_lengths"] = segs;
  const auto path = fold::fold_path(layout.half_twists);
  j["path"] = path.to_string();
  j["total"] = fold::path_length(layout, path);
  return j;
}

}  // namespace flatribbon
