#pragma once

#include <json.hpp>

#include "sdwt/errors.hpp"
#include "sdwt/types.hpp"

namespace sdwt::detail {

using nlohmann::json;

inline json axis_to_json(const Axis& a) {
  return json{{"center", a.center}, {"step", a.step}, {"count", a.count}};
}

inline Axis axis_from_json(const json& j) {
  try {
    Axis a{j.at("center").get<double>(), j.at("step").get<double>(),
           j.at("count").get<std::size_t>()};
    a.validate();
    return a;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidGrid, std::string("bad axis record: ") + e.what());
  }
}

inline json grid_to_json(const Grid3D& g) {
  return json{{"alpha1", axis_to_json(g.alpha1)},
              {"alpha2", axis_to_json(g.alpha2)},
              {"x", axis_to_json(g.x)}};
}

inline Grid3D grid_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidGrid, "grid record must be an object");
  return Grid3D{axis_from_json(j.at("alpha1")), axis_from_json(j.at("alpha2")),
                axis_from_json(j.at("x"))};
}

}  // namespace sdwt::detail
