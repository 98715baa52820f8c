#pragma once

#include <string>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/monoid.hpp"

namespace fixtures {

  using actkit::json;

  inline json z2_document() {
    return json::parse(R"({"elements": ["1", "g"], "identity": "1", "table": [["1", "g"], ["g", "1"]]})");
  }

  //! Z2 acting on {x, y} with the given images of x·g and y·g.
  inline json z2_act_document(std::string xg, std::string yg) {
    json action = json::array();
    action.push_back(json::array({"x", xg}));
    action.push_back(json::array({"y", yg}));
    return json{{"monoid", z2_document()}, {"elements", {"x", "y"}}, {"action", action}};
  }

  inline actkit::FiniteAct swap_act() {
    return actkit::validate_act(z2_act_document("y", "x"));
  }

  //! One fixed point p over the given monoid.
  inline actkit::FiniteAct fixed_point(actkit::MonoidPtr const& m, std::string label = "p") {
    std::vector<actkit::index_type> action(m->size(), 0);
    return actkit::FiniteAct(m, {std::move(label)}, std::move(action));
  }

  //! k points over the given monoid, every element acting trivially.
  inline actkit::FiniteAct discrete_act(actkit::MonoidPtr const& m, std::size_t k) {
    std::vector<std::string>        labels;
    std::vector<actkit::index_type> action;
    for (std::size_t a = 0; a < k; ++a) {
      labels.push_back("p" + std::to_string(a));
      for (std::size_t s = 0; s < m->size(); ++s) {
        action.push_back(static_cast<actkit::index_type>(a));
      }
    }
    return actkit::FiniteAct(m, std::move(labels), std::move(action));
  }

}  // namespace fixtures
