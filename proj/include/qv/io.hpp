#pragma once

// Quiver input documents and JSON rendering. Input schema (strict, unknown
// fields rejected):
//   {
//     "vertices": n,
//     "arrows": [[s, t], ...],        // 1-indexed
//     "d": [d_1, ..., d_n],
//     "theta": [...],                 // optional; default canonical
//     "linearisation": [...]          // optional; default solver choice
//   }

#include <string>

#include "json.hpp"
#include "qv/quiver.hpp"

namespace qv {

struct Instance {
  Quiver q;
  DimVec d;
  Stability theta;
  Linearisation a;
  bool theta_defaulted = false;
  bool lin_defaulted = false;
};

Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::string& path);

nlohmann::json instance_to_json(const Instance& inst);

}  // namespace qv
