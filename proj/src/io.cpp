#include "qv/io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace qv {

using nlohmann::json;

namespace {

std::vector<long long> int_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument("field '" + field + "' must be an array");
  std::vector<long long> out;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument("field '" + field + "' must contain integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

}  // namespace

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("input document must be a JSON object");
  static const std::set<std::string> known = {"vertices", "arrows", "d", "theta", "linearisation"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key()))
      throw std::invalid_argument("unknown field '" + it.key() + "' in input document");
  for (const char* required : {"vertices", "arrows", "d"})
    if (!doc.contains(required))
      throw std::invalid_argument(std::string("missing field '") + required + "'");

  if (!doc["vertices"].is_number_integer())
    throw std::invalid_argument("field 'vertices' must be an integer");
  int n = doc["vertices"].get<int>();
  if (n < 1) throw std::invalid_argument("field 'vertices' must be positive");

  std::vector<Arrow> arrows;
  if (!doc["arrows"].is_array()) throw std::invalid_argument("field 'arrows' must be an array");
  for (const auto& pair : doc["arrows"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw std::invalid_argument("field 'arrows' must contain 2-element integer arrays");
    arrows.push_back(Arrow{pair[0].get<int>(), pair[1].get<int>()});
  }
  Quiver q(n, std::move(arrows));

  std::vector<long long> draw = int_array(doc["d"], "d");
  for (long long x : draw)
    if (x < 0 || x > 1000000)
      throw std::invalid_argument("field 'd' entries must lie in 0..10^6");
  DimVec d(draw.begin(), draw.end());
  validate_dimension_vector(q, d);

  Stability theta;
  bool theta_defaulted = false;
  if (doc.contains("theta")) {
    theta = int_array(doc["theta"], "theta");
    if (static_cast<int>(theta.size()) != n)
      throw std::invalid_argument("field 'theta' has wrong length");
  } else {
    theta = canonical_stability(q, d);
    theta_defaulted = true;
  }

  Linearisation a;
  bool lin_defaulted = false;
  if (doc.contains("linearisation")) {
    a = int_array(doc["linearisation"], "linearisation");
    if (static_cast<int>(a.size()) != n)
      throw std::invalid_argument("field 'linearisation' has wrong length");
    long long pairing = 0;
    for (int i = 0; i < n; ++i) pairing += a[i] * d[i];
    if (pairing != 1)
      throw std::invalid_argument("field 'linearisation' does not satisfy a . d = 1");
  } else {
    auto solved = solve_linearisation(d);
    if (solved) {
      a = *solved;
      lin_defaulted = true;
    }
    // gcd(d) > 1: leave empty; commands that need a linearisation will say so.
  }

  return Instance{std::move(q), std::move(d), std::move(theta), std::move(a), theta_defaulted,
                  lin_defaulted};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_instance(doc);
}

json instance_to_json(const Instance& inst) {
  json j;
  j["vertices"] = inst.q.vertex_count();
  json arrows = json::array();
  for (const Arrow& a : inst.q.arrows()) arrows.push_back({a.source, a.target});
  j["arrows"] = std::move(arrows);
  j["d"] = inst.d;
  j["theta"] = inst.theta;
  if (!inst.a.empty()) j["linearisation"] = inst.a;
  return j;
}

}  // namespace qv
