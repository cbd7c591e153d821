#include "curves/report_json.hpp"

#include <sstream>

namespace curves {

namespace {

Json ext(const ExtCount& c) {
  if (c.infinite) return "infinite";
  return c.value;
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& doc, const std::string& prefix, std::ostringstream& out) {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      flatten(value, prefix + key + ".", out);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& x : value) joined += (joined.empty() ? "" : ",") + scalar(x);
      out << prefix << key << '=' << joined << '\n';
    } else {
      out << prefix << key << '=' << scalar(value) << '\n';
    }
  }
}

}  // namespace

Json to_json(const ClassInventory& inv) {
  Json j;
  j["essential_nonspecial"] = inv.essential_nonspecial;
  j["essential_special"] = inv.essential_special;
  j["nonessential_special_lower_bound"] = inv.nonessential_special_lower_bound;
  j["geometrically_special"] = inv.geometrically_special;
  j["trivial_class_present"] = inv.trivial_class_present;
  j["defective_special"] = inv.defective_special;
  j["min_points_per_special_class"] = inv.min_points_per_special_class;
  return j;
}

Json to_json(const SelfReport& r, const std::string& surface, const std::string& word) {
  Json j;
  j["query"] = {{"kind", "self"}, {"surface", surface}, {"words", Json::array({word})}};
  j["mi"] = r.mi;
  j["ni"] = r.ni;
  j["ni_star"] = r.ni_star;
  j["mi_geom"] = r.mi_geom;
  j["ni_geom"] = r.ni_geom;
  j["ni_star_geom"] = r.ni_star_geom;
  j["ri"] = ext(r.ri);
  j["ri_geom"] = ext(r.ri_geom);
  j["wecken"] = r.wecken;
  j["wecken_geom"] = r.wecken_geom;
  j["special"] = r.curve.special;
  j["k"] = r.curve.k;
  j["k_prime"] = r.k_prime ? Json(*r.k_prime) : Json(nullptr);
  j["inventory"] = to_json(r.inventory);
  j["branch"] = to_string(r.branch);
  return j;
}

Json to_json(const PairReport& r, const std::string& surface, const std::string& w1,
             const std::string& w2) {
  Json j;
  j["query"] = {{"kind", "pair"}, {"surface", surface}, {"words", Json::array({w1, w2})}};
  j["mi"] = r.mi;
  j["ni"] = r.ni;
  j["ni_star"] = r.ni_star;
  j["ri"] = ext(r.ri);
  j["wecken"] = r.wecken;
  j["special_pair"] = r.special_pair;
  j["common_root"] = r.pair.common_root;
  j["k"] = r.pair.k;
  j["l"] = r.pair.l;
  j["inventory"] = to_json(r.inventory);
  j["branch"] = to_string(r.branch);
  return j;
}

std::string to_text(const Json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace curves
