#pragma once

#include <nlohmann/json.hpp>

#include "projcert/errors.hpp"
#include "projcert/types.hpp"

namespace projcert {

inline nlohmann::json vec_to_json(const Vector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline Vector vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& e : j) {
    if (!e.is_number()) throw ParseError("expected number in vector");
    v[i++] = e.get<double>();
  }
  return v;
}

// Rejects unknown fields: `allowed` lists every key the object may carry.
inline void require_keys(const nlohmann::json& j,
                         std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ParseError("expected JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw ParseError("unknown field: " + it.key());
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& j,
                                           const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field: ") + key);
  return *it;
}

}  // namespace projcert
