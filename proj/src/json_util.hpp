#pragma once

// Shared JSON helpers for the state and canonical-form documents.

#include <json.hpp>

#include <string>
#include <string_view>

#include "slocc/errors.hpp"
#include "slocc/exactmath.hpp"

namespace slocc::detail {

inline nlohmann::json parse_json_document(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

inline std::size_t count_field(const nlohmann::json& doc, const char* name) {
  if (!doc.contains(name)) throw MalformedInput(std::string("missing field \"") + name + "\"");
  const auto& v = doc.at(name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw MalformedInput(std::string("field \"") + name + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline GaussRat gaussrat_from_json(const nlohmann::json& v, const std::string& where) {
  if (!v.is_object() || v.size() != 2 || !v.contains("re") || !v.contains("im")) {
    throw MalformedInput(where + " must be an object with exactly the fields \"re\" and \"im\"");
  }
  if (!v.at("re").is_string() || !v.at("im").is_string()) {
    throw MalformedInput(where + " components must be strings of the form \"p/q\"");
  }
  try {
    return GaussRat::parse_components(v.at("re").get<std::string>(), v.at("im").get<std::string>());
  } catch (const MalformedInput& e) {
    throw MalformedInput(where + ": " + e.what());
  }
}

inline nlohmann::ordered_json gaussrat_to_json(const GaussRat& x) {
  nlohmann::ordered_json out;
  out["re"] = x.re_string();
  out["im"] = x.im_string();
  return out;
}

}  // namespace slocc::detail
