#include "stackprod/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stackprod/error.hpp"

namespace stackprod {
namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Ratio read_ratio(const json& node, const std::string& where) {
  try {
    if (node.is_string()) return parse_ratio(node.get<std::string>());
    if (node.is_number()) return parse_ratio(node.dump());
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, where + ": " + e.what());
  }
  throw Error(ErrorCode::kParse,
              where + ": expected a rational string, got " +
                  std::string(node.type_name()));
}

const json& require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end())
    throw Error(ErrorCode::kParse, where + ": missing field '" + key + "'");
  return *it;
}

}  // namespace

RawInstance parse_instance_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, "malformed JSON at " + line_column(text, e.byte) +
                                       ": " + e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorCode::kParse, "instance: expected a JSON object");

  const json& facilities = require(doc, "facilities", "instance");
  if (!facilities.is_array())
    throw Error(ErrorCode::kParse, "instance: 'facilities' must be an array");

  RawInstance raw;
  raw.facilities.reserve(facilities.size());
  for (std::size_t i = 0; i < facilities.size(); ++i) {
    const std::string where = "facility " + std::to_string(i + 1);
    const json& f = facilities[i];
    if (!f.is_object())
      throw Error(ErrorCode::kParse, where + ": expected an object");
    raw.facilities.push_back({read_ratio(require(f, "p", where), where + " field 'p'"),
                              read_ratio(require(f, "a", where), where + " field 'a'")});
  }
  raw.leader_budget = read_ratio(require(doc, "R_l", "instance"), "field 'R_l'");
  raw.follower_budget = read_ratio(require(doc, "R_f", "instance"), "field 'R_f'");
  return raw;
}

RawInstance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance_json(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string instance_to_json(const RawInstance& raw) {
  json doc;
  doc["facilities"] = json::array();
  for (const RawFacility& f : raw.facilities)
    doc["facilities"].push_back({{"p", format_ratio(f.production_rate)},
                                 {"a", format_ratio(f.destruction_quantity)}});
  doc["R_l"] = format_ratio(raw.leader_budget);
  doc["R_f"] = format_ratio(raw.follower_budget);
  return doc.dump(2) + "\n";
}

}  // namespace stackprod
