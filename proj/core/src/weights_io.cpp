#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <string>

#include "tcla/errors.hpp"
#include "tcla/weights.hpp"

namespace tcla {

using nlohmann::json;

WeightFunctional parse_weight_json(std::string_view json_text, const TruncatedAlgebra& alg) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("weight file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("levels") || !doc["levels"].is_array())
    throw InputError("weight file must be an object with a \"levels\" array");

  const auto& levels = doc["levels"];
  const auto expected = static_cast<std::size_t>(alg.nilp() + 1);
  if (levels.size() != expected)
    throw InputError("weight file has " + std::to_string(levels.size()) + " levels, expected N+1 = " +
                     std::to_string(expected));

  const auto names = alg.base().cartan_names();
  std::vector<std::vector<Rat>> out(expected, std::vector<Rat>(names.size()));
  for (std::size_t i = 0; i < expected; ++i) {
    if (!levels[i].is_object()) throw InputError("level " + std::to_string(i) + " is not an object");
    for (const auto& [key, value] : levels[i].items()) {
      auto it = std::find(names.begin(), names.end(), key);
      if (it == names.end())
        throw InputError("level " + std::to_string(i) + ": unknown Cartan element '" + key + "' for " +
                         alg.base().name());
      Rat q;
      if (value.is_string()) q = parse_rat(value.get<std::string>());
      else if (value.is_number_integer()) q = Rat(value.get<long>());
      else throw InputError("level " + std::to_string(i) + ": value for '" + key + "' must be a \"p/q\" string");
      out[i][static_cast<std::size_t>(it - names.begin())] = q;
    }
  }
  return WeightFunctional(std::move(out));
}

std::string weight_to_json(const WeightFunctional& lambda, const LieAlgebra& base) {
  const auto names = base.cartan_names();
  json levels = json::array();
  for (const auto& level : lambda.levels()) {
    json obj = json::object();
    for (std::size_t k = 0; k < names.size(); ++k) obj[names[k]] = to_string(level[k]);
    levels.push_back(obj);
  }
  return json{{"levels", levels}}.dump();
}

RootVector parse_chi(std::string_view text, int generator_count) {
  RootVector chi;
  std::string token;
  auto flush = [&] {
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    const std::string t = b == std::string::npos ? "" : token.substr(b, e - b + 1);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InputError("chi entries must be nonnegative integers (got '" + std::string(text) + "')");
    chi.push_back(std::stoi(t));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else token += c;
  }
  flush();
  if (static_cast<int>(chi.size()) != generator_count)
    throw InputError("chi has " + std::to_string(chi.size()) + " entries, algebra has " +
                     std::to_string(generator_count) + " simple generators");
  return chi;
}

}  // namespace tcla
