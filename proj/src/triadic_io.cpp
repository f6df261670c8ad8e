#include "tfca/triadic_io.hpp"

#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "tfca/errors.hpp"
#include "tfca/meta_model.hpp"

namespace tfca {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> read_roster(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw parse_error(std::string("triadic document needs a '") + key + "' array");
  std::vector<std::string> names;
  for (const json& item : doc[key]) {
    if (!item.is_string())
      throw parse_error(std::string("'") + key + "' entries must be strings");
    std::string name = item.get<std::string>();
    if (name.empty()) throw parse_error(std::string("empty name in '") + key + "'");
    if (is_reserved_name(name))
      throw parse_error("name '" + name + "' is reserved for padding");
    names.push_back(std::move(name));
  }
  return names;
}

std::unordered_map<std::string, std::size_t> index_of(const std::vector<std::string>& names,
                                                      const char* what) {
  std::unordered_map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], i).second)
      throw parse_error(std::string("duplicate ") + what + " name: " + names[i]);
  return out;
}

}  // namespace

tri_document parse_triadic(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("triadic document must be a JSON object");
  if (!doc.contains("schema") || !doc["schema"].is_string() ||
      doc["schema"].get<std::string>() != kTriadicSchema)
    throw parse_error(std::string("unsupported schema, expected '") +
                      std::string(kTriadicSchema) + "'");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw parse_error("'name' must be a string");
    name = doc["name"].get<std::string>();
  }

  auto objects = read_roster(doc, "objects");
  auto attributes = read_roster(doc, "attributes");
  auto conditions = read_roster(doc, "conditions");
  auto g_index = index_of(objects, "object");
  auto m_index = index_of(attributes, "attribute");
  auto b_index = index_of(conditions, "condition");

  if (!doc.contains("triples") || !doc["triples"].is_array())
    throw parse_error("triadic document needs a 'triples' array");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const json& t : doc["triples"]) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
        !t[2].is_string())
      throw parse_error("each triple must be an array of three names");
    auto g = g_index.find(t[0].get<std::string>());
    auto m = m_index.find(t[1].get<std::string>());
    auto b = b_index.find(t[2].get<std::string>());
    if (g == g_index.end())
      throw parse_error("triple references unknown object '" + t[0].get<std::string>() + "'");
    if (m == m_index.end())
      throw parse_error("triple references unknown attribute '" + t[1].get<std::string>() +
                        "'");
    if (b == b_index.end())
      throw parse_error("triple references unknown condition '" + t[2].get<std::string>() +
                        "'");
    auto key = std::make_tuple(g->second, m->second, b->second);
    if (!seen.insert(key).second)
      throw parse_error("duplicate triple (" + t[0].get<std::string>() + ", " +
                        t[1].get<std::string>() + ", " + t[2].get<std::string>() + ")");
    triples.push_back(key);
  }
  return {std::move(name),
          triadic_context(std::move(objects), std::move(attributes), std::move(conditions),
                          triples)};
}

std::string serialize_triadic(const tri_document& doc) {
  ordered_json out;
  out["schema"] = std::string(kTriadicSchema);
  out["name"] = doc.name;
  out["objects"] = doc.context.object_names();
  out["attributes"] = doc.context.attribute_names();
  out["conditions"] = doc.context.condition_names();
  ordered_json triples = ordered_json::array();
  for (auto [g, m, b] : doc.context.triples())
    triples.push_back({doc.context.object_names()[g], doc.context.attribute_names()[m],
                       doc.context.condition_names()[b]});
  out["triples"] = std::move(triples);
  return out.dump(2) + "\n";
}

}  // namespace tfca
