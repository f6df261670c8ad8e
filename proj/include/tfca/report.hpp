#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tfca/bitset.hpp"
#include "tfca/implications.hpp"

namespace tfca::report {

using ordered_json = nlohmann::ordered_json;

// fnv1a-64 of the raw input bytes, "fnv1a64:<16 hex digits>"
std::string digest(std::string_view bytes);

// the set as a name array, ascending roster order
ordered_json names_of(const bitset& s, const std::vector<std::string>& roster);

ordered_json implication_json(const implication& imp, const std::vector<std::string>& roster);

// fixed field order so identical runs serialize to identical bytes
ordered_json envelope(std::string_view command, ordered_json inputs, std::string_view ordering,
                      ordered_json payload);

std::string to_text(const ordered_json& doc);

}  // namespace tfca::report
