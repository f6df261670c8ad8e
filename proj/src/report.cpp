#include "tfca/report.hpp"

#include <cstdint>

namespace tfca::report {

std::string digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xF];
  return out;
}

ordered_json names_of(const bitset& s, const std::vector<std::string>& roster) {
  ordered_json out = ordered_json::array();
  s.for_each([&](std::size_t i) { out.push_back(roster[i]); });
  return out;
}

ordered_json implication_json(const implication& imp, const std::vector<std::string>& roster) {
  ordered_json out;
  out["premise"] = names_of(imp.premise, roster);
  out["conclusion"] = names_of(imp.conclusion, roster);
  return out;
}

ordered_json envelope(std::string_view command, ordered_json inputs, std::string_view ordering,
                      ordered_json payload) {
  ordered_json out;
  out["command"] = std::string(command);
  out["inputs"] = std::move(inputs);
  out["ordering"] = std::string(ordering);
  out["payload"] = std::move(payload);
  return out;
}

std::string to_text(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace tfca::report
