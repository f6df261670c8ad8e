#include "tfca/dot_export.hpp"

#include "tfca/errors.hpp"

namespace tfca {

namespace {

std::string escaped(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string joined(const bitset& s, const std::vector<std::string>& names) {
  std::string out;
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += names[i];
    first = false;
  });
  return out;
}

}  // namespace

std::string lattice_dot(const formal_context& ctx,
                        const std::vector<formal_concept>& concepts,
                        const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  // reduced labeling: attribute at its column concept, object at its row concept
  std::vector<std::string> attr_labels(concepts.size()), obj_labels(concepts.size());
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
    bitset intent = ctx.intent_closure(bitset::of(ctx.attribute_count(), {m}));
    for (std::size_t i = 0; i < concepts.size(); ++i)
      if (concepts[i].intent == intent) {
        if (!attr_labels[i].empty()) attr_labels[i] += ", ";
        attr_labels[i] += ctx.attribute_names()[m];
        break;
      }
  }
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    bitset extent = ctx.extent_closure(bitset::of(ctx.object_count(), {g}));
    for (std::size_t i = 0; i < concepts.size(); ++i)
      if (concepts[i].extent == extent) {
        if (!obj_labels[i].empty()) obj_labels[i] += ", ";
        obj_labels[i] += ctx.object_names()[g];
        break;
      }
  }

  std::string out = "digraph concept_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    // escape each half first; the joining \n must reach graphviz unescaped
    std::string label = escaped(attr_labels[i]);
    if (!obj_labels[i].empty()) {
      if (!label.empty()) label += "\\n";
      label += escaped(obj_labels[i]);
    }
    out += "  c" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (auto [lo, hi] : covers)
    out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

std::string quotient_dot(const triadic_context& k,
                         const std::vector<tri_concept>& concepts) {
  std::string out = "digraph quotient_orders {\n  rankdir=BT;\n  node [shape=box];\n";
  const char* cluster_names[3] = {"extent", "intent", "modus"};
  for (axis i : {axis::objects, axis::attributes, axis::conditions}) {
    const int a = static_cast<int>(i) - 1;
    quotient_order q = quotient_along(concepts, i);
    out += std::string("  subgraph cluster_") + cluster_names[a] + " {\n";
    out += std::string("    label=\"") + cluster_names[a] + " classes\";\n";
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
      std::string label = "{" + joined(q.classes[c].component, k.roster_names(i)) + "}";
      out += "    " + std::string(1, "eim"[a]) + std::to_string(c) + " [label=\"" +
             escaped(label) + "\"];\n";
    }
    for (auto [lo, hi] : q.covers)
      out += "    " + std::string(1, "eim"[a]) + std::to_string(lo) + " -> " +
             std::string(1, "eim"[a]) + std::to_string(hi) + ";\n";
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace tfca
