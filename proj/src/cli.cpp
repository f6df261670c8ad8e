#include "tfca/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tfca/base_tables.hpp"
#include "tfca/bitset.hpp"
#include "tfca/context.hpp"
#include "tfca/cxt_io.hpp"
#include "tfca/dot_export.hpp"
#include "tfca/errors.hpp"
#include "tfca/implications.hpp"
#include "tfca/meta_model.hpp"
#include "tfca/next_closure.hpp"
#include "tfca/report.hpp"
#include "tfca/triadic.hpp"
#include "tfca/triadic_io.hpp"

namespace tfca::cli {
namespace {

using report::ordered_json;

// command-line misuse that CLI11's own validation cannot express
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct options {
  std::string ctx_path, k1_path, k2_path, tri_path, out_path, conditions_text;
  bool oracle = false;
  std::size_t max_brute = 20;
  bool have_max_brute = false;
  bool have_ctx = false, have_k1 = false, have_k2 = false, have_tri = false;
};

struct loaded {
  std::string path;
  std::string bytes;
};

loaded slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

// keep the line info but tag the message with the offending file
cxt_document load_cxt(const loaded& f) {
  try {
    return parse_cxt(f.bytes);
  } catch (const parse_error& e) {
    throw invalid_input_error(f.path + ": " + e.what());
  }
}

tri_document load_tri(const loaded& f) {
  try {
    return parse_triadic(f.bytes);
  } catch (const parse_error& e) {
    throw invalid_input_error(f.path + ": " + e.what());
  }
}

ordered_json input_json(std::initializer_list<const loaded*> files) {
  ordered_json arr = ordered_json::array();
  for (const loaded* f : files) {
    ordered_json e;
    e["path"] = f->path;
    e["digest"] = report::digest(f->bytes);
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json covers_json(const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  ordered_json arr = ordered_json::array();
  for (const auto& [lo, hi] : covers) arr.push_back(ordered_json::array({lo, hi}));
  return arr;
}

bitset parse_conditions(const std::string& text, const std::vector<std::string>& roster) {
  bitset c(roster.size());
  if (text.empty()) return c;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    if (token.empty()) throw invalid_input_error("empty condition name in --conditions");
    auto it = std::find(roster.begin(), roster.end(), token);
    if (it == roster.end()) throw invalid_input_error("unknown condition: " + token);
    c.set(static_cast<std::size_t>(it - roster.begin()));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return c;
}

std::vector<formal_concept> concepts_of(const formal_context& ctx) {
  auto enumeration = next_closure(ctx);
  std::vector<formal_concept> cs;
  cs.reserve(enumeration.intents.size());
  for (const bitset& intent : enumeration.intents)
    cs.push_back({ctx.common_objects(intent), intent});
  sort_concepts(cs);
  return cs;
}

std::size_t pivot_guard(const options& o) {
  if (!o.have_max_brute) return std::size_t{1} << 18;
  return std::size_t{1} << std::min<std::size_t>(o.max_brute, 40);
}

void require_brute(std::size_t bits, std::size_t max_bits, const std::string& what) {
  if (bits > max_bits)
    throw capacity_error(what + " needs 2^" + std::to_string(bits) +
                         " cases; raise --max-brute (now " + std::to_string(max_bits) + ")");
}

template <typename F>
void for_all_subsets(std::size_t n, F&& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bitset x(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) x.set(i);
    f(x);
  }
}

// soundness + completeness of a base against its context, plus the premise
// characterization; exhaustive over attribute subsets
void oracle_base_against_context(const formal_context& ctx, const stem_base& base,
                                 std::size_t max_bits) {
  require_brute(ctx.attribute_count(), max_bits, "stem base oracle");
  for_all_subsets(ctx.attribute_count(), [&](const bitset& x) {
    if (!(l_closure(x, base.implications) == ctx.intent_closure(x)))
      throw inconsistent_input_error("stem base closure disagrees with the derivation closure");
  });
  for (const implication& imp : base.implications)
    if (!is_pseudo_intent(ctx, imp.premise, max_bits))
      throw inconsistent_input_error("a stem base premise fails the pseudo-intent definition");
}

// entry-by-entry agreement of the composed and direct route tables; the
// composed seed (empty condition set) is allowed to be one-sided
void oracle_cross_tables(const conditional_base_table& composed,
                         const conditional_base_table& generic) {
  if (composed.attribute_count != generic.attribute_count)
    throw inconsistent_input_error("route tables disagree on the attribute roster size");
  for (std::size_t gi = 0; gi < generic.entries.size(); ++gi) {
    const bitset& c = generic.entries[gi].conditions;
    bool found = false;
    for (std::size_t ci = 0; ci < composed.entries.size(); ++ci) {
      if (composed.entries[ci].conditions == c) {
        if (!(composed.base_of(ci) == generic.base_of(gi)))
          throw inconsistent_input_error("composed and direct routes disagree on a base");
        found = true;
        break;
      }
    }
    if (!found)
      throw inconsistent_input_error("direct route covers a condition set the composed one lacks");
  }
  for (const base_table_entry& e : composed.entries) {
    if (e.conditions.none()) continue;
    bool found = false;
    for (const base_table_entry& g : generic.entries)
      if (g.conditions == e.conditions) {
        found = true;
        break;
      }
    if (!found)
      throw inconsistent_input_error("composed route covers a condition set the direct one lacks");
  }
}

// covers must be exactly the transitive reduction of the concept order
void oracle_covers(const std::vector<formal_concept>& cs,
                   const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = cs.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (const auto& [lo, hi] : covers) up[lo].push_back(hi);
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : up[v])
        if (!reach[s][w]) {
          reach[s][w] = 1;
          stack.push_back(w);
        }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (static_cast<bool>(reach[a][b]) != concept_leq(cs[a], cs[b]))
        throw inconsistent_input_error("cover edges do not generate the concept order");
  for (const auto& [lo, hi] : covers)
    for (std::size_t w = 0; w < n; ++w)
      if (w != lo && w != hi && concept_leq(cs[lo], cs[w]) && concept_leq(cs[w], cs[hi]))
        throw inconsistent_input_error("a cover edge is transitively redundant");
}

std::vector<bitset> sorted_unique(std::vector<bitset> sets) {
  std::sort(sets.begin(), sets.end(), bitset::index_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

const char* status_name(iso_check::status s) {
  switch (s) {
    case iso_check::status::verified:
      return "verified";
    case iso_check::status::precondition_failed:
      return "precondition-failed";
    default:
      return "mismatch";
  }
}

ordered_json padding_json(const padding_report& p) {
  ordered_json j;
  j["added_object"] = p.added_object ? ordered_json(*p.added_object) : ordered_json(nullptr);
  j["added_attribute"] = p.added_attribute ? ordered_json(*p.added_attribute) : ordered_json(nullptr);
  j["added_meta_attribute"] =
      p.added_meta_attribute ? ordered_json(*p.added_meta_attribute) : ordered_json(nullptr);
  j["reasons"] = p.reasons;
  return j;
}

ordered_json iso_side_json(const iso_check& r, const padding_report& p,
                           const std::vector<std::string>& witness_roster) {
  ordered_json j;
  j["padding"] = padding_json(p);
  j["status"] = status_name(r.result);
  j["witness"] = r.witness ? report::names_of(*r.witness, witness_roster) : ordered_json(nullptr);
  j["detail"] = r.detail;
  return j;
}

const char* axis_label(axis i) {
  switch (i) {
    case axis::objects:
      return "objects";
    case axis::attributes:
      return "attributes";
    default:
      return "conditions";
  }
}

// ---- subcommand bodies -------------------------------------------------

std::string cmd_concepts(const options& o) {
  const loaded f = slurp(o.ctx_path);
  const cxt_document d = load_cxt(f);
  const auto cs = concepts_of(d.context);
  const auto covers = cover_relation(cs);
  if (o.oracle) {
    const auto reference = all_concepts_bruteforce(d.context, o.max_brute);
    if (!(reference == cs))
      throw inconsistent_input_error("enumeration disagrees with the exhaustive reference");
    oracle_covers(cs, covers);
  }
  ordered_json payload;
  payload["name"] = d.name;
  payload["object_count"] = d.context.object_count();
  payload["attribute_count"] = d.context.attribute_count();
  payload["concept_count"] = cs.size();
  ordered_json list = ordered_json::array();
  for (const formal_concept& c : cs) {
    ordered_json e;
    e["extent"] = report::names_of(c.extent, d.context.object_names());
    e["intent"] = report::names_of(c.intent, d.context.attribute_names());
    list.push_back(std::move(e));
  }
  payload["concepts"] = std::move(list);
  payload["covers"] = covers_json(covers);
  return report::to_text(report::envelope(
      "concepts", input_json({&f}),
      "concepts ascending by extent index sets; covers are (lower, upper) pairs",
      std::move(payload)));
}

std::string cmd_stembase(const options& o) {
  const loaded f = slurp(o.ctx_path);
  const cxt_document d = load_cxt(f);
  const auto enumeration = next_closure(d.context);
  if (o.oracle) oracle_base_against_context(d.context, enumeration.base, o.max_brute);
  ordered_json payload;
  payload["name"] = d.name;
  payload["attribute_count"] = d.context.attribute_count();
  payload["implication_count"] = enumeration.base.implications.size();
  payload["intent_count"] = enumeration.intents.size();
  ordered_json imps = ordered_json::array();
  for (const implication& imp : enumeration.base.implications)
    imps.push_back(report::implication_json(imp, d.context.attribute_names()));
  payload["implications"] = std::move(imps);
  ordered_json intents = ordered_json::array();
  for (const bitset& intent : enumeration.intents)
    intents.push_back(report::names_of(intent, d.context.attribute_names()));
  payload["intents"] = std::move(intents);
  return report::to_text(report::envelope(
      "stembase", input_json({&f}),
      "implications ascending by premise in lectic order; intents lectic ascending",
      std::move(payload)));
}

std::string cmd_compose(const options& o) {
  const loaded f1 = slurp(o.k1_path), f2 = slurp(o.k2_path);
  const cxt_document d1 = load_cxt(f1), d2 = load_cxt(f2);
  const meta_model mm = make_meta_model(d1.context, d2.context);
  const triadic_context k = compose(mm);
  if (o.oracle) {
    for (std::size_t g = 0; g < k.object_count(); ++g)
      for (std::size_t m = 0; m < k.attribute_count(); ++m)
        for (std::size_t b = 0; b < k.condition_count(); ++b)
          if (k.contains(g, m, b) != (mm.k1.incident(g, m) && mm.k2.incident(m, b)))
            throw inconsistent_input_error("composition disagrees with the layerwise product");
  }
  std::string name;
  if (!d1.name.empty() || !d2.name.empty()) name = d1.name + " * " + d2.name;
  return serialize_triadic({std::move(name), k});
}

std::string cmd_tri_concepts(const options& o) {
  const loaded f = slurp(o.tri_path);
  const tri_document d = load_tri(f);
  const auto cs = all_tri_concepts(d.context, pivot_guard(o));
  if (o.oracle) {
    const auto reference = all_tri_concepts_bruteforce(d.context, pivot_guard(o));
    if (!(reference == cs))
      throw inconsistent_input_error("enumeration disagrees with the exhaustive reference");
  }
  ordered_json payload;
  payload["name"] = d.name;
  payload["object_count"] = d.context.object_count();
  payload["attribute_count"] = d.context.attribute_count();
  payload["condition_count"] = d.context.condition_count();
  payload["concept_count"] = cs.size();
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    ordered_json e;
    e["id"] = i;
    e["extent"] = report::names_of(cs[i].extent, d.context.object_names());
    e["intent"] = report::names_of(cs[i].intent, d.context.attribute_names());
    e["modus"] = report::names_of(cs[i].modus, d.context.condition_names());
    list.push_back(std::move(e));
  }
  payload["concepts"] = std::move(list);
  ordered_json quotients = ordered_json::array();
  for (axis i : {axis::objects, axis::attributes, axis::conditions}) {
    const quotient_order q = quotient_along(cs, i);
    ordered_json qj;
    qj["axis"] = axis_label(i);
    ordered_json classes = ordered_json::array();
    for (const component_class& cl : q.classes) {
      ordered_json cj;
      cj["component"] = report::names_of(cl.component, d.context.roster_names(i));
      cj["members"] = cl.members;
      classes.push_back(std::move(cj));
    }
    qj["classes"] = std::move(classes);
    qj["covers"] = covers_json(q.covers);
    quotients.push_back(std::move(qj));
  }
  payload["quotients"] = std::move(quotients);
  return report::to_text(report::envelope(
      "tri-concepts", input_json({&f}),
      "concepts ascending by extent, intent, modus; classes ascending by component",
      std::move(payload)));
}

std::string cmd_conditional(const options& o) {
  if (o.have_tri && (o.have_k1 || o.have_k2))
    throw usage_error("give either --tri or --k1/--k2, not both");
  if (!o.have_tri && !(o.have_k1 && o.have_k2))
    throw usage_error("give --tri or both --k1 and --k2");
  std::string base_name;
  formal_context result;
  if (o.have_tri) {
    const loaded f = slurp(o.tri_path);
    const tri_document d = load_tri(f);
    const bitset c = parse_conditions(o.conditions_text, d.context.condition_names());
    result = conditional_context(d.context, c);
    base_name = d.name;
    if (o.oracle) {
      for (std::size_t g = 0; g < result.object_count(); ++g)
        for (std::size_t m = 0; m < result.attribute_count(); ++m) {
          bool expect = true;
          c.for_each([&](std::size_t b) { expect = expect && d.context.contains(g, m, b); });
          if (result.incident(g, m) != expect)
            throw inconsistent_input_error("conditional table disagrees with the triple scan");
        }
    }
  } else {
    const loaded f1 = slurp(o.k1_path), f2 = slurp(o.k2_path);
    const cxt_document d1 = load_cxt(f1), d2 = load_cxt(f2);
    const meta_model mm = make_meta_model(d1.context, d2.context);
    const bitset c = parse_conditions(o.conditions_text, mm.k2.attribute_names());
    result = conditional_from_composition(mm, c);
    base_name = d1.name;
    if (o.oracle && c.any()) {
      const formal_context direct = conditional_context(compose(mm), c);
      if (!result.same_table_as(direct))
        throw inconsistent_input_error("composition route disagrees with the direct route");
    }
  }
  std::string name = base_name;
  if (!name.empty()) name += " ";
  name += "| C={" + o.conditions_text + "}";
  return serialize_cxt({std::move(name), std::move(result)});
}

// shared body for triadic-base (every condition subset) and
// conditional-base (single conditions); the two differ only in drivers
std::string cmd_base_table(const options& o, bool full_walk) {
  const char* command = full_walk ? "triadic-base" : "conditional-base";
  if (o.have_tri && (o.have_k1 || o.have_k2))
    throw usage_error("give either --tri or --k1/--k2, not both");
  if (!o.have_tri && !(o.have_k1 && o.have_k2))
    throw usage_error("give --tri or both --k1 and --k2");

  std::optional<meta_model> mm;
  std::optional<triadic_context> direct_k;
  loaded f_tri, f_k1, f_k2;
  if (o.have_tri) {
    f_tri = slurp(o.tri_path);
    direct_k = load_tri(f_tri).context;
  } else {
    f_k1 = slurp(o.k1_path);
    f_k2 = slurp(o.k2_path);
    mm = make_meta_model(load_cxt(f_k1).context, load_cxt(f_k2).context);
  }

  conditional_base_table table;
  std::vector<std::string> cond_roster, attr_roster;
  if (mm) {
    table = full_walk ? triadic_base_composed(*mm) : conditional_base_composed(*mm);
    cond_roster = mm->k2.attribute_names();
    attr_roster = mm->k1.attribute_names();
  } else {
    table = full_walk ? triadic_base_generic(*direct_k) : conditional_base_generic(*direct_k);
    cond_roster = direct_k->condition_names();
    attr_roster = direct_k->attribute_names();
  }

  if (o.oracle) {
    if (mm) {
      const triadic_context k = compose(*mm);
      const conditional_base_table other =
          full_walk ? triadic_base_generic(k) : conditional_base_generic(k);
      oracle_cross_tables(table, other);
      const std::size_t reused = static_cast<std::size_t>(
          std::count_if(table.entries.begin(), table.entries.end(),
                        [](const base_table_entry& e) { return e.reused_from.has_value(); }));
      if (verify_reuse(*mm, table) != reused)
        throw inconsistent_input_error("reuse audit count disagrees with the table");
    } else {
      for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const formal_context layer =
            conditional_context(*direct_k, table.entries[i].conditions);
        oracle_base_against_context(layer, table.base_of(i), o.max_brute);
      }
    }
  }

  std::size_t reuse_count = 0;
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const base_table_entry& e = table.entries[i];
    ordered_json ej;
    ej["conditions"] = report::names_of(e.conditions, cond_roster);
    ej["attribute_set"] =
        e.attribute_set ? report::names_of(*e.attribute_set, attr_roster) : ordered_json(nullptr);
    if (e.reused_from) {
      ej["reused_from"] = *e.reused_from;
      ++reuse_count;
    } else {
      ej["reused_from"] = nullptr;
    }
    ordered_json imps = ordered_json::array();
    for (const implication& imp : table.base_of(i).implications)
      imps.push_back(report::implication_json(imp, attr_roster));
    ej["implications"] = std::move(imps);
    entries.push_back(std::move(ej));
  }

  ordered_json payload;
  payload["route"] = mm ? "composed" : "direct";
  payload["attribute_count"] = table.attribute_count;
  payload["condition_count"] = cond_roster.size();
  payload["entry_count"] = table.entries.size();
  payload["reuse_count"] = reuse_count;
  payload["entries"] = std::move(entries);
  if (!full_walk) {
    const triadic_context& k_ref = mm ? *(direct_k = compose(*mm)) : *direct_k;
    const implication_aggregate agg = build_implication_aggregate(k_ref, table);
    ordered_json aj;
    aj["implications"] = agg.table.object_names();
    aj["conditions"] = agg.table.attribute_names();
    ordered_json rows = ordered_json::array();
    for (std::size_t g = 0; g < agg.table.object_count(); ++g) {
      std::string row;
      for (std::size_t b = 0; b < agg.table.attribute_count(); ++b)
        row += agg.table.incident(g, b) ? 'X' : '.';
      rows.push_back(std::move(row));
    }
    aj["rows"] = std::move(rows);
    payload["aggregate"] = std::move(aj);
  }

  ordered_json inputs = o.have_tri ? input_json({&f_tri}) : input_json({&f_k1, &f_k2});
  const char* ordering =
      full_walk ? "entries ascending by condition set in lectic order; implications lectic"
                : "seed entry first on the composed route, then single conditions descending "
                  "by roster index; implications lectic";
  return report::to_text(
      report::envelope(command, std::move(inputs), ordering, std::move(payload)));
}

std::string cmd_check_iso(const options& o) {
  const loaded f1 = slurp(o.k1_path), f2 = slurp(o.k2_path);
  const cxt_document d1 = load_cxt(f1), d2 = load_cxt(f2);
  const meta_model mm0 = make_meta_model(d1.context, d2.context);
  const triadic_context k0 = compose(mm0);
  const iso_check raw_extent = verify_extent_iso(mm0, k0);
  const iso_check raw_modus = verify_modus_iso(mm0, k0);

  const auto [mm_e, pad_e] = pad_for_extent_iso(mm0);
  const triadic_context k_e = compose(mm_e);
  const iso_check res_e = verify_extent_iso(mm_e, k_e);

  const auto [mm_m, pad_m] = pad_for_modus_iso(mm0);
  const triadic_context k_m = compose(mm_m);
  const iso_check res_m = verify_modus_iso(mm_m, k_m);

  if (o.oracle) {
    if (res_e.result == iso_check::status::verified) {
      std::vector<bitset> lhs, rhs;
      for (const formal_concept& c : all_concepts_bruteforce(mm_e.k1, o.max_brute))
        lhs.push_back(c.extent);
      for (const tri_concept& c : all_tri_concepts_bruteforce(k_e, pivot_guard(o)))
        rhs.push_back(c.extent);
      if (!(sorted_unique(std::move(lhs)) == sorted_unique(std::move(rhs))))
        throw inconsistent_input_error("extent agreement fails the exhaustive recount");
    }
    if (res_m.result == iso_check::status::verified) {
      std::vector<bitset> lhs, rhs;
      for (const formal_concept& c : all_concepts_bruteforce(mm_m.k2, o.max_brute))
        lhs.push_back(c.intent);
      for (const tri_concept& c : all_tri_concepts_bruteforce(k_m, pivot_guard(o)))
        rhs.push_back(c.modus);
      if (!(sorted_unique(std::move(lhs)) == sorted_unique(std::move(rhs))))
        throw inconsistent_input_error("modus agreement fails the exhaustive recount");
    }
  }

  ordered_json payload;
  ordered_json unpadded;
  ordered_json ue;
  ue["status"] = status_name(raw_extent.result);
  ue["detail"] = raw_extent.detail;
  unpadded["extent"] = std::move(ue);
  ordered_json um;
  um["status"] = status_name(raw_modus.result);
  um["detail"] = raw_modus.detail;
  unpadded["modus"] = std::move(um);
  payload["unpadded"] = std::move(unpadded);
  payload["extent"] = iso_side_json(res_e, pad_e, mm_e.k1.object_names());
  payload["modus"] = iso_side_json(res_m, pad_m, mm_m.k2.attribute_names());
  return report::to_text(report::envelope("check-iso", input_json({&f1, &f2}),
                                          "witnesses are the lectic-least differing sets",
                                          std::move(payload)));
}

std::string cmd_export_dot(const options& o) {
  if (o.have_ctx == o.have_tri)
    throw usage_error("export-dot needs exactly one of --ctx or --tri");
  if (o.have_ctx) {
    const loaded f = slurp(o.ctx_path);
    const cxt_document d = load_cxt(f);
    const auto cs = concepts_of(d.context);
    const auto covers = cover_relation(cs);
    if (o.oracle) oracle_covers(cs, covers);
    return lattice_dot(d.context, cs, covers);
  }
  const loaded f = slurp(o.tri_path);
  const tri_document d = load_tri(f);
  const auto cs = all_tri_concepts(d.context, pivot_guard(o));
  if (o.oracle) {
    const geometric_structure gs = geometric_of(cs);
    for (const auto& partition : gs.partitions) {
      std::vector<char> seen(cs.size(), 0);
      for (const component_class& cl : partition)
        for (std::size_t id : cl.members) {
          if (id >= cs.size() || seen[id])
            throw inconsistent_input_error("quotient classes do not partition the concepts");
          seen[id] = 1;
        }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw inconsistent_input_error("quotient classes miss a concept");
    }
  }
  return quotient_dot(d.context, cs);
}

// ---- wiring ------------------------------------------------------------

void deliver(const options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw invalid_input_error("cannot write " + o.out_path);
  f << text;
  f.flush();
  if (!f) throw invalid_input_error("write failed: " + o.out_path);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dyadic and triadic concept analysis toolkit"};
  app.name("tfca");
  app.require_subcommand(1);

  options o;
  auto add_out = [&](CLI::App* s) {
    s->add_option("--out", o.out_path, "write the result to this file instead of stdout");
    s->add_flag("--oracle", o.oracle,
                "cross-check the result with an independent reference computation");
  };
  auto add_max_brute = [&](CLI::App* s) {
    s->add_option("--max-brute", o.max_brute,
                  "bit budget for exhaustive guards (default 20; tri walks default 2^18)");
  };

  CLI::App* c_concepts = app.add_subcommand("concepts", "formal concepts and their cover relation");
  c_concepts->add_option("--ctx", o.ctx_path, "dyadic context file (.cxt)")->required();
  add_out(c_concepts);
  add_max_brute(c_concepts);

  CLI::App* c_stembase = app.add_subcommand("stembase", "minimal implication base and all intents");
  c_stembase->add_option("--ctx", o.ctx_path, "dyadic context file (.cxt)")->required();
  add_out(c_stembase);
  add_max_brute(c_stembase);

  CLI::App* c_compose =
      app.add_subcommand("compose", "stack two dyadic contexts into a triadic one");
  c_compose->add_option("--k1", o.k1_path, "objects x attributes context (.cxt)")->required();
  c_compose->add_option("--k2", o.k2_path, "attributes x meta-attributes context (.cxt)")
      ->required();
  add_out(c_compose);

  CLI::App* c_tri = app.add_subcommand("tri-concepts", "maximal boxes and quotient orders");
  c_tri->add_option("--tri", o.tri_path, "triadic context file (.json)")->required();
  add_out(c_tri);
  add_max_brute(c_tri);

  CLI::App* c_cond =
      app.add_subcommand("conditional", "dyadic context induced by a set of conditions");
  c_cond->add_option("--tri", o.tri_path, "triadic context file (.json)");
  c_cond->add_option("--k1", o.k1_path, "objects x attributes context (.cxt)");
  c_cond->add_option("--k2", o.k2_path, "attributes x meta-attributes context (.cxt)");
  c_cond->add_option("--conditions", o.conditions_text, "comma separated condition names")
      ->required();
  add_out(c_cond);

  CLI::App* c_tbase =
      app.add_subcommand("triadic-base", "stem bases for every condition subset");
  CLI::App* c_cbase =
      app.add_subcommand("conditional-base", "stem bases per single condition plus the cross table");
  for (CLI::App* s : {c_tbase, c_cbase}) {
    s->add_option("--tri", o.tri_path, "triadic context file (.json)");
    s->add_option("--k1", o.k1_path, "objects x attributes context (.cxt)");
    s->add_option("--k2", o.k2_path, "attributes x meta-attributes context (.cxt)");
    add_out(s);
    add_max_brute(s);
  }

  CLI::App* c_iso = app.add_subcommand(
      "check-iso", "padding plus extent/modus agreement between the stacked and triadic views");
  c_iso->add_option("--k1", o.k1_path, "objects x attributes context (.cxt)")->required();
  c_iso->add_option("--k2", o.k2_path, "attributes x meta-attributes context (.cxt)")->required();
  add_out(c_iso);
  add_max_brute(c_iso);

  CLI::App* c_dot = app.add_subcommand("export-dot", "graphviz line or quotient diagrams");
  c_dot->add_option("--ctx", o.ctx_path, "dyadic context file (.cxt)");
  c_dot->add_option("--tri", o.tri_path, "triadic context file (.json)");
  add_out(c_dot);
  add_max_brute(c_dot);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::map<std::string, std::function<std::string(const options&)>> handlers = {
      {"concepts", cmd_concepts},
      {"stembase", cmd_stembase},
      {"compose", cmd_compose},
      {"tri-concepts", cmd_tri_concepts},
      {"conditional", cmd_conditional},
      {"triadic-base", [](const options& opt) { return cmd_base_table(opt, true); }},
      {"conditional-base", [](const options& opt) { return cmd_base_table(opt, false); }},
      {"check-iso", cmd_check_iso},
      {"export-dot", cmd_export_dot},
  };

  for (const auto& [name, handler] : handlers) {
    if (!app.got_subcommand(name)) continue;
    CLI::App* sub = app.get_subcommand(name);
    auto counted = [&](const char* flag) {
      const CLI::Option* opt = sub->get_option_no_throw(flag);
      return opt != nullptr && opt->count() > 0;
    };
    o.have_max_brute = counted("--max-brute");
    o.have_ctx = counted("--ctx");
    o.have_k1 = counted("--k1");
    o.have_k2 = counted("--k2");
    o.have_tri = counted("--tri");
    try {
      deliver(o, handler(o), out);
      return 0;
    } catch (const usage_error& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const error& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace tfca::cli
