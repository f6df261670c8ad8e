#include "tfca/cxt_io.hpp"

#include <charconv>
#include <unordered_set>
#include <vector>

#include "tfca/errors.hpp"
#include "tfca/meta_model.hpp"

namespace tfca {

namespace {

struct line_reader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool done() const { return pos >= text.size(); }

  // next line without its terminator; the final line may lack one
  std::string_view next(const char* expected) {
    if (done()) throw parse_error(line_no + 1, std::string("expected ") + expected);
    ++line_no;
    std::size_t nl = text.find('\n', pos);
    std::string_view out;
    if (nl == std::string_view::npos) {
      out = text.substr(pos);
      pos = text.size();
    } else {
      out = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    return out;
  }
};

std::size_t parse_count(std::string_view s, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw parse_error(line, std::string("malformed ") + what + " count: '" +
                                std::string(s) + "'");
  return value;
}

std::vector<std::string> read_names(line_reader& r, std::size_t n, const char* what) {
  std::vector<std::string> names;
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::string_view name = r.next(what);
    if (name.empty())
      throw parse_error(r.line_no, std::string("empty ") + what + " name");
    if (is_reserved_name(name))
      throw parse_error(r.line_no,
                        "name '" + std::string(name) + "' is reserved for padding");
    names.emplace_back(name);
    if (!seen.insert(names.back()).second)
      throw parse_error(r.line_no, std::string("duplicate ") + what + " name: " +
                                       std::string(name));
  }
  return names;
}

}  // namespace

cxt_document parse_cxt(std::string_view text) {
  line_reader r{text};
  std::string_view magic = r.next("format tag 'B'");
  if (magic != "B")
    throw parse_error(r.line_no, "expected format tag 'B', got '" + std::string(magic) + "'");
  std::string name(r.next("context name line"));
  std::string_view count_line = r.next("object count");
  std::size_t ng = parse_count(count_line, r.line_no, "object");
  count_line = r.next("attribute count");
  std::size_t nm = parse_count(count_line, r.line_no, "attribute");

  std::vector<std::string> objects = read_names(r, ng, "object");
  std::vector<std::string> attributes = read_names(r, nm, "attribute");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < ng; ++g) {
    std::string_view row = r.next("incidence row");
    if (row.size() != nm)
      throw parse_error(r.line_no, "incidence row has " + std::to_string(row.size()) +
                                       " cells, expected " + std::to_string(nm));
    for (std::size_t m = 0; m < nm; ++m) {
      if (row[m] == 'X')
        pairs.emplace_back(g, m);
      else if (row[m] != '.')
        throw parse_error(r.line_no, std::string("incidence cell must be '.' or 'X', got '") +
                                         row[m] + "'");
    }
  }
  while (!r.done()) {
    if (!r.next("end of file").empty())
      throw parse_error(r.line_no, "unexpected content after the incidence rows");
  }
  return {std::move(name),
          formal_context(std::move(objects), std::move(attributes), pairs)};
}

std::string serialize_cxt(const cxt_document& doc) {
  std::string out = "B\n";
  out += doc.name;
  out += '\n';
  out += std::to_string(doc.context.object_count());
  out += '\n';
  out += std::to_string(doc.context.attribute_count());
  out += '\n';
  for (const auto& n : doc.context.object_names()) {
    out += n;
    out += '\n';
  }
  for (const auto& n : doc.context.attribute_names()) {
    out += n;
    out += '\n';
  }
  for (std::size_t g = 0; g < doc.context.object_count(); ++g) {
    for (std::size_t m = 0; m < doc.context.attribute_count(); ++m)
      out += doc.context.incident(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace tfca
