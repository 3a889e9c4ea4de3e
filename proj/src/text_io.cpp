#include "qnd/text_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qnd {

namespace {

  std::string_view trim(std::string_view s) {
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      return {};
    }
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  }

  // Parses a non-negative decimal integer occupying the whole token.
  bool parse_number(std::string_view token, std::size_t& value) {
    if (token.empty()) {
      return false;
    }
    auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc() && ptr == token.data() + token.size();
  }

  std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t                   start = 0;
    while (true) {
      auto const pos = s.find(sep, start);
      out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
      if (pos == std::string_view::npos) {
        return out;
      }
      start = pos + 1;
    }
  }

  std::vector<Element> parse_element_list(std::string_view text,
                                          std::size_t      parent_order,
                                          std::string const& what) {
    std::vector<Element> out;
    if (trim(text).empty()) {
      return out;
    }
    for (auto token : split(text, ',')) {
      std::size_t v = 0;
      if (!parse_number(trim(token), v)) {
        throw ParseError(what, 1, "invalid element '" + std::string(token) + "'");
      }
      if (v >= parent_order) {
        throw ParseError(what, 1, "element " + std::to_string(v) + " is outside the carrier");
      }
      out.push_back(static_cast<Element>(v));
    }
    return out;
  }

}  // namespace

Quandle parse_quandle_text(std::string_view text, std::string const& source) {
  std::istringstream   in{std::string(text)};
  std::string          raw;
  std::size_t          line_no = 0;
  std::optional<std::size_t> order;
  std::vector<Element> table;
  std::size_t          rows = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    std::vector<std::size_t> values;
    std::istringstream       tokens{std::string(line)};
    std::string              token;
    while (tokens >> token) {
      std::size_t v = 0;
      if (!parse_number(token, v)) {
        throw ParseError(source, line_no, "invalid number '" + token + "'");
      }
      values.push_back(v);
    }
    if (!order) {
      if (values.size() != 1) {
        throw ParseError(source, line_no, "expected the order on the first line");
      }
      order = values.front();
      table.reserve(*order * *order);
      continue;
    }
    if (rows == *order) {
      throw ParseError(source, line_no, "more rows than the order " + std::to_string(*order));
    }
    if (values.size() != *order) {
      throw ParseError(source, line_no,
                       "row has " + std::to_string(values.size()) + " entries, expected "
                           + std::to_string(*order));
    }
    for (auto v : values) {
      if (v >= *order) {
        throw ParseError(source, line_no, "entry " + std::to_string(v) + " is outside the carrier");
      }
      table.push_back(static_cast<Element>(v));
    }
    ++rows;
  }
  if (!order) {
    throw ParseError(source, line_no, "missing order");
  }
  if (rows != *order) {
    throw ParseError(source, line_no,
                     "expected " + std::to_string(*order) + " rows, found " + std::to_string(rows));
  }
  try {
    return validate_quandle(*order, std::move(table));
  } catch (AxiomViolation const& e) {
    throw AxiomViolation(source, e);
  }
}

Quandle parse_quandle_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_quandle_text(buffer.str(), path.string());
}

std::string format_quandle(Quandle const& q) {
  std::ostringstream os;
  std::size_t const  n = q.order();
  os << n << '\n';
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      os << (y ? " " : "") << q.op(x, y);
    }
    os << '\n';
  }
  return os.str();
}

SubSet parse_subset(std::string_view text, std::size_t parent_order) {
  auto const elements = parse_element_list(text, parent_order, "subset");
  return SubSet(parent_order, elements);
}

std::string format_subset(SubSet const& s) {
  std::string out;
  for (auto x : s.elements()) {
    out += (out.empty() ? "" : ",") + std::to_string(x);
  }
  return out;
}

Congruence parse_congruence(std::string_view text, Quandle const& q) {
  std::size_t const    n = q.order();
  constexpr Element    unset = static_cast<Element>(-1);
  std::vector<Element> class_of(n, unset);
  Element              next = 0;
  if (!trim(text).empty()) {
    for (auto cls : split(text, ';')) {
      auto const members = parse_element_list(cls, n, "congruence");
      if (members.empty()) {
        throw ParseError("congruence", 1, "empty class");
      }
      for (auto x : members) {
        if (class_of[x] != unset) {
          throw ParseError("congruence", 1, "element " + std::to_string(x) + " listed twice");
        }
        class_of[x] = next;
      }
      ++next;
    }
  }
  for (auto& c : class_of) {
    if (c == unset) {
      c = next++;
    }
  }
  Congruence c(std::move(class_of));
  require_compatible(q, c);
  return c;
}

std::string format_congruence(Congruence const& c) {
  std::string out;
  for (auto const& cls : c.classes()) {
    if (!out.empty()) {
      out += ';';
    }
    for (std::size_t i = 0; i < cls.size(); ++i) {
      out += (i ? "," : "") + std::to_string(cls[i]);
    }
  }
  return out;
}

std::string format_map(std::vector<Element> const& map) {
  std::string out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    out += (i ? " " : "") + std::to_string(map[i]);
  }
  return out;
}

}  // namespace qnd
