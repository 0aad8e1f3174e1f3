#include "taa/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <system_error>
#include <vector>

#include "taa/errors.hpp"

namespace taa {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

double parse_double(std::string_view text, std::size_t line_no) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad value '" +
                     std::string(text) + "'");
  return v;
}

// --- s-expression keys ------------------------------------------------

struct SexprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("key syntax: " + what + " at offset " +
                     std::to_string(pos) + " in '" + std::string(text) + "'");
  }

  void expect(char c) {
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string_view word() {
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a tag");
    return text.substr(start, pos - start);
  }

  std::string quoted() {
    expect('"');
    std::string out;
    while (pos < text.size() && text[pos] != '"') {
      char c = text[pos++];
      if (c == '\\') {
        if (pos >= text.size()) fail("dangling escape");
        char e = text[pos++];
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 't': out += '\t'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          default: fail("unknown escape");
        }
      } else {
        out += c;
      }
    }
    expect('"');
    return out;
  }

  std::int64_t integer() {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::int64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + start, text.data() + pos, v);
    if (ec != std::errc{} || ptr != text.data() + pos || pos == start)
      fail("expected an integer");
    return v;
  }

  Key key() {
    skip_ws();
    expect('(');
    std::string_view tag = word();
    Key out;
    if (tag == "unit") {
      out = Key::unit();
    } else if (tag == "int") {
      skip_ws();
      out = Key::integer(integer());
    } else if (tag == "str") {
      skip_ws();
      out = Key::str(quoted());
    } else if (tag == "doc") {
      skip_ws();
      out = Key::doc(quoted());
    } else if (tag == "pair") {
      Key first = key();
      Key second = key();
      out = Key::pair(std::move(first), std::move(second));
    } else {
      fail("unknown key tag '" + std::string(tag) + "'");
    }
    skip_ws();
    expect(')');
    return out;
  }
};

}  // namespace

Key parse_key(std::string_view text) {
  SexprParser p{text};
  Key k = p.key();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters after key");
  return k;
}

Format format_from_name(std::string_view name) {
  if (name == "triples") return Format::Triples;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error("unknown format '" + std::string(name) + "'");
}

std::string_view format_extension(Format f) {
  switch (f) {
    case Format::Triples: return "triples";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "triples";
}

// --- triple format ----------------------------------------------------

std::string to_triples(const Array& a) {
  std::string out = "taa triples 1\n";
  out += "semiring ";
  out += a.semiring().name();
  out += '\n';
  out += "rows " + std::to_string(a.rows().size()) + '\n';
  for (const Key& k : a.rows()) out += k.to_sexpr() + '\n';
  out += "cols " + std::to_string(a.cols().size()) + '\n';
  for (const Key& k : a.cols()) out += k.to_sexpr() + '\n';
  out += "entries " + std::to_string(a.entry_count()) + '\n';
  for (const auto& [key, value] : a.entries()) {
    out += key.first.to_sexpr();
    out += '\t';
    out += key.second.to_sexpr();
    out += '\t';
    out += format_double(value);
    out += '\n';
  }
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool next(std::string_view& line) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    return true;
  }

  std::string_view require(const char* what) {
    std::string_view line;
    if (!next(line))
      throw ParseError("unexpected end of file, expected " + std::string(what));
    return line;
  }
};

std::size_t parse_count(std::string_view line, std::string_view prefix,
                        std::size_t line_no) {
  if (line.substr(0, prefix.size()) != prefix)
    throw ParseError("line " + std::to_string(line_no) + ": expected '" +
                     std::string(prefix) + " <count>'");
  std::string_view rest = line.substr(prefix.size());
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc{} || ptr != rest.data() + rest.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad count");
  return v;
}

}  // namespace

Array from_triples(std::string_view text) {
  LineReader r{text};
  if (r.require("the header") != "taa triples 1")
    throw ParseError("line 1: not a taa triple file");
  std::string_view sr_line = r.require("the semiring line");
  if (sr_line.substr(0, 9) != "semiring ")
    throw ParseError("line 2: expected 'semiring <name>'");
  const Semiring* sr = find_semiring(sr_line.substr(9));
  if (!sr)
    throw ParseError("line 2: unknown semiring '" +
                     std::string(sr_line.substr(9)) + "'");

  auto read_keys = [&r](std::string_view prefix) {
    std::string_view head = r.require("a key-set header");
    std::size_t n = parse_count(head, prefix, r.line_no);
    std::vector<Key> keys;
    keys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::string_view line = r.require("a key");
      try {
        keys.push_back(parse_key(line));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(r.line_no) + ": " + e.what());
      }
    }
    return KeySet(std::move(keys));
  };
  KeySet rows = read_keys("rows ");
  KeySet cols = read_keys("cols ");

  std::size_t n =
      parse_count(r.require("the entries header"), "entries ", r.line_no);
  EntryMap entries;
  for (std::size_t i = 0; i < n; ++i) {
    std::string_view line = r.require("an entry");
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string_view::npos
                         ? std::string_view::npos
                         : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos)
      throw ParseError("line " + std::to_string(r.line_no) +
                       ": expected row<TAB>col<TAB>value");
    try {
      Key row = parse_key(line.substr(0, t1));
      Key col = parse_key(line.substr(t1 + 1, t2 - t1 - 1));
      double v = parse_double(line.substr(t2 + 1), r.line_no);
      entries.emplace(KeyPair{std::move(row), std::move(col)}, v);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(r.line_no) + ": " + e.what());
    }
  }
  try {
    return Array(std::move(rows), std::move(cols), *sr, std::move(entries));
  } catch (const Error& e) {
    throw ParseError(std::string("inconsistent triple file: ") + e.what());
  }
}

// --- JSON -------------------------------------------------------------

namespace {

nlohmann::json key_to_json(const Key& k) {
  switch (k.kind()) {
    case Key::Kind::Unit: return nlohmann::json::array({"unit"});
    case Key::Kind::Int: return nlohmann::json::array({"int", k.int_value()});
    case Key::Kind::Str: return nlohmann::json::array({"str", k.text()});
    case Key::Kind::Doc: return nlohmann::json::array({"doc", k.text()});
    case Key::Kind::Pair:
      return nlohmann::json::array(
          {"pair", key_to_json(k.first()), key_to_json(k.second())});
  }
  return nullptr;
}

Key key_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw ParseError("bad key encoding: " + j.dump());
  const std::string tag = j[0].get<std::string>();
  if (tag == "unit" && j.size() == 1) return Key::unit();
  if (tag == "int" && j.size() == 2 && j[1].is_number_integer())
    return Key::integer(j[1].get<std::int64_t>());
  if (tag == "str" && j.size() == 2 && j[1].is_string())
    return Key::str(j[1].get<std::string>());
  if (tag == "doc" && j.size() == 2 && j[1].is_string())
    return Key::doc(j[1].get<std::string>());
  if (tag == "pair" && j.size() == 3)
    return Key::pair(key_from_json(j[1]), key_from_json(j[2]));
  throw ParseError("bad key encoding: " + j.dump());
}

}  // namespace

nlohmann::json to_json(const Array& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Key& k : a.rows()) rows.push_back(key_to_json(k));
  nlohmann::json cols = nlohmann::json::array();
  for (const Key& k : a.cols()) cols.push_back(key_to_json(k));
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : a.entries())
    entries.push_back(nlohmann::json::array(
        {key_to_json(key.first), key_to_json(key.second), value}));
  return nlohmann::json{{"format", "taa"},
                        {"version", 1},
                        {"semiring", std::string(a.semiring().name())},
                        {"rows", rows},
                        {"cols", cols},
                        {"entries", entries}};
}

Array from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("format", "") != "taa")
    throw ParseError("not a taa JSON array");
  const Semiring* sr = find_semiring(j.value("semiring", ""));
  if (!sr)
    throw ParseError("unknown semiring '" + j.value("semiring", "") + "'");
  auto read_keys = [](const nlohmann::json& arr) {
    if (!arr.is_array()) throw ParseError("key set is not a JSON array");
    std::vector<Key> keys;
    keys.reserve(arr.size());
    for (const auto& k : arr) keys.push_back(key_from_json(k));
    return KeySet(std::move(keys));
  };
  KeySet rows = read_keys(j.at("rows"));
  KeySet cols = read_keys(j.at("cols"));
  EntryMap entries;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number())
      throw ParseError("bad entry encoding: " + e.dump());
    entries.emplace(KeyPair{key_from_json(e[0]), key_from_json(e[1])},
                    e[2].get<double>());
  }
  try {
    return Array(std::move(rows), std::move(cols), *sr, std::move(entries));
  } catch (const Error& e) {
    throw ParseError(std::string("inconsistent JSON array: ") + e.what());
  }
}

// --- CSV export -------------------------------------------------------

std::string csv_quote(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Array& a) {
  std::string out = "row,col,value\n";
  for (const auto& [key, value] : a.entries()) {
    out += csv_quote(key.first.to_sexpr());
    out += ',';
    out += csv_quote(key.second.to_sexpr());
    out += ',';
    out += format_double(value);
    out += '\n';
  }
  return out;
}

std::string serialize(const Array& a, Format f) {
  switch (f) {
    case Format::Triples: return to_triples(a);
    case Format::Json: return to_json(a).dump(2) + "\n";
    case Format::Csv: return to_csv(a);
  }
  return {};
}

// --- files ------------------------------------------------------------

void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

void write_array_file(const Array& a, const std::filesystem::path& path,
                      Format f) {
  atomic_write_file(path, serialize(a, f));
}

Array read_array_file(const std::filesystem::path& path) {
  std::string content = read_file(path);
  std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
    return from_json(j);
  }
  return from_triples(content);
}

}  // namespace taa
