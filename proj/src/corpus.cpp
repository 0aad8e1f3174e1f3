#include "taa/corpus.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "json.hpp"
#include "taa/errors.hpp"
#include "taa/io.hpp"
#include "taa/text_ops.hpp"

namespace taa {

std::vector<Column> corpus_schema() {
  return {{"newsID", ColumnType::Text},
          {"date", ColumnType::Date},
          {"newspaper", ColumnType::Text},
          {"title", ColumnType::Text},
          {"content", ColumnType::Text}};
}

std::vector<std::string> tokenize_text(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  };
  for (unsigned char c : text) {
    if (c >= 0x80 || std::isalnum(c)) {
      current += static_cast<char>(std::tolower(c));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

TermIndexMatrix tokenize(const Document& d) {
  std::vector<std::string> tokens = tokenize_text(d.content);
  if (tokens.empty())
    throw Error("document '" + d.id + "': no tokens after normalization");

  Key doc_key = Key::doc(d.id);
  std::vector<Key> row_keys;
  std::vector<Key> col_keys;
  EntryMap entries;
  row_keys.reserve(tokens.size());
  col_keys.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Key position = Key::integer(static_cast<std::int64_t>(i + 1));
    Key row = Key::pair(doc_key, Key::str(tokens[i]));
    col_keys.push_back(position);
    row_keys.push_back(row);
    entries.emplace(KeyPair{std::move(row), std::move(position)}, 1.0);
  }
  Array array(KeySet(std::move(row_keys)), KeySet(std::move(col_keys)),
              real_semiring(), std::move(entries));
  return TermIndexMatrix{std::move(array), d.id, tokens.size()};
}

Array term_vector_of(const TermIndexMatrix& tim) {
  Array counts = transpose(sum(tim.array, 2));  // {1} x ({d} x T)
  std::map<Key, Key> row_map{{Key::unit(), Key::doc(tim.doc_id)}};
  std::map<Key, Key> col_map =
      key_map(counts.cols(), [](const Key& k) { return k.second(); });
  return rename(counts, row_map, col_map);
}

Key phrase_key(const std::vector<std::string>& words) {
  if (words.empty() || words.size() > 3)
    throw Error("phrase must have 1 to 3 words");
  Key k = Key::str(words[0]);
  for (std::size_t i = 1; i < words.size(); ++i)
    k = Key::pair(std::move(k), Key::str(words[i]));
  return k;
}

KeySet term_list_from_text(std::string_view text) {
  std::vector<Key> keys;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;
    std::vector<std::string> words = tokenize_text(line);
    if (words.empty()) continue;
    if (words.size() > 3)
      throw ParseError("term list line " + std::to_string(line_no) +
                       ": phrase exceeds 3 words");
    keys.push_back(phrase_key(words));
    if (end == text.size()) break;
  }
  return KeySet(std::move(keys));
}

KeySet load_term_list(const std::filesystem::path& path) {
  return term_list_from_text(read_file(path));
}

namespace {

std::string require_string_field(const nlohmann::json& obj, const char* field,
                                 std::size_t line_no) {
  auto it = obj.find(field);
  if (it == obj.end())
    throw ParseError("line " + std::to_string(line_no) +
                     ": missing required field '" + field + "'");
  if (!it->is_string())
    throw ParseError("line " + std::to_string(line_no) + ": field '" + field +
                     "' must be a string");
  return it->get<std::string>();
}

}  // namespace

Corpus corpus_from_jsonl(std::string_view text) {
  Corpus corpus;
  corpus.relation = Relation(corpus_schema());
  std::set<std::string> seen_ids;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object())
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a JSON object");

    Document d;
    d.id = require_string_field(obj, "newsID", line_no);
    d.date = require_string_field(obj, "date", line_no);
    d.newspaper = require_string_field(obj, "newspaper", line_no);
    d.title = require_string_field(obj, "title", line_no);
    d.content = require_string_field(obj, "content", line_no);
    if (!is_iso_date(d.date))
      throw ParseError("line " + std::to_string(line_no) +
                       ": date must be YYYY-MM-DD, got '" + d.date + "'");
    if (!seen_ids.insert(d.id).second)
      throw ParseError("line " + std::to_string(line_no) +
                       ": duplicate newsID '" + d.id + "'");

    corpus.relation.append_row(
        {d.id, d.date, d.newspaper, d.title, d.content});
    corpus.documents.push_back(std::move(d));
  }
  return corpus;
}

Corpus ingest_jsonl(const std::filesystem::path& path) {
  return corpus_from_jsonl(read_file(path));
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  atomic_write_file(dir / "relation.csv", relation_to_csv(corpus.relation));
  std::string jsonl;
  for (const Document& d : corpus.documents) {
    nlohmann::ordered_json obj{{"newsID", d.id},
                               {"date", d.date},
                               {"newspaper", d.newspaper},
                               {"title", d.title},
                               {"content", d.content}};
    jsonl += obj.dump();
    jsonl += '\n';
  }
  atomic_write_file(dir / "documents.jsonl", jsonl);
}

Corpus load_corpus(const std::filesystem::path& dir) {
  return ingest_jsonl(dir / "documents.jsonl");
}

}  // namespace taa
