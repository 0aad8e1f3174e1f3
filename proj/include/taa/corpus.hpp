#ifndef TAA_CORPUS_HPP
#define TAA_CORPUS_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "taa/array.hpp"
#include "taa/relation.hpp"

namespace taa {

struct Document {
  std::string id;
  std::string date;       // ISO-8601
  std::string newspaper;
  std::string title;
  std::string content;
};

/// An ingested corpus: the news relation plus its documents. Document ids
/// are unique; the relation preserves input row order.
struct Corpus {
  Relation relation;
  std::vector<Document> documents;
};

/// The corpus relation schema:
/// newsID, date, newspaper, title, content.
std::vector<Column> corpus_schema();

/// A per-document term-index matrix: rows are (document, term) pairs over
/// the distinct tokens of the document, columns the positions 1..length,
/// with a 1 marking the term at each position.
struct TermIndexMatrix {
  Array array;
  std::string doc_id;
  std::size_t length = 0;  // number of positions
};

/// Lowercases and splits on runs of non-alphanumeric characters (bytes
/// outside ASCII are kept as word characters, so UTF-8 words survive).
std::vector<std::string> tokenize_text(std::string_view text);

/// Tokenizes a document into its term-index matrix. Positions are 1-based.
/// A document with no tokens after normalization is an error.
TermIndexMatrix tokenize(const Document& d);

/// Per-term occurrence counts of one document, dimension {d} x T. Computed
/// as the row sums of the term-index matrix, transposed and re-keyed.
Array term_vector_of(const TermIndexMatrix& tim);

/// Encodes a 1-3 word phrase as a term key: "a" -> (str a),
/// "a b" -> (pair a b), "a b c" -> (pair (pair a b) c). Left-nesting matches
/// the keys produced by iterated tim_union.
Key phrase_key(const std::vector<std::string>& words);

/// Reads a term list: one phrase per line, at most three words, normalized
/// like tokenize_text. '#' lines are comments, blank lines are skipped.
KeySet load_term_list(const std::filesystem::path& path);
KeySet term_list_from_text(std::string_view text);

/// Reads a JSON-lines corpus (one object per line with fields newsID, date,
/// newspaper, title, content). Malformed lines, missing fields and duplicate
/// ids are reported with their line numbers.
Corpus ingest_jsonl(const std::filesystem::path& path);
Corpus corpus_from_jsonl(std::string_view text);

/// Corpus directory layout used by the CLI: relation.csv plus a normalized
/// documents.jsonl.
void save_corpus(const Corpus& corpus, const std::filesystem::path& dir);
Corpus load_corpus(const std::filesystem::path& dir);

}  // namespace taa

#endif
