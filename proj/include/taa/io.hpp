#ifndef TAA_IO_HPP
#define TAA_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "taa/array.hpp"

namespace taa {

/// Serialized array formats. Triples and JSON round-trip bit-exactly
/// (dimension, semiring, keys, and values); CSV is export-only.
enum class Format { Triples, Json, Csv };

Format format_from_name(std::string_view name);
std::string_view format_extension(Format f);

/// Parses one s-expression key, e.g. (pair (doc "d1") (str "sunny")).
Key parse_key(std::string_view text);

/// Sparse triple format: a header declaring the semiring and both key sets
/// (one key per line), then row_key <TAB> col_key <TAB> value lines.
std::string to_triples(const Array& a);
Array from_triples(std::string_view text);

/// JSON mirror of the triple structure. Keys encode as tagged arrays:
/// ["unit"], ["int",3], ["str","a"], ["doc","d1"], ["pair",k1,k2].
nlohmann::json to_json(const Array& a);
Array from_json(const nlohmann::json& j);

/// row,col,value rows with RFC-4180 quoting; keys in s-expression form.
std::string to_csv(const Array& a);

std::string serialize(const Array& a, Format f);

/// Writes via a temp file plus rename, so interrupted runs never leave a
/// partial file behind.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

std::string read_file(const std::filesystem::path& path);

void write_array_file(const Array& a, const std::filesystem::path& path,
                      Format f);

/// Reads a triple or JSON array file, sniffing the format.
Array read_array_file(const std::filesystem::path& path);

/// RFC-4180 field quoting, shared with the relation writer.
std::string csv_quote(std::string_view field);

/// Shortest round-trippable decimal form of a double.
std::string format_double(double v);

}  // namespace taa

#endif
