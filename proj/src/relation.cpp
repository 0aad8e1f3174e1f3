#include "taa/relation.hpp"

#include <cctype>
#include <charconv>

#include "taa/errors.hpp"
#include "taa/io.hpp"

namespace taa {

Relation::Relation(std::vector<Column> columns) : columns_(std::move(columns)) {}

std::size_t Relation::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  throw Error("unknown column '" + std::string(name) + "'");
}

void Relation::append_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw Error("row arity " + std::to_string(row.size()) +
                " does not match " + std::to_string(columns_.size()) +
                " columns");
  for (std::size_t i = 0; i < row.size(); ++i) {
    bool is_number = std::holds_alternative<double>(row[i]);
    if ((columns_[i].type == ColumnType::Number) != is_number)
      throw Error("column '" + columns_[i].name + "': value type mismatch");
    if (columns_[i].type == ColumnType::Date &&
        !is_iso_date(std::get<std::string>(row[i])))
      throw Error("column '" + columns_[i].name + "': expected YYYY-MM-DD, got '" +
                  std::get<std::string>(row[i]) + "'");
  }
  rows_.push_back(std::move(row));
}

bool Relation::operator==(const Relation& other) const {
  if (rows_.size() != other.rows_.size() ||
      columns_.size() != other.columns_.size())
    return false;
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name != other.columns_[i].name ||
        columns_[i].type != other.columns_[i].type)
      return false;
  return rows_ == other.rows_;
}

bool is_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  int month = (s[5] - '0') * 10 + (s[6] - '0');
  int day = (s[8] - '0') * 10 + (s[9] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

Relation relation_select(const Relation& r, std::string_view column,
                         const Predicate& predicate) {
  std::size_t idx = r.column_index(column);
  ColumnType type = r.columns()[idx].type;

  auto matches = [&](const Cell& cell) -> bool {
    if (const auto* range = std::get_if<DateRange>(&predicate)) {
      if (type != ColumnType::Date)
        throw Error("date-range predicate on non-date column '" +
                    std::string(column) + "'");
      const auto& v = std::get<std::string>(cell);
      return range->lo <= v && v <= range->hi;
    }
    if (const auto* range = std::get_if<NumberRange>(&predicate)) {
      if (type != ColumnType::Number)
        throw Error("number-range predicate on non-number column '" +
                    std::string(column) + "'");
      double v = std::get<double>(cell);
      return range->lo <= v && v <= range->hi;
    }
    const auto& eq = std::get<TextEquals>(predicate);
    if (type != ColumnType::Text)
      throw Error("text-equality predicate on non-text column '" +
                  std::string(column) + "'");
    return std::get<std::string>(cell) == eq.value;
  };

  Relation out(r.columns());
  for (std::size_t i = 0; i < r.row_count(); ++i)
    if (matches(r.at(i, idx))) out.append_row(r.row(i));
  return out;
}

Relation relation_project(const Relation& r,
                          const std::vector<std::string>& columns) {
  if (columns.empty()) throw Error("projection onto no columns");
  std::vector<std::size_t> indices;
  std::vector<Column> schema;
  indices.reserve(columns.size());
  for (const auto& name : columns) {
    std::size_t idx = r.column_index(name);
    indices.push_back(idx);
    schema.push_back(r.columns()[idx]);
  }
  Relation out(std::move(schema));
  for (std::size_t i = 0; i < r.row_count(); ++i) {
    std::vector<Cell> row;
    row.reserve(indices.size());
    for (std::size_t idx : indices) row.push_back(r.at(i, idx));
    out.append_row(std::move(row));
  }
  return out;
}

std::string relation_to_csv(const Relation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.columns().size(); ++i) {
    if (i) out += ',';
    out += csv_quote(r.columns()[i].name);
  }
  out += '\n';
  for (std::size_t i = 0; i < r.row_count(); ++i) {
    for (std::size_t j = 0; j < r.columns().size(); ++j) {
      if (j) out += ',';
      const Cell& cell = r.at(i, j);
      if (const auto* num = std::get_if<double>(&cell))
        out += format_double(*num);
      else
        out += csv_quote(std::get<std::string>(cell));
    }
    out += '\n';
  }
  return out;
}

namespace {

// RFC-4180 record splitter; quoted fields may contain commas, quotes and
// line breaks.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t i = 0;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  while (i < text.size()) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
    } else if (c == '"' && !field_started && field.empty()) {
      in_quotes = true;
      field_started = true;
      ++i;
    } else if (c == ',') {
      end_field();
      ++i;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      end_record();
      i += 2;
    } else if (c == '\n') {
      end_record();
      ++i;
    } else {
      field += c;
      field_started = true;
      ++i;
    }
  }
  if (in_quotes) throw ParseError("csv: unterminated quoted field");
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

}  // namespace

Relation relation_from_csv(std::string_view text,
                           const std::vector<ColumnType>& types) {
  auto records = parse_csv(text);
  if (records.empty()) throw ParseError("csv: missing header row");
  const auto& header = records[0];
  if (header.size() != types.size())
    throw ParseError("csv: header has " + std::to_string(header.size()) +
                     " columns, expected " + std::to_string(types.size()));
  std::vector<Column> columns;
  columns.reserve(header.size());
  for (std::size_t i = 0; i < header.size(); ++i)
    columns.push_back({header[i], types[i]});
  Relation out(std::move(columns));
  for (std::size_t rec = 1; rec < records.size(); ++rec) {
    const auto& raw = records[rec];
    if (raw.size() != types.size())
      throw ParseError("csv: row " + std::to_string(rec) + " has " +
                       std::to_string(raw.size()) + " fields");
    std::vector<Cell> row;
    row.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (types[i] == ColumnType::Number) {
        double v = 0;
        auto [ptr, ec] =
            std::from_chars(raw[i].data(), raw[i].data() + raw[i].size(), v);
        if (ec != std::errc{} || ptr != raw[i].data() + raw[i].size())
          throw ParseError("csv: row " + std::to_string(rec) +
                           ": bad number '" + raw[i] + "'");
        row.emplace_back(v);
      } else {
        row.emplace_back(raw[i]);
      }
    }
    try {
      out.append_row(std::move(row));
    } catch (const Error& e) {
      throw ParseError("csv: row " + std::to_string(rec) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace taa
