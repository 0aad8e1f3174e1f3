#ifndef TAA_RELATION_HPP
#define TAA_RELATION_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace taa {

enum class ColumnType { Text, Date, Number };

struct Column {
  std::string name;
  ColumnType type;
};

/// A table cell: text and dates are strings (dates in ISO-8601 form, which
/// compares chronologically as a string), numbers are doubles.
using Cell = std::variant<std::string, double>;

/// A typed row/column table: the relational flank next to the array algebra.
class Relation {
public:
  Relation() = default;
  explicit Relation(std::vector<Column> columns);

  const std::vector<Column>& columns() const noexcept { return columns_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_index(std::string_view name) const;  // throws if unknown

  void append_row(std::vector<Cell> row);
  const std::vector<Cell>& row(std::size_t i) const { return rows_[i]; }
  const Cell& at(std::size_t row, std::size_t col) const {
    return rows_[row][col];
  }

  bool operator==(const Relation& other) const;

private:
  std::vector<Column> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Selection predicates: inclusive range on a date or number column,
/// equality on a text column.
struct DateRange {
  std::string lo, hi;
};
struct NumberRange {
  double lo, hi;
};
struct TextEquals {
  std::string value;
};
using Predicate = std::variant<DateRange, NumberRange, TextEquals>;

/// Rows satisfying the predicate on the named column, order preserved.
Relation relation_select(const Relation& r, std::string_view column,
                         const Predicate& predicate);

/// The named columns only; row order preserved, duplicate rows retained.
/// An empty column list is rejected.
Relation relation_project(const Relation& r,
                          const std::vector<std::string>& columns);

/// CSV with a header row and RFC-4180 quoting.
std::string relation_to_csv(const Relation& r);

/// Parses CSV produced by relation_to_csv; the caller supplies the column
/// types since the header carries only names.
Relation relation_from_csv(std::string_view text,
                           const std::vector<ColumnType>& types);

/// True for a well-formed YYYY-MM-DD string.
bool is_iso_date(std::string_view s);

}  // namespace taa

#endif
