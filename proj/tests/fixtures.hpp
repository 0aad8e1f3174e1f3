#ifndef TAA_TESTS_FIXTURES_HPP
#define TAA_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "taa/array.hpp"

namespace taa::fixtures {

// Hand-built term-index matrix for a token list: rows (d, term) over the
// distinct tokens, columns 1..n, a single 1 per position. Deliberately
// independent of the library's tokenizer.
inline Array tim_from_tokens(const std::vector<std::string>& tokens,
                             const std::string& doc_id = "d") {
  std::vector<Key> rows, cols;
  EntryMap entries;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Key row = Key::pair(Key::doc(doc_id), Key::str(tokens[i]));
    Key col = Key::integer(static_cast<std::int64_t>(i + 1));
    rows.push_back(row);
    cols.push_back(col);
    entries.emplace(KeyPair{row, col}, 1.0);
  }
  return Array(KeySet(std::move(rows)), KeySet(std::move(cols)),
               real_semiring(), std::move(entries));
}

// The term-index matrix of "Today is a sunny day".
inline Array example_tim(const std::string& doc_id = "d") {
  return tim_from_tokens({"today", "is", "a", "sunny", "day"}, doc_id);
}

}  // namespace taa::fixtures

#endif
