#ifndef TAA_TEXT_OPS_HPP
#define TAA_TEXT_OPS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "taa/array.hpp"

namespace taa {

/// Projection: restricts an array to the requested row and column keys.
/// Requested keys absent from the array's key sets are dropped silently, so
/// term lists may name phrases that never occur. Equivalent to the
/// identity-sandwich form E(rows', rows) * A * E(cols', cols)^T whenever the
/// requested sets are genuine subsets.
Array extract(const Array& a, const KeySet& rows, const KeySet& cols);

/// Builds an explicit key map from a key set and a per-key function,
/// for use with rename().
std::map<Key, Key> key_map(const KeySet& keys,
                           const std::function<Key(const Key&)>& f);

/// Re-keys rows and/or columns through bijections; values are untouched.
/// Each provided map must cover its key set exactly and be injective.
Array rename(const Array& a, const std::optional<std::map<Key, Key>>& row_map,
             const std::optional<std::map<Key, Key>>& col_map);

/// Elementwise value transform over the whole dimension. When f(0) = 0 only
/// stored entries are touched; otherwise the full dimension product is
/// materialized (errors above a 10^7-cell guard). Non-finite results mean f
/// is undefined on an encountered value and raise ValueError.
Array apply(const Array& a, const std::function<double(double)>& f);

/// Keeps exactly the key pairs whose value satisfies the indicator. The
/// result's row key set is the set of row keys among kept pairs, likewise
/// for columns; kept zero-valued pairs shape the key sets but are not stored.
Array filter(const Array& a, const std::function<bool(double)>& pred);

/// Ranks values within each row (axis 2) or each column (axis 1), ascending,
/// over the full slice including implicit zeros. Ranks run 1..slice-size;
/// ties break by canonical key order. The result lives in the real semiring.
Array sort(const Array& a, int axis);

/// Axis-free form for single-row or single-column arrays.
Array sort(const Array& a);

/// Disjoint union of two arrays whose dimension products do not overlap.
/// The result spans the unions of the key sets, taking each operand's values
/// on its own product and zero elsewhere.
Array merge(const Array& a, const Array& b);

enum class ExpandOp { Add, Mul };

/// Broadcasts a corpus term vector (dimension {1} x T) across the rows of a
/// document-term matrix (D x T) and combines elementwise with op.
Array expand(ExpandOp op, const Array& vector, const Array& matrix);

/// Reshapes K1 x K2 into {1} x (K1 x K2): value at (1,(k1,k2)) = A(k1,k2).
Array flatten(const Array& a);

/// Shifts a term-index matrix n positions left along its index columns:
/// column i takes the contents of column i+n, trailing columns empty.
/// Columns must form the contiguous integer index set {1..m}.
Array lshift(const Array& n, std::int64_t shift);

/// Positional conjunction of two term-index matrices of the same document
/// and index set: entry ((d,(t1,t2)),i) is set when N1 marks t1 at position
/// i and N2 marks t2 there. Composing with lshift yields n-gram matrices.
Array tim_union(const Array& n1, const Array& n2);

/// Column sums (axis 1, result {1} x K2) or row sums (axis 2, K1 x {1}).
Array sum(const Array& a, int axis);

}  // namespace taa

#endif
