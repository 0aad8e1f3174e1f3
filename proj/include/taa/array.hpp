#ifndef TAA_ARRAY_HPP
#define TAA_ARRAY_HPP

#include <map>
#include <utility>

#include "taa/key.hpp"
#include "taa/semiring.hpp"

namespace taa {

using KeyPair = std::pair<Key, Key>;
using EntryMap = std::map<KeyPair, double>;  // row-major canonical order

/// A sparse associative array: a mapping from a row-key-set x column-key-set
/// dimension into a semiring.
///
/// The dimension is part of an array's identity: two arrays with the same
/// entries but different key sets are distinct. Semiring zeros are never
/// stored; looking up an in-dimension absent pair yields zero, looking up
/// outside the dimension throws. Arrays are immutable after construction.
class Array {
public:
  /// The all-zero array with empty key sets over the real semiring.
  Array() : Array(KeySet{}, KeySet{}, real_semiring()) {}

  /// The all-zero array over rows x cols.
  Array(KeySet rows, KeySet cols, const Semiring& sr);

  /// Builds an array from explicit entries. Every entry must lie inside the
  /// dimension; zero-valued entries are dropped, the rest domain-checked.
  Array(KeySet rows, KeySet cols, const Semiring& sr, EntryMap entries);

  static Array zeros(KeySet rows, KeySet cols,
                     const Semiring& sr = real_semiring());
  static Array ones(KeySet rows, KeySet cols,
                    const Semiring& sr = real_semiring());

  const KeySet& rows() const noexcept { return rows_; }
  const KeySet& cols() const noexcept { return cols_; }
  const Semiring& semiring() const noexcept { return *sr_; }

  std::size_t entry_count() const noexcept { return entries_.size(); }
  const EntryMap& entries() const noexcept { return entries_; }

  /// Stored value or semiring zero; throws DimensionError outside the
  /// dimension.
  double at(const Key& row, const Key& col) const;

  bool in_dimension(const Key& row, const Key& col) const;

  /// Exact equality: same semiring instance, key sets, and entries.
  bool operator==(const Array& other) const;

private:
  KeySet rows_, cols_;
  const Semiring* sr_;
  EntryMap entries_;
};

/// Elementwise semiring addition; operands must share dimension and semiring.
Array add(const Array& a, const Array& b);

/// Elementwise semiring multiplication over a shared dimension.
Array hadamard(const Array& a, const Array& b);

/// Array multiplication: C(k1,k3) = sum over k2 of A(k1,k2)*B(k2,k3).
/// Requires A's column key set to equal B's row key set. Accumulation runs
/// in canonical key order, so floating-point results are reproducible.
Array matmul(const Array& a, const Array& b);

/// Identity-patterned array over rows x cols: one at (k, k) for every key in
/// the intersection of the two sets, zero elsewhere.
Array array_identity(const KeySet& rows, const KeySet& cols,
                     const Semiring& sr = real_semiring());

/// Identity-patterned array for an explicit partial key map f: one at
/// (k, f(k)) for every k in dom f. dom f must lie in rows and map into cols.
Array array_identity(const KeySet& rows, const KeySet& cols,
                     const std::map<Key, Key>& f,
                     const Semiring& sr = real_semiring());

/// Kronecker product: dimension (A.rows x B.rows) x (A.cols x B.cols) of
/// pair keys, with C((k1,k3),(k2,k4)) = A(k1,k2) * B(k3,k4).
Array kronecker(const Array& a, const Array& b);

Array transpose(const Array& a);

}  // namespace taa

#endif
