#ifndef TAA_KEY_HPP
#define TAA_KEY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace taa {

/// A composite key: the unit key "1", an integer, a term, a document id, or
/// a pair of keys. Pairs nest arbitrarily, which is how bigram (t1,t2) and
/// trigram ((t1,t2),t3) keys and (document,term) row keys are built.
///
/// Keys carry a canonical total order: variant tag first
/// (Unit < Int < Str < Doc < Pair), then content, pairs lexicographically.
/// Every deterministic iteration and tie-break in the library relies on it.
class Key {
public:
  enum class Kind : std::uint8_t { Unit = 0, Int = 1, Str = 2, Doc = 3, Pair = 4 };

  /// Default-constructs the unit key.
  Key() = default;

  static Key unit() { return Key(); }
  static Key integer(std::int64_t value);
  static Key str(std::string text);
  static Key doc(std::string id);
  static Key pair(Key first, Key second);

  Kind kind() const noexcept { return kind_; }
  bool is_pair() const noexcept { return kind_ == Kind::Pair; }

  /// Kind::Int only.
  std::int64_t int_value() const;
  /// Kind::Str or Kind::Doc only.
  const std::string& text() const;
  /// Kind::Pair only.
  const Key& first() const;
  const Key& second() const;

  std::strong_ordering operator<=>(const Key& other) const;
  bool operator==(const Key& other) const { return (*this <=> other) == 0; }

  /// S-expression form, e.g. (pair (doc "d1") (str "sunny")).
  std::string to_sexpr() const;

private:
  Kind kind_ = Kind::Unit;
  std::int64_t int_ = 0;
  std::string text_;
  std::shared_ptr<const Key> first_, second_;
};

/// A finite set of keys, kept sorted in canonical key order with no
/// duplicates. Iteration order is the canonical order.
class KeySet {
public:
  KeySet() = default;
  KeySet(std::initializer_list<Key> keys);
  explicit KeySet(std::vector<Key> keys);

  /// The singleton {1}.
  static KeySet unit();
  /// All pairs (a,b) with a from left, b from right, as Pair keys.
  static KeySet product(const KeySet& left, const KeySet& right);

  bool contains(const Key& key) const;
  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }
  const Key& at(std::size_t i) const { return keys_[i]; }

  auto begin() const { return keys_.begin(); }
  auto end() const { return keys_.end(); }

  bool operator==(const KeySet& other) const { return keys_ == other.keys_; }

  KeySet set_union(const KeySet& other) const;
  KeySet intersect(const KeySet& other) const;
  bool subset_of(const KeySet& other) const;
  bool disjoint_with(const KeySet& other) const;

private:
  std::vector<Key> keys_;  // sorted, unique
};

}  // namespace taa

#endif
