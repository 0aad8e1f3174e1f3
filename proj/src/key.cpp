#include "taa/key.hpp"

#include <algorithm>
#include <utility>

#include "taa/errors.hpp"

namespace taa {

Key Key::integer(std::int64_t value) {
  Key k;
  k.kind_ = Kind::Int;
  k.int_ = value;
  return k;
}

Key Key::str(std::string text) {
  Key k;
  k.kind_ = Kind::Str;
  k.text_ = std::move(text);
  return k;
}

Key Key::doc(std::string id) {
  Key k;
  k.kind_ = Kind::Doc;
  k.text_ = std::move(id);
  return k;
}

Key Key::pair(Key first, Key second) {
  Key k;
  k.kind_ = Kind::Pair;
  k.first_ = std::make_shared<const Key>(std::move(first));
  k.second_ = std::make_shared<const Key>(std::move(second));
  return k;
}

std::int64_t Key::int_value() const {
  if (kind_ != Kind::Int) throw Error("key: not an integer key");
  return int_;
}

const std::string& Key::text() const {
  if (kind_ != Kind::Str && kind_ != Kind::Doc)
    throw Error("key: not a text key");
  return text_;
}

const Key& Key::first() const {
  if (kind_ != Kind::Pair) throw Error("key: not a pair key");
  return *first_;
}

const Key& Key::second() const {
  if (kind_ != Kind::Pair) throw Error("key: not a pair key");
  return *second_;
}

std::strong_ordering Key::operator<=>(const Key& other) const {
  if (auto c = static_cast<int>(kind_) <=> static_cast<int>(other.kind_); c != 0)
    return c;
  switch (kind_) {
    case Kind::Unit:
      return std::strong_ordering::equal;
    case Kind::Int:
      return int_ <=> other.int_;
    case Kind::Str:
    case Kind::Doc:
      return text_ <=> other.text_;
    case Kind::Pair:
      if (auto c = *first_ <=> *other.first_; c != 0) return c;
      return *second_ <=> *other.second_;
  }
  return std::strong_ordering::equal;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
}

void append_sexpr(std::string& out, const Key& k) {
  switch (k.kind()) {
    case Key::Kind::Unit:
      out += "(unit)";
      break;
    case Key::Kind::Int:
      out += "(int ";
      out += std::to_string(k.int_value());
      out += ')';
      break;
    case Key::Kind::Str:
      out += "(str ";
      append_escaped(out, k.text());
      out += ')';
      break;
    case Key::Kind::Doc:
      out += "(doc ";
      append_escaped(out, k.text());
      out += ')';
      break;
    case Key::Kind::Pair:
      out += "(pair ";
      append_sexpr(out, k.first());
      out += ' ';
      append_sexpr(out, k.second());
      out += ')';
      break;
  }
}

}  // namespace

std::string Key::to_sexpr() const {
  std::string out;
  append_sexpr(out, *this);
  return out;
}

KeySet::KeySet(std::initializer_list<Key> keys)
    : KeySet(std::vector<Key>(keys)) {}

KeySet::KeySet(std::vector<Key> keys) : keys_(std::move(keys)) {
  // Generated key sequences (products, unions of sorted sets) arrive sorted.
  if (!std::is_sorted(keys_.begin(), keys_.end()))
    std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

KeySet KeySet::unit() { return KeySet{Key::unit()}; }

KeySet KeySet::product(const KeySet& left, const KeySet& right) {
  // Row-major generation over sorted operands is already in canonical order.
  KeySet out;
  out.keys_.reserve(left.size() * right.size());
  for (const Key& a : left)
    for (const Key& b : right) out.keys_.push_back(Key::pair(a, b));
  return out;
}

bool KeySet::contains(const Key& key) const {
  return std::binary_search(keys_.begin(), keys_.end(), key);
}

KeySet KeySet::set_union(const KeySet& other) const {
  KeySet out;
  out.keys_.reserve(keys_.size() + other.keys_.size());
  std::set_union(keys_.begin(), keys_.end(), other.keys_.begin(),
                 other.keys_.end(), std::back_inserter(out.keys_));
  return out;
}

KeySet KeySet::intersect(const KeySet& other) const {
  KeySet out;
  std::set_intersection(keys_.begin(), keys_.end(), other.keys_.begin(),
                        other.keys_.end(), std::back_inserter(out.keys_));
  return out;
}

bool KeySet::subset_of(const KeySet& other) const {
  return std::includes(other.keys_.begin(), other.keys_.end(), keys_.begin(),
                       keys_.end());
}

bool KeySet::disjoint_with(const KeySet& other) const {
  auto a = keys_.begin();
  auto b = other.keys_.begin();
  while (a != keys_.end() && b != other.keys_.end()) {
    auto c = *a <=> *b;
    if (c == 0) return false;
    if (c < 0)
      ++a;
    else
      ++b;
  }
  return true;
}

}  // namespace taa
