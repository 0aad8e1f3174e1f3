#include "taa/array.hpp"

#include <utility>

#include "taa/errors.hpp"

namespace taa {

namespace {

void require_same_semiring(const Array& a, const Array& b) {
  if (&a.semiring() != &b.semiring())
    throw Error("operands use different semirings");
}

void require_same_dimension(const Array& a, const Array& b, const char* op) {
  require_same_semiring(a, b);
  if (!(a.rows() == b.rows()) || !(a.cols() == b.cols()))
    throw DimensionError(std::string(op) + ": operand dimensions differ");
}

}  // namespace

Array::Array(KeySet rows, KeySet cols, const Semiring& sr)
    : rows_(std::move(rows)), cols_(std::move(cols)), sr_(&sr) {}

Array::Array(KeySet rows, KeySet cols, const Semiring& sr, EntryMap entries)
    : rows_(std::move(rows)), cols_(std::move(cols)), sr_(&sr) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (!rows_.contains(it->first.first) || !cols_.contains(it->first.second))
      throw DimensionError("entry key (" + it->first.first.to_sexpr() + ", " +
                           it->first.second.to_sexpr() +
                           ") lies outside the array dimension");
    sr.check_value(it->second);
    if (sr.is_zero(it->second))
      it = entries.erase(it);
    else
      ++it;
  }
  entries_ = std::move(entries);
}

Array Array::zeros(KeySet rows, KeySet cols, const Semiring& sr) {
  return Array(std::move(rows), std::move(cols), sr);
}

Array Array::ones(KeySet rows, KeySet cols, const Semiring& sr) {
  EntryMap entries;
  for (const Key& r : rows)
    for (const Key& c : cols) entries.emplace(KeyPair{r, c}, sr.one());
  return Array(std::move(rows), std::move(cols), sr, std::move(entries));
}

bool Array::in_dimension(const Key& row, const Key& col) const {
  return rows_.contains(row) && cols_.contains(col);
}

double Array::at(const Key& row, const Key& col) const {
  if (!in_dimension(row, col))
    throw DimensionError("lookup (" + row.to_sexpr() + ", " + col.to_sexpr() +
                         ") is outside the array dimension");
  auto it = entries_.find({row, col});
  return it == entries_.end() ? sr_->zero() : it->second;
}

bool Array::operator==(const Array& other) const {
  return sr_ == other.sr_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

Array add(const Array& a, const Array& b) {
  require_same_dimension(a, b, "add");
  const Semiring& sr = a.semiring();
  EntryMap out = a.entries();
  for (const auto& [key, value] : b.entries()) {
    auto [it, inserted] = out.try_emplace(key, value);
    if (!inserted) it->second = sr.add(it->second, value);
  }
  return Array(a.rows(), a.cols(), sr, std::move(out));
}

Array hadamard(const Array& a, const Array& b) {
  require_same_dimension(a, b, "hadamard");
  const Semiring& sr = a.semiring();
  EntryMap out;
  for (const auto& [key, value] : a.entries()) {
    auto it = b.entries().find(key);
    if (it != b.entries().end())
      out.emplace(key, sr.mul(value, it->second));
  }
  return Array(a.rows(), a.cols(), sr, std::move(out));
}

Array matmul(const Array& a, const Array& b) {
  require_same_semiring(a, b);
  if (!(a.cols() == b.rows()))
    throw DimensionError("matmul: inner key sets differ");
  const Semiring& sr = a.semiring();
  EntryMap out;
  // Row-major scan of A; for each stored A(k1,k2), scan the stored row k2 of
  // B. Contributions to each output cell arrive in ascending k2 order.
  const EntryMap& be = b.entries();
  for (const auto& [ka, va] : a.entries()) {
    for (auto it = be.lower_bound({ka.second, Key::unit()});
         it != be.end() && it->first.first == ka.second; ++it) {
      double term = sr.mul(va, it->second);
      auto [slot, inserted] =
          out.try_emplace({ka.first, it->first.second}, sr.zero());
      slot->second = sr.add(slot->second, term);
    }
  }
  return Array(a.rows(), b.cols(), sr, std::move(out));
}

Array array_identity(const KeySet& rows, const KeySet& cols,
                     const Semiring& sr) {
  EntryMap out;
  for (const Key& k : rows.intersect(cols)) out.emplace(KeyPair{k, k}, sr.one());
  return Array(rows, cols, sr, std::move(out));
}

Array array_identity(const KeySet& rows, const KeySet& cols,
                     const std::map<Key, Key>& f, const Semiring& sr) {
  EntryMap out;
  for (const auto& [k, fk] : f) {
    if (!rows.contains(k))
      throw DimensionError("array_identity: map domain key " + k.to_sexpr() +
                           " is not a row key");
    if (!cols.contains(fk))
      throw DimensionError("array_identity: map image key " + fk.to_sexpr() +
                           " is not a column key");
    out.emplace(KeyPair{k, fk}, sr.one());
  }
  return Array(rows, cols, sr, std::move(out));
}

Array kronecker(const Array& a, const Array& b) {
  require_same_semiring(a, b);
  const Semiring& sr = a.semiring();
  EntryMap out;
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries())
      out.emplace(KeyPair{Key::pair(ka.first, kb.first),
                          Key::pair(ka.second, kb.second)},
                  sr.mul(va, vb));
  return Array(KeySet::product(a.rows(), b.rows()),
               KeySet::product(a.cols(), b.cols()), sr, std::move(out));
}

Array transpose(const Array& a) {
  EntryMap out;
  for (const auto& [key, value] : a.entries())
    out.emplace(KeyPair{key.second, key.first}, value);
  return Array(a.cols(), a.rows(), a.semiring(), std::move(out));
}

}  // namespace taa
