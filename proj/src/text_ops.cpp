#include "taa/text_ops.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taa/errors.hpp"

namespace taa {

namespace {

// Full-dimension materialization bound for apply/filter when f(0) != 0.
constexpr std::size_t kDenseCellLimit = 10'000'000;

double stored_or_zero(const Array& a, const Key& r, const Key& c) {
  auto it = a.entries().find({r, c});
  return it == a.entries().end() ? a.semiring().zero() : it->second;
}

void guard_dense(const Array& a, const char* op) {
  if (a.rows().size() * a.cols().size() > kDenseCellLimit)
    throw Error(std::string(op) +
                ": full-dimension evaluation exceeds the cell guard");
}

}  // namespace

Array extract(const Array& a, const KeySet& rows, const KeySet& cols) {
  KeySet r = rows.intersect(a.rows());
  KeySet c = cols.intersect(a.cols());
  EntryMap out;
  for (const auto& [key, value] : a.entries())
    if (r.contains(key.first) && c.contains(key.second)) out.emplace(key, value);
  return Array(std::move(r), std::move(c), a.semiring(), std::move(out));
}

std::map<Key, Key> key_map(const KeySet& keys,
                           const std::function<Key(const Key&)>& f) {
  std::map<Key, Key> out;
  for (const Key& k : keys) out.emplace(k, f(k));
  return out;
}

namespace {

KeySet checked_image(const KeySet& keys, const std::map<Key, Key>& f,
                     const char* which) {
  if (f.size() != keys.size())
    throw Error(std::string("rename: ") + which +
                " map does not cover the key set");
  std::vector<Key> image;
  image.reserve(f.size());
  for (const auto& [k, fk] : f) {
    if (!keys.contains(k))
      throw Error(std::string("rename: ") + which + " map names key " +
                  k.to_sexpr() + " outside the key set");
    image.push_back(fk);
  }
  KeySet img(std::move(image));
  if (img.size() != keys.size())
    throw Error(std::string("rename: ") + which + " map is not injective");
  return img;
}

}  // namespace

Array rename(const Array& a, const std::optional<std::map<Key, Key>>& row_map,
             const std::optional<std::map<Key, Key>>& col_map) {
  KeySet rows = row_map ? checked_image(a.rows(), *row_map, "row") : a.rows();
  KeySet cols = col_map ? checked_image(a.cols(), *col_map, "column") : a.cols();
  EntryMap out;
  for (const auto& [key, value] : a.entries()) {
    const Key& r = row_map ? row_map->at(key.first) : key.first;
    const Key& c = col_map ? col_map->at(key.second) : key.second;
    out.emplace(KeyPair{r, c}, value);
  }
  return Array(std::move(rows), std::move(cols), a.semiring(), std::move(out));
}

Array apply(const Array& a, const std::function<double(double)>& f) {
  const Semiring& sr = a.semiring();
  EntryMap out;
  auto emit = [&](const Key& r, const Key& c, double v) {
    double fv = f(v);
    if (!std::isfinite(fv))
      throw ValueError("apply: function undefined on value " +
                       std::to_string(v));
    out.emplace(KeyPair{r, c}, fv);
  };
  if (sr.is_zero(f(sr.zero()))) {
    for (const auto& [key, value] : a.entries())
      emit(key.first, key.second, value);
  } else {
    guard_dense(a, "apply");
    for (const Key& r : a.rows())
      for (const Key& c : a.cols()) emit(r, c, stored_or_zero(a, r, c));
  }
  return Array(a.rows(), a.cols(), sr, std::move(out));
}

Array filter(const Array& a, const std::function<bool(double)>& pred) {
  const Semiring& sr = a.semiring();
  std::set<Key> kept_rows, kept_cols;
  EntryMap out;
  auto keep = [&](const Key& r, const Key& c, double v) {
    kept_rows.insert(r);
    kept_cols.insert(c);
    if (!sr.is_zero(v)) out.emplace(KeyPair{r, c}, v);
  };
  if (pred(sr.zero())) {
    // Implicit zeros pass the indicator, so the whole dimension survives.
    guard_dense(a, "filter");
    for (const Key& r : a.rows())
      for (const Key& c : a.cols()) {
        double v = stored_or_zero(a, r, c);
        if (pred(v)) keep(r, c, v);
      }
  } else {
    for (const auto& [key, value] : a.entries())
      if (pred(value)) keep(key.first, key.second, value);
  }
  return Array(KeySet(std::vector<Key>(kept_rows.begin(), kept_rows.end())),
               KeySet(std::vector<Key>(kept_cols.begin(), kept_cols.end())),
               sr, std::move(out));
}

namespace {

// Ranks one slice: items are (value, key) over the full slice. Ascending by
// value, ties by canonical key order. Adjacent pairs of the sorted slice are
// re-checked so an incomparable chain cannot slip through the sort.
void rank_slice(const Semiring& sr, std::vector<std::pair<double, Key>>& items,
                const std::function<void(const Key&, double)>& assign) {
  std::sort(items.begin(), items.end(),
            [&](const std::pair<double, Key>& x, const std::pair<double, Key>& y) {
              switch (sr.compare(x.first, y.first)) {
                case Ordering::Less: return true;
                case Ordering::Greater: return false;
                case Ordering::Equal: return x.second < y.second;
                case Ordering::Incomparable:
                  throw ValueError("sort: incomparable values in a slice");
              }
              return false;
            });
  for (std::size_t i = 1; i < items.size(); ++i)
    if (sr.compare(items[i - 1].first, items[i].first) == Ordering::Incomparable)
      throw ValueError("sort: incomparable values in a slice");
  for (std::size_t i = 0; i < items.size(); ++i)
    assign(items[i].second, static_cast<double>(i + 1));
}

}  // namespace

Array sort(const Array& a, int axis) {
  if (axis != 1 && axis != 2) throw Error("sort: axis must be 1 or 2");
  const Semiring& sr = a.semiring();
  EntryMap out;
  std::vector<std::pair<double, Key>> items;
  if (axis == 2) {
    for (const Key& r : a.rows()) {
      items.clear();
      for (const Key& c : a.cols()) items.emplace_back(stored_or_zero(a, r, c), c);
      rank_slice(sr, items, [&](const Key& c, double rank) {
        out.emplace(KeyPair{r, c}, rank);
      });
    }
  } else {
    for (const Key& c : a.cols()) {
      items.clear();
      for (const Key& r : a.rows()) items.emplace_back(stored_or_zero(a, r, c), r);
      rank_slice(sr, items, [&](const Key& r, double rank) {
        out.emplace(KeyPair{r, c}, rank);
      });
    }
  }
  return Array(a.rows(), a.cols(), real_semiring(), std::move(out));
}

Array sort(const Array& a) {
  if (a.rows().size() == 1) return sort(a, 2);
  if (a.cols().size() == 1) return sort(a, 1);
  throw Error("sort: axis required unless one dimension is a singleton");
}

Array merge(const Array& a, const Array& b) {
  if (&a.semiring() != &b.semiring())
    throw Error("merge: operands use different semirings");
  bool products_overlap = !a.rows().disjoint_with(b.rows()) &&
                          !a.cols().disjoint_with(b.cols());
  if (products_overlap)
    throw DimensionError("merge: operand dimension products overlap");
  EntryMap out = a.entries();
  out.insert(b.entries().begin(), b.entries().end());
  return Array(a.rows().set_union(b.rows()), a.cols().set_union(b.cols()),
               a.semiring(), std::move(out));
}

Array expand(ExpandOp op, const Array& vector, const Array& matrix) {
  if (&vector.semiring() != &matrix.semiring())
    throw Error("expand: operands use different semirings");
  if (!(vector.rows() == KeySet::unit()))
    throw DimensionError("expand: vector row key set must be {1}");
  if (!(vector.cols() == matrix.cols()))
    throw DimensionError("expand: column key sets differ");
  const Semiring& sr = vector.semiring();

  std::vector<std::pair<Key, double>> vcols;
  vcols.reserve(vector.entry_count());
  for (const auto& [key, value] : vector.entries())
    vcols.emplace_back(key.second, value);

  EntryMap out;
  for (const Key& d : matrix.rows()) {
    std::vector<std::pair<Key, double>> mcols;
    for (auto it = matrix.entries().lower_bound({d, Key::unit()});
         it != matrix.entries().end() && it->first.first == d; ++it)
      mcols.emplace_back(it->first.second, it->second);
    // Walk the union of the two supports; cells absent from both stay zero
    // under either op.
    std::size_t i = 0, j = 0;
    while (i < vcols.size() || j < mcols.size()) {
      double vv = sr.zero(), mv = sr.zero();
      Key col;
      if (j >= mcols.size() ||
          (i < vcols.size() && vcols[i].first < mcols[j].first)) {
        col = vcols[i].first;
        vv = vcols[i].second;
        ++i;
      } else if (i >= vcols.size() || mcols[j].first < vcols[i].first) {
        col = mcols[j].first;
        mv = mcols[j].second;
        ++j;
      } else {
        col = vcols[i].first;
        vv = vcols[i].second;
        mv = mcols[j].second;
        ++i;
        ++j;
      }
      double value = op == ExpandOp::Add ? sr.add(vv, mv) : sr.mul(vv, mv);
      if (!sr.is_zero(value)) out.emplace(KeyPair{d, col}, value);
    }
  }
  return Array(matrix.rows(), matrix.cols(), sr, std::move(out));
}

Array flatten(const Array& a) {
  EntryMap out;
  for (const auto& [key, value] : a.entries())
    out.emplace(KeyPair{Key::unit(), Key::pair(key.first, key.second)}, value);
  return Array(KeySet::unit(), KeySet::product(a.rows(), a.cols()),
               a.semiring(), std::move(out));
}

namespace {

void require_index_columns(const Array& n, const char* op) {
  std::int64_t expected = 1;
  for (const Key& c : n.cols()) {
    if (c.kind() != Key::Kind::Int || c.int_value() != expected)
      throw Error(std::string(op) +
                  ": columns must form the contiguous index set {1..n}");
    ++expected;
  }
}

}  // namespace

Array lshift(const Array& n, std::int64_t shift) {
  if (shift < 0) throw Error("lshift: shift must be non-negative");
  require_index_columns(n, "lshift");
  EntryMap out;
  for (const auto& [key, value] : n.entries()) {
    std::int64_t i = key.second.int_value();
    if (i - shift >= 1)
      out.emplace(KeyPair{key.first, Key::integer(i - shift)}, value);
  }
  return Array(n.rows(), n.cols(), n.semiring(), std::move(out));
}

Array tim_union(const Array& n1, const Array& n2) {
  if (&n1.semiring() != &n2.semiring())
    throw Error("union: operands use different semirings");
  if (!(n1.cols() == n2.cols()))
    throw DimensionError("union: index-set mismatch");
  const Semiring& sr = n1.semiring();

  std::optional<Key> doc;
  auto terms_of = [&doc](const KeySet& rows) {
    std::vector<Key> terms;
    terms.reserve(rows.size());
    for (const Key& r : rows) {
      if (!r.is_pair())
        throw Error("union: row keys must be (document, term) pairs");
      if (!doc)
        doc = r.first();
      else if (!(*doc == r.first()))
        throw Error("union: operands span more than one document");
      terms.push_back(r.second());
    }
    return terms;
  };
  std::vector<Key> t1 = terms_of(n1.rows());
  std::vector<Key> t2 = terms_of(n2.rows());

  std::vector<Key> row_keys;
  row_keys.reserve(t1.size() * t2.size());
  for (const Key& a : t1)
    for (const Key& b : t2)
      row_keys.push_back(Key::pair(*doc, Key::pair(a, b)));

  // Per index position, combine every marked term of n1 with every marked
  // term of n2.
  auto by_column = [](const Array& n) {
    std::map<Key, std::vector<std::pair<Key, double>>> cols;
    for (const auto& [key, value] : n.entries())
      cols[key.second].emplace_back(key.first.second(), value);
    return cols;
  };
  auto c1 = by_column(n1);
  auto c2 = by_column(n2);

  EntryMap out;
  for (const auto& [index, marks1] : c1) {
    auto it = c2.find(index);
    if (it == c2.end()) continue;
    for (const auto& [term1, v1] : marks1)
      for (const auto& [term2, v2] : it->second)
        out.emplace(KeyPair{Key::pair(*doc, Key::pair(term1, term2)), index},
                    sr.mul(v1, v2));
  }
  return Array(KeySet(std::move(row_keys)), n1.cols(), sr, std::move(out));
}

Array sum(const Array& a, int axis) {
  const Semiring& sr = a.semiring();
  EntryMap out;
  if (axis == 1) {
    for (const auto& [key, value] : a.entries()) {
      auto [slot, inserted] =
          out.try_emplace(KeyPair{Key::unit(), key.second}, sr.zero());
      slot->second = sr.add(slot->second, value);
    }
    return Array(KeySet::unit(), a.cols(), sr, std::move(out));
  }
  if (axis == 2) {
    for (const auto& [key, value] : a.entries()) {
      auto [slot, inserted] =
          out.try_emplace(KeyPair{key.first, Key::unit()}, sr.zero());
      slot->second = sr.add(slot->second, value);
    }
    return Array(a.rows(), KeySet::unit(), sr, std::move(out));
  }
  throw Error("sum: axis must be 1 or 2");
}

}  // namespace taa
