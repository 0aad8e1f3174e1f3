#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "taa/array.hpp"
#include "taa/errors.hpp"

using namespace taa;
using namespace taa::oracles;

namespace {

const Key ka = Key::str("a");
const Key kb = Key::str("b");
const Key kx = Key::str("x");
const Key ky = Key::str("y");

bool no_stored_zero(const Array& a) {
  for (const auto& [key, value] : a.entries())
    if (a.semiring().is_zero(value)) return false;
  return true;
}

}  // namespace

TEST_CASE("zeros stores nothing and reads back zero") {
  Array z = Array::zeros(KeySet{ka}, KeySet{kx, ky});
  CHECK(z.entry_count() == 0);
  CHECK(z.at(ka, kx) == 0.0);

  Array empty_rows = Array::zeros(KeySet{}, KeySet{kx});
  CHECK(empty_rows.rows().empty());
  CHECK(empty_rows.entry_count() == 0);
}

TEST_CASE("zeros is the additive identity on random arrays") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    KeySet rows = random_key_set(rng, 4, 1);
    KeySet cols = random_key_set(rng, 4, 1);
    Array a = random_array(rng, rows, cols, 0.5);
    CHECK(add(a, Array::zeros(rows, cols)) == a);
  }
}

TEST_CASE("ones is the hadamard identity and stores the full grid") {
  std::mt19937_64 rng(2);
  KeySet rows = random_key_set(rng, 3, 1);
  KeySet cols = random_key_set(rng, 3, 1);
  Array a = random_array(rng, rows, cols, 0.6);
  CHECK(hadamard(a, Array::ones(rows, cols)) == a);
  CHECK(Array::ones(rows, cols).entry_count() == rows.size() * cols.size());
}

TEST_CASE("construction rejects out-of-dimension entries and drops zeros") {
  EntryMap entries;
  entries.emplace(KeyPair{ka, kx}, 2.0);
  entries.emplace(KeyPair{ka, ky}, 0.0);
  Array a(KeySet{ka}, KeySet{kx, ky}, real_semiring(), entries);
  CHECK(a.entry_count() == 1);

  EntryMap bad;
  bad.emplace(KeyPair{kb, kx}, 1.0);
  CHECK_THROWS_AS(Array(KeySet{ka}, KeySet{kx}, real_semiring(), bad),
                  DimensionError);
}

TEST_CASE("add combines disjoint supports and cancels to implicit zeros") {
  EntryMap ea, eb;
  ea.emplace(KeyPair{ka, kx}, 2.0);
  eb.emplace(KeyPair{ka, ky}, 3.0);
  Array a(KeySet{ka}, KeySet{kx, ky}, real_semiring(), ea);
  Array b(KeySet{ka}, KeySet{kx, ky}, real_semiring(), eb);
  Array c = add(a, b);
  CHECK(c.at(ka, kx) == 2.0);
  CHECK(c.at(ka, ky) == 3.0);
  CHECK(c == dense_add(a, b));

  // 2 + (-2) cancels: entry vanishes, dimension stays
  EntryMap en;
  en.emplace(KeyPair{ka, kx}, -2.0);
  Array neg(KeySet{ka}, KeySet{kx, ky}, real_semiring(), en);
  Array sum = add(a, neg);
  CHECK(sum.entry_count() == 0);
  CHECK(sum.rows() == a.rows());
  CHECK(sum.cols() == a.cols());
  CHECK(sum == dense_add(a, neg));
}

TEST_CASE("add rejects mismatched dimensions and semirings") {
  Array a = Array::zeros(KeySet{ka}, KeySet{kx});
  Array b = Array::zeros(KeySet{kb}, KeySet{kx});
  CHECK_THROWS_AS(add(a, b), DimensionError);
  Array c = Array::zeros(KeySet{ka}, KeySet{kx}, boolean_semiring());
  CHECK_THROWS_AS(add(a, c), Error);
}

TEST_CASE("hadamard multiplies overlapping entries only") {
  EntryMap ea, eb;
  ea.emplace(KeyPair{ka, kx}, 2.0);
  ea.emplace(KeyPair{ka, ky}, 5.0);
  eb.emplace(KeyPair{ka, kx}, 3.0);
  Array a(KeySet{ka}, KeySet{kx, ky}, real_semiring(), ea);
  Array b(KeySet{ka}, KeySet{kx, ky}, real_semiring(), eb);
  Array c = hadamard(a, b);
  CHECK(c.entry_count() == 1);
  CHECK(c.at(ka, kx) == 6.0);
  CHECK(c == dense_hadamard(a, b));

  Array zero = Array::zeros(a.rows(), a.cols());
  CHECK(hadamard(a, zero) == zero);
}

TEST_CASE("matmul of the example term-index matrix with its transpose is "
          "identity-patterned") {
  Array n = fixtures::example_tim();
  Array c = matmul(n, transpose(n));
  CHECK(c == dense_matmul(n, transpose(n)));
  CHECK(c.entry_count() == 5);
  for (const Key& r : n.rows()) CHECK(c.at(r, r) == 1.0);
}

TEST_CASE("matmul sums a single product term") {
  EntryMap ea, eb;
  ea.emplace(KeyPair{ka, kx}, 2.0);
  const Key kp = Key::str("p");
  const Key kq = Key::str("q");
  eb.emplace(KeyPair{kx, kp}, 3.0);
  Array a(KeySet{ka}, KeySet{kx}, real_semiring(), ea);
  Array b(KeySet{kx}, KeySet{kp, kq}, real_semiring(), eb);
  Array c = matmul(a, b);
  CHECK(c.at(ka, kp) == 6.0);
  CHECK(c.at(ka, kq) == 0.0);
  CHECK_THROWS_AS(matmul(b, a), DimensionError);
}

TEST_CASE("array identity defaults to the key-set intersection") {
  Array e = array_identity(KeySet{ka, kb}, KeySet{kb, Key::str("c")});
  CHECK(e.entry_count() == 1);
  CHECK(e.at(kb, kb) == 1.0);
}

TEST_CASE("array identity with an explicit partial map") {
  std::map<Key, Key> f{{ka, kx}};
  Array e = array_identity(KeySet{ka, kb}, KeySet{kx}, f);
  CHECK(e.entry_count() == 1);
  CHECK(e.at(ka, kx) == 1.0);

  std::map<Key, Key> bad{{ka, ky}};
  CHECK_THROWS_AS(array_identity(KeySet{ka}, KeySet{kx}, bad), DimensionError);
  // non-injective maps are allowed here; rename enforces bijectivity itself
  std::map<Key, Key> squash{{ka, kx}, {kb, kx}};
  CHECK(array_identity(KeySet{ka, kb}, KeySet{kx}, squash).entry_count() == 2);
}

TEST_CASE("identity-on-K is a matmul identity") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    KeySet rows = random_key_set(rng, 4, 1);
    KeySet cols = random_key_set(rng, 4, 1);
    Array a = random_array(rng, rows, cols, 0.5);
    CHECK(matmul(array_identity(rows, rows), a) == a);
    CHECK(matmul(a, array_identity(cols, cols)) == a);
  }
}

TEST_CASE("kronecker tracks dimensions and entry products") {
  std::mt19937_64 rng(4);
  KeySet r1 = random_key_set(rng, 3, 0);
  KeySet c1 = random_key_set(rng, 2, 0);
  KeySet r2 = random_key_set(rng, 2, 0);
  KeySet c2 = random_key_set(rng, 3, 0);
  Array a = random_array(rng, r1, c1, 0.7);
  Array b = random_array(rng, r2, c2, 0.7);
  Array c = kronecker(a, b);
  CHECK(c.rows().size() == r1.size() * r2.size());
  CHECK(c.cols().size() == c1.size() * c2.size());
  CHECK(c.entry_count() == a.entry_count() * b.entry_count());
  CHECK(c == dense_kronecker(a, b));
}

TEST_CASE("kronecker with the scalar one re-wraps keys only") {
  EntryMap ea;
  ea.emplace(KeyPair{ka, kx}, 2.5);
  Array a(KeySet{ka, kb}, KeySet{kx}, real_semiring(), ea);
  Array one = Array::ones(KeySet::unit(), KeySet::unit());
  Array c = kronecker(a, one);
  CHECK(c.rows().size() == a.rows().size());
  CHECK(c.at(Key::pair(ka, Key::unit()), Key::pair(kx, Key::unit())) == 2.5);
}

TEST_CASE("kronecker expansion of a term vector against a ones column") {
  // V over {1} x T expands into dimension ({1} x D) x (T x {1}) holding
  // V(1,t) at ((1,d),(t,1)).
  const Key d1 = Key::doc("d1");
  const Key d2 = Key::doc("d2");
  EntryMap ev;
  ev.emplace(KeyPair{Key::unit(), kx}, 3.0);
  Array v(KeySet::unit(), KeySet{kx, ky}, real_semiring(), ev);
  Array ones_col = Array::ones(KeySet{d1, d2}, KeySet::unit());
  Array c = kronecker(v, ones_col);
  CHECK(c.rows() == KeySet::product(KeySet::unit(), KeySet{d1, d2}));
  CHECK(c.cols() == KeySet::product(KeySet{kx, ky}, KeySet::unit()));
  CHECK(c.at(Key::pair(Key::unit(), d1), Key::pair(kx, Key::unit())) == 3.0);
  CHECK(c.at(Key::pair(Key::unit(), d2), Key::pair(kx, Key::unit())) == 3.0);
  CHECK(c.at(Key::pair(Key::unit(), d2), Key::pair(ky, Key::unit())) == 0.0);
}

TEST_CASE("transpose is an involution that swaps the dimension") {
  std::mt19937_64 rng(5);
  KeySet rows = random_key_set(rng, 4, 1);
  KeySet cols = random_key_set(rng, 3, 1);
  Array a = random_array(rng, rows, cols, 0.5);
  Array t = transpose(a);
  CHECK(t.rows() == cols);
  CHECK(t.cols() == rows);
  CHECK(transpose(t) == a);
  CHECK(t == dense_transpose(a));
}

TEST_CASE("lookup honors the sparsity contract") {
  EntryMap e;
  e.emplace(KeyPair{ka, kx}, 4.0);
  Array a(KeySet{ka}, KeySet{kx, ky}, real_semiring(), e);
  CHECK(a.at(ka, kx) == 4.0);
  CHECK(a.at(ka, ky) == 0.0);
  CHECK_THROWS_AS(a.at(kb, kx), DimensionError);
  CHECK_THROWS_AS(a.at(ka, Key::str("zz")), DimensionError);
}

TEST_CASE("boolean arrays multiply with or/and") {
  EntryMap ea, eb;
  ea.emplace(KeyPair{ka, kx}, 1.0);
  ea.emplace(KeyPair{ka, ky}, 1.0);
  eb.emplace(KeyPair{kx, kb}, 1.0);
  eb.emplace(KeyPair{ky, kb}, 1.0);
  Array a(KeySet{ka}, KeySet{kx, ky}, boolean_semiring(), ea);
  Array b(KeySet{kx, ky}, KeySet{kb}, boolean_semiring(), eb);
  Array c = matmul(a, b);
  CHECK(c.at(ka, kb) == 1.0);  // OR of two ANDs saturates at 1
  CHECK(c == dense_matmul(a, b));
}

TEST_CASE("core operations match the dense oracles on random arrays") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Semiring& sr =
        (i % 4 == 0) ? boolean_semiring() : real_semiring();
    KeySet r = random_key_set(rng, 1 + rng() % 6, 2);
    KeySet m = random_key_set(rng, 1 + rng() % 6, 2);
    KeySet c = random_key_set(rng, 1 + rng() % 6, 2);
    Array a = random_array(rng, r, m, 0.5, sr);
    Array b = random_array(rng, m, c, 0.5, sr);
    Array same = random_array(rng, r, m, 0.5, sr);

    CHECK(add(a, same) == dense_add(a, same));
    CHECK(hadamard(a, same) == dense_hadamard(a, same));
    CHECK(transpose(a) == dense_transpose(a));
    CHECK(approx_equal(matmul(a, b), dense_matmul(a, b), 1e-12));
    CHECK(kronecker(a, b) == dense_kronecker(a, b));

    for (const Array* out : {&a, &b, &same}) CHECK(no_stored_zero(*out));
    CHECK(no_stored_zero(add(a, same)));
    CHECK(no_stored_zero(matmul(a, b)));
  }
}

TEST_CASE("matmul is associative and distributes over add") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 100; ++i) {
    KeySet k1 = random_key_set(rng, 1 + rng() % 5, 1);
    KeySet k2 = random_key_set(rng, 1 + rng() % 5, 1);
    KeySet k3 = random_key_set(rng, 1 + rng() % 5, 1);
    KeySet k4 = random_key_set(rng, 1 + rng() % 5, 1);
    Array a = random_array(rng, k1, k2, 0.5);
    Array b = random_array(rng, k2, k3, 0.5);
    Array b2 = random_array(rng, k2, k3, 0.5);
    Array c = random_array(rng, k3, k4, 0.5);

    CHECK(approx_equal(matmul(matmul(a, b), c), matmul(a, matmul(b, c)), 1e-9));
    CHECK(approx_equal(matmul(a, add(b, b2)),
                       add(matmul(a, b), matmul(a, b2)), 1e-9));
    CHECK(approx_equal(transpose(matmul(a, b)),
                       matmul(transpose(b), transpose(a)), 1e-12));
  }
}
