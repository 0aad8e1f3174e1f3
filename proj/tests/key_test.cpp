#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "taa/errors.hpp"
#include "taa/key.hpp"

using namespace taa;

TEST_CASE("canonical key order: tag order, then content") {
  Key unit = Key::unit();
  Key two = Key::integer(2);
  Key ten = Key::integer(10);
  Key alpha = Key::str("alpha");
  Key beta = Key::str("beta");
  Key d1 = Key::doc("d1");
  Key p = Key::pair(unit, unit);

  CHECK(unit < two);
  CHECK(two < ten);
  CHECK(ten < alpha);
  CHECK(alpha < beta);
  CHECK(beta < d1);
  CHECK(d1 < p);

  // pairs compare lexicographically
  CHECK(Key::pair(alpha, beta) < Key::pair(beta, alpha));
  CHECK(Key::pair(alpha, alpha) < Key::pair(alpha, beta));
  CHECK(Key::pair(alpha, beta) == Key::pair(alpha, beta));

  // same text, different tag
  CHECK(Key::str("d1") < Key::doc("d1"));
  CHECK_FALSE(Key::str("d1") == Key::doc("d1"));
}

TEST_CASE("pairs nest to arbitrary depth") {
  Key trigram =
      Key::pair(Key::pair(Key::str("john"), Key::str("f")), Key::str("kennedy"));
  CHECK(trigram.first().is_pair());
  CHECK(trigram.first().first().text() == "john");
  CHECK(trigram.second().text() == "kennedy");
  CHECK(trigram == Key::pair(Key::pair(Key::str("john"), Key::str("f")),
                             Key::str("kennedy")));
}

TEST_CASE("key accessors reject wrong kinds") {
  CHECK_THROWS_AS(Key::unit().int_value(), Error);
  CHECK_THROWS_AS(Key::integer(3).text(), Error);
  CHECK_THROWS_AS(Key::str("x").first(), Error);
}

TEST_CASE("s-expression rendering") {
  CHECK(Key::unit().to_sexpr() == "(unit)");
  CHECK(Key::integer(-4).to_sexpr() == "(int -4)");
  CHECK(Key::pair(Key::doc("d1"), Key::str("sunny")).to_sexpr() ==
        "(pair (doc \"d1\") (str \"sunny\"))");
  CHECK(Key::str("a\"b\\c").to_sexpr() == "(str \"a\\\"b\\\\c\")");
  CHECK(Key::str("a\tb").to_sexpr() == "(str \"a\\tb\")");
}

TEST_CASE("key sets sort and deduplicate") {
  KeySet ks{Key::str("b"), Key::str("a"), Key::str("b"), Key::integer(7)};
  CHECK(ks.size() == 3);
  CHECK(ks.at(0) == Key::integer(7));
  CHECK(ks.at(1) == Key::str("a"));
  CHECK(ks.at(2) == Key::str("b"));
  CHECK(ks.contains(Key::str("a")));
  CHECK_FALSE(ks.contains(Key::str("c")));
}

TEST_CASE("key set algebra") {
  KeySet a{Key::str("a"), Key::str("b")};
  KeySet b{Key::str("b"), Key::str("c")};
  CHECK(a.set_union(b) == KeySet{Key::str("a"), Key::str("b"), Key::str("c")});
  CHECK(a.intersect(b) == KeySet{Key::str("b")});
  CHECK_FALSE(a.disjoint_with(b));
  CHECK(a.disjoint_with(KeySet{Key::str("c")}));
  CHECK(KeySet{Key::str("b")}.subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(KeySet{}.subset_of(a));
  CHECK(KeySet{}.disjoint_with(KeySet{}));
}

TEST_CASE("key set product is ordered row-major") {
  KeySet left{Key::str("a"), Key::str("b")};
  KeySet right{Key::integer(1), Key::integer(2)};
  KeySet prod = KeySet::product(left, right);
  REQUIRE(prod.size() == 4);
  CHECK(prod.at(0) == Key::pair(Key::str("a"), Key::integer(1)));
  CHECK(prod.at(1) == Key::pair(Key::str("a"), Key::integer(2)));
  CHECK(prod.at(2) == Key::pair(Key::str("b"), Key::integer(1)));
  CHECK(prod.at(3) == Key::pair(Key::str("b"), Key::integer(2)));
  CHECK(KeySet::product(KeySet{}, right).empty());
}
