#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "taa/errors.hpp"
#include "taa/io.hpp"

using namespace taa;
using namespace taa::oracles;

TEST_CASE("key s-expressions parse back exactly") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Key k = random_key(rng, 3);
    CHECK(parse_key(k.to_sexpr()) == k);
  }
  Key awkward = Key::pair(Key::str("tab\there \"quoted\" back\\slash"),
                          Key::doc("line\nbreak"));
  CHECK(parse_key(awkward.to_sexpr()) == awkward);
}

TEST_CASE("key parser rejects malformed input") {
  CHECK_THROWS_AS(parse_key("(unit"), ParseError);
  CHECK_THROWS_AS(parse_key("(int x)"), ParseError);
  CHECK_THROWS_AS(parse_key("(str \"unterminated)"), ParseError);
  CHECK_THROWS_AS(parse_key("(frob 1)"), ParseError);
  CHECK_THROWS_AS(parse_key("(unit) junk"), ParseError);
  CHECK_THROWS_AS(parse_key(""), ParseError);
}

TEST_CASE("triple and JSON round-trips are exact for random arrays") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const Semiring& sr = i % 3 == 0 ? boolean_semiring() : real_semiring();
    // depth-3 nested pair keys exercise the recursive encodings
    KeySet rows = random_key_set(rng, 1 + rng() % 6, 3);
    KeySet cols = random_key_set(rng, 1 + rng() % 6, 3);
    Array a = random_array(rng, rows, cols, 0.5, sr);
    CHECK(from_triples(to_triples(a)) == a);
    CHECK(from_json(to_json(a)) == a);
    // a second pass through the printed JSON text
    CHECK(from_json(nlohmann::json::parse(to_json(a).dump())) == a);
  }
}

TEST_CASE("round-trips preserve awkward values and empty dimensions") {
  EntryMap e;
  e.emplace(KeyPair{Key::str("a"), Key::str("x")}, 0.1);
  e.emplace(KeyPair{Key::str("a"), Key::str("y")}, 1.0 / 3.0);
  e.emplace(KeyPair{Key::str("b"), Key::str("x")}, -2.5e-17);
  Array a(KeySet{Key::str("a"), Key::str("b")},
          KeySet{Key::str("x"), Key::str("y")}, real_semiring(), e);
  CHECK(from_triples(to_triples(a)) == a);
  CHECK(from_json(to_json(a)) == a);

  Array empty = Array::zeros(KeySet{}, KeySet{Key::str("x")});
  CHECK(from_triples(to_triples(empty)) == empty);
  CHECK(from_json(to_json(empty)) == empty);
}

TEST_CASE("triple parser reports malformed files") {
  CHECK_THROWS_AS(from_triples("nonsense\n"), ParseError);
  CHECK_THROWS_AS(from_triples("taa triples 1\nsemiring unobtainium\n"),
                  ParseError);
  CHECK_THROWS_AS(from_triples("taa triples 1\nsemiring real\nrows 1\n"),
                  ParseError);  // truncated
  CHECK_THROWS_AS(
      from_triples("taa triples 1\nsemiring real\nrows 0\ncols 0\n"
                   "entries 1\n(unit)\t(unit)\n"),
      ParseError);  // missing value field
  // entry outside the declared dimension
  CHECK_THROWS_AS(
      from_triples("taa triples 1\nsemiring real\nrows 1\n(str \"a\")\n"
                   "cols 1\n(str \"x\")\nentries 1\n"
                   "(str \"b\")\t(str \"x\")\t1\n"),
      ParseError);
}

TEST_CASE("json parser validates structure") {
  CHECK_THROWS_AS(from_json(nlohmann::json{{"format", "other"}}), ParseError);
  nlohmann::json bad_key{{"format", "taa"},
                         {"semiring", "real"},
                         {"rows", nlohmann::json::array({"oops"})},
                         {"cols", nlohmann::json::array()},
                         {"entries", nlohmann::json::array()}};
  CHECK_THROWS_AS(from_json(bad_key), ParseError);
}

TEST_CASE("csv export quotes fields that need it") {
  EntryMap e;
  e.emplace(KeyPair{Key::str("a,b"), Key::str("x")}, 2.0);
  Array a(KeySet{Key::str("a,b")}, KeySet{Key::str("x")}, real_semiring(), e);
  std::string csv = to_csv(a);
  CHECK(csv.find("row,col,value\n") == 0);
  CHECK(csv.find("\"(str \"\"a,b\"\")\"") != std::string::npos);
}

TEST_CASE("array files round-trip through disk with format sniffing") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "taa_io_test";
  fs::create_directories(dir);
  std::mt19937_64 rng(23);
  Array a = random_array(rng, random_key_set(rng, 4, 2),
                         random_key_set(rng, 4, 2), 0.6);
  write_array_file(a, dir / "a.triples", Format::Triples);
  write_array_file(a, dir / "a.json", Format::Json);
  CHECK(read_array_file(dir / "a.triples") == a);
  CHECK(read_array_file(dir / "a.json") == a);
  CHECK_THROWS_AS(read_array_file(dir / "missing.triples"), Error);

  atomic_write_file(dir / "corrupt.triples", "taa triples 1\ngarbage\n");
  CHECK_THROWS_AS(read_array_file(dir / "corrupt.triples"), ParseError);
  fs::remove_all(dir);
}

TEST_CASE("format names resolve") {
  CHECK(format_from_name("triples") == Format::Triples);
  CHECK(format_from_name("json") == Format::Json);
  CHECK(format_from_name("csv") == Format::Csv);
  CHECK_THROWS_AS(format_from_name("xml"), Error);
  CHECK(format_extension(Format::Json) == "json");
}
