#include "qfuse/word.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace qfuse;

namespace {
const IndexSet Nat = IndexSet::naturals();
const IndexSet Mod2 = IndexSet::mod_even(2);
} // namespace

TEST_CASE("index set construction")
{
  CHECK_THROWS(IndexSet::mod_even(3));
  CHECK_THROWS(IndexSet::mod_even(0));
  CHECK(IndexSet::mod_even(4).modulus() == 4);
  CHECK_THROWS(Word(Nat, {-1}));
  CHECK(Word(Mod2, {5}).letters() == std::vector<std::int64_t>{1});
}

TEST_CASE("concat")
{
  CHECK(concat(Word(Nat, {0, 1}), Word(Nat, {0})) == Word(Nat, {0, 1, 0}));
  CHECK(concat(Word(Nat), Word(Nat, {2})) == Word(Nat, {2}));
  CHECK(concat(Word(Mod2, {0, 1}), Word(Mod2, {1, 0})) == Word(Mod2, {0, 1, 1, 0}));
  CHECK_THROWS(concat(Word(Nat, {0}), Word(Mod2, {0})));
}

TEST_CASE("star")
{
  CHECK(star(Word(Nat, {0, 2, 1})) == Word(Nat, {2, 3, 1}));
  CHECK(star(Word(Mod2, {0, 1})) == Word(Mod2, {0, 1}));
  CHECK(star(Word(Nat)) == Word(Nat));
}

TEST_CASE("linked")
{
  CHECK(linked(Word(Nat, {0}), Word(Nat, {1})));
  CHECK_FALSE(linked(Word(Nat, {0}), Word(Nat, {0})));
  CHECK(linked(Word(Nat), Word(Nat)));
  CHECK_THROWS(linked(Word(Nat, {0}), Word(Mod2, {0})));
}

TEST_CASE("is_one_step")
{
  CHECK(is_one_step(Word(Nat, {0, 1, 0, 1})));
  CHECK_FALSE(is_one_step(Word(Nat, {0, 2})));
  CHECK(is_one_step(Word(Mod2, {0, 1, 0})));
  CHECK(is_one_step(Word(Nat)));
}

TEST_CASE("star twice shifts letters by two")
{
  for (const IndexSet &R : {Nat, IndexSet::integers(), Mod2, IndexSet::mod_even(4)}) {
    std::int64_t hi = R.kind() == IndexKind::ModEven ? R.modulus() - 1 : 3;
    for (const Word &w : oracle::words_in_window(R, 0, hi, 3)) {
      Word ww = star(star(w));
      REQUIRE(ww.size() == w.size());
      for (std::size_t k = 0; k < w.size(); ++k)
        CHECK(ww.letter(k) == R.canonical(w.letter(k) + 2));
    }
  }
}

TEST_CASE("linked is symmetric and star is anti-multiplicative")
{
  auto words = oracle::words_in_window(Nat, 0, 3, 3);
  for (const Word &a : words)
    for (const Word &b : words) {
      CHECK(linked(a, b) == linked(b, a));
      CHECK(star(concat(a, b)) == concat(star(b), star(a)));
    }
}
