#include "qfuse/configuration.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qfuse;

namespace {
const IndexSet Nat = IndexSet::naturals();
const IndexSet Intg = IndexSet::integers();

Configuration C(const std::string &s) { return Configuration::decode(s); }
} // namespace

TEST_CASE("is_valid on the worked examples")
{
  CHECK(is_valid(Word(Intg, {1, 2, 1}), C("().")));
  CHECK(is_valid(Word(Intg, {1, 2, 1}), C(".()")));
  CHECK_FALSE(is_valid(Word(Intg, {1, 3}), C("()")));
  CHECK(is_valid(Word(Nat, {0}), C(".")));
  CHECK_THROWS(is_valid(Word(Nat, {0}), C("..")));
}

TEST_CASE("enumerate matches the worked counts")
{
  CHECK(enumerate_configurations(Word(Intg, {1, 2, 1})).size() == 3);
  CHECK(enumerate_configurations(Word(Intg, {1, 2, 1, 2})).size() == 6);
  CHECK(enumerate_configurations(Word(Nat, {0, 0})).size() == 1);
  CHECK(enumerate_configurations(Word(Nat)).size() == 1);
}

TEST_CASE("residual")
{
  CHECK(residual(Word(Intg, {1, 2, 1}), C("().")) == Word(Intg, {1}));
  CHECK(residual(Word(Nat, {0, 1, 2, 1}), C("(())")) == Word(Nat));
  Word w(Nat, {0, 2, 0});
  CHECK(residual(w, Configuration::all_blank(3)) == w);
  CHECK_THROWS(residual(Word(Nat, {0, 0}), C("()")));
}

TEST_CASE("enumerate agrees with the 3^k filter")
{
  auto check_word = [](const Word &w) {
    auto fast = enumerate_configurations(w);
    auto slow = oracle::brute_force_configurations(w);
    REQUIRE(fast.size() == slow.size());
    auto key = [](const Configuration &c) { return c.encode(); };
    std::vector<std::string> a, b;
    for (const auto &c : fast) a.push_back(key(c));
    for (const auto &c : slow) b.push_back(key(c));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    // duplicate-free
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  };
  for (const Word &w : oracle::words_in_window(Nat, 0, 2, 5)) check_word(w);
  // a few longer 1-step words, where configurations are densest
  check_word(Word(Nat, {0, 1, 0, 1, 0, 1, 0, 1}));
  check_word(Word(Nat, {1, 2, 1, 2, 3, 2, 1, 0}));
  check_word(Word(IndexSet::mod_even(2), {0, 1, 0, 1, 0, 1, 0, 1}));
}

TEST_CASE("matched pairs span odd offsets")
{
  for (const Word &w : oracle::words_in_window(Nat, 0, 2, 6)) {
    for (const Configuration &c : enumerate_configurations(w)) {
      std::vector<std::size_t> stack;
      for (std::size_t k = 0; k < c.symbols.size(); ++k) {
        if (c.symbols[k] == Symbol::Open) stack.push_back(k);
        if (c.symbols[k] == Symbol::Close) {
          CHECK((k - stack.back()) % 2 == 1);
          stack.pop_back();
        }
      }
    }
  }
}

TEST_CASE("transitivity across an adjacent pair")
{
  for (const Word &w : oracle::words_in_window(Nat, 0, 2, 6)) {
    for (const Configuration &c : enumerate_configurations(w)) {
      // look for a matched pair at (i, i+1)
      for (std::size_t i = 0; i + 1 < c.symbols.size(); ++i) {
        if (c.symbols[i] != Symbol::Open || c.symbols[i + 1] != Symbol::Close)
          continue;
        Configuration d = Configuration::all_blank(w.size());
        d.symbols[i] = Symbol::Open;
        d.symbols[i + 1] = Symbol::Close;
        Word wd = residual(w, d);
        Configuration dprime;
        for (std::size_t k = 0; k < c.symbols.size(); ++k)
          if (k != i && k != i + 1) dprime.symbols.push_back(c.symbols[k]);
        CHECK(residual(w, c) == residual(wd, dprime));
      }
    }
  }
}
