#include "qfuse/ring.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace qfuse;

namespace {

const IndexSet Nat = IndexSet::naturals();
const IndexSet Mod2 = IndexSet::mod_even(2);

RingElement f_word(const IndexSet &R, std::initializer_list<std::int64_t> letters,
                   Int c = 1)
{
  return RingElement::basis_word(Word(R, letters), Basis::F, std::move(c));
}

RingElement u_word(const IndexSet &R, std::initializer_list<std::int64_t> letters,
                   Int c = 1)
{
  return RingElement::basis_word(Word(R, letters), Basis::U, std::move(c));
}

} // namespace

TEST_CASE("add")
{
  CHECK(add(f_word(Nat, {0}), f_word(Nat, {0}, -1)).is_zero());
  RingElement e = add(f_word(Nat, {0}, 2), f_word(Nat, {1}, 3));
  CHECK(e.coeff(Word(Nat, {0})) == 2);
  CHECK(e.coeff(Word(Nat, {1})) == 3);
  CHECK(add(f_word(Nat, {}), f_word(Nat, {})).coeff(Word(Nat)) == 2);
  CHECK_THROWS(add(f_word(Nat, {0}), u_word(Nat, {0})));
}

TEST_CASE("f_product")
{
  CHECK(f_product(f_word(Nat, {0}), f_word(Nat, {1})) == f_word(Nat, {0, 1}));
  CHECK(f_product(f_word(Nat, {}), f_word(Nat, {0, 2})) == f_word(Nat, {0, 2}));
  RingElement sum = add(f_word(Nat, {0}), f_word(Nat, {1}));
  CHECK(f_product(sum, f_word(Nat, {0})) ==
        add(f_word(Nat, {0, 0}), f_word(Nat, {1, 0})));
  CHECK_THROWS(f_product(u_word(Nat, {0}), u_word(Nat, {0})));
}

TEST_CASE("odot basics")
{
  RingElement e = odot(u_word(Nat, {0}), u_word(Nat, {1}));
  CHECK(e == add(u_word(Nat, {0, 1}), u_word(Nat, {})));

  CHECK(odot(u_word(Nat, {0}), u_word(Nat, {0})) == u_word(Nat, {0, 0}));

  RingElement m = odot(u_word(Mod2, {0, 1}), u_word(Mod2, {0, 1}));
  CHECK(m == add(add(u_word(Mod2, {0, 1, 0, 1}), u_word(Mod2, {0, 1})),
                 u_word(Mod2, {})));
}

TEST_CASE("odot agrees with the splitting oracle")
{
  for (const IndexSet &R : {Nat, Mod2}) {
    std::int64_t hi = R.kind() == IndexKind::ModEven ? 1 : 2;
    auto words = oracle::words_in_window(R, 0, hi, 3);
    for (const Word &r : words)
      for (const Word &s : words)
        CHECK(odot(RingElement::basis_word(r, Basis::U),
                   RingElement::basis_word(s, Basis::U)) ==
              oracle::odot_word_oracle(r, s));
  }
}

TEST_CASE("star_element")
{
  CHECK(star_element(u_word(Nat, {0})) == u_word(Nat, {1}));
  CHECK(star_element(f_word(Nat, {}, 5)) == f_word(Nat, {}, 5));
  CHECK(star_element(f_word(Nat, {0, 1})) == f_word(Nat, {2, 1}));

  // anti-endomorphism for both products at desk scale
  auto words = oracle::words_in_window(Nat, 0, 2, 3);
  for (const Word &a : words)
    for (const Word &b : words) {
      RingElement fa = RingElement::basis_word(a, Basis::F);
      RingElement fb = RingElement::basis_word(b, Basis::F);
      CHECK(star_element(f_product(fa, fb)) ==
            f_product(star_element(fb), star_element(fa)));
      RingElement ua = RingElement::basis_word(a, Basis::U);
      RingElement ub = RingElement::basis_word(b, Basis::U);
      CHECK(star_element(odot(ua, ub)) == odot(star_element(ub), star_element(ua)));
    }
}

TEST_CASE("expand_f")
{
  CHECK(expand_f(Word(Nat, {0, 1})) == add(u_word(Nat, {0, 1}), u_word(Nat, {})));
  CHECK(expand_f(Word(Nat, {0, 1, 0})) ==
        add(u_word(Nat, {0, 1, 0}), u_word(Nat, {0}, 2)));
  CHECK(expand_f(Word(Nat, {0})) == u_word(Nat, {0}));
}

TEST_CASE("change of basis")
{
  CHECK(to_u_basis(f_word(Nat, {0, 1})) ==
        add(u_word(Nat, {0, 1}), u_word(Nat, {})));
  CHECK(to_f_basis(u_word(Nat, {0, 1})) ==
        add(f_word(Nat, {0, 1}), f_word(Nat, {}, -1)));
  CHECK(to_u_basis(f_word(Nat, {})) == u_word(Nat, {}));

  for (const Word &w : oracle::words_in_window(Nat, 0, 3, 6)) {
    RingElement e = RingElement::basis_word(w, Basis::F, 3);
    e.add_term(Word(Nat, {0}), -2);
    CHECK(to_f_basis(to_u_basis(e)) == e);
  }
}

TEST_CASE("dim")
{
  CHECK(dim(Word(Nat, {0, 1, 0}), 2) == 4);
  CHECK(dim(Word(Nat, {0}), 5) == 5);
  CHECK(dim(Word(Nat, {0, 0}), 2) == 4);
  CHECK_THROWS(dim(Word(Nat, {0}), 1));

  for (const Word &w : oracle::words_in_window(Nat, 0, 3, 4))
    for (int n = 2; n <= 3; ++n)
      CHECK(dim(w, n) == oracle::dim_brute_force(w, n));
  for (const Word &w : oracle::words_in_window(Mod2, 0, 1, 4))
    CHECK(dim(w, 2) == oracle::dim_brute_force(w, 2));
}

TEST_CASE("dim_element")
{
  CHECK(dim_element(f_word(Nat, {0, 1}), 2) == 4);
  CHECK(dim_element(expand_f(Word(Nat, {0, 1})), 2) == 4);
  CHECK(dim_element(u_word(Nat, {}), 7) == 1);
}

TEST_CASE("odot associativity at desk scale")
{
  auto words = oracle::words_in_window(Nat, 0, 1, 2);
  for (const Word &a : words)
    for (const Word &b : words)
      for (const Word &c : words) {
        RingElement ua = RingElement::basis_word(a, Basis::U);
        RingElement ub = RingElement::basis_word(b, Basis::U);
        RingElement uc = RingElement::basis_word(c, Basis::U);
        CHECK(odot(odot(ua, ub), uc) == odot(ua, odot(ub, uc)));
      }
}

TEST_CASE("fusion coherence and dimension conservation, small window")
{
  auto words = oracle::words_in_window(Nat, 0, 2, 2);
  for (const Word &r : words)
    for (const Word &s : words) {
      RingElement lhs = to_u_basis(f_product(RingElement::basis_word(r, Basis::F),
                                             RingElement::basis_word(s, Basis::F)));
      CHECK(lhs == odot(expand_f(r), expand_f(s)));
    }
  for (const Word &w : oracle::words_in_window(Nat, 0, 3, 4))
    for (int n = 2; n <= 3; ++n) {
      Int expected = 1;
      for (std::size_t k = 0; k < w.size(); ++k) expected *= n;
      CHECK(dim_element(expand_f(w), n) == expected);
    }
}
