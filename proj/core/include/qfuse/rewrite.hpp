#pragma once

#include "qfuse/index_set.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qfuse {

using Rational = boost::multiprecision::cpp_rational;

/// Which presented Hopf algebra we rewrite in.
enum class Variant {
  FreeHopf,      // H(n),  letters in ℕ
  FreeBijective, // H∞(n), letters in ℤ
  Cyclic,        // H_d(F), letters in ℤ/2d, F diagonal
};

struct Presentation {
  Variant variant = Variant::FreeHopf;
  int n = 2;
  int d = 1;                    // Cyclic only
  std::vector<Rational> twist;  // diagonal of F, Cyclic only

  static Presentation free_hopf(int n);
  static Presentation free_bijective(int n);
  static Presentation cyclic(int n, int d, std::vector<Rational> twist);

  IndexSet index_set() const;
  bool operator==(const Presentation &) const = default;
};

/// One generator x^r_{ij}; r in R(variant), i, j in 1..n.
struct Generator {
  std::int64_t r = 0;
  int i = 1;
  int j = 1;

  auto operator<=>(const Generator &) const = default;
};

/// A monomial x^{r1}_{i1 j1} ... x^{rk}_{ik jk}.
using GenWord = std::vector<Generator>;

std::string to_string(const GenWord &w);

/// An exact-rational combination of monomials in standard-form bookkeeping.
class AlgebraElement {
public:
  AlgebraElement() = default;

  static AlgebraElement monomial(GenWord w, Rational coeff = 1)
  {
    AlgebraElement e;
    e.add_term(std::move(w), std::move(coeff));
    return e;
  }

  static AlgebraElement constant(Rational c)
  {
    return monomial(GenWord{}, std::move(c));
  }

  const std::map<GenWord, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(GenWord w, Rational coeff)
  {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (coeff != 0) terms_.emplace(std::move(w), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const AlgebraElement &other, const Rational &scale)
  {
    for (const auto &[w, c] : other.terms()) add_term(w, c * scale);
  }

  bool operator==(const AlgebraElement &) const = default;

private:
  std::map<GenWord, Rational> terms_;
};

AlgebraElement add(const AlgebraElement &a, const AlgebraElement &b);
AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b);

/// Keep exactly the terms of word length t.
AlgebraElement truncate(const AlgebraElement &a, std::size_t t);

enum class Reduction { Red1 = 1, Red2, Red3, Red4, Red5, Red6 };

/// All reduction patterns matching the adjacent pair g1 g2, in ascending
/// rule number (the dispatch priority).
std::vector<Reduction> applicable_reductions(const Generator &g1,
                                             const Generator &g2,
                                             const Presentation &p);

/// The right-hand side the given reduction substitutes for g1 g2.
AlgebraElement reduction_rhs(Reduction red, const Generator &g1,
                             const Generator &g2, const Presentation &p);

enum class Strategy { Leftmost, Rightmost };

/// One parallel step: in every support word, rewrite one reducible pair
/// (leftmost or rightmost per strategy, lowest-numbered rule).  Fixed point
/// if nothing is reducible.
AlgebraElement reduce_once(const AlgebraElement &a, const Presentation &p,
                           Strategy strategy = Strategy::Leftmost);

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

/// Iterate reduce_once to a fixed point.  Fuel counts single-word rewrite
/// steps; throws std::runtime_error on exhaustion.
AlgebraElement normal_form(const AlgebraElement &a, const Presentation &p,
                           std::uint64_t fuel = kDefaultFuel,
                           Strategy strategy = Strategy::Leftmost);

bool is_irreducible(const GenWord &w, const Presentation &p);

/// All monomials of the given type vector with no reducible adjacent pair,
/// in lexicographic order of their index matrices.
std::vector<GenWord> enumerate_irreducible(const std::vector<std::int64_t> &type,
                                           const Presentation &p);
std::uint64_t count_irreducible(const std::vector<std::int64_t> &type,
                                const Presentation &p);

struct AmbiguityResult {
  AlgebraElement left;  // normal form after rewriting the left pair first
  AlgebraElement right; // ... the right pair first
  bool equal = false;
};

/// Resolve a length-3 overlap ambiguity (both adjacent pairs reducible).
AmbiguityResult resolve_ambiguity(const GenWord &w, const Presentation &p,
                                  std::uint64_t fuel = kDefaultFuel);

struct ConfluenceFailure {
  GenWord word;
  AlgebraElement left;
  AlgebraElement right;
};

struct ConfluenceReport {
  std::uint64_t overlaps_checked = 0;
  std::uint64_t inclusions_checked = 0;
  std::vector<ConfluenceFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Enumerate every length-3 overlap ambiguity and every length-2 inclusion
/// ambiguity (pair matched by two or more rules) with letters in
/// [letter_min, letter_max], resolve each, and report failures.  The window
/// is ignored for Cyclic, whose letter set is finite.
ConfluenceReport check_confluence(const Presentation &p,
                                  std::int64_t letter_min,
                                  std::int64_t letter_max,
                                  std::uint64_t fuel = kDefaultFuel);

/// Δ-image bookkeeping: combination of pure tensors of monomials.
class TensorElement {
public:
  using Key = std::pair<GenWord, GenWord>;

  const std::map<Key, Rational> &terms() const { return terms_; }

  void add_term(GenWord left, GenWord right, Rational coeff)
  {
    Key k{std::move(left), std::move(right)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (coeff != 0) terms_.emplace(std::move(k), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const TensorElement &) const = default;

private:
  std::map<Key, Rational> terms_;
};

/// Δ(x^r_{ij}) = Σ_k x^r_{ik} ⊗ x^r_{kj}, extended multiplicatively.
TensorElement comultiply(const GenWord &w, const Presentation &p);

/// ε(x^r_{ij}) = δ_{ij}, extended multiplicatively.
Rational counit(const GenWord &w);

/// (ε⊗id) and (id⊗ε) applied to a tensor.
AlgebraElement counit_left(const TensorElement &t);
AlgebraElement counit_right(const TensorElement &t);

} // namespace qfuse
