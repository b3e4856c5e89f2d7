#pragma once

#include "qfuse/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>

namespace qfuse {

using Int = boost::multiprecision::cpp_int;

/// Which basis of ℤ[A_R] an element is written in: f-basis (concatenation
/// product) or u-basis (simple objects, ⊙ product).
enum class Basis { F, U };

/// A finitely supported integer combination of words.  The term map is
/// ordered length-lexicographically, which is also the canonical output
/// order.  Zero coefficients are never stored.
class RingElement {
public:
  RingElement(IndexSet index_set, Basis basis)
      : index_set_(index_set), basis_(basis)
  {
  }

  static RingElement basis_word(const Word &w, Basis basis, Int coeff = 1)
  {
    RingElement e(w.index_set(), basis);
    e.add_term(w, std::move(coeff));
    return e;
  }

  static RingElement one(IndexSet index_set, Basis basis)
  {
    return basis_word(Word(index_set), basis);
  }

  const IndexSet &index_set() const { return index_set_; }
  Basis basis() const { return basis_; }
  const std::map<Word, Int> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coeff(const Word &w) const
  {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const Word &w, Int coeff)
  {
    if (!(w.index_set() == index_set_))
      throw std::invalid_argument("RingElement: word from wrong index set");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (coeff != 0) terms_.emplace(w, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const RingElement &other) const
  {
    return basis_ == other.basis_ && index_set_ == other.index_set_ &&
           terms_ == other.terms_;
  }

private:
  IndexSet index_set_;
  Basis basis_;
  std::map<Word, Int> terms_;
};

RingElement add(const RingElement &a, const RingElement &b);
RingElement negate(const RingElement &a);

/// f-basis product: bilinear extension of concatenation.
RingElement f_product(const RingElement &a, const RingElement &b);

/// u-basis fusion product ⊙: for basis words r, s, sum of a·b over all
/// splittings r = a·t, s = t'·b with t ~ t' (including the empty pair).
RingElement odot(const RingElement &a, const RingElement &b);

/// Apply * to every support word; coefficients unchanged.
RingElement star_element(const RingElement &a);

/// The decomposition f_r = Σ_{c ∈ Conf_r} u_{r_c} as a u-basis element.
RingElement expand_f(const Word &w);

/// Change of basis; to_f_basis inverts expand_f by length-graded
/// back-substitution (expand_f(w) = w + strictly shorter words).
RingElement to_u_basis(const RingElement &a);
RingElement to_f_basis(const RingElement &a);

/// n_r: the number of sequences in {1..n}^|w| avoiding (n,n) after an even
/// letter and (1,1) after an odd letter at ±1 steps.  Transfer-matrix pass.
Int dim(const Word &w, int n);

/// u-basis: Σ coeff · dim(word, n); f-basis: Σ coeff · n^|word|.
Int dim_element(const RingElement &a, int n);

} // namespace qfuse
