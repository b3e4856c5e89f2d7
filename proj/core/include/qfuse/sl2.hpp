#pragma once

#include "qfuse/ring.hpp"

#include <map>

namespace qfuse {

/// A finite multiset of Clebsch-Gordan simple labels m_t, t >= 0, with
/// integer multiplicities.  This is the generic-q representation ring of
/// SL_q(2); no root-of-unity truncation is modelled.
class SL2Element {
public:
  SL2Element() = default;

  static SL2Element simple(std::int64_t t, Int coeff = 1)
  {
    SL2Element e;
    e.add_term(t, std::move(coeff));
    return e;
  }

  static SL2Element one() { return simple(0); }

  const std::map<std::int64_t, Int> &multiplicities() const { return mult_; }
  bool is_zero() const { return mult_.empty(); }

  void add_term(std::int64_t t, Int coeff)
  {
    if (t < 0) throw std::invalid_argument("SL2Element: negative label");
    auto it = mult_.find(t);
    if (it == mult_.end()) {
      if (coeff != 0) mult_.emplace(t, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) mult_.erase(it);
    }
  }

  bool operator==(const SL2Element &) const = default;

private:
  std::map<std::int64_t, Int> mult_;
};

SL2Element add(const SL2Element &a, const SL2Element &b);

/// Bilinear extension of the Clebsch-Gordan rule m_t · m_1 = m_{t+1} + m_{t-1}
/// (with m_{-1} absent at t = 0), iterated by induction on the smaller label.
SL2Element cg_multiply(const SL2Element &a, const SL2Element &b);

/// Σ mult(t) · (t + 1).
Int sl2_dim(const SL2Element &a);

/// The comparison map into the SL_q(2) fusion ring, defined on ℕ-elements.
/// f-basis word w ↦ the |w|-th CG power of m_1; u-basis word w ↦ the CG
/// product of m_ℓ over the maximal 1-step blocks of w (block length ℓ).
SL2Element psi(const RingElement &a);

} // namespace qfuse
