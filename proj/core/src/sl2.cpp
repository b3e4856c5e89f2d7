#include "qfuse/sl2.hpp"

namespace qfuse {

SL2Element add(const SL2Element &a, const SL2Element &b)
{
  SL2Element out = a;
  for (const auto &[t, c] : b.multiplicities()) out.add_term(t, c);
  return out;
}

namespace {

// m_s · m_t by induction on t <= s:
//   t = 0: m_s;  t = 1: m_{s+1} + m_{s-1} (no m_{-1} at s = 0);
//   t >= 2: (m_s · m_{t-1}) · m_1 - m_s · m_{t-2}, from the defining rule
//   applied to m_{t-1} · m_1.
SL2Element cg_pair(std::int64_t s, std::int64_t t)
{
  if (t > s) std::swap(s, t);
  if (t == 0) return SL2Element::simple(s);
  if (t == 1) {
    SL2Element e = SL2Element::simple(s + 1);
    if (s >= 1) e.add_term(s - 1, 1);
    return e;
  }
  SL2Element lower = cg_multiply(cg_pair(s, t - 1), SL2Element::simple(1));
  SL2Element correction = cg_pair(s, t - 2);
  for (const auto &[u, c] : correction.multiplicities()) lower.add_term(u, -c);
  return lower;
}

} // namespace

SL2Element cg_multiply(const SL2Element &a, const SL2Element &b)
{
  SL2Element out;
  for (const auto &[s, cs] : a.multiplicities())
    for (const auto &[t, ct] : b.multiplicities()) {
      SL2Element pair = cg_pair(s, t);
      for (const auto &[u, cu] : pair.multiplicities())
        out.add_term(u, cs * ct * cu);
    }
  return out;
}

Int sl2_dim(const SL2Element &a)
{
  Int total = 0;
  for (const auto &[t, c] : a.multiplicities()) total += c * (t + 1);
  return total;
}

namespace {

SL2Element cg_power_of_m1(std::size_t k)
{
  SL2Element e = SL2Element::one();
  for (std::size_t i = 0; i < k; ++i)
    e = cg_multiply(e, SL2Element::simple(1));
  return e;
}

// Cut w into maximal 1-step blocks and map a block of length ℓ to m_ℓ.
SL2Element psi_u_word(const Word &w)
{
  SL2Element out = SL2Element::one();
  std::size_t start = 0;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    if (k == w.size() || !w.index_set().adjacent(w.letter(k - 1), w.letter(k))) {
      out = cg_multiply(out, SL2Element::simple(static_cast<std::int64_t>(k - start)));
      start = k;
    }
  }
  return out;
}

} // namespace

SL2Element psi(const RingElement &a)
{
  if (a.index_set().kind() != IndexKind::Naturals)
    throw std::invalid_argument("psi is defined over the Naturals index set");
  SL2Element out;
  for (const auto &[w, c] : a.terms()) {
    SL2Element image = a.basis() == Basis::F ? cg_power_of_m1(w.size()) : psi_u_word(w);
    for (const auto &[t, d] : image.multiplicities()) out.add_term(t, c * d);
  }
  return out;
}

} // namespace qfuse
