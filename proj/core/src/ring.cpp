#include "qfuse/ring.hpp"

#include "qfuse/configuration.hpp"

namespace qfuse {

namespace {

void require_compatible(const RingElement &a, const RingElement &b)
{
  if (!(a.index_set() == b.index_set()))
    throw std::invalid_argument("ring elements over different index sets");
  if (a.basis() != b.basis())
    throw std::invalid_argument("ring elements in different bases");
}

} // namespace

RingElement add(const RingElement &a, const RingElement &b)
{
  require_compatible(a, b);
  RingElement out = a;
  for (const auto &[w, c] : b.terms()) out.add_term(w, c);
  return out;
}

RingElement negate(const RingElement &a)
{
  RingElement out(a.index_set(), a.basis());
  for (const auto &[w, c] : a.terms()) out.add_term(w, -c);
  return out;
}

RingElement f_product(const RingElement &a, const RingElement &b)
{
  require_compatible(a, b);
  if (a.basis() != Basis::F)
    throw std::invalid_argument("f_product requires f-basis elements");
  RingElement out(a.index_set(), Basis::F);
  for (const auto &[wa, ca] : a.terms())
    for (const auto &[wb, cb] : b.terms()) out.add_term(concat(wa, wb), ca * cb);
  return out;
}

RingElement odot(const RingElement &a, const RingElement &b)
{
  require_compatible(a, b);
  if (a.basis() != Basis::U)
    throw std::invalid_argument("odot requires u-basis elements");
  const IndexSet &R = a.index_set();
  RingElement out(R, Basis::U);
  for (const auto &[r, cr] : a.terms()) {
    for (const auto &[s, cs] : b.terms()) {
      // A cancelled suffix/prefix pair corresponds to a nest of matched
      // parentheses across the r/s boundary: the m-th letter from the end
      // of r pairs with the m-th letter of s, each pair at a ±1 step.
      std::size_t kmax = std::min(r.size(), s.size());
      for (std::size_t k = 0; k <= kmax; ++k) {
        bool cancels = true;
        for (std::size_t m = 0; m < k && cancels; ++m)
          cancels = R.adjacent(r.letter(r.size() - 1 - m), s.letter(m));
        if (!cancels) continue;
        Word head = subword(r, 0, r.size() - k);
        Word tail = subword(s, k, s.size());
        out.add_term(concat(head, tail), cr * cs);
      }
    }
  }
  return out;
}

RingElement star_element(const RingElement &a)
{
  RingElement out(a.index_set(), a.basis());
  for (const auto &[w, c] : a.terms()) out.add_term(star(w), c);
  return out;
}

RingElement expand_f(const Word &w)
{
  RingElement out(w.index_set(), Basis::U);
  for (const Configuration &c : enumerate_configurations(w))
    out.add_term(residual(w, c), 1);
  return out;
}

RingElement to_u_basis(const RingElement &a)
{
  if (a.basis() != Basis::F)
    throw std::invalid_argument("to_u_basis expects an f-basis element");
  RingElement out(a.index_set(), Basis::U);
  for (const auto &[w, c] : a.terms()) {
    RingElement e = expand_f(w);
    for (const auto &[v, d] : e.terms()) out.add_term(v, c * d);
  }
  return out;
}

RingElement to_f_basis(const RingElement &a)
{
  if (a.basis() != Basis::U)
    throw std::invalid_argument("to_f_basis expects a u-basis element");
  // expand_f(w) = w + (shorter words), so peel off the longest remaining
  // term at each step; the term order makes rbegin() the longest.
  RingElement rest = a;
  RingElement out(a.index_set(), Basis::F);
  while (!rest.is_zero()) {
    auto it = rest.terms().rbegin();
    Word w = it->first;
    Int c = it->second;
    out.add_term(w, c);
    RingElement e = expand_f(w);
    for (const auto &[v, d] : e.terms()) rest.add_term(v, -c * d);
  }
  return out;
}

Int dim(const Word &w, int n)
{
  if (n < 2) throw std::invalid_argument("dim: n must be >= 2");
  if (w.empty()) return 1;
  const IndexSet &R = w.index_set();
  // state = value of the current sequence entry, 1..n
  std::vector<Int> count(static_cast<std::size_t>(n), 1);
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    bool constrained = R.adjacent(w.letter(k), w.letter(k + 1));
    int forbidden = R.is_even(w.letter(k)) ? n : 1; // (n,n) or (1,1)
    std::vector<Int> next(static_cast<std::size_t>(n), 0);
    Int total = 0;
    for (const Int &c : count) total += c;
    for (int v = 1; v <= n; ++v) {
      Int c = total;
      if (constrained && v == forbidden) c -= count[static_cast<std::size_t>(forbidden - 1)];
      next[static_cast<std::size_t>(v - 1)] = c;
    }
    count = std::move(next);
  }
  Int total = 0;
  for (const Int &c : count) total += c;
  return total;
}

Int dim_element(const RingElement &a, int n)
{
  if (n < 2) throw std::invalid_argument("dim_element: n must be >= 2");
  Int total = 0;
  for (const auto &[w, c] : a.terms()) {
    if (a.basis() == Basis::U) {
      total += c * dim(w, n);
    } else {
      Int p = 1;
      for (std::size_t k = 0; k < w.size(); ++k) p *= n;
      total += c * p;
    }
  }
  return total;
}

} // namespace qfuse
