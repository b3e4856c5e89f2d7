#include "qfuse/rewrite.hpp"

#include <algorithm>

namespace qfuse {

Presentation Presentation::free_hopf(int n)
{
  if (n < 2) throw std::invalid_argument("Presentation: n must be >= 2");
  Presentation p;
  p.variant = Variant::FreeHopf;
  p.n = n;
  return p;
}

Presentation Presentation::free_bijective(int n)
{
  Presentation p = free_hopf(n);
  p.variant = Variant::FreeBijective;
  return p;
}

Presentation Presentation::cyclic(int n, int d, std::vector<Rational> twist)
{
  if (n < 2) throw std::invalid_argument("Presentation: n must be >= 2");
  if (d < 1) throw std::invalid_argument("Presentation: d must be >= 1");
  if (static_cast<int>(twist.size()) != n)
    throw std::invalid_argument("Presentation: twist must have n diagonal entries");
  for (const Rational &f : twist)
    if (f == 0) throw std::invalid_argument("Presentation: twist entries must be nonzero");
  Presentation p;
  p.variant = Variant::Cyclic;
  p.n = n;
  p.d = d;
  p.twist = std::move(twist);
  return p;
}

IndexSet Presentation::index_set() const
{
  switch (variant) {
  case Variant::FreeHopf: return IndexSet::naturals();
  case Variant::FreeBijective: return IndexSet::integers();
  case Variant::Cyclic: return IndexSet::mod_even(2 * static_cast<std::int64_t>(d));
  }
  throw std::logic_error("bad variant");
}

std::string to_string(const GenWord &w)
{
  if (w.empty()) return "1";
  std::string s;
  for (const Generator &g : w) {
    if (!s.empty()) s += " ";
    s += "x^" + std::to_string(g.r) + "_{" + std::to_string(g.i) + "," +
         std::to_string(g.j) + "}";
  }
  return s;
}

AlgebraElement add(const AlgebraElement &a, const AlgebraElement &b)
{
  AlgebraElement out = a;
  out.add_scaled(b, 1);
  return out;
}

AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b)
{
  AlgebraElement out;
  for (const auto &[wa, ca] : a.terms())
    for (const auto &[wb, cb] : b.terms()) {
      GenWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(std::move(w), ca * cb);
    }
  return out;
}

AlgebraElement truncate(const AlgebraElement &a, std::size_t t)
{
  AlgebraElement out;
  for (const auto &[w, c] : a.terms())
    if (w.size() == t) out.add_term(w, c);
  return out;
}

namespace {

bool is_even_letter(std::int64_t r) { return ((r % 2) + 2) % 2 == 0; }

// For Cyclic, red1-red4 only fire with the pattern base letter in [0, 2d-2];
// the successor is then literal, no wraparound.
bool base_letter_allowed(std::int64_t r, const Presentation &p)
{
  if (p.variant != Variant::Cyclic) return true;
  return 0 <= r && r <= 2 * static_cast<std::int64_t>(p.d) - 2;
}

} // namespace

std::vector<Reduction> applicable_reductions(const Generator &g1,
                                             const Generator &g2,
                                             const Presentation &p)
{
  const int n = p.n;
  std::vector<Reduction> out;

  // red1: x^r_{in} x^{r+1}_{jn}, r even
  if (g2.r == g1.r + 1 && is_even_letter(g1.r) && base_letter_allowed(g1.r, p) &&
      g1.j == n && g2.j == n)
    out.push_back(Reduction::Red1);
  // red2: x^r_{i1} x^{r+1}_{j1}, r odd
  if (g2.r == g1.r + 1 && !is_even_letter(g1.r) && base_letter_allowed(g1.r, p) &&
      g1.j == 1 && g2.j == 1)
    out.push_back(Reduction::Red2);
  // red3: x^{r+1}_{ni} x^r_{nj}, r odd
  if (g1.r == g2.r + 1 && !is_even_letter(g2.r) && base_letter_allowed(g2.r, p) &&
      g1.i == n && g2.i == n)
    out.push_back(Reduction::Red3);
  // red4: x^{r+1}_{1i} x^r_{1j}, r even
  if (g1.r == g2.r + 1 && is_even_letter(g2.r) && base_letter_allowed(g2.r, p) &&
      g1.i == 1 && g2.i == 1)
    out.push_back(Reduction::Red4);

  if (p.variant == Variant::Cyclic) {
    const std::int64_t top = 2 * static_cast<std::int64_t>(p.d) - 1;
    // red5: x^{2d-1}_{i1} x^0_{j1}
    if (g1.r == top && g2.r == 0 && g1.j == 1 && g2.j == 1)
      out.push_back(Reduction::Red5);
    // red6: x^0_{ni} x^{2d-1}_{nj}
    if (g1.r == 0 && g2.r == top && g1.i == n && g2.i == n)
      out.push_back(Reduction::Red6);
  }
  return out;
}

AlgebraElement reduction_rhs(Reduction red, const Generator &g1,
                             const Generator &g2, const Presentation &p)
{
  const int n = p.n;
  AlgebraElement out;
  switch (red) {
  case Reduction::Red1: // x^r_{in} x^{r+1}_{jn} -> δ_ij - Σ_{a<n} x^r_{ia} x^{r+1}_{ja}
    if (g1.i == g2.i) out.add_term({}, 1);
    for (int a = 1; a < n; ++a)
      out.add_term({{g1.r, g1.i, a}, {g2.r, g2.i, a}}, -1);
    return out;
  case Reduction::Red2: // x^r_{i1} x^{r+1}_{j1} -> δ_ij - Σ_{a>1} x^r_{ia} x^{r+1}_{ja}
    if (g1.i == g2.i) out.add_term({}, 1);
    for (int a = 2; a <= n; ++a)
      out.add_term({{g1.r, g1.i, a}, {g2.r, g2.i, a}}, -1);
    return out;
  case Reduction::Red3: // x^{r+1}_{ni} x^r_{nj} -> δ_ij - Σ_{a<n} x^{r+1}_{ai} x^r_{aj}
    if (g1.j == g2.j) out.add_term({}, 1);
    for (int a = 1; a < n; ++a)
      out.add_term({{g1.r, a, g1.j}, {g2.r, a, g2.j}}, -1);
    return out;
  case Reduction::Red4: // x^{r+1}_{1i} x^r_{1j} -> δ_ij - Σ_{a>1} x^{r+1}_{ai} x^r_{aj}
    if (g1.j == g2.j) out.add_term({}, 1);
    for (int a = 2; a <= n; ++a)
      out.add_term({{g1.r, a, g1.j}, {g2.r, a, g2.j}}, -1);
    return out;
  case Reduction::Red5: {
    // From X^{2d-1} F (X^0)^t F^{-1} = I with diagonal F:
    //   Σ_l F_l F_j^{-1} x^{2d-1}_{il} x^0_{jl} = δ_ij, solved for l = 1.
    const Rational f1 = p.twist[0];
    const int i = g1.i, j = g2.i;
    if (i == j) out.add_term({}, p.twist[static_cast<std::size_t>(j - 1)] / f1);
    for (int l = 2; l <= n; ++l)
      out.add_term({{g1.r, i, l}, {g2.r, j, l}},
                   -p.twist[static_cast<std::size_t>(l - 1)] / f1);
    return out;
  }
  case Reduction::Red6: {
    // From F (X^0)^t F^{-1} X^{2d-1} = I with diagonal F:
    //   Σ_u F_i F_u^{-1} x^0_{ui} x^{2d-1}_{uj} = δ_ij, solved for u = n.
    const Rational fn = p.twist[static_cast<std::size_t>(n - 1)];
    const int i = g1.j, j = g2.j;
    if (i == j) out.add_term({}, fn / p.twist[static_cast<std::size_t>(i - 1)]);
    for (int u = 1; u < n; ++u)
      out.add_term({{g1.r, u, i}, {g2.r, u, j}},
                   -fn / p.twist[static_cast<std::size_t>(u - 1)]);
    return out;
  }
  }
  throw std::logic_error("bad reduction");
}

namespace {

// Position of the pair to rewrite, or npos if the word is irreducible.
std::size_t find_redex(const GenWord &w, const Presentation &p, Strategy strategy)
{
  if (w.size() < 2) return std::string::npos;
  if (strategy == Strategy::Leftmost) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (!applicable_reductions(w[k], w[k + 1], p).empty()) return k;
  } else {
    for (std::size_t k = w.size() - 1; k-- > 0;)
      if (!applicable_reductions(w[k], w[k + 1], p).empty()) return k;
  }
  return std::string::npos;
}

// prefix · rhs · suffix for the redex at position k of w, scaled by coeff.
void substitute(AlgebraElement &acc, const GenWord &w, std::size_t k,
                const AlgebraElement &rhs, const Rational &coeff)
{
  for (const auto &[t, c] : rhs.terms()) {
    GenWord nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    nw.insert(nw.end(), t.begin(), t.end());
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
    acc.add_term(std::move(nw), coeff * c);
  }
}

} // namespace

AlgebraElement reduce_once(const AlgebraElement &a, const Presentation &p,
                           Strategy strategy)
{
  AlgebraElement out;
  for (const auto &[w, c] : a.terms()) {
    std::size_t k = find_redex(w, p, strategy);
    if (k == std::string::npos) {
      out.add_term(w, c);
      continue;
    }
    Reduction red = applicable_reductions(w[k], w[k + 1], p).front();
    substitute(out, w, k, reduction_rhs(red, w[k], w[k + 1], p), c);
  }
  return out;
}

AlgebraElement normal_form(const AlgebraElement &a, const Presentation &p,
                           std::uint64_t fuel, Strategy strategy)
{
  AlgebraElement out;
  std::map<GenWord, Rational> work(a.terms().begin(), a.terms().end());
  while (!work.empty()) {
    auto it = work.begin();
    GenWord w = it->first;
    Rational c = it->second;
    work.erase(it);
    std::size_t k = find_redex(w, p, strategy);
    if (k == std::string::npos) {
      out.add_term(std::move(w), std::move(c));
      continue;
    }
    if (fuel == 0) throw std::runtime_error("normal_form: fuel exhausted");
    --fuel;
    Reduction red = applicable_reductions(w[k], w[k + 1], p).front();
    AlgebraElement step;
    substitute(step, w, k, reduction_rhs(red, w[k], w[k + 1], p), c);
    for (const auto &[nw, nc] : step.terms()) {
      auto jt = work.find(nw);
      if (jt == work.end()) {
        work.emplace(nw, nc);
      } else {
        jt->second += nc;
        if (jt->second == 0) work.erase(jt);
      }
    }
  }
  return out;
}

bool is_irreducible(const GenWord &w, const Presentation &p)
{
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (!applicable_reductions(w[k], w[k + 1], p).empty()) return false;
  return true;
}

std::vector<GenWord> enumerate_irreducible(const std::vector<std::int64_t> &type,
                                           const Presentation &p)
{
  IndexSet R = p.index_set();
  std::vector<std::int64_t> letters = type;
  for (auto &r : letters) {
    r = R.canonical(r);
    if (!R.contains(r))
      throw std::invalid_argument("enumerate_irreducible: bad type letter");
  }
  const std::size_t k = letters.size();
  std::vector<GenWord> out;
  GenWord w(k);
  for (std::size_t m = 0; m < k; ++m) w[m] = {letters[m], 1, 1};
  // odometer over the (i, j) index pairs
  while (true) {
    if (is_irreducible(w, p)) out.push_back(w);
    bool carried = false;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (w[pos].j < p.n) {
        ++w[pos].j;
        carried = true;
        break;
      }
      w[pos].j = 1;
      if (w[pos].i < p.n) {
        ++w[pos].i;
        carried = true;
        break;
      }
      w[pos].i = 1;
    }
    if (!carried) break;
  }
  return out;
}

std::uint64_t count_irreducible(const std::vector<std::int64_t> &type,
                                const Presentation &p)
{
  return enumerate_irreducible(type, p).size();
}

AmbiguityResult resolve_ambiguity(const GenWord &w, const Presentation &p,
                                  std::uint64_t fuel)
{
  if (w.size() != 3)
    throw std::invalid_argument("resolve_ambiguity: word must have length 3");
  auto left_rules = applicable_reductions(w[0], w[1], p);
  auto right_rules = applicable_reductions(w[1], w[2], p);
  if (left_rules.empty() || right_rules.empty())
    throw std::invalid_argument("resolve_ambiguity: both pairs must be reducible");

  AlgebraElement from_left, from_right;
  substitute(from_left, w, 0, reduction_rhs(left_rules.front(), w[0], w[1], p), 1);
  substitute(from_right, w, 1, reduction_rhs(right_rules.front(), w[1], w[2], p), 1);

  AmbiguityResult res;
  res.left = normal_form(from_left, p, fuel);
  res.right = normal_form(from_right, p, fuel);
  res.equal = res.left == res.right;
  return res;
}

namespace {

std::vector<Generator> all_generators(const Presentation &p,
                                      std::int64_t letter_min,
                                      std::int64_t letter_max)
{
  std::vector<std::int64_t> letters;
  if (p.variant == Variant::Cyclic) {
    for (std::int64_t r = 0; r < 2 * static_cast<std::int64_t>(p.d); ++r)
      letters.push_back(r);
  } else {
    for (std::int64_t r = letter_min; r <= letter_max; ++r)
      if (p.index_set().contains(r)) letters.push_back(r);
  }
  std::vector<Generator> gens;
  for (std::int64_t r : letters)
    for (int i = 1; i <= p.n; ++i)
      for (int j = 1; j <= p.n; ++j) gens.push_back({r, i, j});
  return gens;
}

} // namespace

ConfluenceReport check_confluence(const Presentation &p,
                                  std::int64_t letter_min,
                                  std::int64_t letter_max,
                                  std::uint64_t fuel)
{
  ConfluenceReport report;
  auto gens = all_generators(p, letter_min, letter_max);

  std::vector<std::pair<Generator, Generator>> redexes;
  for (const Generator &g1 : gens)
    for (const Generator &g2 : gens) {
      auto rules = applicable_reductions(g1, g2, p);
      if (rules.empty()) continue;
      redexes.emplace_back(g1, g2);
      if (rules.size() >= 2) {
        // inclusion ambiguity: one pair, several rules
        ++report.inclusions_checked;
        GenWord w{g1, g2};
        AlgebraElement first, second;
        first.add_scaled(reduction_rhs(rules[0], g1, g2, p), 1);
        second.add_scaled(reduction_rhs(rules[1], g1, g2, p), 1);
        for (std::size_t k = 2; k < rules.size(); ++k) {
          // rules beyond two are checked pairwise against the first
          AlgebraElement extra;
          extra.add_scaled(reduction_rhs(rules[k], g1, g2, p), 1);
          if (normal_form(extra, p, fuel) != normal_form(first, p, fuel))
            report.failures.push_back({w, first, extra});
        }
        AlgebraElement nf1 = normal_form(first, p, fuel);
        AlgebraElement nf2 = normal_form(second, p, fuel);
        if (nf1 != nf2) report.failures.push_back({w, nf1, nf2});
      }
    }

  // overlap ambiguities: g1 g2 g3 with both adjacent pairs reducible
  for (const auto &[g1, g2] : redexes)
    for (const Generator &g3 : gens) {
      if (applicable_reductions(g2, g3, p).empty()) continue;
      ++report.overlaps_checked;
      GenWord w{g1, g2, g3};
      AmbiguityResult res = resolve_ambiguity(w, p, fuel);
      if (!res.equal) report.failures.push_back({w, res.left, res.right});
    }
  return report;
}

TensorElement comultiply(const GenWord &w, const Presentation &p)
{
  TensorElement out;
  std::vector<std::pair<GenWord, GenWord>> partial{{GenWord{}, GenWord{}}};
  for (const Generator &g : w) {
    std::vector<std::pair<GenWord, GenWord>> next;
    next.reserve(partial.size() * static_cast<std::size_t>(p.n));
    for (const auto &[left, right] : partial)
      for (int k = 1; k <= p.n; ++k) {
        GenWord l = left, r = right;
        l.push_back({g.r, g.i, k});
        r.push_back({g.r, k, g.j});
        next.emplace_back(std::move(l), std::move(r));
      }
    partial = std::move(next);
  }
  for (auto &[l, r] : partial) out.add_term(std::move(l), std::move(r), 1);
  return out;
}

Rational counit(const GenWord &w)
{
  for (const Generator &g : w)
    if (g.i != g.j) return 0;
  return 1;
}

AlgebraElement counit_left(const TensorElement &t)
{
  AlgebraElement out;
  for (const auto &[key, c] : t.terms()) {
    Rational eps = counit(key.first);
    if (eps != 0) out.add_term(key.second, c * eps);
  }
  return out;
}

AlgebraElement counit_right(const TensorElement &t)
{
  AlgebraElement out;
  for (const auto &[key, c] : t.terms()) {
    Rational eps = counit(key.second);
    if (eps != 0) out.add_term(key.first, c * eps);
  }
  return out;
}

} // namespace qfuse
