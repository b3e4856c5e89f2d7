#include "qfuse/configuration.hpp"

#include <algorithm>

namespace qfuse {

std::string Configuration::encode() const
{
  std::string s;
  s.reserve(symbols.size());
  for (Symbol sym : symbols) s += static_cast<char>(sym);
  return s;
}

Configuration Configuration::decode(const std::string &s)
{
  Configuration c;
  c.symbols.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
    case '.': c.symbols.push_back(Symbol::Blank); break;
    case '(': c.symbols.push_back(Symbol::Open); break;
    case ')': c.symbols.push_back(Symbol::Close); break;
    default: throw std::invalid_argument("Configuration::decode: bad symbol");
    }
  }
  return c;
}

bool is_valid(const Word &w, const Configuration &c)
{
  if (c.symbols.size() != w.size())
    throw std::invalid_argument("configuration length does not match word");

  // Match pairs with a stack; rules (a), (c), (d).  Rule (b) follows:
  // no balanced nonempty parenthesization fits in length <= 1.
  std::vector<std::size_t> stack;
  std::vector<std::ptrdiff_t> mate(c.symbols.size(), -1);
  for (std::size_t k = 0; k < c.symbols.size(); ++k) {
    switch (c.symbols[k]) {
    case Symbol::Blank: break;
    case Symbol::Open: stack.push_back(k); break;
    case Symbol::Close:
      if (stack.empty()) return false;
      mate[stack.back()] = static_cast<std::ptrdiff_t>(k);
      stack.pop_back();
      break;
    }
  }
  if (!stack.empty()) return false;

  const IndexSet &R = w.index_set();
  for (std::size_t i = 0; i < c.symbols.size(); ++i) {
    if (c.symbols[i] != Symbol::Open) continue;
    std::size_t j = static_cast<std::size_t>(mate[i]);
    if (!R.adjacent(w.letter(i), w.letter(j))) return false; // rule (c)
    for (std::size_t k = i + 1; k < j; ++k)                  // rule (d)
      if (c.symbols[k] == Symbol::Blank) return false;
  }
  return true;
}

namespace {

using Syms = std::vector<Symbol>;

// Every way to fully parenthesize positions [l, r) of w.
std::vector<Syms> gen_full(const Word &w, std::size_t l, std::size_t r)
{
  if (l == r) return {Syms{}};
  std::vector<Syms> out;
  const IndexSet &R = w.index_set();
  for (std::size_t j = l + 1; j < r; j += 2) {
    if (!R.adjacent(w.letter(l), w.letter(j))) continue;
    auto inner = gen_full(w, l + 1, j);
    auto rest = gen_full(w, j + 1, r);
    for (const Syms &in : inner)
      for (const Syms &re : rest) {
        Syms s;
        s.reserve(r - l);
        s.push_back(Symbol::Open);
        s.insert(s.end(), in.begin(), in.end());
        s.push_back(Symbol::Close);
        s.insert(s.end(), re.begin(), re.end());
        out.push_back(std::move(s));
      }
  }
  return out;
}

// Configurations of the tail [p, |w|): position p is either Blank or opens
// a pair whose span is fully parenthesized (rule (d) makes spans contiguous).
std::vector<Syms> gen_tail(const Word &w, std::size_t p)
{
  if (p == w.size()) return {Syms{}};
  std::vector<Syms> out;
  for (Syms &tail : gen_tail(w, p + 1)) {
    Syms s;
    s.reserve(w.size() - p);
    s.push_back(Symbol::Blank);
    s.insert(s.end(), tail.begin(), tail.end());
    out.push_back(std::move(s));
  }
  const IndexSet &R = w.index_set();
  for (std::size_t j = p + 1; j < w.size(); j += 2) {
    if (!R.adjacent(w.letter(p), w.letter(j))) continue;
    auto inner = gen_full(w, p + 1, j);
    auto rest = gen_tail(w, j + 1);
    for (const Syms &in : inner)
      for (const Syms &re : rest) {
        Syms s;
        s.reserve(w.size() - p);
        s.push_back(Symbol::Open);
        s.insert(s.end(), in.begin(), in.end());
        s.push_back(Symbol::Close);
        s.insert(s.end(), re.begin(), re.end());
        out.push_back(std::move(s));
      }
  }
  return out;
}

std::vector<std::size_t> paren_positions(const Syms &s)
{
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] != Symbol::Blank) pos.push_back(k);
  return pos;
}

} // namespace

std::vector<Configuration> enumerate_configurations(const Word &w)
{
  auto raw = gen_tail(w, 0);
  std::vector<Configuration> out;
  out.reserve(raw.size());
  for (auto &s : raw) out.push_back(Configuration{std::move(s)});
  std::sort(out.begin(), out.end(),
            [](const Configuration &a, const Configuration &b) {
              auto pa = paren_positions(a.symbols);
              auto pb = paren_positions(b.symbols);
              if (pa != pb) return pa < pb;
              return a.encode() < b.encode();
            });
  return out;
}

Word residual(const Word &w, const Configuration &c)
{
  if (!is_valid(w, c))
    throw std::invalid_argument("residual: configuration not valid for word");
  std::vector<std::int64_t> letters;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (c.symbols[k] == Symbol::Blank) letters.push_back(w.letter(k));
  return Word(w.index_set(), std::move(letters));
}

} // namespace qfuse
