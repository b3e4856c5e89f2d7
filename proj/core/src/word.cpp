#include "qfuse/word.hpp"

#include <algorithm>

namespace qfuse {

namespace {

void require_same_index_set(const Word &a, const Word &b)
{
  if (!(a.index_set() == b.index_set()))
    throw std::invalid_argument("words belong to different index sets");
}

} // namespace

Word concat(const Word &a, const Word &b)
{
  require_same_index_set(a, b);
  std::vector<std::int64_t> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(a.index_set(), std::move(letters));
}

Word star(const Word &w)
{
  const IndexSet &R = w.index_set();
  std::vector<std::int64_t> letters(w.letters().rbegin(), w.letters().rend());
  for (auto &l : letters) l = R.shift(l);
  return Word(R, std::move(letters));
}

bool linked(const Word &t, const Word &u)
{
  require_same_index_set(t, u);
  return star(t) == u || star(u) == t;
}

bool is_one_step(const Word &w)
{
  const IndexSet &R = w.index_set();
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (!R.adjacent(w.letter(k), w.letter(k + 1))) return false;
  return true;
}

Word subword(const Word &w, std::size_t begin, std::size_t end)
{
  std::vector<std::int64_t> letters(w.letters().begin() + begin,
                                    w.letters().begin() + end);
  return Word(w.index_set(), std::move(letters));
}

} // namespace qfuse
