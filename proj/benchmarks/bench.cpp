#include "qfuse/configuration.hpp"
#include "qfuse/rewrite.hpp"
#include "qfuse/ring.hpp"

#include <benchmark/benchmark.h>

using namespace qfuse;

namespace {

Word alternating_word(std::size_t len)
{
  std::vector<std::int64_t> letters(len);
  for (std::size_t k = 0; k < len; ++k) letters[k] = static_cast<std::int64_t>(k % 2);
  return Word(IndexSet::naturals(), std::move(letters));
}

void BM_EnumerateConfigurations(benchmark::State &state)
{
  Word w = alternating_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_configurations(w));
}
BENCHMARK(BM_EnumerateConfigurations)->DenseRange(4, 14, 2);

void BM_OdotPower(benchmark::State &state)
{
  RingElement u = RingElement::basis_word(alternating_word(2), Basis::U);
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RingElement p = u;
    for (int k = 1; k < e; ++k) p = odot(p, u);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_OdotPower)->DenseRange(2, 8, 2);

void BM_ToFBasis(benchmark::State &state)
{
  RingElement e = expand_f(alternating_word(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(to_f_basis(e));
}
BENCHMARK(BM_ToFBasis)->DenseRange(4, 10, 2);

void BM_NormalForm(benchmark::State &state)
{
  Presentation p = Presentation::free_hopf(2);
  GenWord w;
  for (std::int64_t k = 0; k < state.range(0); ++k)
    w.push_back({k % 2, 2, 2});
  AlgebraElement a = AlgebraElement::monomial(w);
  for (auto _ : state)
    benchmark::DoNotOptimize(normal_form(a, p));
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 8, 2);

void BM_CountIrreducible(benchmark::State &state)
{
  Presentation p = Presentation::cyclic(2, 1, {Rational(2), Rational(1, 3)});
  std::vector<std::int64_t> type;
  for (std::int64_t k = 0; k < state.range(0); ++k) type.push_back(k % 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_irreducible(type, p));
}
BENCHMARK(BM_CountIrreducible)->DenseRange(2, 6, 2);

} // namespace

BENCHMARK_MAIN();
