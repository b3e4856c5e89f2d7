#pragma once

#include "qfuse/word.hpp"

#include <string>
#include <vector>

namespace qfuse {

enum class Symbol : char { Blank = '.', Open = '(', Close = ')' };

/// A balanced partial parenthesization of a word, aligned position by
/// position.  Valid configurations obey:
///   (a) the parentheses are balanced,
///   (b) words of length 0 or 1 admit only the all-Blank configuration,
///   (c) a pair at positions i < j needs letters r_j = r_i ± 1 in R,
///   (d) everything strictly between a matched pair is itself paired
///       within the span (so j - i is odd).
struct Configuration {
  std::vector<Symbol> symbols;

  static Configuration all_blank(std::size_t n)
  {
    return Configuration{std::vector<Symbol>(n, Symbol::Blank)};
  }

  /// String form over {'.', '(', ')'}, e.g. "()." .
  std::string encode() const;
  static Configuration decode(const std::string &s);

  bool operator==(const Configuration &) const = default;
};

/// All four validity rules; throws on length mismatch.
bool is_valid(const Word &w, const Configuration &c);

/// All valid configurations of w, duplicate-free, in canonical order
/// (by the set of parenthesized positions, then by symbol string).
std::vector<Configuration> enumerate_configurations(const Word &w);

/// The residual word r_c: w restricted to the Blank positions.
/// Throws if the configuration is not valid for w.
Word residual(const Word &w, const Configuration &c);

} // namespace qfuse
