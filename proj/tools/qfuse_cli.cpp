// qfuse: exact fusion rules for the universal quantum groups H(n), H∞(n),
// H_d(F), with a diamond-lemma confluence checker and an SL_q(2) cross-check.

#include "qfuse/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace qfuse;

struct CommonOpts {
  std::string index_set = "nat";
  std::string format = "json";
  std::string out;
  int n = 2;
  int d = 1;
  std::string twist;        // comma-separated rationals
  std::string window = "0:3";
};

void add_common(CLI::App *cmd, CommonOpts &opts)
{
  cmd->add_option("--index-set", opts.index_set,
                  "Index set: nat | int | mod:<2d>");
  cmd->add_option("--format", opts.format, "Output format: json | table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", opts.out, "Write output to a file instead of stdout");
}

IndexSet parse_index_set(const std::string &s)
{
  if (s == "nat") return IndexSet::naturals();
  if (s == "int") return IndexSet::integers();
  if (s.rfind("mod:", 0) == 0)
    return IndexSet::mod_even(std::stoll(s.substr(4)));
  throw CLI::ValidationError("--index-set", "expected nat, int, or mod:<2d>");
}

std::vector<std::int64_t> parse_letters(const std::string &s)
{
  std::vector<std::int64_t> letters;
  if (s.empty()) return letters;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) letters.push_back(std::stoll(item));
  return letters;
}

std::vector<Rational> parse_rationals(const std::string &s)
{
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational(item));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string &s)
{
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--window", "expected <min>:<max>");
  return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
}

Presentation make_presentation(const CommonOpts &opts)
{
  IndexSet R = parse_index_set(opts.index_set);
  switch (R.kind()) {
  case IndexKind::Naturals: return Presentation::free_hopf(opts.n);
  case IndexKind::Integers: return Presentation::free_bijective(opts.n);
  case IndexKind::ModEven: {
    int d = static_cast<int>(R.modulus() / 2);
    std::vector<Rational> twist =
        opts.twist.empty() ? std::vector<Rational>(static_cast<std::size_t>(opts.n), 1)
                           : parse_rationals(opts.twist);
    return Presentation::cyclic(opts.n, d, std::move(twist));
  }
  }
  throw std::logic_error("bad index set");
}

void emit(const CommonOpts &opts, const std::string &text)
{
  if (opts.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(opts.out);
    if (!f) throw std::runtime_error("cannot open output file: " + opts.out);
    f << text << "\n";
  }
}

std::string ring_element_table(const RingElement &e)
{
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto &[w, c] : e.terms()) {
    if (!s.empty()) s += "\n";
    s += c.str() + " * " + w.to_string();
  }
  return s;
}

std::string render(const CommonOpts &opts, const RingElement &e)
{
  return opts.format == "table" ? ring_element_table(e) : to_json(e).dump();
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact fusion-rule computations for universal quantum groups"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> words;

  auto *expand = app.add_subcommand(
      "expand", "Decompose an f-basis word into the u-basis");
  add_common(expand, opts);
  expand->add_option("word", words, "Comma-separated letters");

  auto *fuse = app.add_subcommand(
      "fuse", "Fusion product (⊙) of two u-basis words");
  add_common(fuse, opts);
  fuse->add_option("word", words, "Two comma-separated words");

  auto *dim_cmd = app.add_subcommand(
      "dim", "Dimension n_r of the simple comodule labelled by a word");
  add_common(dim_cmd, opts);
  dim_cmd->add_option("--n", opts.n, "Matrix size n >= 2");
  dim_cmd->add_option("word", words, "Comma-separated letters");

  auto *conf = app.add_subcommand(
      "conf", "List the configurations of a word");
  add_common(conf, opts);
  conf->add_option("word", words, "Comma-separated letters");

  auto *basis_count = app.add_subcommand(
      "basis-count", "Count irreducible monomials of a given type");
  add_common(basis_count, opts);
  basis_count->add_option("--n", opts.n, "Matrix size n >= 2");
  basis_count->add_option("--d", opts.d, "Antipode order parameter d (cyclic)");
  basis_count->add_option("--F", opts.twist, "Diagonal twist entries (cyclic)");
  basis_count->add_option("word", words, "Type vector, comma-separated");

  auto *confluence = app.add_subcommand(
      "confluence", "Resolve all overlap and inclusion ambiguities");
  add_common(confluence, opts);
  confluence->add_option("--n", opts.n, "Matrix size n >= 2");
  confluence->add_option("--d", opts.d, "Antipode order parameter d (cyclic)");
  confluence->add_option("--F", opts.twist, "Diagonal twist entries (cyclic)");
  confluence->add_option("--window", opts.window,
                         "Letter window <min>:<max> for nat/int index sets");

  auto *sl2_check = app.add_subcommand(
      "sl2-check", "Check a word's u-basis expansion against the SL_q(2) ring");
  add_common(sl2_check, opts);
  sl2_check->add_option("word", words, "Comma-separated letters (nat only)");

  auto *convert = app.add_subcommand(
      "convert", "Change of basis on a ring element read from stdin");
  add_common(convert, opts);
  std::string target_basis = "f";
  convert->add_option("--to", target_basis, "Target basis: f | u")
      ->check(CLI::IsMember({"f", "u"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    IndexSet R = parse_index_set(opts.index_set);

    if (*expand) {
      if (words.size() != 1) throw std::invalid_argument("expand needs one word");
      emit(opts, render(opts, expand_f(Word(R, parse_letters(words[0])))));
    } else if (*fuse) {
      if (words.size() != 2) throw std::invalid_argument("fuse needs two words");
      RingElement a = RingElement::basis_word(Word(R, parse_letters(words[0])), Basis::U);
      RingElement b = RingElement::basis_word(Word(R, parse_letters(words[1])), Basis::U);
      emit(opts, render(opts, odot(a, b)));
    } else if (*dim_cmd) {
      if (words.size() != 1) throw std::invalid_argument("dim needs one word");
      emit(opts, dim(Word(R, parse_letters(words[0])), opts.n).str());
    } else if (*conf) {
      if (words.size() != 1) throw std::invalid_argument("conf needs one word");
      auto configs = enumerate_configurations(Word(R, parse_letters(words[0])));
      if (opts.format == "table") {
        std::string s;
        for (const Configuration &c : configs) {
          if (!s.empty()) s += "\n";
          s += c.encode();
        }
        emit(opts, s);
      } else {
        json arr = json::array();
        for (const Configuration &c : configs) arr.push_back(c.encode());
        emit(opts, arr.dump());
      }
    } else if (*basis_count) {
      if (words.size() != 1)
        throw std::invalid_argument("basis-count needs one type vector");
      Presentation p = make_presentation(opts);
      emit(opts, std::to_string(count_irreducible(parse_letters(words[0]), p)));
    } else if (*confluence) {
      Presentation p = make_presentation(opts);
      auto [lo, hi] = parse_window(opts.window);
      ConfluenceReport report = check_confluence(p, lo, hi);
      emit(opts, to_json(report).dump());
      return report.ok() ? 0 : 1;
    } else if (*sl2_check) {
      if (words.size() != 1) throw std::invalid_argument("sl2-check needs one word");
      Word w(R, parse_letters(words[0]));
      SL2Element via_f = psi(RingElement::basis_word(w, Basis::F));
      SL2Element via_u = psi(expand_f(w));
      bool equal = via_f == via_u;
      json j{{"word", to_json(w)},
             {"f_image", to_json(via_f)},
             {"u_image", to_json(via_u)},
             {"equal", equal}};
      emit(opts, j.dump());
      return equal ? 0 : 1;
    } else if (*convert) {
      json j = json::parse(std::cin);
      RingElement e = ring_element_from_json(j);
      Basis target = target_basis == "f" ? Basis::F : Basis::U;
      if (e.basis() != target)
        e = target == Basis::F ? to_f_basis(e) : to_u_basis(e);
      emit(opts, render(opts, e));
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
