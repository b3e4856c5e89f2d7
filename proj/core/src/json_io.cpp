#include "qfuse/json_io.hpp"

namespace qfuse {

json to_json(const IndexSet &R)
{
  switch (R.kind()) {
  case IndexKind::Naturals: return json{{"kind", "nat"}};
  case IndexKind::Integers: return json{{"kind", "int"}};
  case IndexKind::ModEven: return json{{"kind", "mod"}, {"modulus", R.modulus()}};
  }
  throw std::logic_error("bad index set");
}

IndexSet index_set_from_json(const json &j)
{
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "nat") return IndexSet::naturals();
  if (kind == "int") return IndexSet::integers();
  if (kind == "mod") return IndexSet::mod_even(j.at("modulus").get<std::int64_t>());
  throw std::invalid_argument("unknown index set kind: " + kind);
}

json to_json(const Word &w)
{
  return json(w.letters());
}

Word word_from_json(const json &j, const IndexSet &R)
{
  return Word(R, j.get<std::vector<std::int64_t>>());
}

json to_json(const RingElement &e)
{
  json terms = json::array();
  for (const auto &[w, c] : e.terms())
    terms.push_back({{"word", to_json(w)}, {"coeff", c.str()}});
  return json{{"index_set", to_json(e.index_set())},
              {"basis", e.basis() == Basis::F ? "f" : "u"},
              {"terms", std::move(terms)}};
}

RingElement ring_element_from_json(const json &j)
{
  IndexSet R = index_set_from_json(j.at("index_set"));
  const std::string basis = j.at("basis").get<std::string>();
  if (basis != "f" && basis != "u")
    throw std::invalid_argument("unknown basis tag: " + basis);
  RingElement e(R, basis == "f" ? Basis::F : Basis::U);
  for (const json &term : j.at("terms"))
    e.add_term(word_from_json(term.at("word"), R),
               Int(term.at("coeff").get<std::string>()));
  return e;
}

json to_json(const SL2Element &e)
{
  json terms = json::array();
  for (const auto &[t, c] : e.multiplicities())
    terms.push_back({{"t", t}, {"coeff", c.str()}});
  return json{{"terms", std::move(terms)}};
}

SL2Element sl2_element_from_json(const json &j)
{
  SL2Element e;
  for (const json &term : j.at("terms"))
    e.add_term(term.at("t").get<std::int64_t>(),
               Int(term.at("coeff").get<std::string>()));
  return e;
}

std::string rational_to_string(const Rational &q)
{
  return q.str();
}

Rational rational_from_string(const std::string &s)
{
  return Rational(s);
}

json to_json(const Presentation &p)
{
  json j;
  switch (p.variant) {
  case Variant::FreeHopf: j["variant"] = "free"; break;
  case Variant::FreeBijective: j["variant"] = "free_bij"; break;
  case Variant::Cyclic: j["variant"] = "cyclic"; break;
  }
  j["n"] = p.n;
  if (p.variant == Variant::Cyclic) {
    j["d"] = p.d;
    json f = json::array();
    for (const Rational &q : p.twist) f.push_back(rational_to_string(q));
    j["F"] = std::move(f);
  }
  return j;
}

Presentation presentation_from_json(const json &j)
{
  const std::string variant = j.at("variant").get<std::string>();
  const int n = j.at("n").get<int>();
  if (variant == "free") return Presentation::free_hopf(n);
  if (variant == "free_bij") return Presentation::free_bijective(n);
  if (variant == "cyclic") {
    std::vector<Rational> twist;
    for (const json &q : j.at("F"))
      twist.push_back(rational_from_string(q.get<std::string>()));
    return Presentation::cyclic(n, j.at("d").get<int>(), std::move(twist));
  }
  throw std::invalid_argument("unknown presentation variant: " + variant);
}

json to_json(const GenWord &w)
{
  json out = json::array();
  for (const Generator &g : w)
    out.push_back({{"r", g.r}, {"i", g.i}, {"j", g.j}});
  return out;
}

GenWord gen_word_from_json(const json &j)
{
  GenWord w;
  for (const json &g : j)
    w.push_back({g.at("r").get<std::int64_t>(), g.at("i").get<int>(),
                 g.at("j").get<int>()});
  return w;
}

json to_json(const AlgebraElement &e)
{
  json terms = json::array();
  for (const auto &[w, c] : e.terms())
    terms.push_back({{"word", to_json(w)}, {"coeff", rational_to_string(c)}});
  return json{{"terms", std::move(terms)}};
}

AlgebraElement algebra_element_from_json(const json &j)
{
  AlgebraElement e;
  for (const json &term : j.at("terms"))
    e.add_term(gen_word_from_json(term.at("word")),
               rational_from_string(term.at("coeff").get<std::string>()));
  return e;
}

json to_json(const ConfluenceReport &r)
{
  json failures = json::array();
  for (const ConfluenceFailure &f : r.failures)
    failures.push_back({{"word", to_json(f.word)},
                        {"left", to_json(f.left)},
                        {"right", to_json(f.right)}});
  return json{{"overlaps_checked", r.overlaps_checked},
              {"inclusions_checked", r.inclusions_checked},
              {"resolved", r.ok()},
              {"failures", std::move(failures)}};
}

} // namespace qfuse
