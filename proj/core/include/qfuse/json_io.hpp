#pragma once

#include "qfuse/configuration.hpp"
#include "qfuse/rewrite.hpp"
#include "qfuse/ring.hpp"
#include "qfuse/sl2.hpp"

#include <nlohmann/json.hpp>

namespace qfuse {

using json = nlohmann::ordered_json;

// index sets: {"kind":"nat"|"int"|"mod","modulus":2d}
json to_json(const IndexSet &R);
IndexSet index_set_from_json(const json &j);

// words: JSON arrays of integers
json to_json(const Word &w);
Word word_from_json(const json &j, const IndexSet &R);

// ring elements:
// {"index_set":{...},"basis":"f"|"u","terms":[{"word":[...],"coeff":"<decimal>"}]}
json to_json(const RingElement &e);
RingElement ring_element_from_json(const json &j);

// SL2 elements: {"terms":[{"t":3,"coeff":"2"}]} sorted by t
json to_json(const SL2Element &e);
SL2Element sl2_element_from_json(const json &j);

// presentations: {"variant":"free"|"free_bij"|"cyclic","n":..,"d":..,"F":["1","2"]}
json to_json(const Presentation &p);
Presentation presentation_from_json(const json &j);

// generator words: arrays of {"r":..,"i":..,"j":..}
json to_json(const GenWord &w);
GenWord gen_word_from_json(const json &j);

// algebra elements: {"terms":[{"word":[...],"coeff":"p/q"}]}
json to_json(const AlgebraElement &e);
AlgebraElement algebra_element_from_json(const json &j);

json to_json(const ConfluenceReport &r);

std::string rational_to_string(const Rational &q);
Rational rational_from_string(const std::string &s);

} // namespace qfuse
