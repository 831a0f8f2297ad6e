#pragma once

// JSON and plain-text renderings of hypothesis checks, section reports,
// census tables and the reference wreath model.

#include <string>

#include "json.hpp"
#include "unitwreath/catalog.hpp"
#include "unitwreath/construct.hpp"
#include "unitwreath/oracle.hpp"

namespace unitwreath {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteGroup& g, const HypothesisReport& r);
std::string to_text(const FiniteGroup& g, const HypothesisReport& r);

Json to_json(const FiniteGroup& g, const SectionReport& r);
// Step-by-step derivation: h, its conjugates, X, the section orders, checks.
std::string to_text(const FiniteGroup& g, const SectionReport& r);

Json to_json(const Census& c);
std::string to_text(const Census& c);

Json to_json(const AggregateVerdict& v);
std::string to_text(const AggregateVerdict& v);

// Multiplication table plus generator indices.
Json to_json(const WreathModel& w);

}  // namespace unitwreath
