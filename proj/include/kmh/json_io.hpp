#pragma once

// JSON interchange shared by the CLI and the tests: the matrix format
// {"n": ..., "entries": [[...], ...]} and series/number serialization with a
// deterministic key order.

#include "kmh/cartan.hpp"
#include "kmh/series.hpp"

#include <json.hpp>

namespace kmh {

using OrderedJson = nlohmann::ordered_json;

// Accepts integer entries as JSON numbers or as decimal strings (for values
// beyond 64 bits). Schema problems raise ParseError; Cartan-axiom violations
// propagate from validate as std::invalid_argument.
CartanMatrix matrix_from_json(const OrderedJson& j);

OrderedJson matrix_to_json(const CartanMatrix& a);

// Array of "p/q" lowest-terms strings, index = degree.
OrderedJson series_to_json(const TruncatedSeries& s);

// JSON number when the value fits in 64 bits, decimal string otherwise.
OrderedJson integer_to_json(const Integer& value);

} // namespace kmh
