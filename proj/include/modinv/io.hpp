#pragma once

#include <json.hpp>
#include <string>

#include "modinv/aggregate.hpp"

namespace modinv::io {

/// %.17g; non-finite values become "nan", "inf" or "-inf".
std::string format_double(double v);

/// JSON text with every floating value printed to 17 significant digits.
/// Object keys keep insertion order only if the json value does.
std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

/// CSV with header `m,n,y,term,partial`.
std::string series_csv(const aggregate::CompleteSumSeries& series);

}  // namespace modinv::io
