#pragma once

#include <complex>
#include <json.hpp>
#include <string>

namespace tmra::cli {

using ojson = nlohmann::ordered_json;

/// 17 significant digits; non-finite values become "nan"/"inf"/"-inf".
std::string format_real(double v);

/// JSON text with every floating-point number at 17 significant digits
/// (non-finite numbers as null). Two-space indentation, trailing newline.
std::string dump_json(const ojson& j);

ojson complex_json(std::complex<double> z);

}  // namespace tmra::cli
