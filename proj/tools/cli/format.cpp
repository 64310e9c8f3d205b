#include "format.hpp"

#include <cmath>
#include <cstdio>

namespace tmra::cli {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write(const ojson& j, int depth, std::string& s) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case ojson::value_t::number_float: {
      const double v = j.get<double>();
      s += std::isfinite(v) ? format_real(v) : "null";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        s += "[]";
        return;
      }
      // Scalar-only arrays ([re, im] pairs, small rows) stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && e.is_primitive();
      if (flat) {
        s += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) s += ", ";
          write(j[i], depth + 1, s);
        }
        s += ']';
        return;
      }
      s += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        s += pad;
        write(j[i], depth + 1, s);
        s += i + 1 < j.size() ? ",\n" : "\n";
      }
      s += close + ']';
      return;
    }
    case ojson::value_t::object: {
      if (j.empty()) {
        s += "{}";
        return;
      }
      s += "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : j.items()) {
        s += pad + ojson(key).dump() + ": ";
        write(value, depth + 1, s);
        s += ++i < j.size() ? ",\n" : "\n";
      }
      s += close + '}';
      return;
    }
    default:
      s += j.dump();
  }
}

}  // namespace

std::string dump_json(const ojson& j) {
  std::string s;
  write(j, 0, s);
  s += '\n';
  return s;
}

ojson complex_json(std::complex<double> z) { return ojson::array({z.real(), z.imag()}); }

}  // namespace tmra::cli
