// Exact rational scalars. Everything downstream (root data, Weyl matrices,
// pairings, dominance) is computed over Rat; no floating point anywhere.
#pragma once

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>

namespace pdc {

using Rat = boost::rational<long long>;

// Configuration / input problems (bad type tags, malformed vectors, caps).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration would exceed the configured element cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_integral(const Rat& r) { return r.denominator() == 1; }

inline long long to_integer(const Rat& r) {
  if (!is_integral(r)) throw ConfigError("expected an integer, got " + std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
  return r.numerator();
}

// Accepts "a" or "a/b" with optional sign.
Rat rat_parse(const std::string& text);

// "a" when integral, otherwise "a/b" with b > 0.
std::string rat_str(const Rat& r);

}  // namespace pdc
