#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "gendem/frac.hpp"

namespace gendem {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline BigInt rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline Rat to_rat(const Frac& f) { return Rat(f.num(), f.den()); }

// "p/q" or "p"; used by the CLI and the JSON emitters.
inline std::string rat_str(const Rat& x) {
  if (rat_den(x) == 1) return rat_num(x).str();
  return rat_num(x).str() + "/" + rat_den(x).str();
}

inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected rational 'p' or 'p/q', got '" + s + "'");
  }
}

// Enumeration size guard. Carries the cap so callers can name it.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::size_t cap, const std::string& what_kind)
      : std::runtime_error("size cap of " + std::to_string(cap) +
                           " exceeded while enumerating " + what_kind),
        cap(cap) {}
  std::size_t cap;
};

constexpr std::size_t kDefaultCap = 1'000'000;

inline void hash_mix(std::size_t& h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

}  // namespace gendem
