#ifndef PQSYM_RATIONAL_HPP
#define PQSYM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pqsym {

// Exact arithmetic everywhere. Integrality is always asserted, never assumed.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) throw std::logic_error("expected integer, got " + r.str());
    return numerator(r);
}

// "a" when integral, "a/b" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(std::string_view text);

}  // namespace pqsym

#endif
