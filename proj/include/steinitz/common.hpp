#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace steinitz {

using i64 = std::int64_t;
using i128 = __int128;

// Error taxonomy; the C API maps each type to a status code.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};
// Mathematically invalid input (e does not divide m, d not squarefree, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};
// Valid mathematics that this library deliberately does not cover.
struct unsupported_error : error {
    explicit unsupported_error(const std::string& what) : error(what) {}
};
// Ideal with an odd exponent fed to a square-root extraction.
struct not_a_square_error : error {
    explicit not_a_square_error(const std::string& what) : error(what) {}
};
// alpha defines a trivial extension (it is a square).
struct degenerate_error : error {
    explicit degenerate_error(const std::string& what) : error(what) {}
};
// Enumeration would exceed a configured cap.
struct capacity_error : error {
    explicit capacity_error(const std::string& what) : error(what) {}
};
// Two independent computation paths disagreed.
struct consistency_error : error {
    explicit consistency_error(const std::string& what) : error(what) {}
};
// Enumerated data contradicts a proved bound.
struct verification_error : error {
    explicit verification_error(const std::string& what) : error(what) {}
};

inline i64 checked_i64(i128 v, const char* ctx) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw capacity_error(std::string(ctx) + ": value exceeds 64-bit range");
    return static_cast<i64>(v);
}

}  // namespace steinitz
