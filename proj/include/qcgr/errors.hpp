#pragma once

#include <stdexcept>
#include <string>

namespace qcgr {

/// Bad input: out-of-box partition, invalid (k, n), malformed text, ...
/// The CLI maps this to exit code 2 (usage error).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation produced a value that violates a structural invariant
/// (negative structure constant after rim-hook cancellation, non-integral
/// hook dimension, ...). Mapped to exit code 1. Never silently clamped.
class invariant_violation : public std::runtime_error {
public:
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit coefficient arithmetic overflowed. Wraparound would silently
/// corrupt every downstream spectral result, so this is fatal.
class arithmetic_overflow : public invariant_violation {
public:
    explicit arithmetic_overflow(const std::string& what) : invariant_violation(what) {}
};

/// Power iteration failed to reach the requested residual within max_iter.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double last_estimate, double last_residual,
                      long iterations)
        : std::runtime_error(what),
          last_estimate(last_estimate),
          last_residual(last_residual),
          iterations(iterations) {}

    double last_estimate;
    double last_residual;
    long iterations;
};

/// Malformed or inconsistent product-table cache file.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* where) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow(std::string("64-bit overflow in ") + where);
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* where) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow(std::string("64-bit overflow in ") + where);
    return r;
}

}  // namespace qcgr
