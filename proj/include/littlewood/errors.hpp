#ifndef LITTLEWOOD_ERRORS_HPP
#define LITTLEWOOD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace littlewood {

// Base class of all domain errors thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_character : error {
    std::size_t position;
    explicit invalid_character(std::size_t pos)
        : error("invalid character at position " + std::to_string(pos)), position(pos) {}
};

struct not_reciprocal : error {
    not_reciprocal() : error("polynomial is not reciprocal") {}
};

struct zero_polynomial : error {
    zero_polynomial() : error("zero polynomial") {}
};

struct budget_exceeded : error {
    using error::error;
};

struct storage_error : error {
    using error::error;
};

struct not_aligned : error {
    not_aligned() : error("decomposition is not aligned") {}
};

struct length_mismatch : error {
    using error::error;
};

struct not_nonnegative : error {
    double witness_t;
    double witness_value;
    not_nonnegative(double t, double v)
        : error("trigonometric polynomial is negative at t = " + std::to_string(t) +
                " (value " + std::to_string(v) + ")"),
          witness_t(t), witness_value(v) {}
};

struct odd_unit_circle_multiplicity : error {
    using error::error;
};

struct zero_leading : error {
    zero_leading() : error("leading coefficient is zero") {}
};

struct not_normalized : error {
    using error::error;
};

struct untagged_frequency : error {
    using error::error;
};

struct hypothesis_fails : error {
    std::string report;
    explicit hypothesis_fails(std::string rep)
        : error("proposition hypothesis fails:\n" + rep), report(std::move(rep)) {}
};

struct not_cancellation : error {
    not_cancellation() : error("family is not in the cancellation case") {}
};

struct invalid_pattern : error {
    using error::error;
};

struct delta_mismatch : error {
    using error::error;
};

struct both_zero : error {
    both_zero() : error("both sine polynomials are identically zero") {}
};

struct bad_support : error {
    using error::error;
};

} // namespace littlewood

#endif
