#pragma once

#include <stdexcept>
#include <string>

namespace ssekit {

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape disagreement between operands.
class dimension_error : public error {
public:
    using error::error;
};

// Input outside an operation's domain (negative entry, non-stochastic row, ...).
class domain_error : public error {
public:
    using error::error;
};

// Text that does not parse as a matrix/chain document.
class parse_error : public error {
public:
    using error::error;
};

// An eigenvalue certificate that fails its defining identities.
class certificate_error : public error {
public:
    using error::error;
};

// A construction step produced (or would produce) a non-positive matrix.
class positivity_error : public error {
public:
    using error::error;
};

// Input lacks the structure an operation relies on (e.g. non-constant row
// sums where a constant is forced).
class structural_error : public error {
public:
    using error::error;
};

// Result not unique (reducible matrix where a Perron vector is requested).
class ambiguity_error : public error {
public:
    using error::error;
};

// The splitting pipeline would exceed the configured output size.
class size_cap_error : public error {
public:
    size_cap_error(const std::string& msg, std::string required_size)
        : error(msg), required_size(std::move(required_size)) {}

    // Decimal rendering of the target size M that broke the cap.
    std::string required_size;
};

} // namespace ssekit
