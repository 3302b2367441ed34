#ifndef BIDIAG_ERRORS_HPP
#define BIDIAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bidiag {

// Exact or floating zero pivot / zero diagonal where a nonzero is required.
struct singular_error : std::runtime_error {
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// Sign-pattern precondition (nonnegative / checkerboard) not met.
struct pattern_error : std::domain_error {
    explicit pattern_error(const std::string& what) : std::domain_error(what) {}
};

// A scalar function was asked for more derivatives than it provides.
struct capability_error : std::domain_error {
    explicit capability_error(const std::string& what) : std::domain_error(what) {}
};

// Neville elimination hit a zero pivot with a nonzero target entry:
// the input has no totally nonnegative bidiagonal factorization.
struct not_tn_error : std::runtime_error {
    explicit not_tn_error(const std::string& what) : std::runtime_error(what) {}
};

// An interval enclosure straddles zero, so a sign cannot be certified.
struct enclosure_error : std::runtime_error {
    explicit enclosure_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bidiag

#endif
