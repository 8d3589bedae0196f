#ifndef CREMONA_ERRORS_HPP
#define CREMONA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

struct CremonaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeMismatch : CremonaError {
    using CremonaError::CremonaError;
};

struct AllZero : CremonaError {
    using CremonaError::CremonaError;
};

// Raised when an operation would produce more terms than the configured
// limit (default 200000, see term_limit()).
struct ResourceLimit : CremonaError {
    using CremonaError::CremonaError;
};

struct DegenerateMap : CremonaError {
    using CremonaError::CremonaError;
};

struct NotQuadratic : CremonaError {
    using CremonaError::CremonaError;
};

struct InternalInconsistency : CremonaError {
    using CremonaError::CremonaError;
};

struct SingularMatrix : CremonaError {
    using CremonaError::CremonaError;
};

struct LatticeMismatch : CremonaError {
    using CremonaError::CremonaError;
};

struct ChartDomainError : CremonaError {
    using CremonaError::CremonaError;
};

struct NotMonic : CremonaError {
    using CremonaError::CremonaError;
};

struct NotAutomorphism : CremonaError {
    using CremonaError::CremonaError;
};

struct UnsupportedShape : CremonaError {
    using CremonaError::CremonaError;
};

struct IdentityMap : CremonaError {
    using CremonaError::CremonaError;
};

struct InconclusiveHorizon : CremonaError {
    using CremonaError::CremonaError;
};

struct ParseError : CremonaError {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : CremonaError(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Global cap on the number of terms any polynomial operation may produce.
// Overridable through the CREMONA_TERM_LIMIT environment variable (CLI) or
// directly in tests via set_term_limit / TermLimitGuard.
std::size_t term_limit();
void set_term_limit(std::size_t n);

struct TermLimitGuard {
    std::size_t saved;
    explicit TermLimitGuard(std::size_t n) : saved(term_limit()) { set_term_limit(n); }
    ~TermLimitGuard() { set_term_limit(saved); }
};

}  // namespace cremona

#endif
