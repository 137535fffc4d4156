#ifndef RECTADD_ERRORS_HPP
#define RECTADD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rectadd {

// Parameter hits a pole of the computation (zero hook denominator,
// coinciding eigenvalues in the triangular Jack solve, ...).
class singular_parameter_error : public std::runtime_error {
public:
    explicit singular_parameter_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A Pochhammer or leading product required by a moment/cumulant
// transform vanishes at the given (q, gamma).
class degenerate_parameter_error : public std::runtime_error {
public:
    explicit degenerate_parameter_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Bad user input: malformed rational, M > N, non-normalized measure, ...
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Always-on internal invariant check (exact divisibility, block
// structure, ...). Violations are bugs, not user errors.
#define RECTADD_CHECK(cond, msg)                                     \
    do {                                                             \
        if (!(cond)) {                                               \
            throw std::logic_error(std::string("internal error: ") + \
                                   (msg));                           \
        }                                                            \
    } while (0)

} // namespace rectadd

#endif
