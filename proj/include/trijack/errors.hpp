#ifndef TRIJACK_ERRORS_HPP
#define TRIJACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trijack {

// Division by zero and other invalid exact-arithmetic requests.
struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation at a pole, or residue requested at a pole of order >= 2.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An identity or rank condition the engine relies on failed.  These are
// never caught internally: they mean either a bug or a genuinely
// inconsistent configuration, and the caller must see them.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input (CLI arguments, malformed serialized data, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace trijack

#endif
