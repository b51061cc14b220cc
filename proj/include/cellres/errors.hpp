#ifndef CELLRES_ERRORS_HPP
#define CELLRES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cellres {

// Bad input text. `position` is a 0-based offset into the parsed string.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Operands live in polynomial rings with different variable counts.
struct ContextMismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

// Exponent or degree left the supported desk-scale range.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInIdealError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violation of q(g(y*u_j)) being contained in q(u_j): the decomposition
// function of the order is not regular.  z is the offending variable.
struct RegularityWitness {
    int step = 0;   // 1-based position j in the order
    int var_y = 0;  // y in q(u_j)
    int var_z = 0;  // z in q(g(y*u_j)) but not in q(u_j)
};

struct NotRegularError : std::runtime_error {
    RegularityWitness witness;
    NotRegularError(const std::string& what, RegularityWitness w)
        : std::runtime_error(what), witness(w) {}
};

// Instance exceeds a configured combinatorial bound.
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incidence data fed to the homology engine does not square to zero.
struct BoundaryNotComplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cellres

#endif
