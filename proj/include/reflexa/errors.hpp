#ifndef REFLEXA_ERRORS_HPP
#define REFLEXA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reflexa {

/// Malformed user input: syntax errors, bad specs, incompatible operands.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// The quotient by the given ideal is not finite-dimensional.
class NotFiniteDimensional : public std::runtime_error {
public:
    explicit NotFiniteDimensional(std::string offending_var)
        : std::runtime_error("quotient is not finite-dimensional: variable '" + offending_var +
                             "' has no pure power among the leading terms"),
          variable(std::move(offending_var)) {}
    std::string variable;
};

/// A configured dimension/step budget was exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed. Every certified verdict is backed by a
/// machine-checkable witness; a contradiction between two routes to the same
/// fact is never swallowed.
class InternalCheckFailure : public std::logic_error {
public:
    explicit InternalCheckFailure(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalCheckFailure(what);
}

}  // namespace reflexa

#endif
