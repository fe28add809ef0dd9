#ifndef SEMIDECO_ERRORS_HPP
#define SEMIDECO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semideco {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller-fault errors: malformed input, unknown identifiers, broken
/// preconditions. The CLI maps these to exit code 2.
class input_error : public error {
public:
    explicit input_error(const std::string& what) : error(what) {}
};

/// A candidate element map breaks one of the two semi-decomposition axioms.
/// Carries the witnesses: axiom 1 names the point x with x not in F(x),
/// axiom 2 names x in F(y) with F(x) not contained in F(y).
class axiom_violation : public input_error {
public:
    axiom_violation(int axiom, std::string x, std::string y)
        : input_error("axiom " + std::to_string(axiom) + " violated at (" + x +
                      (y.empty() ? "" : ", " + y) + ")"),
          axiom_(axiom), x_(std::move(x)), y_(std::move(y)) {}

    int axiom() const { return axiom_; }
    const std::string& x() const { return x_; }
    const std::string& y() const { return y_; }

private:
    int axiom_;
    std::string x_;
    std::string y_;
};

/// Minimality was queried on a set that is not invariant.
class not_invariant_error : public input_error {
public:
    explicit not_invariant_error(const std::string& what) : input_error(what) {}
};

/// A user-supplied quasi-recurrent superset does not contain Q(F).
class superset_violation : public input_error {
public:
    explicit superset_violation(const std::string& what) : input_error(what) {}
};

}  // namespace semideco

#endif
