#pragma once

#include <stdexcept>
#include <string>

namespace muntzkit {

// Caller-supplied data violated a documented precondition.  CLI maps this
// (and subclasses) to exit code 2.
class rejected_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A linear system was too ill-conditioned to solve reliably.  This is a
// property of the input data, so it belongs to the rejected family.
class ill_conditioned : public rejected_input {
public:
    using rejected_input::rejected_input;
};

// A sampled function value came back non-finite.  The message names the
// sample location.
class evaluation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed quantity violated one of its own certified bounds.  Reaching
// this indicates a bug in the library, never bad input.  CLI maps it to
// exit code 1.
class certificate_failure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace muntzkit
