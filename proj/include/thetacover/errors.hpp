#pragma once

#include <stdexcept>
#include <string>

namespace thetacover {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text-format parse failure. `line` is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// A size guard or enumeration ceiling tripped before the computation started.
struct GuardError : Error {
    using Error::Error;
};

/// hole_certificate called with even p: the inequality is valid but the
/// paper's construction only covers odd p.
struct EvenHoleError : Error {
    using Error::Error;
};

}
