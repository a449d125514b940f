#pragma once

#include <stdexcept>
#include <string>

namespace lhnet {

struct malformed_cell : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_in_complex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_restriction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct incomplete_section : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometric predicate whose decision margin fell below epsilon.
struct degenerate_geometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant the library guarantees was observed to fail.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// Input file problem; carries a 1-based line number when known.
struct parse_error : std::runtime_error {
    int line = 0;
    parse_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

}  // namespace lhnet
