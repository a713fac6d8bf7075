#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autodel {

// Bad argument or violated operation precondition.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input. byte_offset() points at the offending byte.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (at byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A configured cap (group order, factorial size, enumeration order, ...) was exceeded.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A multiplication table failed one of the group axioms.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace autodel
