// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvetext {

// Structured error for malformed input; carries the 1-based line number
// (text formats) or byte offset (binary formats) when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0, std::size_t byte_offset = 0)
        : std::runtime_error(decorate(msg, line, byte_offset)), line_(line), byte_offset_(byte_offset) {}

    std::size_t line() const { return line_; }
    std::size_t byte_offset() const { return byte_offset_; }

private:
    static std::string decorate(const std::string& msg, std::size_t line, std::size_t off) {
        if (line > 0) return "line " + std::to_string(line) + ": " + msg;
        if (off > 0) return "byte " + std::to_string(off) + ": " + msg;
        return msg;
    }

    std::size_t line_ = 0;
    std::size_t byte_offset_ = 0;
};

}  // namespace curvetext
