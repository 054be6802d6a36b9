#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tailor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data. Carries the byte offset (for stream parsers) or the
// line number (for line-oriented files) where parsing gave up.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    static ParseError at_line(const std::string& file, std::size_t line,
                              const std::string& msg) {
        ParseError e(file + ":" + std::to_string(line) + ": " + msg);
        e.line = line;
        return e;
    }
    std::size_t offset = 0;
    std::size_t line = 0;

  private:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Inputs are well-formed but the requested configuration cannot be honored
// (unknown namespace layout, missing category, bad system name, ...).
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    IoError(const std::string& msg, const std::string& path)
        : Error(msg + ": " + path), path(path) {}
    std::string path;
};

// Persisted data fails its checksum.
struct IntegrityError : Error {
    using Error::Error;
};

// A metric is mathematically undefined for the given input.
struct MetricError : Error {
    using Error::Error;
};

}  // namespace tailor
