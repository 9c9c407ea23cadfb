#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccw {

enum class error_code {
    index_out_of_range,
    self_loop,
    parse_error,
    invalid_cover,
    not_a_permutation,
    limit_exceeded,
    cyclic_orientation,
    not_transitive,
    not_incomparability,
    invalid_query,
    invalid_argument,
    not_an_intersection,
    degenerate_width,
};

const char* to_string(error_code code) noexcept;

class error : public std::runtime_error {
public:
    error(error_code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    error_code code() const noexcept { return code_; }

private:
    error_code code_;
};

class parse_error : public error {
public:
    parse_error(std::size_t line, std::size_t column, const std::string& what)
        : error(error_code::parse_error,
                std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ccw
