#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pivots {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-range input: unknown vertices, bad files, size caps.
// The CLI maps these to exit code 2.
class input_error : public error {
public:
    using error::error;
};

// A mathematically inapplicable operation: pivot on a singular submatrix,
// reduction rule whose pattern is absent, and so on. Exit code 1 in the CLI.
class math_error : public error {
public:
    using error::error;
};

class invalid_vertex_error : public input_error {
public:
    explicit invalid_vertex_error(const std::string& label)
        : input_error("unknown vertex: " + label), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class over_cap_error : public input_error {
public:
    over_cap_error(std::size_t n, std::size_t cap, const std::string& what_for)
        : input_error(what_for + " limited to " + std::to_string(cap) +
                      " vertices, got " + std::to_string(n)) {}
};

class ground_mismatch_error : public input_error {
public:
    ground_mismatch_error() : input_error("graphs are not on the same vertex set") {}
};

class not_graphic_error : public input_error {
public:
    not_graphic_error()
        : input_error("set system does not describe a graph: empty set not in family") {}
};

class illegal_string_error : public input_error {
public:
    explicit illegal_string_error(const std::string& letter)
        : input_error("not a legal string: letter '" + letter +
                      "' does not occur exactly twice"),
          letter_(letter) {}
    const std::string& letter() const { return letter_; }

private:
    std::string letter_;
};

class unknown_letter_error : public input_error {
public:
    explicit unknown_letter_error(const std::string& letter)
        : input_error("letter '" + letter + "' does not occur in the string") {}
};

class parse_error : public input_error {
public:
    using input_error::input_error;
};

namespace detail {
inline std::string join_labels(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    out += "}";
    return out;
}
}  // namespace detail

class pivot_undefined_error : public math_error {
public:
    explicit pivot_undefined_error(std::vector<std::string> set)
        : math_error("pivot undefined: principal submatrix on " +
                     detail::join_labels(set) + " is singular"),
          set_(std::move(set)) {}
    const std::vector<std::string>& set() const { return set_; }

private:
    std::vector<std::string> set_;
};

class dual_pivot_undefined_error : public math_error {
public:
    explicit dual_pivot_undefined_error(std::vector<std::string> set)
        : math_error("dual pivot undefined: loop-toggled submatrix on " +
                     detail::join_labels(set) + " is singular"),
          set_(std::move(set)) {}
    const std::vector<std::string>& set() const { return set_; }

private:
    std::vector<std::string> set_;
};

class not_elementary_error : public math_error {
public:
    using math_error::math_error;
};

class rule_inapplicable_error : public math_error {
public:
    using math_error::math_error;
};

}  // namespace pivots
