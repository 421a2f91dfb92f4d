#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

/* Base class for everything thrown by this library. */
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Operands belong to different rings (field or variable list differs). */
class ring_mismatch : public error {
public:
    using error::error;
};

/* Division by an identically-zero divisor. */
class division_by_zero : public error {
public:
    using error::error;
};

/* Exact division requested but the divisor does not divide the dividend. */
class inexact_division : public error {
public:
    using error::error;
};

/* A substitution produced an identically-zero denominator. */
class undefined_substitution : public error {
public:
    using error::error;
};

/* Point evaluation hit a vanishing denominator or a missing coordinate. */
class evaluation_error : public error {
public:
    using error::error;
};

/* Text input rejected; `position` is a 0-based byte offset into the input. */
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/* A structured file (scenario, map, report) violates its schema.
 * `field_path` names the offending location, e.g. "sec2.scn:14: step.op". */
class schema_error : public error {
public:
    schema_error(const std::string& field_path, const std::string& what)
        : error(field_path + ": " + what), field_path_(field_path) {}

    const std::string& field_path() const { return field_path_; }

private:
    std::string field_path_;
};

} // namespace cremona
