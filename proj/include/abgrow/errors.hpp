#pragma once

#include <stdexcept>
#include <string>

namespace abgrow {

// Failure categories; the CLI maps these to process exit codes.
enum class errc {
    parse,      // malformed input text
    validation, // well-formed input that violates a precondition
    resource,   // an explicit cap was exceeded
    verify,     // a self-check or cross-check failed
    internal,   // broken invariant, i.e. a bug
};

class Error : public std::runtime_error {
public:
    Error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace abgrow
