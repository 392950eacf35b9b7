#pragma once

#include <stdexcept>
#include <string>

namespace bialg {

/// Error raised by every library operation. The kind drives the C API status
/// code and the CLI exit code.
class Error : public std::runtime_error {
public:
    enum class Kind {
        input,       // malformed text, unknown letter, bad table
        size_bound,  // enumeration limit exceeded
        domain,      // mathematical precondition violated
    };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline Error input_error(const std::string& what) { return {Error::Kind::input, what}; }
inline Error size_bound_error(const std::string& what) { return {Error::Kind::size_bound, what}; }
inline Error domain_error(const std::string& what) { return {Error::Kind::domain, what}; }

} // namespace bialg
