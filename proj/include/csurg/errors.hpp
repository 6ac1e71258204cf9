#pragma once

#include <stdexcept>
#include <string>

namespace csurg {

/// Input outside an operation's mathematical domain.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Name not found in a catalog.
struct LookupError : std::runtime_error {
    explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check between two independent computation routes failed.
/// Signals a bug or a convention drift, never bad user input.
struct InternalAssertionError : std::logic_error {
    explicit InternalAssertionError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_assert(bool ok, const std::string& msg) {
    if (!ok)
        throw InternalAssertionError(msg);
}

}  // namespace csurg
