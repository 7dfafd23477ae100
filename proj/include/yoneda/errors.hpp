#pragma once

#include <stdexcept>
#include <string>

namespace yoneda {

// Bad user-supplied data: malformed files, shape mismatches, axiom failures at load time.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A consistency condition that is a theorem of the underlying mathematics failed at
// runtime. Either the library has a bug or a hand-built object (functor, map) is not
// what it claims to be. Never caught in normal control flow.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalCheckError(what);
}

inline void require_input(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

} // namespace yoneda
