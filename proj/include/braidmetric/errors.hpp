#pragma once

#include <stdexcept>
#include <string>

namespace braidmetric {

/// Malformed external input: bad word text, mismatched strand counts,
/// unreadable or ill-formed files.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was invoked outside its contract, e.g. applying a move whose
/// pattern is absent or asking for the positive-word name sequence of a word
/// with inverse letters.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural invariant the library is built on failed. This is never a
/// user error; it means the code (or the mathematics it encodes) is wrong,
/// and it must surface instead of being swallowed.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace braidmetric
