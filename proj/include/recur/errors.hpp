/** @file errors.hpp
 *  @brief Error types thrown by the library.
 *
 *  Every failure carries a one-line message naming the offending value or
 *  field, so the CLI can forward it verbatim as its diagnostic.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace recur {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A weight passed to a measure-space constructor is negative.
class NegativeWeight : public Error {
public:
    using Error::Error;
};

/// A measure space needs at least one point.
class EmptySpace : public Error {
public:
    using Error::Error;
};

/// Operands are bound to spaces of different sizes.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

/// A forward map is not a permutation of the point set.
class NotBijective : public Error {
public:
    using Error::Error;
};

/// A forward map moves a point onto one of different weight.
class NotMeasurePreserving : public Error {
public:
    using Error::Error;
};

/// A point index lies outside its space.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A return-time query for a point outside the queried set.
class NotInSet : public Error {
public:
    using Error::Error;
};

/// An operation that needs a nonempty set received an empty one.
class EmptySet : public Error {
public:
    using Error::Error;
};

/// A generator or constructor parameter is out of range.
class BadParam : public Error {
public:
    using Error::Error;
};

/// An interval arrangement is not a permutation.
class BadPermutation : public Error {
public:
    using Error::Error;
};

/// An interval length is zero or negative.
class NonpositiveLength : public Error {
public:
    using Error::Error;
};

/// A point lies outside an exchange's domain [0, total).
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Malformed input text: JSON, rational strings, or unknown fields.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace recur
