#pragma once

#include <stdexcept>

namespace maxint {

/// Base type for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidTermRank : public Error { public: using Error::Error; };
class InvalidMaxCardinality : public Error { public: using Error::Error; };
class InvalidCell : public Error { public: using Error::Error; };
class EmptyCollection : public Error { public: using Error::Error; };
class InvalidPrefixLength : public Error { public: using Error::Error; };
class FormatError : public Error { public: using Error::Error; };
class InvalidDocument : public Error { public: using Error::Error; };
class InsufficientData : public Error { public: using Error::Error; };

}  // namespace maxint
