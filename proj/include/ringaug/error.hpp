#pragma once

#include <stdexcept>
#include <string>

namespace ringaug {

// Base type for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Argument outside its documented domain (bad index, bad count, ...).
class DomainError : public Error { public: using Error::Error; };

// A ring-only operation was applied to a polygon without a partition.
class NotARingError : public Error { public: using Error::Error; };

// Invalid configuration (parameter range with min > max, etc).
class ConfigError : public Error { public: using Error::Error; };

// Affine matrix is singular (or numerically indistinguishable from it).
class DegenerateTransformError : public Error { public: using Error::Error; };

// No vertices survived; there is nothing to reconnect.
class EmptyPolygonError : public Error { public: using Error::Error; };

// One or two survivors: reconnection would not produce a polygon.
class DegeneratePolygonError : public Error { public: using Error::Error; };

// Inputs disagree with each other (e.g. a clip vertex that references a
// survivor pair that is not consecutive).
class InconsistencyError : public Error { public: using Error::Error; };

// Metric asked for on an empty input.
class UndefinedMetricError : public Error { public: using Error::Error; };

// Index sequence violates a metric precondition (duplicates, out of range).
class InvalidSequenceError : public Error { public: using Error::Error; };

// File could not be parsed as JSON.
class ParseError : public Error { public: using Error::Error; };

// File parsed but the content does not follow the expected schema.
class FormatError : public Error { public: using Error::Error; };

// Format tag not recognized by reader/writer.
class UnsupportedFormatError : public Error { public: using Error::Error; };

// Filesystem-level failure (unreadable/unwritable path).
class IoError : public Error { public: using Error::Error; };

// Annotation cannot be rendered.
class RenderError : public Error { public: using Error::Error; };

}  // namespace ringaug
