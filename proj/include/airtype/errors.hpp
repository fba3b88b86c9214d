#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace airtype {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A numeric or structural argument violated a precondition.
/// The message always names the offending field.
class InvalidParameterError : public Error {
public:
    InvalidParameterError(std::string field, const std::string& detail)
        : Error(field + ": " + detail), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Run-length data that cannot decode to a mask of the declared size.
class MalformedRleError : public Error {
public:
    using Error::Error;
};

/// Base for file-level problems.
class IoError : public Error {
public:
    using Error::Error;
};

/// The named file does not exist or cannot be opened.
class FileNotFoundError : public IoError {
public:
    using IoError::IoError;
};

/// A PGM stream whose magic, header tokens, or pixel payload are unusable.
class MalformedPgmError : public IoError {
public:
    using IoError::IoError;
};

/// Image dimensions that are non-positive or imply an absurd pixel count.
class DimensionOverflowError : public IoError {
public:
    using IoError::IoError;
};

/// A manifest document that does not match the expected schema.
/// The message names the offending field.
class ManifestError : public IoError {
public:
    using IoError::IoError;
};

/// Geometry queried on an empty point set.
class EmptyGeometryError : public Error {
public:
    using Error::Error;
};

/// A detection whose mask has no foreground pixels; measurement is impossible.
class EmptyDetectionError : public Error {
public:
    explicit EmptyDetectionError(std::string image_id)
        : Error(image_id.empty() ? std::string("mask has no foreground pixels")
                                 : "record '" + image_id + "': mask has no foreground pixels"),
          image_id_(std::move(image_id)) {}

    const std::string& image_id() const noexcept { return image_id_; }

private:
    std::string image_id_;
};

/// Bad run configuration: empty catalog, unknown shortcut, unusable value.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// An evaluation run fed records that cannot be scored.
/// Carries the ids of the offending records.
class EvaluationInputError : public Error {
public:
    EvaluationInputError(const std::string& what_arg, std::vector<std::string> image_ids)
        : Error(what_arg), image_ids_(std::move(image_ids)) {}

    const std::vector<std::string>& image_ids() const noexcept { return image_ids_; }

private:
    std::vector<std::string> image_ids_;
};

/// A silhouette that would rasterize below the minimum usable size.
/// The message names the coarsest ground resolution that would still work.
class TooSmallError : public Error {
public:
    using Error::Error;
};

}  // namespace airtype
