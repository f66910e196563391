#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace lexiscope {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file or directory could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A required dictionary file is missing from the lexicon directory.
class MissingFileError : public Error {
 public:
  explicit MissingFileError(const std::filesystem::path& path);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

/// A dictionary line could not be parsed; loading is aborted.
class MalformedLineError : public Error {
 public:
  MalformedLineError(const std::filesystem::path& file, std::size_t line,
                     const std::string& reason);
  const std::filesystem::path& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::filesystem::path file_;
  std::size_t line_;
};

/// A record in ingested node data or a stored index violates its schema.
/// `line()` is 1-based, or 0 when the error is not tied to a line.
class SchemaError : public Error {
 public:
  SchemaError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A concept scope was requested for a node that is not a class or method.
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// Domain intersection needs at least two project vocabularies.
class TooFewProjectsError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexiscope
