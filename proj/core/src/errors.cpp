#include "lexiscope/errors.hpp"

namespace lexiscope {

MissingFileError::MissingFileError(const std::filesystem::path& path)
    : Error("missing dictionary file: " + path.string()), path_(path) {}

MalformedLineError::MalformedLineError(const std::filesystem::path& file, std::size_t line,
                                       const std::string& reason)
    : Error(file.string() + ":" + std::to_string(line) + ": " + reason),
      file_(file),
      line_(line) {}

SchemaError::SchemaError(std::size_t line, const std::string& reason)
    : Error(line == 0 ? reason : "line " + std::to_string(line) + ": " + reason), line_(line) {}

}  // namespace lexiscope
