#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codesift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
  public:
    ParseError(std::string path, std::size_t line, std::string message)
        : Error(path + ":" + std::to_string(line) + ": " + message),
          path_(std::move(path)),
          line_(line),
          message_(std::move(message))
    {
    }

    [[nodiscard]] const std::string& path() const noexcept { return path_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

  private:
    std::string path_;
    std::size_t line_;
    std::string message_;
};

class IoError : public Error
{
  public:
    using Error::Error;
};

/// A persisted file is malformed. `record_id` names the offending record when known.
class FormatError : public Error
{
  public:
    explicit FormatError(const std::string& message, std::string record_id = {})
        : Error(record_id.empty() ? message : message + " (record '" + record_id + "')"),
          record_id_(std::move(record_id))
    {
    }

    [[nodiscard]] const std::string& record_id() const noexcept { return record_id_; }

  private:
    std::string record_id_;
};

class VersionMismatch : public Error
{
  public:
    using Error::Error;
};

class KindMismatch : public Error
{
  public:
    using Error::Error;
};

class ZeroWeightSum : public Error
{
  public:
    ZeroWeightSum() : Error("feature-class weights sum to zero") {}
};

class DuplicateId : public Error
{
  public:
    explicit DuplicateId(const std::string& id) : Error("duplicate function id '" + id + "'") {}
};

class MissingId : public Error
{
  public:
    explicit MissingId(const std::string& id) : Error("unknown function id '" + id + "'") {}
};

class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

} // namespace codesift
