#pragma once

#include <stdexcept>
#include <string>

namespace vitscope {

/// Error categories. The numeric values double as process exit codes and
/// as status codes at the C API boundary: 0 ok, 2 usage, 3 data, 4 model,
/// 5 internal.
enum class ErrorCode : int {
    ok = 0,
    usage = 2,
    data = 3,
    model = 4,
    internal = 5,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

struct UsageError : Error {
    explicit UsageError(std::string m) : Error(ErrorCode::usage, std::move(m)) {}
};
struct DataError : Error {
    explicit DataError(std::string m) : Error(ErrorCode::data, std::move(m)) {}
};
struct ModelError : Error {
    explicit ModelError(std::string m) : Error(ErrorCode::model, std::move(m)) {}
};
struct InternalError : Error {
    explicit InternalError(std::string m) : Error(ErrorCode::internal, std::move(m)) {}
};

} // namespace vitscope
