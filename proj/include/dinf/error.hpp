#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace dinf {

enum class ErrorCode {
  BoundaryEdge,
  BadTag,
  UnknownPoint,
  EqualEdges,
  PointsCoincide,
  Crossing,
  NotMaximal,
  BadDiff,
  NotMember,
  AmbiguousFlip,
  NonMutable,
  InfApexUncompleted,
  BadPath,
  ForkMisuse,
  InfInUncompleted,
  NoPreimage,
  EqualObjects,
  SupportOverflow,
  ShapeMismatch,
  BadIndex,
  Parse,
};

const char* code_name(ErrorCode c);

struct Error {
  ErrorCode code;
  std::string message;
};

// thrown for contract violations (bad input to a total operation)
class Failure : public std::runtime_error {
 public:
  Failure(ErrorCode c, const std::string& msg)
      : std::runtime_error(msg), err_{c, msg} {}
  const Error& error() const { return err_; }

 private:
  Error err_;
};

template <class T>
class Result {
 public:
  Result(T v) : v_(std::move(v)) {}
  Result(Error e) : v_(std::move(e)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }
  const T& value() const {
    if (!ok()) throw Failure(error().code, error().message);
    return std::get<0>(v_);
  }
  T& value() {
    if (!ok()) throw Failure(error().code, error().message);
    return std::get<0>(v_);
  }
  const Error& error() const { return std::get<1>(v_); }

 private:
  std::variant<T, Error> v_;
};

struct Ok {};
using Status = Result<Ok>;

inline Status ok_status() { return Status(Ok{}); }
inline Error make_error(ErrorCode c, std::string msg) { return Error{c, std::move(msg)}; }

}  // namespace dinf
