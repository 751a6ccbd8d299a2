#pragma once

#include <stdexcept>
#include <string>

namespace qnets {

// Error taxonomy mirrored by the CLI exit codes:
//   2 input, 3 singular/degenerate input, 4 search exhausted, 5 internal.
enum class ErrorKind { input = 2, singular = 3, search = 4, internal = 5 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorKind::input, w) {}
};
struct IdenticallySingular : Error {
  explicit IdenticallySingular(const std::string& w) : Error(ErrorKind::singular, w) {}
};
struct SingularInput : Error {
  explicit SingularInput(const std::string& w) : Error(ErrorKind::singular, w) {}
};
struct GenericityFailure : Error {
  explicit GenericityFailure(const std::string& w) : Error(ErrorKind::singular, w) {}
};
struct SampleOnCurve : Error {
  explicit SampleOnCurve(const std::string& w) : Error(ErrorKind::internal, w) {}
};
struct DegenerateRow : Error {
  explicit DegenerateRow(const std::string& w) : Error(ErrorKind::singular, w) {}
};
struct NoSolution : Error {
  explicit NoSolution(const std::string& w) : Error(ErrorKind::singular, w) {}
};
struct NonUniqueSolution : Error {
  explicit NonUniqueSolution(const std::string& w) : Error(ErrorKind::singular, w) {}
};
struct NonzeroRemainder : Error {
  explicit NonzeroRemainder(const std::string& w) : Error(ErrorKind::internal, w) {}
};
struct SearchExhausted : Error {
  explicit SearchExhausted(const std::string& w) : Error(ErrorKind::search, w) {}
};
struct SuspectedSingularity : Error {
  explicit SuspectedSingularity(const std::string& w) : Error(ErrorKind::singular, w) {}
};
struct NonClosure : Error {
  explicit NonClosure(const std::string& w) : Error(ErrorKind::search, w) {}
};
struct DegenerateSystem : Error {
  explicit DegenerateSystem(const std::string& w) : Error(ErrorKind::singular, w) {}
};
struct AxiomViolation : Error {
  explicit AxiomViolation(const std::string& w) : Error(ErrorKind::internal, w) {}
};

}  // namespace qnets
