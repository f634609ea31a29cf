#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace monopole {

/// Validation errors map to CLI exit status 2, non-convergence to 3.
enum class ErrorKind { Validation, NonConvergence };

/// Every failure surfaced by the library carries the module that raised it
/// and a short code, e.g. "curve_core" / "NotRealCurve".
class MonopoleError : public std::runtime_error {
 public:
  MonopoleError(std::string module, std::string code, const std::string& detail,
                ErrorKind kind = ErrorKind::Validation)
      : std::runtime_error(module + "." + code + ": " + detail),
        module_(std::move(module)),
        code_(std::move(code)),
        kind_(kind) {}

  const std::string& module() const { return module_; }
  const std::string& code() const { return code_; }
  std::string qualified_code() const { return module_ + "." + code_; }
  ErrorKind kind() const { return kind_; }

 private:
  std::string module_;
  std::string code_;
  ErrorKind kind_;
};

/// An error that still hands back the best partial result (last iterate,
/// partial orbit, ...).
template <typename Partial>
class PartialResultError : public MonopoleError {
 public:
  PartialResultError(std::string module, std::string code, const std::string& detail,
                     Partial partial, ErrorKind kind = ErrorKind::NonConvergence)
      : MonopoleError(std::move(module), std::move(code), detail, kind),
        partial_(std::move(partial)) {}

  const Partial& partial() const { return partial_; }

 private:
  Partial partial_;
};

}  // namespace monopole
