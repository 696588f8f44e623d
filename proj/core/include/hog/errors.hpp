#pragma once

#include <stdexcept>
#include <string>

namespace hog {

// Base type for all failures raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside the mathematical domain of a model function.
class domain_error : public error {
 public:
  using error::error;
};

// A structurally zero denominator or exponent makes the requested quantity
// undefined (e.g. 1 - sigma*(2+gamma) == 0).
class degenerate_error : public error {
 public:
  using error::error;
};

// The first-order conditions admit no interior solution with s >= 0.
class infeasible_error : public error {
 public:
  using error::error;
};

// A scalar root could not be bracketed.
class bracket_error : public error {
 public:
  using error::error;
};

// A discounted integral diverges (exponent x >= 0).
class divergence_error : public error {
 public:
  using error::error;
};

// Not enough samples for a statistical estimate.
class insufficient_data_error : public error {
 public:
  using error::error;
};

// Integration aborted; where() gives the failing time.
class integration_error : public error {
 public:
  integration_error(const std::string& what, double t_fail)
      : error(what + " (t=" + std::to_string(t_fail) + ")"), t_fail_(t_fail) {}
  double where() const noexcept { return t_fail_; }

 private:
  double t_fail_;
};

// Configuration text could not be parsed or fails its domain checks.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                    : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_ = 0;
};

// File I/O failure.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hog
