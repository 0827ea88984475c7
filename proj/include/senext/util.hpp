#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

namespace senext {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor/layer dimension mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value or combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File system / image / checkpoint IO failure.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed manifest, config file or checkpoint content.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Cross-record consistency violation (subject in two splits, unknown subject).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// API misuse (backward on non-scalar, empty input).
class ContractError : public Error {
 public:
  using Error::Error;
};

namespace detail {
inline void cat_impl(std::ostringstream&) {}
template <typename T, typename... Rest>
void cat_impl(std::ostringstream& os, const T& v, const Rest&... rest) {
  os << v;
  cat_impl(os, rest...);
}
}  // namespace detail

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  detail::cat_impl(os, args...);
  return os.str();
}

// Shortest decimal string that round-trips through a double. Used by every
// CSV/JSON writer so that re-generated artifacts are byte-identical.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  double back = 0.0;
  for (int prec = 1; prec <= 16; ++prec) {
    char trial[40];
    std::snprintf(trial, sizeof(trial), "%.*g", prec, x);
    std::sscanf(trial, "%lf", &back);
    if (back == x) return trial;
  }
  return buf;
}

}  // namespace senext
