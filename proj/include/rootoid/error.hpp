#pragma once

#include <stdexcept>
#include <string>

namespace rootoid {

// Codes line up with the CLI exit statuses.
enum class ErrorKind { Input = 2, Gate = 3, Inconsistent = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool ok, const std::string& what, ErrorKind kind = ErrorKind::Input) {
  if (!ok) throw Error(kind, what);
}

struct Gates {
  std::size_t morphisms = 1000000;
  std::size_t table_entries = 50000000;
  int free_ring_generators = 16;
  int jop_width = 20;
  std::size_t braid_class = 100000;
  std::size_t roots = 100000;
};

Gates& gates();

}  // namespace rootoid
