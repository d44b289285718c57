#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indcol {

// Which budget an exact computation ran out of.
enum class Resource { vertices, states, time, capacity };

const char* to_string(Resource r);

/// An exact computation refused to start or gave up because a configured
/// limit was reached. No partial or approximate answer is ever returned.
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(Resource resource, std::size_t limit, std::string what_arg)
      : std::runtime_error(std::move(what_arg)), resource_(resource), limit_(limit) {}

  Resource resource() const { return resource_; }
  std::size_t limit() const { return limit_; }

 private:
  Resource resource_;
  std::size_t limit_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace indcol
