#pragma once

#include <stdexcept>
#include <string>

namespace valgroup {

enum class errc {
  invalid_order,
  closure,
  associativity,
  iso_validation,
  context_mismatch,
  domain,
  capacity,
  parse,
  contract,
  radius_insufficient,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace valgroup
