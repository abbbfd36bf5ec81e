#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burch/groebner.hpp"
#include "burch/resolution.hpp"

namespace burch::cli {

// Malformed session file; maps to the input-error exit code.
class SessionError : public std::runtime_error {
 public:
  SessionError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Bad command-line arguments or unknown names; also an input error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModuleDecl {
  enum class Kind { residue, cyclic, free } kind = Kind::residue;
  std::string ideal;      // cyclic
  std::size_t rank = 0;   // free
};

// ring <p> <vars...>
// ideal <Name> = <poly>, ...
// module <Name> = cyclic <IdealName> | free <rank>
// The module name k is predefined as the residue field.
struct Session {
  RingPtr ring;
  std::vector<std::string> ideal_names;  // declaration order
  std::map<std::string, Ideal> ideals;
  std::map<std::string, ModuleDecl> modules;

  const Ideal& ideal(const std::string& name) const;
  // First declared ideal when name is empty.
  const std::string& ideal_name(const std::string& name) const;
  AlgebraModule module(const AlgebraPtr& R, const std::string& name) const;
};

Session parse_session(const std::string& text, std::optional<std::uint32_t> modulus = std::nullopt);
Session load_session(const std::string& path, std::optional<std::uint32_t> modulus = std::nullopt);

}  // namespace burch::cli
