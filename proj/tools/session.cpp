#include "session.hpp"

#include <fstream>
#include <sstream>

#include "burch/errors.hpp"

namespace burch::cli {

namespace {

std::string trim_ws(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// Splits "<Name> = <rest>".
std::pair<std::string, std::string> binding(std::size_t line, const std::string& body) {
  std::size_t eq = body.find('=');
  if (eq == std::string::npos) throw SessionError(line, "expected '<name> = ...'");
  std::string name = trim_ws(std::string_view(body).substr(0, eq));
  if (!valid_name(name)) throw SessionError(line, "invalid name '" + name + "'");
  return {name, trim_ws(std::string_view(body).substr(eq + 1))};
}

}  // namespace

const std::string& Session::ideal_name(const std::string& name) const {
  if (name.empty()) {
    if (ideal_names.empty()) throw UsageError("session declares no ideals");
    return ideal_names.front();
  }
  auto it = ideals.find(name);
  if (it == ideals.end()) throw UsageError("unknown ideal '" + name + "'");
  return it->first;
}

const Ideal& Session::ideal(const std::string& name) const { return ideals.at(ideal_name(name)); }

AlgebraModule Session::module(const AlgebraPtr& R, const std::string& name) const {
  if (name == "k") return residue_field(R);
  auto it = modules.find(name);
  if (it == modules.end()) throw UsageError("unknown module '" + name + "'");
  switch (it->second.kind) {
    case ModuleDecl::Kind::cyclic:
      return module_from_cyclic(R, ideals.at(it->second.ideal));
    case ModuleDecl::Kind::free:
      return free_module(R, it->second.rank);
    default:
      return residue_field(R);
  }
}

Session parse_session(const std::string& text, std::optional<std::uint32_t> modulus) {
  Session s;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim_ws(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    std::string body = trim_ws(std::string_view(line).substr(keyword.size()));
    if (keyword == "ring") {
      if (s.ring) throw SessionError(lineno, "second ring declaration");
      std::uint64_t p = 0;
      if (!(words >> p)) throw SessionError(lineno, "expected 'ring <p> <vars...>'");
      std::vector<std::string> vars;
      for (std::string v; words >> v;) vars.push_back(v);
      try {
        s.ring = RingContext::make(vars, modulus ? *modulus : static_cast<std::uint32_t>(p));
      } catch (const std::invalid_argument& e) {
        throw SessionError(lineno, e.what());
      }
      continue;
    }
    if (!s.ring) throw SessionError(lineno, "the first declaration must be 'ring <p> <vars...>'");
    auto [name, rest] = binding(lineno, body);
    if (s.ideals.count(name) || s.modules.count(name) || name == "k")
      throw SessionError(lineno, "name '" + name + "' is already defined");
    if (keyword == "ideal") {
      std::vector<Polynomial> gens;
      try {
        gens = parse_polynomial_list(rest, s.ring);
      } catch (const ParseError& e) {
        throw SessionError(lineno, e.what());
      }
      for (const auto& g : gens)
        if (g.constant_term() != 0)
          throw PreconditionError("line " + std::to_string(lineno) + ": generator " + g.to_string() +
                                  " has a nonzero constant term");
      s.ideals.emplace(name, Ideal(s.ring, std::move(gens)));
      s.ideal_names.push_back(name);
    } else if (keyword == "module") {
      std::istringstream spec(rest);
      std::string kind, arg, extra;
      spec >> kind >> arg;
      if (arg.empty() || (spec >> extra)) throw SessionError(lineno, "expected 'cyclic <IdealName>' or 'free <rank>'");
      ModuleDecl d;
      if (kind == "cyclic") {
        if (!s.ideals.count(arg)) throw SessionError(lineno, "unknown ideal '" + arg + "'");
        d.kind = ModuleDecl::Kind::cyclic;
        d.ideal = arg;
      } else if (kind == "free") {
        d.kind = ModuleDecl::Kind::free;
        try {
          d.rank = std::stoul(arg);
        } catch (const std::exception&) {
          throw SessionError(lineno, "invalid rank '" + arg + "'");
        }
      } else {
        throw SessionError(lineno, "unknown module construction '" + kind + "'");
      }
      s.modules.emplace(name, d);
    } else {
      throw SessionError(lineno, "unknown directive '" + keyword + "'");
    }
  }
  if (!s.ring) throw SessionError(lineno, "missing ring declaration");
  return s;
}

Session load_session(const std::string& path, std::optional<std::uint32_t> modulus) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_session(buf.str(), modulus);
}

}  // namespace burch::cli
