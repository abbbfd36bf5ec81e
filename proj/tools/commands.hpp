#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "session.hpp"

namespace burch::cli {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<std::uint32_t> modulus;
  std::size_t max_length = 6;
  bool timing = false;
};

// A command's report plus the exit code it asks for (nonzero for corpus failures
// and sweep counterexamples).
struct Outcome {
  Json result;
  int exit_code = 0;
};

Json check(const Session& s, const std::string& ideal, const std::string& route);
Json invariants(const Session& s, const std::string& ideal);
Json resolve(const Session& s, const std::string& ideal, const std::string& module, std::size_t length);
Json syzygy_summand(const Session& s, const std::string& ideal, const std::string& module, std::size_t index);
Json tor(const Session& s, const std::string& ideal, const std::string& m, const std::string& n, std::size_t upto);
Json mfull(const Session& s, const std::string& ideal, std::size_t trials, std::uint64_t seed);
Json cut(const Session& s, const std::string& ideal, const std::string& by, bool allow_nonlinear);
Json fibre(const Session& s, const std::string& ideal_s, const Session& t, const std::string& ideal_t);

inline const std::vector<std::string> kSweepChecks = {"prop23", "monomial", "twovar", "lemma62", "c_r",     "summand",
                                                      "choi",   "mfull",    "cube",   "gorenstein", "minmulti", "tor"};
Outcome sweep(unsigned max_degree, const std::vector<std::string>& checks, const Options& opt);

std::vector<std::string> corpus_names();
Outcome corpus(const std::optional<std::string>& only, const Options& opt);

// Strings for reports.
std::vector<std::string> generator_strings(const Ideal& I);

}  // namespace burch::cli
