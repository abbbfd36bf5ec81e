#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "burch/burch.hpp"
#include "burch/errors.hpp"
#include "commands.hpp"

using namespace burch;
using namespace burch::cli;

namespace {

enum Exit { kPass = 0, kCorpusFailure = 1, kInputError = 2, kPrecondition = 3, kConsistency = 4 };

void print_text(const Json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    std::string key = prefix + it.key();
    bool nested = v.is_object() || (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) {
                                     return e.is_object() || e.is_array();
                                   }));
    if (v.is_object()) {
      print_text(v, key + ".");
    } else if (nested) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_object())
          print_text(v[i], key + "[" + std::to_string(i) + "].");
        else
          std::cout << key << "[" << i << "]: " << v[i].dump() << "\n";
      }
    } else if (v.is_string()) {
      std::cout << key << ": " << v.get<std::string>() << "\n";
    } else {
      std::cout << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burch ideals and rings over a prime field"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::uint32_t modulus = 0;
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_option("--seed", opt.seed, "Seed for randomized steps");
  app.add_option("--modulus", modulus, "Override the prime of every ring");
  app.add_option("--max-length", opt.max_length, "Default resolution length");
  app.add_flag("--timing", opt.timing, "Include wall time in the report");

  std::function<Outcome()> action;
  std::string file, file2, ideal, route = "definition", module = "k", with = "k", by, only, ideal_t, checks;
  std::size_t length = 0, index = 2, upto = 3, trials = 20;
  unsigned max_degree = 3;
  bool nonlinear = false;

  auto session = [&](const std::string& path) {
    return load_session(path, modulus ? std::optional<std::uint32_t>(modulus) : std::nullopt);
  };
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Session file")->required();
    sub->add_option("ideal", ideal, "Ideal name (default: first declared)");
  };

  auto* c = app.add_subcommand("check", "Burch test of an ideal");
  with_file(c);
  c->add_option("--route", route, "definition or all");
  c->callback([&] { action = [&] { return Outcome{check(session(file), ideal, route)}; }; });

  auto* inv = app.add_subcommand("invariants", "Invariants of an ideal and its quotient");
  with_file(inv);
  inv->callback([&] { action = [&] { return Outcome{invariants(session(file), ideal)}; }; });

  auto* res = app.add_subcommand("resolve", "Minimal free resolution over the quotient ring");
  with_file(res);
  res->add_option("--module", module, "Module name (k is the residue field)");
  res->add_option("--length", length, "Resolution length (default --max-length)");
  res->callback([&] {
    action = [&] { return Outcome{resolve(session(file), ideal, module, length ? length : opt.max_length)}; };
  });

  auto* syz = app.add_subcommand("syzygy-summand", "Does k split off a syzygy module");
  with_file(syz);
  syz->add_option("--module", module, "Module name");
  syz->add_option("--index", index, "Syzygy index");
  syz->callback([&] { action = [&] { return Outcome{syzygy_summand(session(file), ideal, module, index)}; }; });

  auto* t = app.add_subcommand("tor", "Dimensions of Tor over the quotient ring");
  with_file(t);
  t->add_option("--module", module, "First module");
  t->add_option("--with", with, "Second module");
  t->add_option("--upto", upto, "Highest index");
  t->callback([&] { action = [&] { return Outcome{tor(session(file), ideal, module, with, upto)}; }; });

  auto* mf = app.add_subcommand("mfull", "m-full and weakly m-full tests");
  with_file(mf);
  mf->add_option("--trials", trials, "Random linear forms to try");
  mf->callback([&] { action = [&] { return Outcome{mfull(session(file), ideal, trials, opt.seed)}; }; });

  auto* ct = app.add_subcommand("cut", "Cut down by a regular sequence");
  with_file(ct);
  ct->add_option("--by", by, "Comma separated elements")->required();
  ct->add_flag("--allow-nonlinear", nonlinear, "Permit elements that are not linear forms");
  ct->callback([&] { action = [&] { return Outcome{cut(session(file), ideal, by, nonlinear)}; }; });

  auto* fb = app.add_subcommand("fibre", "Burch test of a fibre product over k");
  fb->add_option("first", file, "Session file of the first factor")->required();
  fb->add_option("second", file2, "Session file of the second factor")->required();
  fb->add_option("--ideal-s", ideal, "Ideal of the first factor");
  fb->add_option("--ideal-t", ideal_t, "Ideal of the second factor");
  fb->callback([&] {
    action = [&] {
      Session s = session(file), u = session(file2);
      return Outcome{fibre(s, s.ideal_name(ideal), u, u.ideal_name(ideal_t))};
    };
  });

  auto* sw = app.add_subcommand("sweep", "Cross-check all criteria on monomial ideals of k[x,y]");
  sw->add_option("--max-degree", max_degree, "Socle degree bound");
  sw->add_option("--checks", checks, "Comma separated checks or all");
  sw->callback([&] {
    action = [&] {
      std::vector<std::string> list;
      std::stringstream ss(checks);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) list.push_back(item);
      return sweep(max_degree, list, opt);
    };
  });

  auto* co = app.add_subcommand("corpus", "Regression corpus of worked examples");
  co->add_option("--only", only, "Run a single entry");
  co->callback([&] {
    action = [&] { return corpus(only.empty() ? std::nullopt : std::optional<std::string>(only), opt); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInputError;
  }
  if (modulus) opt.modulus = modulus;

  Json envelope;
  envelope["schema"] = "1";
  std::vector<std::string> args(argv + 1, argv + argc);
  envelope["command"] = Json{{"name", app.get_subcommands().front()->get_name()}, {"args", args}};
  int code = kPass;
  auto fail = [&](int c, const char* kind, const std::string& msg, Json extra = Json::object()) {
    code = c;
    Json err{{"kind", kind}, {"message", msg}};
    err.update(extra);
    envelope["error"] = err;
  };
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome out = action();
    envelope["result"] = out.result;
    code = out.exit_code;
  } catch (const ParseError& e) {
    fail(kInputError, "input", e.what(), Json{{"position", e.position()}});
  } catch (const SessionError& e) {
    fail(kInputError, "input", e.what());
  } catch (const UsageError& e) {
    fail(kInputError, "input", e.what());
  } catch (const NotRegularError& e) {
    fail(kPrecondition, "precondition", e.what(), Json{{"witness", e.witness()}});
  } catch (const PreconditionError& e) {
    fail(kPrecondition, "precondition", e.what());
  } catch (const std::invalid_argument& e) {
    fail(kInputError, "input", e.what());
  } catch (const ConsistencyError& e) {
    fail(kConsistency, "consistency", e.what());
  } catch (const std::exception& e) {
    fail(kConsistency, "internal", e.what());
  }
  if (opt.timing)
    envelope["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.json) {
    std::cout << envelope.dump(2) << "\n";
  } else {
    if (envelope.contains("result")) print_text(envelope["result"]);
    if (envelope.contains("timing_ms")) std::cout << "timing_ms: " << envelope["timing_ms"].dump() << "\n";
    if (envelope.contains("error")) std::cerr << "error: " << envelope["error"]["message"].get<std::string>() << "\n";
  }
  return code;
}
