// Command-line front end: every command builds a JSON request, dispatches it
// through bn::cli::run and prints the JSON response on one line.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bn/cli.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& source) {
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  if (!source.empty() && source.front() == '@') {
    std::ifstream in(source.substr(1));
    if (!in) throw bn::InvalidInput("cannot open " + source.substr(1));
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  return source;
}

json parse_body(const std::string& source, const std::string& what) {
  try {
    return json::parse(slurp(source));
  } catch (const json::exception& e) {
    throw bn::InvalidInput(what + " is not valid JSON: " + e.what());
  }
}

json int_list(const std::string& text, const std::string& what) {
  json out = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw bn::InvalidInput(what + " must be a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

/// Flags shared by the subcommands; unset flags are omitted from the params.
struct Flags {
  std::map<std::string, int> ints;
  std::map<std::string, std::string> lists;
  std::string body;
  std::string mode;
  std::string witness;
  std::string fixtures;
  std::string model;
  bool with_chain = false;

  void add_ints(CLI::App* app, const std::vector<std::string>& names) {
    for (const auto& n : names) app->add_option("--" + n, ints[n], n);
  }
  void add_lists(CLI::App* app, const std::vector<std::string>& names) {
    for (const auto& n : names) app->add_option("--" + n, lists[n], n + " as comma-separated integers");
  }

  json params(CLI::App* app) const {
    json p = body.empty() ? json::object() : parse_body(body, "--json");
    for (const auto& [name, value] : ints)
      if (app->count("--" + name)) p[name] = value;
    for (const auto& [name, value] : lists)
      if (app->count("--" + name)) p[name] = int_list(value, "--" + name);
    if (!mode.empty()) p["mode"] = mode;
    if (!witness.empty()) p["witness"] = parse_body(witness, "--witness");
    if (!fixtures.empty()) p["fixtures"] = fixtures;
    if (!model.empty()) p["model"] = model;
    if (with_chain) p["with_chain"] = true;
    return p;
  }
};

int emit(const bn::cli::Response& r) {
  std::cout << r.dump() << '\n';
  return static_cast<int>(r.exit_code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-point Brill-Noether calculator: rho, nonemptiness, limit-series strata, elliptic chains and "
               "finite-field oracles"};
  app.require_subcommand(0, 1);
  std::string request_body;
  app.add_option("--json", request_body, "Full request {\"command\":..., \"params\":{...}} (text, @file or -)");

  const std::vector<std::string> problem_ints{"g", "r", "d"};
  const std::vector<std::string> alphas{"alpha1", "alpha2"};
  std::map<std::string, Flags> flags;
  std::map<std::string, CLI::App*> subs;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    auto& f = flags[name];
    sub->add_option("--json", f.body, "Parameters as a JSON object (text, @file or -)");
    subs[name] = sub;
    return std::pair<CLI::App*, Flags*>{sub, &f};
  };

  {
    auto [sub, f] = add("rho", "Adjusted Brill-Noether number");
    f->add_ints(sub, problem_ints);
    f->add_lists(sub, alphas);
  }
  {
    auto [sub, f] = add("check", "Two-point nonemptiness criterion");
    f->add_ints(sub, problem_ints);
    f->add_lists(sub, alphas);
  }
  {
    auto [sub, f] = add("strata", "Refined limit-series strata on a two-component curve");
    f->add_ints(sub, {"r", "d", "gY", "gZ"});
    f->add_lists(sub, {"alpha1", "alpha2", "alphaY", "alphaZ"});
  }
  {
    auto [sub, f] = add("chain", "Build (or verify) an elliptic chain witness");
    sub->add_option("mode", f->mode, "build (default) or verify")->check(CLI::IsMember({"build", "verify"}));
    sub->add_option("--witness", f->witness, "Witness JSON for verify (text, @file or -)");
    f->add_ints(sub, problem_ints);
    f->add_lists(sub, alphas);
  }
  {
    auto [sub, f] = add("realize", "Explicit genus-0 basis or genus-1 line bundle");
    sub->add_option("mode", f->mode, "g0 or g1")->required()->check(CLI::IsMember({"g0", "g1"}));
    f->add_ints(sub, {"r", "d"});
    f->add_lists(sub, {"a1", "a2", "alpha1", "alpha2"});
  }
  {
    auto [sub, f] = add("oracle-verify", "Finite-field brute-force oracle");
    sub->add_option("mode", f->mode, "g0 or g1")->required()->check(CLI::IsMember({"g0", "g1"}));
    sub->add_option("--fixtures", f->fixtures, "Elliptic fixture file (g1)");
    sub->add_option("--model", f->model, "general or torsion (g1)");
    f->add_ints(sub, {"r", "d", "budget"});
    f->add_lists(sub, {"a1", "a2", "alpha1", "alpha2", "q"});
  }
  {
    auto [sub, f] = add("sweep", "Stream criterion (and chain) results over a parameter grid as JSON lines");
    f->add_ints(sub, {"max_g", "max_r", "max_d", "threads"});
    sub->add_flag("--with-chain", f->with_chain, "Also build and verify a chain at every nonempty point");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(bn::cli::ExitCode::invalid_input);
  }

  try {
    json request;
    if (!request_body.empty()) {
      request = parse_body(request_body, "--json");
    } else {
      std::string chosen;
      for (const auto& [name, sub] : subs)
        if (sub->parsed()) chosen = name;
      if (chosen.empty()) {
        std::cerr << app.help();
        return static_cast<int>(bn::cli::ExitCode::invalid_input);
      }
      request = {{"command", chosen}, {"params", flags[chosen].params(subs[chosen])}};
    }

    if (request.is_object() && request.value("command", std::string()) == "sweep") {
      return static_cast<int>(bn::cli::run_sweep(request.value("params", json::object()), std::cout));
    }
    return emit(bn::cli::run(request));
  } catch (const bn::InvalidInput& e) {
    return emit({"error", json::object(), {e.what()}, bn::cli::ExitCode::invalid_input});
  } catch (const json::exception& e) {
    return emit({"error", json::object(), {std::string("malformed request: ") + e.what()},
                 bn::cli::ExitCode::invalid_input});
  } catch (const std::exception& e) {
    return emit({"error", json::object(), {e.what()}, bn::cli::ExitCode::internal_failure});
  }
}
