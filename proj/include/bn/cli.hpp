#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <future>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bn/chain.hpp"
#include "bn/criterion.hpp"
#include "bn/json_io.hpp"
#include "bn/oracle.hpp"
#include "bn/realizers.hpp"
#include "bn/strata.hpp"

#ifndef BN_DEFAULT_FIXTURES
#define BN_DEFAULT_FIXTURES "fixtures/elliptic_models.json"
#endif

namespace bn::cli {

using nlohmann::json;

enum class ExitCode : int { ok = 0, invalid_input = 1, internal_failure = 2 };

struct Response {
  std::string status = "ok";  // ok | empty | error
  json payload = json::object();
  std::vector<std::string> diagnostics;
  ExitCode exit_code = ExitCode::ok;

  json to_json() const { return {{"status", status}, {"payload", payload}, {"diagnostics", diagnostics}}; }
  std::string dump() const { return to_json().dump(); }
};

namespace detail {

inline int int_param(const json& params, const std::string& key, std::optional<int> fallback = std::nullopt) {
  if (!params.contains(key)) {
    if (fallback) return *fallback;
    throw InvalidInput("missing parameter '" + key + "'");
  }
  return io::get_int(params, key);
}

inline std::string mode_param(const json& params, const std::string& fallback) {
  if (!params.contains("mode")) return fallback;
  if (!params.at("mode").is_string()) throw InvalidInput("parameter 'mode' must be a string");
  return params.at("mode").get<std::string>();
}

inline RamSeq alpha_param(const json& params, const std::string& key, int r, int d) {
  if (!params.contains(key) || params.at(key).is_null()) return RamSeq::zero(r, d);
  return io::ramseq_from(params.at(key), r, d, key);
}

inline BNProblem problem_param(const json& params) {
  const int g = int_param(params, "g");
  const int r = int_param(params, "r");
  const int d = int_param(params, "d");
  return {g, alpha_param(params, "alpha1", r, d), alpha_param(params, "alpha2", r, d)};
}

/// Vanishing sequences from "a1"/"a2", or from "alpha1"/"alpha2" when absent.
inline std::pair<VanishingSeq, VanishingSeq> vanishing_params(const json& params) {
  const int r = int_param(params, "r");
  const int d = int_param(params, "d");
  auto one = [&](const std::string& vkey, const std::string& akey) {
    if (params.contains(vkey)) return VanishingSeq(r, d, io::int_list(params.at(vkey), vkey));
    return to_vanishing(alpha_param(params, akey, r, d));
  };
  return {one("a1", "alpha1"), one("a2", "alpha2")};
}

inline std::vector<int> field_list(const json& params) {
  if (!params.contains("q")) return default_oracle_fields();
  return io::int_list(params.at("q"), "q");
}

inline Response cmd_rho(const json& params) {
  const auto p = problem_param(params);
  return {"ok", {{"rho", rho(p)}}, {}, ExitCode::ok};
}

inline Response cmd_check(const json& params) {
  const auto p = problem_param(params);
  return {"ok",
          {{"nonempty", nonempty_criterion(p)}, {"rho", rho(p)}, {"criterion_sum", criterion_sum(p)}, {"g", p.g}},
          {},
          ExitCode::ok};
}

inline Response cmd_strata(const json& params) {
  const int r = int_param(params, "r");
  const int d = int_param(params, "d");
  Response out;

  if (params.contains("alphaY") || params.contains("alphaZ")) {
    const auto y = io::ramseq_from(params.at("alphaY"), r, d, "alphaY");
    const auto z = io::ramseq_from(params.at("alphaZ"), r, d, "alphaZ");
    const bool ok = eh_compatible(y, z);
    out.payload = {{"compatible", ok}};
    if (ok) out.payload["stratum"] = io::to_json(Stratum(y, z));
    return out;
  }

  const auto strata = enumerate_refined_strata(r, d);
  json list = json::array();
  const bool with_problem = params.contains("gY") || params.contains("gZ");
  std::optional<TwoComponentProblem> p;
  if (with_problem)
    p.emplace(int_param(params, "gY"), int_param(params, "gZ"), alpha_param(params, "alpha1", r, d),
              alpha_param(params, "alpha2", r, d));
  for (const auto& s : strata) {
    json entry = io::to_json(s);
    if (p) {
      entry["expected_dim"] = stratum_expected_dim(*p, s);
      entry["components_nonempty"] =
          nonempty_criterion(p->y_problem(s)) && nonempty_criterion(p->z_problem(s));
    }
    list.push_back(std::move(entry));
  }
  out.payload = {{"r", r}, {"d", d}, {"count", strata.size()}, {"strata", list}};
  if (p) {
    const auto hit = find_nonempty_stratum(*p, [](const BNProblem& q) { return nonempty_criterion(q); });
    out.payload["glued_rho"] = rho(p->glued());
    out.payload["nonempty"] = hit.has_value();
    if (hit) out.payload["witness_stratum"] = io::to_json(*hit);
  }
  return out;
}

inline Response cmd_chain(const json& params) {
  const auto p = problem_param(params);
  const auto mode = mode_param(params, "build");
  if (mode == "verify") {
    if (!params.contains("witness")) throw InvalidInput("chain verify needs a 'witness' object");
    const auto verdict = verify_chain(io::witness_from(params.at("witness")), p);
    return {"ok", {{"verified", verdict.ok}, {"violations", verdict.violations}}, {}, ExitCode::ok};
  }
  if (mode != "build") throw InvalidInput("chain mode must be 'build' or 'verify'");
  const auto w = build_chain(p);
  if (!w) return {"empty", {{"problem", io::to_json(p)}, {"criterion_sum", criterion_sum(p)}}, {}, ExitCode::ok};
  const auto verdict = verify_chain(*w, p);
  if (!verdict.ok) {
    Response bad{"error", io::to_json(*w), verdict.violations, ExitCode::internal_failure};
    bad.diagnostics.insert(bad.diagnostics.begin(), "constructed chain failed verification");
    return bad;
  }
  return {"ok", io::to_json(*w), {}, ExitCode::ok};
}

inline Response cmd_realize(const json& params) {
  const auto mode = mode_param(params, "g0");
  const auto [a1, a2] = vanishing_params(params);
  if (mode == "g0") {
    const auto s = realize_g0(a1, a2);
    if (!s) return {"empty", {{"a1", io::to_json(a1)}, {"a2", io::to_json(a2)}}, {}, ExitCode::ok};
    const auto check = g0_vanishing_check(*s);
    json payload = io::to_json(*s);
    payload["vanishing_at_zero"] = io::to_json(check.at_zero);
    payload["vanishing_at_infinity"] = io::to_json(check.at_infinity);
    payload["richardson_dim"] = *richardson_dim(a1.d(), a1, a2);
    return {"ok", payload, {}, ExitCode::ok};
  }
  if (mode == "g1") {
    const auto L = realize_g1(a1, a2);
    if (!L) return {"empty", {{"a1", io::to_json(a1)}, {"a2", io::to_json(a2)}}, {}, ExitCode::ok};
    json payload{{"bundle", io::to_json(*L)}};
    if (L->d >= 1) {
      payload["complete_vanishing_at_P1"] = io::to_json(classify_g1_vanishing(*L, MarkedPoint::P1));
      payload["complete_vanishing_at_P2"] = io::to_json(classify_g1_vanishing(*L, MarkedPoint::P2));
    }
    return {"ok", payload, {}, ExitCode::ok};
  }
  throw InvalidInput("realize mode must be 'g0' or 'g1'");
}

inline Response cmd_oracle(const json& params) {
  const auto mode = mode_param(params, "g0");
  const auto budget = params.contains("budget") ? params.at("budget").get<std::uint64_t>() : enumeration_budget();
  const auto qs = field_list(params);
  const auto [a1, a2] = vanishing_params(params);
  if (mode == "g0") {
    const auto counts = g0_oracle(a1, a2, qs, budget);
    const auto expected = richardson_dim(a1.d(), a1, a2);
    json payload = io::to_json(counts);
    payload["richardson_dim"] = expected ? json(*expected) : json(nullptr);
    const bool agree = expected ? counts.fitted_dim == expected : !counts.any_nonzero;
    payload["agree"] = agree;
    Response out{expected ? "ok" : "empty", payload, {}, ExitCode::ok};
    if (counts.any_nonzero && !counts.fitted_dim) out.diagnostics.push_back(counts.fit_note);
    return out;
  }
  if (mode == "g1") {
    const std::string path = params.value("fixtures", std::string(BN_DEFAULT_FIXTURES));
    const auto fixtures = io::load_fixtures(path);
    const std::string which = params.value("model", std::string("general"));
    if (which != "general" && which != "torsion") throw InvalidInput("model must be 'general' or 'torsion'");
    const auto& model = which == "general" ? fixtures.general : fixtures.torsion;
    const BNProblem p{1, to_ramification(a1), to_ramification(a2)};
    const auto scan = g1_descriptor_scan(model, a1, a2, qs, budget);
    json per = json::array();
    for (const auto& s : scan) per.push_back({{"bundle", io::to_json(s.bundle)}, {"fiber", io::to_json(s.fiber)}});
    const bool oracle_nonempty = !nonempty_descriptors(scan).empty();
    json payload{{"model", io::to_json(model)},
                 {"descriptors", per},
                 {"nonempty", oracle_nonempty},
                 {"criterion", nonempty_criterion(p)}};
    Response out{oracle_nonempty ? "ok" : "empty", payload, {}, ExitCode::ok};
    if (model.order_diff > a1.d()) {
      out.payload["agree"] = oracle_nonempty == nonempty_criterion(p);
    } else {
      out.diagnostics.push_back("ord(P1-P2)=" + std::to_string(model.order_diff) +
                                " <= d: the general-position criterion does not apply");
    }
    return out;
  }
  throw InvalidInput("oracle-verify mode must be 'g0' or 'g1'");
}

}  // namespace detail

/// One grid point of a sweep.
inline json sweep_point(const BNProblem& p, bool with_chain) {
  json line = io::to_json(p);
  line["rho"] = rho(p);
  line["nonempty"] = nonempty_criterion(p);
  if (with_chain && line["nonempty"].get<bool>()) {
    const auto w = build_chain(p);
    line["chain_verified"] = w.has_value() && verify_chain(*w, p).ok;
  }
  return line;
}

/// Every problem with g <= max_g, r <= max_r, r <= d <= max_d, in (g, r, d,
/// alpha1, alpha2) lexicographic order.
inline std::vector<BNProblem> sweep_grid(int max_g, int max_r, int max_d) {
  std::vector<BNProblem> grid;
  for (int g = 0; g <= max_g; ++g)
    for (int r = 0; r <= max_r; ++r)
      for (int d = r; d <= max_d; ++d) {
        const auto seqs = all_ramseqs(r, d);
        for (const auto& a1 : seqs)
          for (const auto& a2 : seqs) grid.emplace_back(g, a1, a2);
      }
  return grid;
}

/// Streams one JSON line per grid point, in grid order, computing in parallel
/// blocks. Returns the process exit code.
inline ExitCode run_sweep(const json& params, std::ostream& out) {
  const int max_g = detail::int_param(params, "max_g");
  const int max_r = detail::int_param(params, "max_r");
  const int max_d = detail::int_param(params, "max_d");
  if (max_g < 0 || max_r < 0 || max_d < max_r) throw InvalidInput("sweep bounds need max_g, max_r >= 0, max_d >= max_r");
  const bool with_chain = params.value("with_chain", false);
  const int requested = detail::int_param(params, "threads", 0);
  const unsigned workers = requested > 0 ? static_cast<unsigned>(requested)
                                         : std::max(1U, std::thread::hardware_concurrency());

  const auto grid = sweep_grid(max_g, max_r, max_d);
  constexpr std::size_t kBlock = 4096;
  std::vector<std::string> lines;
  for (std::size_t start = 0; start < grid.size(); start += kBlock) {
    const std::size_t stop = std::min(grid.size(), start + kBlock);
    lines.assign(stop - start, {});
    std::vector<std::future<void>> jobs;
    const std::size_t stride = (stop - start + workers - 1) / workers;
    for (std::size_t lo = start; lo < stop; lo += stride) {
      const std::size_t hi = std::min(stop, lo + stride);
      jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) lines[i - start] = sweep_point(grid[i], with_chain).dump();
      }));
    }
    for (auto& job : jobs) job.get();
    for (const auto& line : lines) out << line << '\n';
  }
  out.flush();
  return ExitCode::ok;
}

/// Dispatches {"command": ..., "params": {...}}. Never throws: failures are
/// reported through the response status and exit code.
inline Response run(const json& request) {
  try {
    if (!request.is_object() || !request.contains("command") || !request.at("command").is_string())
      throw InvalidInput("request must be an object with a string 'command'");
    const auto command = request.at("command").get<std::string>();
    const json params = request.value("params", json::object());
    if (!params.is_object()) throw InvalidInput("'params' must be an object");
    if (command == "rho") return detail::cmd_rho(params);
    if (command == "check") return detail::cmd_check(params);
    if (command == "strata") return detail::cmd_strata(params);
    if (command == "chain") return detail::cmd_chain(params);
    if (command == "realize") return detail::cmd_realize(params);
    if (command == "oracle-verify") return detail::cmd_oracle(params);
    if (command == "sweep") throw InvalidInput("sweep streams JSON lines; use run_sweep");
    throw InvalidInput("unknown command '" + command + "'");
  } catch (const InvalidInput& e) {
    return {"error", json::object(), {e.what()}, ExitCode::invalid_input};
  } catch (const json::exception& e) {
    return {"error", json::object(), {std::string("malformed request: ") + e.what()}, ExitCode::invalid_input};
  } catch (const std::exception& e) {
    return {"error", json::object(), {e.what()}, ExitCode::internal_failure};
  }
}

}  // namespace bn::cli
