// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "greenring/greenring.hpp"

using namespace greenring;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<std::pair<std::int64_t, std::int64_t>> kContexts{{2, 4}, {3, 3}, {5, 2}, {7, 2}};

struct Outcome {
  bool ok = true;
  std::int64_t checks = 0;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

// suite reports are computed once per (context, suite)
class Reports {
 public:
  const verify::SuiteReport& get(const RingContext& ctx, const std::string& suite) {
    auto key = ctx.label() + "/" + suite;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const auto t0 = Clock::now();
    auto report = verify::run_suite(ctx, suite);
    timings_[key] = seconds_since(t0);
    return cache_.emplace(key, std::move(report)).first->second;
  }

  double timing(const RingContext& ctx, const std::string& suite) const {
    return timings_.at(ctx.label() + "/" + suite);
  }

 private:
  std::map<std::string, verify::SuiteReport> cache_;
  std::map<std::string, double> timings_;
};

Reports reports;

// folds the named clauses of one suite into an outcome
void require_clauses(Outcome& out, const RingContext& ctx, const std::string& suite,
                     const std::vector<std::string>& names) {
  const auto& report = reports.get(ctx, suite);
  for (const auto& name : names) {
    const verify::ClauseResult* found = nullptr;
    for (const auto& c : report.clauses) {
      if (c.name == name) found = &c;
    }
    if (found == nullptr) {
      out.fail(ctx.label() + ": clause '" + name + "' missing from suite " + suite);
      continue;
    }
    if (found->skipped) {
      out.fail(ctx.label() + ": " + found->line());
      continue;
    }
    out.checks += found->total;
    if (!found->ok()) out.fail(ctx.label() + ": " + found->line());
    if (found->total == 0) out.fail(ctx.label() + ": clause '" + name + "' checked nothing");
  }
}

Outcome worked_example() {
  Outcome out;
  const auto t0 = Clock::now();
  RingContext ctx(7, 2);
  const auto v = psi(4, basis_element(ctx, 23));
  const std::string expected =
      "V49 - V47 + V45 - V39 + V37 - V35 + V33 - V31 + V25 - V23 + V19 - V17 + V11 - V9 + V7 - V5 + V3";
  out.checks = 3;
  if (to_string(v) != expected) out.fail("psi^4(V23) = " + to_string(v));
  if (psi(4, basis_element(ctx, 2)) != parse_element(ctx, "V5-V3")) out.fail("psi^4(V2) wrong");
  if (psi(4, basis_element(ctx, 5)) != parse_element(ctx, "V7-V5+V3")) out.fail("psi^4(V5) wrong");
  const auto elapsed = seconds_since(t0);
  if (elapsed >= 1.0) out.fail("took " + std::to_string(elapsed) + " s");
  return out;
}

Outcome closed_forms() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    require_clauses(out, RingContext(p, nu), "reciprocity",
                    {"psi^n(V_{p^m-1}) closed form", "psi^n(V_{p^m}) = V_{p^m}"});
  }
  return out;
}

Outcome periodicity() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    RingContext ctx(p, nu);
    require_clauses(out, ctx, "periodicity", {"psi^(2p+c) = psi^c", "psi^c = psi^gamma(c)"});
    require_clauses(out, ctx, "symmetry", {"psi^(2p-j) = psi^j"});
  }
  return out;
}

Outcome ring_map() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    RingContext ctx(p, nu);
    require_clauses(out, ctx, "homomorphism",
                    {"psi^n multiplicative on random pairs", "psi^n additive on random pairs",
                     "psi^n o psi^n' = psi^(nn')"});
    for (const auto& c : reports.get(ctx, "homomorphism").clauses) {
      if (c.name == "psi^n multiplicative on random pairs" && c.total < 200) out.fail(ctx.label() + ": fewer than 200 pairs");
    }
  }
  return out;
}

Outcome reciprocity() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    if (p == 2) continue;  // the even-degree identity needs p odd
    require_clauses(out, RingContext(p, nu), "reciprocity",
                    {"n even: psi^n(V_r) + psi^n(V_{p^m-r}) = V_{p^m}",
                     "n odd: psi^n(V_{p^m-r}) = heller(psi^n(V_r)) + c V_{p^m}"});
  }
  return out;
}

Outcome shape() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    RingContext ctx(p, nu);
    require_clauses(out, ctx, "shape",
                    {"alternating form of psi^n(V_s)", "paired forms of psi^n(V_s), psi^n(V_{p^m-s})"});
    const auto t = reports.timing(ctx, "shape");
    if (t >= 30.0) out.fail(ctx.label() + ": shape sweep took " + std::to_string(t) + " s");
  }
  return out;
}

Outcome oracle_products() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    RingContext ctx(p, nu);
    require_clauses(out, ctx, "oracle",
                    {"X_m V_r = V_{r+p^m} + V_{r-p^m}", "V_{p^m} V_r = r V_{p^m}",
                     "V_{p^m-1} V_r = (r-1) V_{p^m} + V_{p^m-r}", "V_{p^m-1}^2 = (p^m-2) V_{p^m} + V_1",
                     "commutative, associative, unital, dim multiplicative"});
    require_clauses(out, ctx, "reciprocity",
                    {"psi^n(V_{p^m-1}) psi^n(V_r) = (r-1)V_{p^m} + psi^n(V_{p^m-r})"});
  }
  return out;
}

Outcome oracle_adams() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    require_clauses(out, RingContext(p, nu), "oracle", {"psi^n recovered from literal exterior powers"});
  }
  return out;
}

Outcome gow_laffey() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    if (p == 2) continue;
    RingContext ctx(p, nu);
    require_clauses(out, ctx, "gow-laffey",
                    {"Lambda^2(V_r) = (r-(p^m+1)/2) V_{p^m} + S^2(V_{p^m-r})",
                     "S^2(V_r) = (r-(p^m-1)/2) V_{p^m} + Lambda^2(V_{p^m-r})"});
    require_clauses(out, ctx, "oracle", {"Lambda^2, S^2 match literal wedge/sym"});
  }
  return out;
}

Outcome dickson_identities() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    require_clauses(out, RingContext(p, nu), "oracle",
                    {"g_i(X_m) V_r = V_{ip^m+r} - V_{ip^m-r}",
                     "V_{kp^m+r} = f_k(X_m) V_r + f_{k-1}(X_m) V_{p^m-r}",
                     "f_n = g_n + g_{n-2} + ... (ending g_1, or g_2 + 1)"});
  }
  return out;
}

std::pair<int, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

Outcome determinism() {
  Outcome out;
  for (auto [p, nu] : kContexts) {
    const auto ps = std::to_string(p);
    const auto nus = std::to_string(nu);
    for (const char* format : {"csv", "json"}) {
      for (std::int64_t n = 1; n <= 2 * p; ++n) {
        if (n % p == 0) continue;
        const std::vector<std::string> args{"table", "--p", ps, "--nu", nus, "--n", std::to_string(n), "--format", format};
        const auto first = cli(args);
        const auto second = cli(args);
        ++out.checks;
        if (first.first != 0 || first != second) out.fail("table differs between runs: p=" + ps + " n=" + std::to_string(n));
        if (std::string(format) == "json") {
          RingContext ctx(p, nu);
          for (const auto& row : Json::parse(first.second).at("rows")) {
            ++out.checks;
            const auto value = element_from_json(row.at("value"));
            if (value != psi(n, basis_element(ctx, row.at("s").get<std::int64_t>())) ||
                to_json(value) != row.at("value")) {
              out.fail("table JSON row does not round-trip");
            }
          }
        }
      }
    }
    RingContext ctx(p, nu);
    auto rng = verify::make_rng(ctx, 11);
    for (int i = 0; i < 200; ++i) {
      const auto w = scale(1 + 7919 * i, verify::random_element(ctx, rng, ctx.order(), 0.3));
      const auto text = to_json(w).dump();
      ++out.checks;
      if (element_from_json(text) != w || to_json(element_from_json(text)).dump() != text) {
        out.fail("JSON round-trip lost " + to_string(w));
      }
    }
    const std::vector<std::string> psi_args{"psi", "--p", ps, "--nu", nus, "--n", "1", "--element",
                                            to_string(verify::random_element(ctx, rng, 9, 0.5)), "--format", "json"};
    const auto a = cli(psi_args);
    const auto b = cli(psi_args);
    ++out.checks;
    if (a != b || a.first != 0) out.fail("psi output differs between runs");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked example psi^4 at p=7, nu=2", worked_example},
      {"closed forms for psi^n(V_{p^m-1}) and psi^n(V_{p^m})", closed_forms},
      {"periodicity and mirror symmetry in n", periodicity},
      {"psi^n is a ring map and composes multiplicatively", ring_map},
      {"reciprocity between V_r and V_{p^m-r}", reciprocity},
      {"alternating shape and paired forms", shape},
      {"product table from Jordan-block tensors", oracle_products},
      {"psi^n from literal exterior powers", oracle_adams},
      {"second exterior/symmetric power reciprocity", gow_laffey},
      {"Dickson identities for X_m", dickson_identities},
      {"determinism and JSON round-trip", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    std::cout << (result.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " ("
              << result.checks << " checks, " << seconds_since(t0) << " s)";
    if (!result.ok) {
      std::cout << ": " << result.note;
      ++failures;
    }
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
