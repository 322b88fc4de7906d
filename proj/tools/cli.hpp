#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greenring/greenring.hpp"

namespace greenring::cli {

enum ExitCode : int { ok = 0, internal_failure = 1, usage = 2 };

struct Options {
  std::int64_t p = 0;
  std::int64_t nu = 0;
  std::int64_t n = 0;
  std::optional<std::int64_t> s;
  std::optional<std::string> element;
  std::string a;
  std::string b;
  std::string suite = "all";
  std::string format = "text";
  std::string out;
};

namespace detail {

// usage error raised by the front end itself (not the library)
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void apply_env_cap(const char* var, void (*setter)(std::int64_t)) {
  const char* raw = std::getenv(var);
  if (raw == nullptr || *raw == '\0') return;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || v < 1) {
    throw UsageError(std::string(var) + " must be a positive integer, got '" + raw + "'");
  }
  setter(v);
}

inline GreenElement operand(const RingContext& ctx, const Options& o) {
  if (o.s && o.element) throw UsageError("give either --s or --element, not both");
  if (o.s) return basis_element(ctx, *o.s);
  if (o.element) return parse_element(ctx, *o.element);
  throw UsageError("one of --s or --element is required");
}

inline std::string render(const GreenElement& w, const std::string& format) {
  if (format == "json") return to_json(w).dump() + "\n";
  return to_string(w) + "\n";
}

inline std::string table_text(const RingContext& ctx, std::int64_t n, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    Json rows = Json::array();
    for (std::int64_t s = 1; s <= ctx.order(); ++s) {
      const auto v = psi(ctx, n, basis_element(ctx, s));
      Json row;
      row["s"] = s;
      row["dim"] = dim(v);
      row["value"] = to_json(v);
      rows.push_back(std::move(row));
    }
    Json doc;
    doc["p"] = ctx.p();
    doc["nu"] = ctx.nu();
    doc["n"] = n;
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
  } else {
    os << "s,dim,expression\n";
    for (std::int64_t s = 1; s <= ctx.order(); ++s) {
      const auto v = psi(ctx, n, basis_element(ctx, s));
      os << s << ',' << dim(v) << ',' << to_string(v) << '\n';
    }
  }
  return os.str();
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::internal, "cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) fail(ErrorKind::internal, "write to '" + path + "' failed");
}

}  // namespace detail

/// Runs one command line (argv without the program name). Output goes to
/// out, diagnostics to err; the return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adams operations and products in the Green ring of a cyclic p-group", "greenring"};
  app.require_subcommand(1);
  Options o;

  auto ring_flags = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime")->required();
    sub->add_option("--nu", o.nu, "group order is p^nu")->required();
  };
  auto format_flag = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
    sub->add_option("--out", o.out, "write to file instead of stdout");
  };

  auto* psi_cmd = app.add_subcommand("psi", "psi^n of V_s or of an element");
  ring_flags(psi_cmd);
  psi_cmd->add_option("--n", o.n, "Adams degree, coprime to p")->required();
  psi_cmd->add_option("--s", o.s, "basis index");
  psi_cmd->add_option("--element", o.element, "element literal such as V5-V3+2V1");
  format_flag(psi_cmd, {"text", "json"});

  auto* mul_cmd = app.add_subcommand("mul", "product of two elements");
  ring_flags(mul_cmd);
  mul_cmd->add_option("--a", o.a, "left factor")->required();
  mul_cmd->add_option("--b", o.b, "right factor")->required();
  format_flag(mul_cmd, {"text", "json"});

  auto* lambda_cmd = app.add_subcommand("lambda", "exterior power Lambda^n, n < p");
  auto* sym_cmd = app.add_subcommand("sym", "symmetric power S^n, n < p");
  for (auto* sub : {lambda_cmd, sym_cmd}) {
    ring_flags(sub);
    sub->add_option("--n", o.n, "degree")->required();
    sub->add_option("--s", o.s, "basis index");
    sub->add_option("--element", o.element, "element literal");
    format_flag(sub, {"text", "json"});
  }

  auto* table_cmd = app.add_subcommand("table", "psi^n(V_s) for every s");
  ring_flags(table_cmd);
  table_cmd->add_option("--n", o.n, "Adams degree")->required();
  o.format = "text";
  format_flag(table_cmd, {"csv", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "run an invariant sweep");
  ring_flags(verify_cmd);
  verify_cmd->add_option("--suite", o.suite, "suite name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    detail::apply_env_cap("GREENRING_ORDER_CAP", set_order_cap);
    detail::apply_env_cap("GREENRING_ORACLE_CAP", set_oracle_cap);
    const RingContext ctx(o.p, o.nu);

    if (psi_cmd->parsed()) {
      detail::emit(detail::render(psi(ctx, o.n, detail::operand(ctx, o)), o.format), o.out, out);
    } else if (mul_cmd->parsed()) {
      const auto prod = multiply(parse_element(ctx, o.a), parse_element(ctx, o.b));
      detail::emit(detail::render(prod, o.format), o.out, out);
    } else if (lambda_cmd->parsed()) {
      detail::emit(detail::render(lambda_power(ctx, o.n, detail::operand(ctx, o)), o.format), o.out, out);
    } else if (sym_cmd->parsed()) {
      detail::emit(detail::render(sym_power(ctx, o.n, detail::operand(ctx, o)), o.format), o.out, out);
    } else if (table_cmd->parsed()) {
      const auto format = o.format == "json" ? "json" : "csv";
      detail::emit(detail::table_text(ctx, o.n, format), o.out, out);
    } else if (verify_cmd->parsed()) {
      const auto report = verify::run_suite(ctx, o.suite);
      for (const auto& c : report.clauses) out << c.line() << '\n';
      return report.ok() ? ok : internal_failure;
    }
    return ok;
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_usage() ? usage : internal_failure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_failure;
  }
}

}  // namespace greenring::cli
