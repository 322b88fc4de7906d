#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "greenring/context.hpp"
#include "greenring/decompose.hpp"
#include "greenring/element.hpp"
#include "greenring/error.hpp"

namespace greenring {

// Canonical form: {"p": int, "nu": int, "coeffs": {"<r>": int, ...}} with
// only nonzero entries, keys ascending by r. nlohmann::ordered_json keeps
// insertion order so the emitted text is stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const GreenElement& a) {
  Json coeffs = Json::object();
  for (std::int64_t r = 1; r <= a.context().order(); ++r) {
    const auto c = a.coeff(r);
    if (c != 0) coeffs[std::to_string(r)] = c;
  }
  Json out;
  out["p"] = a.context().p();
  out["nu"] = a.context().nu();
  out["coeffs"] = std::move(coeffs);
  return out;
}

inline Json to_json(const RingContext& ctx, const DecompositionReport& report) {
  auto out = to_json(report.to_element(ctx));
  out["rank_profile"] = report.rank_profile;
  return out;
}

inline GreenElement element_from_json(const Json& j) {
  try {
    const RingContext ctx(j.at("p").get<std::int64_t>(), j.at("nu").get<std::int64_t>());
    GreenElement out(ctx);
    for (const auto& [key, value] : j.at("coeffs").items()) {
      std::size_t used = 0;
      const auto r = std::stoll(key, &used);
      if (used != key.size() || r < 1 || r > ctx.order()) {
        fail(ErrorKind::parse, "bad coefficient key '" + key + "'");
      }
      out.accumulate(r, value.get<std::int64_t>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed element JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    fail(ErrorKind::parse, std::string("malformed element JSON: ") + e.what());
  }
}

inline GreenElement element_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
  return element_from_json(j);
}

}  // namespace greenring
