#pragma once

// Verdict records and their JSON form.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cohom1/classify.hpp"
#include "cohom1/diagram.hpp"
#include "cohom1/errors.hpp"

namespace cohom1 {

inline constexpr const char* kSignConvention =
    "euler is defined up to a global sign; [a,b] and [-a,-b] denote the same class";

struct VerdictRecord {
  FamilyTag family = FamilyTag::N6A;
  std::vector<std::pair<std::string, BigInt>> params;
  bool valid = false;
  std::vector<std::string> violations;
  std::optional<DiffeoVerdict> verdict;
  std::optional<EulerClass> euler;
  std::optional<FGAbelianGroup> pi1_P;

  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

inline VerdictRecord make_record(const FamilyInstance& f) {
  VerdictRecord r;
  r.family = f.tag;
  r.params = f.ordered_params();
  r.violations = validate_family(f);
  r.valid = r.violations.empty();
  if (!r.valid) return r;
  r.verdict = classify(f);
  r.euler = r.verdict->euler;
  if (f.tag == FamilyTag::N6C || f.tag == FamilyTag::N6D || f.tag == FamilyTag::N6E) r.pi1_P = principal_bundle_pi1(f);
  return r;
}

namespace detail {

inline nlohmann::json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return to_string(x);
}

inline BigInt json_to_big(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error("expected an integer, got " + j.dump());
}

}  // namespace detail

/// Keys in the record's field order.
inline nlohmann::ordered_json to_json(const VerdictRecord& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = nlohmann::ordered_json(detail::big_to_json(v));
  nlohmann::ordered_json j;
  j["family"] = to_string(r.family);
  j["params"] = params;
  j["valid"] = r.valid;
  j["violations"] = r.violations;
  j["verdict"] = r.verdict ? nlohmann::ordered_json(r.verdict->to_string()) : nlohmann::ordered_json(nullptr);
  if (r.euler) {
    auto e = nlohmann::ordered_json::array();
    for (const auto& c : r.euler->coordinates) e.push_back(nlohmann::ordered_json(detail::big_to_json(c)));
    j["euler"] = e;
  } else {
    j["euler"] = nullptr;
  }
  j["pi1_P"] = r.pi1_P ? nlohmann::ordered_json(r.pi1_P->to_string()) : nlohmann::ordered_json(nullptr);
  j["sign_convention"] = kSignConvention;
  return j;
}

inline std::string to_jsonl(const VerdictRecord& r) { return to_json(r).dump(); }

/// The family instance a record describes (its family and params fields).
inline FamilyInstance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("params")) throw Error("record needs family and params");
  const auto tag = parse_family_tag(j.at("family").get<std::string>());
  if (!tag) throw Error("unknown family " + j.at("family").dump());
  FamilyInstance f{*tag, {}, std::nullopt};
  for (const auto& [k, v] : j.at("params").items()) f.params[k] = detail::json_to_big(v);
  check_param_names(f);
  return f;
}

}  // namespace cohom1
