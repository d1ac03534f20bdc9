#pragma once

// JSON and text serialization of records. Big integers are written as
// decimal strings; field names are snake_case.

#include <ostream>
#include <string>

#include <json.hpp>

#include "gmforms/gm_numbers.hpp"
#include "gmforms/quadclass.hpp"
#include "gmforms/repr_solver.hpp"
#include "gmforms/verifier.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& v) { j = v.get_str(); }
  static void from_json(const json& j, mpz_class& v) {
    v = gmforms::parse_integer(j.get<std::string>());
  }
};

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};

}  // namespace nlohmann

namespace gmforms {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

void to_json(Json& j, const GmNorm& v);
void from_json(const Json& j, GmNorm& v);
void to_json(Json& j, const CongruencePrediction& v);
void from_json(const Json& j, CongruencePrediction& v);
void to_json(Json& j, const Representation& v);
void from_json(const Json& j, Representation& v);
void to_json(Json& j, const QuadForm& v);
void from_json(const Json& j, QuadForm& v);
void to_json(Json& j, const ClassGroupSummary& v);
void from_json(const Json& j, ClassGroupSummary& v);
void to_json(Json& j, const HypothesisFlags& v);
void from_json(const Json& j, HypothesisFlags& v);
void to_json(Json& j, const VerificationRecord& v);
void from_json(const Json& j, VerificationRecord& v);
void to_json(Json& j, const SuiteCounts& v);
void from_json(const Json& j, SuiteCounts& v);

struct ReportEnvelope {
  std::string tool_version = kToolVersion;
  std::string command;
  Json parameters = Json::object();
  Json records = Json::array();
  Json summary = Json::object();
  std::string generated_at;  // ignored by determinism comparisons
};

void to_json(Json& j, const ReportEnvelope& v);
void from_json(const Json& j, ReportEnvelope& v);

/// Current UTC time as ISO-8601 with a trailing Z.
std::string utc_timestamp();

/// The envelope with generated_at removed, for comparisons.
Json without_timestamp(const ReportEnvelope& env);

/// Column-aligned plain-text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> row);
  void print(std::ostream& os) const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace gmforms
