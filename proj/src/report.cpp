#include "gmforms/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace gmforms {

void to_json(Json& j, const GmNorm& v) {
  j = Json{{"p", v.p},
           {"epsilon", v.epsilon},
           {"value", v.value},
           {"primality", std::string(to_string(v.primality))}};
}

void from_json(const Json& j, GmNorm& v) {
  j.at("p").get_to(v.p);
  j.at("epsilon").get_to(v.epsilon);
  j.at("value").get_to(v.value);
  v.primality = primality_from_string(j.at("primality").get<std::string>());
}

void to_json(Json& j, const CongruencePrediction& v) {
  j = Json{{"p", v.p},
           {"epsilon", v.epsilon},
           {"actual", {{"mod8", v.actual_mod8}, {"mod16", v.actual_mod16},
                       {"mod32", v.actual_mod32}, {"mod7", v.actual_mod7}}},
           {"predicted", {{"mod8", v.mod8}, {"mod16", v.mod16},
                          {"mod32", v.mod32}, {"mod7", v.mod7}}},
           {"holds", v.holds()}};
}

void from_json(const Json& j, CongruencePrediction& v) {
  j.at("p").get_to(v.p);
  j.at("epsilon").get_to(v.epsilon);
  const auto& a = j.at("actual");
  a.at("mod8").get_to(v.actual_mod8);
  a.at("mod16").get_to(v.actual_mod16);
  a.at("mod32").get_to(v.actual_mod32);
  a.at("mod7").get_to(v.actual_mod7);
  const auto& p = j.at("predicted");
  p.at("mod8").get_to(v.mod8);
  p.at("mod16").get_to(v.mod16);
  p.at("mod32").get_to(v.mod32);
  p.at("mod7").get_to(v.mod7);
}

void to_json(Json& j, const Representation& v) {
  j = Json{{"n", v.n}, {"d", v.d}, {"x", v.x}, {"y", v.y}};
}

void from_json(const Json& j, Representation& v) {
  j.at("n").get_to(v.n);
  j.at("d").get_to(v.d);
  j.at("x").get_to(v.x);
  j.at("y").get_to(v.y);
}

void to_json(Json& j, const QuadForm& v) {
  j = Json::array({v.a.get_si(), v.b.get_si(), v.c.get_si()});
  if (!v.a.fits_slong_p() || !v.b.fits_slong_p() || !v.c.fits_slong_p()) {
    j = Json::array({v.a.get_str(), v.b.get_str(), v.c.get_str()});
  }
}

void from_json(const Json& j, QuadForm& v) {
  auto coeff = [](const Json& e) {
    return e.is_string() ? parse_integer(e.get<std::string>())
                         : BigInt(e.get<long>());
  };
  v = {coeff(j.at(0)), coeff(j.at(1)), coeff(j.at(2))};
}

void to_json(Json& j, const ClassGroupSummary& v) {
  j = Json{{"discriminant", v.discriminant},
           {"h", v.h},
           {"cyclic_orders", v.cyclic_orders},
           {"has_order_4_element", v.has_order_4_element},
           {"forms", v.forms}};
}

void from_json(const Json& j, ClassGroupSummary& v) {
  j.at("discriminant").get_to(v.discriminant);
  j.at("h").get_to(v.h);
  j.at("cyclic_orders").get_to(v.cyclic_orders);
  j.at("has_order_4_element").get_to(v.has_order_4_element);
  j.at("forms").get_to(v.forms);
}

void to_json(Json& j, const HypothesisFlags& v) {
  j = Json{{"p_mod8_ok", v.p_mod8_ok},
           {"gp_probable_prime", v.gp_probable_prime},
           {"legendre_2_d", v.legendre_2_d},
           {"legendre_minus_d_gp", v.legendre_minus_d_gp},
           {"class_group_order4", v.class_group_order4}};
}

void from_json(const Json& j, HypothesisFlags& v) {
  j.at("p_mod8_ok").get_to(v.p_mod8_ok);
  j.at("gp_probable_prime").get_to(v.gp_probable_prime);
  j.at("legendre_2_d").get_to(v.legendre_2_d);
  j.at("legendre_minus_d_gp").get_to(v.legendre_minus_d_gp);
  j.at("class_group_order4").get_to(v.class_group_order4);
}

void to_json(Json& j, const VerificationRecord& v) {
  j = Json{{"p", v.p},
           {"d", v.d},
           {"g_value", v.g_value},
           {"hypothesis_flags", v.flags},
           {"representation", v.representation},
           {"x_mod8", v.x_mod8},
           {"y_mod8", v.y_mod8},
           {"artin", nullptr},
           {"verdict", std::string(to_string(v.verdict))}};
  if (v.artin) j["artin"] = std::string(to_string(*v.artin));
}

void from_json(const Json& j, VerificationRecord& v) {
  j.at("p").get_to(v.p);
  j.at("d").get_to(v.d);
  j.at("g_value").get_to(v.g_value);
  j.at("hypothesis_flags").get_to(v.flags);
  j.at("representation").get_to(v.representation);
  j.at("x_mod8").get_to(v.x_mod8);
  j.at("y_mod8").get_to(v.y_mod8);
  const auto& artin = j.at("artin");
  v.artin.reset();
  if (!artin.is_null()) v.artin = artin_class_from_string(artin.get<std::string>());
  v.verdict = verdict_from_string(j.at("verdict").get<std::string>());
}

void to_json(Json& j, const SuiteCounts& v) {
  j = Json{{"confirmed", v.confirmed},
           {"hypothesis_not_met", v.hypothesis_not_met},
           {"refuted", v.refuted},
           {"no_representation", v.no_representation},
           {"out_of_range", v.out_of_range},
           {"total", v.total()}};
}

void from_json(const Json& j, SuiteCounts& v) {
  j.at("confirmed").get_to(v.confirmed);
  j.at("hypothesis_not_met").get_to(v.hypothesis_not_met);
  j.at("refuted").get_to(v.refuted);
  j.at("no_representation").get_to(v.no_representation);
  j.at("out_of_range").get_to(v.out_of_range);
}

void to_json(Json& j, const ReportEnvelope& v) {
  j = Json{{"tool_version", v.tool_version},
           {"command", v.command},
           {"parameters", v.parameters},
           {"records", v.records},
           {"summary", v.summary},
           {"generated_at", v.generated_at}};
}

void from_json(const Json& j, ReportEnvelope& v) {
  j.at("tool_version").get_to(v.tool_version);
  j.at("command").get_to(v.command);
  v.parameters = j.at("parameters");
  v.records = j.at("records");
  v.summary = j.at("summary");
  j.at("generated_at").get_to(v.generated_at);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

Json without_timestamp(const ReportEnvelope& env) {
  Json j = env;
  j.erase("generated_at");
  return j;
}

TextTable::TextTable(std::vector<std::string> header) {
  rows_.push_back(std::move(header));
}

void TextTable::add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

void TextTable::print(std::ostream& os) const {
  std::vector<std::size_t> width;
  for (const auto& row : rows_) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows_) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    os << line << '\n';
  }
}

}  // namespace gmforms
