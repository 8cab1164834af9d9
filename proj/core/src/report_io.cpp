#include "bellcong/report_io.hpp"

#include <sstream>

#include "json.hpp"

namespace bellcong {
namespace {

std::string join(const std::vector<std::uint32_t>& coeffs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(coeffs[i]);
  }
  return out;
}

std::string text_side(const SideValue& v) {
  if (const auto* r = std::get_if<std::uint32_t>(&v)) return std::to_string(*r);
  return "[" + join(std::get<std::vector<std::uint32_t>>(v), ',') + "]";
}

std::string csv_side(const SideValue& v) {
  if (const auto* r = std::get_if<std::uint32_t>(&v)) return std::to_string(*r);
  return join(std::get<std::vector<std::uint32_t>>(v), ';');
}

nlohmann::ordered_json json_side(const SideValue& v) {
  if (const auto* r = std::get_if<std::uint32_t>(&v)) return std::to_string(*r);
  auto arr = nlohmann::ordered_json::array();
  for (auto c : std::get<std::vector<std::uint32_t>>(v)) arr.push_back(std::to_string(c));
  return arr;
}

std::string optional_cell(const VerificationReport& r, const char* key) {
  auto v = r.param(key);
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept {
  if (name == "text") return OutputFormat::Text;
  if (name == "jsonl") return OutputFormat::Jsonl;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string csv_header() { return "identity,p,m,n,x,pass,lhs,rhs"; }

std::string format_report(const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Jsonl: {
      nlohmann::ordered_json j;
      j["identity"] = identity_name(report.identity);
      j["p"] = report.p();
      auto params = nlohmann::ordered_json::object();
      for (const auto& [key, value] : report.params) {
        if (key != "p") params[key] = value;
      }
      j["params"] = std::move(params);
      j["lhs"] = json_side(report.lhs);
      j["rhs"] = json_side(report.rhs);
      j["pass"] = report.pass;
      return j.dump();
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << identity_name(report.identity) << ',' << report.p() << ',' << optional_cell(report, "m")
         << ',' << optional_cell(report, "n") << ',' << optional_cell(report, "x") << ','
         << (report.pass ? "true" : "false") << ',' << csv_side(report.lhs) << ','
         << csv_side(report.rhs);
      return os.str();
    }
    case OutputFormat::Text:
      break;
  }
  std::ostringstream os;
  os << identity_name(report.identity) << " p=" << report.p();
  for (const auto& [key, value] : report.params) {
    if (key != "p") os << ' ' << key << '=' << value;
  }
  os << " lhs=" << text_side(report.lhs) << " rhs=" << text_side(report.rhs)
     << (report.pass ? " PASS" : " FAIL");
  return os.str();
}

}  // namespace bellcong
