#ifndef HURZETA_REPORT_IO_HPP
#define HURZETA_REPORT_IO_HPP

//
// CSV / JSON / plot-xy serialization of evaluation and verification results.
// Output depends only on its inputs: no timestamps, no hash-ordered containers.
//

#include <hurzeta/version.hpp>
#include <hurzeta/zero_analysis.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hurzeta {

inline constexpr int kDefaultDigits = 12;

/// Settings shared by every command; echoed into each JSON report.
struct RunConfig
{
   double target_abs_error = 1e-10;
   int grid_points = 512;
   double refine_tol = 1e-10;
   double exclusion_delta = 1e-3;
   int digits = kDefaultDigits;
   static constexpr bool deterministic = true;

   void validate() const
   {
      if (!(target_abs_error > 0.0) || !(refine_tol > 0.0) || !(exclusion_delta > 0.0))
         throw InvalidParameter("tolerances must be positive");
      if (grid_points < 16)
         throw InvalidParameter("grid must be >= 16 points");
      if (digits < 1 || digits > 17)
         throw InvalidParameter("digits must lie in 1..17");
   }

   ScanParams scan_params() const
   {
      ScanParams p;
      p.grid_points = grid_points;
      p.refine_tol = refine_tol;
      p.eval.target_abs_error = target_abs_error;
      return p;
   }
};

/// Fixed-significance rendering, "%.{digits}g".
inline std::string format_number(double x, int digits = kDefaultDigits)
{
   char buf[64];
   std::snprintf(buf, sizeof buf, "%.*g", digits, x);
   return buf;
}

// JSON numbers carry the same significance as text output.
inline nlohmann::json json_number(double x, int digits)
{
   return std::stod(format_number(x, digits));
}

inline nlohmann::json config_json(const RunConfig& c)
{
   nlohmann::json j;
   j["target_abs_error"] = c.target_abs_error;
   j["grid_points"] = c.grid_points;
   j["refine_tol"] = c.refine_tol;
   j["exclusion_delta"] = c.exclusion_delta;
   j["digits"] = c.digits;
   j["deterministic"] = RunConfig::deterministic;
   return j;
}

/// Envelope common to every JSON document.
inline nlohmann::json json_header(std::string_view command, const RunConfig& c)
{
   nlohmann::json j;
   j["tool"] = "hurzeta";
   j["version"] = kVersion;
   j["command"] = command;
   j["config"] = config_json(c);
   return j;
}

inline nlohmann::json zeros_json(const std::vector<LocatedZero>& zeros, int digits)
{
   nlohmann::json arr = nlohmann::json::array();
   for (const auto& z : zeros)
      arr.push_back({{"sigma", json_number(z.sigma, digits)},
                     {"bracket_halfwidth", json_number(z.bracket_halfwidth, 3)},
                     {"residual", json_number(z.residual, 3)}});
   return arr;
}

inline std::string csv_escape(std::string_view field)
{
   if (field.find_first_of(",\"\n") == std::string_view::npos)
      return std::string(field);
   std::string out = "\"";
   for (char c : field) {
      if (c == '"')
         out += '"';
      out += c;
   }
   return out + "\"";
}

inline const char* agrees_field(const ZeroReport& r)
{
   if (r.status == CaseStatus::skipped)
      return "skipped";
   return r.agrees ? "true" : "false";
}

inline std::string joined_sigmas(const std::vector<LocatedZero>& zeros, int digits)
{
   std::string out;
   for (std::size_t i = 0; i < zeros.size(); ++i) {
      if (i)
         out += ';';
      out += format_number(zeros[i].sigma, digits);
   }
   return out;
}

/// Columns: N, a, B_left, B_right, predicted, zeros_found, sigmas, agrees, note.
inline void write_verify_csv(std::ostream& out, const VerificationReport& report, int digits = kDefaultDigits)
{
   out << "N,a,B_left,B_right,predicted,zeros_found,sigmas,agrees,note\n";
   for (const auto& c : report.cases) {
      const auto& p = c.prediction;
      out << p.N << ',' << format_number(p.a, digits) << ',' << format_number(p.b_left, digits) << ','
          << format_number(p.b_right, digits) << ',' << to_string(p.exists) << ',' << c.zeros.size() << ','
          << joined_sigmas(c.zeros, digits) << ',' << agrees_field(c) << ',' << csv_escape(c.notes) << '\n';
   }
}

inline nlohmann::json verify_json(const VerificationReport& report, const RunConfig& config)
{
   const int d = config.digits;
   nlohmann::json j = json_header("verify", config);
   j["summary"] = {{"agree", report.agree}, {"disagree", report.disagree}, {"skipped", report.skipped}};
   nlohmann::json cases = nlohmann::json::array();
   for (const auto& c : report.cases) {
      const auto& p = c.prediction;
      cases.push_back({{"N", p.N},
                       {"a", json_number(p.a, d)},
                       {"B_left", json_number(p.b_left, d)},
                       {"B_right", json_number(p.b_right, d)},
                       {"predicted", to_string(p.exists)},
                       {"zeros", zeros_json(c.zeros, d)},
                       {"status", to_string(c.status)},
                       {"agrees", c.agrees},
                       {"note", c.notes}});
   }
   j["cases"] = std::move(cases);
   return j;
}

inline nlohmann::json uniqueness_json(const std::vector<UniquenessResult>& results, int digits)
{
   nlohmann::json arr = nlohmann::json::array();
   for (const auto& u : results)
      arr.push_back({{"M", u.M},
                     {"interval", {-2 * u.M - 2, -2 * u.M}},
                     {"a", json_number(u.a, digits)},
                     {"count", u.count},
                     {"endpoint_zero", u.endpoint_zero},
                     {"zeros", zeros_json(u.zeros, digits)}});
   return arr;
}

inline void write_uniqueness_csv(std::ostream& out, const std::vector<UniquenessResult>& results,
                                 int digits = kDefaultDigits)
{
   out << "M,left,right,a,count,endpoint_zero,sigmas\n";
   for (const auto& u : results)
      out << u.M << ',' << -2 * u.M - 2 << ',' << -2 * u.M << ',' << format_number(u.a, digits) << ',' << u.count << ','
          << (u.endpoint_zero ? "true" : "false") << ',' << joined_sigmas(u.zeros, digits) << '\n';
}

/// Two whitespace-separated columns under a '#' comment naming the query.
inline void write_plot_xy(std::ostream& out, std::string_view query, const std::vector<CurveSample>& samples,
                          int digits = kDefaultDigits)
{
   out << "# " << query << '\n';
   for (const auto& s : samples)
      out << format_number(s.sigma, digits) << ' ' << format_number(s.value, digits) << '\n';
}

} // namespace hurzeta

#endif // HURZETA_REPORT_IO_HPP
