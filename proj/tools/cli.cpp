#include "cli.hpp"

#include <hurzeta/hurzeta.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hurzeta::cli {
namespace {

enum class OutputFormat
{
   table,
   csv,
   json,
   plot_xy,
};

OutputFormat parse_format(const std::string& s)
{
   if (s == "table")
      return OutputFormat::table;
   if (s == "csv")
      return OutputFormat::csv;
   if (s == "json")
      return OutputFormat::json;
   return OutputFormat::plot_xy;
}

struct Options
{
   RunConfig config;
   std::string format = "table";
   std::optional<double> tol; // --tol, when given explicitly

   std::string sigma_text;
   std::string a_text;
   int N = 0;
   int n = 0;
   int nmin = -1;
   int nmax = 6;
   std::string astep_text = "0.05";
   bool curve = false;
   bool uniqueness = false;
};

void add_common(CLI::App* cmd, Options& o)
{
   cmd->add_option("--digits", o.config.digits, "significant digits in numeric output")->capture_default_str();
   cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json", "plot-xy"}))
      ->capture_default_str();
   cmd->add_option("--tol", o.tol, "bisection / root tolerance");
   cmd->add_option("--target", o.config.target_abs_error, "absolute accuracy target for zeta")->capture_default_str();
   cmd->add_option("--grid", o.config.grid_points, "scan points per unit of sigma")->capture_default_str();
   cmd->add_option("--delta", o.config.exclusion_delta, "exclusion distance around Bernoulli roots")
      ->capture_default_str();
}

double parse_real(const std::string& text, const char* flag)
{
   char* end = nullptr;
   const double v = std::strtod(text.c_str(), &end);
   if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
      throw InvalidParameter(std::string(flag) + ": cannot parse '" + text + "' as a real number");
   return v;
}

std::string fmt(double x, const RunConfig& c) { return format_number(x, c.digits); }

int cmd_eval(const Options& o, std::ostream& out)
{
   const double sigma = parse_real(o.sigma_text, "--sigma");
   const double a_value = parse_real(o.a_text, "--a");
   if (sigma == 1.0)
      throw PoleError("--sigma: zeta(s, a) has a pole at s = 1");
   const ShiftParameter a(a_value);
   EvalParams params;
   params.target_abs_error = o.config.target_abs_error;
   const ZetaEvaluation ev = evaluate_hurwitz_zeta(sigma, a, params);
   const auto& c = o.config;
   switch (parse_format(o.format)) {
   case OutputFormat::table:
      out << "zeta(" << fmt(sigma, c) << ", " << fmt(a_value, c) << ") = " << fmt(ev.value, c) << '\n';
      out << "error bound = " << format_number(ev.error_bound, 3) << '\n';
      break;
   case OutputFormat::csv:
      out << "sigma,a,value,error_bound\n"
          << fmt(sigma, c) << ',' << fmt(a_value, c) << ',' << fmt(ev.value, c) << ','
          << format_number(ev.error_bound, 3) << '\n';
      break;
   case OutputFormat::json: {
      auto j = json_header("eval", c);
      j["sigma"] = json_number(sigma, c.digits);
      j["a"] = json_number(a_value, c.digits);
      j["value"] = json_number(ev.value, c.digits);
      j["error_bound"] = json_number(ev.error_bound, 3);
      out << j.dump(2) << '\n';
      break;
   }
   case OutputFormat::plot_xy:
      write_plot_xy(out, "eval sigma=" + fmt(sigma, c) + " a=" + fmt(a_value, c), {{sigma, ev.value}}, c.digits);
      break;
   }
   return kSuccess;
}

int cmd_roots(const Options& o, std::ostream& out)
{
   if (o.n < 2)
      throw DomainError("--n: roots b_n^+- are defined for n >= 2");
   if (o.n > kDefaultBernoulliCap)
      throw CapExceeded("--n: exceeds the exact Bernoulli cap " + std::to_string(kDefaultBernoulliCap));
   const auto& c = o.config;
   double lower = 0.0;
   double upper = 0.5;
   double halfwidth = 0.0;
   std::string note = "odd index: roots are exactly 0 and 1/2";
   if (o.n % 2 == 0) {
      const EvenRootPair r = even_roots(o.n, o.tol.value_or(kDefaultRootTolerance));
      lower = r.b_minus;
      upper = r.b_plus;
      halfwidth = r.residual_bound;
      note.clear();
   }
   switch (parse_format(o.format)) {
   case OutputFormat::table:
      out << "b_" << o.n << "^- = " << fmt(lower, c) << '\n';
      out << "b_" << o.n << "^+ = " << fmt(upper, c) << '\n';
      if (!note.empty())
         out << "(" << note << ")\n";
      else
         out << "root error <= " << format_number(halfwidth, 3) << '\n';
      break;
   case OutputFormat::csv:
      out << "n,b_minus,b_plus,error_bound,note\n"
          << o.n << ',' << fmt(lower, c) << ',' << fmt(upper, c) << ',' << format_number(halfwidth, 3) << ','
          << csv_escape(note) << '\n';
      break;
   case OutputFormat::json: {
      auto j = json_header("roots", c);
      j["n"] = o.n;
      j["b_minus"] = json_number(lower, c.digits);
      j["b_plus"] = json_number(upper, c.digits);
      j["error_bound"] = json_number(halfwidth, 3);
      j["exact"] = o.n % 2 == 1;
      j["note"] = note;
      out << j.dump(2) << '\n';
      break;
   }
   case OutputFormat::plot_xy:
      write_plot_xy(out, "roots n=" + std::to_string(o.n), {{lower, 0.0}, {upper, 0.0}}, c.digits);
      break;
   }
   return kSuccess;
}

int cmd_predict(const Options& o, std::ostream& out)
{
   if (o.N < -1)
      throw DomainError("--N: must be >= -1");
   const Rational a_exact = parse_rational(o.a_text);
   if (!(a_exact > 0 && a_exact <= 1))
      throw DomainError("--a: must lie in (0, 1]");
   const ZeroPrediction p = predict_zero(IntervalIndex(o.N), a_exact);
   const double a = to_double(a_exact);

   std::string explicit_form = "n/a";
   bool mismatch = false;
   if (o.N >= 0 && a < 1.0) {
      try {
         const bool inside = predict_zero_explicit(o.N, a);
         explicit_form = inside ? "yes" : "no";
         mismatch = p.exists != Existence::boundary && inside != (p.exists == Existence::yes);
      } catch (const BoundaryError&) {
         explicit_form = "boundary";
      }
   }

   const auto& c = o.config;
   switch (parse_format(o.format)) {
   case OutputFormat::table:
      out << "interval   (" << -o.N - 1 << ", " << -o.N << ")\n";
      out << "a          " << to_string(a_exact) << '\n';
      out << "B_" << o.N + 1 << "(a)     " << fmt(p.b_left, c) << "  [" << to_string(p.left_exact) << "]\n";
      out << "B_" << o.N + 2 << "(a)     " << fmt(p.b_right, c) << "  [" << to_string(p.right_exact) << "]\n";
      out << "criterion  " << to_string(p.exists) << '\n';
      out << "explicit   " << explicit_form << '\n';
      if (mismatch)
         out << "MISMATCH between criterion and explicit ranges\n";
      break;
   case OutputFormat::csv:
      out << "N,a,B_left,B_right,B_left_exact,B_right_exact,predicted,explicit,mismatch\n"
          << o.N << ',' << fmt(a, c) << ',' << fmt(p.b_left, c) << ',' << fmt(p.b_right, c) << ','
          << to_string(p.left_exact) << ',' << to_string(p.right_exact) << ',' << to_string(p.exists) << ','
          << explicit_form << ',' << (mismatch ? "true" : "false") << '\n';
      break;
   case OutputFormat::plot_xy:
      throw InvalidParameter("--format plot-xy is not available for predict");
   case OutputFormat::json: {
      auto j = json_header("predict", c);
      j["N"] = o.N;
      j["a"] = json_number(a, c.digits);
      j["a_exact"] = to_string(a_exact);
      j["B_left"] = json_number(p.b_left, c.digits);
      j["B_right"] = json_number(p.b_right, c.digits);
      j["B_left_exact"] = to_string(p.left_exact);
      j["B_right_exact"] = to_string(p.right_exact);
      j["predicted"] = to_string(p.exists);
      j["explicit"] = explicit_form;
      j["mismatch"] = mismatch;
      out << j.dump(2) << '\n';
      break;
   }
   }
   return mismatch ? kDisagreement : kSuccess;
}

int cmd_scan(const Options& o, std::ostream& out)
{
   if (o.N < -1)
      throw DomainError("--N: must be >= -1");
   const double a_value = parse_real(o.a_text, "--a");
   const ShiftParameter a(a_value);
   RunConfig config = o.config;
   if (o.tol)
      config.refine_tol = *o.tol;
   config.validate();
   const ScanParams params = config.scan_params();
   const IntervalIndex interval(o.N);
   const auto samples = sample_curve(interval, a, params);
   const auto zeros = detail::zeros_from_samples(samples, a, params);
   const auto& c = config;
   const std::string query = "scan N=" + std::to_string(o.N) + " a=" + fmt(a_value, c);

   switch (parse_format(o.format)) {
   case OutputFormat::table:
      out << "interval (" << -o.N - 1 << ", " << -o.N << "), a = " << fmt(a_value, c) << ": " << zeros.size()
          << (zeros.size() == 1 ? " zero\n" : " zeros\n");
      for (const auto& z : zeros)
         out << "  sigma = " << fmt(z.sigma, c) << "  half-width " << format_number(z.bracket_halfwidth, 3)
             << "  residual " << format_number(z.residual, 3) << '\n';
      if (o.curve)
         for (const auto& s : samples)
            out << fmt(s.sigma, c) << ' ' << fmt(s.value, c) << '\n';
      break;
   case OutputFormat::csv:
      if (o.curve) {
         out << "sigma,zeta\n";
         for (const auto& s : samples)
            out << fmt(s.sigma, c) << ',' << fmt(s.value, c) << '\n';
      } else {
         out << "sigma,bracket_halfwidth,residual\n";
         for (const auto& z : zeros)
            out << fmt(z.sigma, c) << ',' << format_number(z.bracket_halfwidth, 3) << ','
                << format_number(z.residual, 3) << '\n';
      }
      break;
   case OutputFormat::json: {
      auto j = json_header("scan", c);
      j["N"] = o.N;
      j["a"] = json_number(a_value, c.digits);
      j["zeros"] = zeros_json(zeros, c.digits);
      if (o.curve) {
         nlohmann::json curve = nlohmann::json::array();
         for (const auto& s : samples)
            curve.push_back({json_number(s.sigma, c.digits), json_number(s.value, c.digits)});
         j["curve"] = std::move(curve);
      }
      out << j.dump(2) << '\n';
      break;
   }
   case OutputFormat::plot_xy:
      write_plot_xy(out, query, samples, c.digits);
      break;
   }
   return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
   if (o.nmin < -1 || o.nmax < o.nmin)
      throw DomainError("--nmin/--nmax: need -1 <= nmin <= nmax");
   const Rational step = parse_rational(o.astep_text);
   if (!(step > 0 && step < 1))
      throw DomainError("--astep: must lie in (0, 1)");
   RunConfig config = o.config;
   if (o.tol)
      config.refine_tol = *o.tol;
   config.validate();
   const ScanParams params = config.scan_params();

   std::vector<double> grid;
   for (Rational a = step; a <= 1; a += step)
      grid.push_back(to_double(a));

   const VerificationReport report = verify_theorem(grid, o.nmin, o.nmax, config.exclusion_delta, params);

   std::vector<UniquenessResult> uniqueness;
   bool uniqueness_ok = true;
   if (o.uniqueness) {
      // Length-2 intervals [-2M-2, -2M) inside [-nmax-1, -nmin].
      const int m_lo = std::max(2, (o.nmin + 1) / 2);
      const int m_hi = (o.nmax - 1) / 2;
      if (m_lo > m_hi)
         err << "note: no interval [-2M-2, -2M) with M >= 2 fits the requested range\n";
      for (int M = m_lo; M <= m_hi; ++M)
         for (double a : grid) {
            uniqueness.push_back(uniqueness_check(M, ShiftParameter(a), params));
            uniqueness_ok = uniqueness_ok && uniqueness.back().count == 1;
         }
   }

   const auto& c = config;
   switch (parse_format(o.format)) {
   case OutputFormat::plot_xy: {
      // (a, sigma) for every located zero: the zero curves per interval.
      std::vector<CurveSample> points;
      for (const auto& cs : report.cases)
         for (const auto& z : cs.zeros)
            points.push_back({cs.prediction.a, z.sigma});
      write_plot_xy(out,
                    "verify nmin=" + std::to_string(o.nmin) + " nmax=" + std::to_string(o.nmax)
                       + " astep=" + to_string(step) + " columns: a sigma",
                    points, c.digits);
      break;
   }
   case OutputFormat::table:
      out << "agree " << report.agree << "  disagree " << report.disagree << "  skipped " << report.skipped << '\n';
      out << std::left << std::setw(4) << "N" << std::setw(8) << "a" << std::setw(10) << "predict" << std::setw(7)
          << "zeros" << std::setw(10) << "status"
          << "sigmas / note\n";
      for (const auto& cs : report.cases) {
         out << std::left << std::setw(4) << cs.prediction.N << std::setw(8) << fmt(cs.prediction.a, c)
             << std::setw(10) << to_string(cs.prediction.exists) << std::setw(7) << cs.zeros.size() << std::setw(10)
             << to_string(cs.status) << joined_sigmas(cs.zeros, c.digits);
         if (!cs.notes.empty())
            out << (cs.zeros.empty() ? "" : "  ") << cs.notes;
         out << '\n';
      }
      if (o.uniqueness) {
         out << "uniqueness on [-2M-2, -2M):\n";
         for (const auto& u : uniqueness)
            out << "  M=" << u.M << " a=" << fmt(u.a, c) << " count=" << u.count << "  "
                << joined_sigmas(u.zeros, c.digits) << '\n';
      }
      break;
   case OutputFormat::csv:
      write_verify_csv(out, report, c.digits);
      if (o.uniqueness) {
         out << '\n';
         write_uniqueness_csv(out, uniqueness, c.digits);
      }
      break;
   case OutputFormat::json: {
      auto j = verify_json(report, c);
      j["query"] = {{"nmin", o.nmin}, {"nmax", o.nmax}, {"astep", to_string(step)}};
      if (o.uniqueness)
         j["uniqueness"] = uniqueness_json(uniqueness, c.digits);
      out << j.dump(2) << '\n';
      break;
   }
   }
   return report.disagree == 0 && uniqueness_ok ? kSuccess : kDisagreement;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
   CLI::App app{"Real zeros of the Hurwitz zeta function on the negative axis", "hurzeta"};
   app.set_version_flag("--version", kVersion);
   app.require_subcommand(1);
   Options o;

   auto* eval = app.add_subcommand("eval", "evaluate zeta(sigma, a) with an error bound");
   eval->add_option("--sigma", o.sigma_text, "real argument sigma != 1")->required();
   eval->add_option("--a", o.a_text, "shift parameter in (0, 1]")->required();
   add_common(eval, o);

   auto* roots = app.add_subcommand("roots", "roots b_n^- and b_n^+ of B_n in [0, 1)");
   roots->add_option("--n", o.n, "polynomial index >= 2")->required();
   add_common(roots, o);

   auto* predict = app.add_subcommand("predict", "zero criterion for (-N-1, -N) at shift a");
   predict->add_option("--N", o.N, "interval index >= -1")->required();
   predict->add_option("--a", o.a_text, "shift parameter in (0, 1], decimal or p/q")->required();
   add_common(predict, o);

   auto* scan = app.add_subcommand("scan", "locate zeros of zeta(., a) in (-N-1, -N)");
   scan->add_option("--N", o.N, "interval index >= -1")->required();
   scan->add_option("--a", o.a_text, "shift parameter in (0, 1]")->required();
   scan->add_flag("--curve", o.curve, "also emit the sampled curve");
   add_common(scan, o);

   auto* verify = app.add_subcommand("verify", "sweep the criterion against located zeros");
   verify->add_option("--nmin", o.nmin, "smallest interval index")->capture_default_str();
   verify->add_option("--nmax", o.nmax, "largest interval index")->capture_default_str();
   verify->add_option("--astep", o.astep_text, "grid step for a in (0, 1]")->capture_default_str();
   verify->add_flag("--uniqueness", o.uniqueness, "also count zeros on each [-2M-2, -2M) in range");
   add_common(verify, o);

   try {
      app.parse(argc, argv);
   } catch (const CLI::ParseError& e) {
      // Help and version requests exit cleanly; everything else is a usage error.
      return app.exit(e, out, err) == 0 ? kSuccess : kDomainError;
   }

   try {
      o.config.validate();
      if (eval->parsed())
         return cmd_eval(o, out);
      if (roots->parsed())
         return cmd_roots(o, out);
      if (predict->parsed())
         return cmd_predict(o, out);
      if (scan->parsed())
         return cmd_scan(o, out);
      return cmd_verify(o, out, err);
   } catch (const AccuracyError& e) {
      err << "accuracy failure: " << e.what() << '\n';
      return kAccuracyFailure;
   } catch (const DomainError& e) {
      err << "domain error: " << e.what() << '\n';
      return kDomainError;
   } catch (const BoundaryError& e) {
      err << "domain error: " << e.what() << '\n';
      return kDomainError;
   } catch (const Error& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternalError;
   }
}

} // namespace hurzeta::cli
