// harmlike: tables, identity verification, series-vs-reference comparison
// and exact coefficient dumps for the harmonic-like numbers H_n(a).

#include <charconv>
#include <complex>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmlike/binomial.hpp"
#include "harmlike/harmonic.hpp"
#include "harmlike/series.hpp"
#include "harmlike/verify.hpp"

namespace {

using harmlike::Complex;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Ordered key-value record; insertion order fixes the CSV column order.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(const std::string& key, std::string value) {
    fields.emplace_back(key, std::move(value));
  }
};

std::string format_double(double v, int precision) {
  // Shortest round-trip decimal at full precision, otherwise truncated
  // general format.
  char buf[64];
  const auto res =
      precision >= 17
          ? std::to_chars(buf, buf + sizeof buf, v)
          : std::to_chars(buf, buf + sizeof buf, v,
                          std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

std::string rational_str(const harmlike::Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

// Complex literal: RE, RE+IMi or RE-IMi, no spaces.
Complex parse_complex(const std::string& text) {
  std::size_t pos = 0;
  double re = std::stod(text, &pos);
  if (pos == text.size()) return {re, 0.0};
  if (text[pos] != '+' && text[pos] != '-') {
    throw std::invalid_argument("malformed complex literal: " + text);
  }
  std::size_t pos2 = 0;
  double im = std::stod(text.substr(pos), &pos2);
  const std::string tail = text.substr(pos + pos2);
  if (tail != "i") {
    throw std::invalid_argument("malformed complex literal: " + text);
  }
  return {re, im};
}

void emit(const std::vector<Record>& records, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const Record& r : records) {
      json obj = json::object();
      for (const auto& [k, v] : r.fields) obj[k] = v;
      arr.push_back(std::move(obj));
    }
    std::cout << arr.dump(2) << "\n";
    return;
  }
  // CSV: header always present, LF endings.
  if (records.empty()) return;
  for (std::size_t i = 0; i < records[0].fields.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << records[0].fields[i].first;
  }
  std::cout << "\n";
  for (const Record& r : records) {
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << r.fields[i].second;
    }
    std::cout << "\n";
  }
}

int cmd_table(const std::string& a_text, unsigned n_max,
              const std::string& format, int precision) {
  const Complex a = parse_complex(a_text);
  const auto values = harmlike::harmonic_like_sequence(a, n_max);
  std::vector<Record> records;
  for (unsigned n = 1; n <= n_max; ++n) {
    Record r;
    r.add("n", std::to_string(n));
    r.add("a_re", format_double(a.real(), precision));
    r.add("a_im", format_double(a.imag(), precision));
    r.add("method", "recurrence");
    r.add("value_re", format_double(values[n - 1].real(), precision));
    r.add("value_im", format_double(values[n - 1].imag(), precision));
    records.push_back(std::move(r));
  }
  emit(records, format);
  return kExitOk;
}

int cmd_verify(const std::string& suite, unsigned n_max,
               const std::string& format, bool inject_fault) {
  harmlike::VerifyOptions opts;
  opts.n_max = n_max;
  opts.inject_coefficient_fault = inject_fault;
  const auto results = harmlike::run_suite(suite, opts);

  std::vector<Record> records;
  unsigned as_expected = 0;
  for (const auto& c : results) {
    Record r;
    r.add("suite", c.suite);
    r.add("check", c.name);
    r.add("passed", c.passed ? "true" : "false");
    r.add("expected_to_fail", c.expected_to_fail ? "true" : "false");
    r.add("as_expected", c.as_expected() ? "true" : "false");
    r.add("detail", c.detail);
    records.push_back(std::move(r));
    if (c.as_expected()) ++as_expected;
  }
  Record summary;
  summary.add("suite", "summary");
  summary.add("check", "total=" + std::to_string(results.size()));
  summary.add("passed", std::to_string(as_expected));
  summary.add("expected_to_fail", "");
  summary.add("as_expected",
              as_expected == results.size() ? "true" : "false");
  summary.add("detail", "");
  records.push_back(std::move(summary));
  emit(records, format);
  return as_expected == results.size() ? kExitOk : kExitCheckFailed;
}

int cmd_compare(const std::string& function, double z_min, double z_max,
                unsigned steps, double tol, const std::string& format,
                int precision) {
  if (z_min > z_max) {
    throw CLI::ValidationError("--z-min must not exceed --z-max");
  }
  const harmlike::FunctionId id = harmlike::parse_function_id(function);
  std::vector<Record> records;
  for (unsigned i = 0; i < steps; ++i) {
    const double z = steps == 1
                         ? z_min
                         : z_min + (z_max - z_min) * i / (steps - 1.0);
    harmlike::SeriesResult res;
    Complex reference;
    switch (id) {
      case harmlike::FunctionId::si2:
        res = harmlike::si_squared_series({z, 0.0}, tol);
        reference = harmlike::si_reference({z, 0.0});
        reference *= reference;
        break;
      case harmlike::FunctionId::cos_si:
        res = harmlike::cos_si_series({z, 0.0}, tol);
        reference = 2.0 * std::cos(z) * harmlike::si_reference({z, 0.0});
        break;
      case harmlike::FunctionId::shi2:
        res = harmlike::shi_squared_series({z, 0.0}, tol);
        reference = harmlike::shi_reference({z, 0.0});
        reference *= reference;
        break;
      case harmlike::FunctionId::cosh_shi:
        res = harmlike::cosh_shi_series({z, 0.0}, tol);
        reference = 2.0 * std::cosh(z) * harmlike::shi_reference({z, 0.0});
        break;
      default:
        throw CLI::ValidationError(
            "compare expects one of: si2, cossi, shi2, coshshi");
    }
    Record r;
    r.add("function_id", harmlike::to_string(id));
    r.add("z_re", format_double(z, precision));
    r.add("z_im", format_double(0.0, precision));
    r.add("value_re", format_double(res.value.real(), precision));
    r.add("value_im", format_double(res.value.imag(), precision));
    r.add("reference_re", format_double(reference.real(), precision));
    r.add("reference_im", format_double(reference.imag(), precision));
    r.add("abs_error", format_double(std::abs(res.value - reference),
                                     precision));
    r.add("terms_used", std::to_string(res.terms_used));
    records.push_back(std::move(r));
  }
  emit(records, format);
  return kExitOk;
}

int cmd_coeffs(const std::string& function, unsigned n_max,
               const std::string& format, int precision) {
  const harmlike::FunctionId id = harmlike::parse_function_id(function);
  const auto table = harmlike::exact_coefficients(id, n_max);
  std::vector<Record> records;
  for (const auto& [power, coeff] : table.coefficients) {
    Record r;
    r.add("function_id", harmlike::to_string(id));
    r.add("power", std::to_string(power));
    r.add("coefficient", rational_str(coeff));
    r.add("coefficient_approx",
          format_double(harmlike::to_double(coeff), precision));
    records.push_back(std::move(r));
  }
  emit(records, format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic-like numbers H_n(a): tables, identity verification, "
               "series comparison and exact coefficients"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--precision are accepted after the subcommand

  std::string format = "csv";
  int precision = 17;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--precision", precision, "Significant decimal digits")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "Tabulate H_n(a) for n=1..n_max");
  std::string a_text = "1";
  unsigned n_max = 10;
  table->add_option("--a", a_text, "Parameter a (RE, RE+IMi or RE-IMi)");
  table->add_option("--n-max", n_max, "Largest index n");

  auto* verify = app.add_subcommand("verify", "Run identity suites");
  std::string suite = "all";
  unsigned verify_n_max = 25;
  bool inject_fault = false;
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"all", "staver", "recurrence", "eq2",
                             "series_coeffs", "series_values"}));
  verify->add_option("--n-max", verify_n_max, "Largest index n");
  verify->add_flag("--inject-coefficient-fault", inject_fault,
                   "Flip one series coefficient sign (self-test of the "
                   "failure path)");

  auto* compare = app.add_subcommand(
      "compare", "Series vs reference product on a real z grid");
  std::string function = "si2";
  double z_min = 0.0, z_max = 5.0, tol = 1e-14;
  unsigned steps = 11;
  compare->add_option("--function", function,
                      "One of: si2, cossi, shi2, coshshi");
  compare->add_option("--z-min", z_min, "Grid start");
  compare->add_option("--z-max", z_max, "Grid end");
  compare->add_option("--steps", steps, "Grid points (endpoints inclusive)")
      ->check(CLI::PositiveNumber);
  compare->add_option("--tol", tol, "Series truncation tolerance")
      ->check(CLI::Range(1e-300, 0.999999));

  auto* coeffs = app.add_subcommand(
      "coeffs", "Exact rational series coefficients");
  std::string coeff_function = "si2";
  unsigned coeff_n_max = 10;
  coeffs->add_option("--function", coeff_function,
                     "One of: si2, cossi, shi2, coshshi, si_ref, shi_ref");
  coeffs->add_option("--n-max", coeff_n_max, "Number of terms")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table->parsed()) {
      return cmd_table(a_text, n_max, format, precision);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, verify_n_max, format, inject_fault);
    }
    if (compare->parsed()) {
      return cmd_compare(function, z_min, z_max, steps, tol, format,
                         precision);
    }
    if (coeffs->parsed()) {
      return cmd_coeffs(coeff_function, coeff_n_max, format, precision);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
