// slk: command-line driver for the Eichler-Selberg identity toolkit.
//
// Verifications emit one JSON report per run (schema: identity, params,
// status, combination, first_failure, truncation, elapsed_ms,
// normalization_notes).  Exit code: 0 when everything requested verified,
// 2 on a failed identity, 3 on insufficient precision, 1 on usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slk/arith.hpp"
#include "slk/errors.hpp"
#include "slk/lattice.hpp"
#include "slk/lift_numeric.hpp"
#include "slk/selfcheck.hpp"
#include "slk/table_cache.hpp"
#include "slk/verifier.hpp"

namespace {

using slk::verifier::Report;
using slk::verifier::Status;

int status_exit_code(const std::vector<Report>& reports) {
  bool failed = false, imprecise = false;
  for (const Report& r : reports) {
    failed = failed || r.status == Status::Failed;
    imprecise = imprecise || r.status == Status::InsufficientPrecision;
  }
  if (failed) return 2;
  if (imprecise) return 3;
  return 0;
}

std::string reports_to_json(const std::vector<Report>& reports) {
  if (reports.size() == 1) return reports[0].to_json().dump(2) + "\n";
  nlohmann::json arr = nlohmann::json::array();
  for (const Report& r : reports) arr.push_back(r.to_json());
  return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const Report& r : reports) {
    os << r.identity;
    if (r.params.contains("j")) os << " j=" << r.params["j"].get<long>();
    if (r.params.contains("t_max")) os << " t_max=" << r.params["t_max"].get<long>();
    os << ": " << slk::verifier::status_name(r.status);
    if (r.first_failure) os << " (first failure at exponent " << r.first_failure->get_str() << ")";
    if (!r.combination.empty()) {
      os << " combination = [";
      for (std::size_t i = 0; i < r.combination.size(); ++i)
        os << (i ? ", " : "") << r.combination[i].get_str();
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

int emit_reports(const std::vector<Report>& reports, const std::string& format,
                 const std::string& out_path) {
  std::string json_bytes = reports_to_json(reports);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << json_bytes;
  }
  std::cout << (format == "text" ? reports_to_text(reports) : json_bytes);
  return status_exit_code(reports);
}

struct CoeffLine {
  long t = 0, r = 0;
  slk::Rational m;
  double value = 0.0;
};

std::vector<CoeffLine> read_coeff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read coefficient file " + path);
  std::vector<CoeffLine> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 5)
      throw std::runtime_error("coefficient line needs coset_t,coset_r,m_num,m_den,c_value");
    CoeffLine c;
    c.t = std::stol(fields[0]);
    c.r = std::stol(fields[1]);
    c.m = slk::frac(slk::Integer(fields[2]), slk::Integer(fields[3]));
    c.value = std::stod(fields[4]);
    out.push_back(c);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Eichler-Selberg type class number identities"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;

  // verify -------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run an identity verification");
  verify->require_subcommand(1);
  verify->fallthrough();
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "also write the JSON report to this file");

  long tmax = 500;
  CLI::App* classical = verify->add_subcommand("classical", "sum (t-n^2) H(4t-n^2) = sum min(a,b)^3");
  classical->add_option("--tmax", tmax, "check all 1 <= t <= tmax")->capture_default_str();

  unsigned j_mertens = 1;
  std::string parity = "odd";
  std::optional<long> terms_mertens;
  CLI::App* mertens = verify->add_subcommand("mertens", "c_j [H,theta]_j^parity plus divisor series");
  mertens->add_option("--j", j_mertens, "bracket order j >= 1")->required();
  mertens->add_option("--parity", parity, "odd, even, or even-corrected")
      ->check(CLI::IsMember({"odd", "even", "even-corrected"}));
  mertens->add_option("--terms", terms_mertens, "coefficients to verify (default max(60, 4*Sturm))");

  unsigned j_ak = 1;
  std::optional<long> terms_ak;
  std::string ak_sign = "plus";
  CLI::App* ak = verify->add_subcommand("ahlgren-kim", "G_{2j+2} + 24^j/C(2j,j) [g, eta]_j");
  ak->add_option("--j", j_ak, "bracket order j >= 1")->required();
  ak->add_option("--terms", terms_ak, "coefficients to verify");
  ak->add_option("--sign", ak_sign, "sign on the bracket term: plus (as published) or minus")
      ->check(CLI::IsMember({"plus", "minus"}));

  unsigned j_vec = 1;
  std::optional<long> terms_vec;
  CLI::App* vec = verify->add_subcommand("vector", "signature (1,1) component formula at y=(1,1)");
  vec->add_option("--j", j_vec, "bracket order j >= 1")->required();
  vec->add_option("--terms", terms_vec, "coefficients to verify");

  unsigned jmax = 3;
  long all_tmax = 500;
  CLI::App* all = verify->add_subcommand("all", "every identity, j = 1..jmax");
  all->add_option("--jmax", jmax, "largest bracket order")->capture_default_str();
  all->add_option("--tmax", all_tmax, "range for the classical relation")->capture_default_str();

  // tables -------------------------------------------------------------
  CLI::App* tables = app.add_subcommand("tables", "build arithmetic tables");
  long table_max = 0;
  std::string table_out;
  CLI::App* hurwitz_tab = tables->add_subcommand("hurwitz", "Hurwitz class number table");
  hurwitz_tab->add_option("--max", table_max, "largest index")->required();
  hurwitz_tab->add_option("--out", table_out, "output file")->required();

  // lift ---------------------------------------------------------------
  CLI::App* lift = app.add_subcommand("lift", "numeric higher Siegel theta lift");
  unsigned lift_j = 1;
  std::string lift_point = "1,1";
  std::string lift_coeffs;
  CLI::App* lift_eval = lift->add_subcommand("eval", "evaluate both lift formulas");
  lift_eval->add_option("--j", lift_j, "raising order j >= 1")->required();
  lift_eval->add_option("--point", lift_point, "special point y1,y2 (positive rationals)")
      ->capture_default_str();
  lift_eval->add_option("--coeffs", lift_coeffs, "file of coset_t,coset_r,m_num,m_den,c_value lines")
      ->required();

  // selftest -----------------------------------------------------------
  CLI::App* selftest = app.add_subcommand("selftest", "run the oracle property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    std::vector<Report> reports;
    if (classical->parsed()) {
      reports.push_back(slk::verifier::verify_classical(tmax));
    } else if (mertens->parsed()) {
      slk::verifier::MertensParity p = parity == "odd" ? slk::verifier::MertensParity::Odd
                                       : parity == "even" ? slk::verifier::MertensParity::EvenLiteral
                                                          : slk::verifier::MertensParity::EvenCorrected;
      reports.push_back(slk::verifier::verify_mertens(j_mertens, terms_mertens, p));
    } else if (ak->parsed()) {
      slk::verifier::AkSign s = ak_sign == "plus" ? slk::verifier::AkSign::PlusLiteral
                                                  : slk::verifier::AkSign::MinusCorrected;
      reports.push_back(slk::verifier::verify_ahlgren_kim(j_ak, terms_ak, s));
    } else if (vec->parsed()) {
      reports.push_back(slk::verifier::verify_vector_identity(j_vec, terms_vec));
    } else if (all->parsed()) {
      reports.push_back(slk::verifier::verify_classical(all_tmax));
      for (unsigned j = 1; j <= jmax; ++j) {
        reports.push_back(slk::verifier::verify_mertens(j, std::nullopt, slk::verifier::MertensParity::Odd));
        reports.push_back(
            slk::verifier::verify_mertens(j, std::nullopt, slk::verifier::MertensParity::EvenLiteral));
        reports.push_back(
            slk::verifier::verify_mertens(j, std::nullopt, slk::verifier::MertensParity::EvenCorrected));
        reports.push_back(slk::verifier::verify_vector_identity(j, std::nullopt));
        reports.push_back(
            slk::verifier::verify_ahlgren_kim(j, std::nullopt, slk::verifier::AkSign::PlusLiteral));
        reports.push_back(
            slk::verifier::verify_ahlgren_kim(j, std::nullopt, slk::verifier::AkSign::MinusCorrected));
      }
    } else if (hurwitz_tab->parsed()) {
      slk::arith::HurwitzTable table = slk::arith::HurwitzTable::build(table_max);
      slk::TableCache::write_file(table_out, "hurwitz", table_max, table.values());
      std::cout << "wrote hurwitz table for n <= " << table_max << " to " << table_out << "\n";
      return 0;
    } else if (lift_eval->parsed()) {
      auto comma = lift_point.find(',');
      if (comma == std::string::npos) throw std::runtime_error("--point expects y1,y2");
      slk::Rational y1 = slk::parse_rational(lift_point.substr(0, comma));
      slk::Rational y2 = slk::parse_rational(lift_point.substr(comma + 1));
      slk::lattice::Lattice11 L = slk::lattice::Lattice11::scaled_pair(1);
      slk::lattice::SpecialPoint w = slk::lattice::make_special_point(L, y1, y2);
      std::vector<slk::lift::Support> support;
      for (const CoeffLine& c : read_coeff_file(lift_coeffs)) {
        slk::lattice::Vec2 rep{slk::frac(c.t - c.r, 2), slk::frac(c.t + c.r, 2)};
        support.push_back({rep, c.m, c.value});
      }
      slk::lift::LiftInput input{L, support, lift_j, {slk::to_double(y1), slk::to_double(y2)}};
      double series_value = slk::lift::series_lift(input);
      double special_value = slk::lift::special_point_lift(L, support, w, lift_j);
      double rel = std::abs(series_value - special_value) /
                   std::max(1.0, std::max(std::abs(series_value), std::abs(special_value)));
      nlohmann::json out{{"j", lift_j},
                         {"point", lift_point},
                         {"series_formula", series_value},
                         {"special_point_formula", special_value},
                         {"relative_difference", rel}};
      std::string bytes = out.dump(2) + "\n";
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
        f << bytes;
      }
      std::cout << bytes;
      return 0;
    } else if (selftest->parsed()) {
      auto results = slk::selfcheck::run_all();
      for (const auto& r : results)
        std::cout << (r.passed ? "[pass] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
      return slk::selfcheck::all_passed(results) ? 0 : 2;
    }
    return emit_reports(reports, format, out_path);
  } catch (const slk::InsufficientPrecision& e) {
    std::cerr << "insufficient precision: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
