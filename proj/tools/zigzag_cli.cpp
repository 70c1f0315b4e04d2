#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zigzag/kekule.hpp"
#include "zigzag/oracles.hpp"
#include "zigzag/polyfam.hpp"
#include "zigzag/serialize.hpp"
#include "zigzag/verify.hpp"

namespace {

using namespace zigzag;

// Greedy factorization of a denominator into powers of P_k, for display.
std::string factored_denominator(Poly den) {
  std::string out;
  for (int k = 1; k <= den.degree(); ++k) {
    Poly pk = polyfam::p_poly(k);
    if (pk.degree() > den.degree()) break;
    int power = 0;
    for (;;) {
      auto [q, r] = poly_divmod(den, pk);
      if (!r.is_zero()) break;
      den = q;
      ++power;
    }
    if (power > 0) {
      if (!out.empty()) out += " * ";
      out += "(" + poly_to_text(pk) + ")";
      if (power > 1) out += "^" + std::to_string(power);
    }
  }
  if (den.degree() > 0 || den.coeff(0) != 1) {
    if (!out.empty()) out += " * ";
    out += "(" + poly_to_text(den) + ")";
  }
  return out.empty() ? "1" : out;
}

int run_table(int max_n, int max_m, const std::string& format) {
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= max_n; ++n) {
      nlohmann::json row = nlohmann::json::array();
      for (int m = 0; m <= max_m; ++m)
        row.push_back(kekule::t_value(n, m).str());
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump() << "\n";
    return 0;
  }
  std::cout << "n\\m";
  for (int m = 0; m <= max_m; ++m) std::cout << "\t" << m;
  std::cout << "\n";
  for (int n = 0; n <= max_n; ++n) {
    std::cout << n;
    for (int m = 0; m <= max_m; ++m)
      std::cout << "\t" << kekule::t_value(n, m).str();
    std::cout << "\n";
  }
  return 0;
}

int run_gf(const std::string& kind, int index) {
  RatFn f;
  if (kind == "row") {
    f = kekule::row_gf(index);
  } else if (kind == "col") {
    f = kekule::col_gf(index);
  } else if (kind == "m-row") {
    f = kekule::m_row_gf(index);
  } else if (kind == "cycle") {
    Poly p = polyfam::p_poly(index + 1);
    f = RatFn(Poly::monomial(Rat((index + 1) / 2), 1)) +
        RatFn(Poly::monomial(-1, 1) * poly_derivative(p), p);
  } else {
    std::cerr << "unknown gf kind: " << kind << "\n";
    return 2;
  }
  nlohmann::json doc = ratfn_to_json(f);
  doc["kind"] = kind;
  doc["index"] = index;
  doc["den_factored"] = factored_denominator(f.den());
  std::cout << doc.dump() << "\n";
  return 0;
}

int run_m_array(int max_i, int max_j) {
  std::cout << "i\\j";
  for (int j = 0; j <= max_j; ++j) std::cout << "\t" << j;
  std::cout << "\n";
  for (int i = 0; i <= max_i; ++i) {
    std::cout << i;
    for (int j = 0; j <= max_j; ++j)
      std::cout << "\t" << kekule::m_entry(i, j).str();
    std::cout << "\n";
  }
  return 0;
}

int run_verify(const std::string& profile, const std::string& out_path) {
  verify::Profile p =
      profile == "full" ? verify::Profile::full : verify::Profile::quick;
  auto checks = verify::run_all(p);
  std::string report = verify::report_json(checks, p);
  if (out_path.empty()) {
    std::cout << report << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << report << "\n";
  }
  for (const auto& c : checks)
    if (c.status == "fail")
      std::cerr << "FAIL " << c.id << ": " << c.detail << "\n";
  return verify::has_failure(checks) ? 1 : 0;
}

int run_oracle(const std::string& model, int n, int m) {
  Int value;
  if (model == "path") {
    value = oracles::count_weighted_path(n, m);
  } else if (model == "lattice") {
    value = oracles::count_lattice_points(n, m);
  } else if (model == "magic") {
    value = oracles::count_magic_labellings(n, m);
  } else if (model == "cycle") {
    value = oracles::count_weighted_cycle(n, m);
  } else {
    std::cerr << "unknown oracle model: " << model << "\n";
    return 2;
  }
  std::cout << value.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations around the array T(n,m) and its friends"};
  app.require_subcommand(1);

  int max_n = 5, max_m = 9;
  std::string format = "tsv";
  auto* table = app.add_subcommand("table", "Print T(n,m) as a grid");
  table->add_option("--max-n", max_n, "Largest row index");
  table->add_option("--max-m", max_m, "Largest column index");
  table->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::string kind;
  int index = 0;
  auto* gf = app.add_subcommand("gf", "Print a generating function");
  gf->add_option("--kind", kind, "row | col | m-row | cycle")->required();
  gf->add_option("--index", index, "Family index")->required();

  int max_i = 5, max_j = 5;
  auto* marr = app.add_subcommand("m-array", "Print the M array as a grid");
  marr->add_option("--max-i", max_i, "Largest row index");
  marr->add_option("--max-j", max_j, "Largest column index");

  std::string profile = "quick", out_path;
  auto* ver = app.add_subcommand("verify", "Run the verification suites");
  ver->add_option("--profile", profile, "Bound profile")
      ->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--out", out_path, "Write the JSON report here");

  std::string model;
  int on = 0, om = 0;
  auto* oracle = app.add_subcommand("oracle", "Run a brute-force counter");
  oracle->add_option("--model", model, "path | lattice | magic | cycle")
      ->required();
  oracle->add_option("--n", on, "Size parameter")->required();
  oracle->add_option("--m", om, "Bound parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) return run_table(max_n, max_m, format);
    if (*gf) return run_gf(kind, index);
    if (*marr) return run_m_array(max_i, max_j);
    if (*ver) return run_verify(profile, out_path);
    if (*oracle) return run_oracle(model, on, om);
  } catch (const zigzag::oracles::budget_error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
