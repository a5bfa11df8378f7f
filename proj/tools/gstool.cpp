// Command-line front end: each subcommand wraps one library pipeline and
// emits OutputRecord envelopes in json, csv, or text form.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gs/json_io.hpp"

namespace {

using gs::io::json;

constexpr int kSchemaVersion = 1;

// Argument-content errors exit with code 2; internal failures with 1.
struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool verbose() {
  const char* v = std::getenv("GSTOOL_VERBOSE");
  return v != nullptr && std::string(v) != "0" && std::string(v) != "";
}

struct Output {
  std::string format = "text";
  std::vector<std::string> csv_columns;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<json> records;
  std::vector<std::string> text_lines;

  void add_record(const std::string& command, const json& inputs,
                  const json& result) {
    records.push_back(json{{"schema_version", kSchemaVersion},
                           {"command", command},
                           {"inputs", inputs},
                           {"result", result}});
  }

  void emit() const {
    if (format == "json") {
      for (const auto& rec : records) std::cout << rec.dump() << "\n";
    } else if (format == "csv") {
      for (std::size_t i = 0; i < csv_columns.size(); ++i) {
        std::cout << (i ? "," : "") << csv_columns[i];
      }
      std::cout << "\n";
      for (const auto& row : csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          std::cout << (i ? "," : "") << row[i];
        }
        std::cout << "\n";
      }
    } else {
      for (const auto& line : text_lines) std::cout << line << "\n";
    }
  }
};

std::string join_u64(const std::vector<std::uint64_t>& v,
                     const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

gs::nt::QuadField parse_field(std::int64_t d) {
  try {
    return gs::nt::QuadField(d);
  } catch (const std::invalid_argument& e) {
    throw ArgError(e.what());
  }
}

void run_ell_table(std::int64_t d, std::uint64_t p_max, Output& out) {
  auto field = parse_field(d);
  if (p_max < 2) throw ArgError("ell-table: --p-max must be >= 2");
  json inputs{{"d", d}, {"p_max", p_max}};
  out.csv_columns = {"p", "q_nu", "qnu_plus_1_factors", "ells", "smallest_ell"};
  out.text_lines.push_back("p\tq_nu\tq_nu+1\tells\tsmallest");
  for (std::uint64_t p = 3; p <= p_max; p += 2) {
    if (!gs::nt::is_prime(p)) continue;
    auto place = gs::nt::splitting_type(p, field);
    if (place.split_type != gs::nt::SplitType::Inert) continue;
    auto certs = gs::pairs::find_ell(place);
    std::vector<std::uint64_t> ells;
    for (const auto& c : certs) ells.push_back(c.ell);
    auto factors = gs::nt::factorize(place.q_nu + 1);
    json result{{"p", p},
                {"q_nu", gs::io::exact_int(place.q_nu)},
                {"qnu_plus_1_factors", factors},
                {"certificates", json::array()},
                {"smallest_ell", ells.empty() ? 0 : ells.front()}};
    for (const auto& c : certs) {
      result["certificates"].push_back(gs::io::to_json(c));
    }
    out.add_record("ell-table", inputs, result);
    out.csv_rows.push_back({std::to_string(p), std::to_string(place.q_nu),
                            join_u64(factors, " "), join_u64(ells, " "),
                            ells.empty() ? "" : std::to_string(ells.front())});
    out.text_lines.push_back(std::to_string(p) + "\t" +
                             std::to_string(place.q_nu) + "\t" +
                             std::to_string(place.q_nu + 1) + "\t{" +
                             join_u64(ells, ",") + "}\t" +
                             (ells.empty() ? "-" : std::to_string(ells[0])));
  }
}

void run_covers(std::int64_t d, std::uint64_t p, std::uint64_t ell,
                Output& out) {
  auto field = parse_field(d);
  auto place = gs::nt::splitting_type(p, field);
  if (place.split_type != gs::nt::SplitType::Inert) {
    throw std::runtime_error("covers: prime " + std::to_string(p) + " is " +
                             gs::nt::to_string(place.split_type) +
                             " in Q(sqrt(" + std::to_string(d) +
                             ")), not inert");
  }
  auto certs = gs::pairs::find_ell(place);
  const gs::pairs::EllCertificate* chosen = nullptr;
  for (const auto& c : certs) {
    if (ell == 0 || c.ell == ell) {
      chosen = &c;
      break;
    }
  }
  if (chosen == nullptr)
    throw std::runtime_error("covers: ell " + std::to_string(ell) +
                             " is not certified at this place");
  auto [degree_c, degree_1] = gs::pairs::cover_degrees(place.q_nu, chosen->ell);
  json inputs{{"d", d}, {"p", p}};
  if (ell != 0) inputs["ell"] = ell;
  json result{{"ell", chosen->ell},
              {"degree_C", gs::io::exact_int(degree_c)},
              {"degree_1", gs::io::exact_int(degree_1)},
              {"witness_trace", gs::mat::char_trace(chosen->witness).coeffs()},
              {"certificate", gs::io::to_json(*chosen)}};
  out.add_record("covers", inputs, result);
  out.csv_columns = {"p", "q_nu", "ell", "degree_C", "degree_1"};
  out.csv_rows.push_back({std::to_string(p), std::to_string(place.q_nu),
                          std::to_string(chosen->ell),
                          std::to_string(degree_c), std::to_string(degree_1)});
  out.text_lines.push_back(
      "p=" + std::to_string(p) + " q_nu=" + std::to_string(place.q_nu) +
      " ell=" + std::to_string(chosen->ell) + " degrees=(" +
      std::to_string(degree_c) + ", " + std::to_string(degree_1) + ")");
}

void run_isogenus(std::int64_t d, std::uint64_t p1, std::uint64_t p2,
                  Output& out) {
  auto field = parse_field(d);
  if (p1 == p2) throw ArgError("isogenus: distinct places required");
  auto place1 = gs::nt::splitting_type(p1, field);
  auto place2 = gs::nt::splitting_type(p2, field);
  for (const auto* pl : {&place1, &place2}) {
    if (pl->split_type != gs::nt::SplitType::Inert)
      throw std::runtime_error("isogenus: prime " + std::to_string(pl->p) +
                               " is " + gs::nt::to_string(pl->split_type) +
                               ", not inert");
  }
  auto certs1 = gs::pairs::find_ell(place1);
  auto certs2 = gs::pairs::find_ell(place2);
  std::uint64_t common = 0;
  for (const auto& c1 : certs1) {
    for (const auto& c2 : certs2) {
      if (c1.ell == c2.ell && (common == 0 || c1.ell < common))
        common = c1.ell;
    }
  }
  if (common == 0)
    throw std::runtime_error("isogenus: no common certified ell");
  std::uint64_t degree =
      gs::pairs::isogenus_degree(place1.q_nu, place2.q_nu, common);
  unsigned __int128 product =
      static_cast<unsigned __int128>(
          gs::mat::group_order(gs::mat::GroupKind::PSL2, place1.q_nu)) *
      gs::mat::group_order(gs::mat::GroupKind::PSL2, place2.q_nu);
  json inputs{{"d", d}, {"p1", p1}, {"p2", p2}};
  json result{{"ell", common},
              {"product_order",
               gs::io::exact_int(static_cast<std::uint64_t>(product))},
              {"degree", gs::io::exact_int(degree)}};
  out.add_record("isogenus", inputs, result);
  out.csv_columns = {"p1", "p2", "ell", "degree"};
  out.csv_rows.push_back({std::to_string(p1), std::to_string(p2),
                          std::to_string(common), std::to_string(degree)});
  out.text_lines.push_back("p1=" + std::to_string(p1) +
                           " p2=" + std::to_string(p2) +
                           " ell=" + std::to_string(common) +
                           " degree=" + std::to_string(degree));
}

void run_common_ell(std::int64_t d, int j, std::uint64_t bound, Output& out) {
  auto field = parse_field(d);
  if (j < 1) throw ArgError("common-ell: --j must be >= 1");
  if (bound < 100) throw ArgError("common-ell: --bound must be >= 100");
  auto result = gs::pairs::common_ell_search(field, j, bound);
  json inputs{{"d", d}, {"j", j}, {"bound", bound}};
  out.add_record("common-ell", inputs, gs::io::to_json(result));
  out.csv_columns = {"ell", "residue_classes", "matched_count",
                     "total_primes"};
  out.csv_rows.push_back({std::to_string(result.ell),
                          join_u64(result.residue_classes, " "),
                          std::to_string(result.matched_primes.size()),
                          std::to_string(result.total_primes)});
  out.text_lines.push_back(
      "ell=" + std::to_string(result.ell) + " classes={" +
      join_u64(result.residue_classes, ",") + "} matched=" +
      std::to_string(result.matched_primes.size()) + "/" +
      std::to_string(result.total_primes));
}

void run_zsigmondy(std::uint64_t q, std::uint64_t n, Output& out) {
  if (q < 2) throw ArgError("zsigmondy: --q must be >= 2");
  if (n < 1) throw ArgError("zsigmondy: --n must be >= 1");
  auto z = gs::nonarith::zsigmondy(q, n);
  json inputs{{"q", q}, {"n", n}};
  out.add_record("zsigmondy", inputs, gs::io::to_json(z));
  out.csv_columns = {"q", "n", "prime", "exception"};
  out.csv_rows.push_back({std::to_string(q), std::to_string(n),
                          z.exception ? "" : std::to_string(z.prime),
                          z.exception ? "true" : "false"});
  out.text_lines.push_back(z.exception
                               ? "exception (no primitive prime divisor)"
                               : "primitive prime " + std::to_string(z.prime));
}

void run_div_check(std::uint64_t q_max, std::uint64_t pprime_max,
                   Output& out) {
  if (q_max < 3) throw ArgError("div-check: --q-max must be >= 3");
  json inputs{{"q_max", q_max}, {"pprime_max", pprime_max}};
  out.csv_columns = {"q", "p_prime", "r_plus", "r_minus", "all_true"};
  std::uint64_t checked = 0, failures = 0;
  for (std::uint64_t q = 3; q <= q_max; q += 2) {
    auto factors = gs::nt::factorize(q);
    bool prime_power = true;
    for (std::uint64_t f : factors) prime_power &= f == factors[0];
    if (!prime_power) continue;
    for (std::uint64_t pp = 3; pp <= pprime_max; pp += 2) {
      if (!gs::nt::is_prime(pp)) continue;
      gs::nonarith::RFactors r;
      try {
        r = gs::nonarith::r_factors(q, pp);
      } catch (const std::overflow_error&) {
        continue;
      }
      auto props = gs::nonarith::div_properties(q, pp);
      ++checked;
      if (!props.all()) ++failures;
      json result{{"q", q},
                  {"p_prime", pp},
                  {"r_plus", gs::io::exact_int(r.r_plus)},
                  {"r_minus", gs::io::exact_int(r.r_minus)},
                  {"all_true", props.all()}};
      out.add_record("div-check", inputs, result);
      out.csv_rows.push_back({std::to_string(q), std::to_string(pp),
                              std::to_string(r.r_plus),
                              std::to_string(r.r_minus),
                              props.all() ? "true" : "false"});
    }
  }
  out.text_lines.push_back("checked " + std::to_string(checked) +
                           " (q, p') pairs, " + std::to_string(failures) +
                           " failures");
  if (failures > 0) throw std::runtime_error("div-check: gcd identity failed");
}

void run_verify(std::uint64_t q_omega, std::uint64_t ell, Output& out) {
  auto report = gs::spectrum::verify_fuchsian_pair(q_omega, ell);
  json inputs{{"q_omega", q_omega}, {"ell", ell}};
  out.add_record("verify", inputs, gs::io::to_json(report));
  out.csv_columns = {"q_omega", "ell", "order_ell_count",
                     "psl2_sub_violations", "borel_violations", "pass"};
  out.csv_rows.push_back({std::to_string(q_omega), std::to_string(ell),
                          std::to_string(report.order_ell_count),
                          std::to_string(report.psl2_sub_violations),
                          std::to_string(report.borel_violations),
                          report.pass ? "true" : "false"});
  out.text_lines.push_back(
      "order-" + std::to_string(ell) + " elements: " +
      std::to_string(report.order_ell_count) + ", subgroup violations: " +
      std::to_string(report.psl2_sub_violations) + ", borel violations: " +
      std::to_string(report.borel_violations) + ", pass: " +
      (report.pass ? "yes" : "no"));
}

void run_picard(std::uint64_t D, Output& out) {
  if (D < 1) throw ArgError("picard: --D must be >= 1");
  auto p = gs::spectrum::picard_classes(D);
  json inputs{{"D", D}};
  out.add_record("picard", inputs, gs::io::to_json(p));
  out.csv_columns = {"D", "count", "index"};
  out.csv_rows.push_back({std::to_string(D), std::to_string(p.count),
                          p.index ? std::to_string(*p.index) : ""});
  out.text_lines.push_back("count=" + std::to_string(p.count) +
                           (p.index ? " index=" + std::to_string(*p.index)
                                    : ""));
}

void run_compare_fields(std::int64_t d1, std::int64_t d2, std::uint64_t bound,
                        Output& out) {
  auto f1 = parse_field(d1);
  auto f2 = parse_field(d2);
  if (bound < 3) throw ArgError("compare-fields: --bound must be >= 3");
  auto disagreements = gs::spectrum::splitting_compare(f1, f2, bound);
  json inputs{{"d1", d1}, {"d2", d2}, {"bound", bound}};
  json result{{"disagreement_primes", disagreements},
              {"equal_so_far", disagreements.empty()}};
  out.add_record("compare-fields", inputs, result);
  out.csv_columns = {"d1", "d2", "disagreement_primes"};
  out.csv_rows.push_back({std::to_string(d1), std::to_string(d2),
                          join_u64(disagreements, " ")});
  out.text_lines.push_back(disagreements.empty()
                               ? "no disagreement up to bound"
                               : "disagreements: {" +
                                     join_u64(disagreements, ",") + "}");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group and number-theoretic machinery for cover "
               "constructions over imaginary quadratic fields."};
  app.footer("Output schema version: " + std::to_string(kSchemaVersion));
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  std::int64_t d = -1, d1 = -1, d2 = -2;
  std::uint64_t p = 3, p1 = 3, p2 = 7, p_max = 100, ell = 0;
  std::uint64_t q = 3, n = 2, q_max = 100, pprime_max = 13;
  std::uint64_t q_omega = 3, D = 1, bound = 100;
  int j = 1;

  auto* ell_table = app.add_subcommand(
      "ell-table", "Certified ell per inert prime up to a bound");
  ell_table->add_option("--d", d, "Squarefree negative d of Q(sqrt(d))")
      ->required();
  ell_table->add_option("--p-max", p_max, "Prime bound")->required();

  auto* covers = app.add_subcommand("covers", "Cover-degree pair at a place");
  covers->add_option("--d", d)->required();
  covers->add_option("--p", p, "Inert rational prime")->required();
  covers->add_option("--ell", ell, "Certified ell (default: smallest)");

  auto* isogenus =
      app.add_subcommand("isogenus", "Isogenus cover degree for two places");
  isogenus->add_option("--d", d)->required();
  isogenus->add_option("--p1", p1)->required();
  isogenus->add_option("--p2", p2)->required();

  auto* common =
      app.add_subcommand("common-ell", "Density search for a shared ell");
  common->add_option("--d", d)->required();
  common->add_option("--j", j, "Degree parameter of t^(2j)+1")->required();
  common->add_option("--bound", bound, "Prime bound")->required();

  auto* zsig = app.add_subcommand("zsigmondy", "Primitive prime divisor");
  zsig->add_option("--q", q)->required();
  zsig->add_option("--n", n)->required();

  auto* div = app.add_subcommand("div-check", "Sweep the gcd identities");
  div->add_option("--q-max", q_max)->required();
  div->add_option("--pprime-max", pprime_max)->required();

  auto* verify = app.add_subcommand(
      "verify", "Exhaustive Fuchsian-pair check at desk scale");
  verify->add_option("--q-omega", q_omega)->required();
  verify->add_option("--ell", ell)->required();

  auto* picard =
      app.add_subcommand("picard", "Conjugacy-class catalog by discriminant");
  picard->add_option("--D", D)->required();

  auto* compare =
      app.add_subcommand("compare-fields", "Splitting-type disagreements");
  compare->add_option("--d1", d1)->required();
  compare->add_option("--d2", d2)->required();
  compare->add_option("--bound", bound)->required();

  // Let `--format` appear after the subcommand name as well as before it.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  out.format = format;
  try {
    if (ell_table->parsed()) run_ell_table(d, p_max, out);
    if (covers->parsed()) run_covers(d, p, ell, out);
    if (isogenus->parsed()) run_isogenus(d, p1, p2, out);
    if (common->parsed()) run_common_ell(d, j, bound, out);
    if (zsig->parsed()) run_zsigmondy(q, n, out);
    if (div->parsed()) run_div_check(q_max, pprime_max, out);
    if (verify->parsed()) run_verify(q_omega, ell, out);
    if (picard->parsed()) run_picard(D, out);
    if (compare->parsed()) run_compare_fields(d1, d2, bound, out);
  } catch (const ArgError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  if (verbose()) {
    std::cerr << "emitting " << out.records.size() << " record(s)\n";
  }
  out.emit();
  return 0;
}
