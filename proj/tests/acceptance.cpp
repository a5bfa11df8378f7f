// Acceptance suite: twelve independent pinned checks, one PASS/FAIL line
// each.  The cover-degree criterion shells out to the real CLI binary
// (path given by --cli) and parses its JSON output; everything else calls
// the library directly.  Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "gs/json_io.hpp"
#include "gs/nonarithmetic.hpp"
#include "gs/pair_finder.hpp"
#include "gs/spectrum.hpp"

namespace {

using nlohmann::json;

int failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << index << "] " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Run a command line, capture stdout, return exit status via `status`.
std::string run_command(const std::string& cmd, int& status) {
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return output;
  }
  char buffer[4096];
  while (std::fgets(buffer, sizeof buffer, pipe) != nullptr) output += buffer;
  status = pclose(pipe);
  return output;
}

void criterion_group_orders() {
  auto start = std::chrono::steady_clock::now();
  using gs::mat::GroupKind;
  using gs::mat::group_order;
  bool pass = group_order(GroupKind::PSL2, 9) == 360 &&
              group_order(GroupKind::PSL2, 49) == 58800 &&
              group_order(GroupKind::PSL2, 3) == 12 &&
              group_order(GroupKind::PSL2, 7) == 168 &&
              group_order(GroupKind::BorelOfQuadExt, 3) == 36 &&
              group_order(GroupKind::BorelOfQuadExt, 7) == 1176;
  double elapsed = seconds_since(start);
  pass = pass && elapsed < 0.001;
  report(1, "golden group orders 360/58800/12/168/36/1176", pass,
         "elapsed " + std::to_string(elapsed) + " s, budget 0.001 s");
}

void criterion_cli_covers(const std::string& cli) {
  int status = 0;
  std::string covers_out =
      run_command(cli + " covers --d -1 --p 3 --format json", status);
  bool pass = status == 0;
  std::string detail;
  try {
    json rec = json::parse(covers_out);
    pass = pass && rec.at("result").at("degree_C").get<std::uint64_t>() == 72 &&
           rec.at("result").at("degree_1").get<std::uint64_t>() == 360;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  std::string iso_out =
      run_command(cli + " isogenus --d -1 --p1 3 --p2 7 --format json", status);
  pass = pass && status == 0;
  try {
    json rec = json::parse(iso_out);
    pass = pass && rec.at("result").at("ell").get<std::uint64_t>() == 5 &&
           rec.at("result").at("degree").get<std::uint64_t>() == 4233600;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(2, "CLI cover degrees (72, 360) and isogenus degree 4233600 at ell 5",
         pass, detail);
}

void criterion_exact_orders() {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  int cases = 0;
  for (auto [p, k] :
       {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    auto field = gs::ff::make_field(p, k);
    std::uint64_t q = field->order;
    for (std::uint64_t side : {q - 1, q + 1}) {
      for (std::uint64_t m = 1; m <= side; ++m) {
        if (side % m != 0) continue;
        ++cases;
        auto g = gs::mat::element_of_order(field, m);
        pass = pass && g.det().is_one() && gs::mat::element_order(g) == m;
      }
    }
  }
  double elapsed = seconds_since(start);
  pass = pass && elapsed < 1.0;
  report(3, "exact element orders for every divisor of q-1 and q+1, q <= 13",
         pass, std::to_string(cases) + " cases, elapsed " +
                   std::to_string(elapsed) + " s, budget 1 s");
}

void criterion_exhaustive_avoidance() {
  auto start = std::chrono::steady_clock::now();
  auto rep = gs::spectrum::verify_fuchsian_pair(3, 5);
  double elapsed = seconds_since(start);
  bool pass = rep.pass && rep.order_ell_count > 0 &&
              rep.psl2_sub_violations == 0 && rep.borel_violations == 0 &&
              elapsed < 10.0;
  report(4, "exhaustive avoidance in the 360-element group at ell 5", pass,
         std::to_string(rep.order_ell_count) + " order-5 elements, elapsed " +
             std::to_string(elapsed) + " s, budget 10 s");
}

void criterion_div_sweep() {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  int checked = 0;
  for (std::uint64_t q = 3; q <= 1000; q += 2) {
    auto factors = gs::nt::factorize(q);
    bool prime_power = true;
    for (std::uint64_t f : factors) prime_power &= f == factors[0];
    if (!prime_power) continue;
    for (std::uint64_t pp : {3ull, 5ull, 7ull, 11ull, 13ull}) {
      try {
        auto props = gs::nonarith::div_properties(q, pp);
        ++checked;
        pass = pass && props.all();
      } catch (const std::overflow_error&) {
        continue;  // q^p' >= 2^63 is out of scope by construction
      }
    }
  }
  double elapsed = seconds_since(start);
  pass = pass && elapsed < 30.0;
  report(5, "gcd identity sweep, odd prime powers q <= 1000, odd p' <= 13",
         pass, std::to_string(checked) + " pairs, elapsed " +
                   std::to_string(elapsed) + " s, budget 30 s");
}

void criterion_zsigmondy() {
  bool pass = true;
  for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull}) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      auto z = gs::nonarith::zsigmondy(q, n);
      if (z.exception) continue;
      std::uint64_t qn = 1;
      for (std::uint64_t i = 0; i < n; ++i) qn *= q;
      // Re-verify against the full factorization of q^n - 1 ...
      auto primes = gs::nt::prime_divisors(qn - 1);
      pass = pass && std::find(primes.begin(), primes.end(), z.prime) !=
                         primes.end();
      // ... and primitivity against every smaller q^k - 1.
      std::uint64_t qk = 1;
      for (std::uint64_t k = 1; k < n; ++k) {
        qk *= q;
        pass = pass && (qk - 1) % z.prime != 0;
      }
    }
  }
  pass = pass && gs::nonarith::zsigmondy(3, 2).exception &&
         gs::nonarith::zsigmondy(2, 6).exception;
  report(6, "primitive prime divisors re-verified, exceptions flagged", pass);
}

void criterion_common_ell_density() {
  gs::nt::QuadField gauss(-1);
  auto result = gs::pairs::common_ell_search(gauss, 1, 100000);
  bool pass = result.ell == 5;

  // Independent oracle: sieve primes to 10^5, keep the inert ones with a
  // direct divisibility test 5 | p^2 + 1, and compare as exact sets.
  std::vector<std::uint64_t> oracle;
  std::uint64_t total_primes = 0;
  for (std::uint64_t p = 2; p <= 100000; ++p) {
    if (!gs::nt::is_prime(p)) continue;
    ++total_primes;
    if ((p * p + 1) % 5 == 0 && p % 4 == 3) oracle.push_back(p);
  }
  pass = pass && result.matched_primes == oracle;
  for (std::uint64_t p : oracle) {
    pass = pass && (p % 20 == 3 || p % 20 == 7);
  }

  // The two matched classes 3, 7 mod 20 carry density 2/phi(20) = 1/4,
  // the 1/(ell - 1) lower bound; check the empirical count within 0.02.
  double density =
      static_cast<double>(oracle.size()) / static_cast<double>(total_primes);
  pass = pass && std::abs(density - 0.25) <= 0.02;
  pass = pass && result.matched_density() >= 0.25 - 0.02;
  report(7, "shared ell 5 with matched primes 3, 7 mod 20 and density 1/4",
         pass, std::to_string(oracle.size()) + " matched, density " +
                   std::to_string(density) + ", tolerance 0.02");
}

void criterion_exponent_growth() {
  gs::nt::QuadField gauss(-1);
  auto scan = gs::pairs::exponent_scan(gauss, 5, 320);
  auto expect = [&](std::uint64_t p, int alpha) {
    for (auto [pp, aa] : scan) {
      if (pp == p) return aa == alpha;
    }
    return false;
  };
  bool pass = expect(3, 1) && expect(7, 2) && expect(307, 3);
  // Re-verify the pinned exponents against full factorizations of p^2 + 1.
  for (auto [p, alpha] : std::vector<std::pair<std::uint64_t, int>>{
           {3, 1}, {7, 2}, {307, 3}}) {
    auto factors = gs::nt::factorize(p * p + 1);
    int count = static_cast<int>(std::count(factors.begin(), factors.end(),
                                            std::uint64_t{5}));
    pass = pass && count == alpha;
  }
  report(8, "exponent growth: places with 5-exponents 1, 2, 3 below 320", pass);
}

void criterion_cancellation() {
  std::srand(97);
  bool pass = true;
  int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    gs::spectrum::SpectrumMultiset s1, s2;
    for (int label = 0; label < 5; ++label) {
      std::uint64_t m = static_cast<std::uint64_t>(std::rand()) % 3;
      if (m > 0) s1.emplace("g" + std::to_string(label), m);
      m = static_cast<std::uint64_t>(std::rand()) % 3;
      if (m > 0) s2.emplace("g" + std::to_string(label), m);
    }
    std::uint64_t ell = 3 + 2 * (static_cast<std::uint64_t>(std::rand()) % 20);
    bool scaled = gs::spectrum::scale_spectrum(s1, ell) ==
                  gs::spectrum::scale_spectrum(s2, ell);
    pass = pass && scaled == (s1 == s2);
  }
  report(9, "scale-equality of multiplicity tables iff plain equality", pass,
         std::to_string(trials) + " random pairs");
}

void criterion_field_separation() {
  bool pass = true;
  std::vector<std::int64_t> ds;
  for (std::int64_t d = -1; d >= -50; --d) {
    try {
      gs::nt::QuadField f(d);
      ds.push_back(d);
    } catch (const std::invalid_argument&) {
      continue;  // not squarefree
    }
  }
  int pairs = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    gs::nt::QuadField fi(ds[i]);
    pass = pass && gs::spectrum::splitting_compare(fi, fi, 100).empty();
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      gs::nt::QuadField fj(ds[j]);
      auto diff = gs::spectrum::splitting_compare(fi, fj, 100);
      ++pairs;
      pass = pass && !diff.empty() && diff.front() < 100;
    }
  }
  report(10, "every distinct field pair |d| <= 50 separated by a prime < 100",
         pass, std::to_string(pairs) + " pairs");
}

void criterion_hilbert() {
  bool pass = true;
  for (std::int64_t a = -50; a <= 50; ++a) {
    if (a == 0) continue;
    for (std::int64_t b = -50; b <= 50; ++b) {
      if (b == 0) continue;
      int product = gs::nt::hilbert_symbol(a, b, gs::nt::place_infinity) *
                    gs::nt::hilbert_symbol(a, b, 2);
      for (std::uint64_t p : gs::nt::prime_divisors(
               static_cast<std::uint64_t>(std::abs(a)) *
               static_cast<std::uint64_t>(std::abs(b)))) {
        if (p > 2) product *= gs::nt::hilbert_symbol(a, b, p);
      }
      pass = pass && product == 1;
    }
  }
  auto ram = gs::nt::quaternion_ram_set(-1, 3);
  pass = pass && ram.finite_primes == std::vector<std::uint64_t>{2, 3} &&
         !ram.at_infinity;
  report(11, "Hilbert product formula for all |a|,|b| <= 50; ram(-1,3)={2,3}",
         pass);
}

void criterion_picard() {
  bool pass = true;
  for (std::uint64_t D = 1; D <= 100; ++D) {
    auto c = gs::spectrum::picard_classes(D);
    switch (D % 4) {
      case 0:
      case 3:
        pass = pass && c.count == 1 && !c.index.has_value();
        break;
      case 2:
        pass = pass && c.count == 2 &&
               c.index == ((D % 8 == 2) ? 2 : 6);
        break;
      case 1:
        pass = pass && c.count == 3 && c.index == 3;
        break;
    }
  }
  report(12, "conjugacy-class catalog matches the mod-4/mod-8 rules, D <= 100",
         pass);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }
  if (cli.empty()) {
    std::cerr << "usage: acceptance --cli <path-to-gstool>" << std::endl;
    return 64;
  }

  criterion_group_orders();
  criterion_cli_covers(cli);
  criterion_exact_orders();
  criterion_exhaustive_avoidance();
  criterion_div_sweep();
  criterion_zsigmondy();
  criterion_common_ell_density();
  criterion_exponent_growth();
  criterion_cancellation();
  criterion_field_separation();
  criterion_hilbert();
  criterion_picard();

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures;
}
