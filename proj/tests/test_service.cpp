#include <doctest.h>

#include "zeroprod/error.hpp"
#include "zeroprod/service.hpp"

using namespace zeroprod;
using namespace zeroprod::service;
using ring::RingSpec;

namespace {

Rational q(std::uint64_t n, std::uint64_t d) { return Rational::make(n, d); }

}  // namespace

TEST_CASE("compute_prob dispatch") {
  const auto r12 = compute_prob(RingSpec::zn(12), {}, false);
  CHECK(r12.value == q(5, 18));
  CHECK(r12.path == ProbPath::ClosedForm);
  const auto r23 = compute_prob(RingSpec::parse("Zn(2)xZn(3)"), {}, true);
  CHECK(r23.value == q(5, 12));
  CHECK(r23.path == ProbPath::Product);
  CHECK(r23.brute_checked);
  // paranoid beyond the pairwise cap is refused rather than run unbounded
  CHECK_THROWS_AS(compute_prob(RingSpec::zn(5000), {}, true), Error);
}

TEST_CASE("render_prob") {
  const auto r = compute_prob(RingSpec::zn(12), {}, false);
  CHECK(render_prob(r, Format::Table, 6) ==
        "ring     Zn(12)\n"
        "P        5/18\n"
        "decimal  0.277778\n"
        "path     closed-form\n"
        "check    none\n");
  CHECK(render_prob(r, Format::Csv, 6) ==
        "ring,p,decimal,path,brute_checked\nZn(12),5/18,0.277778,closed-form,false\n");
  CHECK(render_prob(r, Format::Json, 3).find("\"p\": \"5/18\"") != std::string::npos);
}

TEST_CASE("render_bounds") {
  const auto spec = RingSpec::zn(8);
  const auto b = formulas::bounds_report(spec);
  const std::string table = render_bounds(spec, b, Format::Table, 6);
  CHECK(table.find("lower        9/32 (0.281250)") != std::string::npos);
  CHECK(table.find("exact        5/16 (0.312500)") != std::string::npos);
  CHECK(table.find("upper        3/8 (0.375000)") != std::string::npos);
  CHECK(table.find("all_hold     true") != std::string::npos);
  const std::string json = render_bounds(spec, b, Format::Json, 0);
  CHECK(json.find("\"maxann\": \"4\"") != std::string::npos);
  CHECK(json.find("decimal") == std::string::npos);
  CHECK(render_bounds(spec, b, Format::Csv, 6) ==
        "ring,order,zcount,maxann,lower,exact,upper,refined_cap,global_cap,all_hold\n"
        "Zn(8),8,3,4,9/32,5/16,3/8,33/64,3/4,true\n");
}

TEST_CASE("scan rows") {
  const auto s = scan(2, 4, 1);
  REQUIRE(s.rows.size() == 3);
  CHECK(s.rows[0].exact == q(3, 4));
  CHECK(s.rows[1].exact == q(5, 9));
  CHECK(s.rows[2].exact == q(1, 2));
  CHECK(s.rows[s.max_index].n == 2);
  CHECK(s.rows[s.min_index].n == 4);
  CHECK(s.all_hold());

  const auto one = scan(2, 2, 1);
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[one.max_index].exact == q(3, 4));

  CHECK_THROWS_AS(scan(5, 3, 1), Error);
  CHECK_THROWS_AS(scan(1, 3, 1), Error);
}

TEST_CASE("scan agrees with measured bounds and is independent of jobs") {
  const auto seq = scan(2, 400, 1);
  const auto par = scan(2, 400, 3);
  CHECK(render_scan(seq, Format::Csv, 6) == render_scan(par, Format::Csv, 6));
  CHECK(render_scan(seq, Format::Json, 6) == render_scan(par, Format::Json, 6));
  for (const auto& row : seq.rows) {
    const auto b = formulas::bounds_report(RingSpec::zn(row.n));
    CHECK(row.exact == b.exact);
    CHECK(row.lower == b.lower);
    CHECK(row.upper == b.upper);
    CHECK(row.zcount == b.zcount);
    CHECK(row.maxann == b.maxann);
    CHECK(row.bounds_hold);
  }
}

TEST_CASE("scan handles n beyond the enumeration caps") {
  const std::uint64_t lo = 999999999980ULL;
  const auto s = scan(lo, lo + 20, 2);
  CHECK(s.rows.size() == 21);
  CHECK(s.all_hold());
  CHECK(s.rows[9].factorization.to_text() == "999999999989");
  CHECK(s.rows[9].exact == formulas::p_integral_domain(Natural(999999999989ULL)));
}

TEST_CASE("render_scan table") {
  const std::string t = render_scan(scan(2, 4, 1), Format::Table, 6);
  CHECK(t ==
        "n  factorization  p    decimal   lower  upper  zcount  maxann  bounds_hold\n"
        "2  2              3/4  0.750000  3/4    3/4    0       -       true\n"
        "3  3              5/9  0.555556  5/9    5/9    0       -       true\n"
        "4  2^2            1/2  0.500000  1/2    1/2    1       2       true\n"
        "min P = 1/2 (0.500000) at n=4; max P = 3/4 (0.750000) at n=2; bounds hold\n");
}

TEST_CASE("verify passes on correct code") {
  VerifyOptions opt;
  opt.max_n = 200;
  const auto r = verify(opt);
  CHECK(r.passed());
  CHECK(r.rings_checked == 199);

  opt.max_n = 2;
  const auto r2 = verify(opt);
  CHECK(r2.passed());
  CHECK(r2.rings_checked == 1);
  CHECK(render_verify(r2, Format::Table).find("PASS: 1 ring checked") != std::string::npos);
}

TEST_CASE("verify names the failing check for an injected fault") {
  VerifyOptions opt;
  opt.max_n = 30;
  opt.closed_form = [](std::uint64_t n) {
    const Rational right = formulas::p_zn(Natural(n));
    return n == 12 ? right * Rational::make(2, 3) : right;
  };
  const auto r = verify(opt);
  CHECK_FALSE(r.passed());
  REQUIRE(!r.failures.empty());
  for (const auto& f : r.failures) CHECK(f.n == 12);
  CHECK(r.failures[0].check == "closed-form vs gcd-sum");
  const std::string text = render_verify(r, Format::Table);
  CHECK(text.find("FAIL n=12 [closed-form vs gcd-sum] closed form 5/27, gcd-sum 5/18") !=
        std::string::npos);
}

TEST_CASE("verify result is independent of jobs") {
  VerifyOptions a, b;
  a.max_n = b.max_n = 150;
  b.limits.jobs = 4;
  CHECK(render_verify(verify(a), Format::Json) == render_verify(verify(b), Format::Json));
}

TEST_CASE("verify rejects bad ranges") {
  VerifyOptions opt;
  opt.max_n = 1;
  CHECK_THROWS_AS(verify(opt), Error);
  opt.max_n = 100;
  opt.limits.single_cap = 50;
  CHECK_THROWS_AS(verify(opt), Error);
}

TEST_CASE("SplitMix64 reference outputs") {
  // first outputs for seed 1234567 from the reference C implementation
  SplitMix64 g(1234567);
  CHECK(g.next() == 6457827717110365317ULL);
  CHECK(g.next() == 3203168211198807973ULL);
  CHECK(g.next() == 9817491932198370423ULL);
}

TEST_CASE("bounded draws stay in range and cover it") {
  SplitMix64 g(5);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = g.below(7);
    REQUIRE(v < 7);
    ++seen[v];
  }
  for (int c : seen) CHECK(c > 800);
  CHECK(g.below(1) == 0);
}

TEST_CASE("monte carlo") {
  const auto tiny = montecarlo(2, 4, 99);
  const std::vector<Rational> support = {q(0, 1), q(1, 4), q(1, 2), q(3, 4), q(1, 1)};
  CHECK(std::find(support.begin(), support.end(), tiny.estimate) != support.end());

  const auto a = montecarlo(100, 20000, 42);
  const auto b = montecarlo(100, 20000, 42);
  CHECK(a.hits == b.hits);
  CHECK(render_montecarlo(a, Format::Json, 6) == render_montecarlo(b, Format::Json, 6));
  CHECK(a.exact == q(13, 250));
  CHECK(a.within(4));

  CHECK_THROWS_AS(montecarlo(1, 10, 1), Error);
  CHECK_THROWS_AS(montecarlo(10, 0, 1), Error);
}

TEST_CASE("within() decides the sigma test exactly") {
  MonteCarloResult r;
  r.samples = 100;
  r.exact = q(1, 2);  // sigma = 1/20
  r.estimate = q(65, 100);
  r.deviation = abs_diff(r.estimate, r.exact);  // 3/20, exactly 3 sigma
  CHECK(r.within(3));
  CHECK_FALSE(r.within(2));
}
