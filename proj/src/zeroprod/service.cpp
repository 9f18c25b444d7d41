#include "zeroprod/service.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "zeroprod/error.hpp"
#include "zeroprod/modmath.hpp"
#include "zeroprod/parallel.hpp"

namespace zeroprod::service {
namespace {

using Json = nlohmann::ordered_json;
using Rows = std::vector<std::vector<std::string>>;

std::string aligned(const Rows& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line.append(widths[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string csv(const Rows& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string decimal_or_empty(const Rational& r, unsigned digits) {
  return digits == 0 ? std::string() : r.to_decimal(digits);
}

// "5/18 (0.277778)" or just "5/18" when digits == 0
std::string with_decimal(const Rational& r, unsigned digits) {
  return digits == 0 ? r.to_string() : r.to_string() + " (" + r.to_decimal(digits) + ")";
}

std::string opt_text(const std::optional<Natural>& v) { return v ? v->to_string() : "-"; }

Json opt_json(const std::optional<Natural>& v) {
  return v ? Json(v->to_string()) : Json(nullptr);
}

std::string scientific(double value, unsigned digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", static_cast<int>(std::max(digits, 1u)), value);
  return buf;
}

Rational closed_form_of(const ring::RingSpec& spec) {
  if (spec.is_zn()) return formulas::p_zn(Natural(spec.modulus()));
  std::vector<Rational> parts;
  for (const auto& f : spec.factors()) parts.push_back(closed_form_of(f));
  return formulas::p_product(parts);
}

}  // namespace

const char* path_name(ProbPath path) noexcept {
  switch (path) {
    case ProbPath::ClosedForm: return "closed-form";
    case ProbPath::Product: return "product";
  }
  return "unknown";
}

ProbResult compute_prob(const ring::RingSpec& spec, const ring::Limits& limits, bool paranoid) {
  ProbResult r{spec, closed_form_of(spec), spec.is_zn() ? ProbPath::ClosedForm : ProbPath::Product,
               false};
  if (paranoid) {
    const Rational brute = ring::prob_brute(spec, limits);
    if (brute != r.value) {
      fail(ErrorKind::VerificationFailure, "closed form " + r.value.to_string() +
                                               " disagrees with brute force " + brute.to_string() +
                                               " for " + spec.to_string());
    }
    r.brute_checked = true;
  }
  return r;
}

std::string render_prob(const ProbResult& r, Format format, unsigned digits) {
  const std::string check = r.brute_checked ? "brute-force agrees" : "none";
  switch (format) {
    case Format::Json: {
      Json j;
      j["ring"] = r.spec.to_string();
      j["p"] = r.value.to_string();
      if (digits > 0) j["decimal"] = r.value.to_decimal(digits);
      j["path"] = path_name(r.path);
      j["brute_checked"] = r.brute_checked;
      return json_text(j);
    }
    case Format::Csv:
      return csv({{"ring", "p", "decimal", "path", "brute_checked"},
                  {r.spec.to_string(), r.value.to_string(), decimal_or_empty(r.value, digits),
                   path_name(r.path), r.brute_checked ? "true" : "false"}});
    case Format::Table:
      break;
  }
  Rows rows{{"ring", r.spec.to_string()}, {"P", r.value.to_string()}};
  if (digits > 0) rows.push_back({"decimal", r.value.to_decimal(digits)});
  rows.push_back({"path", path_name(r.path)});
  rows.push_back({"check", check});
  return aligned(rows);
}

std::string render_bounds(const ring::RingSpec& spec, const formulas::BoundsReport& b,
                          Format format, unsigned digits) {
  const std::vector<std::pair<const char*, const Rational*>> values = {
      {"lower", &b.lower},
      {"exact", &b.exact},
      {"upper", &b.upper},
      {"refined_cap", &b.refined_cap},
      {"global_cap", &b.global_cap}};
  switch (format) {
    case Format::Json: {
      Json j;
      j["ring"] = spec.to_string();
      j["order"] = b.order.to_string();
      j["zcount"] = b.zcount.to_string();
      j["maxann"] = opt_json(b.maxann);
      for (const auto& [name, value] : values) j[name] = value->to_string();
      j["all_hold"] = b.all_hold;
      if (digits > 0) {
        Json d;
        for (const auto& [name, value] : values) d[name] = value->to_decimal(digits);
        j["decimal"] = d;
      }
      return json_text(j);
    }
    case Format::Csv: {
      Rows rows{{"ring", "order", "zcount", "maxann"}, {spec.to_string(), b.order.to_string(),
                                                         b.zcount.to_string(), opt_text(b.maxann)}};
      for (const auto& [name, value] : values) {
        rows[0].push_back(name);
        rows[1].push_back(value->to_string());
      }
      rows[0].push_back("all_hold");
      rows[1].push_back(b.all_hold ? "true" : "false");
      return csv(rows);
    }
    case Format::Table:
      break;
  }
  Rows rows{{"ring", spec.to_string()},
            {"order", b.order.to_string()},
            {"zcount", b.zcount.to_string()},
            {"maxann", opt_text(b.maxann)}};
  for (const auto& [name, value] : values) rows.push_back({name, with_decimal(*value, digits)});
  rows.push_back({"all_hold", b.all_hold ? "true" : "false"});
  return aligned(rows);
}

bool ScanResult::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.bounds_hold; });
}

ScanRow scan_row(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::ExcludedRing, "Z_" + std::to_string(n) + " is excluded");
  ScanRow row;
  row.n = n;
  row.factorization = factor::factorize(n);
  row.exact = formulas::p_zn_from_factorization(row.factorization);
  row.zcount = formulas::zero_divisor_count_zn(row.factorization);
  row.maxann = formulas::max_ann_size_zn(row.factorization);
  const auto report = formulas::make_bounds_report(Natural(n), row.zcount, row.maxann, row.exact);
  row.lower = report.lower;
  row.upper = report.upper;
  row.bounds_hold = report.all_hold;
  return row;
}

ScanResult scan(std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
  if (lo < 2 || lo > hi) {
    fail(ErrorKind::InvalidInput, "scan range must satisfy 2 <= lo <= hi, got " +
                                      std::to_string(lo) + ".." + std::to_string(hi));
  }
  const std::uint64_t count = hi - lo + 1;
  if (count == 0 || count > (std::uint64_t{1} << 32)) {
    fail(ErrorKind::ResourceLimit, "scan range is too long");
  }
  ScanResult result;
  result.rows.resize(count);
  detail::for_each_chunk(count, jobs, [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) result.rows[i] = scan_row(lo + i);
  });
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    if (result.rows[i].exact < result.rows[result.min_index].exact) result.min_index = i;
    if (result.rows[i].exact > result.rows[result.max_index].exact) result.max_index = i;
  }
  return result;
}

std::string render_scan(const ScanResult& s, Format format, unsigned digits) {
  const auto& lo = s.rows[s.min_index];
  const auto& hi = s.rows[s.max_index];
  switch (format) {
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& r : s.rows) {
        Json j;
        j["n"] = r.n;
        j["factorization"] = r.factorization.to_text();
        j["p"] = r.exact.to_string();
        if (digits > 0) j["decimal"] = r.exact.to_decimal(digits);
        j["lower"] = r.lower.to_string();
        j["upper"] = r.upper.to_string();
        j["zcount"] = r.zcount.to_string();
        j["maxann"] = opt_json(r.maxann);
        j["bounds_hold"] = r.bounds_hold;
        rows.push_back(std::move(j));
      }
      Json out;
      out["rows"] = std::move(rows);
      out["summary"] = {{"min", {{"n", lo.n}, {"p", lo.exact.to_string()}}},
                        {"max", {{"n", hi.n}, {"p", hi.exact.to_string()}}},
                        {"all_hold", s.all_hold()}};
      return json_text(out);
    }
    case Format::Csv:
    case Format::Table:
      break;
  }
  Rows rows{{"n", "factorization", "p", "decimal", "lower", "upper", "zcount", "maxann",
             "bounds_hold"}};
  for (const auto& r : s.rows) {
    rows.push_back({std::to_string(r.n), r.factorization.to_text(), r.exact.to_string(),
                    decimal_or_empty(r.exact, digits), r.lower.to_string(), r.upper.to_string(),
                    r.zcount.to_string(), opt_text(r.maxann), r.bounds_hold ? "true" : "false"});
  }
  if (format == Format::Csv) return csv(rows);
  return aligned(rows) + "min P = " + with_decimal(lo.exact, digits) + " at n=" +
         std::to_string(lo.n) + "; max P = " + with_decimal(hi.exact, digits) + " at n=" +
         std::to_string(hi.n) + "; bounds " + (s.all_hold() ? "hold" : "VIOLATED") + "\n";
}

VerifyReport verify(const VerifyOptions& options) {
  if (options.max_n < 2) fail(ErrorKind::InvalidInput, "verify needs max >= 2");
  if (options.max_n > options.limits.single_cap) {
    fail(ErrorKind::ResourceLimit, "verify --max " + std::to_string(options.max_n) +
                                       " exceeds the enumeration cap " +
                                       std::to_string(options.limits.single_cap));
  }
  const std::uint64_t count = options.max_n - 1;
  ring::Limits inner = options.limits;
  inner.jobs = 1;  // parallelism is over n

  struct Outcome {
    std::uint64_t checks = 0;
    std::vector<VerifyFailure> failures;
  };
  std::vector<Outcome> outcomes(count);

  detail::for_each_chunk(count, options.limits.jobs, [&](std::uint64_t, std::uint64_t begin,
                                                         std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t n = i + 2;
      Outcome& out = outcomes[i];
      auto check = [&](const char* name, bool ok, const std::string& detail) {
        ++out.checks;
        if (!ok) out.failures.push_back({n, name, detail});
      };
      const Natural nn(n);
      const auto spec = ring::RingSpec::zn(n);
      const auto f = factor::factorize(n);
      const Rational closed =
          options.closed_form ? options.closed_form(n) : formulas::p_zn_from_factorization(f);
      const Rational pillai = Rational::make(ring::gcd_sum(n), nn * nn);
      check("closed-form vs gcd-sum", closed == pillai,
            "closed form " + closed.to_string() + ", gcd-sum " + pillai.to_string());

      const bool pairwise = n <= options.pairwise_limit && n <= inner.pair_cap;
      if (pairwise) {
        const Rational brute = ring::prob_brute(spec, inner);
        check("closed-form vs brute-force", closed == brute,
              "closed form " + closed.to_string() + ", brute force " + brute.to_string());
      }

      const auto profile = ring::ann_profile(spec, inner);
      const auto report = formulas::bounds_report(spec, inner);
      check("bounds chain", report.all_hold && report.upper <= report.refined_cap,
            "lower " + report.lower.to_string() + ", exact " + report.exact.to_string() +
                ", upper " + report.upper.to_string() + ", refined cap " +
                report.refined_cap.to_string());
      check("measured vs closed-form", report.exact == closed,
            "measured " + report.exact.to_string() + ", closed form " + closed.to_string());
      check("three-quarters only at n=2", (report.exact == formulas::global_cap()) == (n == 2),
            "exact " + report.exact.to_string());

      bool facts = profile.zero.size() == 1 && profile.zero.begin()->first == nn &&
                   profile.zero.begin()->second == Natural(1) && profile.element_count() == nn &&
                   report.zcount + Natural(2) <= nn;
      for (const auto& [size, c] : profile.zero_divisors) facts = facts && size >= Natural(2);
      for (const auto& [size, c] : profile.rest) facts = facts && size == Natural(1);
      if (report.maxann) facts = facts && Natural(2) * *report.maxann <= nn;
      check("annihilator facts", facts, "zcount " + report.zcount.to_string());

      check("zero-divisor closed forms",
            formulas::zero_divisor_count_zn(f) == report.zcount &&
                formulas::max_ann_size_zn(f) == report.maxann,
            "measured zcount " + report.zcount.to_string() + ", maxann " + opt_text(report.maxann));

      if (f.size() == 1) {
        const auto& pp = f.powers().front();
        const auto expected = formulas::ann_profile_zpk(Natural(pp.prime), pp.exponent);
        check("prime-power profile", expected == profile, "n = " + f.to_text());
      }

      if (pairwise) {
        const auto g = zdgraph::build_graph(spec, inner);
        Natural lhs = 0;
        for (const auto& s : g.ann_sizes) lhs += s - Natural(1);
        const Natural rhs = Natural(2 * g.edges.size() + g.self_annihilators.size());
        check("handshake identity", lhs == rhs,
              "sum |Ann(x)|-1 = " + lhs.to_string() + ", 2E + S = " + rhs.to_string());
      }
    }
  });

  VerifyReport report;
  report.rings_checked = count;
  for (auto& o : outcomes) {
    report.checks_run += o.checks;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

std::string render_verify(const VerifyReport& r, Format format) {
  switch (format) {
    case Format::Json: {
      Json failures = Json::array();
      for (const auto& f : r.failures) {
        failures.push_back({{"n", f.n}, {"check", f.check}, {"detail", f.detail}});
      }
      Json j;
      j["passed"] = r.passed();
      j["rings_checked"] = r.rings_checked;
      j["checks_run"] = r.checks_run;
      j["failures"] = std::move(failures);
      return json_text(j);
    }
    case Format::Csv: {
      Rows rows{{"n", "check", "detail"}};
      for (const auto& f : r.failures) rows.push_back({std::to_string(f.n), f.check, "\"" + f.detail + "\""});
      return csv(rows);
    }
    case Format::Table:
      break;
  }
  std::string out;
  for (const auto& f : r.failures) {
    out += "FAIL n=" + std::to_string(f.n) + " [" + f.check + "] " + f.detail + "\n";
  }
  out += std::string(r.passed() ? "PASS" : "FAIL") + ": " + std::to_string(r.rings_checked) +
         (r.rings_checked == 1 ? " ring" : " rings") + " checked, " +
         std::to_string(r.checks_run) + " checks, " + std::to_string(r.failures.size()) +
         " failures\n";
  return out;
}

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // 2^64 mod bound values at the bottom are rejected so every residue has
  // the same number of preimages
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

bool MonteCarloResult::within(std::uint64_t sigmas) const {
  // deviation^2 <= sigmas^2 * P (1 - P) / samples
  const Rational one_minus = abs_diff(Rational::integer(1), exact);
  const Rational bound = Rational::make(Natural(sigmas) * Natural(sigmas), Natural(samples)) *
                         exact * one_minus;
  return deviation * deviation <= bound;
}

MonteCarloResult montecarlo(std::uint64_t n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 2) fail(ErrorKind::ExcludedRing, "Z_" + std::to_string(n) + " is excluded");
  if (samples == 0) fail(ErrorKind::InvalidInput, "samples must be >= 1");
  SplitMix64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t x = rng.below(n);
    const std::uint64_t y = rng.below(n);
    if (detail::mul_mod(x, y, n) == 0) ++hits;
  }
  MonteCarloResult r;
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  r.hits = hits;
  r.estimate = Rational::make(hits, samples);
  r.exact = formulas::p_zn(Natural(n));
  r.deviation = abs_diff(r.estimate, r.exact);
  const double p = r.exact.to_double();
  r.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return r;
}

std::string render_montecarlo(const MonteCarloResult& r, Format format, unsigned digits) {
  const unsigned d = digits == 0 ? 6 : digits;
  switch (format) {
    case Format::Json: {
      Json j;
      j["n"] = r.n;
      j["samples"] = r.samples;
      j["seed"] = r.seed;
      j["hits"] = r.hits;
      j["estimate"] = r.estimate.to_decimal(d);
      j["exact"] = r.exact.to_string();
      j["exact_decimal"] = r.exact.to_decimal(d);
      j["deviation"] = r.deviation.to_decimal(d);
      j["std_error"] = scientific(r.std_error, d);
      j["within_3se"] = r.within(3);
      return json_text(j);
    }
    case Format::Csv:
      return csv({{"n", "samples", "seed", "hits", "estimate", "exact", "deviation", "std_error",
                   "within_3se"},
                  {std::to_string(r.n), std::to_string(r.samples), std::to_string(r.seed),
                   std::to_string(r.hits), r.estimate.to_decimal(d), r.exact.to_string(),
                   r.deviation.to_decimal(d), scientific(r.std_error, d),
                   r.within(3) ? "true" : "false"}});
    case Format::Table:
      break;
  }
  return aligned({{"ring", "Zn(" + std::to_string(r.n) + ")"},
                  {"samples", std::to_string(r.samples)},
                  {"seed", std::to_string(r.seed)},
                  {"hits", std::to_string(r.hits)},
                  {"estimate", r.estimate.to_decimal(d)},
                  {"exact", with_decimal(r.exact, d)},
                  {"deviation", r.deviation.to_decimal(d)},
                  {"std_error", scientific(r.std_error, d)},
                  {"within_3se", r.within(3) ? "true" : "false"}});
}

std::string render_graph_stats(const zdgraph::ZeroDivisorGraph& g, Format format) {
  const auto s = zdgraph::graph_stats(g);
  std::string degrees;
  for (std::size_t d : s.degrees) degrees += (degrees.empty() ? "" : " ") + std::to_string(d);
  switch (format) {
    case Format::Json: {
      Json j;
      j["ring"] = g.spec.to_string();
      j["vertices"] = s.vertices;
      j["edges"] = s.edges;
      j["degrees"] = s.degrees;
      j["self_annihilators"] = s.self_annihilators;
      return json_text(j);
    }
    case Format::Csv:
      return csv({{"ring", "vertices", "edges", "degrees", "self_annihilators"},
                  {g.spec.to_string(), std::to_string(s.vertices), std::to_string(s.edges),
                   degrees, std::to_string(s.self_annihilators)}});
    case Format::Table:
      break;
  }
  return aligned({{"ring", g.spec.to_string()},
                  {"vertices", std::to_string(s.vertices)},
                  {"edges", std::to_string(s.edges)},
                  {"degrees", degrees.empty() ? "-" : degrees},
                  {"self_annihilators", std::to_string(s.self_annihilators)}});
}

}  // namespace zeroprod::service
