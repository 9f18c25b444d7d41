#pragma once

// Batch and reporting layer behind the command-line subcommands: probability
// dispatch, range scans, the verification suite and Monte Carlo sampling,
// plus their table/json/csv renderings.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zeroprod/factor.hpp"
#include "zeroprod/formulas.hpp"
#include "zeroprod/rational.hpp"
#include "zeroprod/ring.hpp"
#include "zeroprod/zdgraph.hpp"

namespace zeroprod::service {

enum class Format { Table, Json, Csv };

enum class ProbPath { ClosedForm, Product };

const char* path_name(ProbPath path) noexcept;

struct ProbResult {
  ring::RingSpec spec;
  Rational value;
  ProbPath path = ProbPath::ClosedForm;
  bool brute_checked = false;
};

// Closed form for Z_n, multiplicativity for products. With paranoid set the
// value is recomputed by pairwise enumeration and a mismatch throws
// VerificationFailure.
ProbResult compute_prob(const ring::RingSpec& spec, const ring::Limits& limits, bool paranoid);
std::string render_prob(const ProbResult& r, Format format, unsigned digits);

std::string render_bounds(const ring::RingSpec& spec, const formulas::BoundsReport& report,
                          Format format, unsigned digits);

struct ScanRow {
  std::uint64_t n = 0;
  factor::Factorization factorization;
  Rational exact;
  Rational lower;
  Rational upper;
  Natural zcount;
  std::optional<Natural> maxann;
  bool bounds_hold = false;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::size_t min_index = 0;  // first row attaining the minimum P
  std::size_t max_index = 0;  // first row attaining the maximum P

  bool all_hold() const;
};

// Closed forms only, so the range is not limited by the enumeration caps.
// Throws InvalidInput unless 2 <= lo <= hi.
ScanRow scan_row(std::uint64_t n);
ScanResult scan(std::uint64_t lo, std::uint64_t hi, unsigned jobs);
std::string render_scan(const ScanResult& s, Format format, unsigned digits);

struct VerifyFailure {
  std::uint64_t n = 0;
  std::string check;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t max_n = 2;
  ring::Limits limits;
  // pairwise brute force and graph checks run for n up to this bound
  std::uint64_t pairwise_limit = 512;
  // replaces the closed-form P(Z_n); used to exercise the failure path
  std::function<Rational(std::uint64_t)> closed_form;
};

struct VerifyReport {
  std::uint64_t rings_checked = 0;
  std::uint64_t checks_run = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

VerifyReport verify(const VerifyOptions& options);
std::string render_verify(const VerifyReport& r, Format format);

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15 and a
// fixed xor-shift-multiply finaliser. Bit-identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept;
  // uniform on [0, bound) by rejection, bound >= 1
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct MonteCarloResult {
  std::uint64_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
  Rational estimate;
  Rational exact;
  Rational deviation;
  double std_error = 0.0;

  // |estimate - exact| <= sigmas * sqrt(P(1-P)/samples), decided exactly.
  bool within(std::uint64_t sigmas) const;
};

MonteCarloResult montecarlo(std::uint64_t n, std::uint64_t samples, std::uint64_t seed);
std::string render_montecarlo(const MonteCarloResult& r, Format format, unsigned digits);

std::string render_graph_stats(const zdgraph::ZeroDivisorGraph& g, Format format);

}  // namespace zeroprod::service
