// zeroprod command-line tool. Talks to the library exclusively through the
// C interface in zeroprod/zeroprod.h.

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zeroprod/zeroprod.h"

namespace {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kExcluded = 2,
  kResource = 3,
  kVerification = 4,
  kIo = 5,
  kInternal = 6,
};

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(zp_status s) {
  switch (s) {
    case ZP_OK: return kOk;
    case ZP_ERR_EXCLUDED_RING: return kExcluded;
    case ZP_ERR_RESOURCE_LIMIT: return kResource;
    case ZP_ERR_VERIFICATION: return kVerification;
    case ZP_ERR_IO: return kIo;
    case ZP_ERR_INTERNAL: return kInternal;
    case ZP_ERR_INVALID_ARGUMENT:
    case ZP_ERR_PARSE:
    case ZP_ERR_OUT_OF_RANGE:
    case ZP_ERR_ZERO_DENOMINATOR:
    case ZP_ERR_CONTRACT: return kUsage;
  }
  return kInternal;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <class T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using Context = Handle<zp_context, zp_context_free>;
using Ring = Handle<zp_ring, zp_ring_free>;
using Prob = Handle<zp_prob, zp_prob_free>;
using Bounds = Handle<zp_bounds, zp_bounds_free>;
using Graph = Handle<zp_graph, zp_graph_free>;
using Scan = Handle<zp_scan, zp_scan_free>;
using Verify = Handle<zp_verify, zp_verify_free>;
using MonteCarlo = Handle<zp_montecarlo, zp_montecarlo_free>;
using String = Handle<char, zp_string_free>;

void check(zp_context* ctx, zp_status s) {
  if (s != ZP_OK) throw CliError{exit_code_for(s), zp_context_last_error(ctx)};
}

// Calls fn(char**) and takes ownership of the returned library string.
template <class Fn>
std::string text(zp_context* ctx, Fn&& fn) {
  char* raw = nullptr;
  const zp_status s = fn(&raw);
  String owned(raw);
  check(ctx, s);
  return std::string(owned.get());
}

template <class H, class Fn>
H make(zp_context* ctx, Fn&& fn) {
  typename H::pointer raw = nullptr;
  const zp_status s = fn(&raw);
  H owned(raw);
  check(ctx, s);
  return owned;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw CliError{kUsage, std::string(what) + " must be a nonnegative integer, got '" + text + "'"};
  }
  errno = 0;
  const unsigned long long v = std::strtoull(text.c_str(), nullptr, 10);
  if (errno == ERANGE) {
    throw CliError{kUsage, std::string(what) + " " + text + " exceeds the supported 64-bit range"};
  }
  return v;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !(out.flush())) {
    throw CliError{kIo, "cannot write " + path};
  }
}

struct Options {
  std::string format = "table";
  unsigned digits = 6;
  std::string cap;
  unsigned jobs = 1;

  zp_format zformat() const {
    if (format == "json") return ZP_FORMAT_JSON;
    if (format == "csv") return ZP_FORMAT_CSV;
    return ZP_FORMAT_TABLE;
  }
};

// Ring from either a positional integer or --ring.
Ring resolve_ring(zp_context* ctx, const std::string& integer, const std::string& ring_text) {
  if (!ring_text.empty() && !integer.empty()) {
    throw CliError{kUsage, "give either an integer n or --ring, not both"};
  }
  if (!ring_text.empty()) {
    return make<Ring>(ctx, [&](zp_ring** out) { return zp_ring_parse(ctx, ring_text.c_str(), out); });
  }
  if (integer.empty()) throw CliError{kUsage, "missing ring: give an integer n or --ring"};
  const std::uint64_t n = parse_u64(integer, "n");
  return make<Ring>(ctx, [&](zp_ring** out) { return zp_ring_zn(ctx, n, out); });
}

int run(int argc, char** argv) {
  CLI::App app{"Exact zero-product probabilities of finite commutative rings"};
  app.set_version_flag("--version", zp_version());
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--digits", opt.digits, "Fractional digits in decimal renderings (0 hides them)");
  app.add_option("--cap", opt.cap,
                 "Enumeration caps as <single> or <single>:<pair> (env ZEROPROD_CAP)");
  app.add_option("--jobs", opt.jobs, "Worker threads; never changes output")
      ->check(CLI::PositiveNumber);

  std::string integer, ring_text;
  bool paranoid = false;
  auto* prob = app.add_subcommand("prob", "Exact P(R) via closed forms");
  prob->add_option("n", integer, "Modulus n for Z_n");
  prob->add_option("--ring", ring_text, "Ring spec, e.g. Zn(4)xZn(9)");
  prob->add_flag("--paranoid", paranoid, "Also enumerate R x R and require agreement");

  auto* bounds = app.add_subcommand("bounds", "Measured bound report");
  bounds->add_option("n", integer, "Modulus n for Z_n");
  bounds->add_option("--ring", ring_text, "Ring spec");

  std::string lo_text, hi_text;
  auto* scan = app.add_subcommand("scan", "Closed-form rows for Z_n, lo <= n <= hi");
  scan->add_option("lo", lo_text)->required();
  scan->add_option("hi", hi_text)->required();

  std::string max_text;
  auto* verify = app.add_subcommand("verify", "Run the oracle and invariant suite");
  verify->add_option("--max", max_text, "Largest n to check")->required();

  std::string samples_text = "1000000";
  std::optional<std::string> seed_text;
  auto* mc = app.add_subcommand("montecarlo", "Sample ordered pairs from Z_n");
  mc->add_option("n", integer)->required();
  mc->add_option("--samples", samples_text, "Number of sampled pairs");
  mc->add_option("--seed", seed_text, "SplitMix64 seed");

  std::string dot_path, csv_prefix;
  auto* graph = app.add_subcommand("graph", "Zero-divisor graph export");
  graph->add_option("n", integer, "Modulus n for Z_n");
  graph->add_option("--ring", ring_text, "Ring spec");
  graph->add_option("--dot", dot_path, "Write DOT here instead of standard output");
  graph->add_option("--csv", csv_prefix,
                    "Write <prefix>.edges.csv and <prefix>.vertices.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  zp_context* raw_ctx = nullptr;
  if (zp_context_new(&raw_ctx) != ZP_OK) throw CliError{kInternal, "cannot create context"};
  Context ctx(raw_ctx);
  zp_context* c = ctx.get();
  if (const char* env = std::getenv("ZEROPROD_CAP"); env != nullptr && *env != '\0') {
    check(c, zp_context_set_caps_text(c, env));
  }
  if (!opt.cap.empty()) check(c, zp_context_set_caps_text(c, opt.cap.c_str()));
  check(c, zp_context_set_jobs(c, opt.jobs));
  const zp_format fmt = opt.zformat();

  if (*prob) {
    Ring ring = resolve_ring(c, integer, ring_text);
    Prob p = make<Prob>(c, [&](zp_prob** out) { return zp_prob_compute(c, ring.get(), paranoid, out); });
    std::cout << text(c, [&](char** out) { return zp_prob_render(c, p.get(), fmt, opt.digits, out); });
    return kOk;
  }

  if (*bounds) {
    Ring ring = resolve_ring(c, integer, ring_text);
    Bounds b = make<Bounds>(c, [&](zp_bounds** out) { return zp_bounds_compute(c, ring.get(), out); });
    std::cout << text(c, [&](char** out) { return zp_bounds_render(c, b.get(), fmt, opt.digits, out); });
    if (!zp_bounds_all_hold(b.get())) {
      std::cerr << "error: bound chain violated\n";
      return kVerification;
    }
    return kOk;
  }

  if (*scan) {
    const std::uint64_t lo = parse_u64(lo_text, "lo");
    const std::uint64_t hi = parse_u64(hi_text, "hi");
    if (lo < 2 || lo > hi) {
      throw CliError{kUsage, "scan needs 2 <= lo <= hi, got " + lo_text + " " + hi_text};
    }
    Scan sc = make<Scan>(c, [&](zp_scan** out) { return zp_scan_run(c, lo, hi, out); });
    std::cout << text(c, [&](char** out) { return zp_scan_render(c, sc.get(), fmt, opt.digits, out); });
    return zp_scan_all_hold(sc.get()) ? kOk : kVerification;
  }

  if (*verify) {
    const std::uint64_t max_n = parse_u64(max_text, "--max");
    Verify v = make<Verify>(c, [&](zp_verify** out) { return zp_verify_run(c, max_n, out); });
    std::cout << text(c, [&](char** out) { return zp_verify_render(c, v.get(), fmt, out); });
    return zp_verify_passed(v.get()) ? kOk : kVerification;
  }

  if (*mc) {
    const std::uint64_t n = parse_u64(integer, "n");
    const std::uint64_t samples = parse_u64(samples_text, "--samples");
    const std::uint64_t seed =
        seed_text ? parse_u64(*seed_text, "--seed") : zp_montecarlo_default_seed();
    MonteCarlo m = make<MonteCarlo>(
        c, [&](zp_montecarlo** out) { return zp_montecarlo_run(c, n, samples, seed, out); });
    std::cout << text(c, [&](char** out) { return zp_montecarlo_render(c, m.get(), fmt, opt.digits, out); });
    return kOk;
  }

  if (*graph) {
    Ring ring = resolve_ring(c, integer, ring_text);
    Graph g = make<Graph>(c, [&](zp_graph** out) { return zp_graph_build(c, ring.get(), out); });
    const std::string dot = text(c, [&](char** out) { return zp_graph_dot(c, g.get(), out); });
    const std::string stats = text(c, [&](char** out) { return zp_graph_render_stats(c, g.get(), fmt, out); });
    if (!csv_prefix.empty()) {
      write_file(csv_prefix + ".edges.csv", text(c, [&](char** out) { return zp_graph_edges_csv(c, g.get(), out); }));
      write_file(csv_prefix + ".vertices.csv", text(c, [&](char** out) { return zp_graph_vertices_csv(c, g.get(), out); }));
    }
    if (dot_path.empty()) {
      // keep standard output a valid DOT document
      std::cout << dot;
      std::cerr << stats;
    } else {
      write_file(dot_path, dot);
      std::cout << stats;
    }
    return kOk;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
