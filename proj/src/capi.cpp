#include "zeroprod/zeroprod.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "zeroprod/error.hpp"
#include "zeroprod/factor.hpp"
#include "zeroprod/formulas.hpp"
#include "zeroprod/ring.hpp"
#include "zeroprod/service.hpp"
#include "zeroprod/zdgraph.hpp"

using namespace zeroprod;

struct zp_context {
  ring::Limits limits;
  std::string last_error;
};
struct zp_ring {
  ring::RingSpec spec;
};
struct zp_rational {
  Rational value;
};
struct zp_factorization {
  factor::Factorization value;
};
struct zp_prob {
  service::ProbResult value;
};
struct zp_bounds {
  ring::RingSpec spec;
  formulas::BoundsReport value;
};
struct zp_graph {
  zdgraph::ZeroDivisorGraph value;
  zdgraph::GraphStats stats;
};
struct zp_scan {
  service::ScanResult value;
};
struct zp_verify {
  service::VerifyReport value;
};
struct zp_montecarlo {
  service::MonteCarloResult value;
};

namespace {

zp_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return ZP_ERR_INVALID_ARGUMENT;
    case ErrorKind::ExcludedRing: return ZP_ERR_EXCLUDED_RING;
    case ErrorKind::ResourceLimit: return ZP_ERR_RESOURCE_LIMIT;
    case ErrorKind::ZeroDenominator: return ZP_ERR_ZERO_DENOMINATOR;
    case ErrorKind::Parse: return ZP_ERR_PARSE;
    case ErrorKind::OutOfRange: return ZP_ERR_OUT_OF_RANGE;
    case ErrorKind::ContractViolation: return ZP_ERR_CONTRACT;
    case ErrorKind::Io: return ZP_ERR_IO;
    case ErrorKind::VerificationFailure: return ZP_ERR_VERIFICATION;
  }
  return ZP_ERR_INTERNAL;
}

// Runs fn, translating exceptions into a status and recording the message.
template <class Fn>
zp_status guarded(zp_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return ZP_ERR_INVALID_ARGUMENT;
  try {
    ctx->last_error.clear();
    fn();
    return ZP_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return ZP_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return ZP_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) fail(ErrorKind::InvalidInput, std::string("null ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
zp_status emit_string(zp_context* ctx, char** out, Fn&& make) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    *out = dup(make());
  });
}

service::Format format_of(zp_format f) {
  switch (f) {
    case ZP_FORMAT_TABLE: return service::Format::Table;
    case ZP_FORMAT_JSON: return service::Format::Json;
    case ZP_FORMAT_CSV: return service::Format::Csv;
  }
  fail(ErrorKind::InvalidInput, "unknown output format");
}

std::uint64_t parse_cap(std::string_view text) {
  const std::uint64_t v = Natural::parse(text).to_u64_checked();
  if (v < 2) fail(ErrorKind::InvalidInput, "enumeration caps must be >= 2");
  return v;
}

}  // namespace

extern "C" {

const char* zp_version(void) { return "0.1.0"; }

const char* zp_status_name(zp_status status) {
  switch (status) {
    case ZP_OK: return "ok";
    case ZP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ZP_ERR_EXCLUDED_RING: return "excluded ring";
    case ZP_ERR_RESOURCE_LIMIT: return "resource limit";
    case ZP_ERR_VERIFICATION: return "verification failure";
    case ZP_ERR_IO: return "i/o error";
    case ZP_ERR_PARSE: return "parse error";
    case ZP_ERR_OUT_OF_RANGE: return "out of range";
    case ZP_ERR_ZERO_DENOMINATOR: return "zero denominator";
    case ZP_ERR_CONTRACT: return "contract violation";
    case ZP_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void zp_string_free(char* s) { std::free(s); }

zp_status zp_context_new(zp_context** out) {
  if (out == nullptr) return ZP_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) zp_context{};
  return *out ? ZP_OK : ZP_ERR_RESOURCE_LIMIT;
}

void zp_context_free(zp_context* ctx) { delete ctx; }

const char* zp_context_last_error(const zp_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

zp_status zp_context_set_caps(zp_context* ctx, uint64_t single_cap, uint64_t pair_cap) {
  return guarded(ctx, [&] {
    if (single_cap < 2 || pair_cap < 2) fail(ErrorKind::InvalidInput, "enumeration caps must be >= 2");
    ctx->limits.single_cap = single_cap;
    ctx->limits.pair_cap = pair_cap;
  });
}

zp_status zp_context_set_caps_text(zp_context* ctx, const char* text) {
  return guarded(ctx, [&] {
    require(text, "cap text");
    const std::string_view t(text);
    const auto colon = t.find(':');
    if (colon == std::string_view::npos) {
      ctx->limits.single_cap = parse_cap(t);
    } else {
      const auto single = parse_cap(t.substr(0, colon));
      const auto pair = parse_cap(t.substr(colon + 1));
      ctx->limits.single_cap = single;
      ctx->limits.pair_cap = pair;
    }
  });
}

void zp_context_get_caps(const zp_context* ctx, uint64_t* single_cap, uint64_t* pair_cap) {
  if (ctx == nullptr) return;
  if (single_cap) *single_cap = ctx->limits.single_cap;
  if (pair_cap) *pair_cap = ctx->limits.pair_cap;
}

zp_status zp_context_set_jobs(zp_context* ctx, unsigned jobs) {
  return guarded(ctx, [&] {
    if (jobs == 0) fail(ErrorKind::InvalidInput, "jobs must be >= 1");
    ctx->limits.jobs = jobs;
  });
}

zp_status zp_ring_parse(zp_context* ctx, const char* text, zp_ring** out) {
  return guarded(ctx, [&] {
    require(text, "ring text");
    require(out, "output pointer");
    *out = new zp_ring{ring::RingSpec::parse(text)};
  });
}

zp_status zp_ring_zn(zp_context* ctx, uint64_t n, zp_ring** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    *out = new zp_ring{ring::RingSpec::zn(n)};
  });
}

void zp_ring_free(zp_ring* ring) { delete ring; }

zp_status zp_ring_text(zp_context* ctx, const zp_ring* ring, char** out) {
  return emit_string(ctx, out, [&] {
    require(ring, "ring");
    return ring->spec.to_string();
  });
}

zp_status zp_ring_order(zp_context* ctx, const zp_ring* ring, char** out) {
  return emit_string(ctx, out, [&] {
    require(ring, "ring");
    return ring::ring_order(ring->spec).to_string();
  });
}

zp_status zp_rational_make(zp_context* ctx, const char* num, const char* den, zp_rational** out) {
  return guarded(ctx, [&] {
    require(num, "numerator");
    require(den, "denominator");
    require(out, "output pointer");
    *out = new zp_rational{Rational::make(Natural::parse(num), Natural::parse(den))};
  });
}

void zp_rational_free(zp_rational* r) { delete r; }

zp_status zp_rational_text(zp_context* ctx, const zp_rational* r, char** out) {
  return emit_string(ctx, out, [&] {
    require(r, "rational");
    return r->value.to_string();
  });
}

zp_status zp_rational_decimal(zp_context* ctx, const zp_rational* r, unsigned digits, char** out) {
  return emit_string(ctx, out, [&] {
    require(r, "rational");
    return r->value.to_decimal(digits);
  });
}

zp_status zp_rational_mul(zp_context* ctx, const zp_rational* a, const zp_rational* b,
                          zp_rational** out) {
  return guarded(ctx, [&] {
    require(a, "rational");
    require(b, "rational");
    require(out, "output pointer");
    *out = new zp_rational{a->value * b->value};
  });
}

int zp_rational_cmp(const zp_rational* a, const zp_rational* b) {
  const auto c = a->value <=> b->value;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

zp_status zp_is_prime(zp_context* ctx, uint64_t n, int* out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    *out = factor::is_prime(n) ? 1 : 0;
  });
}

zp_status zp_factorize(zp_context* ctx, uint64_t n, zp_factorization** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    *out = new zp_factorization{factor::factorize(n)};
  });
}

void zp_factorization_free(zp_factorization* f) { delete f; }

size_t zp_factorization_size(const zp_factorization* f) { return f ? f->value.size() : 0; }

zp_status zp_factorization_get(zp_context* ctx, const zp_factorization* f, size_t index,
                               uint64_t* prime, uint32_t* exponent) {
  return guarded(ctx, [&] {
    require(f, "factorization");
    if (index >= f->value.size()) fail(ErrorKind::OutOfRange, "factorization index out of range");
    if (prime) *prime = f->value.powers()[index].prime;
    if (exponent) *exponent = f->value.powers()[index].exponent;
  });
}

zp_status zp_factorization_text(zp_context* ctx, const zp_factorization* f, char** out) {
  return emit_string(ctx, out, [&] {
    require(f, "factorization");
    return f->value.to_text();
  });
}

zp_status zp_factorization_json(zp_context* ctx, const zp_factorization* f, char** out) {
  return emit_string(ctx, out, [&] {
    require(f, "factorization");
    return f->value.to_json();
  });
}

zp_status zp_gcd_sum(zp_context* ctx, uint64_t n, char** out) {
  return emit_string(ctx, out, [&] {
    if (n > ctx->limits.single_cap) {
      fail(ErrorKind::ResourceLimit, "gcd sum over " + std::to_string(n) +
                                         " terms exceeds the enumeration cap");
    }
    return ring::gcd_sum(n).to_string();
  });
}

zp_status zp_prob_compute(zp_context* ctx, const zp_ring* ring, int paranoid, zp_prob** out) {
  return guarded(ctx, [&] {
    require(ring, "ring");
    require(out, "output pointer");
    *out = new zp_prob{service::compute_prob(ring->spec, ctx->limits, paranoid != 0)};
  });
}

void zp_prob_free(zp_prob* p) { delete p; }

zp_status zp_prob_value(zp_context* ctx, const zp_prob* p, zp_rational** out) {
  return guarded(ctx, [&] {
    require(p, "probability");
    require(out, "output pointer");
    *out = new zp_rational{p->value.value};
  });
}

zp_prob_path zp_prob_get_path(const zp_prob* p) {
  return p->value.path == service::ProbPath::Product ? ZP_PATH_PRODUCT : ZP_PATH_CLOSED_FORM;
}

zp_status zp_prob_render(zp_context* ctx, const zp_prob* p, zp_format format, unsigned digits,
                         char** out) {
  return emit_string(ctx, out, [&] {
    require(p, "probability");
    return service::render_prob(p->value, format_of(format), digits);
  });
}

zp_status zp_prob_zn(zp_context* ctx, uint64_t n, zp_rational** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    *out = new zp_rational{formulas::p_zn(Natural(n))};
  });
}

zp_status zp_prob_zpk(zp_context* ctx, uint64_t p, uint64_t k, zp_rational** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    *out = new zp_rational{formulas::p_zpk(Natural(p), k)};
  });
}

zp_status zp_prob_brute(zp_context* ctx, const zp_ring* ring, zp_rational** out) {
  return guarded(ctx, [&] {
    require(ring, "ring");
    require(out, "output pointer");
    *out = new zp_rational{ring::prob_brute(ring->spec, ctx->limits)};
  });
}

zp_status zp_bounds_compute(zp_context* ctx, const zp_ring* ring, zp_bounds** out) {
  return guarded(ctx, [&] {
    require(ring, "ring");
    require(out, "output pointer");
    *out = new zp_bounds{ring->spec, formulas::bounds_report(ring->spec, ctx->limits)};
  });
}

void zp_bounds_free(zp_bounds* b) { delete b; }

int zp_bounds_all_hold(const zp_bounds* b) { return b && b->value.all_hold ? 1 : 0; }

zp_status zp_bounds_get(zp_context* ctx, const zp_bounds* b, zp_bounds_field field,
                        zp_rational** out) {
  return guarded(ctx, [&] {
    require(b, "bounds report");
    require(out, "output pointer");
    const auto& r = b->value;
    switch (field) {
      case ZP_BOUNDS_LOWER: *out = new zp_rational{r.lower}; return;
      case ZP_BOUNDS_EXACT: *out = new zp_rational{r.exact}; return;
      case ZP_BOUNDS_UPPER: *out = new zp_rational{r.upper}; return;
      case ZP_BOUNDS_REFINED_CAP: *out = new zp_rational{r.refined_cap}; return;
      case ZP_BOUNDS_GLOBAL_CAP: *out = new zp_rational{r.global_cap}; return;
    }
    fail(ErrorKind::InvalidInput, "unknown bounds field");
  });
}

zp_status zp_bounds_render(zp_context* ctx, const zp_bounds* b, zp_format format, unsigned digits,
                           char** out) {
  return emit_string(ctx, out, [&] {
    require(b, "bounds report");
    return service::render_bounds(b->spec, b->value, format_of(format), digits);
  });
}

zp_status zp_graph_build(zp_context* ctx, const zp_ring* ring, zp_graph** out) {
  return guarded(ctx, [&] {
    require(ring, "ring");
    require(out, "output pointer");
    auto g = zdgraph::build_graph(ring->spec, ctx->limits);
    auto stats = zdgraph::graph_stats(g);
    *out = new zp_graph{std::move(g), std::move(stats)};
  });
}

void zp_graph_free(zp_graph* g) { delete g; }

void zp_graph_get_stats(const zp_graph* g, zp_graph_stats* out) {
  if (g == nullptr || out == nullptr) return;
  out->vertices = g->stats.vertices;
  out->edges = g->stats.edges;
  out->self_annihilators = g->stats.self_annihilators;
}

void zp_graph_degrees(const zp_graph* g, size_t* degrees, size_t capacity, size_t* count) {
  if (g == nullptr) return;
  const auto& d = g->stats.degrees;
  if (count) *count = d.size();
  for (size_t i = 0; i < d.size() && i < capacity && degrees; ++i) degrees[i] = d[i];
}

zp_status zp_graph_dot(zp_context* ctx, const zp_graph* g, char** out) {
  return emit_string(ctx, out, [&] {
    require(g, "graph");
    return zdgraph::export_dot(g->value);
  });
}

zp_status zp_graph_edges_csv(zp_context* ctx, const zp_graph* g, char** out) {
  return emit_string(ctx, out, [&] {
    require(g, "graph");
    return zdgraph::export_edges_csv(g->value);
  });
}

zp_status zp_graph_vertices_csv(zp_context* ctx, const zp_graph* g, char** out) {
  return emit_string(ctx, out, [&] {
    require(g, "graph");
    return zdgraph::export_vertices_csv(g->value);
  });
}

zp_status zp_graph_render_stats(zp_context* ctx, const zp_graph* g, zp_format format, char** out) {
  return emit_string(ctx, out, [&] {
    require(g, "graph");
    return service::render_graph_stats(g->value, format_of(format));
  });
}

zp_status zp_scan_run(zp_context* ctx, uint64_t lo, uint64_t hi, zp_scan** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    *out = new zp_scan{service::scan(lo, hi, ctx->limits.jobs)};
  });
}

void zp_scan_free(zp_scan* s) { delete s; }

size_t zp_scan_row_count(const zp_scan* s) { return s ? s->value.rows.size() : 0; }

int zp_scan_all_hold(const zp_scan* s) { return s && s->value.all_hold() ? 1 : 0; }

zp_status zp_scan_render(zp_context* ctx, const zp_scan* s, zp_format format, unsigned digits,
                         char** out) {
  return emit_string(ctx, out, [&] {
    require(s, "scan");
    return service::render_scan(s->value, format_of(format), digits);
  });
}

zp_status zp_verify_run(zp_context* ctx, uint64_t max_n, zp_verify** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    service::VerifyOptions options;
    options.max_n = max_n;
    options.limits = ctx->limits;
    *out = new zp_verify{service::verify(options)};
  });
}

void zp_verify_free(zp_verify* v) { delete v; }

int zp_verify_passed(const zp_verify* v) { return v && v->value.passed() ? 1 : 0; }

uint64_t zp_verify_rings_checked(const zp_verify* v) { return v ? v->value.rings_checked : 0; }

size_t zp_verify_failure_count(const zp_verify* v) { return v ? v->value.failures.size() : 0; }

zp_status zp_verify_render(zp_context* ctx, const zp_verify* v, zp_format format, char** out) {
  return emit_string(ctx, out, [&] {
    require(v, "verify report");
    return service::render_verify(v->value, format_of(format));
  });
}

uint64_t zp_montecarlo_default_seed(void) { return service::kDefaultSeed; }

zp_status zp_montecarlo_run(zp_context* ctx, uint64_t n, uint64_t samples, uint64_t seed,
                            zp_montecarlo** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    *out = new zp_montecarlo{service::montecarlo(n, samples, seed)};
  });
}

void zp_montecarlo_free(zp_montecarlo* m) { delete m; }

uint64_t zp_montecarlo_hits(const zp_montecarlo* m) { return m ? m->value.hits : 0; }

int zp_montecarlo_within(const zp_montecarlo* m, uint64_t sigmas) {
  return m && m->value.within(sigmas) ? 1 : 0;
}

zp_status zp_montecarlo_render(zp_context* ctx, const zp_montecarlo* m, zp_format format,
                               unsigned digits, char** out) {
  return emit_string(ctx, out, [&] {
    require(m, "monte carlo result");
    return service::render_montecarlo(m->value, format_of(format), digits);
  });
}

}  // extern "C"
