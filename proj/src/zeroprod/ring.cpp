#include "zeroprod/ring.hpp"

#include <numeric>

#include "zeroprod/error.hpp"
#include "zeroprod/modmath.hpp"
#include "zeroprod/parallel.hpp"

namespace zeroprod::ring {
namespace {

using u64 = std::uint64_t;

constexpr const char* kExclusionNote =
    "rings are required to be finite, commutative, with identity 1 != 0; the zero ring "
    "and rings without identity are excluded";

// Mixed-radix view of R with the first component most significant, so index
// order is the lexicographic element order.
class Enumeration {
 public:
  Enumeration(const RingSpec& spec, u64 cap, const char* what) : moduli_(spec.leaf_moduli()) {
    const Natural order = ring_order(spec);
    if (order > Natural(cap)) {
      fail(ErrorKind::ResourceLimit, std::string(what) + " needs ring order <= " +
                                         std::to_string(cap) + " but " + spec.to_string() +
                                         " has order " + order.to_string());
    }
    order_ = order.to_u64_checked();
  }

  u64 order() const noexcept { return order_; }
  const std::vector<u64>& moduli() const noexcept { return moduli_; }

  Element at(u64 index) const {
    Element e;
    e.residues.resize(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      e.residues[i] = index % moduli_[i];
      index /= moduli_[i];
    }
    return e;
  }

  // residues for every element, flattened row-major
  std::vector<u64> table() const {
    const std::size_t width = moduli_.size();
    std::vector<u64> out(order_ * width);
    std::vector<u64> digits(width, 0);
    for (u64 idx = 0; idx < order_; ++idx) {
      std::copy(digits.begin(), digits.end(), out.begin() + idx * width);
      for (std::size_t i = width; i-- > 0;) {
        if (++digits[i] < moduli_[i]) break;
        digits[i] = 0;
      }
    }
    return out;
  }

  u64 fast_ann_size(const u64* residues) const {
    u64 size = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) size *= ann_size_zn(moduli_[i], residues[i]);
    return size;
  }

  bool product_is_zero(const u64* a, const u64* b) const {
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (detail::mul_mod(a[i], b[i], moduli_[i]) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<u64> moduli_;
  u64 order_ = 0;
};

bool all_zero(const u64* residues, std::size_t width) {
  for (std::size_t i = 0; i < width; ++i) {
    if (residues[i] != 0) return false;
  }
  return true;
}

// Per-element annihilator sizes over the whole ring, in index order.
std::vector<u64> fast_sizes(const Enumeration& en, const Limits& limits) {
  const auto table = en.table();
  const std::size_t width = en.moduli().size();
  std::vector<u64> sizes(en.order());
  detail::for_each_chunk(en.order(), limits.jobs, [&](u64, u64 begin, u64 end) {
    for (u64 idx = begin; idx < end; ++idx) sizes[idx] = en.fast_ann_size(&table[idx * width]);
  });
  return sizes;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') text_ += c;
    }
  }

  RingSpec parse() {
    RingSpec spec = product();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return spec;
  }

 private:
  RingSpec product() {
    std::vector<RingSpec> terms;
    terms.push_back(term());
    while (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return RingSpec::product(std::move(terms));
  }

  RingSpec term() {
    if (accept("(")) {
      RingSpec inner = product();
      expect(")");
      return inner;
    }
    if (accept("Zn(")) {
      const u64 n = number();
      expect(")");
      return RingSpec::zn(n);
    }
    if (accept("Null(")) {
      const u64 n = number();
      expect(")");
      fail(ErrorKind::ExcludedRing, "Null(" + std::to_string(n) +
                                        ") has no identity element; " + kExclusionNote);
    }
    error("expected 'Zn(<n>)' or '('");
  }

  u64 number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (start == pos_) error("expected a modulus");
    return Natural::parse(std::string_view(text_).substr(start, pos_ - start)).to_u64_checked();
  }

  bool accept(std::string_view token) {
    if (std::string_view(text_).substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) error("expected '" + std::string(token) + "'");
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse,
         "ring spec '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

void format_element(const RingSpec& spec, const std::vector<u64>& residues, std::size_t& next,
                    std::string& out) {
  if (spec.is_zn()) {
    out += std::to_string(residues[next++]);
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < spec.factors().size(); ++i) {
    if (i > 0) out += ',';
    format_element(spec.factors()[i], residues, next, out);
  }
  out += ')';
}

}  // namespace

RingSpec RingSpec::zn(std::uint64_t modulus) {
  if (modulus == 1) {
    fail(ErrorKind::ExcludedRing, std::string("Zn(1) is the zero ring; ") + kExclusionNote);
  }
  if (modulus == 0) {
    fail(ErrorKind::ExcludedRing, std::string("Zn(0) is not a finite ring; ") + kExclusionNote);
  }
  RingSpec spec;
  spec.modulus_ = modulus;
  return spec;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  if (factors.size() < 2) fail(ErrorKind::InvalidInput, "a product ring needs at least two factors");
  RingSpec spec;
  spec.factors_ = std::move(factors);
  return spec;
}

RingSpec RingSpec::parse(std::string_view text) { return Parser(text).parse(); }

std::vector<std::uint64_t> RingSpec::leaf_moduli() const {
  if (is_zn()) return {modulus_};
  std::vector<u64> out;
  for (const auto& f : factors_) {
    auto sub = f.leaf_moduli();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string RingSpec::to_string() const {
  if (is_zn()) return "Zn(" + std::to_string(modulus_) + ")";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += 'x';
    if (factors_[i].is_zn()) {
      out += factors_[i].to_string();
    } else {
      out += "(" + factors_[i].to_string() + ")";
    }
  }
  return out;
}

Element make_element(const RingSpec& spec, std::vector<std::uint64_t> residues) {
  const auto moduli = spec.leaf_moduli();
  if (residues.size() != moduli.size()) {
    fail(ErrorKind::InvalidInput, "element arity does not match " + spec.to_string());
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) residues[i] %= moduli[i];
  return Element{std::move(residues)};
}

Element zn_element(std::uint64_t residue) { return Element{{residue}}; }

bool is_zero(const Element& x) noexcept { return all_zero(x.residues.data(), x.residues.size()); }

Element multiply(const RingSpec& spec, const Element& x, const Element& y) {
  const auto moduli = spec.leaf_moduli();
  if (x.residues.size() != moduli.size() || y.residues.size() != moduli.size()) {
    fail(ErrorKind::InvalidInput, "element arity does not match " + spec.to_string());
  }
  Element out;
  out.residues.resize(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    out.residues[i] = detail::mul_mod(x.residues[i], y.residues[i], moduli[i]);
  }
  return out;
}

std::string element_to_string(const RingSpec& spec, const Element& x) {
  std::string out;
  std::size_t next = 0;
  format_element(spec, x.residues, next, out);
  return out;
}

Natural ring_order(const RingSpec& spec) {
  Natural order = 1;
  for (u64 m : spec.leaf_moduli()) order *= Natural(m);
  return order;
}

std::vector<Element> elements(const RingSpec& spec, const Limits& limits) {
  const Enumeration en(spec, limits.single_cap, "element enumeration");
  std::vector<Element> out;
  out.reserve(en.order());
  for (u64 idx = 0; idx < en.order(); ++idx) out.push_back(en.at(idx));
  return out;
}

std::vector<Element> ann_set(const RingSpec& spec, const Element& x, const Limits& limits) {
  const Enumeration en(spec, limits.single_cap, "annihilator enumeration");
  if (x.residues.size() != en.moduli().size()) {
    fail(ErrorKind::InvalidInput, "element arity does not match " + spec.to_string());
  }
  const auto table = en.table();
  const std::size_t width = en.moduli().size();
  std::vector<Element> out;
  for (u64 idx = 0; idx < en.order(); ++idx) {
    if (en.product_is_zero(x.residues.data(), &table[idx * width])) out.push_back(en.at(idx));
  }
  return out;
}

std::uint64_t ann_size_zn(std::uint64_t n, std::uint64_t x) { return std::gcd(x % n, n); }

Natural ann_size(const RingSpec& spec, const Element& x) {
  const auto moduli = spec.leaf_moduli();
  if (x.residues.size() != moduli.size()) {
    fail(ErrorKind::InvalidInput, "element arity does not match " + spec.to_string());
  }
  Natural size = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) size *= Natural(ann_size_zn(moduli[i], x.residues[i]));
  return size;
}

std::vector<Element> zero_divisor_set(const RingSpec& spec, const Limits& limits) {
  const Enumeration en(spec, limits.single_cap, "zero-divisor enumeration");
  const auto sizes = fast_sizes(en, limits);
  std::vector<Element> out;
  // index 0 is the zero element
  for (u64 idx = 1; idx < en.order(); ++idx) {
    if (sizes[idx] >= 2) out.push_back(en.at(idx));
  }
  return out;
}

Natural ann_count_total(const RingSpec& spec, const Limits& limits, Method method) {
  if (method == Method::Fast) {
    const Enumeration en(spec, limits.single_cap, "annihilator count");
    const auto sizes = fast_sizes(en, limits);
    Natural total = 0;
    for (u64 s : sizes) total += Natural(s);
    return total;
  }
  const Enumeration en(spec, limits.pair_cap, "pairwise enumeration");
  const auto table = en.table();
  const std::size_t width = en.moduli().size();
  std::vector<u64> partial(detail::chunk_count(en.order(), limits.jobs), 0);
  detail::for_each_chunk(en.order(), limits.jobs, [&](u64 chunk, u64 begin, u64 end) {
    u64 count = 0;
    for (u64 a = begin; a < end; ++a) {
      for (u64 b = 0; b < en.order(); ++b) {
        if (en.product_is_zero(&table[a * width], &table[b * width])) ++count;
      }
    }
    partial[chunk] = count;
  });
  Natural total = 0;
  for (u64 c : partial) total += Natural(c);
  return total;
}

Rational prob_brute(const RingSpec& spec, const Limits& limits) {
  const Natural order = ring_order(spec);
  return Rational::make(ann_count_total(spec, limits, Method::Pairwise), order * order);
}

Natural gcd_sum(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "gcd_sum needs n >= 1");
  Natural total = Natural(n);
  for (u64 x = 1; x < n; ++x) total += Natural(std::gcd(x, n));
  return total;
}

std::optional<Natural> max_ann_size(const RingSpec& spec, const Limits& limits) {
  const Enumeration en(spec, limits.single_cap, "annihilator enumeration");
  const auto sizes = fast_sizes(en, limits);
  std::optional<Natural> best;
  for (u64 idx = 1; idx < en.order(); ++idx) {
    if (sizes[idx] >= 2 && (!best || Natural(sizes[idx]) > *best)) best = Natural(sizes[idx]);
  }
  return best;
}

Natural AnnProfile::element_count() const {
  Natural total = 0;
  for (const auto* bucket : {&zero, &zero_divisors, &rest}) {
    for (const auto& [size, count] : *bucket) total += count;
  }
  return total;
}

Natural AnnProfile::annihilating_pairs() const {
  Natural total = 0;
  for (const auto* bucket : {&zero, &zero_divisors, &rest}) {
    for (const auto& [size, count] : *bucket) total += size * count;
  }
  return total;
}

AnnProfile ann_profile(const RingSpec& spec, const Limits& limits) {
  const Enumeration en(spec, limits.single_cap, "annihilator profile");
  const auto sizes = fast_sizes(en, limits);
  std::map<u64, u64> zdiv, rest;
  for (u64 idx = 1; idx < en.order(); ++idx) {
    ++(sizes[idx] >= 2 ? zdiv : rest)[sizes[idx]];
  }
  AnnProfile profile;
  profile.zero[Natural(sizes[0])] = Natural(1);
  for (const auto& [s, c] : zdiv) profile.zero_divisors[Natural(s)] = Natural(c);
  for (const auto& [s, c] : rest) profile.rest[Natural(s)] = Natural(c);
  return profile;
}

}  // namespace zeroprod::ring
