#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeroprod/natural.hpp"
#include "zeroprod/rational.hpp"

namespace zeroprod::ring {

// Either Z_n (n >= 2) or a direct product of two or more ring specs. The
// zero ring and rings without identity cannot be constructed.
class RingSpec {
 public:
  static RingSpec zn(std::uint64_t modulus);
  static RingSpec product(std::vector<RingSpec> factors);

  // Grammar: term ('x' term)*, term := 'Zn(' digits ')' | '(' spec ')'.
  // Whitespace is ignored. 'Null(<n>)' names the zero-multiplication ring,
  // which is recognised only to be rejected.
  static RingSpec parse(std::string_view text);

  bool is_zn() const noexcept { return factors_.empty(); }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<RingSpec>& factors() const noexcept { return factors_; }

  // Leaf moduli in lexicographic component order.
  std::vector<std::uint64_t> leaf_moduli() const;
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec() = default;

  std::uint64_t modulus_ = 0;
  std::vector<RingSpec> factors_;
};

// Flattened residues, one per leaf of the spec, each reduced mod its leaf.
// Ordering is lexicographic by component.
struct Element {
  std::vector<std::uint64_t> residues;

  friend auto operator<=>(const Element&, const Element&) = default;
};

Element make_element(const RingSpec& spec, std::vector<std::uint64_t> residues);
Element zn_element(std::uint64_t residue);
bool is_zero(const Element& x) noexcept;
Element multiply(const RingSpec& spec, const Element& x, const Element& y);
// "5" for Z_n, "(1,(0,2))" for nested products.
std::string element_to_string(const RingSpec& spec, const Element& x);

struct Limits {
  static constexpr std::uint64_t kDefaultSingleCap = std::uint64_t{1} << 16;
  static constexpr std::uint64_t kDefaultPairCap = std::uint64_t{1} << 12;

  // largest ring order for which R is enumerated
  std::uint64_t single_cap = kDefaultSingleCap;
  // largest ring order for which R x R is enumerated
  std::uint64_t pair_cap = kDefaultPairCap;
  unsigned jobs = 1;
};

enum class Method {
  Fast,      // per-element annihilator sizes from component gcds
  Pairwise,  // literal enumeration of R x R
};

Natural ring_order(const RingSpec& spec);

// Elements of R in canonical order; single-enumeration cap.
std::vector<Element> elements(const RingSpec& spec, const Limits& limits = {});

std::vector<Element> ann_set(const RingSpec& spec, const Element& x, const Limits& limits = {});

// |Ann(x)| in Z_n, i.e. gcd(x, n) with gcd(0, n) = n.
std::uint64_t ann_size_zn(std::uint64_t n, std::uint64_t x);
// Product of the per-component sizes.
Natural ann_size(const RingSpec& spec, const Element& x);

std::vector<Element> zero_divisor_set(const RingSpec& spec, const Limits& limits = {});

Natural ann_count_total(const RingSpec& spec, const Limits& limits = {},
                        Method method = Method::Fast);

// |Ann| / |R|^2 by pairwise enumeration; pair cap applies.
Rational prob_brute(const RingSpec& spec, const Limits& limits = {});

// Pillai sum over x in [0, n) of gcd(x, n), gcd(0, n) = n.
Natural gcd_sum(std::uint64_t n);

std::optional<Natural> max_ann_size(const RingSpec& spec, const Limits& limits = {});

// Annihilator size -> number of elements with that size, split by x = 0,
// x in Z(R), and nonzero non-zero-divisors.
struct AnnProfile {
  std::map<Natural, Natural> zero;
  std::map<Natural, Natural> zero_divisors;
  std::map<Natural, Natural> rest;

  Natural element_count() const;
  // sum of size * count over all buckets, i.e. |Ann|
  Natural annihilating_pairs() const;

  friend bool operator==(const AnnProfile&, const AnnProfile&) = default;
};

AnnProfile ann_profile(const RingSpec& spec, const Limits& limits = {});

}  // namespace zeroprod::ring
