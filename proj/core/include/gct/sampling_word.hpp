#pragma once

#include "gct/check_report.hpp"
#include "gct/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gct {

// One sampling segment: advance time t, then draw k observations.
struct SampSegment {
  Rational t;  // >= 0
  std::uint64_t k = 0;
};

bool operator==(const SampSegment& a, const SampSegment& b);
bool operator<(const SampSegment& a, const SampSegment& b);

// Element of the sampling-interval monoid: an alternating word of time
// advances and observation counts.  Normal form invariants:
//   - every segment after the first has t > 0,
//   - every segment before the last has k > 0,
//   - the unit is the empty segment list (printed "0:0").
// Multiplication is concatenation followed by renormalization, which merges
// adjacent times when no observation separates them and merges adjacent
// observation counts when no time passes between them.
class SamplingWord {
 public:
  SamplingWord() = default;  // unit

  static SamplingWord normalized(std::vector<SampSegment> raw);
  static SamplingWord single(const Rational& t, std::uint64_t k);

  const std::vector<SampSegment>& segments() const { return segs_; }
  bool is_unit() const { return segs_.empty(); }

  // Printed as "t:k,t:k" with canonical rational times; unit prints "0:0".
  std::string str() const;

 private:
  std::vector<SampSegment> segs_;
};

bool operator==(const SamplingWord& a, const SamplingWord& b);
bool operator!=(const SamplingWord& a, const SamplingWord& b);
// Lexicographic on segments; used for memo keys and enumeration order.
bool operator<(const SamplingWord& a, const SamplingWord& b);

SamplingWord samp_normalize(std::vector<SampSegment> raw);
SamplingWord samp_mul(const SamplingWord& u, const SamplingWord& v);
SamplingWord operator*(const SamplingWord& u, const SamplingWord& v);

// Monoid morphism onto total time.
Rational length_morphism(const SamplingWord& w);
// Monoid morphism onto total observation count.
std::uint64_t count_morphism(const SamplingWord& w);

// Accepts "t:k,t:k" with times as decimals or fractions; "" and "0:0" are the
// unit.  The result is normalized.  Negative times or malformed segments
// yield nullopt.
std::optional<SamplingWord> parse_word(const std::string& text);

// Deterministic pseudo-random words: 0-3 segments, times on the 1/64 grid in
// [0,5], counts 0-3.
std::vector<SamplingWord> sample_words(int count, unsigned seed);

// Monoid laws on random triples (associativity, both unit laws) and
// additivity of the two morphisms, all exact.
CheckReport check_sampling_monoid(int trials, unsigned seed);

}  // namespace gct
