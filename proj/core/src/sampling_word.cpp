#include "gct/sampling_word.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gct {

bool operator==(const SampSegment& a, const SampSegment& b) {
  return a.k == b.k && a.t == b.t;
}

bool operator<(const SampSegment& a, const SampSegment& b) {
  if (a.t != b.t) return a.t < b.t;
  return a.k < b.k;
}

SamplingWord SamplingWord::normalized(std::vector<SampSegment> raw) {
  std::vector<SampSegment> out;
  for (auto& seg : raw) {
    if (seg.t < 0) throw std::invalid_argument("negative time in sampling word");
    if (out.empty()) {
      out.push_back(std::move(seg));
      continue;
    }
    SampSegment& last = out.back();
    if (seg.t == 0) {
      last.k += seg.k;  // no time passed: observation counts merge
    } else if (last.k == 0) {
      last.t += seg.t;  // no observation separates the two time advances
      last.k = seg.k;
    } else {
      out.push_back(std::move(seg));
    }
  }
  if (out.size() == 1 && out[0].t == 0 && out[0].k == 0) out.clear();
  SamplingWord w;
  w.segs_ = std::move(out);
  return w;
}

SamplingWord SamplingWord::single(const Rational& t, std::uint64_t k) {
  return normalized({SampSegment{t, k}});
}

std::string SamplingWord::str() const {
  if (segs_.empty()) return "0:0";
  std::ostringstream os;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i) os << ',';
    os << format_rational(segs_[i].t) << ':' << segs_[i].k;
  }
  return os.str();
}

bool operator==(const SamplingWord& a, const SamplingWord& b) {
  return a.segments() == b.segments();
}

bool operator!=(const SamplingWord& a, const SamplingWord& b) { return !(a == b); }

bool operator<(const SamplingWord& a, const SamplingWord& b) {
  const auto& x = a.segments();
  const auto& y = b.segments();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return x.size() < y.size();
}

SamplingWord samp_normalize(std::vector<SampSegment> raw) {
  return SamplingWord::normalized(std::move(raw));
}

SamplingWord samp_mul(const SamplingWord& u, const SamplingWord& v) {
  std::vector<SampSegment> raw = u.segments();
  raw.insert(raw.end(), v.segments().begin(), v.segments().end());
  return SamplingWord::normalized(std::move(raw));
}

SamplingWord operator*(const SamplingWord& u, const SamplingWord& v) {
  return samp_mul(u, v);
}

Rational length_morphism(const SamplingWord& w) {
  Rational s = 0;
  for (const auto& seg : w.segments()) s += seg.t;
  return s;
}

std::uint64_t count_morphism(const SamplingWord& w) {
  std::uint64_t s = 0;
  for (const auto& seg : w.segments()) s += seg.k;
  return s;
}

std::optional<SamplingWord> parse_word(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return SamplingWord{};

  std::vector<SampSegment> raw;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto colon = piece.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto t = parse_rational(piece.substr(0, colon));
    if (!t || *t < 0) return std::nullopt;
    const std::string kpart = piece.substr(colon + 1);
    if (kpart.empty()) return std::nullopt;
    std::uint64_t k = 0;
    for (char c : kpart) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      k = k * 10 + static_cast<std::uint64_t>(c - '0');
    }
    raw.push_back({*t, k});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return SamplingWord::normalized(std::move(raw));
}

std::vector<SamplingWord> sample_words(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> seg_count(0, 3);
  std::uniform_int_distribution<long> tick(0, 5 * 64);  // times k/64 in [0,5]
  std::uniform_int_distribution<std::uint64_t> obs(0, 3);
  std::vector<SamplingWord> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<SampSegment> raw;
    int n = seg_count(rng);
    for (int j = 0; j < n; ++j) raw.push_back({rat(tick(rng), 64), obs(rng)});
    out.push_back(SamplingWord::normalized(std::move(raw)));
  }
  return out;
}

CheckReport check_sampling_monoid(int trials, unsigned seed) {
  CheckReport rep;
  std::vector<SamplingWord> words = sample_words(3 * trials, seed);
  const SamplingWord unit;
  for (int i = 0; i < trials; ++i) {
    const SamplingWord& u = words[static_cast<std::size_t>(3 * i)];
    const SamplingWord& v = words[static_cast<std::size_t>(3 * i + 1)];
    const SamplingWord& w = words[static_cast<std::size_t>(3 * i + 2)];
    ++rep.cases;
    if ((u * v) * w != u * (v * w))
      rep.fail("associativity: (" + u.str() + ")(" + v.str() + ")(" + w.str() + ")");
    if (unit * u != u || u * unit != u) rep.fail("unit law at " + u.str());
    if (length_morphism(u * v) != length_morphism(u) + length_morphism(v))
      rep.fail("length morphism not additive at " + u.str() + ", " + v.str());
    if (count_morphism(u * v) != count_morphism(u) + count_morphism(v))
      rep.fail("count morphism not additive at " + u.str() + ", " + v.str());
  }
  return rep;
}

}  // namespace gct
