// Copyright 2026 The Dedekind Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dedekind/randomness.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

#include "dedekind/bisection.hpp"
#include "dedekind/errors.hpp"

namespace dedekind {

StringSet::StringSet(unsigned base, const std::vector<DigitString>& strings) : base_(base) {
  for (const auto& s : strings) insert(s);
}

void StringSet::insert(const DigitString& s) {
  if (s.base() != base_) throw DomainError("word base differs from the set's base");
  strings_.insert(s);
}

StringSet StringSet::pruned() const {
  // In lexicographic order a word's prefixes sort before it, and any kept
  // word that is a prefix of s is a prefix of the last kept word.
  StringSet out(base_);
  const DigitString* last = nullptr;
  for (const auto& s : strings_) {
    if (last != nullptr && last->is_prefix_of(s)) continue;
    last = &*out.strings_.insert(out.strings_.end(), s);
  }
  return out;
}

Rational cylinder_measure(const StringSet& xs) {
  Rational total;
  const StringSet minimal = xs.pruned();
  for (const auto& s : minimal.strings()) {
    total += Rational(Integer(1), integer_power(xs.base(), s.size()));
  }
  return total;
}

bool covers(const SequenceSpec& spec, const StringSet& xs) {
  if (spec.base() != xs.base()) throw DomainError("sequence and string set bases differ");
  for (const auto& s : xs.strings()) {
    if (s.is_prefix_of(prefix(spec, s.size()))) return true;
  }
  return false;
}

NullCoverSpec::NullCoverSpec(unsigned base, std::vector<StringSet> levels,
                             std::vector<Rational> bounds)
    : base_(base), levels_(std::move(levels)), bounds_(std::move(bounds)) {
  if (levels_.size() != bounds_.size()) {
    throw DomainError("null cover has " + std::to_string(levels_.size()) + " levels but " +
                      std::to_string(bounds_.size()) + " bounds");
  }
  for (const auto& level : levels_) {
    if (level.base() != base_) throw DomainError("null cover level uses another base");
  }
  for (std::size_t k = 0; k < bounds_.size(); ++k) {
    if (bounds_[k].sign() <= 0) throw DomainError("null cover bounds must be positive");
    if (k > 0 && bounds_[k] > bounds_[k - 1]) {
      throw DomainError("null cover bounds must be non-increasing");
    }
  }
}

NullCoverVerdict verify_null_cover(const NullCoverSpec& cover,
                                   const std::optional<SequenceSpec>& target) {
  if (target && target->base() != cover.base()) {
    throw DomainError("target and cover bases differ");
  }
  NullCoverVerdict out{true, {}, {}, false};
  Rational normalization(1);
  for (std::size_t k = 0; k < cover.levels().size(); ++k) {
    normalization = normalization.half();
    Rational measure = cylinder_measure(cover.levels()[k]);
    if (measure > cover.bounds()[k] || cover.bounds()[k] > normalization) out.valid = false;
    out.level_measures.push_back(std::move(measure));
    if (target) out.covered_at.push_back(covers(*target, cover.levels()[k]));
  }
  out.target_exhibited_nonrandom =
      target.has_value() && out.valid &&
      std::all_of(out.covered_at.begin(), out.covered_at.end(), [](bool b) { return b; });
  return out;
}

NullCoverSpec self_prefix_cover(const SequenceSpec& spec, std::size_t levels) {
  std::vector<StringSet> sets;
  std::vector<Rational> bounds;
  Rational bound(1);
  for (std::size_t k = 1; k <= levels; ++k) {
    bound = bound.half();
    sets.emplace_back(spec.base(),
                      std::vector<DigitString>{
                          prefix(spec, spec.preamble().size() + k * spec.period().size())});
    bounds.push_back(bound);
  }
  return NullCoverSpec(spec.base(), std::move(sets), std::move(bounds));
}

RationalityVerdict rationality_verdict(const SequenceSpec& spec) {
  return RationalVerdict{value_exact(spec)};
}

RationalityVerdict rationality_verdict(const DigitString&) { return UnknownVerdict{}; }

namespace {

std::string format_decimal(double x) {
  std::array<char, 32> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.6g", x);
  return buffer.data();
}

double igamc(double a, double x) { return x <= 0 ? 1.0 : boost::math::gamma_q(a, x); }

class Battery {
 public:
  Battery(const DigitString& sample, const BatteryConfig& config)
      : bits_(sample.digits()), n_(bits_.size()), config_(config),
        threshold_(format_decimal(config.alpha)) {}

  RandomnessReport run() {
    frequency();
    for (std::size_t m : config_.block_sizes) block_frequency(m);
    runs();
    longest_run();
    serial();
    bool ok = std::all_of(records_.begin(), records_.end(), [](const auto& r) { return r.pass; });
    return RandomnessReport{n_, std::move(records_), ok};
  }

 private:
  void record(std::string name, const Rational& statistic, double p) {
    records_.push_back(TestRecord{std::move(name), statistic.to_string(), format_decimal(p),
                                  threshold_, p >= config_.alpha});
  }

  std::size_t ones(std::size_t begin, std::size_t end) const {
    return static_cast<std::size_t>(std::count(bits_.begin() + begin, bits_.begin() + end, 1));
  }

  // chi2 = S^2 / n with S = #1 - #0.
  void frequency() {
    const long s = 2 * static_cast<long>(ones(0, n_)) - static_cast<long>(n_);
    const Rational chi2 = Rational(s) * Rational(s) / Rational(static_cast<long>(n_));
    record("monobit", chi2, boost::math::erfc(std::sqrt(chi2.to_double() / 2)));
  }

  // chi2 = 4M sum (pi_i - 1/2)^2 over floor(n/M) blocks, N degrees of freedom.
  void block_frequency(std::size_t m) {
    const std::size_t blocks = n_ / m;
    Rational sum;
    for (std::size_t i = 0; i < blocks; ++i) {
      const Rational pi(Integer(static_cast<unsigned long>(ones(i * m, (i + 1) * m))),
                        Integer(static_cast<unsigned long>(m)));
      const Rational d = pi - Rational(1, 2);
      sum += d * d;
    }
    const Rational chi2 = Rational(4 * static_cast<long>(m)) * sum;
    record("block_frequency_" + std::to_string(m), chi2,
           igamc(static_cast<double>(blocks) / 2, chi2.to_double() / 2));
  }

  void runs() {
    std::size_t v = 1;
    for (std::size_t i = 1; i < n_; ++i) v += bits_[i] != bits_[i - 1] ? 1 : 0;
    const Rational pi(Integer(static_cast<unsigned long>(ones(0, n_))),
                      Integer(static_cast<unsigned long>(n_)));
    const Rational bias = pi - Rational(1, 2);
    const Rational statistic(Integer(static_cast<unsigned long>(v)));
    // Frequency prerequisite |pi - 1/2| < 2 / sqrt(n).
    if (bias * bias * Rational(static_cast<long>(n_)) >= Rational(4)) {
      record("runs", statistic, 0.0);
      return;
    }
    const double p = pi.to_double();
    const double n = static_cast<double>(n_);
    const double arg = std::fabs(static_cast<double>(v) - 2 * n * p * (1 - p)) /
                       (2 * std::sqrt(2 * n) * p * (1 - p));
    record("runs", statistic, boost::math::erfc(arg));
  }

  // Longest run of ones in M-bit blocks against the tabulated class
  // probabilities.
  void longest_run() {
    struct Table {
      std::size_t block;
      std::size_t min_class;
      std::vector<long> probabilities;  // in units of 1/10000
    };
    static const Table kSmall{8, 1, {2148, 3672, 2305, 1875}};
    static const Table kMedium{128, 4, {1174, 2430, 2493, 1752, 1027, 1124}};
    static const Table kLarge{10000, 10, {882, 2092, 2483, 1933, 1208, 675, 727}};
    const Table& table = n_ < 6272 ? kSmall : (n_ < 750000 ? kMedium : kLarge);

    const std::size_t classes = table.probabilities.size();
    const std::size_t blocks = n_ / table.block;
    std::vector<long> counts(classes, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
      std::size_t longest = 0;
      std::size_t current = 0;
      for (std::size_t i = b * table.block; i < (b + 1) * table.block; ++i) {
        current = bits_[i] == 1 ? current + 1 : 0;
        longest = std::max(longest, current);
      }
      const std::size_t clamped =
          std::clamp(longest, table.min_class, table.min_class + classes - 1);
      ++counts[clamped - table.min_class];
    }
    Rational chi2;
    for (std::size_t i = 0; i < classes; ++i) {
      const Rational expected =
          Rational(static_cast<long>(blocks)) * Rational(table.probabilities[i], 10000);
      const Rational d = Rational(counts[i]) - expected;
      chi2 += d * d / expected;
    }
    record("longest_run", chi2,
           igamc(static_cast<double>(classes - 1) / 2, chi2.to_double() / 2));
  }

  // psi^2_m = 2^m / n * sum(count^2) - n over overlapping m-bit patterns of
  // the cyclically extended sample.
  Rational psi_squared(unsigned m) const {
    if (m == 0) return Rational(0);
    std::vector<long> counts(std::size_t{1} << m, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t pattern = 0;
      for (unsigned j = 0; j < m; ++j) pattern = (pattern << 1U) | bits_[(i + j) % n_];
      ++counts[pattern];
    }
    Rational sum;
    for (long c : counts) sum += Rational(c) * Rational(c);
    const Rational n(static_cast<long>(n_));
    return Rational(Integer(Integer(1) << m)) / n * sum - n;
  }

  void serial() {
    const unsigned m = config_.serial_pattern_length;
    const Rational psi_m = psi_squared(m);
    const Rational psi_m1 = psi_squared(m - 1);
    const Rational psi_m2 = m >= 2 ? psi_squared(m - 2) : Rational(0);
    const Rational del1 = psi_m - psi_m1;
    const Rational del2 = psi_m - Rational(2) * psi_m1 + psi_m2;
    record("serial_1", del1, igamc(std::ldexp(1.0, static_cast<int>(m) - 2), del1.to_double() / 2));
    record("serial_2", del2, igamc(std::ldexp(1.0, static_cast<int>(m) - 3), del2.to_double() / 2));
  }

  const std::vector<Digit>& bits_;
  std::size_t n_;
  const BatteryConfig& config_;
  std::string threshold_;
  std::vector<TestRecord> records_;
};

}  // namespace

RandomnessReport battery(const DigitString& sample, const BatteryConfig& config) {
  if (sample.base() != 2) throw DomainError("the battery runs on binary samples");
  if (sample.size() < kMinBatteryLength) {
    throw DomainError("sample of " + std::to_string(sample.size()) +
                      " bits is shorter than the minimum 128");
  }
  if (!(config.alpha > 0 && config.alpha < 1)) throw DomainError("alpha must lie in (0, 1)");
  for (std::size_t m : config.block_sizes) {
    if (m == 0 || m > sample.size()) throw DomainError("block size outside 1..sample length");
  }
  const unsigned m = config.serial_pattern_length;
  const auto log2n = static_cast<unsigned>(std::floor(std::log2(static_cast<double>(sample.size()))));
  if (m < 2 || m + 2 >= log2n) {
    throw DomainError("serial pattern length must satisfy 2 <= m < log2(n) - 2");
  }
  return Battery(sample, config).run();
}

DigitString parse_bit_sample(std::string_view text) {
  std::vector<Digit> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<Digit>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError("bit samples may only contain '0', '1' and whitespace", i);
    }
  }
  return DigitString(2, std::move(bits));
}

RelativeWitness relative_random_witness(const Rational& a1, const Rational& b1,
                                        const Rational& a2, const Rational& b2,
                                        const SequenceSpec& spec) {
  if (!(a1 < b1) || !(a2 < b2)) throw DomainError("intervals require lo < hi");
  const bool inside = a1 <= a2 && b2 <= b1;
  const bool strict = a1 != a2 || b1 != b2;
  if (!inside || !strict) throw DomainError("[a2, b2] must lie strictly inside [a1, b1]");
  if (spec.base() != 2) throw DomainError("relative encodings are binary");

  Rational inner = value_exact(spec);
  Rational w = affine_from_unit(inner, a2, b2);
  SequenceSpec outer = expand(affine_to_unit(w, a1, b1), 2);
  const bool differ = outer != expand(inner, 2);
  return RelativeWitness{std::move(w), std::move(outer), differ};
}

}  // namespace dedekind
