#pragma once
// Seeded random instance families.  Preference families rejection-sample
// until the requested condition holds; the sampler is hand-rolled on top of
// mt19937_64 so identical seeds give identical instances on every platform.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "usc/document.hpp"

namespace usc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, n); rejection sampling keeps the stream stable across
  // standard libraries.
  int below(int n) {
    if (n <= 0) throw std::invalid_argument("Rng::below needs n > 0");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % (std::uint64_t)n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return (int)(x % (std::uint64_t)n);
  }

  long long between(long long lo, long long hi) {  // inclusive
    return lo + (long long)below((int)(hi - lo + 1));
  }

  bool coin() { return next_u64() & 1; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = (int)v.size() - 1; i > 0; --i)
      std::swap(v[i], v[below(i + 1)]);
  }

 private:
  std::mt19937_64 eng_;
};

enum class InstanceFamily {
  kUscPreferences,     // ranked-subset firms passing the unidirectional check
  kSubstitutes,        // ranked-subset firms passing the substitutes check
  kSchoolRules,        // school rules (unidirectional by construction; verified)
  kValuations,         // quasi-linear block only
};

const char* family_name(InstanceFamily f);
InstanceFamily family_from_name(const std::string& name);

struct GeneratorConfig {
  InstanceFamily family = InstanceFamily::kUscPreferences;
  std::uint64_t seed = 0;
  int firms = 2;
  std::vector<int> group_sizes = {2, 2};
  int max_ranked_subsets = 4;   // preference families: list length 1..this
  int max_attempts = 50000;     // rejection budget per firm
  long long value_min = -5;     // valuation family, inclusive
  long long value_max = 10;
  int max_capacity = 4;         // school family: capacity 1..this
};

class SamplingBudgetExhausted : public std::runtime_error {
 public:
  SamplingBudgetExhausted(const std::string& what, int attempts)
      : std::runtime_error(what + " after " + std::to_string(attempts) +
                           " attempts") {}
};

InstanceDocument generate_instance(const GeneratorConfig& cfg);

}  // namespace usc
