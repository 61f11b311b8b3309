#include <algorithm>
#include <vector>

#include "lpleak/error.hpp"
#include "lpleak/evaluation.hpp"
#include "lpleak/random.hpp"

namespace lpleak {
namespace {

void check_lists(std::span<const double> pos, std::span<const double> neg) {
  if (pos.empty() || neg.empty()) throw ArgumentError("auc: positive and negative lists must be non-empty");
}

}  // namespace

AucResult auc_exact(std::span<const double> pos, std::span<const double> neg) {
  check_lists(pos, neg);
  std::vector<double> sorted(neg.begin(), neg.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t wins = 0, ties = 0;
  for (double s : pos) {
    auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), s);
    wins += std::uint64_t(lo - sorted.begin());
    ties += std::uint64_t(hi - lo);
  }
  AucResult r;
  r.positives = pos.size();
  r.negatives = neg.size();
  r.mode = AucMode::exact;
  r.value = double(2 * wins + ties) / (2.0 * double(pos.size()) * double(neg.size()));
  return r;
}

AucResult auc_sampled(std::span<const double> pos, std::span<const double> neg, std::size_t n, std::uint64_t seed) {
  check_lists(pos, neg);
  if (n == 0) throw ArgumentError("auc: sample count must be >= 1");
  Rng rng(seed);
  std::uint64_t wins = 0, ties = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = pos[uniform_index(rng, pos.size())];
    const double b = neg[uniform_index(rng, neg.size())];
    if (a > b) ++wins;
    else if (a == b) ++ties;
  }
  AucResult r;
  r.positives = pos.size();
  r.negatives = neg.size();
  r.mode = AucMode::sampled;
  r.samples = n;
  r.value = double(2 * wins + ties) / (2.0 * double(n));
  return r;
}

AucResult auc(std::span<const double> pos, std::span<const double> neg, const AucPolicy& policy,
              std::uint64_t seed) {
  check_lists(pos, neg);
  const double comparisons = double(pos.size()) * double(neg.size());
  if (comparisons <= double(policy.exact_max_comparisons)) return auc_exact(pos, neg);
  return auc_sampled(pos, neg, policy.samples, seed);
}

}  // namespace lpleak
