#include "indsup/complexity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "indsup/rng.hpp"

namespace indsup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Visit all size-k subsets of {0, ..., n-1} in lexicographic order; stop when
// the visitor returns true. Returns whether a visit succeeded.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& visit) {
  if (k > n) {
    return false;
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t p = 0; p < k; ++p) {
    idx[p] = p;
  }
  while (true) {
    if (visit(idx)) {
      return true;
    }
    // Advance to the next combination.
    std::size_t p = k;
    while (p > 0) {
      --p;
      if (idx[p] + (k - p) < n) {
        ++idx[p];
        for (std::size_t q = p + 1; q < k; ++q) {
          idx[q] = idx[q - 1] + 1;
        }
        break;
      }
      if (p == 0) {
        return false;
      }
    }
    if (k == 0) {
      return false;
    }
  }
}

std::vector<std::size_t> random_subset(Engine& engine, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t p = 0; p < n; ++p) {
    pool[p] = p;
  }
  for (std::size_t p = 0; p < k; ++p) {
    const std::size_t r = p + sample_index(engine, n - p);
    std::swap(pool[p], pool[r]);
  }
  std::vector<std::size_t> subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(subset.begin(), subset.end());
  return subset;
}

// ----- multi-label shattering ----------------------------------------------

struct LabelWitness {
  std::vector<std::size_t> f0;
  std::vector<std::size_t> f1;
};

// Does the class realize every f0/f1 mixture over the given instances? Only
// pairs of realized behaviors can serve as the endpoints, because the all-f0
// and all-f1 mixtures must themselves be realized.
std::optional<LabelWitness> shatters_multilabel(const HypothesisClass& hclass,
                                                const std::vector<std::size_t>& points) {
  const std::size_t k = points.size();
  if (k >= 64) {
    return std::nullopt;  // would need 2^k behaviors; unreachable in memory
  }
  std::set<std::vector<std::size_t>> behaviors;
  std::vector<std::size_t> proj(k);
  for (const auto& table : hclass.tables()) {
    for (std::size_t p = 0; p < k; ++p) {
      proj[p] = table[points[p]];
    }
    behaviors.insert(proj);
  }
  if (behaviors.size() < (std::size_t{1} << k)) {
    return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> ordered(behaviors.begin(), behaviors.end());
  std::vector<std::size_t> mix(k);
  for (std::size_t a = 0; a < ordered.size(); ++a) {
    for (std::size_t b = a + 1; b < ordered.size(); ++b) {
      bool pointwise_different = true;
      for (std::size_t p = 0; p < k; ++p) {
        pointwise_different = pointwise_different && ordered[a][p] != ordered[b][p];
      }
      if (!pointwise_different) {
        continue;
      }
      bool all_present = true;
      for (std::size_t pattern = 0; pattern < (std::size_t{1} << k) && all_present; ++pattern) {
        for (std::size_t p = 0; p < k; ++p) {
          mix[p] = (pattern & (std::size_t{1} << p)) ? ordered[b][p] : ordered[a][p];
        }
        all_present = behaviors.count(mix) > 0;
      }
      if (all_present) {
        return LabelWitness{ordered[a], ordered[b]};
      }
    }
  }
  return std::nullopt;
}

// ----- binary shattering over bitmask columns ------------------------------

bool shatters_binary(const std::vector<std::uint64_t>& masks,
                     const std::vector<std::size_t>& points) {
  const std::size_t k = points.size();
  if (k >= 64) {
    return false;  // would need 2^k masks; unreachable in memory
  }
  const std::size_t want = std::size_t{1} << k;
  std::unordered_set<std::uint64_t> patterns;
  for (std::uint64_t mask : masks) {
    std::uint64_t pattern = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (mask & (std::uint64_t{1} << points[p])) {
        pattern |= std::uint64_t{1} << p;
      }
    }
    patterns.insert(pattern);
    if (patterns.size() == want) {
      return true;
    }
  }
  return false;
}

std::size_t log2_floor(std::size_t v) {
  std::size_t bits = 0;
  while (v > 1) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

struct BinarySearchOutcome {
  std::size_t value = 0;
  bool exhaustive = true;
  std::vector<std::size_t> witness;
};

// Largest shattered point set for one bitmask family. Level-by-level with the
// monotone stop: if no size-k set shatters, no larger one can.
BinarySearchOutcome binary_vc(const std::vector<std::uint64_t>& masks, std::size_t num_points,
                              const DimensionOptions& options, const std::string& what) {
  BinarySearchOutcome out;
  const std::size_t ceiling = std::min({num_points, options.point_cap, log2_floor(masks.size())});
  std::size_t k = 1;
  for (; k <= ceiling; ++k) {
    std::vector<std::size_t> found;
    const bool any = for_each_subset(num_points, k, [&](const std::vector<std::size_t>& idx) {
      if (shatters_binary(masks, idx)) {
        found = idx;
        return true;
      }
      return false;
    });
    if (!any) {
      return out;
    }
    out.value = k;
    out.witness = std::move(found);
  }
  const bool capped = k > options.point_cap && options.point_cap < num_points &&
                      log2_floor(masks.size()) > options.point_cap;
  if (!capped) {
    return out;
  }
  if (!options.allow_randomized) {
    throw CapExceededError(what + ": a shattered set reached the cap of " +
                           std::to_string(options.point_cap) +
                           " points; enable the randomized fallback or raise the cap");
  }
  Engine engine(options.seed);
  for (std::size_t level = out.value + 1; level <= num_points; ++level) {
    bool found = false;
    for (std::size_t trial = 0; trial < options.randomized_trials && !found; ++trial) {
      const auto subset = random_subset(engine, num_points, level);
      if (shatters_binary(masks, subset)) {
        out.value = level;
        out.witness = subset;
        out.exhaustive = false;
        found = true;
      }
    }
    if (!found) {
      break;
    }
  }
  out.exhaustive = false;
  return out;
}

}  // namespace

DimensionResult natarajan_dimension(const HypothesisClass& hclass,
                                    const DimensionOptions& options) {
  const std::size_t n = hclass.num_instances();
  DimensionResult result;
  const std::size_t ceiling = std::min(n, options.point_cap);
  std::size_t k = 1;
  for (; k <= ceiling; ++k) {
    std::vector<std::size_t> found_points;
    std::optional<LabelWitness> found_pair;
    const bool any = for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
      auto pair = shatters_multilabel(hclass, idx);
      if (pair) {
        found_points = idx;
        found_pair = std::move(pair);
        return true;
      }
      return false;
    });
    if (!any) {
      return result;
    }
    result.value = k;
    result.witness_points = std::move(found_points);
    result.witness_f0 = std::move(found_pair->f0);
    result.witness_f1 = std::move(found_pair->f1);
  }
  if (ceiling == n) {
    return result;  // the whole universe was searched
  }
  if (!options.allow_randomized) {
    throw CapExceededError("multi-label dimension search: a shattered set reached the cap of " +
                           std::to_string(options.point_cap) +
                           " instances; enable the randomized fallback or raise the cap");
  }
  Engine engine(options.seed);
  for (std::size_t level = result.value + 1; level <= n; ++level) {
    bool found = false;
    for (std::size_t trial = 0; trial < options.randomized_trials && !found; ++trial) {
      const auto subset = random_subset(engine, n, level);
      auto pair = shatters_multilabel(hclass, subset);
      if (pair) {
        result.value = level;
        result.witness_points = subset;
        result.witness_f0 = pair->f0;
        result.witness_f1 = pair->f1;
        found = true;
      }
    }
    if (!found) {
      break;
    }
  }
  result.exhaustive = false;
  return result;
}

DimensionResult weak_vc_major_from_matrix(const LossValueMatrix& matrix,
                                          const DimensionOptions& options) {
  if (matrix.values.empty()) {
    throw BadParamsError("loss value matrix has no functions");
  }
  if (matrix.num_points == 0) {
    throw BadParamsError("loss value matrix has no points");
  }
  if (matrix.num_points > 64) {
    throw CapExceededError("threshold dimension search supports at most 64 points, got " +
                           std::to_string(matrix.num_points));
  }
  for (const auto& row : matrix.values) {
    if (row.size() != matrix.num_points) {
      throw LengthMismatchError("loss value matrix rows disagree on the point count");
    }
  }

  // Only realized finite values matter as thresholds: the indicator family is
  // constant between consecutive realized values, all-ones below the minimum
  // and all-zeros at or above the maximum.
  std::set<double> thresholds;
  for (const auto& row : matrix.values) {
    for (double v : row) {
      if (std::isfinite(v)) {
        thresholds.insert(v);
      }
    }
  }

  DimensionResult best;
  bool all_exhaustive = true;
  for (double u : thresholds) {
    std::set<std::uint64_t> distinct;
    for (const auto& row : matrix.values) {
      std::uint64_t mask = 0;
      for (std::size_t p = 0; p < matrix.num_points; ++p) {
        if (row[p] > u) {
          mask |= std::uint64_t{1} << p;
        }
      }
      distinct.insert(mask);
    }
    if (log2_floor(distinct.size()) <= best.value && best.witness_threshold) {
      continue;  // cannot strictly improve on the current maximum
    }
    std::vector<std::uint64_t> masks(distinct.begin(), distinct.end());
    const BinarySearchOutcome outcome =
        binary_vc(masks, matrix.num_points, options, "threshold dimension search");
    all_exhaustive = all_exhaustive && outcome.exhaustive;
    if (!best.witness_threshold || outcome.value > best.value) {
      best.value = outcome.value;
      best.witness_points = outcome.witness;
      best.witness_threshold = u;
    }
  }
  best.exhaustive = all_exhaustive;
  return best;
}

DimensionResult weak_vc_major_dimension(const HypothesisClass& hclass,
                                        const TransitionClass& tclass, const LossSpec& loss,
                                        std::size_t num_instances,
                                        const DimensionOptions& options) {
  const std::size_t s = tclass.annotation_space().size();
  LossValueMatrix matrix;
  matrix.num_points = num_instances * s;
  matrix.values.reserve(hclass.size() * tclass.size());
  for (std::size_t h = 0; h < hclass.size(); ++h) {
    const auto& table = hclass.table(h);
    for (std::size_t t = 0; t < tclass.size(); ++t) {
      const auto& member = tclass.member(t);
      std::vector<double> row(matrix.num_points);
      for (std::size_t x = 0; x < num_instances; ++x) {
        for (std::size_t o = 0; o < s; ++o) {
          row[x * s + o] = annotation_loss(loss, table[x], member, x, o);
        }
      }
      matrix.values.push_back(std::move(row));
    }
  }
  return weak_vc_major_from_matrix(matrix, options);
}

DimensionResult weak_vc_major_dimension(const Scenario& scenario,
                                        const DimensionOptions& options) {
  return weak_vc_major_dimension(scenario.hclass(), scenario.tclass(), scenario.loss(),
                                 scenario.x_space().size(), options);
}

TransitionDimensionResult transition_weak_vc_dimension(const TransitionClass& tclass,
                                                       const LossSpec& loss,
                                                       std::size_t num_instances,
                                                       const DimensionOptions& options) {
  const std::size_t c = tclass.label_space().size();
  const std::size_t s = tclass.annotation_space().size();
  bool all_constant = true;
  for (const auto& member : tclass.members()) {
    all_constant = all_constant && member.constant();
  }

  TransitionDimensionResult out;
  LossValueMatrix matrix;
  if (all_constant) {
    // Constant members make every instance's column block identical, and
    // duplicated points can never enlarge a shattered set.
    out.instance_collapsed = true;
    matrix.num_points = c * s;
    for (std::size_t t = 0; t < tclass.size(); ++t) {
      const auto& member = tclass.member(t);
      std::vector<double> row(matrix.num_points);
      for (std::size_t label = 0; label < c; ++label) {
        for (std::size_t o = 0; o < s; ++o) {
          row[label * s + o] = annotation_loss(loss, label, member, 0, o);
        }
      }
      matrix.values.push_back(std::move(row));
    }
  } else {
    matrix.num_points = num_instances * c * s;
    for (std::size_t t = 0; t < tclass.size(); ++t) {
      const auto& member = tclass.member(t);
      std::vector<double> row(matrix.num_points);
      for (std::size_t x = 0; x < num_instances; ++x) {
        for (std::size_t label = 0; label < c; ++label) {
          for (std::size_t o = 0; o < s; ++o) {
            row[(x * c + label) * s + o] = annotation_loss(loss, label, member, x, o);
          }
        }
      }
      matrix.values.push_back(std::move(row));
    }
  }
  out.result = weak_vc_major_from_matrix(matrix, options);
  return out;
}

bool verify_natarajan_witness(const HypothesisClass& hclass, const DimensionResult& result) {
  const std::size_t k = result.witness_points.size();
  if (result.value != k) {
    return false;
  }
  if (k == 0) {
    return true;
  }
  if (result.witness_f0.size() != k || result.witness_f1.size() != k) {
    return false;
  }
  std::set<std::size_t> distinct(result.witness_points.begin(), result.witness_points.end());
  if (distinct.size() != k) {
    return false;
  }
  for (std::size_t p = 0; p < k; ++p) {
    if (result.witness_points[p] >= hclass.num_instances() ||
        result.witness_f0[p] == result.witness_f1[p]) {
      return false;
    }
  }
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << k); ++pattern) {
    bool realized = false;
    for (const auto& table : hclass.tables()) {
      bool match = true;
      for (std::size_t p = 0; p < k && match; ++p) {
        const std::size_t want = (pattern & (std::size_t{1} << p)) ? result.witness_f1[p]
                                                                   : result.witness_f0[p];
        match = table[result.witness_points[p]] == want;
      }
      realized = realized || match;
    }
    if (!realized) {
      return false;
    }
  }
  return true;
}

bool verify_weak_vc_witness(const LossValueMatrix& matrix, const DimensionResult& result) {
  const std::size_t k = result.witness_points.size();
  if (result.value != k) {
    return false;
  }
  if (k == 0) {
    return true;
  }
  if (!result.witness_threshold) {
    return false;
  }
  const double u = *result.witness_threshold;
  std::set<std::size_t> distinct(result.witness_points.begin(), result.witness_points.end());
  if (distinct.size() != k) {
    return false;
  }
  for (std::size_t p : result.witness_points) {
    if (p >= matrix.num_points) {
      return false;
    }
  }
  std::set<std::vector<bool>> patterns;
  for (const auto& row : matrix.values) {
    std::vector<bool> pattern(k);
    for (std::size_t p = 0; p < k; ++p) {
      pattern[p] = row[result.witness_points[p]] > u;
    }
    patterns.insert(pattern);
  }
  return patterns.size() == (std::size_t{1} << k);
}

std::size_t dimension_bound(std::size_t d_h, std::size_t d_t, std::size_t num_labels) {
  if (num_labels < 2) {
    throw BadParamsError("the composition bound needs at least two labels");
  }
  if (d_h + d_t == 0) {
    return 0;
  }
  const double total = static_cast<double>(d_h + d_t);
  const double raw = 2.0 * (total * std::log(6.0 * total) +
                            2.0 * static_cast<double>(d_h) * std::log(static_cast<double>(num_labels)));
  return static_cast<std::size_t>(std::ceil(raw));
}

double gamma_bar(std::size_t m, std::size_t d) {
  if (m == 0) {
    throw BadParamsError("the growth term needs at least one sample");
  }
  const std::size_t top = std::min(d, m);

  // Exact integer path while the partial sums fit in 128 bits.
  using u128 = unsigned __int128;
  const u128 max128 = ~u128{0};
  u128 sum = 1;   // binom(m, 0)
  u128 term = 1;
  bool exact = true;
  for (std::size_t j = 1; j <= top && exact; ++j) {
    const u128 numer = m - j + 1;
    if (term > max128 / numer) {
      exact = false;
      break;
    }
    term = term * numer / j;
    if (sum > max128 - term) {
      exact = false;
      break;
    }
    sum += term;
  }
  if (exact) {
    return std::log(2.0L) + std::log(static_cast<long double>(sum));
  }

  // Log-space fallback: logaddexp over log binom(m, j).
  long double logsum = 0;  // log binom(m, 0)
  for (std::size_t j = 1; j <= top; ++j) {
    const long double lj = lgammal(static_cast<long double>(m) + 1) -
                           lgammal(static_cast<long double>(j) + 1) -
                           lgammal(static_cast<long double>(m - j) + 1);
    const long double hi = std::max(logsum, lj);
    const long double lo = std::min(logsum, lj);
    logsum = hi + std::log1pl(std::exp(lo - hi));
  }
  return static_cast<double>(std::log(2.0L) + logsum);
}

RademacherEstimate rademacher_estimate(const Scenario& scenario, std::size_t m,
                                       std::size_t mc_trials, std::uint64_t seed) {
  if (m == 0) {
    throw BadParamsError("the complexity estimate needs at least one sample");
  }
  if (mc_trials < 2) {
    throw BadParamsError("the complexity estimate needs at least two trials");
  }
  loss_ceiling(scenario);  // rejects unbounded losses up front

  const std::size_t num_h = scenario.hclass().size();
  const std::size_t num_t = scenario.tclass().size();
  const auto& dx = scenario.dx().probs();

  std::vector<double> trial_values(mc_trials);
  std::vector<std::size_t> xs(m);
  std::vector<std::size_t> os(m);
  std::vector<double> eps(m);
  for (std::size_t trial = 0; trial < mc_trials; ++trial) {
    Engine engine(derive_seed(seed, trial));
    for (std::size_t i = 0; i < m; ++i) {
      xs[i] = sample_categorical(engine, dx);
      const auto& row = scenario.t0().row(xs[i], scenario.h0()[xs[i]]).probs();
      os[i] = sample_categorical(engine, row);
      eps[i] = (engine() & 1) ? 1.0 : -1.0;
    }
    double sup = 0;
    for (std::size_t h = 0; h < num_h; ++h) {
      const auto& table = scenario.hclass().table(h);
      for (std::size_t t = 0; t < num_t; ++t) {
        const auto& member = scenario.tclass().member(t);
        double total = 0;
        for (std::size_t i = 0; i < m; ++i) {
          total += eps[i] * annotation_loss(scenario.loss(), table[xs[i]], member, xs[i], os[i]);
        }
        sup = std::max(sup, std::abs(total));
      }
    }
    trial_values[trial] = sup / static_cast<double>(m);
  }

  RademacherEstimate estimate;
  estimate.sample_size = m;
  estimate.trials = mc_trials;
  for (double v : trial_values) {
    estimate.mean += v;
  }
  estimate.mean /= static_cast<double>(mc_trials);
  double ss = 0;
  for (double v : trial_values) {
    ss += (v - estimate.mean) * (v - estimate.mean);
  }
  estimate.std_error = std::sqrt(ss / static_cast<double>(mc_trials - 1)) /
                       std::sqrt(static_cast<double>(mc_trials));
  return estimate;
}

}  // namespace indsup
