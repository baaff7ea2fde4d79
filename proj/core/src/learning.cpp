#include "indsup/learning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "indsup/complexity.hpp"
#include "indsup/rng.hpp"
#include "indsup/separation.hpp"
#include "indsup/text.hpp"

namespace indsup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

ErmResult erm(const Scenario& scenario, const Dataset& dataset) {
  if (dataset.samples.empty()) {
    throw EmptyDatasetError("cannot run empirical risk minimization on an empty dataset");
  }
  const std::size_t num_h = scenario.hclass().size();
  const std::size_t num_t = scenario.tclass().size();
  const std::size_t c = scenario.y_space().size();
  const std::size_t s = scenario.o_space().size();
  const std::size_t n = scenario.x_space().size();

  // Precompute every loss value once; the per-candidate sum then adds the
  // same doubles in the same dataset order as empirical_annotation_risk,
  // which keeps the two bit-identical.
  std::vector<double> table(num_t * n * c * s);
  for (std::size_t t = 0; t < num_t; ++t) {
    const auto& member = scenario.tclass().member(t);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t label = 0; label < c; ++label) {
        for (std::size_t o = 0; o < s; ++o) {
          table[((t * n + x) * c + label) * s + o] =
              annotation_loss(scenario.loss(), label, member, x, o);
        }
      }
    }
  }
  ErmResult result;
  bool have = false;
  for (std::size_t h = 0; h < num_h; ++h) {
    const auto& predictions = scenario.hclass().table(h);
    for (std::size_t t = 0; t < num_t; ++t) {
      double sum = 0;
      for (const auto& [x, o] : dataset.samples) {
        sum += table[((t * n + x) * c + predictions[x]) * s + o];
      }
      const double risk = sum / static_cast<double>(dataset.samples.size());
      if (!have || risk < result.empirical_risk) {
        have = true;
        result.h_index = h;
        result.t_index = t;
        result.empirical_risk = risk;
        result.ties = 1;
      } else if (risk == result.empirical_risk) {
        ++result.ties;
      }
    }
  }
  result.true_classification_risk =
      classification_risk(scenario, scenario.hclass().table(result.h_index));
  return result;
}

BoundInputs compute_bound_inputs(const Scenario& scenario, double delta, const BoundCaps& caps) {
  BoundInputs inputs;
  inputs.delta = delta;
  inputs.b = loss_ceiling(scenario);

  const std::size_t pairs = scenario.hclass().size() * scenario.tclass().size();
  if (pairs <= caps.eta_pair_cap) {
    inputs.eta_source = "eta";
    try {
      inputs.eta = identifiability_level(scenario).eta;
    } catch (const NoWrongHypothesisError&) {
      inputs.eta = kInf;
    }
  } else if (scenario.loss().kind == LossKind::cross_entropy) {
    inputs.eta_source = "gamma";
    inputs.eta = separation_degree(scenario).gamma;
  } else {
    inputs.eta_source = "gamma_c";
    const ConcentrationReport report = concentration_degree(scenario, scenario.loss().sets);
    inputs.eta = report.value;
  }

  const std::size_t n = scenario.x_space().size();
  const std::size_t s = scenario.o_space().size();
  if (n * s <= caps.exact_point_cap) {
    inputs.d_source = "exact";
    DimensionOptions options;
    options.point_cap = caps.exact_point_cap;
    inputs.d = weak_vc_major_dimension(scenario, options).value;
  } else {
    inputs.d_source = "composition_bound";
    DimensionOptions h_options;
    h_options.point_cap = caps.natarajan_cap;
    const std::size_t d_h = natarajan_dimension(scenario.hclass(), h_options).value;
    DimensionOptions t_options;
    t_options.point_cap = caps.transition_point_cap;
    const std::size_t d_t =
        transition_weak_vc_dimension(scenario.tclass(), scenario.loss(), n, t_options)
            .result.value;
    inputs.d = dimension_bound(d_h, d_t, scenario.y_space().size());
  }
  return inputs;
}

double theorem_bound(double b, double eta, std::size_t d, std::size_t m, double delta) {
  if (!(b > 0) || std::isnan(b) || std::isinf(b)) {
    throw BadParamsError("the bound needs a positive finite loss ceiling");
  }
  if (!(eta > 0) || std::isnan(eta)) {
    throw BadParamsError("the bound needs a positive identifiability value");
  }
  if (m < 1) {
    throw BadParamsError("the bound needs at least one sample");
  }
  if (!(delta > 0) || !(delta < 1)) {
    throw BadParamsError("the confidence parameter must lie strictly between 0 and 1");
  }
  const double g = gamma_bar(m, d);
  const double md = static_cast<double>(m);
  const double term =
      std::sqrt(2.0 * g / md) + 4.0 * g / md + std::sqrt(2.0 * std::log(4.0 / delta) / md);
  return (2.0 * b / eta) * term;
}

std::vector<CurveRecord> learning_curve(const Scenario& scenario, const CurveParams& params,
                                        const BoundInputs& inputs) {
  if (params.m_grid.empty()) {
    throw EmptyGridError("the learning curve needs at least one sample size");
  }
  for (std::size_t k = 1; k < params.m_grid.size(); ++k) {
    if (params.m_grid[k] <= params.m_grid[k - 1]) {
      throw BadParamsError("the sample-size grid must be strictly increasing");
    }
  }
  if (params.m_grid.front() == 0) {
    throw BadParamsError("sample sizes must be positive");
  }
  if (params.trials == 0) {
    throw BadParamsError("the learning curve needs at least one trial");
  }

  std::vector<CurveRecord> records;
  records.reserve(params.m_grid.size() * params.trials);
  for (std::size_t m : params.m_grid) {
    const double bound = (inputs.eta > 0 && inputs.b > 0)
                             ? theorem_bound(inputs.b, inputs.eta, inputs.d, m, params.delta)
                             : kInf;
    for (std::size_t trial = 0; trial < params.trials; ++trial) {
      CurveRecord record;
      record.m = m;
      record.trial = trial;
      record.seed = derive_seed(params.base_seed, trial);
      const Dataset dataset = sample_dataset(scenario, m, record.seed);
      record.risk = erm(scenario, dataset).true_classification_risk;
      record.bound = bound;
      record.inputs = inputs;
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::vector<CurveRecord> learning_curve(const Scenario& scenario, const CurveParams& params) {
  return learning_curve(scenario, params, compute_bound_inputs(scenario, params.delta));
}

double bound_coverage(const Scenario& scenario, std::size_t m, double delta, std::size_t trials,
                      std::uint64_t base_seed, const BoundCaps& caps) {
  if (trials == 0) {
    throw BadParamsError("coverage needs at least one trial");
  }
  const BoundInputs inputs = compute_bound_inputs(scenario, delta, caps);
  CurveParams params;
  params.m_grid = {m};
  params.trials = trials;
  params.base_seed = base_seed;
  params.delta = delta;
  const auto records = learning_curve(scenario, params, inputs);
  std::size_t covered = 0;
  for (const auto& record : records) {
    if (record.risk <= record.bound) {
      ++covered;
    }
  }
  return static_cast<double>(covered) / static_cast<double>(records.size());
}

void write_curve_csv(std::ostream& out, const std::vector<CurveRecord>& records) {
  out << "m,trial,seed,risk,bound,b,eta,d,delta\n";
  for (const auto& r : records) {
    out << format_size(r.m) << ',' << format_size(r.trial) << ',' << std::to_string(r.seed)
        << ',' << format_double(r.risk) << ',' << format_double(r.bound) << ','
        << format_double(r.inputs.b) << ',' << format_double(r.inputs.eta) << ','
        << format_size(r.inputs.d) << ',' << format_double(r.inputs.delta) << '\n';
  }
}

namespace {

double interpolated_quantile(const std::vector<double>& sorted, double q) {
  const std::size_t count = sorted.size();
  if (count == 1) {
    return sorted.front();
  }
  const double pos = q * static_cast<double>(count - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= count) {
    return sorted.back();
  }
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

std::vector<CurveAggregate> aggregate_curve(const std::vector<CurveRecord>& records) {
  std::vector<CurveAggregate> aggregates;
  std::size_t start = 0;
  while (start < records.size()) {
    std::size_t stop = start;
    while (stop < records.size() && records[stop].m == records[start].m) {
      ++stop;
    }
    std::vector<double> risks;
    risks.reserve(stop - start);
    double total = 0;
    for (std::size_t k = start; k < stop; ++k) {
      risks.push_back(records[k].risk);
      total += records[k].risk;
    }
    std::sort(risks.begin(), risks.end());
    CurveAggregate agg;
    agg.m = records[start].m;
    agg.mean_risk = total / static_cast<double>(risks.size());
    agg.q05 = interpolated_quantile(risks, 0.05);
    agg.q95 = interpolated_quantile(risks, 0.95);
    agg.bound = records[start].bound;
    aggregates.push_back(agg);
    start = stop;
  }
  return aggregates;
}

void write_aggregate_csv(std::ostream& out, const std::vector<CurveAggregate>& aggregates) {
  out << "m,mean_risk,q05,q95,bound\n";
  for (const auto& a : aggregates) {
    out << format_size(a.m) << ',' << format_double(a.mean_risk) << ',' << format_double(a.q05)
        << ',' << format_double(a.q95) << ',' << format_double(a.bound) << '\n';
  }
}

}  // namespace indsup
