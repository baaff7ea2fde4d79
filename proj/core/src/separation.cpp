#include "indsup/separation.hpp"

#include <cmath>
#include <string>

#include "indsup/text.hpp"

namespace indsup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<std::size_t>> reachable_labels(const HypothesisClass& hclass) {
  std::vector<std::vector<std::size_t>> reachable;
  reachable.reserve(hclass.num_instances());
  for (std::size_t x = 0; x < hclass.num_instances(); ++x) {
    reachable.push_back(hclass.labels_at(x));
  }
  return reachable;
}

double kl_value(const Distribution& p, const Distribution& q) {
  const DivergenceValue v = kl(p, q);
  return v.is_finite() ? v.value() : kInf;
}

}  // namespace

SeparationProblem separation_view(const Scenario& scenario) {
  return SeparationProblem{scenario.dx(), scenario.h0(), scenario.hclass(), scenario.tclass()};
}

SeparationReport separation_degree(const SeparationProblem& problem) {
  const std::size_t n = problem.hclass.num_instances();
  const std::size_t c = problem.hclass.num_labels();
  const std::size_t members = problem.tclass.size();
  const auto reachable = reachable_labels(problem.hclass);

  SeparationReport report;
  report.num_labels = c;
  report.pairwise.assign(c * c, kInf);
  for (std::size_t i = 0; i < c; ++i) {
    report.pairwise[i * c + i] = std::numeric_limits<double>::quiet_NaN();
  }
  report.grid_caveat = problem.tclass.from_grid();

  // Single scan in (x, j, member_i, member_j) order; strict < keeps the
  // lexicographically first witness.
  for (std::size_t x = 0; x < n; ++x) {
    if (problem.dx.prob(x) == 0) {
      continue;
    }
    const std::size_t i = problem.h0[x];
    for (std::size_t j : reachable[x]) {
      if (j == i) {
        continue;
      }
      for (std::size_t ti = 0; ti < members; ++ti) {
        const Distribution& di = problem.tclass.member(ti).row(x, i);
        for (std::size_t tj = 0; tj < members; ++tj) {
          const Distribution& dj = problem.tclass.member(tj).row(x, j);
          const double val = kl_value(di, dj);
          if (val < report.pairwise[i * c + j]) {
            report.pairwise[i * c + j] = val;
          }
          if (val < report.gamma) {
            report.gamma = val;
            report.witness = SeparationWitness{x, i, j, ti, tj};
          }
        }
      }
    }
  }
  return report;
}

SeparationReport separation_degree(const Scenario& scenario) {
  return separation_degree(separation_view(scenario));
}

PairwiseSeparation pairwise_separation(const SeparationProblem& problem, std::size_t i,
                                       std::size_t j) {
  const std::size_t c = problem.hclass.num_labels();
  if (i >= c || j >= c) {
    throw IndexOutOfRangeError("pairwise separation label out of range");
  }
  if (i == j) {
    throw SameLabelError("pairwise separation needs two distinct labels");
  }
  const std::size_t n = problem.hclass.num_instances();
  const std::size_t members = problem.tclass.size();
  PairwiseSeparation result;
  for (std::size_t x = 0; x < n; ++x) {
    if (problem.dx.prob(x) == 0 || problem.h0[x] != i) {
      continue;
    }
    bool j_reachable = false;
    for (std::size_t label : problem.hclass.labels_at(x)) {
      j_reachable = j_reachable || label == j;
    }
    if (!j_reachable) {
      continue;
    }
    for (std::size_t ti = 0; ti < members; ++ti) {
      const Distribution& di = problem.tclass.member(ti).row(x, i);
      for (std::size_t tj = 0; tj < members; ++tj) {
        const Distribution& dj = problem.tclass.member(tj).row(x, j);
        const double val = kl_value(di, dj);
        if (val < result.value) {
          result.value = val;
          result.witness = SeparationWitness{x, i, j, ti, tj};
        }
      }
    }
  }
  return result;
}

PairwiseSeparation pairwise_separation(const Scenario& scenario, std::size_t i, std::size_t j) {
  return pairwise_separation(separation_view(scenario), i, j);
}

ConcentrationReport concentration_degree(const SeparationProblem& problem,
                                         const OutcomeSets& sets) {
  const std::size_t c = problem.hclass.num_labels();
  const std::size_t s = problem.tclass.annotation_space().size();
  if (sets.size() != c) {
    throw BadSetError("need one outcome set per label");
  }
  for (const auto& mask : sets) {
    if (mask.size() != s) {
      throw BadSetError("outcome set mask length does not match the outcome space");
    }
  }
  const std::size_t n = problem.hclass.num_instances();
  const std::size_t members = problem.tclass.size();

  ConcentrationReport report;
  std::vector<double> mass(members * c);
  for (std::size_t x = 0; x < n; ++x) {
    if (problem.dx.prob(x) == 0) {
      continue;
    }
    // Both labels range over the full label set: the margin protects every
    // row, not only the ones the target labeling uses at x.
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t k = 0; k < members; ++k) {
        const auto& row = problem.tclass.member(k).row(x, i).probs();
        for (std::size_t l = 0; l < c; ++l) {
          double total = 0;
          for (std::size_t o = 0; o < s; ++o) {
            if (sets[l][o]) {
              total += row[o];
            }
          }
          mass[k * c + l] = total;
        }
      }
      for (std::size_t j = 0; j < c; ++j) {
        if (j == i) {
          continue;
        }
        for (std::size_t k = 0; k < members; ++k) {
          const double val = mass[k * c + i] - mass[k * c + j];
          if (val < report.value) {
            report.value = val;
            report.witness = ConcentrationWitness{x, i, j, k};
          }
        }
      }
    }
  }
  return report;
}

ConcentrationReport concentration_degree(const Scenario& scenario, const OutcomeSets& sets) {
  return concentration_degree(separation_view(scenario), sets);
}

namespace {

double dot(const std::vector<double>& u, const Distribution& d) {
  const auto& p = d.probs();
  double total = 0;
  for (std::size_t o = 0; o < p.size(); ++o) {
    total += u[o] * p[o];
  }
  return total;
}

}  // namespace

EvidenceReport evidence_bound(const SeparationProblem& problem, const EvidenceTable& evidence) {
  const std::size_t n = problem.hclass.num_instances();
  const std::size_t c = problem.hclass.num_labels();
  const std::size_t s = problem.tclass.annotation_space().size();
  const std::size_t members = problem.tclass.size();
  const auto reachable = reachable_labels(problem.hclass);

  // Which ordered pairs actually occur: true label i against a reachable
  // wrong label j at some supported instance.
  std::vector<bool> realizable(c * c, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (problem.dx.prob(x) == 0) {
      continue;
    }
    const std::size_t i = problem.h0[x];
    for (std::size_t j : reachable[x]) {
      if (j != i) {
        realizable[i * c + j] = true;
      }
    }
  }

  std::vector<std::optional<std::size_t>> slot(c * c);
  for (std::size_t e = 0; e < evidence.size(); ++e) {
    const auto& vec = evidence[e];
    if (vec.label_i >= c || vec.label_j >= c) {
      throw IndexOutOfRangeError("evidence vector label out of range");
    }
    if (vec.label_i == vec.label_j) {
      throw BadParamsError("evidence vector needs two distinct labels");
    }
    if (vec.u.size() != s) {
      throw LengthMismatchError("evidence vector length does not match the outcome space");
    }
    bool all_zero = true;
    for (double w : vec.u) {
      all_zero = all_zero && w == 0;
    }
    if (all_zero) {
      throw ZeroVectorError("evidence vector for pair (" + format_size(vec.label_i) + ", " +
                            format_size(vec.label_j) + ") is identically zero");
    }
    const std::size_t key = vec.label_i * c + vec.label_j;
    if (slot[key]) {
      throw BadParamsError("duplicate evidence vector for pair (" + format_size(vec.label_i) +
                           ", " + format_size(vec.label_j) + ")");
    }
    slot[key] = e;
  }
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (realizable[i * c + j] && !slot[i * c + j]) {
        throw BadParamsError("missing evidence vector for pair (" + format_size(i) + ", " +
                             format_size(j) + ")");
      }
    }
  }

  EvidenceReport report;
  report.pairs.reserve(evidence.size());
  for (const auto& vec : evidence) {
    EvidencePairResult pair;
    pair.label_i = vec.label_i;
    pair.label_j = vec.label_j;
    for (double w : vec.u) {
      pair.sup_norm = std::max(pair.sup_norm, std::abs(w));
    }
    pair.realizable = realizable[vec.label_i * c + vec.label_j];
    if (pair.realizable) {
      // The margin couples both optimizations through x: at each supported
      // instance the adversary picks the worst member for each side.
      for (std::size_t x = 0; x < n; ++x) {
        if (problem.dx.prob(x) == 0 || problem.h0[x] != vec.label_i) {
          continue;
        }
        bool j_here = false;
        for (std::size_t label : reachable[x]) {
          j_here = j_here || label == vec.label_j;
        }
        if (!j_here) {
          continue;
        }
        double low_i = kInf;
        std::size_t arg_i = 0;
        for (std::size_t ti = 0; ti < members; ++ti) {
          const double v = dot(vec.u, problem.tclass.member(ti).row(x, vec.label_i));
          if (v < low_i) {
            low_i = v;
            arg_i = ti;
          }
        }
        double high_j = -kInf;
        std::size_t arg_j = 0;
        for (std::size_t tj = 0; tj < members; ++tj) {
          const double v = dot(vec.u, problem.tclass.member(tj).row(x, vec.label_j));
          if (v > high_j) {
            high_j = v;
            arg_j = tj;
          }
        }
        const double margin_here = low_i - high_j;
        if (margin_here < pair.margin) {
          pair.margin = margin_here;
          pair.witness = SeparationWitness{x, vec.label_i, vec.label_j, arg_i, arg_j};
        }
      }
    }
    report.pairs.push_back(std::move(pair));
  }

  report.ok = true;
  double worst = kInf;
  for (std::size_t e = 0; e < report.pairs.size(); ++e) {
    const auto& pair = report.pairs[e];
    if (!pair.realizable) {
      continue;
    }
    if (pair.margin <= 0) {
      if (report.ok) {
        report.failing_pair = e;
      }
      report.ok = false;
    }
    const double scaled = pair.margin / pair.sup_norm;
    worst = std::min(worst, 0.5 * scaled * scaled);
  }
  report.bound = report.ok ? worst : 0.0;
  return report;
}

EvidenceReport evidence_bound(const Scenario& scenario, const EvidenceTable& evidence) {
  return evidence_bound(separation_view(scenario), evidence);
}

EvidenceTable evidence_from_sets(const OutcomeSets& sets) {
  const std::size_t c = sets.size();
  if (c == 0) {
    throw BadSetError("no outcome sets given");
  }
  const std::size_t s = sets.front().size();
  EvidenceTable table;
  table.reserve(c * (c - 1));
  for (std::size_t i = 0; i < c; ++i) {
    if (sets[i].size() != s) {
      throw BadSetError("outcome set mask lengths disagree");
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (j == i) {
        continue;
      }
      EvidenceVector vec;
      vec.label_i = i;
      vec.label_j = j;
      vec.u.resize(s, 0.0);
      for (std::size_t o = 0; o < s; ++o) {
        vec.u[o] = (sets[i][o] ? 1.0 : 0.0) - (sets[j][o] ? 1.0 : 0.0);
      }
      table.push_back(std::move(vec));
    }
  }
  return table;
}

EtaReport identifiability_level(const Scenario& scenario) {
  const std::size_t num_h = scenario.hclass().size();
  const std::size_t num_t = scenario.tclass().size();

  double baseline = kInf;
  for (std::size_t t = 0; t < num_t; ++t) {
    baseline =
        std::min(baseline, annotation_risk(scenario, scenario.h0(), scenario.tclass().member(t)));
  }

  EtaReport report;
  report.baseline = baseline;
  bool have = false;
  for (std::size_t h = 0; h < num_h; ++h) {
    const double denom = classification_risk(scenario, scenario.hclass().table(h));
    if (denom <= 0) {
      continue;
    }
    for (std::size_t t = 0; t < num_t; ++t) {
      const double numerator =
          annotation_risk(scenario, scenario.hclass().table(h), scenario.tclass().member(t)) -
          baseline;
      const double ratio = numerator / denom;
      if (!have || ratio < report.eta) {
        have = true;
        report.eta = ratio;
        report.witness_h = h;
        report.witness_t = t;
        report.numerator = numerator;
        report.denominator = denom;
      }
    }
  }
  if (!have) {
    throw NoWrongHypothesisError(
        "every hypothesis matches the target labeling on the supported instances");
  }
  return report;
}

NonLearnabilityWitness non_learnability_witness(const Scenario& scenario, std::size_t k) {
  if (k == 0) {
    throw BadParamsError("the confusability budget k must be positive");
  }
  if (scenario.loss().kind != LossKind::cross_entropy) {
    throw BadParamsError("non-learnability construction requires the cross-entropy loss");
  }
  const double threshold = 1.0 / static_cast<double>(k);
  const SeparationReport rep = separation_degree(scenario);
  if (!(rep.gamma < threshold)) {
    throw SeparationHoldsError("separation degree " + format_double(rep.gamma) +
                               " is not below 1/k = " + format_double(threshold) +
                               "; no confusable pair exists");
  }
  const SeparationWitness w = *rep.witness;

  const Distribution& di = scenario.tclass().member(w.member_i).row(w.x, w.label_i);
  const Distribution& dj = scenario.tclass().member(w.member_j).row(w.x, w.label_j);
  const DivergenceValue pair_kl = kl(di, dj);

  NonLearnabilityWitness out;
  out.x = w.x;
  out.label_i = w.label_i;
  out.label_j = w.label_j;
  out.member_i = w.member_i;
  out.member_j = w.member_j;
  out.kl_pair = pair_kl.is_finite() ? pair_kl.value() : kInf;
  out.threshold = threshold;
  for (std::size_t h = 0; h < scenario.hclass().size(); ++h) {
    if (scenario.hclass().table(h)[w.x] == w.label_j) {
      out.h_minus = scenario.hclass().table(h);
      break;
    }
  }

  // Concentrate all data mass on the witness instance and make the
  // confusable member the true channel; the wrong label then costs at most
  // the witness KL per unit of classification risk.
  Scenario focused(scenario.x_space(), scenario.y_space(), scenario.o_space(),
                   Distribution::point_mass(scenario.x_space(), w.x), scenario.h0(),
                   scenario.tclass().member(w.member_i), scenario.hclass(), scenario.tclass(),
                   scenario.loss());
  out.eta = identifiability_level(focused).eta;
  out.eta_below_threshold = out.eta < threshold;
  return out;
}

}  // namespace indsup
