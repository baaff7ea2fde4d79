#include "indsup/joint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace indsup {

namespace {

constexpr double kJointTol = 1e-9;

}  // namespace

FiniteSpace distinguished_outcome_space(const FiniteSpace& o1, const FiniteSpace& o2) {
  std::vector<std::string> names;
  names.reserve(o1.size() + o2.size());
  for (std::size_t o = 0; o < o1.size(); ++o) {
    names.push_back("1:" + o1.name(o));
  }
  for (std::size_t o = 0; o < o2.size(); ++o) {
    names.push_back("2:" + o2.name(o));
  }
  return FiniteSpace(std::move(names));
}

FiniteSpace merged_outcome_space(const FiniteSpace& o1, const FiniteSpace& o2) {
  std::vector<std::string> names = o1.names();
  for (std::size_t o = 0; o < o2.size(); ++o) {
    if (!o1.index_of(o2.name(o))) {
      names.push_back(o2.name(o));
    }
  }
  return FiniteSpace(std::move(names));
}

TransitionClass compose_joint(const JointSpec& spec) {
  if (!(spec.lambda > 0) || !(spec.lambda < 1)) {
    throw BadParamsError("the mixture weight must lie strictly between 0 and 1");
  }
  const TransitionClass& c1 = spec.class1;
  const TransitionClass& c2 = spec.class2;
  if (c1.label_space() != c2.label_space()) {
    throw SpaceMismatchError("joint sources disagree on the label space");
  }
  if (spec.constraint && (c1.params().empty() || c2.params().empty())) {
    throw BadParamsError("a joint constraint needs member parameters on both sources");
  }

  // All instance-dependent members across both sources must agree on the
  // instance count; constant members broadcast.
  std::size_t num_instances = 0;
  for (const TransitionClass* cls : {&c1, &c2}) {
    for (const auto& member : cls->members()) {
      if (member.constant()) {
        continue;
      }
      if (num_instances == 0) {
        num_instances = member.num_instances();
      } else if (member.num_instances() != num_instances) {
        throw SpaceMismatchError("joint sources disagree on the instance count");
      }
    }
  }

  const FiniteSpace& label_space = c1.label_space();
  const std::size_t c = label_space.size();
  const FiniteSpace out_space =
      spec.distinguished ? distinguished_outcome_space(c1.annotation_space(), c2.annotation_space())
                         : merged_outcome_space(c1.annotation_space(), c2.annotation_space());
  const std::size_t s1 = c1.annotation_space().size();
  const std::size_t s2 = c2.annotation_space().size();

  // Outcome-index maps into the combined space.
  std::vector<std::size_t> map1(s1);
  std::vector<std::size_t> map2(s2);
  if (spec.distinguished) {
    for (std::size_t o = 0; o < s1; ++o) {
      map1[o] = o;
    }
    for (std::size_t o = 0; o < s2; ++o) {
      map2[o] = s1 + o;
    }
  } else {
    for (std::size_t o = 0; o < s1; ++o) {
      map1[o] = *out_space.index_of(c1.annotation_space().name(o));
    }
    for (std::size_t o = 0; o < s2; ++o) {
      map2[o] = *out_space.index_of(c2.annotation_space().name(o));
    }
  }

  std::vector<TransitionHypothesis> members;
  for (std::size_t k1 = 0; k1 < c1.size(); ++k1) {
    for (std::size_t k2 = 0; k2 < c2.size(); ++k2) {
      if (spec.constraint) {
        const double lhs = spec.constraint->coef1 * c1.params()[k1] +
                           spec.constraint->coef2 * c2.params()[k2];
        if (!(lhs <= spec.constraint->bound + kJointTol)) {
          continue;
        }
      }
      const TransitionHypothesis& t1 = c1.member(k1);
      const TransitionHypothesis& t2 = c2.member(k2);
      const bool constant = t1.constant() && t2.constant();
      const std::size_t span = constant ? 1 : num_instances;
      std::vector<Distribution> rows;
      rows.reserve(span * c);
      for (std::size_t x = 0; x < span; ++x) {
        for (std::size_t i = 0; i < c; ++i) {
          const auto& r1 = t1.row(x, i).probs();
          const auto& r2 = t2.row(x, i).probs();
          std::vector<double> weights(out_space.size(), 0.0);
          for (std::size_t o = 0; o < s1; ++o) {
            weights[map1[o]] += spec.lambda * r1[o];
          }
          for (std::size_t o = 0; o < s2; ++o) {
            weights[map2[o]] += (1.0 - spec.lambda) * r2[o];
          }
          rows.push_back(make_distribution(out_space, weights));
        }
      }
      members.push_back(constant
                            ? TransitionHypothesis::constant(label_space, out_space,
                                                             std::move(rows))
                            : TransitionHypothesis::instance_dependent(
                                  label_space, out_space, num_instances, std::move(rows)));
    }
  }
  if (members.empty()) {
    throw EmptyAfterConstraintError("no source pair satisfies the joint constraint");
  }
  return TransitionClass(std::move(members), ClassProvenance::joint,
                         c1.from_grid() || c2.from_grid());
}

namespace {

bool both_infinite(double a, double b) { return std::isinf(a) && std::isinf(b) && a > 0 && b > 0; }

}  // namespace

NoFreeSeparationReport verify_no_free_separation(const TransitionClass& class1,
                                                 const TransitionClass& class2, double lambda,
                                                 const JointContext& context, std::size_t i,
                                                 std::size_t j) {
  if (context.hclass.num_instances() != context.dx.space().size()) {
    throw SpaceMismatchError("hypothesis class and instance distribution disagree");
  }
  if (context.h0.size() != context.hclass.num_instances()) {
    throw LengthMismatchError("target labeling length does not match the instance count");
  }

  NoFreeSeparationReport report;
  report.label_i = i;
  report.label_j = j;
  report.lambda = lambda;
  for (const TransitionClass* cls : {&class1, &class2}) {
    for (const auto& member : cls->members()) {
      report.instance_dependent_caveat = report.instance_dependent_caveat || !member.constant();
    }
  }

  const SeparationProblem p1{context.dx, context.h0, context.hclass, class1};
  const SeparationProblem p2{context.dx, context.h0, context.hclass, class2};
  report.gamma_source1 = pairwise_separation(p1, i, j).value;
  report.gamma_source2 = pairwise_separation(p2, i, j).value;
  report.mixture_bound =
      lambda * report.gamma_source1 + (1.0 - lambda) * report.gamma_source2;

  JointSpec spec{class1, class2, lambda, true, std::nullopt};
  const TransitionClass joined_distinguished = compose_joint(spec);
  spec.distinguished = false;
  const TransitionClass joined_mixed = compose_joint(spec);

  const SeparationProblem pd{context.dx, context.h0, context.hclass, joined_distinguished};
  const SeparationProblem pm{context.dx, context.h0, context.hclass, joined_mixed};
  report.gamma_joint_distinguished = pairwise_separation(pd, i, j).value;
  report.gamma_joint_mixed = pairwise_separation(pm, i, j).value;

  report.slack_distinguished =
      both_infinite(report.mixture_bound, report.gamma_joint_distinguished)
          ? 0.0
          : report.mixture_bound - report.gamma_joint_distinguished;
  report.slack_mixed = both_infinite(report.mixture_bound, report.gamma_joint_mixed)
                           ? 0.0
                           : report.mixture_bound - report.gamma_joint_mixed;
  report.inequality_holds =
      report.gamma_joint_distinguished <= report.mixture_bound + kJointTol &&
      report.gamma_joint_mixed <= report.mixture_bound + kJointTol;
  report.equality_holds =
      both_infinite(report.mixture_bound, report.gamma_joint_distinguished) ||
      std::abs(report.mixture_bound - report.gamma_joint_distinguished) <= kJointTol;
  return report;
}

DifferenceScenario difference_scenario(double lambda, double gap,
                                       const std::vector<std::pair<double, double>>& rate_grid) {
  if (!(lambda > 0) || !(lambda < 1)) {
    throw BadParamsError("the mixture weight must lie strictly between 0 and 1");
  }
  if (!(gap < 0)) {
    throw BadParamsError("the difference construction needs a strictly negative gap");
  }
  if (rate_grid.empty()) {
    throw EmptyGridError("the difference construction needs a non-empty rate grid");
  }

  // The grid components supply the two marginal rate grids (first-appearance
  // order, duplicates dropped).
  std::vector<double> rates1;
  std::vector<double> rates2;
  for (const auto& [r1, r2] : rate_grid) {
    if (std::find(rates1.begin(), rates1.end(), r1) == rates1.end()) {
      rates1.push_back(r1);
    }
    if (std::find(rates2.begin(), rates2.end(), r2) == rates2.end()) {
      rates2.push_back(r2);
    }
  }

  const FiniteSpace y_space = numbered_space("y", 2);
  const TransitionClass class1 = build_class(UniformNoiseGridSpec{y_space, rates1});
  const TransitionClass class2 = build_class(UniformNoiseGridSpec{y_space, rates2});

  JointSpec spec{class1, class2, lambda, true, JointConstraint{1.0, -1.0, gap}};
  TransitionClass joint = compose_joint(spec);
  TransitionHypothesis t0 = joint.member(0);

  const FiniteSpace x_space = numbered_space("x", 1);
  const FiniteSpace o_space = joint.annotation_space();
  Scenario scenario(x_space, y_space, o_space, Distribution::point_mass(x_space, 0),
                    std::vector<std::size_t>{0}, std::move(t0),
                    HypothesisClass::all_functions(1, 2), joint,
                    LossSpec{LossKind::cross_entropy, {}});

  // The difference evidence reads source 1 positively and source 2
  // negatively, scaled so the mixture weights cancel.
  EvidenceTable evidence;
  EvidenceVector forward;
  forward.label_i = 0;
  forward.label_j = 1;
  forward.u = {1.0 / lambda, 0.0, -1.0 / (1.0 - lambda), 0.0};
  EvidenceVector backward;
  backward.label_i = 1;
  backward.label_j = 0;
  backward.u = {-1.0 / lambda, 0.0, 1.0 / (1.0 - lambda), 0.0};
  evidence.push_back(forward);
  evidence.push_back(backward);

  DifferenceScenario out{std::move(scenario), evidence, EvidenceReport{}, 0.0, 0.0};
  out.evidence_report = evidence_bound(out.scenario, out.evidence);
  const SeparationProblem m1{out.scenario.dx(), out.scenario.h0(), out.scenario.hclass(), class1};
  const SeparationProblem m2{out.scenario.dx(), out.scenario.h0(), out.scenario.hclass(), class2};
  out.marginal_gamma_1 = separation_degree(m1).gamma;
  out.marginal_gamma_2 = separation_degree(m2).gamma;
  return out;
}

}  // namespace indsup
