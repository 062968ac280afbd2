#pragma once

#include "gail/mdp.hpp"

namespace gail {

/// Exact discounted visitation: solves d = (1-gamma) zeta + gamma K^T d by a
/// direct linear solve (K the policy-induced state kernel) and returns
/// nu(s,a) = d(s) pi(a|s). Throws std::runtime_error if the residual of the
/// stationarity equation exceeds 1e-8.
OccupancyMeasure exact_visitation(const TabularMdp& mdp,
                                  const Eigen::MatrixXd& policy);
OccupancyMeasure exact_visitation(const TabularMdp& mdp,
                                  const DirectPolicy& policy);
OccupancyMeasure exact_visitation(const TabularMdp& mdp,
                                  const SoftmaxPolicy& policy);

/// Exact policy evaluation under reward table r (S x A): solves
/// (I - gamma K) v = r_pi directly, then q = r + gamma P v.
QTable exact_q(const TabularMdp& mdp, const Eigen::MatrixXd& policy,
               const Eigen::MatrixXd& reward);
QTable exact_q(const TabularMdp& mdp, const DirectPolicy& policy,
               const Eigen::MatrixXd& reward);
QTable exact_q(const TabularMdp& mdp, const SoftmaxPolicy& policy,
               const Eigen::MatrixXd& reward);

/// d/d theta_{s,a} of V(pi_theta, r) under direct parameterization:
/// entry (s,a) = d_pi(s) Q^pi(s,a) / (1-gamma). Negate for the gradient of
/// the imitation objective.
Eigen::MatrixXd exact_policy_gradient(const TabularMdp& mdp,
                                      const DirectPolicy& policy,
                                      const Eigen::MatrixXd& reward);

/// d/d logits_{s,a} of V(pi_theta, r) for a softmax policy:
/// entry (s,a) = d(s) pi(a|s) A(s,a) / (1-gamma).
Eigen::MatrixXd exact_softmax_policy_gradient(const TabularMdp& mdp,
                                              const SoftmaxPolicy& policy,
                                              const Eigen::MatrixXd& reward);

/// Greedy policy of exact value iteration (run to Bellman residual <=
/// `residual_tol`), ties broken toward the lowest action index, then
/// epsilon-smoothed toward uniform so the expert has full support.
DirectPolicy expert_from_reward(const TabularMdp& mdp,
                                const Eigen::MatrixXd& true_reward,
                                double epsilon = 0.05,
                                double residual_tol = 1e-10);

/// Optimal value vector of the same value iteration (for oracles).
Eigen::VectorXd optimal_values(const TabularMdp& mdp,
                               const Eigen::MatrixXd& reward,
                               double residual_tol = 1e-10);

}  // namespace gail
