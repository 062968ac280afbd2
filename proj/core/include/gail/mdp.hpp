#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gail {

/// Finite MDP (S, A, P, gamma) with initial distribution zeta. Transition
/// probabilities are stored per action as S x S row-stochastic matrices.
/// Immutable after construction; all invariants are checked on entry.
class TabularMdp {
 public:
  TabularMdp(int n_states, int n_actions,
             std::vector<Eigen::MatrixXd> transition, Eigen::VectorXd zeta,
             double gamma);

  int n_states() const { return n_states_; }
  int n_actions() const { return n_actions_; }
  double gamma() const { return gamma_; }
  const Eigen::VectorXd& zeta() const { return zeta_; }

  /// P(s' | s, a) as transition(a)(s, s').
  const Eigen::MatrixXd& transition(int a) const { return transition_[a]; }
  double prob(int s, int a, int s2) const { return transition_[a](s, s2); }

  /// State kernel under `policy`: K(s,s') = sum_a pi(a|s) P(s'|s,a).
  Eigen::MatrixXd state_kernel(const Eigen::MatrixXd& policy) const;

  /// Same, under the restart mixture (1-gamma) zeta + gamma P.
  Eigen::MatrixXd mixture_state_kernel(const Eigen::MatrixXd& policy) const;

 private:
  int n_states_;
  int n_actions_;
  std::vector<Eigen::MatrixXd> transition_;
  Eigen::VectorXd zeta_;
  double gamma_;
};

/// Direct parameterization: the policy table itself, one simplex row per
/// state. probs()(s, a) = pi(a|s).
class DirectPolicy {
 public:
  explicit DirectPolicy(Eigen::MatrixXd table);

  static DirectPolicy uniform(int n_states, int n_actions);

  const Eigen::MatrixXd& probs() const { return table_; }
  int n_states() const { return static_cast<int>(table_.rows()); }
  int n_actions() const { return static_cast<int>(table_.cols()); }

  bool is_interior(double floor = 0.0) const {
    return table_.minCoeff() > floor;
  }

 private:
  Eigen::MatrixXd table_;
};

/// Softmax parameterization over unconstrained logits, plus the smoothness
/// bounds of this policy class: score norm bound c_phi, score Lipschitz
/// constant l_phi, and the TV-vs-parameter constant c_pi.
class SoftmaxPolicy {
 public:
  explicit SoftmaxPolicy(Eigen::MatrixXd logits);

  static SoftmaxPolicy uniform(int n_states, int n_actions);
  /// Logits = log(table), requires a strictly positive table.
  static SoftmaxPolicy from_probs(const Eigen::MatrixXd& table);

  const Eigen::MatrixXd& logits() const { return logits_; }
  const Eigen::MatrixXd& probs() const { return probs_; }
  int n_states() const { return static_cast<int>(logits_.rows()); }
  int n_actions() const { return static_cast<int>(logits_.cols()); }

  /// grad_logits log pi(a|s): nonzero only on row s, entry (s,a') equal to
  /// 1{a'=a} - pi(a'|s). Returned as a dense S x A table.
  Eigen::MatrixXd score(int s, int a) const;

  double c_phi() const { return c_phi_; }
  double l_phi() const { return l_phi_; }
  double c_pi() const { return c_pi_; }

 private:
  Eigen::MatrixXd logits_;
  Eigen::MatrixXd probs_;
  double c_phi_;
  double l_phi_;
  double c_pi_;
};

/// Discounted state-action visitation nu(s,a) and its state marginal d(s).
struct OccupancyMeasure {
  Eigen::MatrixXd nu;  // S x A
  Eigen::VectorXd d;   // S
};

/// Q/V/advantage tables from one exact policy evaluation.
struct QTable {
  Eigen::MatrixXd q;    // S x A
  Eigen::VectorXd v;    // S
  Eigen::MatrixXd adv;  // S x A, q - v per row
};

/// Generator spec for random instances.
struct RandomMdpSpec {
  double gamma = 0.9;
  double transition_floor = 1e-3;  // every P(s'|s,a) >= floor
};

/// Dirichlet-style random MDP with a strictly positive kernel (so the chain
/// is uniformly ergodic by construction) and uniform zeta. Deterministic in
/// the seed.
TabularMdp random_mdp(int n_states, int n_actions, std::uint64_t seed,
                      const RandomMdpSpec& spec = {});

/// w x h gridworld, 4 actions (up/down/left/right), slip probability: with
/// probability `slip` the executed move is uniform over the four directions.
/// Off-grid moves stay in place. Uniform zeta.
TabularMdp gridworld_mdp(int width, int height, double slip, double gamma);

/// Parses "random:ns,na", "gridworld:w,h,slip" or "file:path" (see
/// load_mdp for the file format). Throws std::invalid_argument on a
/// malformed spec string.
TabularMdp make_mdp(const std::string& spec, double gamma, std::uint64_t seed);

/// Plain-text MDP format, whitespace-separated tokens:
///   n_states N
///   n_actions A
///   gamma G
///   zeta z_0 ... z_{N-1}
///   P p_000 ...            (row-major over (s, a, s'))
/// Keys may appear in any order. Loading rejects zeta entries equal to zero.
TabularMdp load_mdp(const std::string& path);
void save_mdp(const TabularMdp& mdp, const std::string& path);

/// Random interior policy: rows are normalized positive draws.
DirectPolicy random_policy(int n_states, int n_actions, std::uint64_t seed);

}  // namespace gail
