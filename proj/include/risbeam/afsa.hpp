#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "risbeam/position.hpp"
#include "risbeam/result.hpp"

namespace risbeam {

/// Hyperparameters of the artificial fish swarm. Active quantities act on
/// the complex weight vector, passive ones on the RIS phase vector; each
/// side has its own step length, vision radius and vision scale divisor.
struct AFSAParams {
  int swarm_size = 20;      // S, candidates per sub-block
  int sub_blocks = 100;     // K, training sub-blocks
  double step_active = 0.3;
  double step_passive = 0.4;
  double vision_active = 1.5;
  double vision_passive = 2.0;
  double vision_scale_active = 4.0;   // divides the per-coordinate perturbation
  double vision_scale_passive = 8.0;
  double crowding = 0.75;             // delta in the improvement conditions
  int max_forage_attempts = 5;        // T_max
  double eta_min = 0.0;
  double eta_max = std::numeric_limits<double>::infinity();
  std::uint64_t rng_seed = 1;

  /// Defaults scaled to the search space: steps and visions proportional
  /// to sqrt(P) on the active side, vision scales sqrt(2M) and sqrt(N) so
  /// per-coordinate perturbations stay dimension-independent.
  static AFSAParams defaults_for(Eigen::Index num_antennas, Eigen::Index num_ris_elements,
                                 double transmit_power);

  void validate() const;  // throws std::invalid_argument
};

/// The swarm between sub-blocks: positions plus cached fitness (echo
/// power), communication power, and feasibility flags from the most
/// recent measurements. global_fitness never decreases once set.
struct SwarmState {
  std::vector<AFPosition> positions;
  Eigen::VectorXd fitness;     // F, echo power per AF
  Eigen::VectorXd comm_power;  // f, user power per AF
  std::vector<char> feasible;
  AFPosition global_opt;
  double global_fitness = -std::numeric_limits<double>::infinity();
  bool has_global = false;
  int sub_block = 1;
  SearchSpace space;

  int feasible_count() const;
};

/// A behavior outcome: the proposed position and its measured fitness.
struct Candidate {
  AFPosition position;
  double fitness;
};

/// Random initial swarm; every position is measured once (fitness and
/// user power) and the global optimum starts from the best feasible AF,
/// or stays unset when none is feasible.
SwarmState init_swarm(const AFSAParams& params, const SearchSpace& space,
                      FeedbackOracle& oracle, std::mt19937_64& rng);

/// Foraging: up to T_max visual trials; the first trial whose fitness
/// beats the current AF triggers a step toward it, otherwise the AF takes
/// one random move. Active and passive parts are perturbed independently.
Candidate foraging(const SwarmState& state, Eigen::Index i, const AFSAParams& params,
                   FeedbackOracle& oracle, std::mt19937_64& rng);

/// Clustering: step toward the partner centroid when its fitness, diluted
/// by the partner count, beats the crowding-scaled own fitness. Partner
/// discovery may be restricted to `allowed` (nullptr = whole swarm).
std::optional<Candidate> clustering(const SwarmState& state, Eigen::Index i,
                                    const AFSAParams& params, FeedbackOracle& oracle,
                                    std::mt19937_64& rng,
                                    const std::vector<char>* allowed = nullptr);

/// Rear chasing: like clustering but toward the best-fitness partner,
/// judged from cached fitness values.
std::optional<Candidate> rear_chasing(const SwarmState& state, Eigen::Index i,
                                      const AFSAParams& params, FeedbackOracle& oracle,
                                      std::mt19937_64& rng,
                                      const std::vector<char>* allowed = nullptr);

/// Case A (every AF feasible): each AF evaluates the clustering and rear
/// chasing candidates, falling back to one shared foraging result where a
/// behavior declines, and keeps the better of the two.
void case_a_step(SwarmState& state, const AFSAParams& params, FeedbackOracle& oracle,
                 std::mt19937_64& rng);

/// Target AF for the mixed case: the sole feasible AF, or the feasible AF
/// of highest cached fitness (lowest index on ties). Throws
/// std::logic_error when the feasible set is empty or full.
Eigen::Index select_target_case_b(const SwarmState& state);

/// Case B (mixed): infeasible AFs step toward the target, feasible AFs run
/// the case-A behaviors among themselves, and the global optimum absorbs
/// the target per the bookkeeping rule.
void case_b_step(SwarmState& state, const AFSAParams& params, FeedbackOracle& oracle,
                 std::mt19937_64& rng);

/// Target AF when nothing is feasible: the AF whose measured user power is
/// closest to the allowed interval (all below -> highest, all above ->
/// lowest, otherwise nearest boundary). Lowest index on ties.
Eigen::Index select_target_case_c(const SwarmState& state, const AFSAParams& params);

/// Case C (nothing feasible): everyone steps toward the target, the target
/// forages. The global optimum is left untouched.
void case_c_step(SwarmState& state, const AFSAParams& params, FeedbackOracle& oracle,
                 std::mt19937_64& rng);

/// Full training loop: initialization plus K-1 sub-blocks dispatched on
/// the previous sub-block's feasibility, with per-sub-block trace capture.
TrainingResult run_training(const Scenario& scenario, const AFSAParams& params,
                            FeedbackOracle& oracle);

}  // namespace risbeam
