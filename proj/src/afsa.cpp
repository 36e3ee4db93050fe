#include "risbeam/afsa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace risbeam {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double eval_fitness(const SearchSpace& space, FeedbackOracle& oracle, const AFPosition& p) {
  return oracle.measure_echo_power(decode(p, space.transmit_power));
}

/// One uniform(-1,1) draw per real coordinate: real and imaginary weight
/// parts scaled by vision_active / vision_scale_active, RIS phases by the
/// passive pair. Result is bound-projected.
AFPosition perturbed(const AFPosition& cur, const AFSAParams& params,
                     const SearchSpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double active_scale = params.vision_active / params.vision_scale_active;
  const double passive_scale = params.vision_passive / params.vision_scale_passive;

  Eigen::VectorXcd w = raw_weights(cur);
  for (Eigen::Index m = 0; m < w.size(); ++m) {
    const double re = u(rng);
    const double im = u(rng);
    w[m] += active_scale * std::complex<double>(re, im);
  }
  AFPosition next = cur;
  set_weights(next, w, space.transmit_power);
  for (Eigen::Index n = 0; n < next.ris_phase.size(); ++n)
    next.ris_phase[n] += passive_scale * u(rng);
  return project_bounds(std::move(next), space.transmit_power);
}

/// Normalized-direction step toward a target position, each part with its
/// own step length and its own uniform(0,1) draw. A zero direction on
/// either part degenerates to that part's random move.
AFPosition step_toward(const AFPosition& cur, const AFPosition& target,
                       const AFSAParams& params, const SearchSpace& space,
                       std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> r(0.0, 1.0);
  const double active_scale = params.vision_active / params.vision_scale_active;
  const double passive_scale = params.vision_passive / params.vision_scale_passive;

  const Eigen::VectorXcd w_cur = raw_weights(cur);
  Eigen::VectorXcd w_next = w_cur;
  const Eigen::VectorXcd dw = raw_weights(target) - w_cur;
  const double dw_norm = dw.norm();
  if (dw_norm > 0.0) {
    w_next += dw * (params.step_active * r(rng) / dw_norm);
  } else {
    for (Eigen::Index m = 0; m < w_next.size(); ++m) {
      const double re = u(rng);
      const double im = u(rng);
      w_next[m] += active_scale * std::complex<double>(re, im);
    }
  }

  AFPosition next = cur;
  set_weights(next, w_next, space.transmit_power);

  const Eigen::VectorXd dphi = target.ris_phase - cur.ris_phase;
  const double dphi_norm = dphi.norm();
  if (dphi_norm > 0.0) {
    next.ris_phase += dphi * (params.step_passive * r(rng) / dphi_norm);
  } else {
    for (Eigen::Index n = 0; n < next.ris_phase.size(); ++n)
      next.ris_phase[n] += passive_scale * u(rng);
  }
  return project_bounds(std::move(next), space.transmit_power);
}

std::vector<Eigen::Index> find_partners(const SwarmState& state, Eigen::Index i,
                                        const AFSAParams& params,
                                        const std::vector<char>* allowed) {
  std::vector<Eigen::Index> partners;
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(state.positions.size()); ++j) {
    if (j == i) continue;
    if (allowed && !(*allowed)[j]) continue;
    const auto [d_active, d_passive] = position_distance(state.positions[i], state.positions[j]);
    if (d_active < params.vision_active && d_passive < params.vision_passive)
      partners.push_back(j);
  }
  return partners;
}

/// Refresh user-power measurements and feasibility flags for every AF.
void refresh_feasibility(SwarmState& state, const AFSAParams& params, FeedbackOracle& oracle) {
  const Eigen::Index s = static_cast<Eigen::Index>(state.positions.size());
  for (Eigen::Index i = 0; i < s; ++i) {
    state.comm_power[i] =
        oracle.measure_user_power(decode(state.positions[i], state.space.transmit_power));
    state.feasible[i] =
        state.comm_power[i] >= params.eta_min && state.comm_power[i] <= params.eta_max;
  }
}

/// Record any feasible AF whose fitness strictly beats the incumbent,
/// scanning in index order.
void absorb_feasible(SwarmState& state) {
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(state.positions.size()); ++i) {
    if (state.feasible[i] && state.fitness[i] > state.global_fitness) {
      state.global_fitness = state.fitness[i];
      state.global_opt = state.positions[i];
      state.has_global = true;
    }
  }
}

char case_label_of(int feasible_count, int swarm_size) {
  if (feasible_count == swarm_size) return 'A';
  if (feasible_count == 0) return 'C';
  return 'B';
}

/// Clustering (or rear-chasing) candidate plus fallback-to-foraging with
/// the foraging result shared between the two behaviors of one AF.
struct ForageMemo {
  std::optional<Candidate> result;

  const Candidate& get(const SwarmState& state, Eigen::Index i, const AFSAParams& params,
                       FeedbackOracle& oracle, std::mt19937_64& rng) {
    if (!result) result = foraging(state, i, params, oracle, rng);
    return *result;
  }
};

Candidate behave_case_a(const SwarmState& state, Eigen::Index i, const AFSAParams& params,
                        FeedbackOracle& oracle, std::mt19937_64& rng,
                        const std::vector<char>* allowed) {
  ForageMemo memo;
  auto first = clustering(state, i, params, oracle, rng, allowed);
  const Candidate cand1 = first ? *first : memo.get(state, i, params, oracle, rng);
  auto second = rear_chasing(state, i, params, oracle, rng, allowed);
  const Candidate cand2 = second ? *second : memo.get(state, i, params, oracle, rng);
  return cand1.fitness >= cand2.fitness ? cand1 : cand2;
}

void commit(SwarmState& state, std::vector<Candidate>&& next, const AFSAParams& params,
            FeedbackOracle& oracle, bool update_global) {
  const Eigen::Index s = static_cast<Eigen::Index>(next.size());
  for (Eigen::Index i = 0; i < s; ++i) {
    state.positions[i] = std::move(next[i].position);
    state.fitness[i] = next[i].fitness;
  }
  refresh_feasibility(state, params, oracle);
  if (update_global) absorb_feasible(state);
}

}  // namespace

AFSAParams AFSAParams::defaults_for(Eigen::Index num_antennas, Eigen::Index num_ris_elements,
                                    double transmit_power) {
  AFSAParams p;
  const double amp = std::sqrt(transmit_power);
  p.step_active = 0.3 * amp;
  p.step_passive = 0.4;
  p.vision_active = 1.5 * amp;
  p.vision_passive = 2.0;
  p.vision_scale_active = std::sqrt(2.0 * static_cast<double>(num_antennas));
  p.vision_scale_passive = std::sqrt(static_cast<double>(num_ris_elements));
  return p;
}

void AFSAParams::validate() const {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("afsa params: " + what);
  };
  if (swarm_size < 2) bad("swarm_size must be >= 2");
  if (sub_blocks < 2) bad("sub_blocks must be >= 2");
  if (!(step_active > 0.0) || !(step_passive > 0.0)) bad("steps must be > 0");
  if (!(vision_active > 0.0) || !(vision_passive > 0.0)) bad("visions must be > 0");
  if (!(vision_scale_active > 0.0) || !(vision_scale_passive > 0.0))
    bad("vision scales must be > 0");
  if (!(crowding > 0.0)) bad("crowding must be > 0");
  if (max_forage_attempts < 1) bad("max_forage_attempts must be >= 1");
  if (!(eta_min >= 0.0)) bad("eta_min must be >= 0");
  if (!(eta_min <= eta_max)) bad("eta_min must be <= eta_max");
}

int SwarmState::feasible_count() const {
  return static_cast<int>(std::count(feasible.begin(), feasible.end(), char(1)));
}

SwarmState init_swarm(const AFSAParams& params, const SearchSpace& space,
                      FeedbackOracle& oracle, std::mt19937_64& rng) {
  params.validate();
  SwarmState state;
  state.space = space;
  const Eigen::Index s = params.swarm_size;
  state.positions.reserve(s);
  state.fitness.resize(s);
  state.comm_power.resize(s);
  state.feasible.assign(s, 0);
  for (Eigen::Index i = 0; i < s; ++i) {
    state.positions.push_back(random_position(space, rng));
    state.fitness[i] = eval_fitness(space, oracle, state.positions[i]);
  }
  refresh_feasibility(state, params, oracle);
  absorb_feasible(state);
  return state;
}

Candidate foraging(const SwarmState& state, Eigen::Index i, const AFSAParams& params,
                   FeedbackOracle& oracle, std::mt19937_64& rng) {
  const AFPosition& cur = state.positions[i];
  const double f_cur = state.fitness[i];
  for (int attempt = 0; attempt < params.max_forage_attempts; ++attempt) {
    const AFPosition visual = perturbed(cur, params, state.space, rng);
    const double f_visual = eval_fitness(state.space, oracle, visual);
    if (f_visual > f_cur) {
      AFPosition stepped = step_toward(cur, visual, params, state.space, rng);
      const double f_stepped = eval_fitness(state.space, oracle, stepped);
      return {std::move(stepped), f_stepped};
    }
  }
  AFPosition moved = perturbed(cur, params, state.space, rng);
  const double f_moved = eval_fitness(state.space, oracle, moved);
  return {std::move(moved), f_moved};
}

std::optional<Candidate> clustering(const SwarmState& state, Eigen::Index i,
                                    const AFSAParams& params, FeedbackOracle& oracle,
                                    std::mt19937_64& rng, const std::vector<char>* allowed) {
  const auto partners = find_partners(state, i, params, allowed);
  if (partners.empty()) return std::nullopt;
  const double n_f = static_cast<double>(partners.size());

  // Partner centroid on raw coordinates, weights averaged in the complex
  // plane, then projected into a valid position.
  Eigen::VectorXcd w_center = Eigen::VectorXcd::Zero(state.space.num_antennas);
  Eigen::VectorXd phi_center = Eigen::VectorXd::Zero(state.space.num_ris_elements);
  for (Eigen::Index j : partners) {
    w_center += raw_weights(state.positions[j]);
    phi_center += state.positions[j].ris_phase;
  }
  w_center /= n_f;
  phi_center /= n_f;
  AFPosition center;
  set_weights(center, w_center, state.space.transmit_power);
  center.ris_phase = std::move(phi_center);
  center = project_bounds(std::move(center), state.space.transmit_power);

  const double f_center = eval_fitness(state.space, oracle, center);
  if (!(f_center / n_f > params.crowding * state.fitness[i])) return std::nullopt;
  AFPosition stepped = step_toward(state.positions[i], center, params, state.space, rng);
  const double f_stepped = eval_fitness(state.space, oracle, stepped);
  return Candidate{std::move(stepped), f_stepped};
}

std::optional<Candidate> rear_chasing(const SwarmState& state, Eigen::Index i,
                                      const AFSAParams& params, FeedbackOracle& oracle,
                                      std::mt19937_64& rng, const std::vector<char>* allowed) {
  const auto partners = find_partners(state, i, params, allowed);
  if (partners.empty()) return std::nullopt;
  const double n_f = static_cast<double>(partners.size());

  Eigen::Index best = partners.front();
  for (Eigen::Index j : partners)
    if (state.fitness[j] > state.fitness[best]) best = j;

  if (!(state.fitness[best] / n_f > params.crowding * state.fitness[i])) return std::nullopt;
  AFPosition stepped = step_toward(state.positions[i], state.positions[best], params,
                                   state.space, rng);
  const double f_stepped = eval_fitness(state.space, oracle, stepped);
  return Candidate{std::move(stepped), f_stepped};
}

void case_a_step(SwarmState& state, const AFSAParams& params, FeedbackOracle& oracle,
                 std::mt19937_64& rng) {
  absorb_feasible(state);  // input state is all-feasible
  const Eigen::Index s = static_cast<Eigen::Index>(state.positions.size());
  std::vector<Candidate> next;
  next.reserve(s);
  for (Eigen::Index i = 0; i < s; ++i)
    next.push_back(behave_case_a(state, i, params, oracle, rng, nullptr));
  commit(state, std::move(next), params, oracle, /*update_global=*/true);
}

Eigen::Index select_target_case_b(const SwarmState& state) {
  const Eigen::Index s = static_cast<Eigen::Index>(state.positions.size());
  const int nf = state.feasible_count();
  if (nf == 0 || nf == static_cast<int>(s))
    throw std::logic_error("select_target_case_b: feasible set must be a strict nonempty subset");
  Eigen::Index best = -1;
  for (Eigen::Index i = 0; i < s; ++i) {
    if (!state.feasible[i]) continue;
    if (best < 0 || state.fitness[i] > state.fitness[best]) best = i;
  }
  return best;
}

void case_b_step(SwarmState& state, const AFSAParams& params, FeedbackOracle& oracle,
                 std::mt19937_64& rng) {
  const Eigen::Index target = select_target_case_b(state);
  // Global bookkeeping from the target AF (>= keeps ties on the newer AF).
  if (state.fitness[target] >= state.global_fitness) {
    state.global_fitness = state.fitness[target];
    state.global_opt = state.positions[target];
    state.has_global = true;
  }

  const std::vector<char> feasible_now = state.feasible;
  const AFPosition target_pos = state.positions[target];
  const Eigen::Index s = static_cast<Eigen::Index>(state.positions.size());
  std::vector<Candidate> next;
  next.reserve(s);
  for (Eigen::Index i = 0; i < s; ++i) {
    if (feasible_now[i]) {
      next.push_back(behave_case_a(state, i, params, oracle, rng, &feasible_now));
    } else {
      AFPosition stepped = step_toward(state.positions[i], target_pos, params, state.space, rng);
      const double f = eval_fitness(state.space, oracle, stepped);
      next.push_back({std::move(stepped), f});
    }
  }
  commit(state, std::move(next), params, oracle, /*update_global=*/true);
}

Eigen::Index select_target_case_c(const SwarmState& state, const AFSAParams& params) {
  const Eigen::Index s = static_cast<Eigen::Index>(state.positions.size());
  const double f_max = state.comm_power.maxCoeff();
  const double f_min = state.comm_power.minCoeff();

  Eigen::Index best = 0;
  if (f_max < params.eta_min) {
    for (Eigen::Index i = 1; i < s; ++i)
      if (state.comm_power[i] > state.comm_power[best]) best = i;
  } else if (f_min > params.eta_max) {
    for (Eigen::Index i = 1; i < s; ++i)
      if (state.comm_power[i] < state.comm_power[best]) best = i;
  } else {
    auto boundary_distance = [&](Eigen::Index i) {
      return std::min(std::abs(state.comm_power[i] - params.eta_min),
                      std::abs(state.comm_power[i] - params.eta_max));
    };
    for (Eigen::Index i = 1; i < s; ++i)
      if (boundary_distance(i) < boundary_distance(best)) best = i;
  }
  return best;
}

void case_c_step(SwarmState& state, const AFSAParams& params, FeedbackOracle& oracle,
                 std::mt19937_64& rng) {
  const Eigen::Index target = select_target_case_c(state, params);
  const AFPosition target_pos = state.positions[target];
  const Eigen::Index s = static_cast<Eigen::Index>(state.positions.size());
  std::vector<Candidate> next;
  next.reserve(s);
  for (Eigen::Index i = 0; i < s; ++i) {
    if (i == target) {
      next.push_back(foraging(state, i, params, oracle, rng));
    } else {
      AFPosition stepped = step_toward(state.positions[i], target_pos, params, state.space, rng);
      const double f = eval_fitness(state.space, oracle, stepped);
      next.push_back({std::move(stepped), f});
    }
  }
  // No global-optimum update in this case.
  commit(state, std::move(next), params, oracle, /*update_global=*/false);
}

TrainingResult run_training(const Scenario& scenario, const AFSAParams& params,
                            FeedbackOracle& oracle) {
  scenario.validate();
  params.validate();
  const SearchSpace space = SearchSpace::from_scenario(scenario);
  const std::uint64_t echo_before = oracle.echo_evals();
  const std::uint64_t user_before = oracle.user_evals();

  std::mt19937_64 rng(params.rng_seed);
  SwarmState state = init_swarm(params, space, oracle, rng);

  TrainingResult result;
  result.trace.reserve(params.sub_blocks);
  bool ever_feasible = state.feasible_count() > 0;
  auto record = [&] {
    const int nf = state.feasible_count();
    result.trace.push_back({state.global_fitness, nf, case_label_of(nf, params.swarm_size)});
  };
  record();

  for (int l = 2; l <= params.sub_blocks; ++l) {
    const int nf = state.feasible_count();
    if (nf == params.swarm_size) {
      case_a_step(state, params, oracle, rng);
    } else if (nf > 0) {
      case_b_step(state, params, oracle, rng);
    } else {
      case_c_step(state, params, oracle, rng);
    }
    state.sub_block = l;
    ever_feasible = ever_feasible || state.feasible_count() > 0;
    record();
  }

  result.ever_feasible = ever_feasible;
  if (state.has_global) {
    result.best_beam = decode(state.global_opt, space.transmit_power);
    result.best_fitness = state.global_fitness;
  } else if (state.feasible_count() > 0) {
    // Feasible AFs appeared only in the never-dispatched final state; hand
    // back the best of them so the answer honors the constraint.
    Eigen::Index best = -1;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(state.positions.size()); ++i)
      if (state.feasible[i] && (best < 0 || state.fitness[i] > state.fitness[best])) best = i;
    result.best_beam = decode(state.positions[best], space.transmit_power);
    result.best_fitness = state.fitness[best];
  } else {
    const Eigen::Index target = select_target_case_c(state, params);
    result.best_beam = decode(state.positions[target], space.transmit_power);
    result.best_fitness = state.fitness[target];
  }
  result.echo_evals = oracle.echo_evals() - echo_before;
  result.user_evals = oracle.user_evals() - user_before;
  return result;
}

}  // namespace risbeam
