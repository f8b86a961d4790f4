#include "mms/shares.hpp"

#include "mms/error.hpp"

namespace mms {

ShareValue guarantee(const Instance& instance, std::size_t agent, Share which,
                     const sched::SolveMode& mode, const sched::Budget& budget) {
  if (agent >= instance.n_agents()) {
    throw Error(ErrorCode::kIndexOutOfRange, "agent " + std::to_string(agent));
  }
  const std::size_t n = instance.n_agents();
  if (instance.is_zero_agent(agent)) {
    return {Rational(0), Allocation::all_to(0, n, instance.n_items())};
  }

  const bool chores = instance.kind() == Kind::kChores;
  std::vector<Rational> times;
  times.reserve(instance.n_items());
  for (const Rational& u : instance.row(agent)) times.push_back(u.abs());

  // For chores, MmS(d) = -mMS(|d|) and mMS(d) = -MmS(|d|).
  const bool makespan = (which == Share::kMinMax) != chores;
  const auto problem = sched::SchedulingProblem::identical(
      n, std::move(times),
      makespan ? sched::Objective::kMinimizeMakespan : sched::Objective::kMaximizeCover);
  sched::Solution solution = sched::solve(problem, mode, budget);
  return {chores ? -solution.value : solution.value, std::move(solution.schedule)};
}

GuaranteeProfile guarantee_profile(const Instance& instance,
                                   const sched::SolveMode& mode,
                                   const sched::Budget& budget) {
  GuaranteeProfile profile;
  profile.agents.reserve(instance.n_agents());
  for (std::size_t i = 0; i < instance.n_agents(); ++i) {
    ShareValue lo = guarantee(instance, i, Share::kMaxMin, mode, budget);
    ShareValue hi = guarantee(instance, i, Share::kMinMax, mode, budget);
    profile.agents.push_back(AgentGuarantee{std::move(lo.value), std::move(lo.witness),
                                            std::move(hi.value), std::move(hi.witness)});
  }
  return profile;
}

}  // namespace mms
