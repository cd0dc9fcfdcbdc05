#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

#include "efdf/rational.hpp"
#include "efdf/task.hpp"

namespace efdf {

// Total demand of the task set on a unit-speed processor: sum of exec/period.
inline Rational utilization(std::span<const TaskSpec> tasks) {
  Rational total = 0;
  for (const TaskSpec& task : tasks) total += task.utilization();
  return total;
}

// Exact test for implicit-deadline sets: schedulable under EDF on one
// unit-speed processor iff utilization <= 1. Callers with constrained or
// arbitrary deadlines must use edf_schedulable_constrained instead.
inline bool edf_schedulable_implicit(std::span<const TaskSpec> tasks) {
  for (const TaskSpec& task : tasks) {
    if (task.rel_deadline != task.period) {
      throw std::invalid_argument(
          "edf_schedulable_implicit: task deadline differs from period; "
          "use the constrained-deadline test");
    }
  }
  return utilization(tasks) <= 1;
}

// Density test: sum of exec / min(period, rel_deadline) <= 1. Exact when
// every deadline is at most its period; only sufficient when some deadline
// exceeds its period (a set failing the test may still be schedulable).
inline bool edf_schedulable_constrained(std::span<const TaskSpec> tasks) {
  Rational total = 0;
  for (const TaskSpec& task : tasks) total += task.density();
  return total <= 1;
}

// Slack of a job at `now` when executed at `speed`: time to its deadline
// minus the time its remaining work needs at that speed. Zero means run
// now or miss; negative means the deadline is already out of reach at
// that speed.
inline Rational laxity(const Job& job, const TimePoint& now,
                       const Rational& speed) {
  assert(speed > 0);
  return Rational((job.abs_deadline - now) - job.remaining / speed);
}

// Pending jobs partitioned into those that still have a chance to meet
// their deadline (set A) and those that do not (set B), both in deadline
// order. k = |A|.
struct FeasibilitySplit {
  std::vector<Job> set_a;
  std::vector<Job> set_b;

  int k() const { return static_cast<int>(set_a.size()); }
};

// Membership is decided by the sign of the laxity at the fastest speed:
// a necessary condition on the machine, so set B contains only jobs that
// are certain to miss.
inline FeasibilitySplit split_by_feasibility(std::span<const Job> jobs,
                                             const TimePoint& now,
                                             const Machine& machine) {
  FeasibilitySplit split;
  for (const Job& job : jobs) {
    assert(job.state == JobState::waiting || job.state == JobState::running);
    if (laxity(job, now, machine.fastest()) >= 0) {
      split.set_a.push_back(job);
    } else {
      split.set_b.push_back(job);
    }
  }
  std::sort(split.set_a.begin(), split.set_a.end(), deadline_before);
  std::sort(split.set_b.begin(), split.set_b.end(), deadline_before);
  return split;
}

struct AdmissionResult {
  std::vector<TaskSpec> admitted;
  std::vector<int> rejected;  // task ids, in submission order
};

// Hard admission control: walk the tasks in submission order and reject
// any whose addition pushes the density sum past the processor count m.
// On implicit-deadline sets the density sum equals the utilization, so
// this is the utilization <= m rule; constrained deadlines tighten it.
inline AdmissionResult admit_hard(std::span<const TaskSpec> tasks,
                                  const Machine& machine) {
  AdmissionResult result;
  Rational bound(machine.size());
  Rational total = 0;
  for (const TaskSpec& task : tasks) {
    Rational density = task.density();
    if (total + density <= bound) {
      total += density;
      result.admitted.push_back(task);
    } else {
      result.rejected.push_back(task.id);
    }
  }
  return result;
}

}  // namespace efdf
