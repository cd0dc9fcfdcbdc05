#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "efdf/rational.hpp"

namespace efdf {

// A periodic task. Jobs of the task are released at phase + k*period and
// must finish exec units of work within rel_deadline of their release.
// exec > max(period, rel_deadline) is legal input: overload workloads are
// a supported use case, not an error.
struct TaskSpec {
  int id = 0;
  Duration exec;
  Duration period;
  Duration rel_deadline;
  TimePoint phase = 0;

  Rational utilization() const { return Rational(exec / period); }
  Rational density() const {
    return Rational(exec / (rel_deadline < period ? rel_deadline : period));
  }
};

inline void validate(const TaskSpec& task) {
  if (task.exec <= 0) throw std::invalid_argument("task: exec must be > 0");
  if (task.period <= 0) throw std::invalid_argument("task: period must be > 0");
  if (task.rel_deadline <= 0) {
    throw std::invalid_argument("task: rel_deadline must be > 0");
  }
  if (task.phase < 0) throw std::invalid_argument("task: phase must be >= 0");
}

using JobId = std::int64_t;

enum class JobState { waiting, running, completed, aborted, missed };

// One released instance of a task. `id` is assigned by the simulator in
// release order; jobs built directly in tests may set it by hand.
struct Job {
  JobId id = -1;
  int task_id = 0;
  TimePoint release;
  TimePoint abs_deadline;
  Duration remaining;
  std::optional<int> last_cpu;
  JobState state = JobState::waiting;

  Duration rel_deadline() const { return Duration(abs_deadline - release); }
};

// Deadline-order key used everywhere a pop or sort must be deterministic:
// earlier absolute deadline first, ties broken by task id.
inline bool deadline_before(const Job& a, const Job& b) {
  int c = cmp(a.abs_deadline, b.abs_deadline);
  if (c != 0) return c < 0;
  return a.task_id < b.task_id;
}

// An ordered set of processors with positive speeds, fastest first.
// A job running for t time units on a processor of speed s completes
// s*t units of work.
class Machine {
 public:
  explicit Machine(std::vector<Rational> speeds) : speeds_(std::move(speeds)) {
    if (speeds_.empty()) {
      throw std::invalid_argument("machine: needs at least one processor");
    }
    for (std::size_t j = 0; j < speeds_.size(); ++j) {
      if (speeds_[j] <= 0) {
        throw std::invalid_argument("machine: speeds must be positive");
      }
      if (j > 0 && speeds_[j] > speeds_[j - 1]) {
        throw std::invalid_argument("machine: speeds must be non-increasing");
      }
    }
  }

  int size() const { return static_cast<int>(speeds_.size()); }
  const Rational& speed(int j) const { return speeds_.at(j); }
  const Rational& fastest() const { return speeds_.front(); }
  const std::vector<Rational>& speeds() const { return speeds_; }

 private:
  std::vector<Rational> speeds_;
};

// The k-th job of a task: released at phase + k*period, due rel_deadline
// later, with the full execution requirement still outstanding.
inline Job release_job(const TaskSpec& task, long long k) {
  if (k < 0) throw std::invalid_argument("release_job: k must be >= 0");
  Job job;
  job.task_id = task.id;
  job.release = TimePoint(task.phase + k * task.period);
  job.abs_deadline = TimePoint(job.release + task.rel_deadline);
  job.remaining = task.exec;
  job.state = JobState::waiting;
  return job;
}

inline Duration work_done(const Rational& speed, const Duration& elapsed) {
  assert(speed > 0);
  assert(elapsed >= 0);
  return Duration(speed * elapsed);
}

// Least common multiple of the task periods. Only integer periods have a
// well-defined desk-scale hyperperiod here; anything else is rejected.
inline Duration hyperperiod(std::span<const TaskSpec> tasks) {
  mpz_class acc = 1;
  for (const TaskSpec& task : tasks) {
    if (task.period.get_den() != 1) {
      throw std::invalid_argument(
          "hyperperiod: unsupported non-integer period");
    }
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), task.period.get_num_mpz_t());
  }
  return Duration(acc);
}

}  // namespace efdf
