#pragma once

#include <cassert>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "efdf/rational.hpp"
#include "efdf/task.hpp"

namespace efdf {

// Two ready-queue designs with the same pop contract: remove and return
// the pending job with the minimum (abs_deadline, task_id) key. Both count
// the key comparisons they perform so their cost profiles can be measured:
// the binary heap pays O(log n) per operation, the per-deadline-class FIFO
// set pays O(q) where q is the number of distinct relative deadlines an
// application uses, independent of the number of queued jobs.

// Binary min-heap over (abs_deadline, task_id), hand-rolled so the
// comparison counts are well-defined: sift-up costs one comparison per
// level climbed, sift-down at most two per level descended.
class HeapQueue {
 public:
  void insert(Job job) {
    if (!ids_.insert(job.id).second) {
      throw std::invalid_argument("heap insert: duplicate job id");
    }
    heap_.push_back(std::move(job));
    sift_up(heap_.size() - 1);
  }

  Job pop_earliest() {
    if (heap_.empty()) throw std::out_of_range("heap pop: empty queue");
    Job top = std::move(heap_.front());
    ids_.erase(top.id);
    heap_.front() = std::move(heap_.back());
    heap_.pop_back();
    if (!heap_.empty()) sift_down(0);
    return top;
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  long long comparisons() const { return comparisons_; }
  void reset_comparisons() { comparisons_ = 0; }

 private:
  bool before(const Job& a, const Job& b) {
    ++comparisons_;
    return deadline_before(a, b);
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!before(heap_[i], heap_[parent])) break;
      std::swap(heap_[i], heap_[parent]);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    for (;;) {
      std::size_t left = 2 * i + 1;
      std::size_t right = left + 1;
      std::size_t best = i;
      if (left < heap_.size() && before(heap_[left], heap_[best])) best = left;
      if (right < heap_.size() && before(heap_[right], heap_[best])) {
        best = right;
      }
      if (best == i) break;
      std::swap(heap_[i], heap_[best]);
      i = best;
    }
  }

  std::vector<Job> heap_;
  std::set<JobId> ids_;
  long long comparisons_ = 0;
};

// One FIFO queue per registered relative deadline. Jobs must be inserted
// in non-descending release order (ties in ascending task id), which is
// how a scheduler feeds a ready queue; same relative deadline then makes
// each FIFO non-descending in absolute deadline, so only the q queue
// heads have to be compared on pop.
class DeadlineClassQueueSet {
 public:
  explicit DeadlineClassQueueSet(std::vector<Duration> rel_deadlines) {
    for (Duration& rel : rel_deadlines) {
      bool known = false;
      for (const ClassQueue& cls : classes_) {
        if (cls.rel_deadline == rel) {
          known = true;
          break;
        }
      }
      if (!known) classes_.push_back({std::move(rel), {}});
    }
    if (classes_.empty()) {
      throw std::invalid_argument("class queue set: no deadline classes");
    }
  }

  // The class lookup is a linear scan over the q registered deadlines;
  // those scan comparisons are the counted cost of an insert.
  void insert(Job job) {
    Duration rel = job.rel_deadline();
    for (ClassQueue& cls : classes_) {
      ++comparisons_;
      if (cls.rel_deadline == rel) {
        assert(cls.fifo.empty() || !deadline_before(job, cls.fifo.back()));
        cls.fifo.push_back(std::move(job));
        ++size_;
        return;
      }
    }
    throw std::invalid_argument(
        "class queue insert: unregistered relative-deadline class");
  }

  // Scans the queue heads, at most q-1 key comparisons.
  Job pop_earliest() {
    if (size_ == 0) throw std::out_of_range("class queue pop: empty queue");
    ClassQueue* best = nullptr;
    for (ClassQueue& cls : classes_) {
      if (cls.fifo.empty()) continue;
      if (best == nullptr) {
        best = &cls;
        continue;
      }
      ++comparisons_;
      if (deadline_before(cls.fifo.front(), best->fifo.front())) best = &cls;
    }
    Job job = std::move(best->fifo.front());
    best->fifo.pop_front();
    --size_;
    return job;
  }

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }
  std::size_t class_count() const { return classes_.size(); }

  long long comparisons() const { return comparisons_; }
  void reset_comparisons() { comparisons_ = 0; }

 private:
  struct ClassQueue {
    Duration rel_deadline;
    std::deque<Job> fifo;
  };

  std::vector<ClassQueue> classes_;
  std::size_t size_ = 0;
  long long comparisons_ = 0;
};

}  // namespace efdf
