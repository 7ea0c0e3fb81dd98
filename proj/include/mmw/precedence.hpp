#pragma once

#include "mmw/model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mmw {

// Transitive precedence relation over n tasks plus the number of (direct or
// indirect) predecessors of every task.
class CompletePrecedenceMatrix {
 public:
  // Builds the transitive closure of `edges`. Throws CyclicPrecedence if a
  // task would end up preceding itself.
  [[nodiscard]] static CompletePrecedenceMatrix build(std::size_t n, const std::vector<Edge>& edges);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  // True iff i precedes j directly or indirectly.
  [[nodiscard]] bool precedes(TaskIndex i, TaskIndex j) const {
    return relation_[i * n_ + j] != 0;
  }

  [[nodiscard]] std::size_t predecessor_count(TaskIndex j) const { return predecessors_[j].size(); }

  // All transitive successors / predecessors in ascending order.
  [[nodiscard]] std::span<const TaskIndex> successors(TaskIndex i) const { return successors_[i]; }
  [[nodiscard]] std::span<const TaskIndex> predecessors(TaskIndex j) const { return predecessors_[j]; }

  [[nodiscard]] std::size_t relation_size() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> relation_;  // row-major n x n
  std::vector<std::vector<TaskIndex>> successors_;
  std::vector<std::vector<TaskIndex>> predecessors_;
};

// Repairs a task sequence into a topological order. The sequence is scanned
// cyclically from its start; a task is emitted as soon as its remaining
// predecessor count reaches zero, and emitting it decrements the counts of
// its successors on a private copy. Already-topological sequences are
// returned unchanged.
//
// `sequence` must be a permutation of 0..n-1 (std::invalid_argument
// otherwise).
[[nodiscard]] std::vector<TaskIndex> correct_sequence(std::span<const TaskIndex> sequence,
                                                      const CompletePrecedenceMatrix& m);

// True iff `order` is a permutation that respects every pair of the relation.
[[nodiscard]] bool is_topological_order(std::span<const TaskIndex> order,
                                        const CompletePrecedenceMatrix& m);

}  // namespace mmw
