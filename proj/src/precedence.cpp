#include "mmw/precedence.hpp"

#include "mmw/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace mmw {

CompletePrecedenceMatrix CompletePrecedenceMatrix::build(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<TaskIndex>> direct(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : edges) {
    if (e.before >= n || e.after >= n) {
      throw std::invalid_argument("precedence edge references an unknown task");
    }
    if (e.before == e.after) {
      throw CyclicPrecedence("task " + std::to_string(e.before + 1) + " precedes itself");
    }
    direct[e.before].push_back(e.after);
    ++indegree[e.after];
  }

  // Kahn order; leftovers mean a cycle.
  std::vector<TaskIndex> topo;
  topo.reserve(n);
  for (TaskIndex i = 0; i < n; ++i) {
    if (indegree[i] == 0) topo.push_back(i);
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (auto s : direct[topo[head]]) {
      if (--indegree[s] == 0) topo.push_back(s);
    }
  }
  if (topo.size() != n) {
    for (TaskIndex i = 0; i < n; ++i) {
      if (indegree[i] != 0) {
        throw CyclicPrecedence("task " + std::to_string(i + 1) + " transitively precedes itself");
      }
    }
  }

  CompletePrecedenceMatrix m;
  m.n_ = n;
  m.relation_.assign(n * n, 0);
  // Reverse topological sweep: row(i) = OR over direct successors s of
  // ({s} | row(s)).
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const auto i = *it;
    auto* row = &m.relation_[i * n];
    for (auto s : direct[i]) {
      row[s] = 1;
      const auto* srow = &m.relation_[s * n];
      for (std::size_t k = 0; k < n; ++k) row[k] |= srow[k];
    }
  }

  m.successors_.assign(n, {});
  m.predecessors_.assign(n, {});
  for (TaskIndex i = 0; i < n; ++i) {
    for (TaskIndex j = 0; j < n; ++j) {
      if (m.relation_[i * n + j] != 0) {
        m.successors_[i].push_back(j);
        m.predecessors_[j].push_back(i);
      }
    }
  }
  return m;
}

std::size_t CompletePrecedenceMatrix::relation_size() const noexcept {
  return std::accumulate(successors_.begin(), successors_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& s) { return acc + s.size(); });
}

namespace {

void require_permutation(std::span<const TaskIndex> seq, std::size_t n) {
  if (seq.size() != n) throw std::invalid_argument("sequence length differs from task count");
  std::vector<bool> seen(n, false);
  for (auto t : seq) {
    if (t >= n || seen[t]) throw std::invalid_argument("sequence is not a permutation");
    seen[t] = true;
  }
}

}  // namespace

std::vector<TaskIndex> correct_sequence(std::span<const TaskIndex> sequence,
                                        const CompletePrecedenceMatrix& m) {
  const auto n = m.size();
  require_permutation(sequence, n);

  std::vector<std::size_t> remaining(n);
  for (TaskIndex j = 0; j < n; ++j) remaining[j] = m.predecessor_count(j);
  std::vector<bool> emitted(n, false);

  std::vector<TaskIndex> out;
  out.reserve(n);
  std::size_t cursor = 0;
  while (out.size() < n) {
    const auto a = sequence[cursor];
    if (!emitted[a] && remaining[a] == 0) {
      emitted[a] = true;
      out.push_back(a);
      for (auto k : m.successors(a)) --remaining[k];
    }
    if (++cursor == n) cursor = 0;
  }
  return out;
}

bool is_topological_order(std::span<const TaskIndex> order, const CompletePrecedenceMatrix& m) {
  const auto n = m.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (order[p] >= n || position[order[p]] != n) return false;
    position[order[p]] = p;
  }
  for (TaskIndex i = 0; i < n; ++i) {
    for (auto j : m.successors(i)) {
      if (position[i] > position[j]) return false;
    }
  }
  return true;
}

}  // namespace mmw
