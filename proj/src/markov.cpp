#include "plab/markov.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "plab/numtheory.hpp"
#include "plab/parallel.hpp"

namespace plab {

namespace {

// Iterative Tarjan SCC. Returns component id per vertex; ids are assigned in
// reverse topological order (a component's successors have smaller ids).
std::vector<std::size_t> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& succ, std::size_t& component_count) {
  const std::size_t n = succ.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), lowlink(n, 0), component(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;
  component_count = 0;

  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < succ[f.v].size()) {
        const std::size_t w = succ[f.v][f.edge++];
        if (index[w] == kUnset) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          while (true) {
            const std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component[w] = component_count;
            if (w == f.v) break;
          }
          ++component_count;
        }
        const std::size_t v = f.v;
        call.pop_back();
        if (!call.empty())
          lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
      }
    }
  }
  return component;
}

}  // namespace

ChainStructure analyze_chain(const StochasticMatrix& matrix) {
  const std::size_t n = matrix.dim();
  const RatMatrix& A = matrix.matrix();

  // Edge i -> j iff the one-step probability A(j, i) is nonzero (exact).
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (A.at(j, i).sign() != 0) succ[i].push_back(j);

  std::size_t component_count = 0;
  const std::vector<std::size_t> component =
      strongly_connected_components(succ, component_count);

  // A component is ergodic iff no edge leaves it.
  std::vector<bool> is_bottom(component_count, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : succ[i])
      if (component[j] != component[i]) is_bottom[component[i]] = false;

  std::vector<std::vector<std::size_t>> members(component_count);
  for (std::size_t i = 0; i < n; ++i) members[component[i]].push_back(i);

  ChainStructure out;
  for (std::size_t c = 0; c < component_count; ++c) {
    if (!is_bottom[c]) {
      out.transient.insert(out.transient.end(), members[c].begin(), members[c].end());
      continue;
    }
    const std::vector<std::size_t>& set = members[c];

    // BFS level labelling; the period is the gcd of level[u]+1-level[v]
    // over all internal edges (tree edges contribute 0).
    std::vector<std::int64_t> level(n, -1);
    std::deque<std::size_t> queue{set.front()};
    level[set.front()] = 0;
    std::uint64_t g = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : succ[u]) {
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        } else {
          const std::int64_t diff = level[u] + 1 - level[v];
          g = std::gcd(g, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
        }
      }
    }
    const std::uint64_t t = g == 0 ? 1 : g;

    std::vector<std::uint64_t> residues;
    residues.reserve(set.size());
    for (std::size_t v : set)
      residues.push_back(static_cast<std::uint64_t>(level[v]) % t);

    out.ergodic_sets.push_back(set);
    out.periods.push_back(t);
    out.cyclic_residue.push_back(std::move(residues));
  }
  std::sort(out.transient.begin(), out.transient.end());
  out.D = out.periods.empty() ? 1 : lcm_list_u64(out.periods);
  return out;
}

LimitProfile limit_profile(const UnaryPFA& pfa, const ChainStructure& structure,
                           std::uint64_t r_max, double tolerance) {
  if (r_max < 16) throw std::invalid_argument("limit_profile: r_max must be >= 16");
  const std::size_t n = pfa.state_count();
  const std::uint64_t D = structure.D;

  // Double-precision shadow of the transition matrix and its squarings.
  std::vector<std::vector<double>> squarings;
  {
    std::vector<double> base(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        base[r * n + c] = pfa.transition().matrix().at(r, c).to_double();
    squarings.push_back(std::move(base));
  }
  const auto matmul = [n](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const double aik = a[i * n + k];
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
      }
    return out;
  };
  const auto ensure_levels = [&](std::uint64_t m) {
    std::size_t need = 0;
    while ((m >> need) != 0) ++need;
    while (squarings.size() < need)
      squarings.push_back(matmul(squarings.back(), squarings.back()));
  };
  const auto acceptance_at = [&](std::uint64_t m) {
    ensure_levels(m);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = pfa.initial()[i].to_double();
    std::size_t lvl = 0;
    while (m != 0) {
      if (m & 1u) {
        std::vector<double> w(n, 0.0);
        const std::vector<double>& sq = squarings[lvl];
        for (std::size_t i = 0; i < n; ++i) {
          double acc = 0.0;
          for (std::size_t k = 0; k < n; ++k) acc += sq[i * n + k] * v[k];
          w[i] = acc;
        }
        v.swap(w);
      }
      m >>= 1;
      ++lvl;
    }
    double acc = 0.0;
    for (std::size_t i : pfa.accepting()) acc += v[i];
    return acc;
  };

  std::vector<std::uint64_t> ladder;
  for (std::uint64_t r = 16; r <= r_max; r *= 2) ladder.push_back(r);
  if (ladder.empty() || ladder.back() != r_max) ladder.push_back(r_max);

  // Grow the squaring cache up front; the per-residue sweep below only reads.
  ensure_levels(ladder.back() * D + (D - 1));

  LimitProfile out;
  out.per_residue.resize(D);
  parallel_for(0, D, [&](std::size_t j) {
    double prev = 0.0, last = 0.0;
    for (std::size_t s = 0; s < ladder.size(); ++s) {
      prev = last;
      last = acceptance_at(ladder[s] * D + j);
    }
    out.per_residue[j].estimate = last;
    out.per_residue[j].stable =
        ladder.size() >= 2 && std::abs(last - prev) < tolerance;
  });
  return out;
}

std::vector<std::vector<std::size_t>> period_certificate(const ChainStructure& structure,
                                                         std::size_t ergodic_index) {
  if (ergodic_index >= structure.ergodic_sets.size())
    throw std::invalid_argument("period_certificate: ergodic set index out of range");
  const auto& set = structure.ergodic_sets[ergodic_index];
  const auto& residues = structure.cyclic_residue[ergodic_index];
  const std::uint64_t t = structure.periods[ergodic_index];
  std::vector<std::vector<std::size_t>> subsets(t);
  for (std::size_t i = 0; i < set.size(); ++i)
    subsets[residues[i]].push_back(set[i]);
  for (auto& s : subsets) std::sort(s.begin(), s.end());
  return subsets;
}

}  // namespace plab
