#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "plab/rational.hpp"

namespace plab {

using RatVector = std::vector<Rational>;

/// Default cap on the bit size of any single matrix/vector entry during
/// exact simulation: one megabit. Exceeding it raises BitBudgetError
/// instead of silently degrading to floats.
inline constexpr std::size_t kDefaultBitBudget = 1'000'000;

class BitBudgetError : public std::runtime_error {
 public:
  explicit BitBudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense square matrix of exact rationals, row-major.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static RatMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Rational& at(std::size_t row, std::size_t col) { return a_[row * dim_ + col]; }
  const Rational& at(std::size_t row, std::size_t col) const { return a_[row * dim_ + col]; }

  RatMatrix transposed() const;
  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.dim_ == y.dim_ && x.a_ == y.a_;
  }

  /// Skips zero entries of the left factor, so permutation-like matrices
  /// multiply in O(dim^2).
  friend RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);

  /// this * v (column vector).
  RatVector apply(const RatVector& v) const;

  /// Largest entry bit size; feeds budget checks.
  std::size_t max_entry_bits() const;

  /// Submatrix on the given index set (order preserved).
  RatMatrix restricted(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t dim_;
  std::vector<Rational> a_;
};

/// A^m via repeated squaring with the squarings cached across queries.
/// Safe for concurrent readers; growth is serialized internally.
class PowerCache {
 public:
  explicit PowerCache(RatMatrix base);

  /// A^m * v. Throws BitBudgetError if any cached squaring needed for this
  /// query (or any entry of an intermediate vector) exceeds bit_budget.
  RatVector apply(const RatVector& v, std::uint64_t m,
                  std::size_t bit_budget = kDefaultBitBudget) const;

  /// A^m as a full matrix, same budget discipline.
  RatMatrix power(std::uint64_t m, std::size_t bit_budget = kDefaultBitBudget) const;

  const RatMatrix& base() const { return levels_.front(); }

 private:
  const RatMatrix& level(std::size_t i, std::size_t bit_budget) const;

  // deque: growth must not invalidate references handed to concurrent readers
  mutable std::mutex mu_;
  mutable std::deque<RatMatrix> levels_;  // levels_[i] == base^(2^i)
  mutable std::vector<std::size_t> level_bits_;
};

/// Left stochastic matrix: entries in [0,1], every column sums to exactly 1.
/// Entry (j, i) is the probability of moving from state i to state j.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(RatMatrix m);
  const RatMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }

 private:
  RatMatrix m_;
};

/// Real orthogonal matrix: transpose(M) * M == identity, exactly.
class OrthogonalMatrix {
 public:
  explicit OrthogonalMatrix(RatMatrix m);
  const RatMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }

 private:
  RatMatrix m_;
};

}  // namespace plab
