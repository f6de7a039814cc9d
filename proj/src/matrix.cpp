#include "plab/matrix.hpp"

#include <string>

namespace plab {

RatMatrix RatMatrix::identity(std::size_t dim) {
  RatMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.dim() != rhs.dim())
    throw std::invalid_argument("RatMatrix: dimension mismatch in multiply");
  const std::size_t d = lhs.dim();
  RatMatrix out(d);
  std::vector<std::size_t> nz;
  nz.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    nz.clear();
    for (std::size_t k = 0; k < d; ++k)
      if (lhs.at(i, k).sign() != 0) nz.push_back(k);
    for (std::size_t j = 0; j < d; ++j) {
      Rational acc;
      for (std::size_t k : nz) acc += lhs.at(i, k) * rhs.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("RatMatrix: vector size mismatch");
  RatVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rational acc;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (a_[i * dim_ + k].sign() == 0) continue;
      acc += a_[i * dim_ + k] * v[k];
    }
    out[i] = std::move(acc);
  }
  return out;
}

std::size_t RatMatrix::max_entry_bits() const {
  std::size_t best = 0;
  for (const auto& e : a_) {
    const std::size_t b = e.bit_size();
    if (b > best) best = b;
  }
  return best;
}

RatMatrix RatMatrix::restricted(const std::vector<std::size_t>& indices) const {
  RatMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c)
      out.at(r, c) = at(indices[r], indices[c]);
  return out;
}

PowerCache::PowerCache(RatMatrix base) {
  level_bits_.push_back(base.max_entry_bits());
  levels_.push_back(std::move(base));
}

const RatMatrix& PowerCache::level(std::size_t i, std::size_t bit_budget) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (levels_.size() <= i) {
    if (level_bits_.back() * 2 > bit_budget)
      throw BitBudgetError("matrix power: squaring would exceed the bit budget of " +
                           std::to_string(bit_budget) + " bits per entry");
    RatMatrix sq = levels_.back() * levels_.back();
    level_bits_.push_back(sq.max_entry_bits());
    levels_.push_back(std::move(sq));
  }
  if (level_bits_[i] > bit_budget)
    throw BitBudgetError("matrix power: cached level exceeds the bit budget of " +
                         std::to_string(bit_budget) + " bits per entry");
  return levels_[i];
}

RatVector PowerCache::apply(const RatVector& v, std::uint64_t m,
                            std::size_t bit_budget) const {
  RatVector out = v;
  std::size_t i = 0;
  while (m != 0) {
    if (m & 1u) {
      out = level(i, bit_budget).apply(out);
      for (const auto& e : out)
        if (e.bit_size() > bit_budget)
          throw BitBudgetError("matrix power: state vector entry exceeds the bit budget");
    }
    m >>= 1;
    ++i;
  }
  return out;
}

RatMatrix PowerCache::power(std::uint64_t m, std::size_t bit_budget) const {
  RatMatrix out = RatMatrix::identity(base().dim());
  std::size_t i = 0;
  while (m != 0) {
    if (m & 1u) out = level(i, bit_budget) * out;
    m >>= 1;
    ++i;
  }
  return out;
}

StochasticMatrix::StochasticMatrix(RatMatrix m) : m_(std::move(m)) {
  const std::size_t d = m_.dim();
  if (d == 0) throw std::invalid_argument("StochasticMatrix: empty matrix");
  for (std::size_t c = 0; c < d; ++c) {
    Rational sum;
    for (std::size_t r = 0; r < d; ++r) {
      const Rational& e = m_.at(r, c);
      if (e.sign() < 0 || e > Rational(1))
        throw std::invalid_argument("StochasticMatrix: entry outside [0,1] at (" +
                                    std::to_string(r) + "," + std::to_string(c) + ")");
      sum += e;
    }
    if (sum != Rational(1))
      throw std::invalid_argument("StochasticMatrix: column " + std::to_string(c) +
                                  " sums to " + sum.str() + ", expected 1");
  }
}

OrthogonalMatrix::OrthogonalMatrix(RatMatrix m) : m_(std::move(m)) {
  if (m_.dim() == 0) throw std::invalid_argument("OrthogonalMatrix: empty matrix");
  if (!(m_.transposed() * m_ == RatMatrix::identity(m_.dim())))
    throw std::invalid_argument("OrthogonalMatrix: transpose(M)*M != identity");
}

}  // namespace plab
