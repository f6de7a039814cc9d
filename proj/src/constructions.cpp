#include "plab/constructions.hpp"

#include <stdexcept>

#include "plab/interval.hpp"
#include "plab/markov.hpp"
#include "plab/numtheory.hpp"

namespace plab {

UnaryMCQFA build_theta_qfa(const PythagoreanAngle& phi) {
  return UnaryMCQFA({"q1", "q2"}, OrthogonalMatrix(phi.rotation_matrix()),
                    {Rational(1), Rational(0)}, {0});
}

LknQfa::LknQfa(std::uint64_t k, std::uint64_t n)
    : k_(k), n_(n), cache_(std::make_shared<CosSqCache>()) {
  if (k == 0 || n == 0) throw std::invalid_argument("LknQfa: k and n must be >= 1");
  primes_ = prime_window(n, k);
  cache_->table.resize(k);
  for (std::uint64_t j = 1; j <= k; ++j) {
    states_.push_back("q" + std::to_string(j) + "_0");
    states_.push_back("q" + std::to_string(j) + "_1");
    accepting_.insert(2 * (j - 1));
  }
}

ProbInterval LknQfa::block_cos_sq(std::size_t block, std::uint64_t residue) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& table = cache_->table[block];
  if (table.empty()) table.resize(primes_[block]);
  auto& slot = table[residue];
  if (!slot) {
    const MpfrInterval angle =
        MpfrInterval::pi().scaled_by(2 * residue).divided_by(primes_[block]);
    const MpfrInterval value = angle.cos().squared();
    slot = std::make_unique<ProbInterval>(ProbInterval{value.lower(), value.upper()});
  }
  return *slot;
}

AcceptanceValue LknQfa::accept_probability(const Integer& m) const {
  if (m < 0) throw std::invalid_argument("LknQfa: negative input length");
  std::vector<std::uint64_t> residues(k_);
  std::size_t zero_blocks = 0;
  for (std::size_t j = 0; j < k_; ++j) {
    residues[j] = mpz_fdiv_ui(m.get_mpz_t(), static_cast<unsigned long>(primes_[j]));
    if (residues[j] == 0) ++zero_blocks;
  }
  if (zero_blocks == k_) return Rational(1);  // yes-instances decided symbolically

  Rational lo(static_cast<unsigned long>(zero_blocks));
  Rational hi = lo;
  for (std::size_t j = 0; j < k_; ++j) {
    if (residues[j] == 0) continue;
    const ProbInterval c = block_cos_sq(j, residues[j]);
    lo += c.lo;
    hi += c.hi;
  }
  const Rational den(static_cast<unsigned long>(k_));
  return ProbInterval{lo / den, hi / den};
}

AcceptanceValue LknQfa::accept_probability(std::uint64_t m) const {
  return accept_probability(Integer(std::to_string(m)));
}

ProbInterval LknQfa::accept_probability_interval(const Integer& m) const {
  if (m < 0) throw std::invalid_argument("LknQfa: negative input length");
  Rational lo, hi;
  for (std::size_t j = 0; j < k_; ++j) {
    const std::uint64_t r =
        mpz_fdiv_ui(m.get_mpz_t(), static_cast<unsigned long>(primes_[j]));
    const ProbInterval c = block_cos_sq(j, r);
    lo += c.lo;
    hi += c.hi;
  }
  const Rational den(static_cast<unsigned long>(k_));
  return ProbInterval{lo / den, hi / den};
}

LknQfa build_lkn_qfa(std::uint64_t k, std::uint64_t n) { return LknQfa(k, n); }

UnaryPFA build_lkn_pfa(std::uint64_t k, std::uint64_t n) {
  const std::vector<std::uint64_t> primes = prime_window(n, k);
  std::size_t total = 0;
  for (std::uint64_t p : primes) total += static_cast<std::size_t>(p);

  std::vector<std::string> names;
  names.reserve(total);
  RatMatrix transition(total);
  RatVector initial(total);
  StateSet accepting;
  const Rational share(1, static_cast<long>(k));

  std::size_t offset = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t p = static_cast<std::size_t>(primes[i]);
    for (std::size_t j = 0; j < p; ++j) {
      names.push_back("q" + std::to_string(i + 1) + "_" + std::to_string(j));
      transition.at(offset + (j + 1) % p, offset + j) = 1;
    }
    initial[offset] = share;
    accepting.insert(offset);
    offset += p;
  }
  return UnaryPFA(std::move(names), StochasticMatrix(std::move(transition)),
                  std::move(initial), std::move(accepting));
}

UnaryDFA build_lkn_dfa(std::uint64_t k, std::uint64_t n) {
  const std::uint64_t prime_count = k / 3 + 2;
  const std::vector<std::uint64_t> primes = prime_window(n, prime_count);
  std::uint64_t t = 1;
  for (std::uint64_t p : primes) {
    if (t > (std::uint64_t{1} << 31) / p)
      throw std::invalid_argument("build_lkn_dfa: cycle length exceeds 2^31 states; "
                                  "refusing to materialize");
    t *= p;
  }
  std::vector<std::string> names;
  std::vector<std::size_t> next(t);
  names.reserve(t);
  for (std::uint64_t i = 0; i < t; ++i) {
    names.push_back("q" + std::to_string(i));
    next[i] = static_cast<std::size_t>((i + 1) % t);
  }
  return UnaryDFA(std::move(names), std::move(next), 0, {0});
}

namespace {

Rational window_mean(const std::vector<Rational>& samples) {
  Rational sum;
  for (const auto& s : samples) sum += s;
  return sum / Rational(static_cast<unsigned long>(samples.size()));
}

}  // namespace

CyclicDfaConversion pfa_to_cyclic_dfa(
    const UnaryPFA& pfa, const Rational& epsilon,
    const std::function<PromiseLabel(std::uint64_t)>& problem,
    std::uint64_t search_bound, const ConversionOptions& options) {
  const Rational half(1, 2);
  if (!(epsilon < half))
    throw std::invalid_argument("pfa_to_cyclic_dfa: epsilon must be < 1/2");
  if (options.window == 0)
    throw std::invalid_argument("pfa_to_cyclic_dfa: window must be positive");

  const ChainStructure structure = analyze_chain(pfa.transition());
  const std::uint64_t D = structure.D;
  const std::uint64_t W = options.window;
  const Rational margin = options.margin ? *options.margin : (half - epsilon) / Rational(4);

  // Exact acceptance along one residue class j at r = r0 .. r0+count-1,
  // stepping by D via the cached powers.
  const auto window_samples = [&](std::uint64_t j, std::uint64_t r0, std::uint64_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    RatVector v = pfa.powers().apply(pfa.initial(), r0 * D + j, options.bit_budget);
    for (std::uint64_t s = 0; s < count; ++s) {
      if (s > 0) v = pfa.powers().apply(v, D, options.bit_budget);
      Rational acc;
      for (std::size_t i : pfa.accepting()) acc += v[i];
      out.push_back(std::move(acc));
    }
    return out;
  };

  std::vector<Rational> limits;
  std::uint64_t stable_start = 0;
  bool stable = false;
  for (std::uint64_t r0 = 0; r0 + 2 * W <= search_bound; r0 += W) {
    limits.clear();
    bool all_within = true;
    for (std::uint64_t j = 0; j < D && all_within; ++j) {
      const std::vector<Rational> first = window_samples(j, r0, W);
      const std::vector<Rational> second = window_samples(j, r0 + W, W);
      const Rational m1 = window_mean(first);
      const Rational m2 = window_mean(second);
      if ((m1 - m2).abs() >= margin) {
        all_within = false;
        break;
      }
      limits.push_back(m2);
    }
    if (all_within) {
      stable = true;
      stable_start = r0;
      break;
    }
  }
  if (!stable)
    throw StabilizationError(
        "pfa_to_cyclic_dfa: limit estimates oscillate beyond the margin within the "
        "search bound of " + std::to_string(search_bound) +
        " window multiples; the PFA may not solve the problem");

  // Tail covers lengths below (stable_start + 2W) * D; the cycle takes over after.
  const std::uint64_t threshold = (stable_start + 2 * W) * D;
  const std::size_t tail = static_cast<std::size_t>(threshold);
  std::vector<std::string> names;
  std::vector<std::size_t> next(tail + D);
  StateSet accepting;
  names.reserve(tail + D);

  RatVector v = pfa.initial();
  for (std::size_t i = 0; i < tail; ++i) {
    names.push_back("tail" + std::to_string(i));
    next[i] = i + 1;
    Rational acc;
    for (std::size_t s : pfa.accepting()) acc += v[s];
    if (acc >= half) accepting.insert(i);
    v = pfa.transition().matrix().apply(v);
  }
  for (std::uint64_t j = 0; j < D; ++j) {
    names.push_back("cycle" + std::to_string(j));
    next[tail + j] = tail + (j + 1) % D;
    if (limits[j] >= half) accepting.insert(tail + j);
  }
  if (tail > 0) next[tail - 1] = tail + threshold % D;

  UnaryDFA dfa(std::move(names), std::move(next), 0, std::move(accepting));

  // Agreement spot-check on promised lengths just past the threshold.
  if (problem) {
    for (std::uint64_t m = threshold; m < threshold + 2 * W * D; ++m) {
      if (problem(m) == PromiseLabel::Unpromised) continue;
      Rational acc;
      const RatVector w = pfa.powers().apply(pfa.initial(), m, options.bit_budget);
      for (std::size_t s : pfa.accepting()) acc += w[s];
      if ((acc >= half) != dfa_accepts(dfa, m))
        throw StabilizationError(
            "pfa_to_cyclic_dfa: converted DFA disagrees with the PFA's rounded "
            "decision at promised length " + std::to_string(m) +
            "; limit estimates stabilized prematurely");
    }
  }

  return CyclicDfaConversion{std::move(dfa), D, threshold, std::move(limits)};
}

}  // namespace plab
