#include "pgn/ballgame.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "pgn/errors.hpp"

namespace pgn {

namespace {

// Deterministic 64-bit stream; fixed here so generated paths are identical
// across standard libraries and platforms.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Geometric on {1, 2, ...} with success probability 1/mean.
  int geometric(int mean) {
    int draws = 1;
    while (below(static_cast<std::uint64_t>(mean)) != 0) ++draws;
    return draws;
  }
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng{seed ^ (0x9E3779B97F4A7C15ull * (index + 1))};
  return rng.next();
}

bool constraint_allows(const GenerationPolicy& policy,
                       const RationalVector& positions,
                       const Rational& clock) {
  if (!policy.state_constraint || clock <= 0) return true;
  return policy.state_constraint(RationalVector(positions / clock));
}

// Maximal tie range of equal positions containing index i.
CoordinateBlock cluster_of(const RationalVector& positions, Eigen::Index i) {
  CoordinateBlock c{i, i};
  while (c.low > 0 && positions(c.low - 1) == positions(i)) --c.low;
  while (c.high + 1 < positions.size() && positions(c.high + 1) == positions(i))
    ++c.high;
  return c;
}

}  // namespace

void GenerationPolicy::validate() const {
  if (dimension < 2) throw BadParametersError("policy dimension must be >= 2");
  if (mesh <= 0) throw BadParametersError("policy mesh must be positive");
  if (steps < 1) throw BadParametersError("policy needs at least one step");
  if (mean_move_units < 1) {
    throw BadParametersError("mean move length must be >= 1 mesh unit");
  }
  if (max_retries < 1) throw BadParametersError("max_retries must be >= 1");
}

PLPath random_rigid_system(const GenerationPolicy& policy) {
  policy.validate();
  const Eigen::Index n = policy.dimension;
  const Rational& delta = policy.mesh;
  SplitMix64 rng{policy.seed};

  // Smallest all-distinct start on the mesh grid; the ball begins in front
  // so the first pass has room to go backward.
  RationalVector positions(n);
  for (Eigen::Index i = 0; i < n; ++i) positions(i) = delta * (i + 1);
  Rational clock = positions.sum();
  Eigen::Index holder = 0;

  std::vector<Rational> abscissae{clock};
  std::vector<RationalVector> values{positions};

  for (int step = 0; step < policy.steps; ++step) {
    bool committed = false;
    for (int attempt = 0; attempt < policy.max_retries && !committed;
         ++attempt) {
      Rational move = delta * rng.geometric(policy.mean_move_units);
      bool met = false;
      if (holder + 1 < n) {
        const Rational gap = positions(holder + 1) - positions(holder);
        if (move >= gap) {
          move = gap;
          met = true;
        }
      }
      RationalVector next_positions = positions;
      next_positions(holder) += move;
      const Rational next_clock = clock + move;
      if (!constraint_allows(policy, next_positions, next_clock)) continue;

      // Forward passes happen exactly at meets; otherwise the ball goes to
      // the mover or any player behind it, keeping backward passes at
      // all-distinct states (the met state has a tie).
      const Eigen::Index next_holder =
          met ? holder + 1
              : static_cast<Eigen::Index>(
                    rng.below(static_cast<std::uint64_t>(holder + 1)));

      positions = std::move(next_positions);
      clock = next_clock;
      holder = next_holder;
      abscissae.push_back(clock);
      values.push_back(positions);
      committed = true;
    }
    if (!committed) {
      throw InfeasibleStepError(
          "constraint hook rejected every move at clock " + to_string(clock));
    }
  }
  return PLPath(n, std::move(abscissae), std::move(values));
}

PLPath random_generalized_system(const GenerationPolicy& policy) {
  policy.validate();
  const Eigen::Index n = policy.dimension;
  const Rational& delta = policy.mesh;
  SplitMix64 rng{policy.seed};

  RationalVector positions = RationalVector::Zero(n);
  Rational clock = 0;
  // All players start tied at 0; any block touching the top is admissible.
  CoordinateBlock holder{0, n - 1};
  if (policy.pass_policy == PassPolicy::UniformAdmissible) {
    holder.low = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n)));
  }

  std::vector<Rational> abscissae{clock};
  std::vector<RationalVector> values{positions};

  for (int step = 0; step < policy.steps; ++step) {
    bool committed = false;
    for (int attempt = 0; attempt < policy.max_retries && !committed;
         ++attempt) {
      // Clock advance; each block member rises by advance / block size,
      // capped so the block top cannot pass the next cluster.
      Rational advance = delta * rng.geometric(policy.mean_move_units);
      Rational rise = advance / holder.size();
      if (holder.high + 1 < n) {
        const Rational gap = positions(holder.high + 1) - positions(holder.low);
        if (rise >= gap) {
          rise = gap;
          advance = gap * holder.size();
        }
      }
      RationalVector next_positions = positions;
      for (Eigen::Index i = holder.low; i <= holder.high; ++i) {
        next_positions(i) += rise;
      }
      const Rational next_clock = clock + advance;
      if (!constraint_allows(policy, next_positions, next_clock)) continue;

      // Admissible next blocks: top-aligned sub-blocks of the cluster now
      // containing the old holder, or of any cluster strictly below it.
      const CoordinateBlock home = cluster_of(next_positions, holder.high);
      std::vector<CoordinateBlock> admissible;
      for (Eigen::Index low = home.low; low <= home.high; ++low) {
        admissible.push_back({low, home.high});
      }
      Eigen::Index i = home.low;
      while (i > 0) {
        const CoordinateBlock below = cluster_of(next_positions, i - 1);
        for (Eigen::Index low = below.low; low <= below.high; ++low) {
          admissible.push_back({low, below.high});
        }
        i = below.low;
      }
      CoordinateBlock next_holder = home;
      if (policy.pass_policy == PassPolicy::UniformAdmissible) {
        next_holder = admissible[static_cast<std::size_t>(
            rng.below(admissible.size()))];
      }

      positions = std::move(next_positions);
      clock = next_clock;
      holder = next_holder;
      abscissae.push_back(clock);
      values.push_back(positions);
      committed = true;
    }
    if (!committed) {
      throw InfeasibleStepError(
          "constraint hook rejected every move at clock " + to_string(clock));
    }
  }
  return PLPath(n, std::move(abscissae), std::move(values));
}

std::vector<SpectrumPoint> sample_spectrum(const LinearMap& map,
                                           const GenerationPolicy& policy,
                                           int count,
                                           const Rational& tail_fraction,
                                           bool generalized, int threads) {
  policy.validate();
  if (count < 1) throw BadParametersError("sample count must be >= 1");
  if (map.input_dimension() != policy.dimension) {
    throw DimensionMismatchError("map and policy dimensions differ");
  }
  threads = std::max(1, std::min<int>(threads, count));

  std::vector<SpectrumPoint> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    points.push_back(SpectrumPoint::exact(RationalVector::Zero(1)));  // filled below
  }
  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      GenerationPolicy sample_policy = policy;
      sample_policy.seed = derive_seed(policy.seed, static_cast<std::uint64_t>(i));
      const PLPath path = generalized ? random_generalized_system(sample_policy)
                                      : random_rigid_system(sample_policy);
      points[static_cast<std::size_t>(i)] = mu_estimate(map, path, tail_fraction);
    }
  };
  if (threads == 1) {
    worker(0, count);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int begin = t * chunk;
      const int end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  std::sort(points.begin(), points.end(),
            [](const SpectrumPoint& a, const SpectrumPoint& b) {
              return lexicographic_less(a.values(), b.values());
            });
  return points;
}

}  // namespace pgn
