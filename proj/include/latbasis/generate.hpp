#pragma once

// Reproducible random instances for tests, benchmarks and the gen command.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "latbasis/errors.hpp"
#include "latbasis/exact_arith.hpp"
#include "latbasis/exact_linalg.hpp"
#include "latbasis/matrix.hpp"

namespace latbasis {

struct GenSpec {
  std::size_t rows = 2;
  std::size_t cols = 3;
  std::int64_t max_entry = 50;
  std::size_t rank = 2;
  std::uint64_t seed = 1;
};

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Matrix of the given rank with every entry in [-max_entry, max_entry].
// The first `rank` generators are drawn until independent; the others are
// small integral combinations of them (or, at full row rank, fresh random
// vectors), so the rank is exact. Column positions are shuffled.
inline IntMatrix generate_instance(const GenSpec& spec) {
  if (spec.rank > std::min(spec.rows, spec.cols)) throw DimensionMismatch("requested rank exceeds matrix shape");
  if (spec.max_entry < 1) throw DimensionMismatch("max_entry must be positive");
  std::mt19937_64 rng(spec.seed);
  const std::size_t d = spec.rows;
  const std::size_t n = spec.cols;
  const std::size_t k = spec.rank;
  const std::int64_t e = spec.max_entry;

  IntMatrix base(d, k);
  for (int attempt = 0;; ++attempt) {
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < d; ++r) base(r, c) = uniform(rng, -e, e);
    if (rank(base) == k) break;
    if (attempt > 1000) {
      base = IntMatrix(d, k);
      for (std::size_t c = 0; c < k; ++c) base(c, c) = 1;
      break;
    }
  }

  IntMatrix out(d, n);
  std::vector<std::size_t> slots(n);
  for (std::size_t i = 0; i < n; ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  for (std::size_t c = 0; c < k; ++c) out.set_col(slots[c], base.col(c));

  const Int bound = e;
  for (std::size_t c = k; c < n; ++c) {
    IntVector v(d, Int(0));
    if (k == d && uniform(rng, 0, 1) == 0) {
      for (std::size_t r = 0; r < d; ++r) v[r] = uniform(rng, -e, e);
    } else if (k > 0) {
      bool ok = false;
      for (int tries = 0; tries < 20 && !ok; ++tries) {
        v.assign(d, Int(0));
        for (std::size_t g = 0; g < k; ++g) {
          const Int f = uniform(rng, -2, 2);
          for (std::size_t r = 0; r < d; ++r) v[r] += f * base(r, g);
        }
        ok = max_norm(std::span<const Int>(v)) <= bound;
      }
      if (!ok) {
        const std::size_t g = uniform(rng, 0, k - 1);
        const Int sign = uniform(rng, 0, 1) ? 1 : -1;
        for (std::size_t r = 0; r < d; ++r) v[r] = sign * base(r, g);
      }
    }
    out.set_col(slots[c], v);
  }
  return out;
}

// Independent uniform entries in [lo, hi]; rank is whatever comes out.
inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
  IntMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = uniform(rng, lo, hi);
  return m;
}

}  // namespace latbasis
