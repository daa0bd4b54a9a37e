#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

namespace qtop {

/// Number of workers used for grid sweeps. Capped by the QTOP_THREADS
/// environment variable when it is set to a positive integer.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QTOP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && static_cast<unsigned long>(v) < hw) {
      hw = static_cast<unsigned>(v);
    }
  }
  return hw;
}

struct MaxScanResult {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();
};

/// Deterministic parallel max-reduction over [0, n). `residual_at(i)` must be
/// a pure function. The result is the first index (in iteration order) that
/// attains the maximum, independent of the worker count: the range is split
/// into fixed-size chunks, each chunk keeps its first maximum, and chunks are
/// merged in order with strict-greater replacement.
template <class F>
MaxScanResult parallel_max_scan(std::size_t n, F&& residual_at) {
  constexpr std::size_t kChunk = 1 << 14;
  const std::size_t n_chunks = (n + kChunk - 1) / kChunk;
  std::vector<MaxScanResult> per_chunk(n_chunks);

  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    MaxScanResult best;
    for (std::size_t i = lo; i < hi; ++i) {
      double r = residual_at(i);
      if (r != r) r = std::numeric_limits<double>::infinity();  // NaN: fail loudly
      if (r > best.value) {
        best.value = r;
        best.index = i;
      }
    }
    per_chunk[c] = best;
  };

  unsigned workers = std::min<std::size_t>(worker_count(), n_chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t c = next.fetch_add(1);
          if (c >= n_chunks) return;
          run_chunk(c);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  MaxScanResult out;
  for (const auto& b : per_chunk) {
    if (b.index != std::numeric_limits<std::size_t>::max() && b.value > out.value) {
      out = b;
    }
  }
  if (n > 0 && out.index == std::numeric_limits<std::size_t>::max()) {
    // all residuals were -inf; keep first index so reports stay reproducible
    out.index = 0;
    out.value = residual_at(0);
  }
  return out;
}

}  // namespace qtop
