// Pruned search for the lexicographically smallest safe blue matching.

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>

#include "hexbrace/hexagon.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hexbrace {

namespace {

// Positions p = 6k + i, k = source index in bit order.
class SafeSearch {
 public:
  explicit SafeSearch(const HexagonGraph& h) : n_(static_cast<int>(h.source_order.size())) {
    white_.assign(6 * n_, -1);
    std::map<Vertex, int> pos;
    for (int k = 0; k < n_; ++k) {
      for (int i = 0; i < 6; ++i) pos[hex_label(h.source_order[k], i)] = 6 * k + i;
    }
    for (const auto& [ge, pair] : h.white_of) {
      for (const Edge& w : pair) {
        white_[pos.at(w.u)] = pos.at(w.v);
        white_[pos.at(w.v)] = pos.at(w.u);
      }
    }
  }

  int size() const { return n_; }

  // Depth-first search over bits[depth..n). Bits before `depth` are fixed
  // and already checked. Returns true with `bits` holding the answer.
  bool search(std::vector<int8_t>& bits, int depth, std::vector<int>& mark, int& stamp) const {
    if (depth == n_) return true;
    for (int8_t b = 0; b <= 1; ++b) {
      bits[depth] = b;
      if (hexagon_ok(bits, depth, mark, stamp) && search(bits, depth + 1, mark, stamp)) {
        return true;
      }
    }
    bits[depth] = -1;
    return false;
  }

  // Assigns bits[0..d) from `prefix` (most significant first), checking each
  // newly closed cycle. Returns false if the prefix is already unsafe.
  bool apply_prefix(std::vector<int8_t>& bits, std::uint64_t prefix, int d,
                    std::vector<int>& mark, int& stamp) const {
    for (int k = 0; k < d; ++k) {
      bits[k] = static_cast<int8_t>((prefix >> (d - 1 - k)) & 1u);
      if (!hexagon_ok(bits, k, mark, stamp)) return false;
    }
    return true;
  }

 private:
  int partner(int p, const std::vector<int8_t>& bits) const {
    const int k = p / 6, i = p % 6;
    return 6 * k + blue_partner(i, bits[k] == 1);
  }

  // Checks every cycle through hexagon k that is complete under the current
  // partial assignment.
  bool hexagon_ok(const std::vector<int8_t>& bits, int k, std::vector<int>& mark,
                  int& stamp) const {
    for (int i = 0; i < 6; ++i) {
      const int s = 6 * k + i;
      ++stamp;
      int p = s;
      bool complete = true;
      do {
        mark[p] = stamp;
        const int q = partner(p, bits);
        mark[q] = stamp;
        const int w = white_[q];
        if (bits[w / 6] < 0) {
          complete = false;
          break;
        }
        p = w;
      } while (p != s);
      if (!complete) continue;
      // Walk again to test red pairs against the marks of this cycle.
      p = s;
      do {
        const int q = partner(p, bits);
        const int rp = 6 * (p / 6) + (p % 6 + 3) % 6;
        const int rq = 6 * (q / 6) + (q % 6 + 3) % 6;
        if (mark[rp] == stamp || mark[rq] == stamp) return false;
        p = white_[q];
      } while (p != s);
    }
    return true;
  }

  int n_;
  std::vector<int> white_;
};

BlueMatching to_matching(const std::vector<int8_t>& bits) {
  BlueMatching m;
  m.bits.resize(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) m.bits[k] = bits[k] == 1;
  return m;
}

}  // namespace

std::optional<BlueMatching> find_safe_matching(const HexagonGraph& h, int jobs) {
  SafeSearch search(h);
  const int n = search.size();
  if (n == 0) return BlueMatching{};
  if (jobs <= 1) {
    std::vector<int8_t> bits(n, -1);
    std::vector<int> mark(6 * n, 0);
    int stamp = 0;
    if (search.search(bits, 0, mark, stamp)) return to_matching(bits);
    return std::nullopt;
  }
  // Split on the first d bits; prefixes are visited in lexicographic order
  // and the smallest prefix with a hit wins.
  int d = 0;
  while (d < n && d < 20 && (1 << d) < 16 * jobs) ++d;
  const std::int64_t tasks = std::int64_t{1} << d;
  std::atomic<std::int64_t> best{LLONG_MAX};
  std::vector<std::vector<int8_t>> found(tasks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t t = 0; t < tasks; ++t) {
    if (t > best.load(std::memory_order_relaxed)) continue;
    std::vector<int8_t> bits(n, -1);
    std::vector<int> mark(6 * n, 0);
    int stamp = 0;
    if (!search.apply_prefix(bits, static_cast<std::uint64_t>(t), d, mark, stamp)) continue;
    if (!search.search(bits, d, mark, stamp)) continue;
    found[t] = bits;
    std::int64_t cur = best.load();
    while (t < cur && !best.compare_exchange_weak(cur, t)) {
    }
  }
  const std::int64_t b = best.load();
  if (b == LLONG_MAX) return std::nullopt;
  return to_matching(found[b]);
}

}  // namespace hexbrace
