#include "fernhex/counter.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <unordered_map>

namespace fernhex {

std::string_view to_string(EngineKind k) {
  switch (k) {
  case EngineKind::FrontierDP: return "dp";
  case EngineKind::Kasteleyn: return "kasteleyn";
  case EngineKind::RyserPermanent: return "ryser";
  case EngineKind::Auto: return "auto";
  }
  return "?";
}

EngineKind parse_engine(std::string_view name) {
  if (name == "dp") return EngineKind::FrontierDP;
  if (name == "kasteleyn") return EngineKind::Kasteleyn;
  if (name == "ryser") return EngineKind::RyserPermanent;
  if (name == "auto") return EngineKind::Auto;
  throw Error(ErrorKind::InvalidInput, "unknown engine '" + std::string(name) + "' (dp|kasteleyn|ryser|auto)");
}

CounterConfig CounterConfig::from_env() {
  CounterConfig cfg;
  if (const char *s = std::getenv("FERNHEX_DP_WIDTH_CAP"); s != nullptr && *s != '\0') {
    std::size_t value = 0;
    const char *end = s + std::strlen(s);
    auto [p, ec] = std::from_chars(s, end, value);
    if (ec != std::errc() || p != end || value == 0 || value > 62) {
      throw Error(ErrorKind::InvalidInput,
                  std::string("FERNHEX_DP_WIDTH_CAP must be an integer in 1..62, got '") + s + "'");
    }
    cfg.dp_width_cap = value;
  }
  return cfg;
}

std::size_t frontier_width(const TriRegion &r) {
  if (r.empty()) return 0;
  auto [lo, hi] = std::minmax_element(r.cells().begin(), r.cells().end(),
                                      [](const UnitTriangle &a, const UnitTriangle &b) { return a.u < b.u; });
  return static_cast<std::size_t>(hi->u - lo->u + 1);
}

// ---------------------------------------------------------------------------
// Frontier DP
//
// Cells are visited in (v, u, orient) order. Bit (u - umin) of the profile is
// set when Down(u, v-1) has claimed Up(u, v); the carry bit is set when the
// previous cell claimed the very next one (Up(u,v) -> Down(u,v) or
// Down(u,v) -> Up(u+1,v)), which is always the next cell in the order.

BigNat count_frontier_dp(const TriRegion &r, const CounterConfig &cfg) {
  if (region_balance(r) != 0) return 0;
  if (r.empty()) return 1;
  const std::size_t width = frontier_width(r);
  if (width > cfg.dp_width_cap) {
    throw Error(ErrorKind::InstanceTooLarge, "frontier width " + std::to_string(width) + " exceeds cap " +
                                                 std::to_string(cfg.dp_width_cap));
  }
  std::int64_t umin = r.cells().front().u;
  for (const auto &c : r.cells()) umin = std::min(umin, c.u);
  const std::uint64_t carry = std::uint64_t{1} << width;

  std::unordered_map<std::uint64_t, BigNat> cur, next;
  cur.emplace(0, 1);
  auto add = [&](std::uint64_t key, const BigNat &n) {
    auto [it, fresh] = next.try_emplace(key, n);
    if (!fresh) it->second += n;
  };

  for (const auto &c : r.cells()) {
    next.clear();
    const std::uint64_t bit = std::uint64_t{1} << (c.u - umin);
    if (c.is_up()) {
      const bool can_pair = r.contains(UnitTriangle::down(c.u, c.v));
      for (auto &[key, n] : cur) {
        const bool by_bit = key & bit;
        const bool by_carry = key & carry;
        if (by_bit && by_carry) continue;
        if (by_bit || by_carry) {
          add(key & ~(bit | carry), n);
        } else if (can_pair) {
          add(key | carry, n);
        }
      }
    } else {
      const bool east = r.contains(UnitTriangle::up(c.u + 1, c.v));
      const bool north = r.contains(UnitTriangle::up(c.u, c.v + 1));
      const std::uint64_t east_bit = std::uint64_t{1} << (c.u + 1 - umin);
      for (auto &[key, n] : cur) {
        if (key & carry) {
          add(key & ~carry, n);
          continue;
        }
        // Up(u+1,v) must not already be claimed from below
        if (east && !(key & east_bit)) add(key | carry, n);
        if (north) add(key | bit, n);
      }
    }
    std::swap(cur, next);
    if (cur.empty()) return 0;
  }
  auto it = cur.find(0);
  return it == cur.end() ? BigNat(0) : it->second;
}

// ---------------------------------------------------------------------------
// Kasteleyn

std::vector<int> kasteleyn_signs(const DualGraph &g) {
  const std::size_t n_up = g.up_nodes.size();
  const std::size_t n = n_up + g.down_nodes.size();
  const std::size_t m = g.edges.size();
  std::vector<int> sign(m, 1);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [i, j] = g.edges[e];
    adj[i].emplace_back(n_up + j, e);
    adj[n_up + j].emplace_back(i, e);
  }

  // spanning forest; its edges keep sign +1
  std::vector<bool> in_tree(m, false);
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      const auto a = q.front();
      q.pop_front();
      for (const auto &[b, e] : adj[a]) {
        if (!seen[b]) {
          seen[b] = true;
          in_tree[e] = true;
          q.push_back(b);
        }
      }
    }
  }

  const auto faces = dual_faces(g);
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::array<std::size_t, 2>> faces_of(m, {none, none});
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (auto e : faces[f].edges) {
      auto &slot = faces_of[e];
      (slot[0] == none ? slot[0] : slot[1]) = f;
    }
  }

  // The non-tree edges form a spanning tree of the faces; root it at the outer face.
  std::vector<std::size_t> parent_edge(faces.size(), none);
  std::vector<bool> reached(faces.size(), false);
  std::vector<std::size_t> order;
  for (std::size_t root = 0; root < faces.size(); ++root) {
    if (!faces[root].outer) continue;
    reached[root] = true;
    std::deque<std::size_t> q{root};
    while (!q.empty()) {
      const auto f = q.front();
      q.pop_front();
      order.push_back(f);
      for (auto e : faces[f].edges) {
        if (in_tree[e]) continue;
        const auto other = faces_of[e][0] == f ? faces_of[e][1] : faces_of[e][0];
        if (other == none || reached[other]) continue;
        reached[other] = true;
        parent_edge[other] = e;
        q.push_back(other);
      }
    }
  }
  if (order.size() != faces.size()) {
    throw Error(ErrorKind::EngineMismatch, "dual face tree does not reach every face");
  }

  // Leaves first: every edge of the face except its parent edge is settled.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto f = *it;
    if (faces[f].outer) continue;
    int product = 1;
    for (auto e : faces[f].edges) {
      if (e != parent_edge[f]) product *= sign[e];
    }
    const std::size_t half = faces[f].edges.size() / 2;
    const int wanted = (half + 1) % 2 == 0 ? 1 : -1;
    sign[parent_edge[f]] = wanted * product;
  }
  return sign;
}

BigNat abs_determinant(std::vector<BigNat> a, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigNat & { return a[i * n + j]; };

  // Fraction-free elimination. A row untouched since level l still holds its
  // level-l values; scaling by D[k]/D[l] brings it to level k when needed.
  std::vector<BigNat> divisor(n + 1);
  divisor[0] = 1;
  std::vector<std::size_t> level(n, 0);
  std::vector<std::size_t> last(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(at(i, j)) != 0) last[i] = j;
    }
  }
  auto lift = [&](std::size_t i, std::size_t k) {
    if (level[i] == k) return;
    for (std::size_t j = k; j <= last[i]; ++j) {
      BigNat &x = at(i, j);
      if (sgn(x) == 0) continue;
      x *= divisor[k];
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor[level[i]].get_mpz_t());
    }
    level[i] = k;
  };

  BigNat tmp;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(at(i, k)) != 0 && (pivot == n || last[i] < last[pivot])) pivot = i;
    }
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) swap(at(pivot, j), at(k, j));
      std::swap(level[pivot], level[k]);
      std::swap(last[pivot], last[k]);
    }
    lift(k, k);
    const BigNat &p = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(at(i, k)) == 0) continue;
      lift(i, k);
      const std::size_t hi = std::max(last[i], last[k]);
      for (std::size_t j = k + 1; j <= hi; ++j) {
        tmp = p * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), divisor[k].get_mpz_t());
      }
      at(i, k) = 0;
      level[i] = k + 1;
      last[i] = hi;
    }
    divisor[k + 1] = p;
  }
  return abs(divisor[n]);
}

BigNat count_kasteleyn(const TriRegion &r) {
  if (region_balance(r) != 0) return 0;
  if (r.empty()) return 1;
  const auto g = dual_graph(r);
  const auto sign = kasteleyn_signs(g);
  const std::size_t n = g.up_nodes.size();
  std::vector<BigNat> m(n * n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    m[g.edges[e].first * n + g.edges[e].second] = sign[e];
  }
  return abs_determinant(std::move(m), n);
}

// ---------------------------------------------------------------------------
// Ryser

BigNat count_ryser(const TriRegion &r, const CounterConfig &cfg) {
  if (region_balance(r) != 0) return 0;
  if (r.empty()) return 1;
  const std::size_t n = r.up_count();
  if (n > cfg.ryser_cap) {
    throw Error(ErrorKind::InstanceTooLarge, std::to_string(n) + " up cells exceeds permanent cap " +
                                                 std::to_string(cfg.ryser_cap));
  }
  const auto g = dual_graph(r);
  // rows adjacent to each column
  std::vector<std::vector<std::size_t>> rows_of(n);
  for (const auto &[i, j] : g.edges) rows_of[j].push_back(i);

  // Gray-code walk over column subsets; row sums are at most 3, so the
  // products and the signed total fit comfortably in 64 bits.
  std::vector<std::int64_t> row_sum(n, 0);
  std::int64_t total = 0;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const int j = std::countr_zero(step);
    gray ^= std::uint64_t{1} << j;
    const std::int64_t delta = (gray >> j) & 1 ? 1 : -1;
    for (auto i : rows_of[j]) row_sum[i] += delta;
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    const bool odd = (n - std::popcount(gray)) % 2 == 1;
    total += odd ? -prod : prod;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Dispatch

CountResult count_checked(const TriRegion &r, EngineKind engine, const CounterConfig &cfg) {
  switch (engine) {
  case EngineKind::FrontierDP: return {count_frontier_dp(r, cfg), {engine}};
  case EngineKind::Kasteleyn: return {count_kasteleyn(r), {engine}};
  case EngineKind::RyserPermanent: return {count_ryser(r, cfg), {engine}};
  case EngineKind::Auto: break;
  }

  CountResult res;
  if (frontier_width(r) <= cfg.dp_width_cap) {
    res = {count_frontier_dp(r, cfg), {EngineKind::FrontierDP}};
  } else {
    res = {count_kasteleyn(r), {EngineKind::Kasteleyn}};
  }
  auto check = [&](EngineKind other, const BigNat &value) {
    if (value != res.count) {
      throw Error(ErrorKind::EngineMismatch, std::string(to_string(res.engines.front())) + " gives " +
                                                 to_decimal(res.count) + ", " + std::string(to_string(other)) +
                                                 " gives " + to_decimal(value));
    }
    res.engines.push_back(other);
  };
  const std::size_t ups = r.up_count();
  if (res.engines.front() != EngineKind::Kasteleyn && ups <= cfg.kasteleyn_check_cap) {
    check(EngineKind::Kasteleyn, count_kasteleyn(r));
  }
  if (ups <= cfg.ryser_cap) {
    check(EngineKind::RyserPermanent, count_ryser(r, cfg));
  }
  return res;
}

BigNat count_tilings(const TriRegion &r, EngineKind engine, const CounterConfig &cfg) {
  return count_checked(r, engine, cfg).count;
}

CountResult CountCache::get(const TriRegion &r) {
  const std::vector<UnitTriangle> key(r.cells().begin(), r.cells().end());
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
  }
  auto res = count_checked(r, EngineKind::Auto, cfg_);
  std::lock_guard lock(mu_);
  ++misses_;
  memo_.emplace(key, res);
  return res;
}

std::size_t CountCache::hits() const {
  std::lock_guard lock(mu_);
  return hits_;
}

std::size_t CountCache::misses() const {
  std::lock_guard lock(mu_);
  return misses_;
}

std::vector<std::pair<TriRegion, CountResult>> CountCache::entries() const {
  std::lock_guard lock(mu_);
  std::vector<std::pair<TriRegion, CountResult>> out;
  out.reserve(memo_.size());
  for (const auto &[cells, res] : memo_) out.emplace_back(TriRegion(cells), res);
  return out;
}

} // namespace fernhex
