#include "hookzeta/modp.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "hookzeta/error.hpp"

namespace hookzeta::modp {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // a^(p-2) mod p
  std::int64_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::size_t leading(const Vec& v) {
  return static_cast<std::size_t>(
      std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }) - v.begin());
}

}  // namespace

Module::Module(std::int64_t p, std::size_t n, std::vector<Mat> gens)
    : p_(p), n_(n), gens_(std::move(gens)) {
  for (auto& g : gens_)
    for (auto& row : g)
      for (auto& x : row) x = ((x % p_) + p_) % p_;
}

Vec Module::apply(const Mat& g, const Vec& v) const {
  Vec out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc = (acc + g[i][j] * v[j]) % p_;
    out[i] = acc;
  }
  return out;
}

bool Module::insert(Subspace& s, Vec v) const {
  for (const auto& row : s.rows) {
    const std::size_t c = leading(row);
    if (v[c] == 0) continue;
    const std::int64_t f = v[c];
    for (std::size_t k = c; k < n_; ++k) v[k] = ((v[k] - f * row[k]) % p_ + p_) % p_;
  }
  const std::size_t c = leading(v);
  if (c == n_) return false;
  const std::int64_t inv = inverse_mod(v[c], p_);
  for (auto& x : v) x = x * inv % p_;
  for (auto& row : s.rows) {
    if (row[c] == 0) continue;
    const std::int64_t f = row[c];
    for (std::size_t k = c; k < n_; ++k) row[k] = ((row[k] - f * v[k]) % p_ + p_) % p_;
  }
  auto pos = std::find_if(s.rows.begin(), s.rows.end(),
                          [&](const Vec& r) { return leading(r) > c; });
  s.rows.insert(pos, std::move(v));
  return true;
}

Subspace Module::spin(const Subspace& seed, const std::vector<Vec>& extra) const {
  Subspace s = seed;
  std::deque<Vec> queue;
  for (const auto& v : extra)
    if (insert(s, v)) queue.push_back(v);
  while (!queue.empty() && s.dim() < n_) {
    const Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens_) {
      Vec w = apply(g, v);
      if (insert(s, w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

Subspace Module::sum(const Subspace& a, const Subspace& b) const {
  Subspace s = a;
  for (const auto& v : b.rows) insert(s, v);
  return s;
}

bool Module::contains(const Subspace& big, const Subspace& small) const {
  Subspace s = big;
  for (const auto& v : small.rows)
    if (insert(s, v)) return false;
  return true;
}

std::vector<Subspace> Module::submodules_containing(const Subspace& base,
                                                    const Limits& limits) const {
  if (base.dim() == n_) return {base};

  // Coordinates outside the pivots of `base` give a complement; one vector
  // per projective point of it reaches every cyclic submodule over `base`.
  std::vector<std::size_t> free;
  {
    std::vector<bool> pivot(n_, false);
    for (const auto& r : base.rows) pivot[leading(r)] = true;
    for (std::size_t c = 0; c < n_; ++c)
      if (!pivot[c]) free.push_back(c);
  }
  long double count = 1;
  for (std::size_t i = 0; i < free.size(); ++i) count *= static_cast<long double>(p_);
  if (count > static_cast<long double>(limits.max_spin))
    throw Error(ErrorKind::ScaleExceeded,
                "spinning bound exceeded: p^" + std::to_string(free.size()) + " vectors");

  std::set<Subspace> cyclic;
  const std::size_t k = free.size();
  std::vector<std::int64_t> digits(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    // first nonzero free coordinate is `lead` and equals 1
    std::fill(digits.begin(), digits.end(), 0);
    digits[lead] = 1;
    while (true) {
      Vec v(n_, 0);
      for (std::size_t i = 0; i < k; ++i) v[free[i]] = digits[i];
      cyclic.insert(spin(base, {v}));
      std::size_t pos = lead + 1;
      while (pos < k && digits[pos] == p_ - 1) digits[pos++] = 0;
      if (pos >= k) break;
      ++digits[pos];
    }
  }

  std::set<Subspace> all{base};
  std::vector<Subspace> frontier{base};
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& x : frontier)
      for (const auto& c : cyclic) {
        Subspace y = sum(x, c);
        if (all.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

}  // namespace hookzeta::modp
