#include "sumdex/linear_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumdex {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("linear system entry overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// r <- a*r - b*s, then make r primitive. Works on the 128-bit scratch row.
void combine(std::vector<i128>& r, std::int64_t a, std::span<const std::int64_t> s, std::int64_t b) {
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] * a - static_cast<i128>(s[j]) * b;
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void make_primitive(std::vector<i128>& r) {
  i128 g = 0;
  for (auto v : r) g = gcd128(g, v);
  if (g > 1) {
    for (auto& v : r) v /= g;
  }
}

void make_primitive(std::span<std::int64_t> r) {
  std::int64_t g = 0;
  for (auto v : r) g = gcd_abs(g, v);
  if (g > 1) {
    for (auto& v : r) v /= g;
  }
}

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

IncrementalSystem::IncrementalSystem(std::size_t columns)
    : columns_(columns), row_of_(columns, -1), weights_(columns + 1) {
  std::uint64_t state = 0x243F6A8885A308D3ULL;
  for (auto& w : weights_) w = splitmix(state) | 1;
  rows_.reserve(columns * columns);
  pivots_.reserve(columns);
}

std::span<const std::int64_t> IncrementalSystem::pivot_row(std::size_t column) const {
  return {rows_.data() + static_cast<std::size_t>(row_of_[column]) * columns_, columns_};
}

bool IncrementalSystem::add(std::span<const std::int64_t> row) {
  std::vector<i128> r(row.begin(), row.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t pc = pivots_[i];
    if (r[pc] == 0) continue;
    std::span<const std::int64_t> p(rows_.data() + i * columns_, columns_);
    // r <- p[pc]*r - r[pc]*p ; keep scale small by dividing out the common factor first.
    const std::int64_t rp = narrow(r[pc]);
    const std::int64_t g = gcd_abs(p[pc], rp);
    combine(r, p[pc] / g, p, rp / g);
    make_primitive(r);
  }
  std::size_t pivot = columns_;
  for (std::size_t j = 0; j < columns_; ++j) {
    if (r[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == columns_) return false;

  std::vector<std::int64_t> fresh(columns_);
  const bool flip = r[pivot] < 0;
  for (std::size_t j = 0; j < columns_; ++j) fresh[j] = narrow(flip ? -r[j] : r[j]);
  make_primitive(fresh);

  // Clear the new pivot column from existing rows.
  std::vector<i128> scratch(columns_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::span<std::int64_t> q(rows_.data() + i * columns_, columns_);
    if (q[pivot] == 0) continue;
    const std::int64_t g = gcd_abs(fresh[pivot], q[pivot]);
    const std::int64_t a = fresh[pivot] / g;
    const std::int64_t b = q[pivot] / g;
    for (std::size_t j = 0; j < columns_; ++j) {
      q[j] = narrow(static_cast<i128>(q[j]) * a - static_cast<i128>(fresh[j]) * b);
    }
    make_primitive(q);
    if (q[pivots_[i]] < 0) {
      for (auto& v : q) v = -v;
    }
  }
  row_of_[pivot] = static_cast<int>(pivots_.size());
  pivots_.push_back(pivot);
  rows_.insert(rows_.end(), fresh.begin(), fresh.end());
  return true;
}

// Hash of the unique primitive form (den, coefficients) of a variable.
std::uint64_t IncrementalSystem::fingerprint(std::size_t var) const {
  if (row_of_[var] < 0) return weights_[columns_] + weights_[var];
  auto row = pivot_row(var);
  std::uint64_t h = weights_[columns_] * static_cast<std::uint64_t>(row[var]);
  for (std::size_t j = 0; j < columns_; ++j) {
    if (j != var && row[j] != 0) h -= weights_[j] * static_cast<std::uint64_t>(row[j]);
  }
  return h;
}

bool IncrementalSystem::forced_equal(std::size_t a, std::size_t b) const {
  if (a == b) return true;
  const bool pa = is_pivot(a);
  const bool pb = is_pivot(b);
  if (!pa && !pb) return false;
  if (pa && pb) {
    auto ra = pivot_row(a);
    auto rb = pivot_row(b);
    if (ra[a] != rb[b]) return false;
    for (std::size_t j = 0; j < columns_; ++j) {
      if (j == a || j == b) continue;
      if (ra[j] != rb[j]) return false;
    }
    return ra[b] == 0 && rb[a] == 0;
  }
  // One pivot p, one free f: the form of p must be exactly e_f, i.e. row = x_p - x_f.
  const std::size_t p = pa ? a : b;
  const std::size_t f = pa ? b : a;
  auto r = pivot_row(p);
  for (std::size_t j = 0; j < columns_; ++j) {
    const std::int64_t want = j == p ? 1 : (j == f ? -1 : 0);
    if (r[j] != want) return false;
  }
  return true;
}

bool IncrementalSystem::has_equal_pair(std::span<const std::size_t> vars) const {
  std::vector<std::pair<std::uint64_t, std::size_t>> keys;
  keys.reserve(vars.size());
  for (auto v : vars) keys.emplace_back(fingerprint(v), v);
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i].first != keys[i - 1].first) continue;
    // Collisions are checked exactly across the whole run of equal hashes.
    for (std::size_t j = i; j < keys.size() && keys[j].first == keys[i - 1].first; ++j) {
      for (std::size_t k = i - 1; k < j; ++k) {
        if (forced_equal(keys[k].second, keys[j].second)) return true;
      }
    }
  }
  return false;
}

}  // namespace sumdex
