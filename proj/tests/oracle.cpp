#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "arrcomb/rational.hpp"

namespace oracle {

using arrcomb::BivariatePolynomial;
using arrcomb::Rational;

IntArrangement deformed_braid(int n, const IntOffsets& offsets) {
  IntArrangement a;
  a.n = n;
  for (const auto& [key, list] : offsets) {
    for (long c : list) {
      std::vector<long> v(n, 0);
      v[key.first] = 1;
      v[key.second] = -1;
      a.normals.push_back(v);
      a.offsets.push_back(c);
    }
  }
  return a;
}

IntArrangement type_b(int n, const IntOffsets& diff, const IntOffsets& sum, const std::map<int, std::vector<long>>& axis) {
  IntArrangement a = deformed_braid(n, diff);
  for (const auto& [key, list] : sum) {
    for (long c : list) {
      std::vector<long> v(n, 0);
      v[key.first] = 1;
      v[key.second] = 1;
      a.normals.push_back(v);
      a.offsets.push_back(c);
    }
  }
  for (const auto& [i, list] : axis) {
    for (long c : list) {
      std::vector<long> v(n, 0);
      v[i] = 1;
      a.normals.push_back(v);
      a.offsets.push_back(c);
    }
  }
  return a;
}

namespace {

int rank_of(const std::vector<std::vector<long>>& rows, int n) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  int rank = 0;
  for (int c = 0; c < n && rank < static_cast<int>(m.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (static_cast<int>(r) == rank || m[r][c] == 0) continue;
      Rational k = m[r][c] / m[rank][c];
      for (int j = 0; j < n; ++j) m[r][j] -= k * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<long> codim_counts(const IntArrangement& a, long q) {
  if (a.normals.size() > 64) throw std::invalid_argument("oracle handles at most 64 hyperplanes");
  std::vector<long> counts(a.n + 1, 0);
  std::map<std::uint64_t, int> rank_cache;
  std::vector<long> p(a.n, 0);
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t h = 0; h < a.normals.size(); ++h) {
      long v = -a.offsets[h];
      for (int i = 0; i < a.n; ++i) v += a.normals[h][i] * p[i];
      if (((v % q) + q) % q == 0) mask |= std::uint64_t{1} << h;
    }
    auto it = rank_cache.find(mask);
    if (it == rank_cache.end()) {
      std::vector<std::vector<long>> rows;
      for (std::size_t h = 0; h < a.normals.size(); ++h) {
        if (mask >> h & 1) rows.push_back(a.normals[h]);
      }
      it = rank_cache.emplace(mask, rank_of(rows, a.n)).first;
    }
    ++counts[it->second];
    int i = 0;
    while (i < a.n && ++p[i] == q) p[i++] = 0;
    if (i == a.n) break;
  }
  return counts;
}

}  // namespace

BivariatePolynomial whitney_by_point_counts(const IntArrangement& a) {
  static const long primes[] = {17, 19, 23, 29, 31, 37, 41, 43, 47};
  const int need = a.n + 2;
  if (need > 9) throw std::invalid_argument("oracle dimension too large");
  std::vector<std::vector<long>> counts;
  for (int i = 0; i < need; ++i) counts.push_back(codim_counts(a, primes[i]));

  BivariatePolynomial w;
  for (int k = 0; k <= a.n; ++k) {
    BivariatePolynomial poly;
    for (int i = 0; i <= a.n; ++i) {
      BivariatePolynomial basis = BivariatePolynomial::constant(1);
      for (int j = 0; j <= a.n; ++j) {
        if (j == i) continue;
        Rational inv(1, primes[i] - primes[j]);
        inv.canonicalize();
        basis = basis * (BivariatePolynomial::t() - BivariatePolynomial::constant(primes[j])) * inv;
      }
      poly += basis * Rational(counts[i][k]);
    }
    const long extra = primes[a.n + 1];
    if (poly.evaluate(0, extra) != Rational(counts[a.n + 1][k])) {
      throw std::runtime_error("point counts are not polynomial in q (bad reduction?)");
    }
    w += BivariatePolynomial::monomial(1, k, 0) * poly;
  }
  return w;
}

Census braid_census(int n, const IntOffsets& offsets) {
  long B = 0;
  std::vector<std::pair<std::pair<int, int>, long>> hs;
  for (const auto& [key, list] : offsets) {
    for (long c : list) {
      hs.push_back({key, c});
      B = std::max(B, std::labs(c));
    }
  }
  const long scale = n;
  const long R = (n - 1) * (B + 1) * scale;
  auto pair_index = [n](int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); };

  struct Acc {
    int dim;
    std::uint64_t separated;
  };
  std::map<std::string, Acc> seen;
  std::vector<long> y(n, 0);
  for (int i = 0; i + 1 < n; ++i) y[i] = -R;
  std::string sign(hs.size(), '0');
  std::vector<int> order(n);
  while (true) {
    for (std::size_t h = 0; h < hs.size(); ++h) {
      long v = y[hs[h].first.first] - y[hs[h].first.second] - hs[h].second * scale;
      sign[h] = v > 0 ? '+' : v < 0 ? '-' : '0';
    }
    // Blocks of the sorted coordinates split at gaps larger than B.
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int p, int q) { return y[p] < y[q]; });
    std::vector<int> block(n, 0);
    for (int k = 1; k < n; ++k) {
      block[order[k]] = block[order[k - 1]] + (y[order[k]] - y[order[k - 1]] > B * scale ? 1 : 0);
    }
    std::uint64_t sep = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (block[i] != block[j]) sep |= std::uint64_t{1} << pair_index(i, j);
      }
    }
    auto it = seen.find(sign);
    if (it == seen.end()) {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
      for (std::size_t h = 0; h < hs.size(); ++h) {
        if (sign[h] == '0') parent[find(hs[h].first.first)] = find(hs[h].first.second);
      }
      int comps = 0;
      for (int v = 0; v < n; ++v) comps += find(v) == v;
      seen.emplace(sign, Acc{comps, sep});
    } else {
      it->second.separated |= sep;
    }
    int i = 0;
    while (i + 1 < n && ++y[i] > R) y[i++] = -R;
    if (i + 1 >= n) break;
  }

  Census c;
  c.n = n;
  c.f.assign(n + 1, std::vector<long>(n + 1, 0));
  for (const auto& [s, acc] : seen) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!(acc.separated >> pair_index(i, j) & 1)) parent[find(i)] = find(j);
      }
    }
    int level = 0;
    for (int v = 0; v < n; ++v) level += find(v) == v;
    c.faces[s] = {acc.dim, level};
    ++c.f[acc.dim][level];
    if (acc.dim == n) ++c.regions;
  }
  return c;
}

}  // namespace oracle
