#include "duocat/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace duocat {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm adjacent_transposition(int n, int i) {
  Perm p = perm_identity(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

std::vector<int> adjacent_word(const Perm& p) {
  // Bubble sort of the inverse image list; each swap contributes s_i on the
  // left so that p = s_{w[0]} o ... o s_{w[k-1]}.
  std::vector<int> word;
  Perm q = p;
  int n = static_cast<int>(q.size());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (q[i] > q[i + 1]) {
        std::swap(q[i], q[i + 1]);
        word.push_back(i);
        moved = true;
      }
    }
  }
  // Now q = identity and p = s_{w[0]} o s_{w[1]} o ... applied to identity?
  // We built q -> id by right-multiplying with transpositions:
  // id = p o s_{w[0]} o s_{w[1]} o ..., hence p = s_{w[k-1]} o ... o s_{w[0]}
  // inverted; reverse to express p as a left-to-right product.
  std::reverse(word.begin(), word.end());
  return word;
}

Perm block_permutation(const Perm& sigma, const std::vector<int>& parts) {
  int m = static_cast<int>(parts.size());
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> src_off(m, 0), dst_off(m, 0);
  for (int i = 1; i < m; ++i) src_off[i] = src_off[i - 1] + parts[i - 1];
  // Destination layout: blocks in the order sigma^{-1}(0), sigma^{-1}(1), ...
  Perm inv = perm_inverse(sigma);
  std::vector<int> dst_start(m, 0);
  {
    int off = 0;
    for (int slot = 0; slot < m; ++slot) {
      dst_start[inv[slot]] = off;
      off += parts[inv[slot]];
    }
  }
  Perm p(n);
  for (int b = 0; b < m; ++b)
    for (int j = 0; j < parts[b]; ++j) p[src_off[b] + j] = dst_start[b] + j;
  return p;
}

std::vector<Perm> symmetric_group(int n) {
  Perm p = perm_identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> compositions(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(m, 0);
  // Lexicographic enumeration by recursion on the first entry.
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == m - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, n);
  return out;
}

std::vector<std::vector<int>> positive_compositions(int n, int m) {
  std::vector<std::vector<int>> out;
  if (n < m) return out;
  for (auto& c : compositions(n - m, m)) {
    for (int& x : c) ++x;
    out.push_back(std::move(c));
  }
  return out;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer multinomial(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  Integer r = factorial(n);
  for (int p : parts) r /= factorial(p);
  return r;
}

Perm Shuffle::to_perm() const {
  int n = 0;
  for (const auto& p : parts) n += static_cast<int>(p.size());
  Perm sigma(n);
  int off = 0;
  for (const auto& p : parts)
    for (int pos : p) sigma[off++] = pos;
  return sigma;
}

namespace {

void shuffle_rec(const std::vector<int>& parts, std::vector<int>& remaining,
                 size_t idx, Shuffle& cur, std::vector<Shuffle>& out) {
  if (idx == parts.size()) {
    out.push_back(cur);
    return;
  }
  int k = parts[idx];
  int n = static_cast<int>(remaining.size());
  // Choose an increasing k-subset of the remaining positions, in
  // lexicographic order of the chosen list.
  std::vector<int> pick(k);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      std::vector<int> rest;
      std::vector<bool> used(n, false);
      // mark picked indices (into `remaining`)
      for (int d = 0; d < k; ++d) used[pick[d]] = true;
      cur.parts.emplace_back();
      for (int d = 0; d < k; ++d) cur.parts.back().push_back(remaining[pick[d]]);
      for (int i = 0; i < n; ++i)
        if (!used[i]) rest.push_back(remaining[i]);
      std::vector<int> saved = remaining;
      remaining = rest;
      shuffle_rec(parts, remaining, idx + 1, cur, out);
      remaining = saved;
      cur.parts.pop_back();
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
}

}  // namespace

std::vector<Shuffle> shuffles(const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 0) throw Error("negative shuffle part");
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  Shuffle cur;
  std::vector<Shuffle> out;
  shuffle_rec(parts, remaining, 0, cur, out);
  return out;
}

}  // namespace duocat
