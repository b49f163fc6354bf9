#pragma once

// Brute-force reference, sharing no code with the library. Points of the
// diamond are ints: 0 is bottom, 1..n-2 the atoms, n-1 the top. A map is
// the vector of images of every point, bottom included.

#include <algorithm>
#include <string>
#include <vector>

namespace oracle {

  using Map = std::vector<int>;

  inline int join(int n, int x, int y) {
    if (x == 0) {
      return y;
    }
    if (y == 0 || x == y) {
      return x;
    }
    return n - 1;
  }

  inline bool leq(int n, int x, int y) {
    return join(n, x, y) == y;
  }

  inline bool preserves_join(int n, Map const& f) {
    if (f[0] != 0) {
      return false;
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (f[join(n, x, y)] != join(n, f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  // Every zero-fixing map checked for join preservation; n^(n-1) candidates.
  inline std::vector<Map> endomorphisms(int n) {
    std::vector<Map> out;
    Map              f(n, 0);
    while (true) {
      if (preserves_join(n, f)) {
        out.push_back(f);
      }
      int k = 1;
      while (k < n && ++f[k] == n) {
        f[k++] = 0;
      }
      if (k == n) {
        break;
      }
    }
    std::sort(out.begin(), out.end(), [](Map const& a, Map const& b) {
      return std::lexicographical_compare(a.begin() + 1, a.end(),
                                          b.begin() + 1, b.end());
    });
    return out;
  }

  inline Map add(int n, Map const& f, Map const& g) {
    Map h(n);
    for (int x = 0; x < n; ++x) {
      h[x] = join(n, f[x], g[x]);
    }
    return h;
  }

  // f first, then g.
  inline Map mul(Map const& f, Map const& g) {
    Map h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      h[x] = g[f[x]];
    }
    return h;
  }

  inline std::string point(int n, int x) {
    if (x == 0) {
      return "0";
    }
    if (x == n - 1) {
      return "1";
    }
    return "a" + std::to_string(x);
  }

  // "(f(a1),...,f(1))"
  inline std::string show(int n, Map const& f) {
    std::string s = "(";
    for (int x = 1; x < n; ++x) {
      s += point(n, f[x]) + (x + 1 < n ? "," : ")");
    }
    return s;
  }

  inline int factorial(int k) {
    return k <= 1 ? 1 : k * factorial(k - 1);
  }

}  // namespace oracle
