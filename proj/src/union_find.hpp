#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace tiedbraid::detail {

  class UnionFind {
   public:
    explicit UnionFind(int size) : _parent(size) {
      std::iota(_parent.begin(), _parent.end(), 0);
    }

    int find(int x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    void unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        _parent[std::max(a, b)] = std::min(a, b);
      }
    }

   private:
    std::vector<int> _parent;
  };

}  // namespace tiedbraid::detail
