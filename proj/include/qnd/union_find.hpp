#ifndef QND_UNION_FIND_HPP_
#define QND_UNION_FIND_HPP_

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "qnd/errors.hpp"

namespace qnd::detail {

  // Disjoint sets with path halving and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
      std::iota(parent_.begin(), parent_.end(), Element(0));
    }

    Element find(Element x) {
      while (parent_[x] != x) {
        x = parent_[x] = parent_[parent_[x]];
      }
      return x;
    }

    //! Returns true if a merge happened.
    bool unite(Element a, Element b) {
      a = find(a);
      b = find(b);
      if (a == b) {
        return false;
      }
      if (size_[a] < size_[b]) {
        std::swap(a, b);
      }
      parent_[b] = a;
      size_[a] += size_[b];
      return true;
    }

    //! Class indices numbered by smallest member, ascending.
    std::vector<Element> labels(std::size_t* count = nullptr) {
      std::size_t const    n = parent_.size();
      std::vector<Element> label_of_root(n, static_cast<Element>(-1));
      std::vector<Element> out(n);
      Element              next = 0;
      for (Element x = 0; x < n; ++x) {
        Element const r = find(x);
        if (label_of_root[r] == static_cast<Element>(-1)) {
          label_of_root[r] = next++;
        }
        out[x] = label_of_root[r];
      }
      if (count != nullptr) {
        *count = next;
      }
      return out;
    }

   private:
    std::vector<Element>     parent_;
    std::vector<std::size_t> size_;
  };

}  // namespace qnd::detail

#endif  // QND_UNION_FIND_HPP_
