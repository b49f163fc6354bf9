#include "diamond/finite_semiring.hpp"

#include <algorithm>
#include <unordered_map>

#include "diamond/errors.hpp"

namespace diamond {

  FiniteSemiring::FiniteSemiring(std::size_t              order,
                                 std::vector<Index>       add,
                                 std::vector<Index>       mul,
                                 std::vector<std::string> labels)
      : _order(order),
        _add(std::move(add)),
        _mul(std::move(mul)),
        _labels(std::move(labels)) {
    if (_add.size() != order * order || _mul.size() != order * order) {
      throw Error("Cayley tables must have order^2 entries");
    }
    auto out_of_range = [order](Index v) { return v >= order; };
    if (std::any_of(_add.begin(), _add.end(), out_of_range)
        || std::any_of(_mul.begin(), _mul.end(), out_of_range)) {
      throw Error("Cayley table entry out of range");
    }
    if (_labels.empty()) {
      _labels.reserve(order);
      for (std::size_t i = 0; i < order; ++i) {
        _labels.push_back(std::to_string(i));
      }
    } else if (_labels.size() != order) {
      throw Error("label count does not match the order");
    }
  }

  FiniteSemiring
  FiniteSemiring::from_rows(std::vector<std::vector<Index>> const& add,
                            std::vector<std::vector<Index>> const& mul,
                            std::vector<std::string>                labels) {
    std::size_t const  order = add.size();
    std::vector<Index> a, m;
    a.reserve(order * order);
    m.reserve(order * order);
    if (mul.size() != order) {
      throw Error("addition and multiplication tables differ in size");
    }
    for (std::size_t i = 0; i < order; ++i) {
      if (add[i].size() != order || mul[i].size() != order) {
        throw Error("Cayley tables must be square");
      }
      a.insert(a.end(), add[i].begin(), add[i].end());
      m.insert(m.end(), mul[i].begin(), mul[i].end());
    }
    return FiniteSemiring(order, std::move(a), std::move(m), std::move(labels));
  }

  Subset::Subset(FiniteSemiring const& ambient, std::vector<Index> indices)
      : _ambient(&ambient),
        _indices(std::move(indices)),
        _member(ambient.order(), false) {
    std::sort(_indices.begin(), _indices.end());
    _indices.erase(std::unique(_indices.begin(), _indices.end()),
                   _indices.end());
    for (Index x : _indices) {
      if (x >= ambient.order()) {
        throw InvalidElement("subset index " + std::to_string(x)
                             + " is out of range");
      }
      _member[x] = true;
    }
  }

  Subset Subset::full(FiniteSemiring const& ambient) {
    std::vector<Index> all(ambient.order());
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = static_cast<Index>(i);
    }
    return Subset(ambient, std::move(all));
  }

  Partition::Partition(std::vector<std::size_t> block_of)
      : _block(std::move(block_of)) {
    std::unordered_map<std::size_t, std::size_t> renumber;
    for (auto& b : _block) {
      auto [it, fresh] = renumber.try_emplace(b, renumber.size());
      b                = it->second;
    }
    _count = renumber.size();
  }

  Partition Partition::identity(std::size_t size) {
    std::vector<std::size_t> b(size);
    for (std::size_t i = 0; i < size; ++i) {
      b[i] = i;
    }
    return Partition(std::move(b));
  }

  Partition Partition::full(std::size_t size) {
    return Partition(std::vector<std::size_t>(size, 0));
  }

  std::vector<std::vector<Index>> Partition::blocks() const {
    std::vector<std::vector<Index>> out(_count);
    for (std::size_t i = 0; i < _block.size(); ++i) {
      out[_block[i]].push_back(static_cast<Index>(i));
    }
    return out;
  }

  bool Partition::refines(Partition const& coarser) const {
    if (coarser.size() != size()) {
      return false;
    }
    std::vector<std::size_t> image(_count, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < _block.size(); ++i) {
      auto& slot = image[_block[i]];
      if (slot == static_cast<std::size_t>(-1)) {
        slot = coarser._block[i];
      } else if (slot != coarser._block[i]) {
        return false;
      }
    }
    return true;
  }

}  // namespace diamond
