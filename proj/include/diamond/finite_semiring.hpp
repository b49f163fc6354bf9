#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace diamond {

  using Index = std::uint32_t;

  // A finite algebra with two binary operations given by dense row-major
  // Cayley tables: add(i, j) = add_table[i * order + j], row is the left
  // operand. Nothing about the semiring laws is assumed here; see check_laws.
  class FiniteSemiring {
   public:
    FiniteSemiring() = default;
    // Throws Error if the tables are not order x order or hold an entry out
    // of range. Labels default to "0", "1", ...
    FiniteSemiring(std::size_t              order,
                   std::vector<Index>       add,
                   std::vector<Index>       mul,
                   std::vector<std::string> labels = {});

    // Convenience for literal tables in tests and examples.
    static FiniteSemiring
    from_rows(std::vector<std::vector<Index>> const& add,
              std::vector<std::vector<Index>> const& mul,
              std::vector<std::string>                labels = {});

    std::size_t order() const noexcept {
      return _order;
    }

    Index add(Index x, Index y) const noexcept {
      return _add[static_cast<std::size_t>(x) * _order + y];
    }
    Index mul(Index x, Index y) const noexcept {
      return _mul[static_cast<std::size_t>(x) * _order + y];
    }

    std::span<Index const> add_row(Index x) const noexcept {
      return {_add.data() + static_cast<std::size_t>(x) * _order, _order};
    }
    std::span<Index const> mul_row(Index x) const noexcept {
      return {_mul.data() + static_cast<std::size_t>(x) * _order, _order};
    }

    std::string const& label(Index x) const {
      return _labels.at(x);
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    bool operator==(FiniteSemiring const& that) const {
      return _order == that._order && _add == that._add
             && _mul == that._mul;
    }

   private:
    std::size_t              _order = 0;
    std::vector<Index>       _add;
    std::vector<Index>       _mul;
    std::vector<std::string> _labels;
  };

  // A set of element indices of some ambient semiring, kept sorted and
  // duplicate-free. Holds a non-owning reference; the ambient must outlive it.
  class Subset {
   public:
    Subset(FiniteSemiring const& ambient, std::vector<Index> indices);

    static Subset full(FiniteSemiring const& ambient);

    FiniteSemiring const& ambient() const noexcept {
      return *_ambient;
    }
    std::span<Index const> indices() const noexcept {
      return _indices;
    }
    std::size_t size() const noexcept {
      return _indices.size();
    }
    bool empty() const noexcept {
      return _indices.empty();
    }
    bool contains(Index x) const noexcept {
      return x < _member.size() && _member[x];
    }
    bool is_full() const noexcept {
      return _indices.size() == _ambient->order();
    }

    bool operator==(Subset const& that) const {
      return _ambient == that._ambient && _indices == that._indices;
    }

   private:
    FiniteSemiring const* _ambient;
    std::vector<Index>    _indices;
    std::vector<bool>     _member;
  };

  // A partition of {0, ..., size-1}. Blocks are numbered by first occurrence,
  // which makes the representation unique, so == is equality of partitions.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> block_of);

    static Partition identity(std::size_t size);
    static Partition full(std::size_t size);

    std::size_t size() const noexcept {
      return _block.size();
    }
    std::size_t block_count() const noexcept {
      return _count;
    }
    std::size_t block_of(Index x) const {
      return _block.at(x);
    }
    bool same_block(Index x, Index y) const {
      return _block.at(x) == _block.at(y);
    }
    bool is_full() const noexcept {
      return _count <= 1;
    }
    bool is_identity() const noexcept {
      return _count == _block.size();
    }

    std::vector<std::vector<Index>> blocks() const;
    std::vector<std::size_t> const& assignment() const noexcept {
      return _block;
    }

    // True if every block of *this lies inside a block of coarser.
    bool refines(Partition const& coarser) const;

    auto operator<=>(Partition const&) const = default;

   private:
    std::vector<std::size_t> _block;
    std::size_t              _count = 0;
  };

}  // namespace diamond
