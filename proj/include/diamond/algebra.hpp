#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diamond/finite_semiring.hpp"

namespace diamond {

  //////////////////////////////////////////////////////////////////////////
  // Laws and special elements
  //////////////////////////////////////////////////////////////////////////

  // Exhaustive up to this order, sampled above it.
  inline constexpr std::size_t kExhaustiveLawOrder = 100;
  inline constexpr std::size_t kLawSamples         = std::size_t(1) << 20;
  inline constexpr std::uint64_t kLawSeed          = 0x5eed'd1a3'0d5eULL;

  struct LawFailure {
    std::string          law;
    std::array<Index, 3> witness;  // unused trailing entries are 0
  };

  struct LawReport {
    bool add_associative     = true;
    bool add_commutative     = true;
    bool mul_associative     = true;
    bool left_distributive   = true;   // x(y + z) = xy + xz
    bool right_distributive  = true;   // (x + y)z = xz + yz
    bool additively_idempotent = true;
    bool exhaustive          = true;
    std::size_t triples_checked = 0;

    std::optional<Index> zero;
    std::optional<Index> identity;
    std::optional<Index> infinity;

    std::vector<LawFailure> failures;

    bool is_semiring() const noexcept {
      return add_associative && add_commutative && mul_associative
             && left_distributive && right_distributive;
    }
  };

  LawReport check_laws(FiniteSemiring const& s,
                       std::size_t           exhaustive_up_to = kExhaustiveLawOrder,
                       std::size_t           samples          = kLawSamples,
                       std::uint64_t         seed             = kLawSeed);

  // Additive neutral that is multiplicatively absorbing.
  std::optional<Index> find_zero(FiniteSemiring const& s);
  // Two-sided multiplicative neutral.
  std::optional<Index> find_identity(FiniteSemiring const& s);
  // Additively and multiplicatively absorbing.
  std::optional<Index> find_infinity(FiniteSemiring const& s);
  // x with x*y = y*x = x for all y (a zero or an infinity, when present).
  std::optional<Index> find_mul_absorbing(FiniteSemiring const& s);

  // Additively idempotent and x*x + x = x for every x.
  bool is_viterbi(FiniteSemiring const& s);

  //////////////////////////////////////////////////////////////////////////
  // Element classification
  //////////////////////////////////////////////////////////////////////////

  struct ElementRecord {
    Index index = 0;
    bool  is_zero            = false;
    bool  add_idempotent     = false;
    bool  mul_idempotent     = false;
    bool  nilpotent          = false;   // nonzero x with x^k = 0
    std::optional<unsigned> nilpotency_index;
    bool  left_zero_divisor  = false;   // x != 0, x*y = 0 for some y != 0
    bool  right_zero_divisor = false;   // x != 0, y*x = 0 for some y != 0
    bool  regular            = false;   // neither zero nor a zero-divisor
    bool  invertible         = false;   // two-sided inverse w.r.t. identity
    // Multiplicative orbit x, x^2, ...: powers[k] = x^(k+1). The sequence
    // enters its cycle at position orbit_index and repeats with orbit_period.
    std::vector<Index> powers;
    unsigned           orbit_index  = 0;
    unsigned           orbit_period = 0;

    bool zero_divisor() const noexcept {
      return left_zero_divisor || right_zero_divisor;
    }
  };

  // Divisor and nilpotency flags need a zero; without one they stay false.
  std::vector<ElementRecord> classify(FiniteSemiring const& s);

  //////////////////////////////////////////////////////////////////////////
  // Subsets, subsemirings, ideals
  //////////////////////////////////////////////////////////////////////////

  enum class Op : std::uint8_t { Add, Mul };

  // The first (x op y) found outside the subset, scanning in index order.
  struct ClosureWitness {
    Op    op;
    Index x;
    Index y;
    Index result;
  };

  struct ClosureResult {
    bool                          closed = true;
    std::optional<ClosureWitness> witness;
    explicit operator bool() const noexcept {
      return closed;
    }
  };

  ClosureResult is_subsemiring(Subset const& sub);

  enum class IdealKind : std::uint8_t { None, Left, Right, TwoSided };

  std::string to_string(IdealKind k);

  // Left means S*I within I, right means I*S within I. Both require I + I
  // within I; if that fails the kind is None and add_witness is set.
  struct IdealReport {
    IdealKind                     kind = IdealKind::None;
    std::optional<ClosureWitness> add_witness;
    std::optional<ClosureWitness> left_witness;   // s*i outside I
    std::optional<ClosureWitness> right_witness;  // i*s outside I
  };

  IdealReport ideal_kind(Subset const& sub);

  // Smallest two-sided ideal of s containing seeds.
  std::vector<Index> generate_ideal(FiniteSemiring const&  s,
                                    std::vector<Index> const& seeds);

  // Throws NotAnIdeal if sub is not a proper two-sided ideal.
  bool is_maximal_ideal(Subset const& sub);

  struct IdealSimplicity {
    bool simple = true;
    // The trivial ideals are s itself and {z} for a multiplicatively
    // absorbing z. When s has no zero, no_zero is set so callers can tell
    // the zero-free reading apart.
    bool no_zero    = false;
    bool degenerate = false;   // order <= 1
    std::optional<Index> absorbing;
    std::vector<Index>   witness;   // a maximal proper nontrivial ideal
  };

  IdealSimplicity is_ideal_simple(FiniteSemiring const& s);

  //////////////////////////////////////////////////////////////////////////
  // Congruences
  //////////////////////////////////////////////////////////////////////////

  // Smallest congruence identifying x and y.
  Partition principal_congruence(FiniteSemiring const& s, Index x, Index y);

  bool is_congruence(FiniteSemiring const& s, Partition const& p);

  struct CongruenceSimplicity {
    bool simple     = true;
    bool degenerate = false;       // order <= 1, simple by convention
    std::optional<Partition> witness;   // finest proper congruence found
    std::optional<std::array<Index, 2>> witness_pair;
  };

  CongruenceSimplicity is_congruence_simple(FiniteSemiring const& s);

  // Every congruence of s, by sweeping all set partitions. Refuses orders
  // above max_order (Bell numbers grow quickly).
  std::vector<Partition> congruences_by_sweep(FiniteSemiring const& s,
                                              std::size_t max_order = 10);

  //////////////////////////////////////////////////////////////////////////
  // Isomorphism and restriction
  //////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t kIsomorphismSearchLimit = 20;

  // map[i] is the image in b of element i of a.
  bool is_isomorphism(FiniteSemiring const&     a,
                      FiniteSemiring const&     b,
                      std::vector<Index> const& map);

  // Backtracking search for orders up to kIsomorphismSearchLimit; above that
  // a candidate map must be supplied and is only verified.
  std::optional<std::vector<Index>>
  find_isomorphism(FiniteSemiring const&                    a,
                   FiniteSemiring const&                    b,
                   std::optional<std::vector<Index>> const& candidate = {});

  struct Restriction {
    FiniteSemiring     semiring;
    std::vector<Index> embedding;   // local index -> ambient index
  };

  // Throws NotClosed if sub is not a subsemiring.
  Restriction restrict_to(Subset const& sub);

}  // namespace diamond
