#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diamond/endo.hpp"

namespace diamond {

  // A family name plus integer parameters, written "Name" or "Name:1,2".
  struct FamilySpec {
    std::string      name;
    std::vector<int> params;

    static FamilySpec parse(std::string_view text);
    std::string       to_string() const;
    bool              operator==(FamilySpec const&) const = default;
  };

  enum class ParamKind : std::uint8_t {
    None,      // "AC"
    Index,     // "Eai:2"
    Pair,      // "Psi:1,3"
    IndexSet,  // "Eset:1,2": distinct atom indices, any count (may be empty)
  };

  struct FamilyInfo {
    std::string_view name;
    ParamKind        params;
    std::string_view summary;
    bool             has_formula;   // subsets only
    int              only_order;    // 0 unless tied to one diamond order
  };

  std::span<FamilyInfo const> element_families();
  std::span<FamilyInfo const> subset_families();

  //////////////////////////////////////////////////////////////////////////
  // Named elements
  //////////////////////////////////////////////////////////////////////////

  Endo zero_map(Diamond d);
  Endo top_map(Diamond d);        // constant 1
  Endo identity_map(Diamond d);
  Endo constant_map(Diamond d, int i);   // every nonzero point to a_i
  Endo phi(Diamond d, int i);            // a_i to 0, other atoms to 1
  Endo psi(Diamond d, int i, int j);     // a_i to a_j, other atoms to 1
  // a_j to 0, other atoms and 1 to a_i
  Endo alpha0(Diamond d, int i, int j);
  Endo nilpotent(Diamond d, int i);      // alpha0(d, i, i)
  // identity on the atoms in a, every other atom to 1
  Endo identity_on(Diamond d, std::vector<int> const& a);

  // Throws BadFamily for unknown names or bad parameters.
  Endo make_element(Diamond d, FamilySpec const& spec);

  //////////////////////////////////////////////////////////////////////////
  // Named subsets
  //////////////////////////////////////////////////////////////////////////

  // Membership test applied to every element of s.
  Subset make_subset(EndoSemiring const& s, FamilySpec const& spec);

  // The same subset built from explicit formulas, when the family has one.
  std::optional<std::vector<Endo>> formula_members(Diamond           d,
                                                   FamilySpec const& spec);
  std::optional<Subset> formula_subset(EndoSemiring const& s,
                                       FamilySpec const&   spec);

  // Parameter and order checks without building anything.
  void check_spec(Diamond d, FamilySpec const& spec);

  //////////////////////////////////////////////////////////////////////////
  // Embedding of the order-4 semiring
  //////////////////////////////////////////////////////////////////////////

  // alpha4 is an endomorphism of the order-4 diamond with atoms a, b. The
  // image sends a_p to alpha4(a), a_q to alpha4(b) and everything else to
  // alpha4(1), renaming a, b to a_p, a_q.
  Endo embed(Diamond dn, Endo const& alpha4, int p, int q);

  // map[i] = index in sn of the image of element i of s4. Throws BadFamily
  // if p == q or s4 is not over the order-4 diamond.
  std::vector<Index> phi_embedding(EndoSemiring const& s4,
                                   EndoSemiring const& sn,
                                   int                 p,
                                   int                 q);

}  // namespace diamond
