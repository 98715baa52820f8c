#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "actkit/act.hpp"

namespace actkit {

  //! Union-find over {0, ..., n-1} with path halving and union by size.
  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n);

    index_type find(index_type x);
    //! Returns false if x and y were already joined.
    bool        unite(index_type x, index_type y);
    std::size_t count() const noexcept {
      return _count;
    }

   private:
    std::vector<index_type> _parent;
    std::vector<index_type> _size;
    std::size_t             _count;
  };

  //! The unique decomposition of an act into indecomposable subacts.
  //! Components are ascending index lists, ordered by their smallest index.
  struct Decomposition {
    FiniteAct                            act;
    std::vector<std::vector<index_type>> components;

    FiniteAct component_act(std::size_t i) const {
      return subact(act, components[i]);
    }
  };

  Decomposition decompose(FiniteAct const& act);
  bool          is_indecomposable(FiniteAct const& act);

  //! Why a claimed decomposition is wrong; empty when it is a partition into
  //! closed subsets. Indecomposability is not checked here.
  std::vector<std::string> partition_violations(FiniteAct const&                            act,
                                                std::vector<std::vector<index_type>> const& components);

  inline constexpr std::size_t default_split_bound = 12;

  //! Exhaustive search for two disjoint, closed, non-empty subsets covering
  //! the carrier. Independent of `decompose`. Throws SizeBoundExceeded when
  //! |A| > bound.
  std::optional<std::pair<std::vector<index_type>, std::vector<index_type>>>
  brute_force_split(FiniteAct const& act, std::size_t bound = default_split_bound);

  //! Multiset of canonical component forms, sorted by form.
  struct IsoSignature {
    std::vector<std::pair<CanonicalForm, std::size_t>> classes;

    std::size_t component_count() const;
    friend bool operator==(IsoSignature const&, IsoSignature const&) = default;
  };

  IsoSignature iso_signature(FiniteAct const& act);
  //! Multiset sum.
  IsoSignature operator+(IsoSignature const& x, IsoSignature const& y);

  //! { "components": [act-doc...], "signature": [{"form": doc, "multiplicity": k}...] }
  json decomposition_report(FiniteAct const& act);

}  // namespace actkit
