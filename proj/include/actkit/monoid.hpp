#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace actkit {

  using index_type = std::uint32_t;
  using json       = nlohmann::json;

  class FiniteAct;

  //! A finite monoid given by its full multiplication table.
  //!
  //! Elements are addressed by dense indices in document order; labels are
  //! opaque. `product(s, t)` is s·t. For transformation monoids this means
  //! "apply s, then t", so a right action satisfies a·(st) = (a·s)·t.
  //!
  //! Instances are immutable and validated on construction.
  class FiniteMonoid {
   public:
    //! Throws Error (MalformedDocument, MissingIdentity, NonAssociative).
    FiniteMonoid(std::vector<std::string> labels, index_type identity, std::vector<index_type> table);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    index_type identity() const noexcept {
      return _identity;
    }
    index_type product(index_type s, index_type t) const noexcept {
      return _table[s * _labels.size() + t];
    }
    std::string const& label(index_type s) const {
      return _labels[s];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::vector<index_type> const& table() const noexcept {
      return _table;
    }
    std::optional<index_type> find(std::string_view label) const;
    //! Throws Error(UnknownLabel).
    index_type index_of(std::string_view label) const;

    //! A generating set chosen greedily in index order; never contains the
    //! identity unless the monoid is trivial (then it is empty).
    std::vector<index_type> const& generators() const noexcept {
      return _generators;
    }
    //! For every element s other than the identity, a pair (p, g) with
    //! s = p·g, g a generator and p strictly earlier in breadth-first order.
    //! Entry for the identity is (identity, identity).
    std::vector<std::pair<index_type, index_type>> const& factorisation() const noexcept {
      return _factorisation;
    }
    //! Elements in the breadth-first order used by `factorisation`.
    std::vector<index_type> const& bfs_order() const noexcept {
      return _bfs_order;
    }

    friend bool operator==(FiniteMonoid const& x, FiniteMonoid const& y) {
      return x._identity == y._identity && x._labels == y._labels && x._table == y._table;
    }

   private:
    void compute_generators();

    std::vector<std::string>                       _labels;
    index_type                                     _identity;
    std::vector<index_type>                        _table;
    std::vector<index_type>                        _generators;
    std::vector<std::pair<index_type, index_type>> _factorisation;
    std::vector<index_type>                        _bfs_order;
  };

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  //! Parses { "elements": [...], "identity": "...", "table": [[...]...] }.
  MonoidPtr load_monoid(json const& doc);
  json      to_document(FiniteMonoid const& monoid);

  //! `spec` is one of "trivial", "cyclic_group(n)", "full_transformation(n)"
  //! with 1 <= n <= 3 for the latter. An optional "builtin:" prefix is accepted.
  MonoidPtr builtin_monoid(std::string_view spec);
  MonoidPtr trivial_monoid();
  MonoidPtr cyclic_group(std::size_t n);
  MonoidPtr full_transformation(std::size_t n);

  //! Indices e with e·e = e, ascending.
  std::vector<index_type> idempotents(FiniteMonoid const& monoid);

  //! The act eS: carrier {e·s}, deduplicated in order of first occurrence,
  //! labelled by the monoid's labels. Throws Error(NotIdempotent).
  FiniteAct principal_right_act(MonoidPtr const& monoid, index_type e);

  //! Blocks of idempotents e ~ f iff eS ≅ fS. Blocks and their members are
  //! ascending.
  std::vector<std::vector<index_type>> idempotent_classes(MonoidPtr const& monoid);

}  // namespace actkit
