#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "actkit/monoid.hpp"

namespace actkit {

  //! A finite right S-act: a non-empty carrier with action[a][s] = a·s.
  //!
  //! The public constructor checks a·1 = a and a·(st) = (a·s)·t and throws
  //! IdentityAxiomViolation / CompatibilityViolation naming the first
  //! violation in (a, s, t) order.
  class FiniteAct {
   public:
    struct trusted_t {};
    static constexpr trusted_t trusted{};

    FiniteAct(MonoidPtr monoid, std::vector<std::string> labels, std::vector<index_type> action);
    //! Skips the axiom checks; for tables that are correct by construction.
    FiniteAct(trusted_t, MonoidPtr monoid, std::vector<std::string> labels, std::vector<index_type> action);

    MonoidPtr const& monoid_ptr() const noexcept {
      return _monoid;
    }
    FiniteMonoid const& monoid() const noexcept {
      return *_monoid;
    }
    std::size_t size() const noexcept {
      return _labels.size();
    }
    index_type act(index_type a, index_type s) const noexcept {
      return _action[a * _monoid->size() + s];
    }
    std::string const& label(index_type a) const {
      return _labels[a];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::vector<index_type> const& action() const noexcept {
      return _action;
    }
    std::optional<index_type> find(std::string_view label) const;

    //! Same monoid (structurally), same carrier labels, same table.
    friend bool operator==(FiniteAct const& x, FiniteAct const& y);

   private:
    MonoidPtr                _monoid;
    std::vector<std::string> _labels;
    std::vector<index_type>  _action;
  };

  //! Throws Error(MonoidMismatch) unless both acts are over equal monoids.
  void require_same_monoid(FiniteAct const& x, FiniteAct const& y);
  bool same_monoid(FiniteAct const& x, FiniteAct const& y);

  //! An action-preserving map source -> target, map[a] = f(a).
  struct ActMorphism {
    FiniteAct               source;
    FiniteAct               target;
    std::vector<index_type> map;
  };

  // Documents ---------------------------------------------------------------

  //! Parses { "monoid": <doc | path | "builtin:...">, "elements": [...],
  //! "action": [[...]...] }. A string "monoid" is resolved as a builtin or as
  //! a file path, relative paths first against `base_dir` then as given.
  FiniteAct validate_act(json const& doc, std::string const& base_dir = "");
  //! As above with the monoid supplied by the caller; "monoid" in `doc`, if
  //! present, must describe an equal monoid.
  FiniteAct validate_act(MonoidPtr const& monoid, json const& doc);
  json      to_document(FiniteAct const& act);

  // Constructors --------------------------------------------------------------

  FiniteAct regular_act(MonoidPtr const& monoid);
  //! Coproduct of k >= 1 copies of the regular act.
  FiniteAct free_act(MonoidPtr const& monoid, std::size_t k);
  //! Coproduct of eS over `es` (repetition allowed, non-empty).
  FiniteAct projective_act(MonoidPtr const& monoid, std::span<index_type const> es);
  //! Disjoint union with carrier labels "<i>.<label>".
  FiniteAct coproduct(std::span<FiniteAct const> acts);
  FiniteAct coproduct(FiniteAct const& x, FiniteAct const& y);
  //! The subact on `points` (which must be closed under the action), carrier
  //! ordered as given and labels kept.
  FiniteAct subact(FiniteAct const& act, std::span<index_type const> points);
  //! true iff `points` is closed under the action.
  bool is_closed(FiniteAct const& act, std::span<index_type const> points);

  // Morphisms -----------------------------------------------------------------

  bool        is_morphism(ActMorphism const& f);
  bool        is_bijective(ActMorphism const& f);
  ActMorphism identity_morphism(FiniteAct const& act);
  //! g ∘ f, i.e. first f then g. Throws MonoidMismatch if f.target and
  //! g.source differ.
  ActMorphism compose(ActMorphism const& f, ActMorphism const& g);
  //! Requires f bijective; throws MalformedDocument otherwise.
  ActMorphism inverse(ActMorphism const& f);

  // Canonical forms -------------------------------------------------------------

  //! A normal form of an act: carrier {0, ..., size-1} and the full action
  //! table, row-major over the monoid's elements. Two acts over the same
  //! monoid are isomorphic iff their canonical forms are equal.
  //!
  //! Forms are ordered by size, then lexicographically by table.
  struct CanonicalForm {
    std::size_t             size = 0;
    std::vector<index_type> table;

    friend auto operator<=>(CanonicalForm const&, CanonicalForm const&) = default;
    friend bool operator==(CanonicalForm const&, CanonicalForm const&)  = default;

    //! Compact textual key, e.g. "2:0,1|1,0" for the regular act of Z2.
    std::string key() const;
  };

  //! A canonical relabelling of one indecomposable act: `labelling[a]` is the
  //! position of carrier point a in `form`.
  struct CanonicalLabelling {
    CanonicalForm           form;
    std::vector<index_type> labelling;
  };

  //! Requires `act` indecomposable (checked; throws MalformedDocument).
  CanonicalLabelling canonical_labelling_indecomposable(FiniteAct const& act);

  //! Components canonicalised separately, sorted, and concatenated.
  CanonicalForm canonical_form(FiniteAct const& act);
  //! Labelling of `act` realising `canonical_form(act)`.
  CanonicalLabelling canonical_labelling(FiniteAct const& act);
  //! The act described by a canonical form (carrier labels "0", "1", ...).
  FiniteAct to_act(MonoidPtr const& monoid, CanonicalForm const& form);
  json      to_document(MonoidPtr const& monoid, CanonicalForm const& form);

  //! A bijective action-preserving map A -> B, or nothing. Deterministic.
  std::optional<ActMorphism> find_isomorphism(FiniteAct const& a, FiniteAct const& b);

  //! The subact a·S as ascending carrier indices.
  std::vector<index_type> generated_subact(FiniteAct const& act, index_type a);
  //! A = aS for some a.
  bool is_cyclic(FiniteAct const& act);
  //! A = aS for every a (no proper subact).
  bool is_simple(FiniteAct const& act);

}  // namespace actkit
