#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include "actkit/act.hpp"

namespace actkit {

  //! A cardinal that is either finite or ω (countably infinite).
  class Cardinal {
   public:
    //! Finite(0).
    constexpr Cardinal() noexcept : Cardinal(false, 0) {}

    static constexpr Cardinal finite(std::uint64_t k) noexcept {
      return Cardinal(false, k);
    }
    static constexpr Cardinal omega() noexcept {
      return Cardinal(true, 0);
    }

    constexpr bool is_omega() const noexcept {
      return _omega;
    }
    constexpr bool is_finite() const noexcept {
      return !_omega;
    }
    //! Meaningful only for finite cardinals.
    constexpr std::uint64_t value() const noexcept {
      return _value;
    }

    //! Finite values ascending, then ω.
    friend constexpr auto operator<=>(Cardinal const& x, Cardinal const& y) noexcept {
      if (x._omega != y._omega) {
        return x._omega <=> y._omega;
      }
      return x._value <=> y._value;
    }
    friend constexpr bool operator==(Cardinal const&, Cardinal const&) noexcept = default;

    std::string to_string() const;

   private:
    constexpr Cardinal(bool omega, std::uint64_t value) noexcept : _omega(omega), _value(value) {}

    bool          _omega;
    std::uint64_t _value;
  };

  Cardinal card_add(Cardinal x, Cardinal y) noexcept;

  //! A countable act presented as a coproduct of indecomposable types.
  //!
  //! `entries[t] = k` means k copies of the indecomposable type t.
  //! `families[F] = k` means countably many pairwise non-isomorphic types
  //! (distinct from every entry type), each occurring k times. Distinct ids
  //! denote non-isomorphic classes. Multiplicities are >= 1 and at least one
  //! id is present.
  class SymbolicAct {
   public:
    using Multiplicities = std::map<std::string, Cardinal>;

    //! Throws MalformedDocument on empty input or zero multiplicities.
    SymbolicAct(Multiplicities entries, Multiplicities families = {});

    Multiplicities const& entries() const noexcept {
      return _entries;
    }
    Multiplicities const& families() const noexcept {
      return _families;
    }

    friend bool operator==(SymbolicAct const&, SymbolicAct const&) = default;

   private:
    Multiplicities _entries;
    Multiplicities _families;
  };

  SymbolicAct sym_coproduct(SymbolicAct const& x, SymbolicAct const& y);
  bool        sym_iso(SymbolicAct const& x, SymbolicAct const& y);
  //! Every multiplicity that occurs, entries and families alike.
  std::set<Cardinal> signature_P(SymbolicAct const& x);
  //! Finitely many components: no families and no ω entry.
  bool is_finitely_decomposable(SymbolicAct const& x);

  enum class CancellableRule { Indecomposable, FinitelyDecomposable, AllClassesFinite };
  std::string_view to_string(CancellableRule rule) noexcept;

  //! A ⊔ B ≅ A ⊔ C with B ≇ C.
  struct ExternalWitness {
    SymbolicAct b;
    SymbolicAct c;
  };

  //! A = C ⊔ D = E ⊔ F as symbolic summands, with D ≅ F and C ≇ E.
  struct InternalWitness {
    SymbolicAct c;
    SymbolicAct d;
    SymbolicAct e;
    SymbolicAct f;
  };

  //! Outcome of a cancellation decision. Not-cancellable verdicts can only be
  //! constructed through `not_cancellable`, which re-verifies the witness.
  class CancellationVerdict {
   public:
    static CancellationVerdict cancellable(CancellableRule rule);
    //! Throws std::logic_error if the witness does not verify against `act`.
    static CancellationVerdict not_cancellable(SymbolicAct const& act, ExternalWitness witness);
    static CancellationVerdict not_cancellable(SymbolicAct const& act, InternalWitness witness);

    bool is_cancellable() const noexcept {
      return std::holds_alternative<CancellableRule>(_value);
    }
    //! Only for cancellable verdicts.
    CancellableRule rule() const {
      return std::get<CancellableRule>(_value);
    }
    ExternalWitness const* external_witness() const noexcept {
      return std::get_if<ExternalWitness>(&_value);
    }
    InternalWitness const* internal_witness() const noexcept {
      return std::get_if<InternalWitness>(&_value);
    }

   private:
    using Value = std::variant<CancellableRule, ExternalWitness, InternalWitness>;
    explicit CancellationVerdict(Value v) : _value(std::move(v)) {}

    Value _value;
  };

  bool witness_verifies(SymbolicAct const& act, ExternalWitness const& w);
  bool witness_verifies(SymbolicAct const& act, InternalWitness const& w);

  //! Cancellable iff every isomorphism class of components is finite.
  CancellationVerdict decide_cancellable(SymbolicAct const& x);
  //! Searches for an internal counterexample directly; agrees with
  //! decide_cancellable on every input.
  CancellationVerdict decide_internally_cancellable(SymbolicAct const& x);

  inline constexpr char const* regular_type_id = "S";

  //! The free act on a basis of the given size: one entry, the regular type.
  SymbolicAct free_act_symbolic(Cardinal basis);
  //! Coproduct of eS with multiplicities, merged along e ~ f iff eS ≅ fS.
  //! Type ids are "eS:<label>" for the least idempotent of each class.
  SymbolicAct projective_symbolic(MonoidPtr const& monoid, std::map<index_type, Cardinal> const& multiplicities);

  //! Without families: whether the act is cancellable, after asserting this
  //! coincides with finite decomposability. With families: nothing.
  std::optional<bool> theorem_eq_predicate(SymbolicAct const& x);

  //! Type ids are CanonicalForm::key() of the components.
  SymbolicAct symbolize(FiniteAct const& act);

  SymbolicAct load_symbolic(json const& doc);
  json        to_document(SymbolicAct const& x);
  json        to_document(CancellationVerdict const& v);

}  // namespace actkit
