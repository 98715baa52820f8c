#include "actkit/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "actkit/decomposition.hpp"
#include "actkit/error.hpp"

namespace actkit {

  std::string Cardinal::to_string() const {
    return _omega ? "omega" : std::to_string(_value);
  }

  Cardinal card_add(Cardinal x, Cardinal y) noexcept {
    if (x.is_omega() || y.is_omega()) {
      return Cardinal::omega();
    }
    return Cardinal::finite(x.value() + y.value());
  }

  SymbolicAct::SymbolicAct(Multiplicities entries, Multiplicities families)
      : _entries(std::move(entries)), _families(std::move(families)) {
    if (_entries.empty() && _families.empty()) {
      throw Error(ErrorKind::EmptyAct, "a symbolic act needs at least one entry or family");
    }
    for (auto const* m : {&_entries, &_families}) {
      for (auto const& [id, k] : *m) {
        if (k == Cardinal::finite(0)) {
          throw Error(ErrorKind::MalformedDocument, "multiplicity of '" + id + "' must be at least 1", {id});
        }
      }
    }
  }

  namespace {
    SymbolicAct::Multiplicities merge(SymbolicAct::Multiplicities x, SymbolicAct::Multiplicities const& y) {
      for (auto const& [id, k] : y) {
        auto [it, inserted] = x.emplace(id, k);
        if (!inserted) {
          it->second = card_add(it->second, k);
        }
      }
      return x;
    }

    SymbolicAct single_entry(std::string const& id, Cardinal k) {
      return SymbolicAct({{id, k}});
    }

    SymbolicAct single_family(std::string const& id, Cardinal k) {
      return SymbolicAct({}, {{id, k}});
    }

    CancellableRule rule_for(SymbolicAct const& x) {
      if (x.families().empty() && x.entries().size() == 1 && x.entries().begin()->second == Cardinal::finite(1)) {
        return CancellableRule::Indecomposable;
      }
      if (is_finitely_decomposable(x)) {
        return CancellableRule::FinitelyDecomposable;
      }
      return CancellableRule::AllClassesFinite;
    }
  }  // namespace

  SymbolicAct sym_coproduct(SymbolicAct const& x, SymbolicAct const& y) {
    return SymbolicAct(merge(x.entries(), y.entries()), merge(x.families(), y.families()));
  }

  bool sym_iso(SymbolicAct const& x, SymbolicAct const& y) {
    return x.entries() == y.entries() && x.families() == y.families();
  }

  std::set<Cardinal> signature_P(SymbolicAct const& x) {
    std::set<Cardinal> out;
    for (auto const* m : {&x.entries(), &x.families()}) {
      for (auto const& [id, k] : *m) {
        out.insert(k);
      }
    }
    return out;
  }

  bool is_finitely_decomposable(SymbolicAct const& x) {
    if (!x.families().empty()) {
      return false;
    }
    for (auto const& [id, k] : x.entries()) {
      if (k.is_omega()) {
        return false;
      }
    }
    return true;
  }

  std::string_view to_string(CancellableRule rule) noexcept {
    switch (rule) {
      case CancellableRule::Indecomposable: return "indecomposable";
      case CancellableRule::FinitelyDecomposable: return "finitely-decomposable";
      case CancellableRule::AllClassesFinite: return "all-classes-finite";
    }
    return "unknown";
  }

  bool witness_verifies(SymbolicAct const& act, ExternalWitness const& w) {
    return sym_iso(sym_coproduct(act, w.b), sym_coproduct(act, w.c)) && !sym_iso(w.b, w.c);
  }

  bool witness_verifies(SymbolicAct const& act, InternalWitness const& w) {
    return sym_iso(sym_coproduct(w.c, w.d), act) && sym_iso(sym_coproduct(w.e, w.f), act) && sym_iso(w.d, w.f)
           && !sym_iso(w.c, w.e);
  }

  CancellationVerdict CancellationVerdict::cancellable(CancellableRule rule) {
    return CancellationVerdict(rule);
  }

  CancellationVerdict CancellationVerdict::not_cancellable(SymbolicAct const& act, ExternalWitness witness) {
    if (!witness_verifies(act, witness)) {
      throw std::logic_error("cancellation witness does not verify");
    }
    return CancellationVerdict(std::move(witness));
  }

  CancellationVerdict CancellationVerdict::not_cancellable(SymbolicAct const& act, InternalWitness witness) {
    if (!witness_verifies(act, witness)) {
      throw std::logic_error("internal cancellation witness does not verify");
    }
    return CancellationVerdict(std::move(witness));
  }

  CancellationVerdict decide_cancellable(SymbolicAct const& x) {
    // every class [i] is finite, and there are finitely many distinct class
    // sizes because there are finitely many ids
    for (auto const& [id, k] : x.entries()) {
      if (k.is_omega()) {
        return CancellationVerdict::not_cancellable(
            x, ExternalWitness{single_entry(id, Cardinal::finite(1)), single_entry(id, Cardinal::finite(2))});
      }
    }
    for (auto const& [id, k] : x.families()) {
      if (k.is_omega()) {
        return CancellationVerdict::not_cancellable(
            x, ExternalWitness{single_family(id, Cardinal::finite(1)), single_family(id, Cardinal::finite(2))});
      }
    }
    return CancellationVerdict::cancellable(rule_for(x));
  }

  CancellationVerdict decide_internally_cancellable(SymbolicAct const& x) {
    // try to split off one copy of a type in two ways whose complements agree
    auto attempt = [&](SymbolicAct c, SymbolicAct e) -> std::optional<CancellationVerdict> {
      InternalWitness w{std::move(c), x, std::move(e), x};
      if (witness_verifies(x, w)) {
        return CancellationVerdict::not_cancellable(x, std::move(w));
      }
      return std::nullopt;
    };
    for (auto const& [id, k] : x.entries()) {
      if (auto v = attempt(single_entry(id, Cardinal::finite(1)), single_entry(id, Cardinal::finite(2)))) {
        return *v;
      }
    }
    for (auto const& [id, k] : x.families()) {
      if (auto v = attempt(single_family(id, Cardinal::finite(1)), single_family(id, Cardinal::finite(2)))) {
        return *v;
      }
    }
    return CancellationVerdict::cancellable(rule_for(x));
  }

  SymbolicAct free_act_symbolic(Cardinal basis) {
    if (basis == Cardinal::finite(0)) {
      throw Error(ErrorKind::EmptyAct, "a free act needs a non-empty basis");
    }
    return single_entry(regular_type_id, basis);
  }

  SymbolicAct projective_symbolic(MonoidPtr const& monoid, std::map<index_type, Cardinal> const& multiplicities) {
    auto const                  classes = idempotent_classes(monoid);
    SymbolicAct::Multiplicities entries;
    for (auto const& [e, k] : multiplicities) {
      auto block = std::find_if(classes.begin(), classes.end(), [e = e](auto const& b) {
        return std::find(b.begin(), b.end(), e) != b.end();
      });
      if (block == classes.end()) {
        throw Error(ErrorKind::NotIdempotent, "'" + monoid->label(e) + "' is not an idempotent", {monoid->label(e)});
      }
      if (k == Cardinal::finite(0)) {
        continue;
      }
      entries = merge(std::move(entries), {{"eS:" + monoid->label(block->front()), k}});
    }
    return SymbolicAct(std::move(entries));
  }

  std::optional<bool> theorem_eq_predicate(SymbolicAct const& x) {
    if (!x.families().empty()) {
      return std::nullopt;
    }
    bool const cancellable = decide_cancellable(x).is_cancellable();
    if (cancellable != is_finitely_decomposable(x)) {
      throw std::logic_error("cancellability and finite decomposability disagree without families");
    }
    return cancellable;
  }

  SymbolicAct symbolize(FiniteAct const& act) {
    SymbolicAct::Multiplicities entries;
    for (auto const& [form, k] : iso_signature(act).classes) {
      entries.emplace(form.key(), Cardinal::finite(k));
    }
    return SymbolicAct(std::move(entries));
  }

  namespace {
    SymbolicAct::Multiplicities load_multiplicities(json const& doc, char const* field) {
      SymbolicAct::Multiplicities out;
      if (!doc.contains(field)) {
        return out;
      }
      auto const& m = doc[field];
      if (!m.is_object()) {
        throw Error(ErrorKind::MalformedDocument, std::string("'") + field + "' must be an object");
      }
      for (auto const& [id, k] : m.items()) {
        if (k.is_string() && k.get<std::string>() == "omega") {
          out.emplace(id, Cardinal::omega());
        } else if (k.is_number_unsigned() && k.get<std::uint64_t>() >= 1) {
          out.emplace(id, Cardinal::finite(k.get<std::uint64_t>()));
        } else {
          throw Error(ErrorKind::MalformedDocument,
                      "multiplicity of '" + id + "' must be a positive integer or \"omega\"", {id});
        }
      }
      return out;
    }

    json multiplicities_document(SymbolicAct::Multiplicities const& m) {
      json out = json::object();
      for (auto const& [id, k] : m) {
        if (k.is_omega()) {
          out[id] = "omega";
        } else {
          out[id] = k.value();
        }
      }
      return out;
    }
  }  // namespace

  SymbolicAct load_symbolic(json const& doc) {
    if (!doc.is_object() || (!doc.contains("entries") && !doc.contains("families"))) {
      throw Error(ErrorKind::MalformedDocument, "symbolic act needs 'entries' or 'families'");
    }
    return SymbolicAct(load_multiplicities(doc, "entries"), load_multiplicities(doc, "families"));
  }

  json to_document(SymbolicAct const& x) {
    return {{"entries", multiplicities_document(x.entries())}, {"families", multiplicities_document(x.families())}};
  }

  json to_document(CancellationVerdict const& v) {
    if (v.is_cancellable()) {
      return {{"cancellable", true}, {"rule", to_string(v.rule())}, {"witness", nullptr}};
    }
    json witness;
    if (auto const* w = v.external_witness()) {
      witness = {{"B", to_document(w->b)}, {"C", to_document(w->c)}};
    } else {
      auto const* iw = v.internal_witness();
      witness        = {{"C", to_document(iw->c)},
                        {"D", to_document(iw->d)},
                        {"E", to_document(iw->e)},
                        {"F", to_document(iw->f)}};
    }
    return {{"cancellable", false}, {"rule", "infinite-class"}, {"witness", witness}};
  }

}  // namespace actkit
