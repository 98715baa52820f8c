#include "actkit/act.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "actkit/decomposition.hpp"
#include "actkit/error.hpp"
#include "actkit/io.hpp"

namespace actkit {

  namespace {
    constexpr index_type unset = static_cast<index_type>(-1);

    void check_labels(std::vector<std::string> const& labels) {
      if (labels.empty()) {
        throw Error(ErrorKind::EmptyAct, "acts are non-empty");
      }
      auto sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        throw Error(ErrorKind::MalformedDocument, "duplicate carrier label '" + *dup + "'", {*dup});
      }
    }
  }  // namespace

  FiniteAct::FiniteAct(trusted_t, MonoidPtr monoid, std::vector<std::string> labels, std::vector<index_type> action)
      : _monoid(std::move(monoid)), _labels(std::move(labels)), _action(std::move(action)) {}

  FiniteAct::FiniteAct(MonoidPtr monoid, std::vector<std::string> labels, std::vector<index_type> action)
      : FiniteAct(trusted, std::move(monoid), std::move(labels), std::move(action)) {
    check_labels(_labels);
    std::size_t const m = _labels.size();
    std::size_t const n = _monoid->size();
    if (_action.size() != m * n) {
      throw Error(ErrorKind::MalformedDocument, "action table has the wrong shape");
    }
    for (index_type x : _action) {
      if (x >= m) {
        throw Error(ErrorKind::MalformedDocument, "action entry out of range");
      }
    }
    index_type const one = _monoid->identity();
    for (index_type a = 0; a < m; ++a) {
      if (act(a, one) != a) {
        throw Error(ErrorKind::IdentityAxiomViolation,
                    "'" + _labels[a] + "'·" + _monoid->label(one) + " != '" + _labels[a] + "'", {_labels[a]});
      }
    }
    for (index_type a = 0; a < m; ++a) {
      for (index_type s = 0; s < n; ++s) {
        for (index_type t = 0; t < n; ++t) {
          if (act(a, _monoid->product(s, t)) != act(act(a, s), t)) {
            auto const& ms = _monoid->label(s);
            auto const& mt = _monoid->label(t);
            throw Error(ErrorKind::CompatibilityViolation,
                        "'" + _labels[a] + "'·(" + ms + "·" + mt + ") != ('" + _labels[a] + "'·" + ms + ")·" + mt,
                        {_labels[a], ms, mt});
          }
        }
      }
    }
  }

  std::optional<index_type> FiniteAct::find(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<index_type>(it - _labels.begin());
  }

  bool operator==(FiniteAct const& x, FiniteAct const& y) {
    return same_monoid(x, y) && x._labels == y._labels && x._action == y._action;
  }

  bool same_monoid(FiniteAct const& x, FiniteAct const& y) {
    return x.monoid_ptr() == y.monoid_ptr() || x.monoid() == y.monoid();
  }

  void require_same_monoid(FiniteAct const& x, FiniteAct const& y) {
    if (!same_monoid(x, y)) {
      throw Error(ErrorKind::MonoidMismatch, "acts are over different monoids");
    }
  }

  // Documents -----------------------------------------------------------------

  FiniteAct validate_act(MonoidPtr const& monoid, json const& doc) {
    if (!doc.is_object()) {
      throw Error(ErrorKind::MalformedDocument, "act document must be an object");
    }
    if (!doc.contains("elements") || !doc["elements"].is_array()) {
      throw Error(ErrorKind::MalformedDocument, "missing array field 'elements'");
    }
    if (!doc.contains("action") || !doc["action"].is_array()) {
      throw Error(ErrorKind::MalformedDocument, "missing array field 'action'");
    }
    std::vector<std::string> labels;
    for (auto const& x : doc["elements"]) {
      if (!x.is_string()) {
        throw Error(ErrorKind::MalformedDocument, "'elements' must hold strings");
      }
      labels.push_back(x.get<std::string>());
    }
    check_labels(labels);
    std::unordered_map<std::string, index_type> index;
    for (index_type i = 0; i < labels.size(); ++i) {
      index.emplace(labels[i], i);
    }
    auto const& rows = doc["action"];
    if (rows.size() != labels.size()) {
      throw Error(ErrorKind::MalformedDocument, "action must have one row per element");
    }
    std::vector<index_type> action;
    action.reserve(labels.size() * monoid->size());
    for (auto const& row : rows) {
      if (!row.is_array() || row.size() != monoid->size()) {
        throw Error(ErrorKind::MalformedDocument, "action rows must have one entry per monoid element");
      }
      for (auto const& x : row) {
        if (!x.is_string()) {
          throw Error(ErrorKind::MalformedDocument, "action entries must be labels");
        }
        auto it = index.find(x.get<std::string>());
        if (it == index.end()) {
          throw Error(ErrorKind::UnknownLabel, "unknown carrier element '" + x.get<std::string>() + "'",
                      {x.get<std::string>()});
        }
        action.push_back(it->second);
      }
    }
    return FiniteAct(monoid, std::move(labels), std::move(action));
  }

  FiniteAct validate_act(json const& doc, std::string const& base_dir) {
    if (!doc.is_object() || !doc.contains("monoid")) {
      throw Error(ErrorKind::MalformedDocument, "act document needs a 'monoid' field");
    }
    auto const& m = doc["monoid"];
    MonoidPtr   monoid;
    if (m.is_string()) {
      monoid = resolve_monoid(m.get<std::string>(), base_dir);
    } else {
      monoid = load_monoid(m);
    }
    return validate_act(monoid, doc);
  }

  json to_document(FiniteAct const& act) {
    json rows = json::array();
    for (index_type a = 0; a < act.size(); ++a) {
      json row = json::array();
      for (index_type s = 0; s < act.monoid().size(); ++s) {
        row.push_back(act.label(act.act(a, s)));
      }
      rows.push_back(std::move(row));
    }
    return json{{"monoid", to_document(act.monoid())}, {"elements", act.labels()}, {"action", rows}};
  }

  // Constructors ----------------------------------------------------------------

  FiniteAct regular_act(MonoidPtr const& monoid) {
    return FiniteAct(FiniteAct::trusted, monoid, monoid->labels(), monoid->table());
  }

  FiniteAct free_act(MonoidPtr const& monoid, std::size_t k) {
    if (k == 0) {
      throw Error(ErrorKind::EmptyAct, "a free act needs a non-empty basis");
    }
    std::vector<FiniteAct> copies(k, regular_act(monoid));
    return coproduct(copies);
  }

  FiniteAct projective_act(MonoidPtr const& monoid, std::span<index_type const> es) {
    if (es.empty()) {
      throw Error(ErrorKind::EmptyAct, "a projective act needs at least one idempotent");
    }
    std::vector<FiniteAct> parts;
    for (index_type e : es) {
      parts.push_back(principal_right_act(monoid, e));
    }
    return coproduct(parts);
  }

  FiniteAct coproduct(std::span<FiniteAct const> acts) {
    if (acts.empty()) {
      throw Error(ErrorKind::EmptyAct, "coproduct of an empty family");
    }
    for (auto const& x : acts) {
      require_same_monoid(acts.front(), x);
    }
    MonoidPtr const&         monoid = acts.front().monoid_ptr();
    std::size_t const        n      = monoid->size();
    std::vector<std::string> labels;
    std::vector<index_type>  action;
    index_type               offset = 0;
    for (std::size_t i = 0; i < acts.size(); ++i) {
      auto const& x = acts[i];
      for (index_type a = 0; a < x.size(); ++a) {
        labels.push_back(std::to_string(i) + "." + x.label(a));
        for (index_type s = 0; s < n; ++s) {
          action.push_back(offset + x.act(a, s));
        }
      }
      offset += static_cast<index_type>(x.size());
    }
    return FiniteAct(FiniteAct::trusted, monoid, std::move(labels), std::move(action));
  }

  FiniteAct coproduct(FiniteAct const& x, FiniteAct const& y) {
    std::vector<FiniteAct> pair{x, y};
    return coproduct(pair);
  }

  bool is_closed(FiniteAct const& act, std::span<index_type const> points) {
    std::vector<bool> member(act.size(), false);
    for (index_type a : points) {
      member[a] = true;
    }
    for (index_type a : points) {
      for (index_type s = 0; s < act.monoid().size(); ++s) {
        if (!member[act.act(a, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteAct subact(FiniteAct const& act, std::span<index_type const> points) {
    if (points.empty()) {
      throw Error(ErrorKind::EmptyAct, "subacts are non-empty");
    }
    std::vector<index_type> position(act.size(), unset);
    for (index_type i = 0; i < points.size(); ++i) {
      position[points[i]] = i;
    }
    std::vector<std::string> labels;
    std::vector<index_type>  action;
    for (index_type a : points) {
      labels.push_back(act.label(a));
      for (index_type s = 0; s < act.monoid().size(); ++s) {
        index_type b = position[act.act(a, s)];
        if (b == unset) {
          throw Error(ErrorKind::MalformedDocument, "subset is not closed under the action");
        }
        action.push_back(b);
      }
    }
    return FiniteAct(FiniteAct::trusted, act.monoid_ptr(), std::move(labels), std::move(action));
  }

  // Morphisms -------------------------------------------------------------------

  bool is_morphism(ActMorphism const& f) {
    require_same_monoid(f.source, f.target);
    if (f.map.size() != f.source.size()) {
      return false;
    }
    for (index_type a = 0; a < f.source.size(); ++a) {
      if (f.map[a] >= f.target.size()) {
        return false;
      }
      for (index_type s = 0; s < f.source.monoid().size(); ++s) {
        if (f.map[f.source.act(a, s)] != f.target.act(f.map[a], s)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_bijective(ActMorphism const& f) {
    if (f.source.size() != f.target.size() || f.map.size() != f.source.size()) {
      return false;
    }
    std::vector<bool> hit(f.target.size(), false);
    for (index_type b : f.map) {
      if (b >= hit.size() || hit[b]) {
        return false;
      }
      hit[b] = true;
    }
    return true;
  }

  ActMorphism identity_morphism(FiniteAct const& act) {
    std::vector<index_type> map(act.size());
    std::iota(map.begin(), map.end(), 0);
    return {act, act, std::move(map)};
  }

  ActMorphism compose(ActMorphism const& f, ActMorphism const& g) {
    if (!(f.target == g.source)) {
      throw Error(ErrorKind::MonoidMismatch, "morphisms are not composable");
    }
    std::vector<index_type> map(f.map.size());
    for (std::size_t a = 0; a < map.size(); ++a) {
      map[a] = g.map[f.map[a]];
    }
    return {f.source, g.target, std::move(map)};
  }

  ActMorphism inverse(ActMorphism const& f) {
    if (!is_bijective(f)) {
      throw Error(ErrorKind::MalformedDocument, "only bijective morphisms have inverses");
    }
    std::vector<index_type> map(f.map.size());
    for (index_type a = 0; a < map.size(); ++a) {
      map[f.map[a]] = a;
    }
    return {f.target, f.source, std::move(map)};
  }

  // Canonical forms -------------------------------------------------------------

  std::string CanonicalForm::key() const {
    std::string out = std::to_string(size) + ":";
    std::size_t n   = size == 0 ? 0 : table.size() / size;
    for (std::size_t a = 0; a < size; ++a) {
      if (a > 0) {
        out += '|';
      }
      for (std::size_t s = 0; s < n; ++s) {
        if (s > 0) {
          out += ',';
        }
        out += std::to_string(table[a * n + s]);
      }
    }
    return out;
  }

  namespace {

    // Individualisation-refinement search for the least generator table over
    // all leaves of the search tree. Colourings are ordered partitions (colour
    // = rank of the cell), refined with label-free signatures, so the leaf set
    // is carried to itself by isomorphisms and its minimum is invariant.
    class CanonicalSearch {
     public:
      explicit CanonicalSearch(FiniteAct const& act)
          : _act(act), _gens(act.monoid().generators()), _m(act.size()), _preimages(_gens.size()) {
        for (std::size_t g = 0; g < _gens.size(); ++g) {
          _preimages[g].resize(_m);
          for (index_type a = 0; a < _m; ++a) {
            _preimages[g][_act.act(a, _gens[g])].push_back(a);
          }
        }
      }

      std::vector<index_type> run() {
        std::vector<std::vector<std::uint64_t>> sig(_m);
        for (index_type a = 0; a < _m; ++a) {
          std::uint64_t fixed = 0;
          for (index_type s = 0; s < _act.monoid().size(); ++s) {
            fixed += _act.act(a, s) == a;
          }
          sig[a] = {generated_subact(_act, a).size(), fixed};
        }
        search(refine(rank(sig)));
        return _best_labelling;
      }

     private:
      using Colouring = std::vector<index_type>;

      static std::pair<Colouring, std::size_t> rank(std::vector<std::vector<std::uint64_t>> const& sig) {
        std::vector<index_type> order(sig.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](index_type x, index_type y) { return sig[x] < sig[y]; });
        Colouring   colour(sig.size());
        std::size_t cells = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
          if (i > 0 && sig[order[i]] != sig[order[i - 1]]) {
            ++cells;
          }
          colour[order[i]] = static_cast<index_type>(cells);
        }
        return {std::move(colour), sig.empty() ? 0 : cells + 1};
      }

      Colouring refine(std::pair<Colouring, std::size_t> start) const {
        auto [colour, cells] = std::move(start);
        while (true) {
          std::vector<std::vector<std::uint64_t>> sig(_m);
          for (index_type a = 0; a < _m; ++a) {
            auto& v = sig[a];
            v.push_back(colour[a]);
            for (std::size_t g = 0; g < _gens.size(); ++g) {
              v.push_back(colour[_act.act(a, _gens[g])]);
            }
            std::vector<std::uint64_t> in;
            for (std::size_t g = 0; g < _gens.size(); ++g) {
              for (index_type b : _preimages[g][a]) {
                in.push_back(g * (_m + 1) + colour[b]);
              }
            }
            std::sort(in.begin(), in.end());
            v.insert(v.end(), in.begin(), in.end());
          }
          auto next = rank(sig);
          if (next.second == cells) {
            return colour;
          }
          colour = std::move(next.first);
          cells  = next.second;
        }
      }

      bool transposition_is_automorphism(index_type u, index_type v) const {
        auto tau = [&](index_type x) { return x == u ? v : (x == v ? u : x); };
        for (index_type a = 0; a < _m; ++a) {
          for (index_type g : _gens) {
            if (tau(_act.act(a, g)) != _act.act(tau(a), g)) {
              return false;
            }
          }
        }
        return true;
      }

      void leaf(Colouring const& colour) {
        std::vector<index_type> inverse(_m);
        for (index_type a = 0; a < _m; ++a) {
          inverse[colour[a]] = a;
        }
        std::vector<index_type> table;
        table.reserve(_m * _gens.size());
        for (index_type r = 0; r < _m; ++r) {
          for (index_type g : _gens) {
            table.push_back(colour[_act.act(inverse[r], g)]);
          }
        }
        if (_best_labelling.empty() || table < _best_table) {
          _best_table     = std::move(table);
          _best_labelling = colour;
        }
      }

      void search(Colouring const& colour) {
        std::vector<std::size_t> cell_size(_m, 0);
        for (index_type c : colour) {
          ++cell_size[c];
        }
        auto target = std::find_if(cell_size.begin(), cell_size.end(), [](std::size_t k) { return k > 1; });
        if (target == cell_size.end()) {
          leaf(colour);
          return;
        }
        auto const              cell = static_cast<index_type>(target - cell_size.begin());
        std::vector<index_type> tried;
        for (index_type v = 0; v < _m; ++v) {
          if (colour[v] != cell) {
            continue;
          }
          // (u v) fixes everything individualised so far, so it maps the
          // subtree below u onto the subtree below v
          bool twin = std::any_of(tried.begin(), tried.end(),
                                  [&](index_type u) { return transposition_is_automorphism(u, v); });
          tried.push_back(v);
          if (twin) {
            continue;
          }
          std::vector<std::vector<std::uint64_t>> sig(_m);
          for (index_type a = 0; a < _m; ++a) {
            sig[a] = {colour[a], a == v ? 0u : 1u};
          }
          search(refine(rank(sig)));
        }
      }

      FiniteAct const&                                   _act;
      std::vector<index_type> const&                     _gens;
      std::size_t                                        _m;
      std::vector<std::vector<std::vector<index_type>>> _preimages;
      std::vector<index_type>                            _best_table;
      std::vector<index_type>                            _best_labelling;
    };

    CanonicalForm form_from_labelling(FiniteAct const& act, std::vector<index_type> const& labelling) {
      std::size_t const       m = act.size();
      std::size_t const       n = act.monoid().size();
      std::vector<index_type> inverse(m);
      for (index_type a = 0; a < m; ++a) {
        inverse[labelling[a]] = a;
      }
      CanonicalForm form{m, std::vector<index_type>(m * n)};
      for (index_type r = 0; r < m; ++r) {
        for (index_type s = 0; s < n; ++s) {
          form.table[r * n + s] = labelling[act.act(inverse[r], s)];
        }
      }
      return form;
    }

  }  // namespace

  CanonicalLabelling canonical_labelling_indecomposable(FiniteAct const& act) {
    if (!is_indecomposable(act)) {
      throw Error(ErrorKind::MalformedDocument, "act is not indecomposable");
    }
    auto labelling = CanonicalSearch(act).run();
    auto form      = form_from_labelling(act, labelling);
    return {std::move(form), std::move(labelling)};
  }

  CanonicalLabelling canonical_labelling(FiniteAct const& act) {
    auto const                      dec = decompose(act);
    std::vector<CanonicalLabelling> parts;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      parts.push_back(canonical_labelling_indecomposable(dec.component_act(i)));
    }
    std::vector<std::size_t> order(parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return parts[x].form < parts[y].form; });

    std::size_t const  n = act.monoid().size();
    CanonicalLabelling out;
    out.form.size = act.size();
    out.form.table.reserve(act.size() * n);
    out.labelling.assign(act.size(), unset);
    index_type offset = 0;
    for (std::size_t i : order) {
      auto const& part = parts[i];
      for (index_type x : part.form.table) {
        out.form.table.push_back(offset + x);
      }
      auto const& points = dec.components[i];
      for (std::size_t k = 0; k < points.size(); ++k) {
        out.labelling[points[k]] = offset + part.labelling[k];
      }
      offset += static_cast<index_type>(part.form.size);
    }
    return out;
  }

  CanonicalForm canonical_form(FiniteAct const& act) {
    return canonical_labelling(act).form;
  }

  FiniteAct to_act(MonoidPtr const& monoid, CanonicalForm const& form) {
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < form.size; ++a) {
      labels.push_back(std::to_string(a));
    }
    return FiniteAct(monoid, std::move(labels), form.table);
  }

  json to_document(MonoidPtr const& monoid, CanonicalForm const& form) {
    return to_document(to_act(monoid, form));
  }

  std::optional<ActMorphism> find_isomorphism(FiniteAct const& a, FiniteAct const& b) {
    require_same_monoid(a, b);
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    auto const ca = canonical_labelling(a);
    auto const cb = canonical_labelling(b);
    if (ca.form != cb.form) {
      return std::nullopt;
    }
    std::vector<index_type> b_at(b.size());
    for (index_type y = 0; y < b.size(); ++y) {
      b_at[cb.labelling[y]] = y;
    }
    std::vector<index_type> map(a.size());
    for (index_type x = 0; x < a.size(); ++x) {
      map[x] = b_at[ca.labelling[x]];
    }
    return ActMorphism{a, b, std::move(map)};
  }

  std::vector<index_type> generated_subact(FiniteAct const& act, index_type a) {
    std::vector<bool>       seen(act.size(), false);
    std::vector<index_type> queue{a};
    seen[a] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (index_type g : act.monoid().generators()) {
        index_type b = act.act(queue[i], g);
        if (!seen[b]) {
          seen[b] = true;
          queue.push_back(b);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  bool is_cyclic(FiniteAct const& act) {
    for (index_type a = 0; a < act.size(); ++a) {
      if (generated_subact(act, a).size() == act.size()) {
        return true;
      }
    }
    return false;
  }

  bool is_simple(FiniteAct const& act) {
    for (index_type a = 0; a < act.size(); ++a) {
      if (generated_subact(act, a).size() != act.size()) {
        return false;
      }
    }
    return true;
  }

}  // namespace actkit
