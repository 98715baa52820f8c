#include "actkit/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "actkit/error.hpp"

namespace actkit {

  DisjointSets::DisjointSets(std::size_t n) : _parent(n), _size(n, 1), _count(n) {
    std::iota(_parent.begin(), _parent.end(), 0);
  }

  index_type DisjointSets::find(index_type x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool DisjointSets::unite(index_type x, index_type y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_size[x] < _size[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    _size[x] += _size[y];
    --_count;
    return true;
  }

  Decomposition decompose(FiniteAct const& act) {
    DisjointSets sets(act.size());
    for (index_type a = 0; a < act.size(); ++a) {
      for (index_type g : act.monoid().generators()) {
        sets.unite(a, act.act(a, g));
      }
    }
    std::vector<index_type>              slot(act.size(), static_cast<index_type>(-1));
    std::vector<std::vector<index_type>> components;
    for (index_type a = 0; a < act.size(); ++a) {
      index_type root = sets.find(a);
      if (slot[root] == static_cast<index_type>(-1)) {
        slot[root] = static_cast<index_type>(components.size());
        components.emplace_back();
      }
      components[slot[root]].push_back(a);
    }
    return {act, std::move(components)};
  }

  bool is_indecomposable(FiniteAct const& act) {
    DisjointSets sets(act.size());
    for (index_type a = 0; a < act.size(); ++a) {
      for (index_type g : act.monoid().generators()) {
        sets.unite(a, act.act(a, g));
      }
    }
    return sets.count() == 1;
  }

  std::vector<std::string> partition_violations(FiniteAct const&                            act,
                                                std::vector<std::vector<index_type>> const& components) {
    std::vector<std::string> out;
    std::vector<int>         hits(act.size(), 0);
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (components[i].empty()) {
        out.push_back("component " + std::to_string(i) + " is empty");
      }
      for (index_type a : components[i]) {
        if (a >= act.size()) {
          out.push_back("component " + std::to_string(i) + " names a point outside the carrier");
          continue;
        }
        ++hits[a];
      }
      bool in_range = std::all_of(components[i].begin(), components[i].end(),
                                  [&](index_type a) { return a < act.size(); });
      if (in_range && !is_closed(act, components[i])) {
        out.push_back("component " + std::to_string(i) + " is not closed under the action");
      }
    }
    for (index_type a = 0; a < act.size(); ++a) {
      if (hits[a] != 1) {
        out.push_back("point '" + act.label(a) + "' lies in " + std::to_string(hits[a]) + " components");
      }
    }
    return out;
  }

  std::optional<std::pair<std::vector<index_type>, std::vector<index_type>>>
  brute_force_split(FiniteAct const& act, std::size_t bound) {
    std::size_t const m = act.size();
    if (m > bound) {
      throw Error(ErrorKind::SizeBoundExceeded,
                  "brute_force_split is limited to " + std::to_string(bound) + " points, act has " + std::to_string(m));
    }
    if (m < 2) {
      return std::nullopt;
    }
    std::size_t const n = act.monoid().size();
    // point 0 always goes to the first part; the second part must be non-empty
    std::uint64_t const full = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t mask = 1; mask < full; mask += 2) {
      bool closed = true;
      for (index_type a = 0; a < m && closed; ++a) {
        bool inside = (mask >> a) & 1;
        for (index_type s = 0; s < n; ++s) {
          if (((mask >> act.act(a, s)) & 1) != inside) {
            closed = false;
            break;
          }
        }
      }
      if (closed) {
        std::vector<index_type> first, second;
        for (index_type a = 0; a < m; ++a) {
          ((mask >> a) & 1 ? first : second).push_back(a);
        }
        return std::make_pair(std::move(first), std::move(second));
      }
    }
    return std::nullopt;
  }

  std::size_t IsoSignature::component_count() const {
    std::size_t total = 0;
    for (auto const& [form, k] : classes) {
      total += k;
    }
    return total;
  }

  IsoSignature iso_signature(FiniteAct const& act) {
    auto const                 dec = decompose(act);
    std::vector<CanonicalForm> forms;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      forms.push_back(canonical_labelling_indecomposable(dec.component_act(i)).form);
    }
    std::sort(forms.begin(), forms.end());
    IsoSignature sig;
    for (auto& f : forms) {
      if (!sig.classes.empty() && sig.classes.back().first == f) {
        ++sig.classes.back().second;
      } else {
        sig.classes.emplace_back(std::move(f), 1);
      }
    }
    return sig;
  }

  IsoSignature operator+(IsoSignature const& x, IsoSignature const& y) {
    IsoSignature out;
    auto         i = x.classes.begin();
    auto         j = y.classes.begin();
    while (i != x.classes.end() || j != y.classes.end()) {
      if (j == y.classes.end() || (i != x.classes.end() && i->first < j->first)) {
        out.classes.push_back(*i++);
      } else if (i == x.classes.end() || j->first < i->first) {
        out.classes.push_back(*j++);
      } else {
        out.classes.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  json decomposition_report(FiniteAct const& act) {
    auto const dec        = decompose(act);
    json       components = json::array();
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      components.push_back(to_document(dec.component_act(i)));
    }
    json signature = json::array();
    for (auto const& [form, k] : iso_signature(act).classes) {
      signature.push_back({{"form", to_document(act.monoid_ptr(), form)}, {"multiplicity", k}});
    }
    return {{"components", components}, {"signature", signature}};
  }

}  // namespace actkit
