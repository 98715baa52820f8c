#include "actkit/monoid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "actkit/act.hpp"
#include "actkit/decomposition.hpp"
#include "actkit/error.hpp"

namespace actkit {

  FiniteMonoid::FiniteMonoid(std::vector<std::string> labels, index_type identity, std::vector<index_type> table)
      : _labels(std::move(labels)), _identity(identity), _table(std::move(table)) {
    std::size_t const n = _labels.size();
    if (n == 0) {
      throw Error(ErrorKind::MalformedDocument, "a monoid has at least one element");
    }
    if (_table.size() != n * n) {
      throw Error(ErrorKind::MalformedDocument,
                  "table has " + std::to_string(_table.size()) + " entries, expected " + std::to_string(n * n));
    }
    {
      auto sorted = _labels;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        throw Error(ErrorKind::MalformedDocument, "duplicate element label '" + *dup + "'", {*dup});
      }
    }
    for (index_type x : _table) {
      if (x >= n) {
        throw Error(ErrorKind::MalformedDocument, "table entry out of range");
      }
    }
    if (_identity >= n) {
      throw Error(ErrorKind::MissingIdentity, "identity index out of range");
    }
    for (index_type s = 0; s < n; ++s) {
      if (product(_identity, s) != s || product(s, _identity) != s) {
        throw Error(ErrorKind::MissingIdentity,
                    "'" + _labels[_identity] + "' is not a two-sided identity (fails at '" + _labels[s] + "')",
                    {_labels[_identity], _labels[s]});
      }
    }
    for (index_type s = 0; s < n; ++s) {
      for (index_type t = 0; t < n; ++t) {
        index_type const st = product(s, t);
        for (index_type u = 0; u < n; ++u) {
          if (product(st, u) != product(s, product(t, u))) {
            throw Error(ErrorKind::NonAssociative,
                        "(" + _labels[s] + "·" + _labels[t] + ")·" + _labels[u] + " != " + _labels[s] + "·(" + _labels[t]
                            + "·" + _labels[u] + ")",
                        {_labels[s], _labels[t], _labels[u]});
          }
        }
      }
    }
    compute_generators();
  }

  void FiniteMonoid::compute_generators() {
    std::size_t const n = size();
    std::vector<bool> reached(n, false);
    reached[_identity] = true;
    std::vector<index_type> frontier{_identity};
    std::size_t             reached_count = 1;

    auto close = [&](std::vector<index_type> seeds) {
      // right-multiply everything reachable by every generator until stable
      while (!seeds.empty()) {
        std::vector<index_type> next;
        for (index_type x : seeds) {
          for (index_type g : _generators) {
            index_type y = product(x, g);
            if (!reached[y]) {
              reached[y] = true;
              ++reached_count;
              next.push_back(y);
            }
          }
        }
        seeds = std::move(next);
      }
    };

    for (index_type s = 0; s < n && reached_count < n; ++s) {
      if (reached[s]) {
        continue;
      }
      _generators.push_back(s);
      std::vector<index_type> all;
      for (index_type x = 0; x < n; ++x) {
        if (reached[x]) {
          all.push_back(x);
        }
      }
      close(std::move(all));
    }

    // breadth-first factorisation s = p·g
    _factorisation.assign(n, {_identity, _identity});
    std::vector<bool> seen(n, false);
    seen[_identity] = true;
    _bfs_order      = {_identity};
    for (std::size_t i = 0; i < _bfs_order.size(); ++i) {
      index_type p = _bfs_order[i];
      for (index_type g : _generators) {
        index_type s = product(p, g);
        if (!seen[s]) {
          seen[s]           = true;
          _factorisation[s] = {p, g};
          _bfs_order.push_back(s);
        }
      }
    }
  }

  std::optional<index_type> FiniteMonoid::find(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<index_type>(it - _labels.begin());
  }

  index_type FiniteMonoid::index_of(std::string_view label) const {
    if (auto i = find(label)) {
      return *i;
    }
    throw Error(ErrorKind::UnknownLabel, "unknown monoid element '" + std::string(label) + "'", {std::string(label)});
  }

  namespace {
    std::vector<std::string> string_array(json const& doc, char const* field) {
      if (!doc.contains(field) || !doc[field].is_array()) {
        throw Error(ErrorKind::MalformedDocument, std::string("missing array field '") + field + "'");
      }
      std::vector<std::string> out;
      for (auto const& x : doc[field]) {
        if (!x.is_string()) {
          throw Error(ErrorKind::MalformedDocument, std::string("'") + field + "' must hold strings");
        }
        out.push_back(x.get<std::string>());
      }
      return out;
    }
  }  // namespace

  MonoidPtr load_monoid(json const& doc) {
    if (!doc.is_object()) {
      throw Error(ErrorKind::MalformedDocument, "monoid document must be an object");
    }
    auto labels = string_array(doc, "elements");
    if (!doc.contains("identity") || !doc["identity"].is_string()) {
      throw Error(ErrorKind::MalformedDocument, "missing string field 'identity'");
    }
    if (!doc.contains("table") || !doc["table"].is_array()) {
      throw Error(ErrorKind::MalformedDocument, "missing array field 'table'");
    }
    auto index = [&](std::string const& label) -> index_type {
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) {
        throw Error(ErrorKind::UnknownLabel, "unknown monoid element '" + label + "'", {label});
      }
      return static_cast<index_type>(it - labels.begin());
    };
    std::size_t const n     = labels.size();
    auto const&       rows  = doc["table"];
    if (rows.size() != n) {
      throw Error(ErrorKind::MalformedDocument, "table must have one row per element");
    }
    std::vector<index_type> table;
    table.reserve(n * n);
    for (auto const& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw Error(ErrorKind::MalformedDocument, "table rows must have one entry per element");
      }
      for (auto const& x : row) {
        if (!x.is_string()) {
          throw Error(ErrorKind::MalformedDocument, "table entries must be labels");
        }
        table.push_back(index(x.get<std::string>()));
      }
    }
    index_type identity = index(doc["identity"].get<std::string>());
    return std::make_shared<FiniteMonoid const>(std::move(labels), identity, std::move(table));
  }

  json to_document(FiniteMonoid const& monoid) {
    json rows = json::array();
    for (index_type s = 0; s < monoid.size(); ++s) {
      json row = json::array();
      for (index_type t = 0; t < monoid.size(); ++t) {
        row.push_back(monoid.label(monoid.product(s, t)));
      }
      rows.push_back(std::move(row));
    }
    return json{{"elements", monoid.labels()}, {"identity", monoid.label(monoid.identity())}, {"table", rows}};
  }

  MonoidPtr trivial_monoid() {
    return std::make_shared<FiniteMonoid const>(std::vector<std::string>{"1"}, 0, std::vector<index_type>{0});
  }

  MonoidPtr cyclic_group(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::UnsupportedParams, "cyclic_group(n) needs n >= 1");
    }
    std::vector<std::string> labels{"1"};
    for (std::size_t k = 1; k < n; ++k) {
      labels.push_back(k == 1 ? "g" : "g" + std::to_string(k));
    }
    std::vector<index_type> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = static_cast<index_type>((i + j) % n);
      }
    }
    return std::make_shared<FiniteMonoid const>(std::move(labels), 0, std::move(table));
  }

  MonoidPtr full_transformation(std::size_t n) {
    if (n == 0 || n > 3) {
      throw Error(ErrorKind::UnsupportedParams, "full_transformation(n) needs 1 <= n <= 3");
    }
    // maps as image words, identity first then the rest in lexicographic order
    std::vector<std::vector<std::size_t>> maps;
    std::size_t                           total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n;
    }
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    maps.push_back(identity);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::size_t> img(n);
      std::size_t              c = code;
      for (std::size_t i = n; i-- > 0;) {
        img[i] = c % n;
        c /= n;
      }
      if (img != identity) {
        maps.push_back(img);
      }
    }
    std::vector<std::string> labels;
    for (auto const& m : maps) {
      std::string word;
      for (auto x : m) {
        word += static_cast<char>('0' + x);
      }
      labels.push_back(word);
    }
    std::vector<index_type> table(total * total);
    for (std::size_t s = 0; s < total; ++s) {
      for (std::size_t t = 0; t < total; ++t) {
        // s·t: apply s, then t
        std::vector<std::size_t> img(n);
        for (std::size_t x = 0; x < n; ++x) {
          img[x] = maps[t][maps[s][x]];
        }
        table[s * total + t] = static_cast<index_type>(std::find(maps.begin(), maps.end(), img) - maps.begin());
      }
    }
    return std::make_shared<FiniteMonoid const>(std::move(labels), 0, std::move(table));
  }

  MonoidPtr builtin_monoid(std::string_view spec) {
    if (spec.starts_with("builtin:")) {
      spec.remove_prefix(8);
    }
    if (spec == "trivial") {
      return trivial_monoid();
    }
    auto param = [&](std::string_view name) -> std::optional<std::size_t> {
      if (!spec.starts_with(name) || spec.size() < name.size() + 3 || spec[name.size()] != '('
          || spec.back() != ')') {
        return std::nullopt;
      }
      auto        digits = spec.substr(name.size() + 1, spec.size() - name.size() - 2);
      std::size_t value  = 0;
      auto [ptr, ec]     = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw Error(ErrorKind::UnsupportedParams, "bad parameter in '" + std::string(spec) + "'");
      }
      return value;
    };
    if (auto n = param("cyclic_group")) {
      return cyclic_group(*n);
    }
    if (auto n = param("full_transformation")) {
      return full_transformation(*n);
    }
    throw Error(ErrorKind::UnsupportedParams, "unknown builtin monoid '" + std::string(spec) + "'",
                {std::string(spec)});
  }

  std::vector<index_type> idempotents(FiniteMonoid const& monoid) {
    std::vector<index_type> out;
    for (index_type e = 0; e < monoid.size(); ++e) {
      if (monoid.product(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  FiniteAct principal_right_act(MonoidPtr const& monoid, index_type e) {
    FiniteMonoid const& m = *monoid;
    if (e >= m.size() || m.product(e, e) != e) {
      throw Error(ErrorKind::NotIdempotent,
                  "'" + (e < m.size() ? m.label(e) : std::to_string(e)) + "' is not an idempotent");
    }
    std::vector<index_type>  carrier;
    std::vector<index_type>  position(m.size(), static_cast<index_type>(-1));
    for (index_type s = 0; s < m.size(); ++s) {
      index_type x = m.product(e, s);
      if (position[x] == static_cast<index_type>(-1)) {
        position[x] = static_cast<index_type>(carrier.size());
        carrier.push_back(x);
      }
    }
    std::vector<std::string> labels;
    std::vector<index_type>  action;
    for (index_type x : carrier) {
      labels.push_back(m.label(x));
      for (index_type s = 0; s < m.size(); ++s) {
        action.push_back(position[m.product(x, s)]);
      }
    }
    return FiniteAct(FiniteAct::trusted, monoid, std::move(labels), std::move(action));
  }

  std::vector<std::vector<index_type>> idempotent_classes(MonoidPtr const& monoid) {
    auto const             es = idempotents(*monoid);
    std::vector<FiniteAct> principal;
    for (index_type e : es) {
      principal.push_back(principal_right_act(monoid, e));
    }
    std::vector<std::vector<index_type>> blocks;
    std::vector<std::size_t>             representative;  // index into es
    for (std::size_t i = 0; i < es.size(); ++i) {
      bool placed = false;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (find_isomorphism(principal[representative[b]], principal[i])) {
          blocks[b].push_back(es[i]);
          placed = true;
          break;
        }
      }
      if (!placed) {
        blocks.push_back({es[i]});
        representative.push_back(i);
      }
    }
    return blocks;
  }

}  // namespace actkit
