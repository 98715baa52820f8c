#include "actkit/oracle.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

#include "actkit/error.hpp"
#include "actkit/symbolic.hpp"

namespace actkit {

  Budgets Budgets::from_environment() {
    Budgets b;
    if (char const* env = std::getenv("ACTKIT_BUDGET")) {
      char*              end   = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        b.candidate_tables = value;
        b.triple_checks    = value;
      }
    }
    return b;
  }

  // Enumeration -----------------------------------------------------------------

  namespace {
    constexpr index_type unset = static_cast<index_type>(-1);

    // Assigns the action of each generator in turn. After each assignment the
    // action of the submonoid generated so far is propagated breadth-first;
    // two words for the same element acting differently prune the branch.
    class ActSearch {
     public:
      ActSearch(FiniteMonoid const& monoid, std::size_t k, std::uint64_t& spent, std::uint64_t budget)
          : _monoid(monoid), _gens(monoid.generators()), _k(k), _spent(spent), _budget(budget), _maps(_gens.size()) {}

      void run(std::set<CanonicalForm>& out, MonoidPtr const& ptr) {
        _out = &out;
        _ptr = &ptr;
        assign(0);
      }

     private:
      // columns[s][a] = a·s for the submonoid generated by gens[0..j)
      bool propagate(std::size_t j, std::vector<std::vector<index_type>>& columns) const {
        std::size_t const n = _monoid.size();
        columns.assign(n, {});
        columns[_monoid.identity()].resize(_k);
        for (index_type a = 0; a < _k; ++a) {
          columns[_monoid.identity()][a] = a;
        }
        std::vector<index_type> queue{_monoid.identity()};
        for (std::size_t i = 0; i < queue.size(); ++i) {
          index_type const s = queue[i];
          for (std::size_t g = 0; g < j; ++g) {
            index_type const        t = _monoid.product(s, _gens[g]);
            std::vector<index_type> col(_k);
            for (index_type a = 0; a < _k; ++a) {
              col[a] = _maps[g][columns[s][a]];
            }
            if (columns[t].empty()) {
              columns[t] = std::move(col);
              queue.push_back(t);
            } else if (columns[t] != col) {
              return false;
            }
          }
        }
        return true;
      }

      void assign(std::size_t j) {
        std::vector<std::vector<index_type>> columns;
        if (j == _gens.size()) {
          propagate(j, columns);
          std::vector<index_type> action(_k * _monoid.size());
          for (index_type a = 0; a < _k; ++a) {
            for (index_type s = 0; s < _monoid.size(); ++s) {
              action[a * _monoid.size() + s] = columns[s][a];
            }
          }
          std::vector<std::string> labels;
          for (std::size_t a = 0; a < _k; ++a) {
            labels.push_back(std::to_string(a));
          }
          _out->insert(canonical_form(FiniteAct(FiniteAct::trusted, *_ptr, std::move(labels), std::move(action))));
          return;
        }
        auto& map = _maps[j];
        map.assign(_k, 0);
        while (true) {
          if (++_spent > _budget) {
            throw Error(ErrorKind::BudgetExceeded,
                        "enumeration exceeded " + std::to_string(_budget) + " candidate tables");
          }
          if (propagate(j + 1, columns)) {
            assign(j + 1);
          }
          // next map in lexicographic order
          std::size_t pos = _k;
          while (pos > 0 && map[pos - 1] + 1 == _k) {
            map[--pos] = 0;
          }
          if (pos == 0) {
            break;
          }
          ++map[pos - 1];
        }
      }

      FiniteMonoid const&                  _monoid;
      std::vector<index_type> const&       _gens;
      std::size_t                          _k;
      std::uint64_t&                       _spent;
      std::uint64_t                        _budget;
      std::vector<std::vector<index_type>> _maps;
      std::set<CanonicalForm>*             _out = nullptr;
      MonoidPtr const*                     _ptr = nullptr;
    };
  }  // namespace

  std::vector<FiniteAct> enumerate_acts(MonoidPtr const& monoid, std::size_t max_size, std::uint64_t budget) {
    if (max_size == 0) {
      throw Error(ErrorKind::UnsupportedParams, "size bound must be at least 1");
    }
    std::set<CanonicalForm> forms;
    std::uint64_t           spent = 0;
    for (std::size_t k = 1; k <= max_size; ++k) {
      ActSearch(*monoid, k, spent, budget).run(forms, monoid);
    }
    std::vector<FiniteAct> out;
    out.reserve(forms.size());
    for (auto const& f : forms) {
      out.push_back(to_act(monoid, f));
    }
    return out;
  }

  // Reports -----------------------------------------------------------------------

  json to_document(SuiteReport const& report, bool timing) {
    json doc{{"suite", report.suite},
             {"monoid", report.monoid},
             {"max_size", report.max_size},
             {"instances", report.instances},
             {"pass", report.passed()},
             {"violations", report.violations},
             {"counters", report.counters}};
    if (timing) {
      doc["wall_time_ms"] = report.wall_time_ms;
    }
    return doc;
  }

  namespace {
    struct Partial {
      std::uint64_t                        instances = 0;
      std::vector<std::string>             violations;
      std::map<std::string, std::uint64_t> counters;
    };

    // Runs fn(i) for every i < count over `threads` workers and merges the
    // partial results in index order, so the outcome is independent of the
    // thread count.
    template <typename Fn>
    void run_chunked(std::size_t count, std::size_t threads, SuiteReport& report, Fn fn) {
      std::vector<Partial> parts(count);
      threads = std::max<std::size_t>(1, std::min(threads, count));
      if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
          fn(i, parts[i]);
        }
      } else {
        std::vector<std::thread> workers;
        for (std::size_t t = 0; t < threads; ++t) {
          workers.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) {
              fn(i, parts[i]);
            }
          });
        }
        for (auto& w : workers) {
          w.join();
        }
      }
      for (auto& p : parts) {
        report.instances += p.instances;
        for (auto& v : p.violations) {
          report.violations.push_back(std::move(v));
        }
        for (auto const& [key, value] : p.counters) {
          report.counters[key] += value;
        }
      }
    }

    SuiteReport new_report(std::string suite, std::string monoid, std::size_t max_size) {
      SuiteReport r;
      r.suite    = std::move(suite);
      r.monoid   = std::move(monoid);
      r.max_size = max_size;
      return r;
    }

    class Stopwatch {
     public:
      double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - _start).count();
      }

     private:
      std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
    };

    std::string name_of(FiniteAct const& act) {
      return "act " + canonical_form(act).key();
    }

    std::vector<index_type> union_of(std::vector<std::vector<index_type>> const& components, std::uint64_t mask) {
      std::vector<index_type> out;
      for (std::size_t i = 0; i < components.size(); ++i) {
        if ((mask >> i) & 1) {
          out.insert(out.end(), components[i].begin(), components[i].end());
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    bool certified_isomorphic(FiniteAct const& x, FiniteAct const& y) {
      auto f = find_isomorphism(x, y);
      return f && is_bijective(*f) && is_morphism(*f) && is_morphism(inverse(*f));
    }
  }  // namespace

  std::vector<std::string> decomposition_violations(FiniteAct const&                            act,
                                                    std::vector<std::vector<index_type>> const& components) {
    auto out = partition_violations(act, components);
    if (!out.empty()) {
      return out;
    }
    std::vector<FiniteAct> parts;
    for (std::size_t i = 0; i < components.size(); ++i) {
      parts.push_back(subact(act, components[i]));
      if (parts.back().size() > default_split_bound) {
        out.push_back("component " + std::to_string(i) + " is too large to certify indecomposable");
      } else if (brute_force_split(parts.back())) {
        out.push_back("component " + std::to_string(i) + " splits into two subacts");
      }
    }
    // the inclusion of the summands is an explicit isomorphism onto the act
    auto const              whole = coproduct(parts);
    std::vector<index_type> map;
    for (auto const& c : components) {
      map.insert(map.end(), c.begin(), c.end());
    }
    ActMorphism inclusion{whole, act, std::move(map)};
    if (!is_bijective(inclusion) || !is_morphism(inclusion)) {
      out.push_back("coproduct of the components does not map isomorphically onto the act");
    }
    if (!find_isomorphism(whole, act)) {
      out.push_back("coproduct of the components is not isomorphic to the act");
    }
    return out;
  }

  SuiteReport verify_unique_decomposition(MonoidPtr const& monoid, SuiteOptions const& opts) {
    Stopwatch   clock;
    auto report = new_report("decomposition", opts.monoid_name, opts.max_size);
    auto const  acts = enumerate_acts(monoid, opts.max_size, opts.budgets.candidate_tables);
    run_chunked(acts.size(), opts.threads, report, [&](std::size_t i, Partial& p) {
      auto const dec = decompose(acts[i]);
      p.instances    = 1;
      p.counters["components"] += dec.components.size();
      for (auto& v : decomposition_violations(acts[i], dec.components)) {
        p.violations.push_back(name_of(acts[i]) + ": " + v);
      }
    });
    report.wall_time_ms = clock.elapsed_ms();
    return report;
  }

  SuiteReport verify_finite_cancellation(MonoidPtr const& monoid, SuiteOptions const& opts) {
    Stopwatch         clock;
    auto report = new_report("cancellation", opts.monoid_name, opts.max_size);
    auto const        acts = enumerate_acts(monoid, opts.max_size, opts.budgets.candidate_tables);
    std::size_t const n    = acts.size();
    std::uint64_t     triples = static_cast<std::uint64_t>(n) * n * (n + 1) / 2;
    if (triples > opts.budgets.triple_checks) {
      throw Error(ErrorKind::BudgetExceeded,
                  std::to_string(triples) + " triples exceed the budget of "
                      + std::to_string(opts.budgets.triple_checks));
    }
    std::vector<IsoSignature> sigs;
    for (auto const& x : acts) {
      sigs.push_back(iso_signature(x));
    }
    run_chunked(n, opts.threads, report, [&](std::size_t a, Partial& p) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = b; c < n; ++c) {
          ++p.instances;
          bool const explicit_iso = find_isomorphism(coproduct(acts[a], acts[b]), coproduct(acts[a], acts[c])).has_value();
          bool const by_signature = sigs[a] + sigs[b] == sigs[a] + sigs[c];
          std::string const tag   = "triple (" + std::to_string(a) + "," + std::to_string(b) + ","
                                  + std::to_string(c) + ")";
          if (explicit_iso != by_signature) {
            p.violations.push_back(tag + ": signature method and explicit isomorphism disagree");
          }
          if (explicit_iso) {
            ++p.counters["matched_triples"];
            if (b != a) {
              ++p.counters["matched_triples_b_not_a"];
            }
            if (!certified_isomorphic(acts[b], acts[c])) {
              p.violations.push_back(tag + ": A+B ≅ A+C but B ≇ C");
            }
          }
        }
      }
    });
    report.counters.try_emplace("matched_triples", 0);
    report.counters.try_emplace("matched_triples_b_not_a", 0);
    if (report.counters["matched_triples"] == 0) {
      report.violations.push_back("vacuous: no triple with A+B ≅ A+C in scope");
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
  }

  SuiteReport verify_internal_cancellation(MonoidPtr const& monoid, SuiteOptions const& opts) {
    Stopwatch   clock;
    auto report = new_report("internal", opts.monoid_name, opts.max_size);
    auto const  acts = enumerate_acts(monoid, opts.max_size, opts.budgets.candidate_tables);
    std::uint64_t pairs = 0;
    for (auto const& x : acts) {
      std::uint64_t k     = decompose(x).components.size();
      std::uint64_t masks = k >= 1 ? (std::uint64_t{1} << k) - 2 : 0;
      pairs += masks * masks;
    }
    if (pairs > opts.budgets.triple_checks) {
      throw Error(ErrorKind::BudgetExceeded,
                  std::to_string(pairs) + " decomposition pairs exceed the budget of "
                      + std::to_string(opts.budgets.triple_checks));
    }
    run_chunked(acts.size(), opts.threads, report, [&](std::size_t i, Partial& p) {
      auto const          dec  = decompose(acts[i]);
      std::uint64_t const full = (std::uint64_t{1} << dec.components.size()) - 1;
      // every proper non-empty union of components is a summand C with
      // complement D
      std::vector<FiniteAct>     summand;
      std::vector<CanonicalForm> form;
      for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (mask == 0) {
          summand.push_back(acts[i]);  // placeholder, never used
          form.emplace_back();
          continue;
        }
        summand.push_back(subact(acts[i], union_of(dec.components, mask)));
        form.push_back(canonical_form(summand.back()));
      }
      for (std::uint64_t c = 1; c < full; ++c) {
        for (std::uint64_t e = 1; e < full; ++e) {
          ++p.instances;
          if (form[c] != form[e]) {
            continue;
          }
          ++p.counters["matched_pairs"];
          if (!certified_isomorphic(summand[full ^ c], summand[full ^ e])) {
            p.violations.push_back(name_of(acts[i]) + ": C ≅ E but D ≇ F for masks " + std::to_string(c) + ", "
                                   + std::to_string(e));
          }
        }
      }
    });
    report.counters.try_emplace("matched_pairs", 0);
    report.wall_time_ms = clock.elapsed_ms();
    return report;
  }

  // Symbolic ------------------------------------------------------------------------

  namespace {
    SymbolicAct random_symbolic(std::mt19937_64& rng) {
      auto multiplicity = [&] {
        auto r = rng() % 6;
        return r == 5 ? Cardinal::omega() : Cardinal::finite(r + 1);
      };
      SymbolicAct::Multiplicities entries, families;
      for (char const* id : {"a", "b", "c", "d", "e"}) {
        if (rng() % 2 == 0) {
          entries.emplace(id, multiplicity());
        }
      }
      std::size_t const family_count = rng() % 3;
      for (std::size_t f = 0; f < family_count; ++f) {
        families.emplace(f == 0 ? "F" : "G", multiplicity());
      }
      if (entries.empty() && families.empty()) {
        entries.emplace("a", multiplicity());
      }
      return SymbolicAct(std::move(entries), std::move(families));
    }

    SymbolicAct entry(std::string const& id, Cardinal k) {
      return SymbolicAct({{id, k}});
    }

    void check_verdict_witness(SymbolicAct const& x, CancellationVerdict const& v, std::string const& tag,
                               std::vector<std::string>& violations) {
      if (auto const* w = v.external_witness(); w && !witness_verifies(x, *w)) {
        violations.push_back(tag + ": external witness does not verify");
      }
      if (auto const* w = v.internal_witness(); w && !witness_verifies(x, *w)) {
        violations.push_back(tag + ": internal witness does not verify");
      }
    }
  }  // namespace

  SuiteReport verify_symbolic_theorems(std::uint64_t seed, std::size_t trials) {
    Stopwatch       clock;
    auto report = new_report("symbolic", "symbolic", 0);
    auto&           bad = report.violations;
    std::mt19937_64 rng(seed);
    report.counters["seed"]   = seed;
    report.counters["trials"] = trials;

    for (std::size_t i = 0; i < trials; ++i) {
      auto const        a   = random_symbolic(rng);
      auto const        b   = random_symbolic(rng);
      auto const        ab  = sym_coproduct(a, b);
      std::string const tag = "trial " + std::to_string(i);
      ++report.instances;

      auto const va  = decide_cancellable(a);
      auto const vb  = decide_cancellable(b);
      auto const vab = decide_cancellable(ab);
      if (vab.is_cancellable() != (va.is_cancellable() && vb.is_cancellable())) {
        bad.push_back(tag + ": A+B cancellable must hold iff A and B are");
      }
      for (auto const* x : {&a, &ab}) {
        auto const external = decide_cancellable(*x);
        auto const internal = decide_internally_cancellable(*x);
        if (external.is_cancellable() != internal.is_cancellable()) {
          bad.push_back(tag + ": internal and external verdicts differ");
        }
        check_verdict_witness(*x, external, tag, bad);
        check_verdict_witness(*x, internal, tag, bad);
        if (!external.is_cancellable()) {
          ++report.counters["not_cancellable"];
        }
      }
      try {
        auto eq = theorem_eq_predicate(a);
        if (eq.has_value() != a.families().empty()) {
          bad.push_back(tag + ": finite-class predicate applies exactly when there are no families");
        }
      } catch (std::logic_error const&) {
        bad.push_back(tag + ": cancellable and finitely decomposable disagree without families");
      }
    }

    auto regression = [&](std::string const& name, bool ok) {
      ++report.counters["regressions"];
      if (!ok) {
        bad.push_back("regression " + name + " failed");
      }
    };
    auto const w1 = Cardinal::finite(1), w2 = Cardinal::finite(2), omega = Cardinal::omega();
    {
      auto const t = entry("t", omega);
      auto const v = decide_cancellable(t);
      auto const* w = v.external_witness();
      regression("omega-copies-not-cancellable", !v.is_cancellable() && w && sym_iso(w->b, entry("t", w1))
                                                     && sym_iso(w->c, entry("t", w2)) && witness_verifies(t, *w));
      regression("two-copies-differ-from-one", !sym_iso(entry("t", w1), entry("t", w2)));
      regression("omega-absorbs-a-copy", sym_iso(t, sym_coproduct(t, entry("t", w1))));
    }
    {
      auto const a = SymbolicAct({{"b", omega}, {"c", omega}});
      auto const v = decide_cancellable(a);
      regression("interleaved-copies-not-cancellable",
                 !v.is_cancellable() && v.external_witness() && witness_verifies(a, *v.external_witness()));
      regression("interleaved-copies-absorb-either-summand",
                 sym_iso(sym_coproduct(a, entry("b", w1)), sym_coproduct(a, entry("c", w1)))
                     && !sym_iso(entry("b", w1), entry("c", w1)));
    }
    {
      auto const v = decide_cancellable(entry("t", w1));
      regression("indecomposable-cancellable",
                 v.is_cancellable() && v.rule() == CancellableRule::Indecomposable);
    }
    regression("pairwise-distinct-family-cancellable",
               decide_cancellable(SymbolicAct({}, {{"F", w1}})).is_cancellable());
    {
      bool ok = !decide_cancellable(free_act_symbolic(omega)).is_cancellable();
      for (std::uint64_t k = 1; k <= 5; ++k) {
        auto const free = free_act_symbolic(Cardinal::finite(k));
        ok              = ok && decide_cancellable(free).is_cancellable() && free.entries().size() == 1;
      }
      regression("free-act-cancellable-iff-finite-basis", ok);
    }
    regression("finite-classes-without-families",
               theorem_eq_predicate(SymbolicAct({{"a", w2}, {"b", Cardinal::finite(7)}})) == std::optional<bool>(true)
                   && theorem_eq_predicate(entry("a", omega)) == std::optional<bool>(false)
                   && !theorem_eq_predicate(SymbolicAct({}, {{"F", w1}})).has_value());
    {
      auto const s = entry("s", omega);
      auto const v = decide_internally_cancellable(s);
      auto const* w = v.internal_witness();
      regression("omega-copies-not-internally-cancellable",
                 !v.is_cancellable() && w && sym_iso(w->c, entry("s", w1)) && sym_iso(w->e, entry("s", w2))
                     && sym_iso(w->d, w->f) && witness_verifies(s, *w));
      regression("finite-copies-internally-cancellable",
                 decide_internally_cancellable(entry("a", Cardinal::finite(3))).is_cancellable());
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
  }

}  // namespace actkit
