#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/decomposition.hpp"

namespace actkit {

  struct Budgets {
    std::uint64_t candidate_tables = 10'000'000;
    std::uint64_t triple_checks    = 1'000'000;

    //! Defaults, with both limits replaced by ACTKIT_BUDGET when it is set to
    //! a positive integer.
    static Budgets from_environment();
  };

  //! One representative per isomorphism class of acts with 1 <= |A| <= max_size,
  //! each equal to its own canonical act; ordered by canonical form.
  //! Throws BudgetExceeded once more than `budget` candidate generator
  //! tables have been examined.
  std::vector<FiniteAct> enumerate_acts(MonoidPtr const& monoid,
                                        std::size_t      max_size,
                                        std::uint64_t    budget = Budgets{}.candidate_tables);

  struct SuiteReport {
    std::string                          suite;
    std::string                          monoid;
    std::size_t                          max_size = 0;
    std::uint64_t                        instances = 0;
    std::vector<std::string>             violations;
    std::map<std::string, std::uint64_t> counters;
    double                               wall_time_ms = 0;

    bool passed() const noexcept {
      return violations.empty();
    }
  };

  json to_document(SuiteReport const& report, bool timing = true);

  struct SuiteOptions {
    std::string   monoid_name;  // descriptor echoed into reports
    std::size_t   max_size = 3;
    Budgets       budgets  = {};
    std::size_t   threads  = 1;
  };

  //! Problems with a claimed decomposition of `act`: partition, closure,
  //! indecomposability (by brute_force_split) and reassembly.
  std::vector<std::string> decomposition_violations(FiniteAct const&                            act,
                                                    std::vector<std::vector<index_type>> const& components);

  SuiteReport verify_unique_decomposition(MonoidPtr const& monoid, SuiteOptions const& opts);
  SuiteReport verify_finite_cancellation(MonoidPtr const& monoid, SuiteOptions const& opts);
  SuiteReport verify_internal_cancellation(MonoidPtr const& monoid, SuiteOptions const& opts);
  SuiteReport verify_symbolic_theorems(std::uint64_t seed, std::size_t trials);

}  // namespace actkit
