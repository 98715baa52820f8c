#include "actkit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "actkit/decomposition.hpp"
#include "actkit/error.hpp"
#include "actkit/io.hpp"
#include "actkit/oracle.hpp"
#include "actkit/symbolic.hpp"

namespace actkit::cli {

  namespace {

    struct Settings {
      bool        pretty      = false;
      bool        no_timing   = false;
      std::string out_path;
      std::size_t max_monoid  = 64;
    };

    json error_document(std::string_view kind, std::string const& message) {
      return {{"error", kind}, {"message", message}};
    }

    void guard(Settings const& settings, FiniteMonoid const& monoid) {
      if (monoid.size() > settings.max_monoid) {
        throw Error(ErrorKind::UnsupportedParams,
                    "monoid has " + std::to_string(monoid.size()) + " elements, limit is "
                        + std::to_string(settings.max_monoid) + " (see --max-monoid-size)");
      }
    }

    FiniteAct load_act(Settings const& settings, std::string const& path) {
      auto const dir = std::filesystem::path(path).parent_path().string();
      auto       act = validate_act(read_json_file(path), dir);
      guard(settings, act.monoid());
      return act;
    }

    MonoidPtr load_monoid_ref(Settings const& settings, std::string const& ref) {
      auto m = resolve_monoid(ref.starts_with("builtin:") || std::filesystem::exists(ref) ? ref : "builtin:" + ref);
      guard(settings, *m);
      return m;
    }

    bool is_symbolic(json const& doc) {
      return doc.is_object() && (doc.contains("entries") || doc.contains("families")) && !doc.contains("elements");
    }

    json iso_document(FiniteAct const& a, FiniteAct const& b) {
      auto f = find_isomorphism(a, b);
      if (!f) {
        return {{"isomorphic", false}, {"map", nullptr}};
      }
      json map = json::object();
      for (index_type x = 0; x < a.size(); ++x) {
        map[a.label(x)] = b.label(f->map[x]);
      }
      return {{"isomorphic", true}, {"map", map}};
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out) {
    Settings settings;
    CLI::App app{"Decompositions, isomorphism and cancellation for acts over finite monoids", "actkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("-h,--help");
    app.add_flag("--pretty", settings.pretty, "Indent JSON output");
    app.add_flag("--no-timing", settings.no_timing, "Omit wall-clock fields from reports");
    app.add_option("--out", settings.out_path, "Write the result to this file instead of stdout");
    app.add_option("--max-monoid-size", settings.max_monoid, "Reject monoids larger than this")
        ->check(CLI::PositiveNumber);

    std::string              path_a, path_b, doc_path;
    std::vector<std::string> paths;
    std::string              monoid_ref;
    std::size_t              max_size = 3;
    std::string              suite    = "all";
    std::uint64_t            seed     = 0;
    std::size_t              trials   = 1000;
    std::size_t              threads  = 1;

    auto* decompose_cmd = app.add_subcommand("decompose", "Split an act into indecomposable components");
    decompose_cmd->add_option("act", path_a, "Act document")->required();

    auto* iso_cmd = app.add_subcommand("iso", "Decide whether two acts are isomorphic");
    iso_cmd->add_option("first", path_a, "Act document")->required();
    iso_cmd->add_option("second", path_b, "Act document")->required();

    auto* coproduct_cmd = app.add_subcommand("coproduct", "Disjoint union of acts");
    coproduct_cmd->add_option("acts", paths, "Act documents")->required();

    auto* cancellable_cmd = app.add_subcommand("cancellable", "Decide coproduct cancellability");
    cancellable_cmd->add_option("doc", doc_path, "Symbolic or finite act document")->required();

    auto* internal_cmd = app.add_subcommand("internal", "Decide internal cancellability");
    internal_cmd->add_option("doc", doc_path, "Symbolic or finite act document")->required();

    auto* symbolize_cmd = app.add_subcommand("symbolize", "Present a finite act symbolically");
    symbolize_cmd->add_option("act", path_a, "Act document")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive verification suites");
    verify_cmd->add_option("--monoid", monoid_ref, "Monoid file or builtin:<name>");
    verify_cmd->add_option("--max-size", max_size, "Largest carrier size enumerated")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--suite", suite, "Suite to run")
        ->check(CLI::IsMember({"all", "decomposition", "cancellation", "internal", "symbolic"}));
    verify_cmd->add_option("--seed", seed, "Seed for the symbolic suite");
    verify_cmd->add_option("--trials", trials, "Random symbolic acts to test");
    verify_cmd->add_option("--threads", threads, "Worker threads for the finite suites")
        ->check(CLI::PositiveNumber);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List acts up to isomorphism");
    enumerate_cmd->add_option("--monoid", monoid_ref, "Monoid file or builtin:<name>")->required();
    enumerate_cmd->add_option("--max-size", max_size, "Largest carrier size")->check(CLI::PositiveNumber);

    auto* idempotents_cmd = app.add_subcommand("idempotents", "Idempotents and their classes eS ≅ fS");
    idempotents_cmd->add_option("--monoid", monoid_ref, "Monoid file or builtin:<name>")->required();

    // CLI11 wants argv order reversed
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      out << error_document("UsageError", e.what()).dump() << '\n';
      return 2;
    }

    json result;
    int  code = 0;
    try {
      if (decompose_cmd->parsed()) {
        result = decomposition_report(load_act(settings, path_a));
      } else if (iso_cmd->parsed()) {
        auto a = load_act(settings, path_a);
        auto b = load_act(settings, path_b);
        result = iso_document(a, b);
      } else if (coproduct_cmd->parsed()) {
        std::vector<FiniteAct> acts;
        for (auto const& p : paths) {
          acts.push_back(load_act(settings, p));
        }
        result = to_document(coproduct(acts));
      } else if (cancellable_cmd->parsed() || internal_cmd->parsed()) {
        auto const  doc = read_json_file(doc_path);
        SymbolicAct sym = is_symbolic(doc) ? load_symbolic(doc) : [&] {
          auto act = validate_act(doc, std::filesystem::path(doc_path).parent_path().string());
          guard(settings, act.monoid());
          return symbolize(act);
        }();
        auto verdict = cancellable_cmd->parsed() ? decide_cancellable(sym) : decide_internally_cancellable(sym);
        result       = to_document(verdict);
        result["act"] = to_document(sym);
      } else if (symbolize_cmd->parsed()) {
        result = to_document(symbolize(load_act(settings, path_a)));
      } else if (verify_cmd->parsed()) {
        std::vector<SuiteReport> reports;
        if (suite != "symbolic") {
          if (monoid_ref.empty()) {
            throw Error(ErrorKind::MalformedDocument, "--monoid is required for the finite suites");
          }
          auto const   monoid = load_monoid_ref(settings, monoid_ref);
          SuiteOptions opts{monoid_ref, max_size, Budgets::from_environment(), threads};
          if (suite == "all" || suite == "decomposition") {
            reports.push_back(verify_unique_decomposition(monoid, opts));
          }
          if (suite == "all" || suite == "cancellation") {
            reports.push_back(verify_finite_cancellation(monoid, opts));
          }
          if (suite == "all" || suite == "internal") {
            reports.push_back(verify_internal_cancellation(monoid, opts));
          }
        }
        if (suite == "all" || suite == "symbolic") {
          reports.push_back(verify_symbolic_theorems(seed, trials));
        }
        bool pass = true;
        json docs = json::array();
        for (auto const& r : reports) {
          pass = pass && r.passed();
          docs.push_back(to_document(r, !settings.no_timing));
        }
        result = reports.size() == 1 ? docs.front() : json{{"pass", pass}, {"reports", docs}};
        code   = pass ? 0 : 1;
      } else if (enumerate_cmd->parsed()) {
        auto const monoid = load_monoid_ref(settings, monoid_ref);
        auto const acts   = enumerate_acts(monoid, max_size, Budgets::from_environment().candidate_tables);
        json       docs   = json::array();
        for (auto const& a : acts) {
          auto doc      = to_document(a);
          doc["monoid"] = monoid_ref;
          docs.push_back(std::move(doc));
        }
        result = {{"monoid", monoid_ref}, {"max_size", max_size}, {"count", acts.size()}, {"acts", docs}};
      } else if (idempotents_cmd->parsed()) {
        auto const monoid = load_monoid_ref(settings, monoid_ref);
        json       es     = json::array();
        for (auto e : idempotents(*monoid)) {
          es.push_back(monoid->label(e));
        }
        json classes = json::array();
        for (auto const& block : idempotent_classes(monoid)) {
          json labels = json::array();
          for (auto e : block) {
            labels.push_back(monoid->label(e));
          }
          classes.push_back(std::move(labels));
        }
        result = {{"idempotents", es}, {"classes", classes}};
      }
    } catch (Error const& e) {
      out << error_document(to_string(e.kind()), e.what()).dump() << '\n';
      return 2;
    }

    std::string const text = (settings.pretty ? result.dump(2) : result.dump()) + "\n";
    if (settings.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(settings.out_path);
      if (!file) {
        out << error_document("MalformedDocument", "cannot write '" + settings.out_path + "'").dump() << '\n';
        return 2;
      }
      file << text;
    }
    return code;
  }

}  // namespace actkit::cli
