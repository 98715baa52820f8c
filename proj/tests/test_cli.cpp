#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "actkit/cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using actkit::json;

namespace {
  namespace fs = std::filesystem;

  struct Result {
    int         code;
    std::string text;
    json        doc() const {
      return json::parse(text);
    }
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out;
    int                code = actkit::cli::run(args, out);
    return {code, out.str()};
  }

  class TempDir {
   public:
    TempDir() : _path(fs::temp_directory_path() / ("actkit-cli-" + std::to_string(::getpid()))) {
      fs::create_directories(_path);
    }
    ~TempDir() {
      fs::remove_all(_path);
    }
    std::string write(std::string const& name, json const& doc) const {
      auto p = _path / name;
      std::ofstream(p) << doc.dump();
      return p.string();
    }
    std::string path(std::string const& name) const {
      return (_path / name).string();
    }

   private:
    fs::path _path;
  };

  bool single_line_error(Result const& r) {
    return r.code == 2 && r.text.find('\n') == r.text.size() - 1 && r.doc().contains("error");
  }
}  // namespace

TEST_CASE("cli: cancellable on a symbolic document") {
  TempDir dir;
  auto    path = dir.write("sym.json", json::parse(R"({"entries": {"t": "omega"}})"));
  auto    r    = run({"cancellable", path});
  CHECK(r.code == 0);
  auto doc = r.doc();
  CHECK(doc["cancellable"] == false);
  CHECK(doc["witness"]["B"]["entries"]["t"] == 1);
  CHECK(doc["witness"]["C"]["entries"]["t"] == 2);

  auto i = run({"internal", path});
  CHECK(i.code == 0);
  CHECK(i.doc()["witness"].contains("F"));
}

TEST_CASE("cli: cancellable on a finite act is symbolized first") {
  TempDir dir;
  auto    path = dir.write("swap.json", fixtures::z2_act_document("y", "x"));
  auto    r    = run({"cancellable", path});
  CHECK(r.code == 0);
  CHECK(r.doc()["cancellable"] == true);
  CHECK(r.doc()["rule"] == "indecomposable");
  CHECK(r.doc()["act"]["entries"]["2:0,1|1,0"] == 1);
}

TEST_CASE("cli: iso, decompose, coproduct, symbolize") {
  TempDir dir;
  auto    swap = dir.write("swap.json", fixtures::z2_act_document("y", "x"));
  auto    pts  = dir.write("points.json", fixtures::z2_act_document("x", "y"));

  auto same = run({"iso", swap, swap});
  CHECK(same.code == 0);
  CHECK(same.doc() == json::parse(R"({"isomorphic": true, "map": {"x": "x", "y": "y"}})"));
  auto differ = run({"iso", swap, pts});
  CHECK(differ.doc() == json::parse(R"({"isomorphic": false, "map": null})"));

  auto dec = run({"decompose", pts});
  CHECK(dec.code == 0);
  CHECK(dec.doc()["components"].size() == 2);
  CHECK(dec.doc()["signature"][0]["multiplicity"] == 2);

  auto sum = run({"coproduct", swap, pts, swap});
  CHECK(sum.code == 0);
  CHECK(sum.doc()["elements"].size() == 6);
  CHECK(sum.doc()["elements"][2] == "1.x");

  auto sym = run({"symbolize", pts});
  CHECK(sym.doc()["entries"].size() == 1);
}

TEST_CASE("cli: verify") {
  auto r = run({"verify", "--monoid", "builtin:cyclic_group(2)", "--max-size", "3", "--suite", "all", "--trials", "200"});
  CHECK(r.code == 0);
  auto doc = r.doc();
  CHECK(doc["pass"] == true);
  CHECK(doc["reports"].size() == 4);

  auto sym = run({"verify", "--suite", "symbolic", "--seed", "3", "--trials", "50", "--no-timing"});
  CHECK(sym.code == 0);
  CHECK(sym.doc()["suite"] == "symbolic");
  CHECK_FALSE(sym.doc().contains("wall_time_ms"));
  CHECK(run({"verify", "--suite", "symbolic", "--seed", "3", "--trials", "50", "--no-timing"}).text == sym.text);

  auto one = run({"--no-timing", "verify", "--monoid", "trivial", "--max-size", "3", "--suite", "decomposition"});
  CHECK(one.code == 0);
  CHECK(one.doc()["instances"] == 3);

  auto missing = run({"verify", "--suite", "decomposition"});
  CHECK(single_line_error(missing));
}

TEST_CASE("cli: enumerate and idempotents") {
  auto e = run({"enumerate", "--monoid", "builtin:cyclic_group(2)", "--max-size", "2"});
  CHECK(e.code == 0);
  CHECK(e.doc()["count"] == 3);
  CHECK(e.doc()["acts"][0]["monoid"] == "builtin:cyclic_group(2)");

  auto i = run({"idempotents", "--monoid", "builtin:full_transformation(2)"});
  CHECK(i.code == 0);
  CHECK(i.doc() == json::parse(R"({"idempotents": ["01", "00", "11"], "classes": [["01"], ["00", "11"]]})"));
}

TEST_CASE("cli: error paths") {
  TempDir dir;
  CHECK(single_line_error(run({"frobnicate"})));
  CHECK(single_line_error(run({})));
  CHECK(single_line_error(run({"decompose", dir.path("missing.json")})));
  auto bad = dir.write("bad.json", fixtures::z2_act_document("y", "y"));
  auto r   = run({"decompose", bad});
  CHECK(single_line_error(r));
  CHECK(r.doc()["error"] == "CompatibilityViolation");
  CHECK(single_line_error(run({"cancellable", dir.write("empty.json", json::object())})));
  CHECK(single_line_error(run({"verify", "--monoid", "builtin:full_transformation(2)", "--max-size", "3",
                               "--max-monoid-size", "2"})));
  CHECK(single_line_error(run({"verify", "--monoid", "builtin:cyclic_group(2)", "--suite", "nonsense"})));
}

TEST_CASE("cli: --out and --pretty") {
  TempDir dir;
  auto    swap = dir.write("swap.json", fixtures::z2_act_document("y", "x"));
  auto    out  = dir.path("out.json");
  auto    r    = run({"--pretty", "--out", out, "symbolize", swap});
  CHECK(r.code == 0);
  CHECK(r.text.empty());
  std::ifstream in(out);
  std::string   text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("\n  ") != std::string::npos);
  CHECK(json::parse(text)["entries"]["2:0,1|1,0"] == 1);
}

TEST_CASE("cli: act documents may reference a monoid file") {
  TempDir dir;
  dir.write("z2.json", fixtures::z2_document());
  json act{{"monoid", "z2.json"}, {"elements", {"x"}}, {"action", json::array({json::array({"x", "x"})})}};
  auto path = dir.write("act.json", act);
  auto r    = run({"decompose", path});
  CHECK(r.code == 0);
  CHECK(r.doc()["components"].size() == 1);
}
