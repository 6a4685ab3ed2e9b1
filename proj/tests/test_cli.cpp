#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ordtop/cli.hpp"

using namespace ordtop;

namespace {

struct temp_file {
  std::string path;
  explicit temp_file(const std::string& name, const std::string& content)
      : path("/tmp/ordtop_test_" + name) {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~temp_file() { std::remove(path.c_str()); }
};

const char* p3_descriptor = R"({"kind":"finite-poset","elements":["bot","a","b"],"pairs":[["bot","a"],["bot","b"]]})";

std::string claim_path(const std::string& name) { return std::string(ORDTOP_CLAIM_DIR) + "/" + name + ".json"; }

} // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify a finite poset") {
    temp_file f("p3.json", p3_descriptor);
    auto res = cli_run({"classify", "--space", f.path});
    CHECK(res.exit_code == 0);
    const auto& flags = res.report.at("results").at("classification").at("flags");
    CHECK(flags.at("sober") == true);
    CHECK(flags.at("t1") == false);
  }

  TEST_CASE("classify a zoo space lists the curated table") {
    temp_file f("zoo.json", R"({"kind":"zoo","space":"johnstone-scott"})");
    auto res = cli_run({"classify", "--space", f.path});
    CHECK(res.exit_code == 0);
    const auto& rows = res.report.at("results").at("curated");
    bool saw_verified = false, saw_assumed = false;
    for (const auto& row : rows) {
      if (row.at("status") == "VERIFIED") saw_verified = true;
      if (row.at("status") == "ASSUMED") saw_assumed = true;
    }
    CHECK(saw_verified);
    CHECK(saw_assumed);
  }

  TEST_CASE("malformed descriptors exit with code 2") {
    temp_file f("broken.json", "{\"kind\":\"finite-poset\"");
    CHECK(cli_run({"classify", "--space", f.path}).exit_code == 2);
    temp_file g("cycle.json", R"({"kind":"finite-poset","elements":["x","y"],"pairs":[["x","y"],["y","x"]]})");
    CHECK(cli_run({"classify", "--space", g.path}).exit_code == 2);
    CHECK(cli_run({"classify", "--space", "/nonexistent/file.json"}).exit_code == 2);
    CHECK(cli_run({"frobnicate"}).exit_code == 2);
  }

  TEST_CASE("set families in canonical order") {
    temp_file f("p3.json", p3_descriptor);
    auto rd = cli_run({"sets", "--space", f.path, "--which", "rd"});
    CHECK(rd.exit_code == 0);
    CHECK(rd.report.at("results").at("family").size() == 3);

    temp_file a2("a2.json", R"({"kind":"finite-poset","elements":["a","b"],"pairs":[]})");
    auto kx = cli_run({"sets", "--space", a2.path, "--which", "kx"});
    json expect = json::array({json::array({"a"}), json::array({"b"}), json::array({"a", "b"})});
    // canonical order: ascending subset masks over the sorted carrier
    CHECK(kx.report.at("results").at("family") == expect);

    CHECK(cli_run({"sets", "--space", f.path, "--which", "bogus"}).exit_code == 2);
    temp_file z("zoo.json", R"({"kind":"zoo","space":"cocountable"})");
    CHECK(cli_run({"sets", "--space", z.path, "--which", "sc"}).exit_code == 2);
  }

  TEST_CASE("verify shipped and tampered claims") {
    auto ok = cli_run({"verify", "--claim", claim_path("cofinite-not-well-filtered")});
    CHECK(ok.exit_code == 0);
    CHECK(ok.report.at("results").at("verdict") == "verified");

    // tampering: widen the open set to the whole space
    std::ifstream in(claim_path("cofinite-not-well-filtered"));
    json j = json::parse(in);
    j["open"] = "all";
    temp_file bad("tampered.json", j.dump());
    auto refuted = cli_run({"verify", "--claim", bad.path});
    CHECK(refuted.exit_code == 1);
    CHECK(refuted.report.at("results").at("verdict") == "refuted");

    j["open"] = "pt(1,1)"; // wrong grammar for the co-finite space
    temp_file wrong("wrong-grammar.json", j.dump());
    CHECK(cli_run({"verify", "--claim", wrong.path}).exit_code == 2);
  }

  TEST_CASE("every shipped claim file verifies through the cli") {
    for (const char* name : {"cofinite-not-well-filtered", "cofinite-whole-space-rudin", "cofinite-irr-fragment",
                             "cofinite-not-sober", "cocountable-not-sober", "johnstone-upper-not-strong-d",
                             "johnstone-scott-not-strong-d", "omega-fan-upper-not-strong-d",
                             "omega-fan-scott-not-strong-d", "omega-fan-not-coherent"})
      CHECK(cli_run({"verify", "--claim", claim_path(name)}).exit_code == 0);
  }

  TEST_CASE("suite over sizes one to three") {
    auto res = cli_run({"suite", "--max-size", "3", "--seed", "1", "--samples", "0"});
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("results").at("failures").empty());
    CHECK(res.report.at("results").at("instances") == 1 + 3 + 19);
    CHECK(res.report.at("results").at("labeled_poset_counts").at("3") == 19);
  }

  TEST_CASE("suite flag guard") { CHECK(cli_run({"suite", "--max-size", "9"}).exit_code == 2); }

  TEST_CASE("suite determinism: identical seeds give identical bytes") {
    std::vector<std::string> args{"suite", "--max-size", "2", "--seed", "42", "--samples", "0"};
    auto a = cli_run(args);
    auto b = cli_run(args);
    CHECK(a.report.dump(2) == b.report.dump(2));
  }

  TEST_CASE("suite replay reruns a serialized instance") {
    json witness{{"poset", json::parse(p3_descriptor)}, {"check", "wf-retract"}};
    temp_file f("replay.json", witness.dump());
    auto res = cli_run({"suite", "--replay", f.path});
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("results").at("status") == "PASS");
  }

  TEST_CASE("zoo command renders all curated tables") {
    auto res = cli_run({"zoo"});
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("results").size() == 6);
    auto one = cli_run({"zoo", "--space", "cofinite-nat"});
    CHECK(one.report.at("results").size() == 1);
  }

  TEST_CASE("reports carry tool metadata and digests") {
    temp_file f("p3.json", p3_descriptor);
    auto res = cli_run({"classify", "--space", f.path});
    CHECK(res.report.at("tool").at("name") == "ordtop");
    CHECK(res.report.at("input_digest").get<std::string>().size() == 16);
  }

  TEST_CASE("claim files round trip bit-exactly through parse and print") {
    for (const char* name : {"cofinite-not-well-filtered", "johnstone-scott-not-strong-d",
                             "omega-fan-not-coherent", "cofinite-whole-space-rudin"}) {
      std::ifstream in(claim_path(name));
      std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      json j = json::parse(bytes);
      zoo::claim c = claim_from_json(j);
      CHECK(claim_to_json(c).dump(2) + "\n" == bytes);
    }
  }

  TEST_CASE("claim files match the built-in certificates one to one") {
    const char* names[] = {"cofinite-not-well-filtered", "cofinite-whole-space-rudin", "cofinite-irr-fragment",
                           "cofinite-not-sober",         "cocountable-not-sober",      "johnstone-upper-not-strong-d",
                           "johnstone-scott-not-strong-d", "omega-fan-upper-not-strong-d",
                           "omega-fan-scott-not-strong-d", "omega-fan-not-coherent"};
    auto claims = zoo::shipped_claims();
    REQUIRE(claims.size() == 10);
    for (std::size_t i = 0; i < claims.size(); ++i) {
      std::ifstream in(claim_path(names[i]));
      REQUIRE(in.good());
      CHECK(claim_from_json(json::parse(in)) == claims[i]);
    }
  }
}
