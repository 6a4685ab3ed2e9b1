#include "ordtop/cli.hpp"

#include <fstream>
#include <sstream>

#include "ordtop/enumerate.hpp"
#include "ordtop/set_classes.hpp"

namespace ordtop {

namespace {

constexpr const char* tool_version = "0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::bad_input, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json base_report(const std::string& command, const std::string& input_bytes, std::uint64_t seed) {
  return json{{"tool", json{{"name", "ordtop"}, {"version", tool_version}}},
              {"command", command},
              {"input_digest", fnv1a_hex(input_bytes)},
              {"seed", seed}};
}

struct flag_map {
  std::vector<std::pair<std::string, std::string>> kv;
  std::vector<std::string> switches;

  bool has_switch(const std::string& name) const {
    return std::find(switches.begin(), switches.end(), name) != switches.end();
  }
  const std::string* get(const std::string& name) const {
    for (const auto& [k, v] : kv)
      if (k == name) return &v;
    return nullptr;
  }
  std::string require(const std::string& name) const {
    if (const std::string* v = get(name)) return *v;
    fail(errc::bad_input, "missing flag --" + name);
  }
  long get_long(const std::string& name, long fallback) const {
    if (const std::string* v = get(name)) return std::stol(*v);
    return fallback;
  }
};

flag_map parse_flags(const std::vector<std::string>& args, std::size_t from) {
  flag_map f;
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) fail(errc::bad_input, "unexpected argument '" + a + "'");
    std::string name = a.substr(2);
    if (name == "dedup") {
      f.switches.push_back(name);
    } else {
      if (i + 1 >= args.size()) fail(errc::bad_input, "flag --" + name + " needs a value");
      f.kv.emplace_back(name, args[++i]);
    }
  }
  return f;
}

// ---- classify ----

cli_result cmd_classify(const flag_map& flags) {
  std::string bytes = read_file(flags.require("space"));
  auto desc = parse_space_descriptor(json::parse(bytes));
  json rep = base_report("classify", bytes, 0);
  if (desc.k == space_descriptor::kind::zoo) {
    rep["results"] = json{{"space", zoo::space_id_name(desc.zoo_id)},
                          {"curated", curated_to_json(zoo::curated_results(desc.zoo_id))}};
    return {0, rep, ""};
  }
  finite_space x = descriptor_space(desc);
  rep["results"] = json{{"space", space_to_json(x)}, {"classification", report_to_json(classify(x))}};
  return {0, rep, ""};
}

// ---- sets ----

cli_result cmd_sets(const flag_map& flags) {
  std::string bytes = read_file(flags.require("space"));
  auto desc = parse_space_descriptor(json::parse(bytes));
  if (desc.k == space_descriptor::kind::zoo) fail(errc::bad_input, "set families need a finite descriptor");
  finite_space x = descriptor_space(desc);
  std::string which = flags.require("which");

  std::vector<subset> fam;
  if (which == "sc") fam = point_closures(x);
  else if (which == "dc") fam = directed_closures(x);
  else if (which == "rd") fam = x.compact_saturated().size() <= rudin_family_limit ? rudin_sets(x) : rudin_sets_reduced(x);
  else if (which == "wd") fam = wd_sets(x);
  else if (which == "irr") fam = x.irreducible_closed();
  else if (which == "kx") fam = x.compact_saturated();
  else fail(errc::bad_input, "unknown family '" + which + "' (expected sc|dc|rd|wd|irr|kx)");

  json rep = base_report("sets", bytes + "\n" + which, 0);
  rep["results"] = json{{"which", which}, {"family", family_to_json(x, fam)}};
  return {0, rep, ""};
}

// ---- verify ----

cli_result cmd_verify(const flag_map& flags) {
  std::string bytes = read_file(flags.require("claim"));
  zoo::claim c = claim_from_json(json::parse(bytes));
  zoo::verdict v = zoo::verify_claim(c);
  json rep = base_report("verify", bytes, 0);
  const char* verdict_name = v.kind == zoo::verdict_kind::verified    ? "verified"
                             : v.kind == zoo::verdict_kind::refuted   ? "refuted"
                                                                      : "not-decidable";
  rep["results"] = json{{"claim", claim_to_json(c)}, {"verdict", verdict_name}, {"detail", v.detail}};
  return {v.verified() ? 0 : 1, rep, v.detail};
}

// ---- zoo ----

cli_result cmd_zoo(const flag_map& flags) {
  json tables = json::object();
  std::vector<zoo::space_id> ids;
  if (const std::string* one = flags.get("space")) ids.push_back(zoo::parse_space_id(*one));
  else
    ids = {zoo::space_id::cofinite_nat,    zoo::space_id::cocountable,
           zoo::space_id::johnstone_scott, zoo::space_id::johnstone_upper,
           zoo::space_id::omega_fan_scott, zoo::space_id::omega_fan_upper};
  for (zoo::space_id s : ids) tables[zoo::space_id_name(s)] = curated_to_json(zoo::curated_results(s));
  json rep = base_report("zoo", tables.dump(), 0);
  rep["results"] = tables;
  return {0, rep, ""};
}

// ---- suite ----

struct suite_stats {
  long instances = 0;
  std::map<std::string, long> pass_counts;
  json failures = json::array();
};

void run_instance_checks(const finite_poset& p, suite_stats& st, const std::string& label) {
  ++st.instances;
  auto record = [&](const check_result& c) {
    if (c.pass) ++st.pass_counts[c.id];
    else
      st.failures.push_back(json{{"instance", label},
                                 {"poset", poset_to_json(p)},
                                 {"check", c.id},
                                 {"witness", c.detail}});
  };

  finite_space x = finite_space::alexandroff(p);
  classify(x); // the five monotone-convergence conditions agree or this throws
  record({"monotone-convergence-agreement", true, ""});

  for (const auto& c : theorem_suite(p)) record(c);
  for (const auto& c : wf_characterization_check(x)) record(c);
  for (const auto& c : sober_characterization_check(x)) record(c);

  // class tower with full collapse on finite spaces
  auto sc = point_closures(x);
  auto dc = directed_closures(x);
  auto kx = x.compact_saturated();
  auto rd = kx.size() <= static_cast<std::size_t>(rudin_family_limit) ? rudin_sets(x) : rudin_sets_reduced(x);
  auto wd = wd_sets(x);
  auto irr = x.irreducible_closed();
  bool tower = sc == dc && dc == rd && rd == wd && wd == irr;
  record({"class-tower-collapse", tower, tower ? "" : "set classes differ"});

  if (kx.size() <= 12) {
    bool agree = rudin_sets(x, 12) == rudin_sets_reduced(x);
    record({"rudin-double-oracle", agree, agree ? "" : "exhaustive and reduced Rudin families differ"});
  }

  if (p.size() <= 3) {
    bool ok = true;
    for_each_submask(full_mask(static_cast<int>(kx.size())), [&](subset sel) {
      if (sel == 0 || !ok) return;
      std::vector<subset> fam;
      for (int i : bits_of(sel)) fam.push_back(kx[static_cast<std::size_t>(i)]);
      if (!intersection_closure_check(x, fam)) ok = false;
    });
    record({"power-space-intersection-closure", ok, ok ? "" : "closure changes the family intersection"});
  }
}

cli_result cmd_suite(const flag_map& flags) {
  long max_size = flags.get_long("max-size", 4);
  std::uint64_t seed = static_cast<std::uint64_t>(flags.get_long("seed", 0));
  long samples = flags.get_long("samples", 0);
  bool dedup = flags.has_switch("dedup");
  if (max_size < 1 || max_size > 6) fail(errc::bad_input, "max-size must lie in 1..6");

  static const long expected_counts[] = {0, 1, 3, 19, 219};
  suite_stats st;
  json counts = json::object();
  for (long n = 1; n <= std::min<long>(max_size, 4); ++n) {
    auto posets = all_labeled_posets(static_cast<int>(n));
    if (static_cast<long>(posets.size()) != expected_counts[n])
      fail(errc::bad_input, "labeled poset enumerator count mismatch at size " + std::to_string(n));
    counts[std::to_string(n)] = posets.size();
    if (dedup) posets = dedup_isomorphic(posets);
    long idx = 0;
    for (const auto& p : posets) run_instance_checks(p, st, "exhaustive-" + std::to_string(n) + "-" + std::to_string(idx++));
  }
  if (max_size >= 5) {
    rng r(seed);
    for (long i = 0; i < samples; ++i) {
      int n = 5 + (max_size >= 6 ? r.below(2) : 0);
      finite_poset p = random_poset(n, r);
      run_instance_checks(p, st, "random-" + std::to_string(i));
    }
  }

  std::ostringstream key;
  key << "suite:" << max_size << ":" << seed << ":" << samples << ":" << (dedup ? 1 : 0);
  json rep = base_report("suite", key.str(), seed);
  json pass = json::object();
  for (const auto& [id, count] : st.pass_counts) pass[id] = count;
  rep["results"] = json{{"instances", st.instances},
                        {"labeled_poset_counts", counts},
                        {"passes", pass},
                        {"failures", st.failures}};
  return {st.failures.empty() ? 0 : 1, rep, ""};
}

cli_result cmd_suite_replay(const flag_map& flags) {
  std::string bytes = read_file(flags.require("replay"));
  json w = json::parse(bytes);
  finite_poset p = parse_space_descriptor(w.at("poset")).poset;
  std::string check = w.at("check").get<std::string>();

  check_result found{"", false, "check id not part of the catalog"};
  for (const auto& c : theorem_suite(p))
    if (c.id == check) found = c;
  finite_space x = finite_space::alexandroff(p);
  for (const auto& c : wf_characterization_check(x))
    if (c.id == check) found = c;
  for (const auto& c : sober_characterization_check(x))
    if (c.id == check) found = c;

  json rep = base_report("suite", bytes, 0);
  rep["results"] = json{{"replayed", check}, {"status", found.pass ? "PASS" : "FAIL"}, {"witness", found.detail}};
  return {found.pass ? 0 : 1, rep, ""};
}

} // namespace

cli_result cli_run(const std::vector<std::string>& args) {
  try {
    if (args.empty()) fail(errc::bad_input, "usage: ordtop <classify|sets|verify|suite|zoo> [flags]");
    flag_map flags = parse_flags(args, 1);
    cli_result res;
    if (args[0] == "classify") res = cmd_classify(flags);
    else if (args[0] == "sets") res = cmd_sets(flags);
    else if (args[0] == "verify") res = cmd_verify(flags);
    else if (args[0] == "zoo") res = cmd_zoo(flags);
    else if (args[0] == "suite") res = flags.get("replay") ? cmd_suite_replay(flags) : cmd_suite(flags);
    else fail(errc::bad_input, "unknown command '" + args[0] + "'");

    if (const std::string* out = flags.get("out")) {
      std::ofstream f(*out, std::ios::binary);
      if (!f) fail(errc::bad_input, "cannot write '" + *out + "'");
      f << res.report.dump(2) << "\n";
    }
    return res;
  } catch (const error& e) {
    return {2, json{{"error", e.what()}}, e.what()};
  } catch (const json::exception& e) {
    return {2, json{{"error", e.what()}}, e.what()};
  } catch (const std::exception& e) {
    return {2, json{{"error", e.what()}}, e.what()};
  }
}

} // namespace ordtop
