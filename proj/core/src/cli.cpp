#include "finring/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "finring/axioms.hpp"
#include "finring/classify.hpp"
#include "finring/construct.hpp"
#include "finring/decide.hpp"
#include "finring/expr.hpp"
#include "finring/harness.hpp"

namespace finring::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::string method = "fast";
  std::size_t max_size = 256;
  std::size_t depth = 2;
  std::uint64_t seed = 0;
  bool text = false;
  bool list_corpus = false;
  std::string file;
};

Method method_of(const Flags& f) {
  return f.method == "oracle" ? Method::oracle : Method::fast;
}

CorpusSpec corpus_of(const Flags& f) {
  CorpusSpec spec;
  spec.max_size = f.max_size;
  spec.depth = f.depth;
  spec.seed = f.seed;
  return spec;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

json caps_json(const Caps& caps) {
  json o;
  o["table_memo_max"] = caps.table_memo_max;
  o["axiom_full_max"] = caps.axiom_full_max;
  o["lattice_max"] = caps.lattice_max;
  o["iso_max"] = caps.iso_max;
  o["universe_max"] = caps.universe_max;
  return o;
}

json witness_json(const PropertyReport& rep) {
  json w = json::object();
  if (rep.verdict) {
    json arr = json::array();
    for (const auto& aw : rep.witnesses) {
      json o;
      o["ideal_size"] = aw.ideal_size;
      o["generators"] = aw.generator_displays;
      o["generators_are_preview"] = aw.generators_are_preview;
      o["annihilating_element"] = aw.annihilating_display;
      arr.push_back(std::move(o));
    }
    w["annihilated_ideals"] = std::move(arr);
  } else if (rep.failure.has_value()) {
    w["failure_generators"] = rep.failure->generator_displays;
    w["ideal_size"] = rep.failure->ideal_size;
  }
  return w;
}

json property_json(const PropertyReport& rep) {
  json o;
  o["verdict"] = rep.verdict;
  o["method"] = method_name(rep.method);
  o["ideals_examined"] = rep.ideals_examined;
  o["witness"] = witness_json(rep);
  return o;
}

json analyze_ring(const std::string& text, const Flags& flags, const Caps& caps) {
  const auto start = std::chrono::steady_clock::now();
  const RingExprPtr expr = parse_ring_expr(text);
  const Ring r = build_ring(*expr, caps);
  if (r.is_zero_ring())
    throw DegenerateRingError("the zero ring has no unit/zero-divisor dichotomy to report");

  json o;
  o["ring"] = r.descriptor();
  o["size"] = r.size();
  o["units_count"] = units_count(r);

  const auto& zd = r.zero_divisor_mask();
  std::vector<std::string> zd_displays;
  std::size_t zd_count = 0;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (zd[x]) {
      ++zd_count;
      if (zd_count <= 64) zd_displays.push_back(r.display_ix(x));
    }
  json zdo;
  zdo["count"] = zd_count;
  if (zd_count <= 64) zdo["list"] = zd_displays;
  o["zero_divisors"] = std::move(zdo);

  o["ideals_count"] =
      r.size() <= caps.lattice_max ? json(all_ideals(r, caps).size()) : json(nullptr);
  o["is_local"] = is_local(r);
  o["is_reduced"] = is_reduced(r);

  const Method m = method_of(flags);
  const PropertyReport rep_a = is_A_ring(r, m, caps);
  const PropertyReport rep_s = is_strong_A_ring(r, m, caps);
  o["is_A"] = property_json(rep_a);
  o["is_strong_A"] = property_json(rep_s);
  o["convention_note"] = rep_a.convention_note;
  o["caps"] = caps_json(caps);
  o["timing"] = json{{"total_ms", ms_since(start)}};
  return o;
}

void render_property_text(std::ostream& out, const char* label, const json& p) {
  out << label << ": " << (p["verdict"].get<bool>() ? "yes" : "no") << " (method "
      << p["method"].get<std::string>() << ", ideals examined " << p["ideals_examined"]
      << ")\n";
  const json& w = p["witness"];
  if (w.contains("annihilated_ideals")) {
    for (const auto& aw : w["annihilated_ideals"]) {
      out << "  ideal of size " << aw["ideal_size"] << ", generators"
          << (aw["generators_are_preview"].get<bool>() ? " (preview)" : "") << " {";
      bool first = true;
      for (const auto& g : aw["generators"]) {
        if (!first) out << ", ";
        out << g.get<std::string>();
        first = false;
      }
      out << "}, annihilated by " << aw["annihilating_element"].get<std::string>() << "\n";
    }
  }
  if (w.contains("failure_generators")) {
    out << "  zero-annihilator ideal of size " << w["ideal_size"] << " generated by {";
    bool first = true;
    for (const auto& g : w["failure_generators"]) {
      if (!first) out << ", ";
      out << g.get<std::string>();
      first = false;
    }
    out << "}\n";
  }
}

void render_analyze_text(std::ostream& out, const json& o) {
  out << "ring: " << o["ring"].get<std::string>() << "\n";
  out << "size: " << o["size"] << "\n";
  out << "units: " << o["units_count"] << "\n";
  out << "zero divisors: " << o["zero_divisors"]["count"];
  if (o["zero_divisors"].contains("list")) {
    out << " {";
    bool first = true;
    for (const auto& d : o["zero_divisors"]["list"]) {
      if (!first) out << ", ";
      out << d.get<std::string>();
      first = false;
    }
    out << "}";
  }
  out << "\n";
  out << "ideals: ";
  if (o["ideals_count"].is_null())
    out << "not computed (over lattice cap)";
  else
    out << o["ideals_count"];
  out << "\n";
  out << "local: " << (o["is_local"].get<bool>() ? "yes" : "no") << "\n";
  out << "reduced: " << (o["is_reduced"].get<bool>() ? "yes" : "no") << "\n";
  render_property_text(out, "annihilator condition", o["is_A"]);
  render_property_text(out, "strong annihilator condition", o["is_strong_A"]);
  out << "note: " << o["convention_note"].get<std::string>() << "\n";
}

int cmd_analyze(const std::string& expr_text, const Flags& flags, std::ostream& out,
                const Caps& caps) {
  std::vector<std::string> inputs;
  if (!flags.file.empty()) {
    std::ifstream in(flags.file);
    if (!in) throw PreconditionError("cannot open expression file " + flags.file);
    std::string line;
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      inputs.push_back(line);
    }
  } else {
    inputs.push_back(expr_text);
  }

  json payload;
  if (inputs.size() == 1 && flags.file.empty()) {
    payload = analyze_ring(inputs.front(), flags, caps);
    if (flags.text)
      render_analyze_text(out, payload);
    else
      out << payload.dump(2) << "\n";
    return exit_ok;
  }
  payload = json::array();
  for (const auto& text : inputs) payload.push_back(analyze_ring(text, flags, caps));
  if (flags.text) {
    for (const auto& o : payload) {
      render_analyze_text(out, o);
      out << "\n";
    }
  } else {
    out << payload.dump(2) << "\n";
  }
  return exit_ok;
}

int cmd_check(const std::string& expr_text, const Flags& flags, std::ostream& out,
              const Caps& caps) {
  const auto start = std::chrono::steady_clock::now();
  const RingExprPtr expr = parse_ring_expr(expr_text);
  const Ring r = build_ring(*expr, caps);
  const AxiomReport rep = check_ring_axioms(r, AxiomMode::Full(), flags.seed, caps);

  json o;
  o["ring"] = rep.ring;
  o["size"] = rep.size;
  o["mode"] = rep.mode == AxiomMode::Kind::full ? "full" : "sampled";
  o["downgraded"] = rep.downgraded;
  o["samples"] = rep.samples;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json co;
    co["axiom"] = c.axiom;
    co["pass"] = c.pass;
    if (c.witness.has_value()) co["witness"] = c.witness->rendered;
    checks.push_back(std::move(co));
  }
  o["axioms"] = std::move(checks);
  o["all_pass"] = rep.all_pass;
  o["timing"] = json{{"total_ms", ms_since(start)}};

  if (flags.text) {
    out << "ring: " << rep.ring << "\n";
    out << "mode: " << o["mode"].get<std::string>()
        << (rep.downgraded ? " (downgraded from full)" : "") << "\n";
    for (const auto& c : rep.checks) {
      out << (c.pass ? "  pass  " : "  FAIL  ") << c.axiom;
      if (c.witness.has_value()) out << "  [" << c.witness->rendered << "]";
      out << "\n";
    }
    out << (rep.all_pass ? "all axioms hold\n" : "axiom failure\n");
  } else {
    out << o.dump(2) << "\n";
  }
  return rep.all_pass ? exit_ok : exit_failure;
}

json corpus_json(const CorpusSpec& spec, const std::vector<Ring>& corpus) {
  json o;
  o["max_size"] = spec.max_size;
  o["depth"] = spec.depth;
  o["moduli"] = spec.effective_moduli();
  o["seed"] = spec.seed;
  o["rings"] = corpus.size();
  return o;
}

int list_corpus(const CorpusSpec& spec, const std::vector<Ring>& corpus, const Flags& flags,
                std::ostream& out) {
  if (flags.text) {
    for (const auto& r : corpus) out << r.size() << "\t" << r.descriptor() << "\n";
    out << corpus.size() << " rings\n";
    return exit_ok;
  }
  json o;
  o["corpus"] = corpus_json(spec, corpus);
  json rings = json::array();
  for (const auto& r : corpus)
    rings.push_back(json{{"ring", r.descriptor()}, {"size", r.size()}});
  o["rings"] = std::move(rings);
  out << o.dump(2) << "\n";
  return exit_ok;
}

json check_result_json(const CheckResult& c) {
  json o;
  o["check_id"] = c.check_id;
  o["instance"] = c.instance;
  o["holds"] = c.holds;
  json d = json::object();
  for (const auto& [k, v] : c.details) d[k] = v;
  o["details"] = std::move(d);
  if (!c.counterexample.empty()) o["counterexample"] = c.counterexample;
  o["note"] = c.note;
  return o;
}

const std::vector<std::string>& known_check_ids() {
  static const std::vector<std::string> ids = {"thm2.2",      "lem2.6",  "thm3.1",
                                               "ex2.1",       "coincidence", "reduced"};
  return ids;
}

int cmd_verify(const std::string& id, const Flags& flags, std::ostream& out, std::ostream& err,
               const Caps& caps) {
  const auto& ids = known_check_ids();
  if (id != "all" && std::find(ids.begin(), ids.end(), id) == ids.end()) {
    err << "unknown check id '" << id << "'; known ids: thm2.2, lem2.6, thm3.1, ex2.1, "
           "coincidence, reduced, all\n";
    return exit_usage;
  }

  const auto start = std::chrono::steady_clock::now();
  const CorpusSpec spec = corpus_of(flags);
  const std::vector<Ring> corpus = generate_corpus(spec, caps);
  if (flags.list_corpus) return list_corpus(spec, corpus, flags, out);

  const std::vector<std::string> families =
      id == "all" ? ids : std::vector<std::string>{id};

  bool all_hold = true;
  json fam_arr = json::array();
  for (const auto& fam : families) {
    const std::vector<CheckResult> results =
        run_check_family(fam, corpus, method_of(flags), caps);
    std::size_t failures = 0;
    json res_arr = json::array();
    for (const auto& c : results) {
      if (!c.holds) ++failures;
      res_arr.push_back(check_result_json(c));
    }
    all_hold = all_hold && failures == 0;
    json fo;
    fo["check_id"] = fam;
    fo["instances"] = results.size();
    fo["failures"] = failures;
    fo["results"] = std::move(res_arr);
    fam_arr.push_back(std::move(fo));
  }

  json o;
  o["check"] = id;
  o["corpus"] = corpus_json(spec, corpus);
  o["families"] = std::move(fam_arr);
  o["notes"] = finite_analog_notes();
  o["all_hold"] = all_hold;
  o["timing"] = json{{"total_ms", ms_since(start)}};

  if (flags.text) {
    for (const auto& fo : o["families"]) {
      out << fo["check_id"].get<std::string>() << ": " << fo["instances"] << " instances, "
          << fo["failures"] << " failures\n";
      for (const auto& c : fo["results"])
        if (!c["holds"].get<bool>())
          out << "  FAIL " << c["instance"].get<std::string>() << ": "
              << c["counterexample"].get<std::string>() << "\n";
    }
    out << (all_hold ? "all checks hold\n" : "check failures present\n");
  } else {
    out << o.dump(2) << "\n";
  }
  return all_hold ? exit_ok : exit_failure;
}

int cmd_search(const std::string& target, const Flags& flags, std::ostream& out,
               std::ostream& err, const Caps& caps) {
  if (target != "converse-3.1") {
    err << "unknown search target '" << target << "'; known: converse-3.1\n";
    return exit_usage;
  }
  const auto start = std::chrono::steady_clock::now();
  const CorpusSpec spec = corpus_of(flags);
  if (flags.list_corpus)
    return list_corpus(spec, generate_corpus(spec, caps), flags, out);

  const SearchReport rep =
      search_duplication_strong_converse(spec, method_of(flags), flags.max_size, caps);

  json o;
  o["search"] = "converse-3.1";
  json co = corpus_json(spec, {});
  co["rings"] = rep.corpus_rings;
  o["corpus"] = std::move(co);
  o["dup_size_cap"] = rep.dup_size_cap;
  o["instances_examined"] = rep.instances_examined;
  json hits = json::array();
  for (const auto& h : rep.hits) hits.push_back(json{{"ring", h.ring}, {"ideal", h.ideal}});
  o["hits"] = std::move(hits);
  o["outcome"] = rep.hits.empty() ? "none found" : "hit";
  o["timing"] = json{{"total_ms", ms_since(start)}};

  if (flags.text) {
    out << "searched " << rep.instances_examined << " (ring, ideal) pairs over "
        << rep.corpus_rings << " corpus rings\n";
    for (const auto& h : rep.hits)
      out << "  hit: " << h.ring << " along " << h.ideal << "\n";
    out << o["outcome"].get<std::string>() << "\n";
  } else {
    out << o.dump(2) << "\n";
  }
  return rep.hits.empty() ? exit_ok : exit_search_hit;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  std::ostringstream out, err;

  CLI::App app{"finite commutative ring analyzer"};
  app.require_subcommand(1);
  Flags flags;

  std::string expr_text, verify_id, search_target;

  auto add_output_flags = [&](CLI::App* cmd) {
    auto* jf = cmd->add_flag("--json", "emit JSON (default)");
    auto* tf = cmd->add_flag("--text", flags.text, "emit a human-readable report");
    jf->excludes(tf);
  };
  auto add_corpus_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-size", flags.max_size, "largest ring size in the corpus");
    cmd->add_option("--depth", flags.depth, "construction nesting depth");
    cmd->add_option("--seed", flags.seed, "seed for sampled checks");
    cmd->add_flag("--list-corpus", flags.list_corpus, "list the corpus and exit");
  };
  auto add_method_flag = [&](CLI::App* cmd) {
    cmd->add_option("--method", flags.method, "decision procedure")
        ->check(CLI::IsMember({"fast", "oracle"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "report the structure of one ring");
  analyze->add_option("expr", expr_text, "ring construction expression");
  analyze->add_option("--file", flags.file, "file with one expression per line");
  add_method_flag(analyze);
  add_output_flags(analyze);

  CLI::App* check = app.add_subcommand("check", "run the ring axioms on one ring");
  check->add_option("expr", expr_text, "ring construction expression")->required();
  check->add_option("--seed", flags.seed, "seed for sampled checks");
  add_output_flags(check);

  CLI::App* verify = app.add_subcommand("verify", "replay a check family over the corpus");
  verify->add_option("id", verify_id, "check id or 'all'")->required();
  add_method_flag(verify);
  add_corpus_flags(verify);
  add_output_flags(verify);

  CLI::App* search = app.add_subcommand("search", "scan the corpus for a counterexample");
  search->add_option("target", search_target, "search target")->required();
  add_method_flag(search);
  add_corpus_flags(search);
  add_output_flags(search);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    const Caps& caps = default_caps();
    if (analyze->parsed()) {
      if (expr_text.empty() && flags.file.empty())
        throw PreconditionError("analyze needs an expression or --file");
      result.exit_code = cmd_analyze(expr_text, flags, out, caps);
    } else if (check->parsed()) {
      result.exit_code = cmd_check(expr_text, flags, out, caps);
    } else if (verify->parsed()) {
      result.exit_code = cmd_verify(verify_id, flags, out, err, caps);
    } else if (search->parsed()) {
      result.exit_code = cmd_search(search_target, flags, out, err, caps);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    result.exit_code = exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    result.exit_code = exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    result.exit_code = exit_usage;
  } catch (const CapExceededError& e) {
    err << e.what() << "\n";
    result.exit_code = exit_cap;
  } catch (const DegenerateRingError& e) {
    err << e.what() << "\n";
    result.exit_code = exit_degenerate;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    result.exit_code = exit_usage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    result.exit_code = exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    result.exit_code = exit_failure;
  }

  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace finring::cli
