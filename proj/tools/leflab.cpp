// leflab command line front end.
//
// Subcommands expose the library operations one-to-one: Hilbert functions,
// x_n-chain decompositions, stability classification, Lefschetz
// certificates, canonical constructions from Hilbert functions, strongly
// stable enumeration, graded Betti numbers, Monte-Carlo generic initial
// ideals and generic Lefschetz tests over a prime field.
//
// Output is plain text by default; --format structured emits one JSON
// record {command, inputs, result, certificates, seed} per invocation.
// Identical invocations (including seeds) produce byte-identical output.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "leflab/betti.hpp"
#include "leflab/chains.hpp"
#include "leflab/construct.hpp"
#include "leflab/gin.hpp"
#include "leflab/text.hpp"

using json = nlohmann::ordered_json;
using namespace leflab;

namespace {

struct Options {
  int vars = 0;
  std::string ideal_text;
  std::string ideal_file;
  std::string h_text;
  std::string base_ideal;
  std::string mode = "strong";
  std::string filter = "none";
  std::string format = "text";
  int cap = 0;
  int k = 0;
  int delta_order = -1;
  int check_k = 0;
  int index = 1;
  int power = 1;
  int samples = 5;
  int trials = 3;
  int max_socle = 4;
  int max_value = 16;
  bool profile = false;
  bool ends = false;
  bool fixed_last = false;
  std::uint32_t prime = default_prime;
  std::uint64_t seed = 1;
};

std::string load_input(const Options& o) {
  if (!o.ideal_file.empty()) {
    std::ifstream in(o.ideal_file);
    if (!in) throw ConfigError("cannot open input file " + o.ideal_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (o.ideal_text.empty())
    throw ConfigError("no ideal input given (use --ideal or --ideal-file)");
  return o.ideal_text;
}

void check_prime(std::uint32_t p) {
  if (p <= 2 || p > default_prime || !is_prime_u32(p))
    throw ConfigError("prime must be an odd prime at most 2147483647");
}

ParsedIdeal parse_input(const Options& o) {
  check_prime(o.prime);
  ParsedIdeal parsed = parse_ideal(load_input(o), o.vars, o.prime);
  if (o.cap > 0) {
    if (parsed.monomial) {
      parsed.monomial = artinian_cap(*parsed.monomial, o.cap);
      parsed.polynomials.clear();
      for (const auto& g : parsed.monomial->generators()) {
        Polynomial f(o.vars, o.prime);
        f.add_term(g, 1);
        parsed.polynomials.push_back(std::move(f));
      }
    } else {
      for (const auto& m : monomials_of_degree(o.vars, o.cap)) {
        Polynomial f(o.vars, o.prime);
        f.add_term(m, 1);
        parsed.polynomials.push_back(std::move(f));
      }
    }
  }
  return parsed;
}

MonomialIdeal monomial_input(const Options& o) {
  ParsedIdeal parsed = parse_input(o);
  if (!parsed.monomial)
    throw ConfigError("this command needs a monomial ideal input");
  return *parsed.monomial;
}

LefschetzMode mode_of(const Options& o) {
  if (o.mode == "strong") return LefschetzMode::strong;
  if (o.mode == "weak") return LefschetzMode::weak;
  throw ConfigError("mode must be strong or weak");
}

json hilbert_json(const OSequence& h) {
  json a = json::array();
  for (int d = 0; d < h.size(); ++d) a.push_back(h.at(d));
  return a;
}

json ideal_json(const MonomialIdeal& I) {
  json a = json::array();
  for (const auto& g : I.generators()) a.push_back(to_string(g));
  return a;
}

json betti_json(const BettiTable& t) {
  json triples = json::array();
  for (const auto& [key, v] : t.entries())
    triples.push_back(json{{"i", key.first},
                           {"j", key.second},
                           {"degree", key.first + key.second},
                           {"value", v}});
  return triples;
}

json stability_json(const StabilityReport& r) {
  return json{{"stable", r.stable},
              {"strongly_stable", r.strongly_stable},
              {"borel_fixed", r.borel_fixed},
              {"revlex", r.revlex},
              {"almost_revlex", r.almost_revlex}};
}

struct Report {
  json record;
  std::string text;
};

Report run_hilbert(const Options& o) {
  Report rep;
  rep.record["inputs"] = json::object();
  std::ostringstream text;
  OSequence h;
  if (!o.h_text.empty()) {
    h = parse_hilbert(o.h_text);
    rep.record["inputs"]["h"] = hilbert_json(h);
  } else {
    ParsedIdeal parsed = parse_input(o);
    rep.record["inputs"]["ideal"] = load_input(o);
    h = parsed.monomial ? hilbert_function(*parsed.monomial)
                        : quotient_hilbert(parsed.polynomials);
    text << "h = " << to_string(h) << '\n';
  }
  rep.record["result"]["h"] = hilbert_json(h);

  const bool o_seq = is_o_sequence(h);
  const bool unimodal = is_unimodal(h);
  const bool quasi = is_quasi_symmetric(h);
  rep.record["certificates"] = {{"o_sequence", o_seq},
                                {"unimodal", unimodal},
                                {"quasi_symmetric", quasi}};
  text << "o_sequence: " << (o_seq ? "true" : "false") << '\n'
       << "unimodal: " << (unimodal ? "true" : "false") << '\n'
       << "quasi_symmetric: " << (quasi ? "true" : "false") << '\n';
  if (unimodal) {
    auto bp = breakpoints(h);
    json u = json::array();
    std::string us;
    for (int v : bp.u) {
      u.push_back(v);
      us += (us.empty() ? "" : ",") + std::to_string(v);
    }
    rep.record["result"]["breakpoints"] = u;
    text << "breakpoints: " << us << '\n';
  }
  if (o.delta_order >= 0) {
    OSequence d = delta(h, o.delta_order);
    rep.record["result"]["delta"] = hilbert_json(d);
    text << "delta^" << o.delta_order << ": " << to_string(d) << '\n';
  }
  if (o.profile) {
    auto p = chain_profile(h);
    json intervals = json::array();
    for (auto [s, e] : p.intervals) {
      intervals.push_back(json{{"start", s}, {"end", e}});
      text << "profile: [" << s << ", " << e << "]\n";
    }
    rep.record["result"]["profile"] = intervals;
  }
  if (o.check_k > 0) {
    const bool ok = admits_k_lefschetz(h, o.vars, o.check_k);
    rep.record["result"]["admits_k_lefschetz"] = ok;
    rep.record["result"]["k"] = o.check_k;
    text << "admits_" << o.check_k << "_lefschetz: " << (ok ? "true" : "false")
         << '\n';
  }
  rep.text = text.str();
  return rep;
}

Report run_chains(const Options& o) {
  Report rep;
  MonomialIdeal I = monomial_input(o);
  rep.record["inputs"] = {{"ideal", ideal_json(I)}};
  auto dec = chain_decomposition(I);
  auto verdict = lefschetz_conditions(I);
  std::ostringstream text;
  json chains = json::array();
  for (const auto& c : dec.chains) {
    chains.push_back(json{{"base", to_string(c.base)},
                          {"start", c.start_degree},
                          {"length", c.length}});
    text << to_string(c, I.nvars()) << '\n';
  }
  rep.record["result"]["chains"] = chains;
  rep.record["certificates"] = {{"sl", verdict.sl}, {"wl", verdict.wl}};
  text << "sl: " << (verdict.sl ? "true" : "false") << '\n'
       << "wl: " << (verdict.wl ? "true" : "false") << '\n';
  if (o.ends) {
    const bool ends = chain_end_generators(I);
    rep.record["certificates"]["chain_ends_generate"] = ends;
    text << "chain_ends_generate: " << (ends ? "true" : "false") << '\n';
  }
  rep.text = text.str();
  return rep;
}

Report run_classify(const Options& o) {
  Report rep;
  MonomialIdeal I = monomial_input(o);
  rep.record["inputs"] = {{"ideal", ideal_json(I)}};
  auto r = classify_stability(I);
  const bool artinian = is_artinian(I);
  const bool mfull = is_m_full_last(I);
  rep.record["result"] = stability_json(r);
  rep.record["result"]["artinian"] = artinian;
  rep.record["result"]["m_full_last"] = mfull;
  std::ostringstream text;
  text << "stable: " << (r.stable ? "true" : "false") << '\n'
       << "strongly_stable: " << (r.strongly_stable ? "true" : "false") << '\n'
       << "borel_fixed: " << (r.borel_fixed ? "true" : "false") << '\n'
       << "revlex: " << (r.revlex ? "true" : "false") << '\n'
       << "almost_revlex: " << (r.almost_revlex ? "true" : "false") << '\n'
       << "artinian: " << (artinian ? "true" : "false") << '\n'
       << "m_full_last: " << (mfull ? "true" : "false") << '\n';
  rep.text = text.str();
  return rep;
}

Report run_check(const Options& o) {
  Report rep;
  MonomialIdeal I = monomial_input(o);
  const int k = o.k > 0 ? o.k : 1;
  rep.record["inputs"] = {{"ideal", ideal_json(I)}, {"k", k}, {"mode", o.mode}};
  const bool ok = k_lefschetz_last_vars(I, k, mode_of(o));
  rep.record["result"]["holds"] = ok;
  std::ostringstream text;
  text << k << "-" << (o.mode == "strong" ? "SLP" : "WLP")
       << " certificate (last variables): " << (ok ? "true" : "false") << '\n';
  rep.text = text.str();
  return rep;
}

json construct_certificates(const MonomialIdeal& I, int k) {
  auto r = classify_stability(I);
  json c = stability_json(r);
  c["k_slp_last_vars"] =
      k_lefschetz_last_vars(I, k, LefschetzMode::strong);
  c["k"] = k;
  return c;
}

Report run_construct(const std::string& kind, const Options& o) {
  Report rep;
  OSequence h = parse_hilbert(o.h_text);
  rep.record["inputs"] = {{"h", hilbert_json(h)}, {"vars", o.vars}};
  MonomialIdeal I(o.vars);
  int cert_k = 1;
  if (kind == "almost-revlex") {
    I = almost_revlex_from_hilbert(h, o.vars);
    cert_k = o.vars;
  } else if (kind == "lex") {
    I = lex_ideal_from_hilbert(h, o.vars);
    cert_k = 1;
  } else { // tower
    if (o.k < 1) throw ConfigError("construct tower requires --k");
    rep.record["inputs"]["k"] = o.k;
    I = borel_tower_from_hilbert(h, o.vars, o.k);
    cert_k = o.k;
  }
  rep.record["result"]["generators"] = ideal_json(I);
  rep.record["certificates"] = construct_certificates(I, cert_k);
  std::ostringstream text;
  text << "h = " << to_string(h) << '\n'
       << "ideal: " << to_string(I) << '\n';
  for (auto& [key, value] : rep.record["certificates"].items())
    text << key << ": " << value.dump() << '\n';
  rep.text = text.str();
  return rep;
}

Report run_enumerate(const std::string& kind, const Options& o) {
  Report rep;
  std::ostringstream text;
  if (kind == "nslp-hilbert") {
    rep.record["inputs"] = {{"vars", o.vars},
                            {"max_socle", o.max_socle},
                            {"max_value", o.max_value}};
    auto hs = enumerate_nslp_hilbert(o.vars, o.max_socle, o.max_value);
    json arr = json::array();
    text << "count: " << hs.size() << '\n';
    for (const auto& h : hs) {
      arr.push_back(hilbert_json(h));
      text << to_string(h) << '\n';
    }
    rep.record["result"]["hilbert_functions"] = arr;
    rep.record["result"]["count"] = hs.size();
  } else { // borel
    OSequence h = parse_hilbert(o.h_text);
    rep.record["inputs"] = {{"h", hilbert_json(h)},
                            {"vars", o.vars},
                            {"filter", o.filter}};
    BorelFilter filter;
    if (o.filter == "none") filter = BorelFilter::none;
    else if (o.filter == "wl") filter = BorelFilter::wl;
    else if (o.filter == "sl") filter = BorelFilter::sl;
    else if (o.filter == "kslp") filter = BorelFilter::k_slp;
    else throw ConfigError("filter must be none, wl, sl or kslp");
    if (filter == BorelFilter::k_slp) rep.record["inputs"]["k"] = o.k;
    auto ideals = enumerate_borel_fixed(h, o.vars, filter, o.k);
    json arr = json::array();
    text << "count: " << ideals.size() << '\n';
    for (const auto& I : ideals) {
      arr.push_back(ideal_json(I));
      text << to_string(I) << '\n';
    }
    rep.record["result"]["ideals"] = arr;
    rep.record["result"]["count"] = ideals.size();
  }
  rep.text = text.str();
  return rep;
}

Report run_betti(const std::string& kind, const Options& o) {
  Report rep;
  std::ostringstream text;
  BettiTable t(o.vars);
  if (kind == "ek" || kind == "mfull" || kind == "koszul") {
    MonomialIdeal I = monomial_input(o);
    rep.record["inputs"] = {{"ideal", ideal_json(I)}};
    t = kind == "ek" ? betti_ek(I)
                     : kind == "mfull" ? betti_mfull(I) : betti_koszul(I);
  } else if (kind == "bound" || kind == "closed-form") {
    OSequence h = parse_hilbert(o.h_text);
    if (o.k < 1) throw ConfigError("betti " + kind + " requires --k");
    rep.record["inputs"] = {{"h", hilbert_json(h)}, {"vars", o.vars}, {"k", o.k}};
    if (kind == "bound") {
      t = betti_upper_bound(h, o.vars, o.k);
    } else {
      std::optional<BettiTable> base;
      if (o.k < o.vars) {
        if (o.base_ideal.empty())
          throw ConfigError("betti closed-form with k < n requires --base-ideal "
                            "in n-k variables");
        MonomialIdeal B = parse_monomial_ideal(o.base_ideal, o.vars - o.k);
        rep.record["inputs"]["base_ideal"] = ideal_json(B);
        base = betti_ek(B);
      }
      t = betti_kwlp_closed_form(h, o.vars, o.k, base);
    }
  } else {
    throw ConfigError("betti mode must be ek, mfull, koszul, bound or closed-form");
  }
  rep.record["result"]["betti"] = betti_json(t);
  text << to_grid(t);
  rep.text = text.str();
  return rep;
}

Report run_gin(const Options& o) {
  Report rep;
  ParsedIdeal parsed = parse_input(o);
  rep.record["inputs"] = {{"ideal", load_input(o)},
                          {"samples", o.samples},
                          {"prime", o.prime}};
  rep.record["seed"] = o.seed;
  GinReport gr = random_gin(parsed.polynomials, o.samples, o.seed);
  std::ostringstream text;
  rep.record["result"]["samples"] = gr.samples;
  rep.record["result"]["agreements"] = gr.agreements;
  if (gr.candidate) {
    rep.record["result"]["candidate"] = ideal_json(*gr.candidate);
    auto r = classify_stability(*gr.candidate);
    rep.record["certificates"] = stability_json(r);
    text << "candidate: " << to_string(*gr.candidate) << '\n';
  } else {
    rep.record["result"]["candidate"] = nullptr;
    text << "candidate: none (samples disagree; retry with more samples or "
            "another prime)\n";
  }
  text << "samples: " << gr.samples << '\n'
       << "agreements: " << gr.agreements << '\n'
       << "prime: " << gr.prime << '\n'
       << "seed: " << gr.seed << '\n';
  rep.text = text.str();
  return rep;
}

Report run_generic_lefschetz(const Options& o) {
  Report rep;
  ParsedIdeal parsed = parse_input(o);
  const int k = o.k > 0 ? o.k : 1;
  rep.record["inputs"] = {{"ideal", load_input(o)},
                          {"k", k},
                          {"mode", o.mode},
                          {"trials", o.trials},
                          {"prime", o.prime},
                          {"fixed_last", o.fixed_last}};
  const bool ok = generic_lefschetz(parsed.polynomials, k, mode_of(o), o.trials,
                                    o.seed, o.fixed_last);
  rep.record["result"]["holds"] = ok;
  std::ostringstream text;
  text << k << "-" << (o.mode == "strong" ? "SLP" : "WLP") << ": "
       << (ok ? "true" : "false (Monte-Carlo: no passing draw in "
                         + std::to_string(o.trials) + " trials)")
       << '\n'
       << "prime: " << o.prime << '\n'
       << "seed: " << o.seed << '\n';
  rep.text = text.str();
  return rep;
}

Report run_fixture(const std::string& kind, const Options& o) {
  Report rep;
  check_prime(o.prime);
  const SymmetricKind sk = kind == "elementary" ? SymmetricKind::elementary
                                                : SymmetricKind::power_sum;
  rep.record["inputs"] = {{"kind", kind},
                          {"index", o.index},
                          {"power", o.power},
                          {"vars", o.vars}};
  Polynomial f = symmetric_fixture(sk, o.index, o.power, o.vars, o.prime);
  rep.record["result"]["polynomial"] = to_string(f);
  rep.text = to_string(f) + "\n";
  return rep;
}

void add_common(CLI::App* cmd, Options& o, bool needs_vars = true) {
  cmd->set_help_flag("--help", "print help"); // frees --h for Hilbert input
  if (needs_vars)
    cmd->add_option("--vars", o.vars, "ambient variable count")->required();
  cmd->add_option("--format", o.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

void add_ideal_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--ideal", o.ideal_text, "inline ideal text");
  cmd->add_option("--ideal-file", o.ideal_file, "file with ideal text");
  cmd->add_option("--artinian-cap", o.cap,
                  "add the full power (x1,...,xn)^d to the input");
}

void add_randomness(CLI::App* cmd, Options& o) {
  cmd->add_option("--prime", o.prime, "coefficient field prime")
      ->envname("LEFLAB_PRIME");
  cmd->add_option("--seed", o.seed, "random seed")->envname("LEFLAB_SEED");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"leflab: monomial ideals, Lefschetz certificates, Hilbert "
               "constructions, Betti numbers and generic initial ideals"};
  app.require_subcommand(1);
  Options o;
  std::string command, kind;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of an ideal "
                                                "or analysis of a sequence");
  add_common(hilbert, o);
  add_ideal_input(hilbert, o);
  add_randomness(hilbert, o);
  hilbert->add_option("--h", o.h_text, "sequence to analyze instead of an ideal");
  hilbert->add_option("--delta", o.delta_order, "apply the difference operator");
  hilbert->add_flag("--profile", o.profile, "print the chain profile");
  hilbert->add_option("--check-k", o.check_k,
                      "test the k-Lefschetz Hilbert characterization");
  hilbert->callback([&] { command = "hilbert"; });

  auto* chains = app.add_subcommand("chains", "x_n-chain decomposition and "
                                              "SL/WL verdicts");
  add_common(chains, o);
  add_ideal_input(chains, o);
  chains->add_flag("--ends", o.ends, "check that chain ends are generators");
  chains->callback([&] { command = "chains"; });

  auto* classify = app.add_subcommand("classify", "stability flags, Artinian "
                                                  "and m-full checks");
  add_common(classify, o);
  add_ideal_input(classify, o);
  classify->callback([&] { command = "classify"; });

  auto* check = app.add_subcommand("check", "k-SLP/k-WLP chain certificate "
                                            "with respect to the last variables");
  add_common(check, o);
  add_ideal_input(check, o);
  check->add_option("--k", o.k, "number of Lefschetz stages (default 1)");
  check->add_option("--mode", o.mode, "strong or weak")
      ->check(CLI::IsMember({"strong", "weak"}));
  check->callback([&] { command = "check"; });

  auto* construct = app.add_subcommand("construct", "canonical ideals from a "
                                                    "Hilbert function");
  add_common(construct, o);
  construct->add_option("kind", kind, "almost-revlex, lex or tower")
      ->required()
      ->check(CLI::IsMember({"almost-revlex", "lex", "tower"}));
  construct->add_option("--h", o.h_text, "target Hilbert function")->required();
  construct->add_option("--k", o.k, "tower height (construct tower)");
  construct->callback([&] { command = "construct"; });

  auto* enumerate = app.add_subcommand("enumerate", "strongly stable ideals "
                                                    "or n-SLP Hilbert functions");
  add_common(enumerate, o);
  enumerate->add_option("kind", kind, "borel or nslp-hilbert")
      ->required()
      ->check(CLI::IsMember({"borel", "nslp-hilbert"}));
  enumerate->add_option("--h", o.h_text, "Hilbert function (enumerate borel)");
  enumerate->add_option("--filter", o.filter, "none, wl, sl or kslp");
  enumerate->add_option("--k", o.k, "k for the kslp filter");
  enumerate->add_option("--max-socle", o.max_socle, "socle bound (nslp-hilbert)");
  enumerate->add_option("--max-value", o.max_value, "value bound (nslp-hilbert)");
  enumerate->callback([&] { command = "enumerate"; });

  auto* betti = app.add_subcommand("betti", "graded Betti numbers");
  add_common(betti, o);
  add_ideal_input(betti, o);
  betti->add_option("kind", kind, "ek, mfull, koszul, bound or closed-form")
      ->required()
      ->check(CLI::IsMember({"ek", "mfull", "koszul", "bound", "closed-form"}));
  betti->add_option("--h", o.h_text, "Hilbert function (bound, closed-form)");
  betti->add_option("--k", o.k, "k-WLP level (bound, closed-form)");
  betti->add_option("--base-ideal", o.base_ideal,
                    "stable base ideal in n-k variables (closed-form)");
  betti->callback([&] { command = "betti"; });

  auto* gin = app.add_subcommand("gin", "Monte-Carlo generic initial ideal");
  add_common(gin, o);
  add_ideal_input(gin, o);
  add_randomness(gin, o);
  gin->add_option("--samples", o.samples, "number of random coordinate changes");
  gin->callback([&] { command = "gin"; });

  auto* lg = app.add_subcommand("lefschetz-generic", "rank-based Lefschetz "
                                                     "test with random forms");
  add_common(lg, o);
  add_ideal_input(lg, o);
  add_randomness(lg, o);
  lg->add_option("--k", o.k, "number of stages (default 1)");
  lg->add_option("--mode", o.mode, "strong or weak")
      ->check(CLI::IsMember({"strong", "weak"}));
  lg->add_option("--trials", o.trials, "independent random draws");
  lg->add_flag("--fixed-last", o.fixed_last,
               "use the last variables instead of random forms");
  lg->callback([&] { command = "lefschetz-generic"; });

  auto* fixture = app.add_subcommand("fixture", "symmetric-function fixtures");
  add_common(fixture, o);
  add_randomness(fixture, o);
  fixture->add_option("kind", kind, "elementary or power-sum")
      ->required()
      ->check(CLI::IsMember({"elementary", "power-sum"}));
  fixture->add_option("--index", o.index, "symmetric function index")->required();
  fixture->add_option("--power", o.power, "variable power substitution");
  fixture->callback([&] { command = "fixture"; });

  CLI11_PARSE(app, argc, argv);

  try {
    Report rep;
    if (command == "hilbert") rep = run_hilbert(o);
    else if (command == "chains") rep = run_chains(o);
    else if (command == "classify") rep = run_classify(o);
    else if (command == "check") rep = run_check(o);
    else if (command == "construct") rep = run_construct(kind, o);
    else if (command == "enumerate") rep = run_enumerate(kind, o);
    else if (command == "betti") rep = run_betti(kind, o);
    else if (command == "gin") rep = run_gin(o);
    else if (command == "lefschetz-generic") rep = run_generic_lefschetz(o);
    else rep = run_fixture(kind, o);

    if (o.format == "structured") {
      json out;
      out["command"] = kind.empty() ? command : command + " " + kind;
      out["inputs"] = rep.record.value("inputs", json::object());
      out["result"] = rep.record.value("result", json::object());
      out["certificates"] = rep.record.value("certificates", json::object());
      out["seed"] = rep.record.value("seed", json(o.seed));
      std::cout << out.dump() << '\n';
    } else {
      std::cout << rep.text;
    }
    return 0;
  } catch (const Error& e) {
    if (o.format == "structured") {
      json out;
      out["command"] = kind.empty() ? command : command + " " + kind;
      out["error"] = {{"class", e.cls()}, {"message", e.what()}};
      std::cout << out.dump() << '\n';
    } else {
      std::cerr << "error[" << e.cls() << "]: " << e.what() << '\n';
    }
    return 1;
  } catch (const std::exception& e) {
    if (o.format == "structured") {
      json out;
      out["command"] = kind.empty() ? command : command + " " + kind;
      out["error"] = {{"class", "internal"}, {"message", e.what()}};
      std::cout << out.dump() << '\n';
    } else {
      std::cerr << "error[internal]: " << e.what() << '\n';
    }
    return 1;
  }
}
