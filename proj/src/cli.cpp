#include "forcinglab/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>

#include "forcinglab/corpus.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/fixtures.hpp"
#include "forcinglab/io.hpp"

namespace forcinglab {

namespace {

using io::Json;

struct Options {
  std::string poset = "tree3";
  std::string valuation;
  std::string input;
  std::string names_file;
  std::string dense_file;
  std::string formula;
  std::string formulas_file;
  std::string at;
  std::string name_id;
  std::string kind;
  std::string format = "text";
  int cap = kDefaultScanCap;
  int stages = 2;
  int size = 0;
  int count = 10;
  std::uint64_t seed = 0;
  bool seeded = false;
  bool regularize = false;
  bool greatest = false;
  bool subname = false;
};

Poset load_poset(const std::string& arg) {
  if (auto p = fixtures::poset_by_name(arg)) return *p;
  return io::poset_from_json(io::read_document(arg));
}

AtomicValuation load_valuation(const std::string& arg, RegularAlgebra algebra,
                               bool regularize) {
  if (auto v = fixtures::valuation_by_name(arg)) {
    if (!(v->poset() == algebra.poset()))
      throw InputError("valuation fixture '" + arg +
                       "' is defined over the tree3 poset");
    return *v;
  }
  auto dir = std::filesystem::path(arg).parent_path().string();
  return io::valuation_from_json(io::read_document(arg), std::move(algebra),
                                 regularize, dir);
}

EpsStructure load_eps(const std::string& arg) {
  if (auto e = fixtures::eps_by_name(arg)) return *e;
  return io::eps_from_json(io::read_document(arg));
}

bool doc_mode(const Options& o) {
  if (o.format != "text" && o.format != "doc")
    throw InputError("--format must be 'text' or 'doc'");
  return o.format == "doc";
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

Json partition_to_json(const EpsStructure& e, const Partition& p) {
  Json blocks = Json::array();
  for (int b = 0; b < block_count(p); ++b) {
    Json block = Json::array();
    for (int i = 0; i < e.size(); ++i)
      if (p[static_cast<size_t>(i)] == b) block.push_back(e.node(i));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_algebra(const Options& o, std::ostream& out) {
  auto algebra = RegularAlgebra::build(load_poset(o.poset), o.cap);
  if (doc_mode(o)) {
    Json doc;
    Json universe = Json::array();
    for (Mask m : algebra.universe())
      universe.push_back(algebra.poset().names_of(m));
    doc["universe"] = std::move(universe);
    emit(out, doc);
  } else {
    for (Mask m : algebra.universe()) out << algebra.poset().format(m) << "\n";
  }
  return 0;
}

int cmd_check_byrne(const Options& o, std::ostream& out, std::ostream& err) {
  auto algebra = RegularAlgebra::build(load_poset(o.poset), o.cap);
  auto report = algebra.byrne_check();
  if (doc_mode(o)) {
    Json doc;
    doc["pass"] = report.pass;
    if (!report.pass) {
      doc["law"] = report.law;
      Json witness = Json::array();
      for (Mask m : report.witness) witness.push_back(algebra.poset().names_of(m));
      doc["witness"] = std::move(witness);
    }
    emit(out, doc);
  } else {
    out << (report.pass ? "pass" : "fail") << "\n";
  }
  if (!report.pass) err << report.describe(algebra.poset()) << "\n";
  return report.pass ? 0 : 1;
}

int cmd_separative(const Options& o, std::ostream& out) {
  Poset poset = load_poset(o.poset);
  auto witness = poset.separativity_witness();
  if (doc_mode(o)) {
    Json doc;
    doc["separative"] = !witness.has_value();
    if (witness) doc["witness"] = poset.element(*witness);
    emit(out, doc);
  } else if (witness) {
    out << "not separative: witness '" << poset.element(*witness) << "'\n";
  } else {
    out << "separative\n";
  }
  return witness ? 1 : 0;
}

int cmd_generic(const Options& o, std::ostream& out) {
  Poset poset = load_poset(o.poset);
  DenseFamily family = o.dense_file.empty()
                           ? DenseFamily::empty(poset)
                           : io::dense_family_from_json(
                                 io::read_document(o.dense_file), poset);
  Mask g = rasiowa_sikorski(poset, poset.index_of(o.at), family);
  if (doc_mode(o)) {
    Json doc;
    doc["filter"] = poset.names_of(g);
    emit(out, doc);
  } else {
    out << poset.format(g) << "\n";
  }
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  auto algebra = RegularAlgebra::build(load_poset(o.poset), o.cap);
  auto v = load_valuation(o.valuation, std::move(algebra), o.regularize);
  Formula f = parse_formula(o.formula, v.signature());
  Mask value = evaluate(v, f);
  if (doc_mode(o)) {
    Json doc;
    doc["value"] = v.poset().names_of(value);
    emit(out, doc);
  } else {
    out << v.poset().format(value) << "\n";
  }
  return 0;
}

int cmd_forces(const Options& o, std::ostream& out) {
  auto algebra = RegularAlgebra::build(load_poset(o.poset), o.cap);
  auto v = load_valuation(o.valuation, std::move(algebra), o.regularize);
  Formula f = parse_formula(o.formula, v.signature());
  bool result = forces(v, v.poset().index_of(o.at), f);
  if (doc_mode(o)) {
    Json doc;
    doc["forces"] = result;
    emit(out, doc);
  } else {
    out << (result ? "true" : "false") << "\n";
  }
  return result ? 0 : 1;
}

int cmd_verify_lemmas(const Options& o, std::ostream& out) {
  auto algebra = RegularAlgebra::build(load_poset(o.poset), o.cap);
  auto v = load_valuation(o.valuation, std::move(algebra), o.regularize);
  std::vector<Formula> formulas =
      io::formulas_from_json(io::read_document(o.formulas_file), v.signature());

  auto forcing = verify_forcing_lemma(v, formulas, o.cap);
  auto truth = verify_truth_lemma(v, formulas, o.cap);
  auto quantifier = verify_quantifier_lemma(v, formulas, o.cap);
  auto family = required_dense_family(v, formulas);

  bool pass = forcing.pass && truth.pass && quantifier.pass;
  if (doc_mode(o)) {
    Json doc;
    auto lemma = [&](const LemmaReport& r) {
      Json j;
      j["pass"] = r.pass;
      if (!r.pass) j["counterexample"] = r.counterexample;
      return j;
    };
    doc["forcing"] = lemma(forcing);
    doc["truth"] = lemma(truth);
    doc["quantifier"] = lemma(quantifier);
    Json sets = Json::array();
    for (Mask m : family.sets()) sets.push_back(v.poset().names_of(m));
    doc["dense_family"] = std::move(sets);
    emit(out, doc);
  } else {
    auto line = [&](const char* label, const LemmaReport& r) {
      out << label << ": " << (r.pass ? "pass" : "fail") << "\n";
      if (!r.pass) out << "  counterexample: " << r.counterexample << "\n";
    };
    line("forcing lemma", forcing);
    line("truth lemma", truth);
    line("quantifier lemma", quantifier);
    out << "dense family used:";
    for (Mask m : family.sets()) out << " " << v.poset().format(m);
    out << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_collapse(const Options& o, std::ostream& out) {
  EpsStructure e = load_eps(o.input);
  auto staged = sim_stages(e);
  EpsStructure in = membership_from(e);
  Partition used = o.greatest ? greatest_bisimulation(e) : staged.limit();
  EpsStructure q = quotient(e, used);

  if (doc_mode(o)) {
    Json doc;
    Json stages = Json::array();
    for (const auto& p : staged.stages) stages.push_back(partition_to_json(e, p));
    doc["stages"] = std::move(stages);
    doc["limit"] = partition_to_json(e, staged.limit());
    if (o.greatest) doc["greatest"] = partition_to_json(e, used);
    Json membership = Json::array();
    for (auto [x, y] : in.pairs()) membership.push_back({in.node(x), in.node(y)});
    doc["membership"] = std::move(membership);
    doc["quotient"] = io::eps_to_json(q);
    emit(out, doc);
  } else {
    for (size_t k = 0; k < staged.stages.size(); ++k)
      out << "stage " << k << ": " << format_partition(e, staged.stages[k]) << "\n";
    out << "limit: " << format_partition(e, staged.limit()) << "\n";
    if (o.greatest)
      out << "greatest bisimulation: " << format_partition(e, used) << "\n";
    out << "membership:";
    for (auto [x, y] : in.pairs()) out << " (" << in.node(x) << ", " << in.node(y) << ")";
    out << "\n";
    out << "quotient nodes:";
    for (const auto& n : q.nodes()) out << " " << n;
    out << "\n";
    out << "quotient eps:";
    for (auto [x, y] : q.pairs()) out << " (" << q.node(x) << ", " << q.node(y) << ")";
    out << "\n";
  }
  return 0;
}

int cmd_hierarchy(const Options& o, std::ostream& out) {
  auto algebra = RegularAlgebra::build(load_poset(o.poset), o.cap);
  auto system = NameSystem::hierarchy(std::move(algebra), o.stages, o.cap);
  if (doc_mode(o)) {
    emit(out, io::name_system_to_json(system));
  } else {
    for (const auto& b : system.names()) {
      out << b.id << "  stage " << b.stage << "  {";
      bool first = true;
      for (const auto& [key, value] : b.table) {
        if (!first) out << ", ";
        first = false;
        out << system.name(key).id << ": " << system.algebra().poset().format(value);
      }
      out << "}\n";
    }
  }
  return 0;
}

int cmd_power_check(const Options& o, std::ostream& out) {
  auto algebra = RegularAlgebra::build(load_poset(o.poset), o.cap);
  NameSystem system =
      o.names_file.empty()
          ? NameSystem::hierarchy(std::move(algebra), 2, o.cap)
          : io::name_system_from_json(io::read_document(o.names_file),
                                      std::move(algebra), o.regularize);
  auto report = verify_power_axiom(
      system, system.index_of(o.name_id),
      o.subname ? SubsetReading::subname : SubsetReading::membership);
  const Poset& poset = system.algebra().poset();
  if (doc_mode(o)) {
    Json doc;
    doc["tau"] = report.tau_id;
    doc["scope"] = report.scope;
    doc["reading"] =
        report.reading == SubsetReading::subname ? "subname" : "membership";
    doc["value"] = poset.names_of(report.value);
    doc["pass"] = report.pass;
    emit(out, doc);
  } else {
    out << "tau: " << report.tau_id << "\n";
    out << "value (" << report.scope << "): " << poset.format(report.value) << "\n";
    out << (report.pass ? "pass" : "fail") << "\n";
  }
  return report.pass ? 0 : 1;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  if (o.kind != "posets" && o.kind != "eps")
    throw InputError("--kind must be 'posets' or 'eps'");
  if (o.size < 1) throw InputError("--size must be at least 1");
  if (o.size > o.cap)
    throw ResourceError("corpus: size " + std::to_string(o.size) +
                        " exceeds the cap of " + std::to_string(o.cap));

  std::vector<Json> docs;
  if (!o.seeded) {
    if (o.size > 4)
      throw InputError(
          "corpus: exhaustive enumeration is capped at size 4; pass --seed to sample");
    if (o.kind == "posets")
      for (const auto& p : corpus::enumerate_posets(o.size))
        docs.push_back(io::poset_to_json(p));
    else
      for (const auto& e : corpus::enumerate_eps(o.size))
        docs.push_back(io::eps_to_json(e));
  } else {
    corpus::Rng rng(o.seed);
    for (int i = 0; i < o.count; ++i) {
      if (o.kind == "posets")
        docs.push_back(io::poset_to_json(corpus::random_poset(rng, o.size)));
      else
        docs.push_back(io::eps_to_json(corpus::random_eps(rng, o.size)));
    }
  }

  if (doc_mode(o)) {
    Json all = Json::array();
    for (auto& d : docs) all.push_back(std::move(d));
    emit(out, all);
  } else {
    for (const auto& d : docs) out << d.dump() << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"finite-scale laboratory for abstract forcing"};
  app.name("forcinglab");
  app.require_subcommand(1);

  std::vector<CLI::Option*> seed_options;
  auto add_shared = [&](CLI::App* cmd, bool with_poset) {
    if (with_poset)
      cmd->add_option("--poset", o.poset,
                      "poset file or fixture (tree3, chain2, anti2, tree7, point)");
    cmd->add_option("--cap", o.cap, "exhaustion cap");
    cmd->add_option("--format", o.format, "output format: text or doc");
    cmd->add_flag("--regularize", o.regularize,
                  "apply X -> X'' to ingested sets that are not regular");
    seed_options.push_back(
        cmd->add_option("--seed", o.seed, "seed for pseudo-random sampling"));
  };

  auto* algebra = app.add_subcommand("algebra", "print the regular algebra");
  add_shared(algebra, true);

  auto* byrne = app.add_subcommand("check-byrne", "verify Byrne's axioms");
  add_shared(byrne, true);

  auto* separative = app.add_subcommand("separative", "test separativity");
  add_shared(separative, true);

  auto* generic = app.add_subcommand("generic", "construct a generic filter");
  add_shared(generic, true);
  generic->add_option("--at", o.at, "point the filter must contain")->required();
  generic->add_option("--dense-file", o.dense_file, "dense family document");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a sentence");
  add_shared(eval_cmd, true);
  eval_cmd->add_option("--valuation", o.valuation, "valuation file or 'vt'")
      ->required();
  eval_cmd->add_option("--formula", o.formula, "sentence to evaluate")->required();

  auto* forces_cmd = app.add_subcommand("forces", "test the forcing relation");
  add_shared(forces_cmd, true);
  forces_cmd->add_option("--valuation", o.valuation, "valuation file or 'vt'")
      ->required();
  forces_cmd->add_option("--at", o.at, "forcing point")->required();
  forces_cmd->add_option("--formula", o.formula, "sentence")->required();

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* lemmas = verify->add_subcommand("lemmas", "forcing, truth and quantifier lemmas");
  add_shared(lemmas, true);
  lemmas->add_option("--valuation", o.valuation, "valuation file or 'vt'")
      ->required();
  lemmas->add_option("--formulas", o.formulas_file, "formula list document")
      ->required();

  auto* collapse = app.add_subcommand("collapse", "least quasi-extensional collapse");
  add_shared(collapse, false);
  collapse->add_option("--input", o.input, "eps-structure file or fixture (ea, eb, eq)")
      ->required();
  collapse->add_flag("--greatest", o.greatest,
                     "quotient by the greatest bisimulation instead");

  auto* hierarchy = app.add_subcommand("hierarchy", "build the name hierarchy");
  add_shared(hierarchy, true);
  hierarchy->add_option("--stages", o.stages, "number of stages")->required();

  auto* power = app.add_subcommand("power-check", "verify the power-set name");
  add_shared(power, true);
  power->add_option("--name", o.name_id, "name whose power name is built")
      ->required();
  power->add_option("--names", o.names_file, "name-system document");
  power->add_flag("--subname", o.subname,
                  "read subset as the eps-level subname order");

  auto* corpus_cmd = app.add_subcommand("corpus", "generate structure corpora");
  add_shared(corpus_cmd, false);
  corpus_cmd->add_option("--kind", o.kind, "posets or eps")->required();
  corpus_cmd->add_option("--size", o.size, "element/node count bound")->required();
  corpus_cmd->add_option("--count", o.count, "sample count for seeded mode");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string program = "forcinglab";
  argv.push_back(program.data());
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto* opt : seed_options)
    if (opt->count() > 0) o.seeded = true;

  try {
    if (algebra->parsed()) return cmd_algebra(o, out);
    if (byrne->parsed()) return cmd_check_byrne(o, out, err);
    if (separative->parsed()) return cmd_separative(o, out);
    if (generic->parsed()) return cmd_generic(o, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (forces_cmd->parsed()) return cmd_forces(o, out);
    if (verify->parsed() && lemmas->parsed()) return cmd_verify_lemmas(o, out);
    if (collapse->parsed()) return cmd_collapse(o, out);
    if (hierarchy->parsed()) return cmd_hierarchy(o, out);
    if (power->parsed()) return cmd_power_check(o, out);
    if (corpus_cmd->parsed()) return cmd_corpus(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace forcinglab
