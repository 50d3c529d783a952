// Command-line front end: artin <command> [FILE] [options].

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "artin/explorer.hpp"
#include "artin/homology.hpp"
#include "artin/theorems.hpp"

namespace {

using namespace artin;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string command;
  std::string file;
  std::string example;
  std::optional<std::size_t> to;
  std::string module = "M";
  std::string left = "M";
  std::string right = "N";
  std::string statement;
  std::uint64_t seed = 0;
  std::size_t budget = 100;
  bool machine = false;
  std::string field;
  std::string pq;
};

class Output {
 public:
  explicit Output(bool machine) : machine_(machine) {}
  void record(const std::string& key, const std::string& value) { records_.emplace_back(key, value); }
  void text(const std::string& line) { text_ << line << "\n"; }
  void flush() const {
    if (machine_)
      for (const auto& [k, v] : records_) std::cout << k << "=" << v << "\n";
    else
      std::cout << text_.str();
  }

 private:
  bool machine_;
  std::vector<std::pair<std::string, std::string>> records_;
  std::ostringstream text_;
};

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UndefinedInputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

std::size_t cutoff_of(const Options& o, const InstanceText* t) {
  if (o.to) return *o.to;
  if (t && t->params.contains("n")) return static_cast<std::size_t>(t->params.at("n"));
  if (auto e = env("ARTIN_CUTOFF")) {
    long v = 0;
    try {
      v = std::stol(*e);
    } catch (const std::exception&) {
      throw PreconditionError("ARTIN_CUTOFF is not an integer");
    }
    if (v < 1) throw PreconditionError("ARTIN_CUTOFF must be at least 1");
    return static_cast<std::size_t>(v);
  }
  return kDefaultCutoff;
}

template <Field F>
FiniteModule<F> named_module(const Instance<F>& inst, const std::string& name) {
  if (const auto* m = inst.find(name)) return *m;
  if (name == "k") return residue_field(inst.ring);
  if (name == "R") return regular_module(inst.ring);
  if (name == "omega") return canonical_module(inst.ring);
  return inst.module(name);  // throws
}

template <Field F>
int cmd_invariants(const Instance<F>& inst, Output& out) {
  const auto iv = ring_invariants(*inst.ring);
  const auto h = hilbert(*inst.ring);
  out.record("ring.field", inst.ring->field().name());
  out.record("ring.hilbert", join(h));
  out.record("ring.length", std::to_string(iv.length));
  out.record("ring.e", std::to_string(iv.e));
  out.record("ring.loewy", std::to_string(iv.loewy));
  out.record("ring.type", std::to_string(iv.type));
  out.record("ring.gorenstein", iv.gorenstein ? "1" : "0");
  out.text("field " + inst.ring->field().name() + ", Hilbert series " + join(h, " ") + ", λ(R) = " +
           std::to_string(iv.length) + ", e = " + std::to_string(iv.e) + ", ℓℓ(R) = " + std::to_string(iv.loewy) +
           ", type a = " + std::to_string(iv.type) + (iv.gorenstein ? ", Gorenstein" : ", not Gorenstein"));
  for (const auto& [name, m] : inst.modules) {
    const std::string k = "module." + name + ".";
    const bool free = resolve(m, 1)->betti(1) == 0;
    out.record(k + "length", std::to_string(m.dim()));
    out.record(k + "nu", std::to_string(min_gens(m)));
    out.record(k + "gamma", gamma(m).get_str());
    out.record(k + "free", free ? "1" : "0");
    out.text("module " + name + ": λ = " + std::to_string(m.dim()) + ", ν = " + std::to_string(min_gens(m)) +
             ", γ = " + gamma(m).get_str() + (free ? ", free" : ""));
  }
  return kOk;
}

template <Field F>
int cmd_betti(const Instance<F>& inst, const Options& o, std::size_t n, Output& out) {
  auto m = named_module(inst, o.module);
  auto b = resolve(m, n)->betti_list(n);
  for (std::size_t i = 0; i <= n; ++i) out.record("betti." + o.module + "." + std::to_string(i), std::to_string(b[i]));
  out.text("b_i(" + o.module + "), i = 0.." + std::to_string(n) + ": " + join(b, " "));
  return kOk;
}

template <Field F>
int cmd_homology(const Instance<F>& inst, const Options& o, std::size_t n, bool ext, Output& out) {
  auto a = named_module(inst, o.left);
  auto b = named_module(inst, o.right);
  auto dims = ext ? ext_profile(a, b, n) : tor_profile(a, b, n).dims;
  const std::string tag = ext ? "ext" : "tor";
  for (std::size_t i = 1; i <= n; ++i)
    out.record(tag + "." + o.left + "." + o.right + "." + std::to_string(i), std::to_string(dims[i - 1]));
  out.text(std::string(ext ? "dim Ext^i(" : "dim Tor_i(") + o.left + ", " + o.right + "), i = 1.." + std::to_string(n) +
           ": " + join(dims, " "));
  return kOk;
}

void emit_verdict(const Verdict& v, Output& out, bool with_instance) {
  const std::string k = with_instance ? v.instance + "." + v.id : v.id;
  out.record("verdict." + k, std::string(status_name(v.status)));
  out.record("cutoff." + k, std::to_string(v.cutoff));
  for (const auto& [fk, fv] : v.facts) out.record("fact." + k + "." + fk, fv);
  std::string line = v.id + " [" + v.instance + "] " + std::string(status_name(v.status)) + " (through " +
                     std::to_string(v.cutoff) + ")";
  out.text(line);
  out.text("  hypotheses: " + v.hypothesis);
  if (!v.conclusion.empty()) out.text("  conclusions: " + v.conclusion);
  if (!v.counterexample.empty()) out.text(v.counterexample);
}

template <Field F>
int cmd_check(Instance<F> inst, const Options& o, std::size_t n, Output& out) {
  if (o.statement.empty()) throw PreconditionError("check needs --statement");
  inst.params["n"] = static_cast<long>(n);
  auto v = check(o.statement, inst);
  emit_verdict(v, out, false);
  return v.status == Status::Fail ? kFail : kOk;
}

template <Field F>
int cmd_suite(std::vector<Instance<F>> corpus, const Options& o, std::optional<std::size_t> n, Output& out) {
  std::vector<std::string> ids = suite_statement_ids();
  if (!o.statement.empty()) {
    find_statement(o.statement);
    ids = {o.statement};
  }
  if (n)
    for (auto& inst : corpus) inst.params["n"] = static_cast<long>(*n);
  auto rep = check_suite(corpus, ids);
  for (const auto& v : rep.verdicts) emit_verdict(v, out, true);
  std::string summary;
  for (Status s : {Status::Pass, Status::Vacuous, Status::Fail, Status::NoCounterexample}) {
    const std::size_t c = rep.counts.contains(s) ? rep.counts.at(s) : 0;
    out.record("summary." + std::string(status_name(s)), std::to_string(c));
    summary += std::string(summary.empty() ? "" : ", ") + std::string(status_name(s)) + " " + std::to_string(c);
  }
  out.text("summary: " + std::to_string(rep.verdicts.size()) + " verdicts, " + summary);
  return rep.any_fail() ? kFail : kOk;
}

template <Field F>
int cmd_explore(const F& field, const Options& o, std::size_t n, Output& out) {
  ExploreParams p;
  p.cutoff = n;
  if (!o.pq.empty()) {
    auto comma = o.pq.find(',');
    if (comma == std::string::npos) throw PreconditionError("--pq expects p,q");
    try {
      p.p = std::stoul(o.pq.substr(0, comma));
      p.q = std::stoul(o.pq.substr(comma + 1));
    } catch (const std::exception&) {
      throw PreconditionError("--pq expects two positive integers");
    }
  }
  auto rep = explore(field, o.seed, o.budget, p);
  for (const auto& [k, v] : machine_records(rep)) out.record(k, v);
  std::istringstream human(human_report(rep));
  for (std::string line; std::getline(human, line);) out.text(line);
  for (const auto& c : rep.candidates) out.record("candidate." + std::to_string(c.trial) + ".dossier", "\n" + c.dossier);
  return rep.candidates.empty() ? kOk : kFail;
}

template <Field F>
int cmd_example(const F& field, const Options& o, std::size_t n, Output& out) {
  if (o.example != "agp") throw UndefinedInputError("unknown example '" + o.example + "' (available: agp)");
  auto inst = agp_instance(field);
  const auto& m = inst.module("M");
  const auto& w = inst.module("N");
  cmd_invariants(inst, out);
  auto b = resolve(m, n)->betti_list(n);
  for (std::size_t i = 0; i <= n; ++i) out.record("betti.M." + std::to_string(i), std::to_string(b[i]));
  out.text("b_i(M), i = 0.." + std::to_string(n) + ": " + join(b, " "));
  auto tor = tor_profile(m, w, n).dims;
  for (std::size_t i = 1; i <= n; ++i) out.record("tor.M.omega." + std::to_string(i), std::to_string(tor[i - 1]));
  out.text("dim Tor_i(M, ω), i = 1.." + std::to_string(n) + ": " + join(tor, " "));
  auto ext = ext_profile(m, regular_module(inst.ring), n);
  for (std::size_t i = 1; i <= n; ++i) out.record("ext.M.R." + std::to_string(i), std::to_string(ext[i - 1]));
  out.text("dim Ext^i(M, R), i = 1.." + std::to_string(n) + ": " + join(ext, " "));
  auto w1 = resolve(w, 1)->syzygy_module(1);
  out.record("gamma.omega1", gamma(w1).get_str());
  out.text("γ(M) = " + gamma(m).get_str() + ", γ(ω₁) = " + gamma(w1).get_str());
  inst.params["n"] = static_cast<long>(n);
  auto v = check("S16", inst);
  emit_verdict(v, out, false);
  return v.status == Status::Fail ? kFail : kOk;
}

template <Field F>
int run(const F& field, const Options& o, const std::optional<InstanceText>& text) {
  Output out(o.machine);
  const std::size_t n = cutoff_of(o, text ? &*text : nullptr);
  if (n < 1) throw PreconditionError("cutoff must be at least 1");
  int code = kOk;
  if (o.command == "explore") {
    code = cmd_explore(field, o, n, out);
  } else if (o.command == "example") {
    code = cmd_example(field, o, n, out);
  } else if (o.command == "suite") {
    std::vector<Instance<F>> corpus;
    if (text)
      corpus.push_back(build_instance(*text, field, o.file));
    else
      corpus = canned_corpus(field);
    code = cmd_suite(std::move(corpus), o, o.to ? o.to : std::nullopt, out);
  } else {
    Instance<F> inst = text ? build_instance(*text, field, o.file) : agp_instance(field);
    if (o.command == "invariants") code = cmd_invariants(inst, out);
    if (o.command == "betti") code = cmd_betti(inst, o, n, out);
    if (o.command == "tor") code = cmd_homology(inst, o, n, false, out);
    if (o.command == "ext") code = cmd_homology(inst, o, n, true, out);
    if (o.command == "check") code = cmd_check(std::move(inst), o, n, out);
  }
  out.flush();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological algebra over standard graded Artinian rings"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--to", o.to, "cutoff n (default 12, env ARTIN_CUTOFF)");
    sub->add_flag("--machine", o.machine, "key=value output");
    sub->add_option("--field", o.field, "GF(p) or Q (env ARTIN_FIELD, default GF(101))");
  };
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "instance file (default: the AGP instance)");
    add_common(sub);
  };

  auto* inv = app.add_subcommand("invariants", "ring and module invariants");
  with_file(inv);
  auto* betti = app.add_subcommand("betti", "Betti numbers b_0..b_n of a module");
  with_file(betti);
  betti->add_option("--module", o.module, "module name, or k, R, omega");
  for (const char* name : {"tor", "ext"}) {
    auto* sub = app.add_subcommand(name, std::string(name == std::string("tor") ? "dim Tor_i" : "dim Ext^i") +
                                             "(left, right) for 1 <= i <= n");
    with_file(sub);
    sub->add_option("--left", o.left, "module name, or k, R, omega");
    sub->add_option("--right", o.right, "module name, or k, R, omega");
  }
  auto* chk = app.add_subcommand("check", "evaluate one statement, e.g. S16 or S4.3");
  with_file(chk);
  chk->add_option("--statement", o.statement)->required();
  auto* suite = app.add_subcommand("suite", "statement suite over an instance or the canned corpus");
  with_file(suite);
  suite->add_option("--statement", o.statement, "restrict to one statement");
  auto* exp = app.add_subcommand("explore", "random search for vanishing Tor with m^3 != 0");
  add_common(exp);
  exp->add_option("--seed", o.seed);
  exp->add_option("--budget", o.budget, "number of trials");
  exp->add_option("--pq", o.pq, "generalized mode p,q: m^p M = m^q N = 0 against m^{p+q-1}");
  auto* ex = app.add_subcommand("example", "canned examples (agp)");
  add_common(ex);
  ex->add_option("name", o.example)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    std::optional<InstanceText> text;
    if (!o.file.empty()) text = parse_instance_text(read_file(o.file));
    std::string field_name = "GF(101)";
    if (!o.field.empty())
      field_name = o.field;
    else if (text && text->field)
      field_name = *text->field;
    else if (auto e = env("ARTIN_FIELD"))
      field_name = *e;
    auto p = parse_field_name(field_name);
    if (p) return run(PrimeField(*p), o, text);
    return run(RationalField(), o, text);
  } catch (const ParseError& e) {
    std::cerr << (o.file.empty() ? "" : o.file + ": ") << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
