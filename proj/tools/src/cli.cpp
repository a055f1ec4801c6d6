// Copyright 2026 The kolmoverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kolmoverify/bitvm.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/experiments.hpp"
#include "kolmoverify/golden.hpp"
#include "kolmoverify/qsim.hpp"
#include "kolmoverify/rng.hpp"
#include "kolmoverify/samplers.hpp"
#include "kolmoverify/serialize.hpp"
#include "kolmoverify/verify.hpp"

namespace kolmoverify::cli {

using nlohmann::json;

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::uint64_t ParseSeed(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || s[0] == '-') throw ParseError("bad seed: " + s);
  return v;
}

// Splits "--config FILE" out of args and appends every config key that is
// not already given on the command line, so flags override the file.
std::vector<std::string> ApplyConfig(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ParseError("--config needs a file");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;
  for (const auto& [key, value] : ParseConfig(ReadFile(*path))) {
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given || value == "false") continue;
    args.push_back(flag);
    if (value != "true") args.push_back(value);
  }
  return args;
}

std::vector<samplers::DescribedSampler> LoadCorpusArg(const std::string& corpus) {
  return corpus == "v1" ? samplers::CorpusV1() : samplers::LoadCorpus(corpus);
}

std::string Rational(const kolmoverify::Rational& r) { return r.str(); }

experiments::Params ParseExtras(const std::vector<std::string>& extras) {
  experiments::Params out;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& a = extras[i];
    if (a.rfind("--", 0) != 0 || a.size() == 2) throw ParseError("unexpected argument: " + a);
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      out[a.substr(2, eq - 2)] = a.substr(eq + 1);
    } else {
      if (i + 1 >= extras.size()) throw ParseError(a + " needs a value");
      out[a.substr(2)] = extras[++i];
    }
  }
  return out;
}

std::string ExperimentFooter() {
  std::ostringstream os;
  os << "Experiment parameters (pass as --<name> <value>):\n";
  for (const auto& e : experiments::Registry()) {
    os << "  " << e.id << ":";
    for (const auto& [k, v] : e.defaults) os << " --" << k << " [" << v << "]";
    os << "\n";
  }
  return os.str();
}

struct Options {
  std::string seed;
  bool no_timestamp = false;
  std::string format = "json";
  std::string out;
  // complexity
  std::string flavor = "ukt";
  std::string x;
  unsigned t = 0;
  unsigned m = 0;
  // verify
  std::string samples;
  std::string target;
  std::string corpus = "v1";
  std::string kind = "ver";
  unsigned n = 4;
  double c = 1;
  double eps = 0.25;
  std::string approx = "exact";
  std::string profile = "random";
  double delta = 0.01;
  unsigned oracle_t = 0;
  unsigned t_classical = experiments::kQasClassicalT;
  unsigned t_quantum = experiments::kQuantumT;
  // experiment / corpus / golden
  std::string id;
  std::string label;
  std::size_t count = 0;
  int stretch = -1;
  std::string file;
};

verify::Contract ParseContract(const std::string& s) {
  if (s == "exact") return verify::Contract::kExact;
  if (s == "one-sided") return verify::Contract::kOneSided;
  if (s == "two-sided") return verify::Contract::kTwoSided;
  throw UnsupportedSpec("unknown contract: " + s);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, const Environment& env)
      : out_(out), err_(err), env_(env) {}

  std::uint64_t Seed() const {
    if (!o.seed.empty()) return ParseSeed(o.seed);
    if (env_.seed) return ParseSeed(*env_.seed);
    return experiments::kDefaultSeed;
  }

  void Emit(const std::string& text) const {
    if (o.out.empty()) {
      out_ << text;
    } else {
      WriteFile(o.out, text);
    }
  }

  int Complexity() const {
    const BitTape x = BitTape::FromString(o.x);
    if (o.m != 0 && o.m != x.size()) {
      throw WrongArity("--m " + std::to_string(o.m) + " does not match |x| = " +
                       std::to_string(x.size()));
    }
    const bool quantum = o.flavor == "qukt";
    const unsigned t_max = quantum ? qsim::kTMaxQ : bitvm::kTMax;
    json j;
    j["flavor"] = o.flavor;
    j["x"] = o.x;
    j["t"] = o.t;
    j["m"] = x.size();
    j["mode"] = o.t <= t_max ? "exact" : "counted";
    const double v = golden::Complexity(o.flavor, o.x, o.t);
    j["value"] = std::isinf(v) ? json("+inf") : json(v);
    Emit(j.dump() + "\n");
    return kExitOk;
  }

  int Verify() const {
    const SamplesFile f = ReadSamples(o.samples);
    const std::vector<BitTape> samples = f.Flatten();
    const std::uint64_t seed = Seed();
    json config = {{"samples", o.samples}, {"kind", o.kind},     {"n", o.n},
                   {"c", o.c},             {"seed", seed},       {"corpus", o.corpus}};
    verify::Verdict v;
    if (o.kind == "qas") {
      verify::OracleSpec mc, mq;
      mc.target = verify::OracleTarget::kUKt;
      mc.t = o.t_classical;
      mq.target = verify::OracleTarget::kQuKt;
      mq.t = o.t_quantum;
      mc.seed = mq.seed = seed;
      config["t_classical"] = o.t_classical;
      config["t_quantum"] = o.t_quantum;
      v = verify::qas_verify(samples, o.n, verify::make_oracle(mc), verify::make_oracle(mq), o.c,
                             seed);
    } else {
      if (o.target.empty()) throw ParseError("--target is required for " + o.kind);
      const auto corpus = LoadCorpusArg(o.corpus);
      const auto& target = samplers::FindSampler(corpus, o.target);
      const bool quantum = o.flavor == "qukt";
      if (!quantum && o.flavor != "ukt") throw UnsupportedSpec("unknown flavor: " + o.flavor);
      verify::OracleSpec ms;
      ms.target = quantum ? verify::OracleTarget::kQuKt : verify::OracleTarget::kUKt;
      ms.t = o.oracle_t;
      verify::OracleSpec as;
      as.target = verify::OracleTarget::kProbability;
      as.contract = ParseContract(o.approx);
      if (o.profile != "random" && o.profile != "saturating") {
        throw UnsupportedSpec("unknown profile: " + o.profile);
      }
      as.profile = o.profile == "random" ? verify::ErrorProfile::kRandom
                                         : verify::ErrorProfile::kSaturating;
      as.delta = as.contract == verify::Contract::kExact ? 0.0 : o.delta;
      as.seed = seed;
      as.sampler = target;
      const auto M = verify::make_oracle(ms);
      const auto A = verify::make_oracle(as);
      config.update({{"target", o.target},
                     {"eps", o.eps},
                     {"flavor", o.flavor},
                     {"approx", o.approx},
                     {"profile", o.profile},
                     {"delta", as.delta},
                     {"oracle_t", o.oracle_t}});
      const auto flavor = quantum ? verify::Flavor::kQuantum : verify::Flavor::kClassical;
      if (o.kind == "ver") {
        auto cfg = verify::VerConfig::Defaults(o.n, o.c, o.eps, flavor);
        cfg.t = o.oracle_t;
        config["s"] = cfg.s;
        config["alpha"] = cfg.alpha;
        v = verify::ver(samples, target, cfg, M, A, seed);
      } else if (o.kind == "ver-star") {
        auto cfg = verify::VerStarConfig::Defaults(o.n, o.c, o.eps);
        cfg.inner.flavor = flavor;
        cfg.inner.t = o.oracle_t;
        config["s"] = cfg.inner.s;
        config["blocks"] = cfg.blocks;
        v = verify::ver_star(samplers::SampleBatch::FromTapes(samples), target, cfg, M, A, seed);
      } else {
        throw UnsupportedSpec("unknown verifier kind: " + o.kind);
      }
    }
    json j;
    j["config"] = config;
    j["verdict"] = json::parse(ToJson(v));
    Emit(j.dump() + "\n");
    return v.accepted ? kExitOk : kExitReject;
  }

  int ExperimentRun(const std::vector<std::string>& extras) const {
    const auto r = experiments::RunExperiment(o.id, ParseExtras(extras), Seed());
    if (o.format != "json" && o.format != "csv") throw ParseError("unknown format: " + o.format);
    const std::string text = o.format == "csv" ? r.ToCsv() : r.ToJson(!o.no_timestamp);
    Emit(text);
    if (!o.out.empty()) out_ << r.experiment_id << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    return r.pass ? kExitOk : kExitReject;
  }

  int ExperimentList() const {
    Emit(experiments::Manifest());
    return kExitOk;
  }

  int CorpusList() const {
    std::ostringstream os;
    for (const auto& s : LoadCorpusArg(o.corpus)) {
      os << s.label() << '\t' << samplers::ToString(s.kind()) << "\tm=" << s.m()
         << "\t|D|=" << s.description_length() << '\n';
    }
    Emit(os.str());
    return kExitOk;
  }

  int CorpusShow() const {
    const auto corpus = LoadCorpusArg(o.corpus);
    const auto& s = samplers::FindSampler(corpus, o.label);
    json j = json::parse(samplers::SerializeCorpus({s}))[0];
    json dist = json::array();
    const auto& d = s.exact_distribution();
    for (const auto& [x, p] : d.entries()) {
      json row = {{"x", x.is_bottom() ? std::string(kBottomSymbol) : x.value().ToString()},
                  {"p", p}};
      if (d.is_exact()) row["p_exact"] = Rational(d.exact_prob(x));
      dist.push_back(std::move(row));
    }
    j["distribution"] = std::move(dist);
    Emit(j.dump(2) + "\n");
    return kExitOk;
  }

  int CorpusSample() const {
    const auto corpus = LoadCorpusArg(o.corpus);
    samplers::DescribedSampler s = samplers::FindSampler(corpus, o.label);
    if (o.stretch >= 0) s = samplers::prg_stretch(s, static_cast<unsigned>(o.stretch));
    Rng rng(Seed());
    SamplesFile f;
    f.m = s.m();
    f.blocks.push_back(s.SampleBatchOf(o.count, rng).ToTapes());
    Emit(FormatSamples(f));
    return kExitOk;
  }

  std::string GoldenPath() const {
    return o.file.empty() ? env_.data_dir + "/goldens.json" : o.file;
  }

  int GoldenCheck() const {
    const auto diff = golden::Diff(golden::Load(GoldenPath()), golden::Compute());
    for (const auto& line : diff) out_ << "drift: " << line << "\n";
    if (diff.empty()) out_ << "goldens match " << GoldenPath() << "\n";
    return diff.empty() ? kExitOk : kExitReject;
  }

  int GoldenFreeze() const {
    WriteFile(GoldenPath(), golden::Serialize(golden::Compute()));
    out_ << "froze " << GoldenPath() << "\n";
    return kExitOk;
  }

  Options o;

 private:
  std::ostream& out_;
  std::ostream& err_;
  const Environment& env_;
};

}  // namespace

std::vector<BitTape> SamplesFile::Flatten() const {
  std::vector<BitTape> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

SamplesFile ParseSamples(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SamplesFile f;
  bool header = false;
  std::vector<BitTape> block;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header) {
      if (line.rfind("m=", 0) != 0) throw ParseError("samples file must start with m=<bits>");
      f.m = static_cast<unsigned>(ParseSeed(line.substr(2)));
      if (f.m == 0) throw ParseError("m must be positive");
      header = true;
      continue;
    }
    if (line.empty()) {
      if (!block.empty()) f.blocks.push_back(std::move(block));
      block.clear();
      continue;
    }
    block.push_back(BitTape::FromHex(std::to_string(f.m) + ":0x" + line));
  }
  if (!header) throw ParseError("empty samples file");
  if (!block.empty()) f.blocks.push_back(std::move(block));
  return f;
}

SamplesFile ReadSamples(const std::string& path) { return ParseSamples(ReadFile(path)); }

std::string FormatSamples(const SamplesFile& f) {
  std::ostringstream os;
  os << "m=" << f.m << "\n";
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    if (b > 0) os << "\n";
    for (const auto& x : f.blocks[b]) {
      const std::string hex = x.ToHex();
      os << hex.substr(hex.find("0x") + 2) << "\n";
    }
  }
  return os.str();
}

std::map<std::string, std::string> ParseConfig(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a flat JSON object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (v.is_string()) {
      out[k] = v.get<std::string>();
    } else if (v.is_boolean() || v.is_number()) {
      out[k] = v.dump();
    } else {
      throw ParseError("config value for '" + k + "' must be a scalar");
    }
  }
  return out;
}

Environment EnvironmentFromProcess() {
  Environment env;
  if (const char* s = std::getenv("KOLMOVERIFY_SEED")) env.seed = s;
  const char* dir = std::getenv("KOLMOVERIFY_DATA_DIR");
  env.data_dir = dir ? dir : KOLMOVERIFY_DEFAULT_DATA_DIR;
  return env;
}

int Run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  Runner runner(out, err, env);
  Options& o = runner.o;
  CLI::App app{"Verification of quantum and classical samplers via time-bounded complexity",
               "kolmoverify"};
  app.require_subcommand(1);
  app.fallthrough();
  // Unknown flags are experiment parameters; anything else rejects them below.
  app.allow_extras();
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", o.seed, "RNG seed (default: $KOLMOVERIFY_SEED, else 2026)");
  app.add_flag("--no-timestamp", o.no_timestamp, "Omit timestamp and runtime from reports");
  app.add_option("--format", o.format, "Report format: json | csv");
  app.add_option("--out", o.out, "Write output to this path instead of stdout");
  app.add_option("--config", "Flat JSON object of option values; flags override it");

  auto* cx = app.add_subcommand("complexity", "Print uK^t or quK^t of a bitstring");
  cx->add_option("--flavor", o.flavor, "ukt | qukt");
  cx->add_option("--x", o.x, "Bitstring, e.g. 0101")->required();
  cx->add_option("--t", o.t, "Step budget")->required();
  cx->add_option("--m", o.m, "Output length; must equal |x| when given");

  auto* vf = app.add_subcommand("verify", "Run a verifier on a samples file; emits a Verdict");
  vf->add_option("--samples", o.samples, "Samples file (m=<bits> header, hex lines)")->required();
  vf->add_option("--target", o.target, "Target sampler label (ver, ver-star)");
  vf->add_option("--corpus", o.corpus, "Corpus: v1 or a corpus JSON path");
  vf->add_option("--kind", o.kind, "ver | ver-star | qas");
  vf->add_option("--flavor", o.flavor, "Complexity oracle for ver: ukt | qukt");
  vf->add_option("--n", o.n, "Security parameter n");
  vf->add_option("--c", o.c, "Soundness exponent c");
  vf->add_option("--eps", o.eps, "Distance eps");
  vf->add_option("--approx", o.approx, "Probability oracle: exact | one-sided | two-sided");
  vf->add_option("--profile", o.profile, "Oracle error profile: random | saturating");
  vf->add_option("--delta", o.delta, "Oracle failure probability");
  vf->add_option("--oracle-t", o.oracle_t, "Complexity oracle budget (0 = unbounded)");
  vf->add_option("--t-classical", o.t_classical, "qas: classical budget t_C");
  vf->add_option("--t-quantum", o.t_quantum, "qas: quantum budget t_Q");

  auto* ex = app.add_subcommand("experiment", "Run or list experiments");
  ex->require_subcommand(1);
  auto* ex_run = ex->add_subcommand("run", "Run one experiment; exit 0 iff it passes");
  ex_run->add_option("id", o.id, "Experiment id")->required();
  ex_run->allow_extras();
  ex_run->footer(ExperimentFooter());
  auto* ex_list = ex->add_subcommand("list", "Print the experiment manifest");

  auto* co = app.add_subcommand("corpus", "Inspect the sampler corpus");
  co->require_subcommand(1);
  co->add_option("--corpus", o.corpus, "Corpus: v1 or a corpus JSON path");
  auto* co_list = co->add_subcommand("list", "List corpus samplers");
  auto* co_show = co->add_subcommand("show", "Show one sampler and its exact distribution");
  co_show->add_option("label", o.label, "Sampler label")->required();
  auto* co_sample = co->add_subcommand("sample", "Draw a samples file from a corpus sampler");
  co_sample->add_option("label", o.label, "Sampler label")->required();
  co_sample->add_option("--count", o.count, "Number of samples")->required();
  co_sample->add_option("--stretch", o.stretch, "Run on a PRG stretch with this many seed bits");

  auto* go = app.add_subcommand("golden", "Check or freeze golden constants");
  go->require_subcommand(1);
  go->add_option("--file", o.file, "Goldens file (default: data/goldens.json)");
  auto* go_check = go->add_subcommand("check", "Recompute goldens; exit 1 on drift");
  auto* go_freeze = go->add_subcommand("freeze", "Recompute and write goldens");

  try {
    std::vector<std::string> args = ApplyConfig(raw_args);
    std::vector<const char*> argv{"kolmoverify"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  const std::vector<std::string> extras = app.remaining(true);
  if (!extras.empty() && !ex_run->parsed()) {
    err << "error: unexpected arguments:";
    for (const auto& a : extras) err << ' ' << a;
    err << "\n";
    return kExitError;
  }
  try {
    if (cx->parsed()) return runner.Complexity();
    if (vf->parsed()) return runner.Verify();
    if (ex_run->parsed()) return runner.ExperimentRun(extras);
    if (ex_list->parsed()) return runner.ExperimentList();
    if (co_list->parsed()) return runner.CorpusList();
    if (co_show->parsed()) return runner.CorpusShow();
    if (co_sample->parsed()) return runner.CorpusSample();
    if (go_check->parsed()) return runner.GoldenCheck();
    if (go_freeze->parsed()) return runner.GoldenFreeze();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << "error: no command\n";
  return kExitError;
}

}  // namespace kolmoverify::cli
