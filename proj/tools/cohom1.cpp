#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cohom1/cohom1.hpp"

using namespace cohom1;

namespace {

enum Exit { kOk = 0, kParseError = 1, kInvalid = 2, kDisagree = 3 };

struct Globals {
  std::string format = "table";
  long long max = 50;
  std::uint64_t seed = 20261015;
  double tolerance = oracle::kRankCut;
};

std::string params_text(const std::vector<std::pair<std::string, BigInt>>& ps) {
  std::string s;
  for (const auto& [k, v] : ps) s += (s.empty() ? "" : ", ") + k + "=" + to_string(v);
  return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

class RecordPrinter {
 public:
  RecordPrinter(const Globals& g, bool with_verdict) : g_(g), with_verdict_(with_verdict) {}

  void add(const VerdictRecord& r) {
    if (g_.format == "jsonl") {
      std::cout << to_jsonl(r) << '\n';
      return;
    }
    std::string last = r.valid ? (with_verdict_ ? r.verdict->to_string() : "") : "violations: " + join(r.violations, "; ");
    if (r.valid && with_verdict_ && r.pi1_P) last += "  [π1(P)=" + r.pi1_P->to_string() + "]";
    std::cout << std::left << std::setw(5) << to_string(r.family) << ' ' << std::setw(44) << params_text(r.params) << ' '
              << std::setw(7) << (r.valid ? "valid" : "INVALID") << ' ' << last << '\n';
  }

 private:
  const Globals& g_;
  bool with_verdict_;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// DSL documents, or JSONL records when the first non-blank character is '{'.
std::vector<FamilyInstance> load_instances(const std::string& text) {
  std::vector<FamilyInstance> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    std::istringstream lines(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(lines, line)) {
      ++no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        out.push_back(instance_from_json(nlohmann::json::parse(line)));
      } catch (const std::exception& e) {
        throw Error("record line " + std::to_string(no) + ": " + e.what());
      }
    }
    return out;
  }
  for (const auto& d : dsl::parse(text).decls) out.push_back(dsl::to_family(d));
  return out;
}

int run_files(const Globals& g, const std::vector<std::string>& files, bool with_verdict) {
  RecordPrinter printer(g, with_verdict);
  int code = kOk;
  for (const auto& path : files) {
    std::vector<FamilyInstance> fs;
    try {
      fs = load_instances(read_input(path));
    } catch (const std::exception& e) {
      std::cerr << "cohom1: " << path << ": " << e.what() << '\n';
      code = kParseError;
      continue;
    }
    for (const auto& f : fs) {
      const auto r = make_record(f);
      if (!r.valid && code == kOk) code = kInvalid;
      printer.add(r);
    }
  }
  return code;
}

// Lexicographic enumeration of a box of parameter values.
void enumerate(const std::vector<std::pair<std::string, std::pair<long long, long long>>>& ranges, std::size_t i,
               std::map<std::string, BigInt>& cur, const std::function<void()>& emit) {
  if (i == ranges.size()) {
    emit();
    return;
  }
  for (long long v = ranges[i].second.first; v <= ranges[i].second.second; ++v) {
    cur[ranges[i].first] = v;
    enumerate(ranges, i + 1, cur, emit);
  }
}

int run_sweep(const Globals& g, const std::string& family, long long bound, bool valid_only) {
  const auto tag = parse_family_tag(family);
  if (!tag) {
    std::cerr << "cohom1: unknown family '" << family << "'\n";
    return kParseError;
  }
  if (bound < 1 || bound > g.max) {
    std::cerr << "cohom1: bound must lie in [1, " << g.max << "] (raise --max to allow more)\n";
    return kParseError;
  }
  std::vector<std::pair<std::string, std::pair<long long, long long>>> ranges;
  for (const auto& k : required_params(*tag)) {
    const bool positive = k == "n" || k == "m_minus" || k == "m_plus" ||
                          ((*tag == FamilyTag::N6D || *tag == FamilyTag::N6E) && k == "p");
    ranges.push_back({k, positive ? std::pair{1LL, bound} : std::pair{-bound, bound}});
  }
  RecordPrinter printer(g, true);
  std::map<std::string, BigInt> cur;
  enumerate(ranges, 0, cur, [&] {
    FamilyInstance f{*tag, cur, std::nullopt};
    VerdictRecord r;
    try {
      r = make_record(f);
    } catch (const MalformedFamily& e) {
      r = VerdictRecord{*tag, f.ordered_params(), false, {e.what()}, {}, {}, {}};
    }
    if (!valid_only || r.valid) printer.add(r);
  });
  return kOk;
}

int run_catalog(const Globals& g) {
  for (const auto& row : catalog()) {
    if (g.format == "jsonl") {
      nlohmann::ordered_json j;
      j["family"] = to_string(row.family);
      j["diagram"] = row.diagram;
      j["conditions"] = row.conditions;
      j["verdict"] = row.verdict;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << to_string(row.family) << "  " << row.diagram << '\n'
                << "      conditions: " << (row.conditions.empty() ? "none" : join(row.conditions, "; ")) << '\n'
                << "      verdict:    " << row.verdict << '\n';
    }
  }
  return kOk;
}

struct FamilyArgs {
  std::string family;
  std::map<std::string, long long> values;
  std::vector<std::string> extra;  // name=value

  FamilyInstance instance() const {
    const auto tag = parse_family_tag(family);
    if (!tag) throw Error("unknown family '" + family + "'");
    FamilyInstance f{*tag, {}, std::nullopt};
    for (const auto& [k, v] : values) f.params[k] = v;
    for (const auto& kv : extra) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw Error("--param expects name=value, got '" + kv + "'");
      f.params[kv.substr(0, eq)] = BigInt(kv.substr(eq + 1));
    }
    check_param_names(f);
    return f;
  }
};

int run_oracle_euler(const FamilyArgs& a) {
  const auto f = a.instance();
  if (const auto v = validate_family(f); !v.empty()) {
    std::cerr << "cohom1: invalid instance: " << join(v, "; ") << '\n';
    return kInvalid;
  }
  const auto closed = euler_class(f);
  auto recipe =
      oracle::euler_from_weights(oracle::presentation_from_weights(nonprimitivity_data(f).structure_hom_weights));
  const bool agree = closed == recipe;
  if (agree) recipe = closed;  // same class; show the closed form's representative
  std::cout << "closed-form " << closed.to_string() << "; recipe " << recipe.to_string() << "; "
            << (agree ? "AGREE" : "DISAGREE") << '\n';
  return agree ? kOk : kDisagree;
}

int run_oracle_loop(std::size_t so, const std::vector<long long>& blocks) {
  std::vector<BigInt> w(blocks.begin(), blocks.end());
  const auto spec = LoopSpec::so(so, w);
  const int parity = oracle::lift_loop_parity(oracle::sampled_block_loop(spec));
  const auto cls = loop_class(spec);
  const bool agree = BigInt(parity) == cls.coords.at(0);
  std::string ws;
  for (auto b : blocks) ws += (ws.empty() ? "" : ",") + std::to_string(b);
  std::cout << spec.target_name() << " loop with blocks (" << ws << "): lift parity " << parity << "; loop_class "
            << cls.coords.at(0) << "; " << (agree ? "AGREE" : "DISAGREE") << '\n';
  return agree ? kOk : kDisagree;
}

int run_oracle_isotropy(const Globals& g, const oracle::ActionParams& a, std::size_t samples) {
  const auto reps = oracle::isotropy_scan(a, samples, g.seed, g.tolerance);
  std::size_t principal = 0;
  for (const auto& r : reps) principal += r.orbit_dimension == 5;
  const auto arc = oracle::transverse_scan(a, 64, g.tolerance);
  const auto runs = oracle::singular_runs(arc);
  double gap = std::numeric_limits<double>::infinity();
  for (const auto& r : arc)
    if (r.orbit_dimension < 5) gap = std::min(gap, r.residual / std::max(r.first_dropped, 1e-300));
  std::cout << "principal orbits (dimension 5): " << principal << "/" << samples << '\n';
  std::cout << "singular loci on the transverse arc: " << runs.size() << '\n';
  std::cout << "smallest spectral gap at singular samples: " << gap << '\n';
  bool agree = 100 * principal >= 95 * samples && runs.size() == 2 && gap >= 1e6;
  auto expect = [&](long long b, long long c) {
    std::vector<long long> v{a.r * b + a.s * c, b, c};
    auto it = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (it != v.end() && *it < 0)
      for (auto& x : v) x = -x;
    return v;
  };
  auto show = [](const std::optional<std::vector<long long>>& v) {
    if (!v) return std::string("none");
    return "(" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," + std::to_string((*v)[2]) + ")";
  };
  const auto vm = oracle::isotropy_slope(arc.front()), vp = oracle::isotropy_slope(arc.back());
  const auto em = expect(a.b_minus, a.c_minus), ep = expect(a.b_plus, a.c_plus);
  std::cout << "K⁻ slope recovered " << show(vm) << ", expected " << show(em) << '\n';
  std::cout << "K⁺ slope recovered " << show(vp) << ", expected " << show(ep) << '\n';
  agree = agree && vm == em && vp == ep;
  std::cout << (agree ? "AGREE" : "DISAGREE") << '\n';
  return agree ? kOk : kDisagree;
}

int run_oracle_intersect(const Globals& g, const FamilyArgs& a, std::size_t samples) {
  std::vector<FamilyInstance> fs;
  if (a.values.empty() && a.extra.empty()) {
    std::mt19937_64 rng(g.seed);
    for (std::size_t i = 0; i < samples; ++i) fs.push_back(random_valid_n6a(rng, 3));
  } else {
    fs.push_back(a.instance());
  }
  std::size_t confirmed = 0;
  for (const auto& f : fs) {
    if (f.tag != FamilyTag::N6A) throw WrongFamily("intersect oracle is for N6A");
    if (const auto v = validate_family(f); !v.empty()) {
      std::cerr << "cohom1: invalid instance: " << join(v, "; ") << '\n';
      return kInvalid;
    }
    const auto d = build_diagram(f);
    confirmed += intersect(d.Kminus, d.Kplus) == d.H;
  }
  const bool ok = confirmed == fs.size();
  std::cout << "H = K⁻∩K⁺: " << (ok ? "CONFIRMED" : "REFUTED");
  if (fs.size() > 1) std::cout << " (" << confirmed << "/" << fs.size() << " instances)";
  std::cout << '\n';
  return ok ? kOk : kDisagree;
}

void add_family_options(CLI::App* app, FamilyArgs& a, std::map<std::string, long long>& raw) {
  app->add_option("--family", a.family, "family tag")->required();
  for (const char* k : {"p", "q", "n", "r", "s"}) app->add_option(std::string("-") + k, raw[k], std::string("parameter ") + k);
  app->add_option("--param", a.extra, "further parameters as name=value (e.g. b_minus=1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomogeneity one diagrams on S3xS3, S3xT2 and SU3: validation, classification, oracles"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "jsonl"}));
  app.add_option("--max", g.max, "largest sweep bound accepted");
  app.add_option("--seed", g.seed, "seed for randomized oracle sampling");
  app.add_option("--tolerance", g.tolerance, "relative singular value cut for numeric rank");

  std::vector<std::string> files;
  auto* validate = app.add_subcommand("validate", "check side conditions of the instances in FILES");
  validate->add_option("files", files, "DSL documents or JSONL records ('-' for stdin)")->required();
  auto* classify_cmd = app.add_subcommand("classify", "classify the instances in FILES");
  classify_cmd->add_option("files", files, "DSL documents or JSONL records ('-' for stdin)")->required();

  std::string sweep_family;
  long long bound = 0;
  bool valid_only = false;
  auto* sweep = app.add_subcommand("sweep", "enumerate a parameter box of one family");
  sweep->add_option("family", sweep_family, "family tag")->required();
  sweep->add_option("--bound", bound, "parameter bound")->required();
  sweep->add_flag("--valid-only", valid_only, "emit only valid instances");

  auto* oracle_cmd = app.add_subcommand("oracle", "cross-check a closed form against an independent computation");
  oracle_cmd->require_subcommand(1);
  FamilyArgs euler_args, intersect_args;
  std::map<std::string, long long> euler_raw, intersect_raw;
  auto* o_euler = oracle_cmd->add_subcommand("euler", "closed-form Euler class versus the weight recipe");
  add_family_options(o_euler, euler_args, euler_raw);
  std::size_t so = 3;
  std::vector<long long> blocks;
  auto* o_loop = oracle_cmd->add_subcommand("loop", "loop class versus lifting through the spin cover");
  o_loop->add_option("--so", so, "k for SO(k)")->required();
  o_loop->add_option("--blocks", blocks, "rotation speeds of the 2x2 blocks")->delimiter(',')->required()->allow_extra_args(false);
  oracle::ActionParams act;
  std::size_t samples = 200;
  auto* o_iso = oracle_cmd->add_subcommand("isotropy", "numeric isotropy of the explicit S3xT2 action");
  o_iso->add_option("-r", act.r);
  o_iso->add_option("-s", act.s);
  o_iso->add_option("--b-minus", act.b_minus);
  o_iso->add_option("--c-minus", act.c_minus);
  o_iso->add_option("--b-plus", act.b_plus);
  o_iso->add_option("--c-plus", act.c_plus);
  o_iso->add_option("--n-minus", act.n_minus);
  o_iso->add_option("--n-plus", act.n_plus);
  o_iso->add_option("--samples", samples, "random points");
  std::size_t n6a_samples = 100;
  auto* o_int = oracle_cmd->add_subcommand("intersect", "exact check of H = K- cap K+ for N6A");
  add_family_options(o_int, intersect_args, intersect_raw);
  o_int->add_option("--samples", n6a_samples, "random valid instances when no parameters are given");

  auto* catalog_cmd = app.add_subcommand("catalog", "print the table of families");

  for (auto* sub : {validate, classify_cmd, sweep, oracle_cmd, catalog_cmd}) sub->fallthrough();
  for (auto* sub : {o_euler, o_loop, o_iso, o_int}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "cohom1: " << e.what() << '\n';
    return kParseError;
  }

  auto collect = [](CLI::App* sub, FamilyArgs& a, const std::map<std::string, long long>& raw) {
    for (const auto& [k, v] : raw)
      if (sub->count("-" + k)) a.values[k] = v;
  };

  try {
    if (*validate) return run_files(g, files, false);
    if (*classify_cmd) return run_files(g, files, true);
    if (*sweep) return run_sweep(g, sweep_family, bound, valid_only);
    if (*catalog_cmd) return run_catalog(g);
    if (*o_euler) {
      collect(o_euler, euler_args, euler_raw);
      return run_oracle_euler(euler_args);
    }
    if (*o_loop) return run_oracle_loop(so, blocks);
    if (*o_iso) return run_oracle_isotropy(g, act, samples);
    if (*o_int) {
      collect(o_int, intersect_args, intersect_raw);
      return run_oracle_intersect(g, intersect_args, n6a_samples);
    }
  } catch (const std::exception& e) {
    std::cerr << "cohom1: " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}
