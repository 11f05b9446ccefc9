#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ulam/aggregation.hpp"
#include "ulam/io.hpp"
#include "ulam/metric.hpp"
#include "ulam/reductions.hpp"
#include "ulam/verify.hpp"

namespace {

using namespace ulam;

// Inline permutation argument: with whitespace, a list of integers; a pure
// digit-1..9 token is one symbol per character; otherwise one integer symbol.
PermString parse_inline_perm(const std::string& tok) {
  if (tok.empty()) fail(Errc::parse_error, "empty permutation argument");
  bool compact = true;
  for (char ch : tok)
    if (ch < '1' || ch > '9') compact = false;
  if (compact) return perm_from_digits(tok);

  std::istringstream in(tok);
  PermString p;
  std::string t;
  while (in >> t) {
    if (t.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::parse_error, "bad symbol '" + t + "'");
    unsigned long long v = std::stoull(t);
    if (v == 0 || v > 0xffffffffull) fail(Errc::parse_error, "symbol out of range '" + t + "'");
    p.push_back(static_cast<Sym>(v));
  }
  if (p.empty()) fail(Errc::parse_error, "empty permutation argument");
  require_valid(p, "inline permutation");
  return p;
}

std::string join_perm(const PermString& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

int run_dist(const std::vector<std::string>& inline_perms, const std::string& file, bool oracle) {
  PermString a, b;
  if (!file.empty()) {
    if (!inline_perms.empty())
      fail(Errc::parse_error, "give either two inline permutations or --file, not both");
    InstanceFileData data = parse_instance_text(read_file(file));
    if (data.bichromatic || data.mono.perms.size() != 2)
      fail(Errc::parse_error, "--file expects a mono instance with exactly 2 members");
    a = data.mono.perms[0];
    b = data.mono.perms[1];
  } else {
    if (inline_perms.size() != 2)
      fail(Errc::parse_error, "expected two permutations (or --file)");
    a = parse_inline_perm(inline_perms[0]);
    b = parse_inline_perm(inline_perms[1]);
  }
  std::uint64_t d = ulam_distance(a, b);
  std::cout << d << "\n";
  if (oracle) {
    std::uint64_t lcs = lcs_oracle(a, b);
    if (d != a.size() - lcs)
      fail(Errc::internal_error, "fast path disagrees with the LCS recomputation");
    std::cout << "lcs " << lcs << "\n";
  }
  return 0;
}

int run_solve(const std::string& file, const std::string& objective, bool discrete,
              bool continuous, bool bichromatic) {
  if (discrete + continuous + bichromatic != 1)
    fail(Errc::parse_error, "pick exactly one of --discrete, --continuous, --bichromatic");
  const bool center = objective == "center";

  InstanceFileData data = parse_instance_text(read_file(file));
  if (bichromatic != data.bichromatic)
    fail(Errc::parse_error, data.bichromatic ? "bichromatic file needs --bichromatic"
                                             : "--bichromatic needs a bichromatic file");

  SolveResult r;
  std::uint64_t tau = 0;
  bool print_index = true;
  if (discrete) {
    tau = data.mono.tau;
    r = center ? discrete_center(data.mono.perms) : discrete_median(data.mono.perms);
  } else if (bichromatic) {
    tau = data.bi.tau;
    r = center ? bichromatic_center(data.bi.xs, data.bi.ys)
               : bichromatic_median(data.bi.xs, data.bi.ys);
  } else {
    tau = data.mono.tau;
    print_index = false;
    r = center ? continuous_center_exhaustive(data.mono.perms)
               : continuous_median_exhaustive(data.mono.perms);
  }

  if (print_index)
    std::cout << "index " << (r.index + 1) << "\n";
  else
    std::cout << "perm " << join_perm(r.perm) << "\n";
  std::cout << "cost " << r.cost << "\n";
  std::cout << "decision " << (r.cost <= tau ? "yes" : "no") << "\n";
  return 0;
}

int run_reduce(const std::string& kind, const std::string& input, const std::string& prefix,
               const std::optional<std::uint64_t>& cut_target, bool pad) {
  std::string instance_text;
  Certificate cert;

  if (kind == "maxcut-median") {
    Graph g = parse_graph_text(read_file(input));
    std::uint64_t target = cut_target.value_or(g.edges.size());
    MonoReduction red = maxcut_to_median(g, target);
    instance_text = serialize_instance(red.instance);
    cert = std::move(red.cert);
  } else if (kind == "multiset-set") {
    InstanceFileData data = parse_instance_text(read_file(input));
    if (data.bichromatic) fail(Errc::parse_error, "multiset-set takes a mono instance");
    MonoReduction red = multiset_to_set(data.mono);
    instance_text = serialize_instance(red.instance);
    cert = std::move(red.cert);
  } else if (kind == "qov-center") {
    OvFile ovf = parse_ov_text(read_file(input));
    if (ovf.pattern != "eaee")
      fail(Errc::parse_error, "qov-center needs quantifier pattern eaee, file has " + ovf.pattern);
    MonoReduction red = qov_to_discrete_center(ovf.sets);
    instance_text = serialize_instance(red.instance);
    cert = std::move(red.cert);
  } else if (kind == "ov4-bimedian") {
    OvFile ovf = parse_ov_text(read_file(input));
    if (ovf.pattern != "eeee")
      fail(Errc::parse_error, "ov4-bimedian needs quantifier pattern eeee, file has " + ovf.pattern);
    OvInput sets = pad ? pad_ov_for_divisibility(ovf.sets) : ovf.sets;
    BiReduction red = ov4_to_bichromatic_median(sets);
    instance_text = serialize_instance(red.instance);
    cert = std::move(red.cert);
  } else if (kind == "bi-monomedian") {
    Certificate upstream = parse_certificate_text(read_file(input));
    MonoReduction red = bichromatic_to_monochromatic_median(upstream);
    instance_text = serialize_instance(red.instance);
    cert = std::move(red.cert);
  } else {
    fail(Errc::parse_error, "unknown reduction kind '" + kind + "'");
  }

  const std::string inst_path = prefix + ".ulam";
  const std::string cert_path = prefix + ".cert.json";
  write_file(inst_path, instance_text);
  write_file(cert_path, serialize_certificate(cert));
  std::cout << "instance " << inst_path << "\n";
  std::cout << "certificate " << cert_path << "\n";
  return 0;
}

int run_verify(const std::string& inst_path, const std::string& cert_path) {
  InstanceFileData data = parse_instance_text(read_file(inst_path));
  Certificate cert = parse_certificate_text(read_file(cert_path));
  VerifyReport rep = verify_certificate(data, cert);
  if (rep.ok) {
    std::cout << "verify pass\n";
    return 0;
  }
  std::cout << "verify fail " << rep.check << ": " << rep.detail << "\n";
  return 1;
}

int run_bench(std::uint64_t n, std::uint64_t len, const std::string& objective,
              std::uint64_t seed) {
  const bool center = objective == "center";
  UlamInstance inst = generate_random_instance(n, len, seed);
  std::cout << "index,objective,micros\n";
  for (std::size_t i = 0; i < inst.perms.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t obj = 0;
    for (std::size_t j = 0; j < inst.perms.size(); ++j) {
      if (j == i) continue;
      std::uint64_t d = ulam_distance(inst.perms[i], inst.perms[j]);
      obj = center ? std::max(obj, d) : obj + d;
    }
    auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::cout << (i + 1) << "," << obj << "," << micros << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ulam-metric rank aggregation toolkit"};
  app.require_subcommand(1);

  auto* dist = app.add_subcommand("dist", "distance between two permutations");
  std::vector<std::string> dist_inline;
  std::string dist_file;
  bool dist_oracle = false;
  dist->add_option("perms", dist_inline, "two inline permutations")->expected(0, 2);
  dist->add_option("--file", dist_file, "mono instance file with exactly two members");
  dist->add_flag("--oracle", dist_oracle, "also print the quadratic-DP LCS and cross-check");

  auto* solve = app.add_subcommand("solve", "optimize an aggregation objective");
  std::string solve_file, solve_objective;
  bool solve_discrete = false, solve_continuous = false, solve_bichromatic = false;
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--objective", solve_objective, "median or center")
      ->required()
      ->check(CLI::IsMember({"median", "center"}));
  solve->add_flag("--discrete", solve_discrete, "best member of the instance");
  solve->add_flag("--continuous", solve_continuous, "best permutation overall (guarded)");
  solve->add_flag("--bichromatic", solve_bichromatic, "best first-color member against the second color");

  auto* reduce = app.add_subcommand("reduce", "build a hard instance plus its certificate");
  std::string reduce_kind, reduce_input, reduce_prefix;
  std::optional<std::uint64_t> reduce_cut_target;
  bool reduce_pad = false;
  reduce->add_option("kind", reduce_kind,
                     "maxcut-median | multiset-set | qov-center | ov4-bimedian | bi-monomedian")
      ->required();
  reduce->add_option("input", reduce_input, "input file (bi-monomedian takes an ov4-bimedian certificate)")
      ->required();
  reduce->add_option("prefix", reduce_prefix, "output path prefix")->required();
  reduce->add_option("--cut-target", reduce_cut_target,
                     "maxcut-median: required cut size (default: every edge)");
  reduce->add_flag("--pad", reduce_pad, "ov4-bimedian: pad the sets to a multiple of four first");

  auto* verify = app.add_subcommand("verify", "check an instance against its certificate");
  std::string verify_inst, verify_cert;
  verify->add_option("instance", verify_inst, "instance file")->required();
  verify->add_option("certificate", verify_cert, "certificate file")->required();

  auto* bench = app.add_subcommand("bench", "time objective rows on a random instance");
  std::uint64_t bench_n = 0, bench_len = 0, bench_seed = 0;
  std::string bench_objective;
  bench->add_option("--n", bench_n, "member count")->required();
  bench->add_option("--L", bench_len, "member length")->required();
  bench->add_option("--objective", bench_objective, "median or center")
      ->required()
      ->check(CLI::IsMember({"median", "center"}));
  bench->add_option("--seed", bench_seed, "generator seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (dist->parsed()) return run_dist(dist_inline, dist_file, dist_oracle);
    if (solve->parsed())
      return run_solve(solve_file, solve_objective, solve_discrete, solve_continuous,
                       solve_bichromatic);
    if (reduce->parsed())
      return run_reduce(reduce_kind, reduce_input, reduce_prefix, reduce_cut_target, reduce_pad);
    if (verify->parsed()) return run_verify(verify_inst, verify_cert);
    if (bench->parsed()) return run_bench(bench_n, bench_len, bench_objective, bench_seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::internal_error ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
