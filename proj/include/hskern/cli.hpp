#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hskern/below_m.hpp"
#include "hskern/below_n.hpp"
#include "hskern/degeneracy.hpp"
#include "hskern/generators.hpp"
#include "hskern/io.hpp"
#include "hskern/nonblocker.hpp"
#include "hskern/oracles.hpp"

namespace hskern::cli {

// Exit codes: 0 success / YES, 1 decision NO or invalid witness,
// 2 usage or parse error, 3 internal invariant violation.
constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

enum class Variant { below_m, below_n, nonblocker };

inline Variant variant_from(const std::string& name) {
  if (name == "below-m") return Variant::below_m;
  if (name == "below-n") return Variant::below_n;
  if (name == "nonblocker") return Variant::nonblocker;
  throw ParseError("unknown variant '" + name + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

// k * 4^k, saturating well below overflow.
inline long long below_m_bound(int k) {
  if (k <= 0) return 0;
  long long bound = k;
  for (int i = 0; i < k; ++i) {
    if (bound > (1LL << 60)) return 1LL << 62;
    bound *= 4;
  }
  return bound;
}

inline Digraph parse_digraph_warn(const std::string& text, std::ostream& err) {
  std::vector<std::string> warnings;
  Digraph d = parse_digraph(text, &warnings);
  for (const std::string& w : warnings) err << "warning: " << w << "\n";
  return d;
}

struct SolveResult {
  bool yes = false;
  std::vector<int> witness;  // lifted to the original instance when yes
};

inline SolveResult solve_below_m(const BelowMInstance& inst) {
  BelowMOutcome oc = kernelize_below_m(inst);
  if (const auto* d = std::get_if<Decided>(&oc)) return {d->yes, d->witness};
  const auto& red = std::get<Kernel<BelowMInstance, MStep>>(oc);
  ExactResult ex = min_hitting_set(red.kernel.h);
  if (ex.optimum > red.kernel.target()) return {false, {}};
  return {true, lift_witness_m(red.trace, ex.witness)};
}

inline SolveResult solve_below_n(const BelowNInstance& inst) {
  BelowNOutcome oc = decide_or_kernel_below_n(inst);
  if (const auto* d = std::get_if<Decided>(&oc)) return {d->yes, d->witness};
  const auto& red = std::get<Kernel<BelowNInstance, NStep>>(oc);
  ExactResult ex = min_hitting_set(red.kernel.h);
  if (ex.optimum > red.kernel.target()) return {false, {}};
  return {true, lift_witness_n(red.trace, ex.witness)};
}

inline SolveResult solve_nonblocker(const NonblockerInstance& inst) {
  NonblockerOutcome oc = kernelize_nonblocker(inst);
  if (const auto* d = std::get_if<Decided>(&oc)) return {d->yes, d->witness};
  const auto& red = std::get<Kernel<NonblockerInstance, NBStep>>(oc);
  ExactResult ex = min_dominating_set(red.kernel.d);
  if (ex.optimum > red.kernel.target()) return {false, {}};
  return {true, lift_witness_nb(red.trace, ex.witness)};
}

namespace detail {

struct KernelizeOptions {
  Variant variant = Variant::below_m;
  int k = 0;
  std::string file;
  std::string out_path;
  std::string trace_path;
};

inline void emit_kernel(const std::string& kernel_text,
                        const std::string& trace_text,
                        const std::string& stats_line,
                        const KernelizeOptions& opt, std::ostream& out,
                        std::ostream& err) {
  if (!opt.trace_path.empty()) write_file(opt.trace_path, trace_text);
  if (opt.out_path.empty()) {
    out << kernel_text;
    err << stats_line << "\n";
  } else {
    write_file(opt.out_path, kernel_text);
    out << stats_line << "\n";
  }
}

inline void print_decided(const Decided& d, std::ostream& out) {
  out << "DECIDED " << (d.yes ? "YES" : "NO") << "\n";
  if (d.yes) out << serialize_witness(d.witness);
}

inline int run_kernelize(const KernelizeOptions& opt, std::ostream& out,
                         std::ostream& err) {
  std::string text = read_file(opt.file);
  std::ostringstream stats;
  if (opt.variant == Variant::below_m) {
    BelowMOutcome oc = kernelize_below_m({parse_hypergraph(text), opt.k});
    if (const auto* d = std::get_if<Decided>(&oc)) {
      print_decided(*d, out);
      return exit_ok;
    }
    const auto& red = std::get<Kernel<BelowMInstance, MStep>>(oc);
    stats << red.kernel.h.n() << " " << red.kernel.h.m() << " "
          << red.kernel.k << " " << below_m_bound(red.kernel.k);
    emit_kernel(serialize_hypergraph(red.kernel.h),
                serialize_trace(red.trace), stats.str(), opt, out, err);
    return exit_ok;
  }
  if (opt.variant == Variant::below_n) {
    BelowNOutcome oc = decide_or_kernel_below_n({parse_hypergraph(text), opt.k});
    if (const auto* d = std::get_if<Decided>(&oc)) {
      print_decided(*d, out);
      return exit_ok;
    }
    const auto& red = std::get<Kernel<BelowNInstance, NStep>>(oc);
    int d_kernel = degeneracy_order(red.kernel.h).degeneracy;
    stats << red.kernel.h.n() << " " << red.kernel.h.m() << " "
          << red.kernel.k << " "
          << static_cast<long long>(d_kernel + 1) * red.kernel.k - 1;
    emit_kernel(serialize_hypergraph(red.kernel.h),
                serialize_trace(red.trace), stats.str(), opt, out, err);
    return exit_ok;
  }
  NonblockerOutcome oc =
      kernelize_nonblocker({parse_digraph_warn(text, err), opt.k});
  if (const auto* d = std::get_if<Decided>(&oc)) {
    print_decided(*d, out);
    return exit_ok;
  }
  const auto& red = std::get<Kernel<NonblockerInstance, NBStep>>(oc);
  stats << red.kernel.d.n() << " " << red.kernel.d.arc_count() << " "
        << red.kernel.k << " " << 3LL * red.kernel.k - 1;
  emit_kernel(serialize_digraph(red.kernel.d), serialize_trace(red.trace),
              stats.str(), opt, out, err);
  return exit_ok;
}

inline int run_solve(Variant variant, int k, const std::string& file,
                     std::ostream& out, std::ostream& err) {
  std::string text = read_file(file);
  SolveResult result;
  bool verified = true;
  if (variant == Variant::below_m) {
    BelowMInstance inst{parse_hypergraph(text), k};
    result = solve_below_m(inst);
    if (result.yes)
      verified = verify(WitnessKind::hitting, inst.h, result.witness,
                        inst.target());
  } else if (variant == Variant::below_n) {
    BelowNInstance inst{parse_hypergraph(text), k};
    result = solve_below_n(inst);
    if (result.yes)
      verified = verify(WitnessKind::hitting, inst.h, result.witness,
                        inst.target());
  } else {
    NonblockerInstance inst{parse_digraph_warn(text, err), k};
    result = solve_nonblocker(inst);
    if (result.yes)
      verified = verify(WitnessKind::dominating, inst.d, result.witness,
                        inst.target());
  }
  if (!verified) {
    err << "internal error: solver witness failed verification\n";
    return exit_internal;
  }
  if (!result.yes) {
    out << "NO\n";
    return exit_no;
  }
  out << "YES\n" << serialize_witness(result.witness);
  return exit_ok;
}

inline int run_exact(const std::string& file, std::ostream& out,
                     std::ostream& err) {
  std::string text = read_file(file);
  bool is_digraph = false;
  for (const std::string& line : hskern::detail::content_lines(text)) {
    if (hskern::detail::is_blank(line)) continue;
    auto toks = hskern::detail::split_ws(line);
    is_digraph = toks.size() >= 2 && toks[0] == "p" && toks[1] == "dg";
    break;
  }
  ExactResult ex = is_digraph
                       ? min_dominating_set(parse_digraph_warn(text, err))
                       : min_hitting_set(parse_hypergraph(text));
  out << "optimum " << ex.optimum << "\n" << serialize_witness(ex.witness);
  return exit_ok;
}

inline int run_check(const std::string& kind, const std::string& witness_file,
                     int bound, const std::string& file, std::ostream& out,
                     std::ostream& err) {
  std::vector<int> witness = parse_witness(read_file(witness_file));
  std::string text = read_file(file);
  bool ok = false;
  if (kind == "hitting")
    ok = verify(WitnessKind::hitting, parse_hypergraph(text), witness, bound);
  else if (kind == "independent")
    ok = verify(WitnessKind::independent, parse_hypergraph(text), witness,
                bound);
  else if (kind == "dominating")
    ok = verify(WitnessKind::dominating, parse_digraph_warn(text, err), witness,
                bound);
  else
    throw ParseError("unknown witness kind '" + kind + "'");
  out << (ok ? "VALID" : "INVALID") << "\n";
  return ok ? exit_ok : exit_no;
}

inline int run_stats(const std::string& dir, Variant variant, int k,
                     const std::string& out_path, std::ostream& out,
                     std::ostream& err) {
  const std::string ext =
      variant == Variant::nonblocker ? ".dg" : ".hg";
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ext)
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "instance,n,m,k,kernel_n,kernel_m,kernel_k,bound,decision\n";
  for (const auto& path : files) {
    std::string text = read_file(path.string());
    std::string name = path.filename().string();
    if (variant == Variant::nonblocker) {
      NonblockerInstance inst{parse_digraph_warn(text, err), k};
      csv << name << "," << inst.d.n() << "," << inst.d.arc_count() << ","
          << k << ",";
      NonblockerOutcome oc = kernelize_nonblocker(inst);
      if (std::holds_alternative<Decided>(oc))
        csv << ",,,,";
      else {
        const auto& red = std::get<Kernel<NonblockerInstance, NBStep>>(oc);
        csv << red.kernel.d.n() << "," << red.kernel.d.arc_count() << ","
            << red.kernel.k << "," << 3LL * red.kernel.k - 1 << ",";
      }
      csv << (solve_nonblocker(inst).yes ? "YES" : "NO") << "\n";
    } else if (variant == Variant::below_m) {
      BelowMInstance inst{parse_hypergraph(text), k};
      csv << name << "," << inst.h.n() << "," << inst.h.m() << "," << k
          << ",";
      BelowMOutcome oc = kernelize_below_m(inst);
      if (std::holds_alternative<Decided>(oc))
        csv << ",,,,";
      else {
        const auto& red = std::get<Kernel<BelowMInstance, MStep>>(oc);
        csv << red.kernel.h.n() << "," << red.kernel.h.m() << ","
            << red.kernel.k << "," << below_m_bound(red.kernel.k) << ",";
      }
      csv << (solve_below_m(inst).yes ? "YES" : "NO") << "\n";
    } else {
      BelowNInstance inst{parse_hypergraph(text), k};
      csv << name << "," << inst.h.n() << "," << inst.h.m() << "," << k
          << ",";
      BelowNOutcome oc = decide_or_kernel_below_n(inst);
      if (std::holds_alternative<Decided>(oc))
        csv << ",,,,";
      else {
        const auto& red = std::get<Kernel<BelowNInstance, NStep>>(oc);
        int d_kernel = degeneracy_order(red.kernel.h).degeneracy;
        csv << red.kernel.h.n() << "," << red.kernel.h.m() << ","
            << red.kernel.k << ","
            << static_cast<long long>(d_kernel + 1) * red.kernel.k - 1
            << ",";
      }
      csv << (solve_below_n(inst).yes ? "YES" : "NO") << "\n";
    }
  }
  if (out_path.empty())
    out << csv.str();
  else
    write_file(out_path, csv.str());
  return exit_ok;
}

}  // namespace detail

inline int cli_main(const std::vector<std::string>& args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"Kernelization toolkit for Hitting Set below m/n and "
               "Directed Nonblocker"};
  app.require_subcommand(1);

  detail::KernelizeOptions kopt;
  std::string variant_name = "below-m";
  int k = 0;
  std::string file, out_path, trace_path, witness_file, kind, batch_dir;
  int bound = 0;

  auto* kernelize = app.add_subcommand("kernelize", "reduce an instance");
  kernelize->add_option("--variant", variant_name,
                        "below-m | below-n | nonblocker")->required();
  kernelize->add_option("-k,--param", k, "parameter k")->required();
  kernelize->add_option("file", file, "instance file")->required();
  kernelize->add_option("-o,--output", out_path, "kernel output file");
  kernelize->add_option("--trace", trace_path, "trace output file");

  auto* solve = app.add_subcommand("solve", "kernelize, solve, lift");
  solve->add_option("--variant", variant_name,
                    "below-m | below-n | nonblocker")->required();
  solve->add_option("-k,--param", k, "parameter k")->required();
  solve->add_option("file", file, "instance file")->required();

  auto* exact = app.add_subcommand("exact", "exact solve, no kernelization");
  exact->add_option("file", file, "instance file (p hg or p dg)")->required();

  auto* check = app.add_subcommand("check", "verify a witness");
  check->add_option("--kind", kind, "hitting | independent | dominating")
      ->required();
  check->add_option("--witness", witness_file, "witness file")->required();
  check->add_option("--bound", bound, "size bound")->required();
  check->add_option("file", file, "instance file")->required();

  auto* degeneracy = app.add_subcommand("degeneracy", "print deg(H)");
  degeneracy->add_option("file", file, "hypergraph file")->required();

  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  int gn = 0, gd = 0, gm = 0;
  unsigned int seed = 0;
  double prob = 0.0;
  auto* gen_hg = gen->add_subcommand("hg", "random d-degenerate hypergraph");
  gen_hg->add_option("-n", gn, "vertex count")->required();
  gen_hg->add_option("-d", gd, "degeneracy cap")->required();
  gen_hg->add_option("-m", gm, "edge count")->required();
  gen_hg->add_option("--seed", seed, "rng seed")->required();
  gen_hg->add_option("-o,--output", out_path, "output file");
  auto* gen_dg = gen->add_subcommand("dg", "random digraph");
  gen_dg->add_option("-n", gn, "vertex count")->required();
  gen_dg->add_option("--prob", prob, "arc probability")->required();
  gen_dg->add_option("--seed", seed, "rng seed")->required();
  gen_dg->add_option("-o,--output", out_path, "output file");
  auto* gen_is = gen->add_subcommand(
      "is", "independent-set reduction: graph file -> below-n instance");
  gen_is->add_option("-k,--param", k, "parameter k")->required();
  gen_is->add_option("file", file, "graph file (p dg, read undirected)")
      ->required();
  gen_is->add_option("-o,--output", out_path, "output file");

  auto* cnf = app.add_subcommand("export-cnf",
                                 "emit the all-negative-literals CNF");
  cnf->add_option("-k,--param", k, "parameter k")->required();
  cnf->add_option("file", file, "hypergraph file")->required();
  cnf->add_option("-o,--output", out_path, "output file");

  auto* stats = app.add_subcommand("stats", "batch kernelization stats CSV");
  stats->add_option("--batch", batch_dir, "instance directory")->required();
  stats->add_option("--variant", variant_name,
                    "below-m | below-n | nonblocker")->required();
  stats->add_option("-k,--param", k, "parameter k")->required();
  stats->add_option("-o,--output", out_path, "CSV output file");

  std::vector<const char*> argv;
  argv.push_back("hskern");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*kernelize) {
      kopt.variant = variant_from(variant_name);
      kopt.k = k;
      kopt.file = file;
      kopt.out_path = out_path;
      kopt.trace_path = trace_path;
      return detail::run_kernelize(kopt, out, err);
    }
    if (*solve)
      return detail::run_solve(variant_from(variant_name), k, file, out, err);
    if (*exact) return detail::run_exact(file, out, err);
    if (*check)
      return detail::run_check(kind, witness_file, bound, file, out, err);
    if (*degeneracy) {
      Hypergraph h = parse_hypergraph(read_file(file));
      out << degeneracy_order(h).degeneracy << "\n";
      return exit_ok;
    }
    if (*gen) {
      if (*gen_hg) {
        std::string text =
            serialize_hypergraph(gen_random_degenerate(gn, gd, gm, seed));
        if (out_path.empty())
          out << text;
        else
          write_file(out_path, text);
        return exit_ok;
      }
      if (*gen_dg) {
        std::string text = serialize_digraph(gen_random_digraph(gn, prob, seed));
        if (out_path.empty())
          out << text;
        else
          write_file(out_path, text);
        return exit_ok;
      }
      std::vector<std::string> warnings;
      BelowNInstance inst =
          gen_from_graph_is(parse_digraph(read_file(file), &warnings), k);
      for (const std::string& w : warnings) err << "warning: " << w << "\n";
      std::string text =
          "c k " + std::to_string(inst.k) + "\n" + serialize_hypergraph(inst.h);
      if (out_path.empty())
        out << text;
      else
        write_file(out_path, text);
      return exit_ok;
    }
    if (*cnf) {
      std::string text =
          export_cnf(BelowNInstance{parse_hypergraph(read_file(file)), k});
      if (out_path.empty())
        out << text;
      else
        write_file(out_path, text);
      return exit_ok;
    }
    if (*stats)
      return detail::run_stats(batch_dir, variant_from(variant_name), k,
                               out_path, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  err << "no subcommand given\n";
  return exit_usage;
}

}  // namespace hskern::cli
