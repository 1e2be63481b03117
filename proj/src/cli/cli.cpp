// Copyright 2026 The vlab Authors
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

#include "vlab/cli/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vlab/bestapprox/search.hpp"
#include "vlab/bestapprox/serialize.hpp"
#include "vlab/bounds/bounds.hpp"
#include "vlab/error.hpp"
#include "vlab/paramgeom/graph.hpp"
#include "vlab/polyalg/polyalg.hpp"
#include "vlab/verify/verify.hpp"

namespace vlab {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  long precision = kDefaultPrecisionBits;
  int jobs = 0;
  std::string format = "text";
  std::string out;
};

// Source of a sequence: a JSON file or a fresh search.
struct SeqInput {
  std::string seq_file;
  std::string xi;
  int n = 0;
  long max_height = 0;
};

void AddSeqInput(CLI::App* cmd, SeqInput& in, bool file_allowed) {
  if (file_allowed) {
    cmd->add_option("--seq", in.seq_file, "Sequence JSON written by 'sequence'");
  }
  cmd->add_option("--xi", in.xi,
                  "Real number: sqrt:K, cbrt:K, root:K:J, dec:<digits>, rat:P/Q, "
                  "const:e|pi|ln2, cf:a0,a1,...");
  cmd->add_option("--n", in.n, "Degree bound n >= 1")->check(CLI::Range(1, 64));
  cmd->add_option("--max-height", in.max_height,
                  "Search height limit (default depends on n: 10000, 500, 60, 25, 12)")
      ->check(CLI::PositiveNumber);
}

using FormatTable = std::map<const CLI::App*, std::vector<std::string>>;

void AddOutput(CLI::App* cmd, Common& c, std::vector<std::string> formats,
               FormatTable& table) {
  table[cmd] = formats;
  cmd->add_option("--format", c.format,
                  "Output format (default: from the --out extension, else text)")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write the result to this file instead of stdout");
}

SequenceData LoadOrSearch(const SeqInput& in, const Common& c) {
  if (!in.seq_file.empty()) {
    if (!in.xi.empty() || in.n != 0 || in.max_height != 0) {
      throw UsageError("--seq cannot be combined with --xi, --n or --max-height");
    }
    std::ifstream file(in.seq_file);
    if (!file) {
      throw Error(ErrorCode::kInvalidArgument, "cannot read " + in.seq_file);
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    return SequenceFromJson(buffer.str());
  }
  if (in.xi.empty() || in.n == 0) {
    throw UsageError("need --xi and --n (or --seq)");
  }
  SearchOptions options;
  options.precision_bits = c.precision;
  const long h = in.max_height > 0 ? in.max_height : DefaultHeightLimit(in.n);
  SequenceData seq = BestApproxSequence(RealSource(RealSpec::Parse(in.xi)), in.n, h,
                                        options);
  AnnotateGoodness(seq);
  return seq;
}

void Emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file || !(file << text)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + c.out);
  }
}

long PrecisionFromEnvironment() {
  const char* env = std::getenv("VLAB_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 16 || bits > 1 << 20) {
    throw UsageError(std::string("VLAB_PRECISION_BITS must be an integer in [16, 1048576], got ") + env);
  }
  return bits;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Common c;
  CLI::App app{"Best polynomial approximation records, bounds tables and checks", "vlab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<long> precision;
  app.add_option("--precision", precision,
                 "Working precision in bits (default: $VLAB_PRECISION_BITS or 128)")
      ->check(CLI::Range(16L, 1L << 20));
  app.add_option("--jobs", c.jobs, "Maximum worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  FormatTable formats;
  int n_min = 2, n_max = 9;
  CLI::App* bounds = app.add_subcommand("bounds", "Table of beta_n, alpha_n, gamma_n, rho_n");
  bounds->add_option("--n-min", n_min, "Smallest n")->check(CLI::Range(2, 1000))->capture_default_str();
  bounds->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(2, 1000))->capture_default_str();
  AddOutput(bounds, c, {"text", "csv", "json"}, formats);

  SeqInput seq_in;
  CLI::App* sequence = app.add_subcommand("sequence", "Best approximation polynomials up to a height");
  AddSeqInput(sequence, seq_in, false);
  AddOutput(sequence, c, {"text", "csv", "json"}, formats);

  SeqInput graph_in;
  std::string mode = "exact", frame;
  GraphOptions graph_options;
  std::string trajectory_out;
  CLI::App* graph = app.add_subcommand("graph", "Successive minima of the combined graph");
  AddSeqInput(graph, graph_in, true);
  graph->add_option("--mode", mode, "exact: lattice enumeration; pool: records and their T-multiples")
      ->check(CLI::IsMember({"exact", "pool"}))->capture_default_str();
  graph->add_option("--frame", frame,
                    "original or shifted (xi minus its floor); default shifted for pool, original for exact")
      ->check(CLI::IsMember({"original", "shifted"}));
  graph->add_option("--q-max", graph_options.q_max, "Largest q (default: last meeting point, at least 4)")
      ->check(CLI::NonNegativeNumber);
  graph->add_option("--q0", graph_options.q0, "First grid point")->check(CLI::PositiveNumber)->capture_default_str();
  graph->add_option("--ratio", graph_options.ratio, "Grid ratio")->check(CLI::Range(1.0001, 100.0))->capture_default_str();
  graph->add_option("--budget", graph_options.minima.budget, "Enumeration node budget per q")
      ->check(CLI::PositiveNumber)->capture_default_str();
  graph->add_option("--trajectory-out", trajectory_out, "Also write per-trajectory CSV (k, q, L_P) here");
  AddOutput(graph, c, {"text", "csv", "json", "svg"}, formats);

  SeqInput verify_in;
  VerifyOptions verify_options;
  bool no_minima = false;
  CLI::App* verify = app.add_subcommand("verify", "Margins of every inequality and identity on a sequence");
  AddSeqInput(verify, verify_in, true);
  verify->add_option("--slack", verify_options.slack, "Slack for asymptotic inequalities")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  verify->add_option("--tail-fraction", verify_options.tail_fraction,
                     "Fraction of records used for exponent proxies")
      ->check(CLI::Range(0.01, 1.0))->capture_default_str();
  verify->add_flag("--no-minima", no_minima, "Skip successive minima at the meeting points");
  verify->add_option("--budget", verify_options.minima.budget, "Enumeration node budget per q")
      ->check(CLI::PositiveNumber)->capture_default_str();
  AddOutput(verify, c, {"text", "json"}, formats);

  std::string oracle_xi;
  int oracle_n = 0;
  long oracle_height = 0;
  CLI::App* oracle = app.add_subcommand("oracle", "Brute force minimiser of |P(xi)| at one height");
  oracle->add_option("--xi", oracle_xi, "Real number spec")->required();
  oracle->add_option("--n", oracle_n, "Degree bound")->required()->check(CLI::Range(1, 64));
  oracle->add_option("--height", oracle_height, "Height bound H")->required()->check(CLI::PositiveNumber);
  AddOutput(oracle, c, {"text", "json"}, formats);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'vlab --help' for usage\n";
    return kExitUsage;
  }

  try {
    c.precision = precision ? *precision : PrecisionFromEnvironment();
    for (CLI::App* sub : app.get_subcommands()) {
      if (sub->count("--format") > 0 || c.out.empty()) continue;
      // Take the format from the output file extension when the command can
      // write it.
      const auto dot = c.out.rfind('.');
      if (dot == std::string::npos) continue;
      const std::string ext = c.out.substr(dot + 1);
      const auto& allowed = formats[sub];
      if (std::find(allowed.begin(), allowed.end(), ext) != allowed.end()) c.format = ext;
    }
    if (c.jobs > 0) omp_set_num_threads(c.jobs);

    if (bounds->parsed()) {
      if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");
      const TableFormat f = c.format == "csv"    ? TableFormat::kCsv
                            : c.format == "json" ? TableFormat::kJson
                                                 : TableFormat::kText;
      Emit(c, FormatBoundsTable(BoundsTable(n_min, n_max), f), out);
    } else if (sequence->parsed()) {
      const SequenceData seq = LoadOrSearch(seq_in, c);
      const std::string text = c.format == "json"  ? SequenceToJson(seq)
                               : c.format == "csv" ? FormatSequenceCsv(seq)
                                                   : FormatSequenceText(seq);
      Emit(c, text, out);
    } else if (graph->parsed()) {
      SequenceData seq = LoadOrSearch(graph_in, c);
      graph_options.mode = mode == "pool" ? MinimaMode::kPool : MinimaMode::kExact;
      const bool shifted = frame.empty() ? graph_options.mode == MinimaMode::kPool
                                         : frame == "shifted";
      if (shifted && seq.shift == 0) {
        SearchOptions so;
        so.precision_bits = seq.precision_bits;
        seq = ShiftToUnitInterval(seq, so);
      } else if (!shifted && seq.shift != 0) {
        throw UsageError("the sequence is stored in a shifted frame; --frame original needs an unshifted one");
      }
      const GraphData g = BuildGraph(seq, graph_options);
      if (!trajectory_out.empty()) {
        Common t = c;
        t.out = trajectory_out;
        Emit(t, FormatTrajectoryCsv(seq, g), out);
      }
      std::string text;
      if (c.format == "json") {
        text = FormatGraphJson(seq, g);
      } else if (c.format == "svg") {
        text = RenderGraphSvg(seq, g);
      } else if (c.format == "csv") {
        text = FormatMinimaCsv(g);
      } else {
        text = "# " + seq.xi_spec.ToString() + ", n=" + std::to_string(seq.n) + ", " +
               MinimaModeName(g.mode) + " minima, " + g.frame + "\n" + FormatMinimaCsv(g);
      }
      Emit(c, text, out);
    } else if (verify->parsed()) {
      const SequenceData seq = LoadOrSearch(verify_in, c);
      verify_options.with_minima = !no_minima;
      const VerifyReport report = FullReport(seq, verify_options);
      Emit(c, c.format == "json" ? FormatReportJson(report) : FormatReportText(report), out);
    } else if (oracle->parsed()) {
      const RealSource source(RealSpec::Parse(oracle_xi));
      const MinPolyResult r = MinPolyAtHeight(source, oracle_n, oracle_height);
      if (c.format == "json") {
        nlohmann::ordered_json j;
        j["xi"] = source.spec().ToString();
        j["n"] = oracle_n;
        j["height"] = oracle_height;
        auto coeffs = nlohmann::ordered_json::array();
        for (int i = 0; i <= r.poly.degree(); ++i) coeffs.push_back(r.poly.coefficient(i).get_str());
        j["coeffs"] = coeffs;
        j["poly_height"] = r.poly.Height().get_str();
        j["abs_value"] = {{"mid", r.abs_value.MidString(30)}, {"rad", r.abs_value.RadString(30)}};
        Emit(c, j.dump(2) + "\n", out);
      } else {
        Emit(c, r.poly.ToString() + "\theight " + r.poly.Height().get_str() + "\t|P(xi)| = " +
                    r.abs_value.MidString(20) + "\n", out);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (c.format == "json") {
      nlohmann::ordered_json j;
      j["error"] = {{"code", std::string(e.name())}, {"message", e.what()}};
      err << j.dump() << "\n";
    } else {
      err << "error: " << e.name() << ": " << e.what() << "\n";
    }
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace vlab
