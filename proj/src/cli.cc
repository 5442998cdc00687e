// Copyright 2026 The yfree Authors
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


#include "yfree/cli.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "yfree/canonical.h"
#include "yfree/certificate.h"
#include "yfree/certificate_json.h"
#include "yfree/enumerator.h"
#include "yfree/generator.h"
#include "yfree/graph.h"
#include "yfree/graph_io.h"
#include "yfree/pathdecomp.h"
#include "yfree/prooflab.h"
#include "yfree/recognizer.h"

namespace yfree::cli {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Malformed input or arguments the parser could not catch.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadSource(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

std::vector<Graph> ParseGraphs(const std::string& text,
                               const std::string& format) {
  if (format == "edges") return {ParseEdgeList(text)};
  return ParseGraph6Lines(text);
}

Graph ParseOneGraph(const std::string& text, const std::string& format) {
  std::vector<Graph> graphs = ParseGraphs(text, format);
  if (graphs.size() != 1) {
    throw InputError("expected exactly one graph, found " +
                     std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

void WriteText(const std::string& path, const std::string& text,
               std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
}

json WitnessToJson(const YWitness& w) {
  return json{{"center", w.center}, {"mids", w.mids}, {"ends", w.ends}};
}

// ----------------------------------------------------------------- check

struct CheckArgs {
  std::string format = "graph6";
  std::string input = "-";
};

int RunCheck(const CheckArgs& args, std::istream& in, std::ostream& out) {
  const std::vector<Graph> graphs =
      ParseGraphs(ReadSource(args.input, in), args.format);
  bool any_y = false;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    const std::vector<std::vector<Vertex>> components = ConnectedComponents(g);
    for (const std::vector<Vertex>& comp : components) {
      const RecognitionResult result = Recognize(g.Induced(comp));
      json line;
      if (result.contains_y()) {
        any_y = true;
        line["verdict"] = "contains-Y";
        line["witness"] = WitnessToJson(result.witness());
      } else {
        line["verdict"] = "Y-free";
        line["certificate"] = CertificateToJson(result.certificate());
      }
      if (components.size() > 1) line["vertices"] = comp;
      if (graphs.size() > 1) line["graph"] = gi;
      out << line.dump() << '\n';
    }
  }
  return any_y ? kNegative : kOk;
}

// ----------------------------------------------------------- cert-verify

struct CertVerifyArgs {
  std::string cert;
  std::string graph;
  std::string format = "graph6";
};

int RunCertVerify(const CertVerifyArgs& args, std::istream& in,
                  std::ostream& out) {
  if (args.cert == "-" && args.graph == "-") {
    throw InputError("certificate and graph cannot both come from stdin");
  }
  const Certificate cert = ParseCertificate(ReadSource(args.cert, in));
  const Graph g = ParseOneGraph(ReadSource(args.graph, in), args.format);
  if (VerifyCertificate(cert, g)) {
    out << "ok\n";
    return kOk;
  }
  const std::vector<Violation> violations = ValidateProgram(cert);
  if (!violations.empty()) {
    out << "invalid certificate: " << DescribeViolations(violations) << '\n';
  } else if (cert.n != g.order()) {
    out << "order mismatch: certificate " << cert.n << ", graph "
        << g.order() << '\n';
  } else {
    out << "edge sets differ\n";
  }
  return kNegative;
}

// ------------------------------------------------------------------- gen

struct GenArgs {
  std::uint64_t seed = 0;
  int n = 0;
  bool strand = false;
  bool necklace = false;
  bool kernel = false;
  bool no_k4 = false;
  int max_t = GeneratorParams{}.max_t;
  int max_spikes = GeneratorParams{}.max_spikes;
  std::vector<std::uint64_t> thick_caterpillar;
  std::string cert_out = "yfree-gen.cert.json";
};

int RunGen(const GenArgs& args, std::ostream& out) {
  Certificate cert;
  if (!args.thick_caterpillar.empty()) {
    const std::uint64_t spine = args.thick_caterpillar[0];
    if (spine > 62) throw InputError("thick caterpillar spine must be <= 62");
    cert = ThickCaterpillarCertificate(static_cast<int>(spine),
                                       args.thick_caterpillar[1]);
  } else {
    if (args.n < 1) throw InputError("gen needs --n N with N >= 1");
    GeneratorParams params;
    params.n_target = args.n;
    params.shape = args.strand     ? Shape::kStrand
                   : args.necklace ? Shape::kNecklace
                   : args.kernel   ? Shape::kKernel
                                   : Shape::kAny;
    params.allow_k4 = !args.no_k4;
    params.max_t = args.max_t;
    params.max_spikes = args.max_spikes;
    cert = RandomCertificate(args.seed, params);
  }
  out << EmitGraph6(Realize(cert)) << '\n';
  WriteText(args.cert_out, SerializeCertificate(cert) + "\n", out);
  return kOk;
}

// ------------------------------------------------------------------ enum

struct EnumArgs {
  int max_n = 0;
  bool oracle_census = false;
  bool csv = false;
  bool json_output = false;
  int jobs = 1;
};

std::string FormatGrowth(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

int RunEnum(const EnumArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < 1 || args.max_n > kEnumerationBound) {
    throw InputError("--max-n must lie in [1, " +
                     std::to_string(kEnumerationBound) + "]");
  }
  if (args.oracle_census && args.max_n > kOracleCensusBound) {
    throw InputError("--oracle-census needs --max-n <= " +
                     std::to_string(kOracleCensusBound));
  }
  if (args.jobs < 1) throw InputError("--jobs must be positive");
  std::vector<CensusRow> rows = GrowthEstimate(args.max_n);
  int status = kOk;
  if (args.oracle_census) {
    for (CensusRow& row : rows) {
      const OracleCensus census = RunOracleCensus(row.n, args.jobs);
      row.unlabeled_connected = census.unlabeled_connected;
      if (census.yfree_forms != EnumerateYFree(row.n) ||
          BigInt(census.labeled_yfree) != row.labeled_yfree) {
        err << "census disagrees with the enumeration at n = " << row.n
            << '\n';
        status = kNegative;
      }
    }
  }

  if (args.json_output) {
    json doc = json::array();
    for (const CensusRow& row : rows) {
      json entry;
      entry["n"] = row.n;
      entry["connected"] = row.unlabeled_connected
                               ? json(*row.unlabeled_connected)
                               : json(nullptr);
      entry["yfree"] = row.unlabeled_yfree;
      entry["labeled_yfree"] = row.labeled_yfree.convert_to<std::uint64_t>();
      entry["growth_point"] = row.growth_point;
      doc.push_back(entry);
    }
    out << doc.dump() << '\n';
  } else if (args.csv) {
    out << "n,connected,yfree,labeled_yfree,growth_point\n";
    for (const CensusRow& row : rows) {
      out << row.n << ','
          << (row.unlabeled_connected
                  ? std::to_string(*row.unlabeled_connected)
                  : std::string())
          << ',' << row.unlabeled_yfree << ',' << row.labeled_yfree << ','
          << FormatGrowth(row.growth_point) << '\n';
    }
  } else {
    out << std::setw(3) << "n" << std::setw(11) << "connected"
        << std::setw(8) << "yfree" << std::setw(15) << "labeled_yfree"
        << std::setw(14) << "growth_point" << '\n';
    for (const CensusRow& row : rows) {
      out << std::setw(3) << row.n << std::setw(11)
          << (row.unlabeled_connected
                  ? std::to_string(*row.unlabeled_connected)
                  : std::string("-"))
          << std::setw(8) << row.unlabeled_yfree << std::setw(15)
          << row.labeled_yfree.str() << std::setw(14)
          << FormatGrowth(row.growth_point) << '\n';
    }
  }
  return status;
}

// ------------------------------------------------------------- pathdecomp

struct PathDecompArgs {
  std::string graph;
  std::string cert;
  std::string format = "graph6";
};

int RunPathDecomp(const PathDecompArgs& args, std::istream& in,
                  std::ostream& out) {
  const Graph g = ParseOneGraph(ReadSource(args.graph, in), args.format);
  Certificate cert;
  if (!args.cert.empty()) {
    cert = ParseCertificate(ReadSource(args.cert, in));
    if (!VerifyCertificate(cert, g)) {
      out << "certificate does not describe the graph\n";
      return kNegative;
    }
  } else {
    const RecognitionResult result = Recognize(g);
    if (result.contains_y()) {
      out << json{{"verdict", "contains-Y"},
                  {"witness", WitnessToJson(result.witness())}}
                 .dump()
          << '\n';
      return kNegative;
    }
    cert = result.certificate();
  }
  const PathDecomposition pd = Decompose(cert);
  const DecompositionReport report = VerifyDecomposition(g, pd);
  if (!report.ok()) {
    out << "decomposition rejected: " << DescribeViolations(report.violations)
        << '\n';
    return kNegative;
  }
  out << json{{"bags", pd.bags}, {"width", *report.width}}.dump() << '\n';
  return kOk;
}

// -------------------------------------------------------------- prooflab

struct ProofLabArgs {
  std::string graph;
  std::string format = "graph6";
};

int RunProofLab(const ProofLabArgs& args, std::istream& in,
                std::ostream& out) {
  const Graph g = ParseOneGraph(ReadSource(args.graph, in), args.format);
  const LemmaReport report = CheckStructuralLemmas(g);
  json lemmas = json::array();
  for (const LemmaResult& r : report.lemmas) {
    json entry{{"id", r.id},
               {"status", LemmaStatusName(r.status)},
               {"paths_checked", r.paths_checked}};
    if (!r.witness.empty()) entry["witness"] = r.witness;
    lemmas.push_back(entry);
  }
  out << json{{"path_length", report.path_length},
              {"paths", report.paths},
              {"lemmas", lemmas}}
             .dump()
      << '\n';
  return report.all_passed() ? kOk : kNegative;
}

void AddFormat(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Graph encoding")
      ->check(CLI::IsMember({"graph6", "edges"}))
      ->capture_default_str();
}

}  // namespace

int Run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize, certify, generate and count Y-free graphs", "yfree"};
  app.require_subcommand(1);

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Recognize each connected component of each input graph");
  AddFormat(check_cmd, check.format);
  check_cmd->add_option("input", check.input, "Graph file, '-' for stdin")
      ->capture_default_str();

  CertVerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "cert-verify", "Check that a certificate describes a graph exactly");
  verify_cmd->add_option("cert", verify.cert, "Certificate JSON")->required();
  verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
  AddFormat(verify_cmd, verify.format);

  GenArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Generate a Y-free graph and its certificate");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  CLI::Option* gen_n = gen_cmd->add_option("--n", gen.n, "Number of vertices");
  CLI::Option* strand = gen_cmd->add_flag("--strand", gen.strand);
  CLI::Option* necklace = gen_cmd->add_flag("--necklace", gen.necklace);
  CLI::Option* kernel = gen_cmd->add_flag("--kernel", gen.kernel);
  strand->excludes(necklace, kernel);
  necklace->excludes(kernel);
  gen_cmd->add_flag("--no-k4", gen.no_k4, "Never use K4 beads");
  gen_cmd->add_option("--max-t", gen.max_t, "Most secondaries in one bead")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_option("--max-spikes", gen.max_spikes, "Most spikes per primary")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  CLI::Option* thick =
      gen_cmd
          ->add_option("--thick-caterpillar", gen.thick_caterpillar,
                       "SPINE MASK: spine path plus a triangle on each "
                       "masked spine edge")
          ->expected(2);
  thick->excludes(gen_n, strand, necklace, kernel);
  gen_cmd->add_option("--cert-out", gen.cert_out,
                      "Where the certificate JSON goes, '-' for stdout")
      ->capture_default_str();

  EnumArgs enumerate;
  CLI::App* enum_cmd =
      app.add_subcommand("enum", "Count connected Y-free graphs by order");
  enum_cmd->add_option("--max-n", enumerate.max_n, "Largest order")
      ->required();
  enum_cmd->add_flag("--oracle-census", enumerate.oracle_census,
                     "Also test every labeled graph with the Y oracle");
  CLI::Option* csv = enum_cmd->add_flag("--csv", enumerate.csv);
  CLI::Option* as_json = enum_cmd->add_flag("--json", enumerate.json_output);
  csv->excludes(as_json);
  enum_cmd->add_option("--jobs", enumerate.jobs, "Census worker threads")
      ->capture_default_str();

  PathDecompArgs decomp;
  CLI::App* decomp_cmd = app.add_subcommand(
      "pathdecomp", "Path decomposition of a Y-free graph");
  decomp_cmd->add_option("graph", decomp.graph, "Graph file")->required();
  decomp_cmd->add_option("--cert", decomp.cert,
                         "Certificate JSON (recognized when absent)");
  AddFormat(decomp_cmd, decomp.format);

  CLI::App* delta_cmd =
      app.add_subcommand("delta", "Growth constant of the family");

  ProofLabArgs lab;
  CLI::App* lab_cmd = app.add_subcommand(
      "prooflab", "Longest-path structure checks on a Y-free graph");
  lab_cmd->add_option("graph", lab.graph, "Graph file")->required();
  AddFormat(lab_cmd, lab.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check_cmd) return RunCheck(check, in, out);
    if (*verify_cmd) return RunCertVerify(verify, in, out);
    if (*gen_cmd) return RunGen(gen, out);
    if (*enum_cmd) return RunEnum(enumerate, out, err);
    if (*decomp_cmd) return RunPathDecomp(decomp, in, out);
    if (*delta_cmd) {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.10f", SolveDelta().delta);
      out << buffer << '\n';
      return kOk;
    }
    if (*lab_cmd) return RunProofLab(lab, in, out);
  } catch (const std::exception& e) {
    err << "yfree: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace yfree::cli
