// Copyright 2026 The iasilab Authors
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

// Command-line front end. Links against the C interface only.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iasi/iasi.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kRejected = 2, kCapacity = 3 };

// Thrown after a diagnostic has been written; carries the exit code.
struct Exit {
  int code;
};

int exit_code_for(iasi_status s) {
  switch (s) {
    case IASI_OK: return kOk;
    case IASI_ERR_NOT_SUBGRAPH:
    case IASI_ERR_NOT_INDEPENDENT:
    case IASI_ERR_NOT_IASI: return kRejected;
    case IASI_ERR_CAPACITY_EXCEEDED:
    case IASI_ERR_TOO_LARGE: return kCapacity;
    default: return kUsage;
  }
}

void check(iasi_status s) {
  if (s == IASI_OK) return;
  std::cerr << "iasi: " << iasi_last_error_message() << "\n";
  throw Exit{exit_code_for(s)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "iasi: " << message << "\n";
  throw Exit{kUsage};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<iasi_graph, Deleter<iasi_graph, iasi_graph_free>>;
using LabelingPtr = std::unique_ptr<iasi_labeling, Deleter<iasi_labeling, iasi_labeling_free>>;
using ReportPtr = std::unique_ptr<iasi_verify_report, Deleter<iasi_verify_report, iasi_verify_report_free>>;
using ResultPtr = std::unique_ptr<iasi_sparing_result, Deleter<iasi_sparing_result, iasi_sparing_result_free>>;
using AuditPtr = std::unique_ptr<iasi_audit_report, Deleter<iasi_audit_report, iasi_audit_report_free>>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out(s);
  iasi_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) usage_error("cannot write " + path);
  out << data;
}

GraphPtr load_graph(const std::string& path) {
  iasi_graph* g = nullptr;
  check(iasi_graph_from_json(read_input(path).c_str(), &g));
  return GraphPtr(g);
}

LabelingPtr load_labeling(const std::string& path) {
  iasi_labeling* f = nullptr;
  check(iasi_labeling_from_json(read_input(path).c_str(), &f));
  return LabelingPtr(f);
}

bool same_file(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty() || a == "-" || b == "-") return false;
  std::error_code ec;
  if (std::filesystem::exists(a, ec) && std::filesystem::exists(b, ec)) {
    return std::filesystem::equivalent(a, b, ec);
  }
  return std::filesystem::absolute(a, ec).lexically_normal() ==
         std::filesystem::absolute(b, ec).lexically_normal();
}

// Rejects an output that would overwrite an input or another output.
void reject_collisions(const std::vector<std::string>& inputs, const std::vector<std::string>& outputs) {
  int stdin_uses = 0;
  for (const auto& in : inputs) stdin_uses += in == "-";
  if (stdin_uses > 1) usage_error("standard input can be used for only one argument");
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    for (const auto& in : inputs) {
      if (same_file(outputs[i], in)) usage_error("output " + outputs[i] + " would overwrite an input");
    }
    for (std::size_t j = i + 1; j < outputs.size(); ++j) {
      if (same_file(outputs[i], outputs[j])) usage_error("output path " + outputs[i] + " given twice");
    }
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct AuditOutputs {
  std::string csv;
  std::string md;
  std::string archive;
  bool timing = false;
  unsigned jobs = 1;
};

void add_audit_outputs(CLI::App* cmd, AuditOutputs& o, bool with_archive) {
  cmd->add_option("--csv", o.csv, "Write the CSV report here (default: standard output)");
  cmd->add_option("--md", o.md, "Write the Markdown report here");
  cmd->add_flag("--timing", o.timing, "Record measured runtimes instead of 0");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  if (with_archive) cmd->add_option("--archive", o.archive, "Directory for counterexample JSON files");
}

void emit_audit(iasi_audit_report* report, const AuditOutputs& o) {
  reject_collisions({}, {o.csv, o.md});
  char* csv = nullptr;
  check(iasi_audit_report_to_csv(report, o.timing ? 1 : 0, &csv));
  std::string csv_text = take(csv);
  if (!o.csv.empty() || o.md.empty()) write_output(o.csv, csv_text);
  if (!o.md.empty()) {
    char* md = nullptr;
    check(iasi_audit_report_to_markdown(report, &md));
    write_output(o.md, take(md));
  }
  if (!o.archive.empty()) {
    size_t written = 0;
    check(iasi_audit_report_archive(report, o.archive.c_str(), &written));
    std::cerr << "iasi: archived " << written << " counterexample(s) in " << o.archive << "\n";
  }
  std::cerr << "iasi: " << iasi_audit_report_row_count(report) << " rows, "
            << iasi_audit_report_mismatch_count(report) << " mismatches\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Weak integer additive set-indexers: graphs, sparing numbers, labelings, audits", "iasi"};
  app.require_subcommand(1);
  const std::string version = std::string("iasi ") + iasi_version();
  app.set_version_flag("--version", version);
  auto subcommand = [&](const char* name, const char* about) {
    auto* cmd = app.add_subcommand(name, about);
    cmd->set_version_flag("--version", version);
    return cmd;
  };

  // gen
  std::string family;
  std::optional<int64_t> m_param, n_param, len_param;
  std::string out_path;
  auto* gen = subcommand("gen", "Generate a graph family member as graph JSON");
  gen->add_option("family", family,
                  "path, cycle, complete, trivial, wheel, fan, cone, tent, friendship, "
                  "path_friendship, closed_friendship, windmill")
      ->required();
  gen->add_option("--m", m_param, "Family parameter m");
  gen->add_option("--n", n_param, "Family parameter n");
  gen->add_option("--len", len_param, "Path length in edges (path family)");
  gen->add_option("-o,--output", out_path, "Output file (default: standard output)");

  // op
  std::string op_name, input_a, input_b;
  auto* op = subcommand("op", "Apply a binary graph operation");
  op->add_option("operation", op_name, "union, intersect, join, ringsum or subtract")
      ->required()
      ->check(CLI::IsMember({"union", "intersect", "join", "ringsum", "subtract"}));
  op->add_option("a", input_a, "First graph JSON ('-' for standard input)")->required();
  op->add_option("b", input_b, "Second graph JSON ('-' for standard input)")->required();
  op->add_option("-o,--output", out_path, "Output file");

  // sparing
  std::string graph_path, algorithm = "auto";
  bool with_labeling = false, canonical = false;
  std::size_t exhaustive_cap = 0;
  auto* sp = subcommand("sparing", "Compute the sparing number exactly");
  sp->add_option("graph", graph_path, "Graph JSON ('-' for standard input)")->required();
  sp->add_option("--algorithm", algorithm, "auto, exhaustive or bb")
      ->check(CLI::IsMember({"auto", "exhaustive", "bb"}));
  sp->add_flag("--with-labeling", with_labeling, "Attach a verified weak IASI realising the optimum");
  sp->add_flag("--canonical-witness", canonical, "Lexicographically smallest optimal witness (bb)");
  sp->add_option("--exhaustive-cap", exhaustive_cap, "Vertex limit for exhaustive enumeration");
  sp->add_option("-o,--output", out_path, "Output file");

  // label
  std::string support_list;
  auto* label = subcommand("label", "Construct a weak IASI for a given support");
  label->add_option("graph", graph_path, "Graph JSON ('-' for standard input)")->required();
  label->add_option("--support", support_list, "Comma-separated independent vertex set")->required();
  label->add_option("-o,--output", out_path, "Output file");

  // verify
  std::string labeling_path;
  auto* ver = subcommand("verify", "Classify a labeling (exit 2 if it is not an IASI)");
  ver->add_option("graph", graph_path, "Graph JSON")->required();
  ver->add_option("labeling", labeling_path, "Labeling JSON")->required();
  ver->add_option("-o,--output", out_path, "Output file");

  // audit
  auto* audit = subcommand("audit", "Compare closed forms against the exact solver");
  audit->require_subcommand(1);
  AuditOutputs fam_out, id_out, rc_out;
  std::size_t max_vertices = 12;
  std::string family_filter;
  auto* fam = audit->add_subcommand("families", "Sweep every family formula");
  fam->set_version_flag("--version", version);
  fam->add_option("--max-vertices", max_vertices, "Largest instance, in vertices");
  fam->add_option("--families", family_filter, "Comma-separated subset of family formulas");
  add_audit_outputs(fam, fam_out, true);

  std::size_t trials = 200;
  std::uint64_t seed = 20260101;
  auto* ids = audit->add_subcommand("identities", "Audit the union, ring sum and complement identities");
  ids->set_version_flag("--version", version);
  ids->add_option("--trials", trials, "Random instances per identity");
  ids->add_option("--seed", seed, "Base seed; trial t uses seed + t");
  add_audit_outputs(ids, id_out, true);

  std::size_t max_cycle = 10;
  auto* rc = audit->add_subcommand("ringsum-cycles", "Audit ring sums of two overlapping cycles");
  rc->set_version_flag("--version", version);
  rc->add_option("--max-cycle", max_cycle, "Largest cycle length")->check(CLI::Range(3, 12));
  add_audit_outputs(rc, rc_out, true);

  // export-dot
  auto* dot = subcommand("export-dot", "Render a graph (and optional labeling) as Graphviz DOT");
  dot->add_option("graph", graph_path, "Graph JSON")->required();
  dot->add_option("labeling", labeling_path, "Labeling JSON");
  dot->add_option("-o,--output", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (gen->parsed()) {
    int64_t m = m_param.value_or(0);
    int64_t n = n_param.value_or(0);
    if (family == "path") {
      if (len_param && n_param) usage_error("give the path length once (--len or --n)");
      if (len_param) n = *len_param;
    } else if (len_param) {
      usage_error("--len only applies to the path family");
    }
    iasi_graph* g = nullptr;
    check(iasi_graph_generate(family.c_str(), m, n, &g));
    GraphPtr owned(g);
    char* json = nullptr;
    check(iasi_graph_to_json(g, &json));
    write_output(out_path, take(json));
    return kOk;
  }

  if (op->parsed()) {
    reject_collisions({input_a, input_b}, {out_path});
    auto a = load_graph(input_a);
    auto b = load_graph(input_b);
    iasi_graph_op which = IASI_OP_UNION;
    if (op_name == "intersect") which = IASI_OP_INTERSECTION;
    if (op_name == "join") which = IASI_OP_JOIN;
    if (op_name == "ringsum") which = IASI_OP_RING_SUM;
    if (op_name == "subtract") which = IASI_OP_SUBTRACT;
    iasi_graph* g = nullptr;
    check(iasi_graph_apply(which, a.get(), b.get(), &g));
    GraphPtr owned(g);
    char* json = nullptr;
    check(iasi_graph_to_json(g, &json));
    write_output(out_path, take(json));
    return kOk;
  }

  if (sp->parsed()) {
    reject_collisions({graph_path}, {out_path});
    auto g = load_graph(graph_path);
    iasi_sparing_options opts;
    iasi_sparing_options_init(&opts);
    if (algorithm == "exhaustive") opts.algorithm = IASI_ALGORITHM_EXHAUSTIVE;
    if (algorithm == "bb") opts.algorithm = IASI_ALGORITHM_BRANCH_BOUND;
    opts.with_labeling = with_labeling ? 1 : 0;
    opts.canonical_witness = canonical ? 1 : 0;
    opts.exhaustive_cap = exhaustive_cap;
    iasi_sparing_result* r = nullptr;
    check(iasi_sparing(g.get(), &opts, &r));
    ResultPtr owned(r);
    char* json = nullptr;
    check(iasi_sparing_result_to_json(r, &json));
    write_output(out_path, take(json));
    return kOk;
  }

  if (label->parsed()) {
    reject_collisions({graph_path}, {out_path});
    auto g = load_graph(graph_path);
    auto names = split_commas(support_list);
    std::vector<const char*> ptrs;
    for (const auto& s : names) ptrs.push_back(s.c_str());
    iasi_labeling* f = nullptr;
    check(iasi_construct_weak_iasi(g.get(), ptrs.data(), ptrs.size(), &f));
    LabelingPtr owned(f);
    char* json = nullptr;
    check(iasi_labeling_to_json(f, &json));
    write_output(out_path, take(json));
    return kOk;
  }

  if (ver->parsed()) {
    reject_collisions({graph_path, labeling_path}, {out_path});
    auto g = load_graph(graph_path);
    auto f = load_labeling(labeling_path);
    iasi_verify_report* r = nullptr;
    check(iasi_verify(g.get(), f.get(), &r));
    ReportPtr owned(r);
    char* json = nullptr;
    check(iasi_verify_report_to_json(r, &json));
    write_output(out_path, take(json));
    return iasi_verify_report_is_iasi(r) ? kOk : kRejected;
  }

  if (fam->parsed()) {
    iasi_audit_report* r = nullptr;
    check(iasi_audit_families(max_vertices, family_filter.empty() ? nullptr : family_filter.c_str(),
                              fam_out.jobs, &r));
    AuditPtr owned(r);
    emit_audit(r, fam_out);
    return kOk;
  }
  if (ids->parsed()) {
    iasi_audit_report* r = nullptr;
    check(iasi_audit_identities(trials, seed, id_out.jobs, &r));
    AuditPtr owned(r);
    emit_audit(r, id_out);
    return kOk;
  }
  if (rc->parsed()) {
    iasi_audit_report* r = nullptr;
    check(iasi_audit_ringsum_cycles(max_cycle, rc_out.jobs, &r));
    AuditPtr owned(r);
    emit_audit(r, rc_out);
    return kOk;
  }

  if (dot->parsed()) {
    reject_collisions({graph_path, labeling_path.empty() ? std::string() : labeling_path}, {out_path});
    auto g = load_graph(graph_path);
    LabelingPtr f;
    if (!labeling_path.empty()) f = load_labeling(labeling_path);
    char* text = nullptr;
    check(iasi_graph_to_dot(g.get(), f.get(), &text));
    write_output(out_path, take(text));
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    return e.code;
  }
}
