// Copyright 2026 The lsl Authors
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


#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "group_io.hpp"
#include "lsl/error.hpp"
#include "lsl/modrep/hom.hpp"
#include "lsl/modrep/structure.hpp"
#include "lsl/series/series.hpp"
#include "lsl/squeeze/resolution.hpp"
#include "report.hpp"
#include "store.hpp"

#ifndef LSL_VERSION
#define LSL_VERSION "0.0.0"
#endif

namespace lsl::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using modrep::ModulePtr;
using modrep::SimpleRegistry;
using squeeze::Resolution;

// Rng salts: each phase draws from its own stream of the job seed.
constexpr std::uint64_t kSaltSimples = 1;
constexpr std::uint64_t kSaltPims = 2;
constexpr std::uint64_t kSaltPeriod = 3;
constexpr std::uint64_t kSaltChop = 4;

constexpr int kManifestVersion = 1;

struct Job {
  std::string command;
  std::string group;
  std::string group_file;
  std::string field;
  std::size_t steps = 20;
  std::optional<std::size_t> degrees;
  std::size_t max_period = 4;
  std::size_t max_dim = 20000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::string resume;
  std::string gens;
  std::string rels;
  std::string module = "auto";
};

// Errors raised while reading the job are ingestion errors whatever their
// code inside the library.
struct IngestionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void ingestion(const std::string& what) { throw IngestionError(what); }

template <class F>
auto ingest(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    ingestion(e.what());
  }
}

std::vector<int> parse_degrees(const std::string& s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) ingestion(std::string("bad ") + what + " list: " + s);
    out.push_back(v);
  }
  return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_field(const std::string& s) {
  const auto dot = s.find('.');
  const std::string ps = s.substr(0, dot);
  const std::string es = dot == std::string::npos ? "1" : s.substr(dot + 1);
  auto num = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) || t.size() > 9)
      ingestion("bad --field value: " + s + " (expected p or p.e)");
    return static_cast<std::uint32_t>(std::stoul(t));
  };
  return {num(ps), num(es)};
}

struct GroupInput {
  grp::GroupPresentation group;
  std::string source;  // catalog | file | manifest
  std::uint32_t p = 2;
  std::uint32_t e = 1;
};

GroupInput resolve_group(const Job& job) {
  GroupInput in;
  std::optional<grp::CatalogEntry> entry;
  if (!job.group_file.empty()) {
    if (!job.group.empty()) ingestion("give either --group or --group-file, not both");
    in.group = ingest([&] { return load_group_file(job.group_file); });
    in.source = "file";
  } else if (job.group.empty()) {
    ingestion("this command needs --group or --group-file");
  } else {
    const auto names = grp::catalog_names();
    if (std::find(names.begin(), names.end(), job.group) != names.end()) {
      entry = grp::catalog(job.group);
      in.group = entry->group;
      in.p = entry->p;
      in.e = entry->e;
      in.source = "catalog";
    } else if (fs::is_regular_file(job.group)) {
      in.group = ingest([&] { return load_group_file(job.group); });
      in.source = "file";
    } else {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      ingestion("unknown group '" + job.group + "' (catalog: " + known + ")");
    }
  }
  if (!job.field.empty()) std::tie(in.p, in.e) = parse_field(job.field);
  return in;
}

// Group, field, registry and PIMs.
struct Algebra {
  GroupInput input;
  grp::GroupTable table;
  ffla::FieldPtr field;
  std::optional<SimpleRegistry> reg;
  std::vector<modrep::Pim> pims;
};

Algebra load_algebra(GroupInput in) {
  Algebra a;
  a.field = ingest([&] { return ffla::Field::make(in.p, in.e); });
  a.table = ingest([&] { return grp::enumerate(in.group); });
  a.input = std::move(in);
  return a;
}

void find_simples(Algebra& a, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, kSaltSimples);
  a.reg.emplace(modrep::simples(a.table, a.field, modrep::default_seeds(a.table, a.field), rng));
}

void find_pims(Algebra& a, std::uint64_t seed) {
  if (!a.reg) find_simples(a, seed);
  Rng rng = Rng::stream(seed, kSaltPims);
  a.pims = modrep::decompose_projectives(a.table, a.field, *a.reg, rng);
}

json registry_json(const SimpleRegistry& reg) {
  json out = json::array();
  for (std::size_t i = 0; i < reg.size(); ++i)
    out.push_back({{"index", i}, {"label", reg.label(i)}, {"dim", reg.simple(i)->dim}, {"end_dim", reg.end_dim(i)}});
  return out;
}

json multiplicities_json(const std::vector<std::pair<std::size_t, std::size_t>>& ms,
                         const SimpleRegistry& reg) {
  json out = json::array();
  for (auto [i, mult] : ms) out.push_back({{"simple", reg.label(i)}, {"multiplicity", mult}});
  return out;
}

json label_names(const std::vector<std::size_t>& labels, const SimpleRegistry& reg) {
  json out = json::array();
  for (auto i : labels) out.push_back("P(" + reg.label(i) + ")");
  return out;
}

json truncation_json(const squeeze::Truncation& t) {
  return {{"steps", t.steps}, {"reason", squeeze::reason_name(t.reason)}};
}

json dims_json(const std::vector<std::int64_t>& d) { return json(d); }

// Measured dims on degrees 0..upto, extended by zeros past a completed
// resolution. Shorter than upto + 1 when the run stopped early otherwise.
std::vector<std::int64_t> measured(const Resolution& r, std::vector<std::int64_t> dims, std::size_t upto) {
  if (r.truncation.reason == squeeze::TruncationReason::kCompleted && dims.size() < upto + 1)
    dims.resize(upto + 1, 0);
  if (dims.size() > upto + 1) dims.resize(upto + 1);
  return dims;
}

json terms_json(const Resolution& r, const SimpleRegistry& reg) {
  json out = json::array();
  for (std::size_t i = 0; i < r.length(); ++i) {
    json t{{"degree", i},
           {"dim", r.terms[i]->dim},
           {"labels", label_names(r.labels[i], reg)},
           {"kernel_dim", r.syzygies[i].module->dim}};
    if (r.kind == squeeze::ResolutionKind::kSqueezed) t["core_dim"] = r.cores[i].module->dim;
    out.push_back(std::move(t));
  }
  return out;
}

json certificate_json(const std::optional<squeeze::PeriodicityCertificate>& c) {
  if (!c) return nullptr;
  return {{"offset", c->offset},
          {"period", c->period},
          {"verified_range", {c->verified_range.first, c->verified_range.second}}};
}

// ---------------------------------------------------------------------------
// Persistence.

std::string differential_file(std::size_t i) { return "d" + std::to_string(i) + ".lsl1"; }

void save_resolution(const std::string& dir, const Algebra& a, std::uint64_t seed, const Resolution& r,
                     const json& dims, const json& certificate) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) ingestion("cannot create output directory " + dir + ": " + ec.message());
  json terms = json::array(), diffs = json::array();
  for (std::size_t i = 0; i < r.length(); ++i) {
    terms.push_back({{"degree", i}, {"dim", r.terms[i]->dim}, {"labels", r.labels[i]}});
    const auto& m = r.differentials[i].matrix;
    diffs.push_back({{"degree", i}, {"file", differential_file(i)}, {"rows", m.rows()}, {"cols", m.cols()}});
    ingest([&] {
      write_matrix((fs::path(dir) / differential_file(i)).string(), m);
      return 0;
    });
  }
  json manifest{{"format", "lsl-resolution"},
                {"version", kManifestVersion},
                {"kind", squeeze::kind_name(r.kind)},
                {"group", group_to_json(a.input.group)},
                {"field", {{"p", a.input.p}, {"e", a.input.e}}},
                {"seed", seed},
                {"registry", registry_json(*a.reg)},
                {"terms", terms},
                {"differentials", diffs},
                {"dims", dims},
                {"certificate", certificate},
                {"truncation", truncation_json(r.truncation)}};
  std::ofstream out(fs::path(dir) / "manifest.json");
  if (!out) ingestion("cannot write manifest in " + dir);
  out << manifest.dump(2) << '\n';
}

struct Stored {
  json manifest;
  GroupInput input;
  std::uint64_t seed = 0;
};

Stored read_manifest(const std::string& dir) {
  std::ifstream in(fs::path(dir) / "manifest.json");
  if (!in) ingestion("no manifest.json in " + dir);
  Stored s;
  try {
    in >> s.manifest;
    const json& m = s.manifest;
    if (m.at("format") != "lsl-resolution" || m.at("version") != kManifestVersion)
      ingestion("unsupported manifest format in " + dir);
    s.input.group = ingest([&] { return parse_group(m.at("group")); });
    s.input.source = "manifest";
    s.input.p = m.at("field").at("p").get<std::uint32_t>();
    s.input.e = m.at("field").at("e").get<std::uint32_t>();
    s.seed = m.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    ingestion("bad manifest in " + dir + ": " + e.what());
  }
  return s;
}

Resolution load_resolution(const std::string& dir, const Stored& s, const Algebra& a,
                           squeeze::ResolutionKind kind) {
  const json& m = s.manifest;
  try {
    if (m.at("kind") != squeeze::kind_name(kind))
      ingestion("manifest holds a " + m.at("kind").get<std::string>() + " resolution");
    if (m.at("registry") != registry_json(*a.reg))
      ingestion("simple modules recomputed from the manifest job differ from the stored ones");
    std::vector<std::vector<std::size_t>> labels;
    std::vector<ffla::Matrix> diffs;
    for (const auto& t : m.at("terms")) labels.push_back(t.at("labels").get<std::vector<std::size_t>>());
    for (const auto& d : m.at("differentials")) {
      ffla::Matrix x = ingest([&] { return read_matrix((fs::path(dir) / d.at("file").get<std::string>()).string()); });
      if (!(x.field() == *a.field)) ingestion("stored differential over the wrong field");
      diffs.push_back(std::move(x));
    }
    const std::string reason = m.at("truncation").at("reason").get<std::string>();
    squeeze::TruncationReason tr = squeeze::TruncationReason::kStepLimit;
    if (reason == "completed") tr = squeeze::TruncationReason::kCompleted;
    else if (reason == "dim_limit") tr = squeeze::TruncationReason::kDimLimit;
    else if (reason != "step_limit") ingestion("bad truncation reason in manifest");
    return ingest([&] { return squeeze::restore(kind, labels, diffs, *a.reg, a.pims, tr); });
  } catch (const json::exception& e) {
    ingestion("bad manifest in " + dir + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Commands. Each fills results (and possibly truncation) and returns the
// exit status.

struct Outcome {
  json results = json::object();
  json truncation = nullptr;
  int status = kExitOk;
};

// Degree list as given, echoed verbatim when it does not parse.
json degree_list(const std::string& s, const char* what) {
  try {
    return parse_degrees(s, what);
  } catch (const IngestionError&) {
    return s;
  }
}

json job_json(const Job& job, const std::optional<GroupInput>& in) {
  json j{{"command", job.command},
         {"seed", job.seed},
         {"max_steps", job.steps},
         {"max_degree", job.degrees ? json(*job.degrees) : json(nullptr)},
         {"max_period", job.max_period},
         {"max_dim", job.max_dim},
         {"format", job.format},
         {"out", job.out.empty() ? json(nullptr) : json(job.out)},
         {"resume", job.resume.empty() ? json(nullptr) : json(job.resume)},
         {"generators", job.gens.empty() ? json(nullptr) : degree_list(job.gens, "generator")},
         {"relations", job.gens.empty() && job.rels.empty() ? json(nullptr) : degree_list(job.rels, "relation")},
         {"module", job.module}};
  if (in) {
    j["group"] = {{"name", in->group.name}, {"source", in->source}, {"degree", in->group.degree},
                  {"generators", in->group.generators.size()}};
    j["field"] = {{"p", in->p}, {"e", in->e}};
  } else {
    j["group"] = nullptr;
    j["field"] = nullptr;
  }
  return j;
}

Outcome cmd_chop(const Job& job, Algebra& a) {
  std::string kind = job.module;
  if (kind == "auto") kind = a.table.order() <= 500 ? "regular" : "permutation";
  ModulePtr m = kind == "regular" ? grp::regular_module(a.table, a.field)
                                  : grp::permutation_module(a.input.group, a.field);
  Rng rng = Rng::stream(job.seed, kSaltChop);
  auto classes = modrep::chop(m, rng);
  std::vector<std::array<std::size_t, 3>> rows;
  std::size_t total = 0;
  for (const auto& [s, mult] : classes) {
    rows.push_back({s->dim, modrep::hom_space(s, s).size(), mult});
    total += s->dim * mult;
  }
  std::sort(rows.begin(), rows.end());
  json factors = json::array();
  for (const auto& r : rows) factors.push_back({{"dim", r[0]}, {"end_dim", r[1]}, {"multiplicity", r[2]}});
  Outcome o;
  o.results = {{"group_order", a.table.order()},
               {"module", {{"kind", kind}, {"dim", m->dim}}},
               {"factors", factors},
               {"factor_dim_total", total}};
  return o;
}

json simples_results(const Algebra& a) {
  return {{"group_order", a.table.order()},
          {"simples", registry_json(*a.reg)},
          {"complete", a.reg->complete()},
          {"expected", a.reg->expected() ? json(*a.reg->expected()) : json(nullptr)}};
}

Outcome cmd_simples(const Job& job, Algebra& a) {
  find_simples(a, job.seed);
  return {simples_results(a)};
}

Outcome cmd_pims(const Job& job, Algebra& a) {
  find_pims(a, job.seed);
  const SimpleRegistry& reg = *a.reg;
  json pims = json::array();
  std::size_t weighted = 0;
  for (const auto& p : a.pims) {
    json layers = json::array();
    for (const auto& layer : modrep::radical_layers(p.module, reg)) layers.push_back(multiplicities_json(layer, reg));
    auto soc = modrep::socle(p.module, reg);
    pims.push_back({{"label", p.module->label},
                    {"simple", reg.label(p.simple)},
                    {"dim", p.module->dim},
                    {"head", multiplicities_json(modrep::head_multiplicities(p.module, reg), reg)},
                    {"socle", multiplicities_json(modrep::head_multiplicities(soc.module, reg), reg)},
                    {"radical_layers", layers}});
    weighted += p.module->dim * (reg.simple(p.simple)->dim / reg.end_dim(p.simple));
  }
  Outcome o{simples_results(a)};
  o.results["pims"] = pims;
  o.results["regular_check"] = {{"weighted_dim_sum", weighted}, {"group_order", a.table.order()}};
  return o;
}

// Builds, resumes and persists a resolution of the requested kind.
Resolution resolve(const Job& job, Algebra& a, squeeze::ResolutionKind kind, std::size_t steps,
                   const std::optional<Stored>& stored) {
  squeeze::Limits limits{steps, job.max_dim};
  if (stored) {
    Resolution r = load_resolution(job.resume, *stored, a, kind);
    squeeze::extend(r, *a.reg, a.pims, limits);
    return r;
  }
  return kind == squeeze::ResolutionKind::kSqueezed ? squeeze::squeezed_resolution(*a.reg, a.pims, limits)
                                                    : squeeze::minimal_resolution(*a.reg, a.pims, limits);
}

std::string persist_dir(const Job& job) { return job.out.empty() ? job.resume : job.out; }

int truncation_status(const Resolution& r) {
  return r.truncation.reason == squeeze::TruncationReason::kDimLimit ? kExitTruncated : kExitOk;
}

Outcome cmd_squeeze(const Job& job, Algebra& a, const std::optional<Stored>& stored) {
  find_pims(a, stored ? stored->seed : job.seed);
  Resolution r = resolve(job, a, squeeze::ResolutionKind::kSqueezed, job.steps, stored);
  auto h = squeeze::squeezed_homology(r);
  Rng rng = Rng::stream(stored ? stored->seed : job.seed, kSaltPeriod);
  auto per = squeeze::detect_periodicity(r, job.max_period, rng);
  json unknown = json::array();
  for (auto [i, j] : per.unknown) unknown.push_back({i, j});
  json cert = certificate_json(per.certificate);
  Outcome o;
  o.results = {{"group_order", a.table.order()},
               {"simples", registry_json(*a.reg)},
               {"homology", dims_json(h.dims)},
               {"terms", terms_json(r, *a.reg)},
               {"periodicity", {{"certificate", cert}, {"unknown_pairs", unknown}}}};
  o.truncation = truncation_json(r.truncation);
  o.status = truncation_status(r);
  if (const auto dir = persist_dir(job); !dir.empty())
    save_resolution(dir, a, stored ? stored->seed : job.seed, r, o.results["homology"], cert);
  return o;
}

Outcome cmd_cohomology(const Job& job, Algebra& a, const std::optional<Stored>& stored) {
  find_pims(a, stored ? stored->seed : job.seed);
  const std::size_t degrees = job.degrees.value_or(8);
  Resolution r = resolve(job, a, squeeze::ResolutionKind::kMinimal, degrees, stored);
  auto c = squeeze::cohomology_dims(r, *a.reg);
  Outcome o;
  o.results = {{"group_order", a.table.order()},
               {"simples", registry_json(*a.reg)},
               {"cohomology", dims_json(measured(r, c.dims, degrees))},
               {"terms", terms_json(r, *a.reg)}};
  o.truncation = truncation_json(r.truncation);
  o.status = truncation_status(r);
  if (const auto dir = persist_dir(job); !dir.empty())
    save_resolution(dir, a, stored ? stored->seed : job.seed, r, o.results["cohomology"], nullptr);
  return o;
}

series::CIPresentation presentation(const Job& job) {
  if (job.gens.empty()) ingestion("this command needs --gens (and optionally --rels)");
  series::CIPresentation p{parse_degrees(job.gens, "generator"), parse_degrees(job.rels, "relation")};
  ingest([&] { return series::ci_loop_series(p); });
  return p;
}

json series_json(const series::RationalSeries& s) {
  return {{"numerator", s.numerator}, {"denominator", s.denominator}};
}

json predicted_json(const series::CIPresentation& p, std::size_t degrees) {
  auto loop = series::ci_loop_series(p);
  auto coh = series::ci_cohomology_series(p);
  auto g = series::growth_degree(loop);
  return {{"presentation", {{"generators", p.generators}, {"relations", p.relations}}},
          {"loop_series", series_json(loop)},
          {"expansion", series::expand(loop, degrees)},
          {"cohomology_series", series_json(coh)},
          {"cohomology_expansion", series::expand(coh, degrees)},
          {"growth", {{"growth_degree", g.growth_degree}, {"g_codimension", g.g_codimension}}},
          {"conditional", true}};
}

Outcome cmd_predict(const Job& job) {
  return {predicted_json(presentation(job), job.degrees.value_or(12))};
}

Outcome cmd_compare(const Job& job, Algebra& a) {
  const auto p = presentation(job);
  const std::size_t degrees = job.degrees.value_or(12);
  find_pims(a, job.seed);
  Resolution r = squeeze::squeezed_resolution(*a.reg, a.pims, {degrees, job.max_dim});
  auto got = measured(r, squeeze::squeezed_homology(r).dims, degrees);
  auto want = series::expand(series::ci_loop_series(p), degrees);
  const std::size_t to = got.size() - 1;
  auto cmp = series::compare_prefix(want, got, 0, to);
  Outcome o;
  o.results = {{"group_order", a.table.order()},
               {"prediction", predicted_json(p, degrees)},
               {"measured", got},
               {"compared_range", {0, to}},
               {"verdict", cmp.match ? "match" : "mismatch"},
               {"mismatch_degree", cmp.mismatch_degree ? json(*cmp.mismatch_degree) : json(nullptr)}};
  o.truncation = truncation_json(r.truncation);
  o.status = truncation_status(r);
  return o;
}

Outcome cmd_growth(const Job& job, std::optional<Algebra>& a) {
  Outcome o;
  if (!a) {
    auto p = presentation(job);
    auto loop = series::ci_loop_series(p);
    auto g = series::growth_degree(loop);
    o.results = {{"source", "presentation"},
                 {"sequence", series::expand(loop, job.degrees.value_or(20))},
                 {"growth_degree", g.growth_degree},
                 {"g_codimension", g.g_codimension},
                 {"fitted", g.fitted}};
    return o;
  }
  const std::size_t degrees = job.degrees.value_or(job.steps);
  find_pims(*a, job.seed);
  Resolution r = squeeze::squeezed_resolution(*a->reg, a->pims, {degrees, job.max_dim});
  auto dims = measured(r, squeeze::squeezed_homology(r).dims, degrees);
  if (dims.size() < 8) ingestion("growth fitting needs at least 8 measured degrees");
  auto g = series::fit_growth(dims);
  o.results = {{"source", "squeezed_homology"},
               {"sequence", dims},
               {"growth_degree", g.growth_degree},
               {"g_codimension", g.g_codimension},
               {"fitted", g.fitted}};
  o.truncation = truncation_json(r.truncation);
  o.status = truncation_status(r);
  return o;
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "text")
    render_text(report, out);
  else
    out << report.dump(2) << '\n';
}

void add_common(CLI::App* sub, Job& job) {
  sub->add_option("--group", job.group, "catalog name or path to a group JSON file");
  sub->add_option("--group-file", job.group_file, "path to a group JSON file");
  sub->add_option("--field", job.field, "field GF(p^e) as p or p.e");
  sub->add_option("--seed", job.seed, "seed for all randomized steps");
  sub->add_option("--format", job.format, "report format")->check(CLI::IsMember({"json", "text"}));
}

void add_resolution(CLI::App* sub, Job& job) {
  sub->add_option("--steps", job.steps, "highest homological degree");
  sub->add_option("--degrees", job.degrees, "highest degree reported");
  sub->add_option("--max-dim", job.max_dim, "largest projective term built");
  sub->add_option("--out", job.out, "directory to store the resolution in");
  sub->add_option("--resume", job.resume, "continue a stored resolution");
}

void add_presentation(CLI::App* sub, Job& job) {
  sub->add_option("--gens", job.gens, "generator codegrees, comma-separated");
  sub->add_option("--rels", job.rels, "relation codegrees, comma-separated");
  sub->add_option("--degrees", job.degrees, "highest degree reported");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Job job;
  CLI::App app{"lsl: squeezed resolutions and loop-space homology of finite groups"};
  app.set_version_flag("--version", LSL_VERSION);
  app.require_subcommand(1);

  auto* chop = app.add_subcommand("chop", "composition factors of the regular or permutation module");
  add_common(chop, job);
  chop->add_option("--module", job.module, "module to chop")->check(CLI::IsMember({"auto", "regular", "permutation"}));
  add_common(app.add_subcommand("simples", "simple modules of the group algebra"), job);
  add_common(app.add_subcommand("pims", "projective indecomposables with head, socle and radical layers"), job);
  auto* sq = app.add_subcommand("squeeze", "squeezed resolution, loop homology and periodicity");
  add_common(sq, job);
  add_resolution(sq, job);
  sq->add_option("--max-period", job.max_period, "largest syzygy period searched");
  auto* coh = app.add_subcommand("cohomology", "minimal resolution and cohomology dimensions");
  add_common(coh, job);
  add_resolution(coh, job);
  auto* pred = app.add_subcommand("predict", "complete-intersection prediction of the loop series");
  add_common(pred, job);
  add_presentation(pred, job);
  auto* cmp = app.add_subcommand("compare", "measured squeezed homology against the prediction");
  add_common(cmp, job);
  add_presentation(cmp, job);
  cmp->add_option("--max-dim", job.max_dim, "largest projective term built");
  auto* gr = app.add_subcommand("growth", "growth degree of a presentation or of measured homology");
  add_common(gr, job);
  add_presentation(gr, job);
  gr->add_option("--steps", job.steps, "highest degree measured");
  gr->add_option("--max-dim", job.max_dim, "largest projective term built");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitIngestion;
  }
  job.command = app.get_subcommands().front()->get_name();

  std::optional<GroupInput> input;
  Outcome outcome;
  json error = nullptr;
  int status = kExitOk;
  try {
    std::optional<Stored> stored;
    std::optional<Algebra> algebra;
    if (!job.resume.empty()) {
      if (!job.group.empty() || !job.group_file.empty() || !job.field.empty())
        ingestion("--resume takes the group and field from the stored manifest");
      stored = read_manifest(job.resume);
      job.seed = stored->seed;
      input = stored->input;
    } else if (job.command != "predict" && !(job.command == "growth" && job.group.empty() && job.group_file.empty())) {
      input = resolve_group(job);
    }
    if (input) algebra = load_algebra(*input);

    if (job.command == "chop") outcome = cmd_chop(job, *algebra);
    else if (job.command == "simples") outcome = cmd_simples(job, *algebra);
    else if (job.command == "pims") outcome = cmd_pims(job, *algebra);
    else if (job.command == "squeeze") outcome = cmd_squeeze(job, *algebra, stored);
    else if (job.command == "cohomology") outcome = cmd_cohomology(job, *algebra, stored);
    else if (job.command == "predict") outcome = cmd_predict(job);
    else if (job.command == "compare") outcome = cmd_compare(job, *algebra);
    else outcome = cmd_growth(job, algebra);
    status = outcome.status;
  } catch (const IngestionError& e) {
    error = {{"code", "Ingestion"}, {"message", e.what()}};
    status = kExitIngestion;
  } catch (const Error& e) {
    error = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    status = e.code() == ErrorCode::kRandomnessExhausted || e.code() == ErrorCode::kSplitBudgetExhausted
                 ? kExitRandomness
                 : e.code() == ErrorCode::kIngestion ? kExitIngestion : kExitFailure;
  }

  const json jobj = job_json(job, input);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json report{{"tool", {{"name", "lsl"}, {"version", LSL_VERSION}}},
              {"command", job.command},
              {"job", jobj},
              {"status", error.is_null() ? (status == kExitTruncated ? "truncated" : "ok") : "error"},
              {"results", error.is_null() ? outcome.results : json(nullptr)},
              {"truncation", outcome.truncation},
              {"error", error},
              {"timing", {{"wall_seconds", secs}}}};
  emit(report, job.format, out);
  if (!error.is_null()) err << "lsl: " << error["message"].get<std::string>() << '\n';
  return status;
}

}  // namespace lsl::cli
