// hopfdual: axiom checks, theorem suites and instance files from the command line.
//
// Exit codes: 0 pass, 1 verification failure, 2 precondition failure,
// 3 input error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "hopfdual/io.hpp"

using namespace hopfdual;

namespace {

enum Exit { kPass = 0, kFail = 1, kPrecondition = 2, kInput = 3 };

struct Options {
  std::string instance;
  std::string field;
  std::string suite = "all";
  std::string module;
  std::string format = "text";
  std::string report_dir;
  std::string structure = "instance";
  std::string output;
  bool extended = false;
  bool timing = false;
  std::uint64_t seed = 1;
  int trials = 100;
  unsigned jobs = 1;
};

struct Job {
  std::string instance;
  std::string suite;
  std::string module;
};

const std::vector<std::pair<std::string, std::string>> kDefaultRuns = {
    {"T1", "AH"}, {"T1", "trivial"}, {"T2", ""}, {"T3", ""}, {"T4", "A"},
    {"T4", "AH"}, {"T5", "A"},       {"T5", "AH"}, {"ULB", ""}};

std::string default_module(const std::string& suite) {
  if (suite == "T1") return "AH";
  if (suite == "T4" || suite == "T5") return "A";
  return "";
}

bool is_catalog_name(const std::string& name) {
  for (const auto& e : catalog_entries(true))
    if (e.name == name) return true;
  return false;
}

// Field of the run: from the file for instance files, else --field (default q).
FieldSpec resolve_field(const Options& o, std::optional<Json>& doc) {
  if (!o.instance.empty() && o.instance != "all" && !is_catalog_name(o.instance)) {
    if (!std::filesystem::exists(o.instance))
      throw std::invalid_argument("'" + o.instance + "' is neither a catalog instance nor a file");
    doc = read_json_file(o.instance);
    const FieldSpec f = instance_field(*doc);
    if (!o.field.empty() && !(FieldSpec::parse(o.field) == f))
      throw std::invalid_argument("--field " + o.field + " conflicts with the file's field " + f.to_string());
    return f;
  }
  return o.field.empty() ? FieldSpec::rationals() : FieldSpec::parse(o.field);
}

template <class K>
Instance<K> load(const std::string& name, const FieldSpec& f, const std::optional<Json>& doc) {
  if (doc) return import_instance<K>(*doc);
  return catalog_instance<K>(name, f);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string report_dir(const Options& o) {
  if (!o.report_dir.empty()) return o.report_dir;
  if (const char* env = std::getenv("HOPFDUAL_REPORT_DIR")) return env;
  return "";
}

int cmd_list(const Options& o) {
  const std::vector<CatalogEntry> entries = catalog_entries(o.extended);
  if (o.format == "json") {
    Json out = Json::array();
    for (const auto& e : entries) out.push_back(Json{{"name", e.name}, {"description", e.description}, {"extended", e.extended}});
    std::cout << dump(out);
  } else {
    for (const auto& e : entries) std::cout << e.name << "  " << e.description << (e.extended ? "  (extended)" : "") << "\n";
  }
  return kPass;
}

template <class K>
int cmd_check(const Options& o, const FieldSpec& f, const std::optional<Json>& doc) {
  const Instance<K> inst = load<K>(o.instance, f, doc);
  std::vector<std::pair<std::string, AxiomReport>> sections;
  sections.push_back({"hopf", check_hopf(inst.hopf)});
  if (inst.comodule && sections.front().second.passed()) {
    sections.push_back({"comodule algebra", check_comodule_algebra(*inst.comodule)});
    for (const auto& m : inst.modules)
      sections.push_back({"module " + m.name, check_relative_hopf_module(*inst.comodule, m.module)});
  }
  bool ok = true;
  for (const auto& s : sections) ok = ok && s.second.passed();
  if (o.format == "json") {
    Json out;
    out["command"] = "check";
    out["instance"] = inst.name;
    out["field"] = f.to_string();
    out["passed"] = ok;
    Json secs = Json::array();
    for (const auto& [name, rep] : sections) {
      Json s = report_json(rep);
      s["name"] = name;
      secs.push_back(std::move(s));
    }
    out["sections"] = std::move(secs);
    std::cout << dump(out);
  } else {
    std::cout << "check " << inst.name << " over " << f.to_string() << ": " << (ok ? "pass" : "fail") << "\n";
    for (const auto& [name, rep] : sections) {
      std::cout << "  " << name << ": " << (rep.passed() ? "pass" : "fail") << "\n";
      for (const auto& c : rep.checks) {
        std::cout << "    [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
      }
    }
  }
  return ok ? kPass : kFail;
}

template <class K>
int cmd_run(const Options& o, const FieldSpec& f, const std::optional<Json>& doc) {
  std::vector<std::string> names;
  if (o.instance == "all") {
    for (const auto& e : catalog_entries(o.extended)) names.push_back(e.name);
  } else {
    names.push_back(o.instance);
  }
  std::vector<Instance<K>> instances;
  for (const auto& n : names) instances.push_back(load<K>(n, f, doc));

  std::vector<std::pair<std::size_t, Job>> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (o.suite == "all") {
      for (const auto& [s, m] : kDefaultRuns)
        if (s == "T1" || m.empty() || instances[i].find_module(m))
          jobs.push_back({i, {instances[i].name, s, m}});
    } else {
      const auto& known = suite_names();
      if (std::find(known.begin(), known.end(), o.suite) == known.end())
        throw std::invalid_argument("unknown suite '" + o.suite + "'");
      jobs.push_back({i, {instances[i].name, o.suite, o.module.empty() ? default_module(o.suite) : o.module}});
    }
  }

  std::vector<std::optional<SuiteResult<K>>> results(jobs.size());
  std::vector<double> seconds(jobs.size(), 0.0);
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const auto& [i, job] = jobs[k];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        results[k] = run_suite<K>(job.suite, instances[i], job.module);
      } catch (const std::invalid_argument& e) {
        errors[k] = e.what();
      }
      seconds[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors)
    if (!e.empty()) throw std::invalid_argument(e);

  int code = kPass;
  bool any_fail = false, any_pre = false;
  Json reports = Json::array();
  std::string text;
  const std::string dir = report_dir(o);
  if (!dir.empty()) std::filesystem::create_directories(dir);
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const SuiteResult<K>& r = *results[k];
    any_fail = any_fail || r.status == SuiteStatus::fail;
    any_pre = any_pre || r.status == SuiteStatus::precondition;
    Json j = report_json(r, f);
    std::string t = report_text(r, f);
    if (o.timing) {
      j["seconds"] = seconds[k];
      t += "  time " + std::to_string(seconds[k]) + " s\n";
    }
    if (!dir.empty()) {
      std::string file = r.instance + "-" + r.suite + (r.module_name.empty() ? "" : "-" + r.module_name) + ".json";
      std::ofstream out(std::filesystem::path(dir) / file);
      out << dump(j);
    }
    reports.push_back(std::move(j));
    text += t;
  }
  if (any_fail) {
    code = kFail;
  } else if (any_pre) {
    code = kPrecondition;
  }
  if (o.format == "json") {
    Json out;
    out["command"] = "run";
    out["field"] = f.to_string();
    out["reports"] = std::move(reports);
    std::cout << dump(out);
  } else {
    std::cout << text;
  }
  return code;
}

template <class K>
int cmd_perturb(const Options& o, const FieldSpec& f, const std::optional<Json>& doc) {
  const Instance<K> inst = load<K>(o.instance, f, doc);
  if (!inst.comodule) throw std::invalid_argument("instance has no comodule algebra");
  const GrouplikeCoring<K> g = coring_from_comodule(*inst.comodule);
  const AxiomReport rep = check_lift_independence(g.coring, o.seed, o.trials);
  if (o.format == "json") {
    Json out = report_json(rep);
    out["command"] = "perturb";
    out["instance"] = inst.name;
    out["field"] = f.to_string();
    out["seed"] = o.seed;
    out["trials"] = o.trials;
    std::cout << dump(out);
  } else {
    std::cout << "lift perturbations on " << inst.name << " (seed " << o.seed << ", " << o.trials
              << " trials): " << (rep.passed() ? "pass" : "fail") << "\n";
    for (const auto& c : rep.checks)
      std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                << "\n";
  }
  return rep.passed() ? kPass : kFail;
}

template <class K>
int cmd_export(const Options& o, const FieldSpec& f, const std::optional<Json>& doc) {
  const Instance<K> inst = load<K>(o.instance, f, doc);
  if (o.structure == "instance") {
    emit(dump(export_instance(inst)), o.output);
    return kPass;
  }
  if (!inst.comodule) throw std::invalid_argument("instance has no comodule algebra");
  const ComoduleAlgebra<K>& c = *inst.comodule;
  Algebra<K> a;
  if (o.structure == "left-dual") {
    a = left_dual(coring_from_comodule(c).coring).algebra;
  } else if (o.structure == "right-dual") {
    a = right_dual(coring_from_comodule(c).coring).algebra;
  } else if (o.structure == "smash") {
    a = smash_product(c);
  } else if (o.structure == "big-smash") {
    a = big_smash(c);
  } else {
    throw std::invalid_argument("unknown structure '" + o.structure + "'");
  }
  Json out;
  out["instance"] = inst.name;
  out["field"] = f.to_string();
  out["structure"] = o.structure;
  out["algebra"] = export_algebra(a);
  emit(dump(out), o.output);
  return kPass;
}

template <class K>
int dispatch(const std::string& command, const Options& o, const FieldSpec& f, const std::optional<Json>& doc) {
  if (command == "check") return cmd_check<K>(o, f, doc);
  if (command == "run") return cmd_run<K>(o, f, doc);
  if (command == "perturb") return cmd_perturb<K>(o, f, doc);
  return cmd_export<K>(o, f, doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of duality theorems for finite Hopf algebras and corings"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool instance_required) {
    auto* opt = sub->add_option("--instance,-i", o.instance, "catalog name (I1..I5, E1, E2) or instance file");
    if (instance_required) opt->required();
    sub->add_option("--field,-f", o.field, "q or gf:p (catalog instances; files carry their own field)");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* list = app.add_subcommand("list", "list catalog instances");
  list->add_flag("--extended", o.extended, "include the kS3 instances");
  list->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* check = app.add_subcommand("check", "run every applicable axiom checker");
  add_common(check, true);

  CLI::App* run = app.add_subcommand("run", "run theorem suites");
  add_common(run, false);
  run->add_option("--suite,-s", o.suite, "T1, T2, T3, T4, T5, ULB or all");
  run->add_option("--module,-m", o.module, "A or AH for T4/T5, AH or trivial for T1");
  run->add_flag("--extended", o.extended, "with --instance all, include the kS3 instances");
  run->add_option("--report-dir", o.report_dir, "write one JSON report per suite here (or HOPFDUAL_REPORT_DIR)");
  run->add_flag("--timing", o.timing, "add wall-clock seconds to the reports");
  run->add_option("--jobs,-j", o.jobs, "suites to run concurrently");

  CLI::App* perturb = app.add_subcommand("perturb", "lift-independence of the dual ring products");
  add_common(perturb, true);
  perturb->add_option("--seed", o.seed, "random seed");
  perturb->add_option("--trials", o.trials, "number of perturbed lifts");

  CLI::App* exp = app.add_subcommand("export", "write an instance file or derived ring structure constants");
  add_common(exp, true);
  exp->add_option("--structure", o.structure, "instance, left-dual, right-dual, smash or big-smash");
  exp->add_option("--output,-o", o.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (list->parsed()) return cmd_list(o);
    std::string command = check->parsed() ? "check" : run->parsed() ? "run" : perturb->parsed() ? "perturb" : "export";
    if (command == "run" && o.instance.empty()) o.instance = "all";
    std::optional<Json> doc;
    const FieldSpec f = resolve_field(o, doc);
    if (f.kind == FieldSpec::Kind::rationals) return dispatch<Rational>(command, o, f, doc);
    return dispatch<ModP>(command, o, f, doc);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
