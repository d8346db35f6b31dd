// Command-line surface: compute psi, classify the Herzog ratio, run lemma
// suites over the catalog, and emit text/json/csv reports.
//
// Exit codes: 0 all checks pass, 1 violation found, 2 input/config error.

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordersum/catalog.hpp"
#include "ordersum/criteria.hpp"
#include "ordersum/errors.hpp"
#include "ordersum/exactnum.hpp"
#include "ordersum/psi.hpp"

namespace {

using namespace ordersum;
using ojson = nlohmann::ordered_json;

struct RunConfig {
  enum class Command { Psi, Verify, Classify, CatalogList };
  Command command = Command::Psi;
  std::vector<std::string> targets;
  std::size_t max_order = kDefaultMaxOrder;
  std::string format = "text";
  std::set<LemmaId> lemmas;  // empty means all
};

constexpr const char* kGroupCsvHeader =
    "group_id,order,psi,psi_cyclic,verdict,solvable,recognized_m";

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct ResolvedTarget {
  std::string id;
  FiniteGroup group;
  const CatalogEntry* meta;
};

ResolvedTarget resolve_target(const std::string& target, std::size_t max_order) {
  if (target.starts_with("catalog:")) {
    std::string id = target.substr(8);
    return ResolvedTarget{id, build(id, max_order), find_entry(id)};
  }
  auto g = load_group_spec(target, max_order);
  std::string id = g.label().empty() ? target : g.label();
  return ResolvedTarget{std::move(id), std::move(g), nullptr};
}

struct GroupReportRow {
  std::string id;
  std::uint64_t order;
  BigInt psi;
  BigInt psi_cyc;
  Verdict verdict;
  std::optional<bool> solvable;
  std::optional<std::uint64_t> recognized_m;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
};

void print_group_csv(const GroupReportRow& row) {
  std::cout << kGroupCsvHeader << "\n"
            << csv_escape(row.id) << "," << row.order << "," << row.psi.str() << ","
            << row.psi_cyc.str() << "," << verdict_name(row.verdict) << ","
            << (row.solvable ? (*row.solvable ? "true" : "false") : "") << ","
            << (row.recognized_m ? std::to_string(*row.recognized_m) : "") << "\n";
}

int cmd_psi(const RunConfig& cfg) {
  auto rt = resolve_target(cfg.targets.at(0), cfg.max_order);
  auto value = psi_of_group(rt.group);
  auto ratio = herzog_ratio(rt.group);
  BigInt psi_cyc = psi_cyclic(value.order);
  if (cfg.format == "json") {
    ojson doc;
    doc["group"] = rt.id;
    doc["order"] = value.order;
    doc["psi"] = value.psi.str();
    doc["psi_cyclic"] = psi_cyc.str();
    doc["ratio"] = ratio_string(value.psi, psi_cyc);
    doc["verdict"] = verdict_name(ratio.verdict);
    std::cout << doc.dump() << "\n";
  } else if (cfg.format == "csv") {
    GroupReportRow row{rt.id,        value.order, value.psi, psi_cyc,
                       ratio.verdict, std::nullopt, std::nullopt};
    print_group_csv(row);
  } else {
    std::cout << "group: " << rt.id << "\n"
              << "order: " << value.order << "\n"
              << "psi: " << value.psi.str() << "\n"
              << "psi_cyclic: " << psi_cyc.str() << "\n"
              << "ratio: " << ratio_string(value.psi, psi_cyc) << "\n"
              << "verdict: " << verdict_name(ratio.verdict) << "\n";
  }
  return 0;
}

int cmd_classify(const RunConfig& cfg) {
  auto rt = resolve_target(cfg.targets.at(0), cfg.max_order);
  auto value = psi_of_group(rt.group);
  auto ratio = herzog_ratio(rt.group);
  auto rec = recognize_a5_times_cm(rt.group);
  bool solvable = is_solvable(rt.group);
  if (cfg.format == "json") {
    ojson doc;
    doc["group"] = rt.id;
    doc["order"] = value.order;
    doc["psi"] = value.psi.str();
    doc["solvable"] = solvable;
    doc["verdict"] = verdict_name(ratio.verdict);
    doc["recognized"] = rec.matches;
    if (rec.m)
      doc["m"] = *rec.m;
    else
      doc["m"] = nullptr;
    doc["center_order"] = rec.center_order;
    doc["derived_order"] = rec.derived_order;
    std::cout << doc.dump() << "\n";
  } else if (cfg.format == "csv") {
    GroupReportRow row{rt.id,        value.order, value.psi, psi_cyclic(value.order),
                       ratio.verdict, solvable,    rec.m};
    print_group_csv(row);
  } else {
    std::cout << "group: " << rt.id << "\n"
              << "order: " << value.order << "\n"
              << "solvable: " << (solvable ? "yes" : "no") << "\n"
              << "verdict: " << verdict_name(ratio.verdict) << "\n"
              << "recognized: " << (rec.matches ? "yes" : "no") << "\n";
    if (rec.m) std::cout << "m: " << *rec.m << "\n";
    std::cout << "center_order: " << rec.center_order << "\n"
              << "derived_order: " << rec.derived_order << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  std::set<LemmaId> lemmas = cfg.lemmas;
  if (lemmas.empty())
    lemmas.insert(all_lemmas().begin(), all_lemmas().end());

  std::vector<std::string> catalog_ids;
  std::vector<std::string> files;
  if (cfg.targets.empty()) {
    for (const auto& e : default_manifest()) catalog_ids.push_back(e.id);
  } else {
    for (const auto& t : cfg.targets) {
      if (t.starts_with("catalog:"))
        catalog_ids.push_back(t.substr(8));
      else
        files.push_back(t);
    }
  }

  auto reports = run_suite(catalog_ids, lemmas, cfg.max_order);
  for (const auto& path : files) {
    auto g = load_group_spec(path, cfg.max_order);
    auto extra = run_group_suite(g, nullptr, lemmas, cfg.max_order);
    reports.insert(reports.end(), extra.begin(), extra.end());
  }
  sort_reports(reports);

  std::size_t met = 0, violations = 0;
  const LemmaReport* first_violation = nullptr;
  for (const auto& r : reports) {
    met += r.hypothesis_met;
    if (r.violated()) {
      ++violations;
      if (!first_violation) first_violation = &r;
    }
  }

  if (cfg.format == "json") {
    ojson doc;
    auto arr = ojson::array();
    for (const auto& r : reports) {
      ojson rec;
      rec["group"] = r.group_id;
      rec["lemma"] = lemma_name(r.lemma);
      rec["instance"] = r.instance;
      rec["hypothesis_met"] = r.hypothesis_met;
      rec["conclusion_holds"] = r.conclusion_holds;
      rec["witness"] = r.witness;
      arr.push_back(std::move(rec));
    }
    doc["reports"] = std::move(arr);
    doc["hypotheses_met"] = met;
    doc["violations"] = violations;
    std::cout << doc.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "group_id,lemma,instance,hypothesis_met,conclusion_holds,witness\n";
    for (const auto& r : reports)
      std::cout << csv_escape(r.group_id) << "," << lemma_name(r.lemma) << ","
                << csv_escape(r.instance) << ","
                << (r.hypothesis_met ? "true" : "false") << ","
                << (r.conclusion_holds ? "true" : "false") << ","
                << csv_escape(r.witness) << "\n";
  } else {
    for (const auto& r : reports) {
      const char* status =
          r.violated() ? "FAIL" : (r.hypothesis_met ? "PASS" : "VACUOUS");
      std::cout << status << " " << r.group_id << " " << lemma_name(r.lemma);
      if (!r.instance.empty()) std::cout << " " << r.instance;
      if (!r.witness.empty()) std::cout << " -- " << r.witness;
      std::cout << "\n";
    }
    std::cout << "summary: " << reports.size() << " reports, " << met
              << " hypotheses met, " << violations << " violations\n";
  }

  if (violations > 0) {
    std::cerr << "violation: " << first_violation->group_id << " lemma "
              << lemma_name(first_violation->lemma);
    if (!first_violation->instance.empty())
      std::cerr << " (" << first_violation->instance << ")";
    if (!first_violation->witness.empty())
      std::cerr << ": " << first_violation->witness;
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

int cmd_catalog_list(const RunConfig& cfg) {
  const auto& manifest = default_manifest();
  if (cfg.format == "json") {
    auto arr = ojson::array();
    for (const auto& e : manifest) {
      ojson rec;
      rec["id"] = e.id;
      for (const auto& [k, v] : e.expected) rec[k] = v;
      arr.push_back(std::move(rec));
    }
    std::cout << arr.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "id,order,psi,solvable,center_order\n";
    for (const auto& e : manifest)
      std::cout << e.id << "," << e.expected.at("order") << ","
                << e.expected.at("psi") << "," << e.expected.at("solvable") << ","
                << e.expected.at("center_order") << "\n";
  } else {
    for (const auto& e : manifest)
      std::cout << e.id << " order=" << e.expected.at("order")
                << " psi=" << e.expected.at("psi") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact sum-of-element-orders toolkit for finite permutation groups"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-order", cfg.max_order,
                    "Enumeration cap for group closure")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* psi_cmd = app.add_subcommand("psi", "Compute psi and the Herzog ratio");
  psi_cmd->add_option("target", cfg.targets, "catalog:<id> or a GroupSpec file")
      ->required()
      ->expected(1);
  add_common(psi_cmd);

  auto* classify_cmd =
      app.add_subcommand("classify", "Solvability, ratio verdict, A5 x C_m recognition");
  classify_cmd->add_option("target", cfg.targets, "catalog:<id> or a GroupSpec file")
      ->required()
      ->expected(1);
  add_common(classify_cmd);

  std::vector<std::string> lemma_names;
  auto* verify_cmd = app.add_subcommand("verify", "Run lemma checkers");
  verify_cmd->add_option("targets", cfg.targets,
                         "catalog:<id> or GroupSpec files (default: full catalog)");
  verify_cmd->add_option("--lemma", lemma_names, "Restrict to these lemma ids")
      ->allow_extra_args(false);
  verify_cmd->add_flag("--all", "Run every checker (the default)");
  add_common(verify_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog utilities");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List built-in groups");
  add_common(list_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& name : lemma_names) {
      auto id = ordersum::lemma_from_name(name);
      if (!id) throw ordersum::InputError("unknown lemma id '" + name + "'");
      cfg.lemmas.insert(*id);
    }
    if (psi_cmd->parsed()) {
      cfg.command = RunConfig::Command::Psi;
      return cmd_psi(cfg);
    }
    if (classify_cmd->parsed()) {
      cfg.command = RunConfig::Command::Classify;
      return cmd_classify(cfg);
    }
    if (verify_cmd->parsed()) {
      cfg.command = RunConfig::Command::Verify;
      return cmd_verify(cfg);
    }
    if (catalog_cmd->parsed() && list_cmd->parsed()) {
      cfg.command = RunConfig::Command::CatalogList;
      return cmd_catalog_list(cfg);
    }
    throw ordersum::InputError("no command given");
  } catch (const ordersum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
