#include "pdtc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdtc/audit.hpp"
#include "pdtc/dictionary.hpp"
#include "pdtc/layers.hpp"
#include "pdtc/tag.hpp"
#include "pdtc/text_table.hpp"

namespace pdtc {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string_view>& subcommands() {
  static const std::vector<std::string_view> names{
      "tags-validate", "dict-check", "dict-diff", "dict-stats", "audit", "layers-validate"};
  return names;
}

const std::vector<std::pair<std::string_view, std::string_view>>& operation_coverage() {
  static const std::vector<std::pair<std::string_view, std::string_view>> table{
      {"tagcodec.decode", "tags-validate"},
      {"tagcodec.encode", "tags-validate"},
      {"tagcodec.validate", "tags-validate"},
      {"tagcodec.classify", "tags-validate"},
      {"lemmacodec.parse", "audit"},
      {"lemmacodec.serialize", "audit"},
      {"lemmacodec.lemmaProper", "audit"},
      {"lemmacodec.compare", "audit"},
      {"dictionary.load", "dict-stats"},
      {"dictionary.analyses", "dict-stats"},
      {"dictionary.check", "dict-check"},
      {"dictionary.diff", "dict-diff"},
      {"dictionary.stats", "dict-stats"},
      {"audit.classify", "audit"},
      {"audit.auditCorpus", "audit"},
      {"audit.explain", "audit"},
      {"layers.loadDocument", "layers-validate"},
      {"layers.validateLinks", "layers-validate"},
      {"layers.validateATree", "layers-validate"},
      {"layers.validateTTree", "layers-validate"},
      {"layers.checkValency", "layers-validate"},
      {"layers.loadLexicon", "layers-validate"},
  };
  return table;
}

namespace {

// Operational failure: reported on stderr, exit code 2.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "table";
  std::string schema_path;
  std::size_t samples = 20;
  std::string output_path;

  // subcommand inputs
  std::string input;
  std::string second_input;
  std::string lexicon_path;
  std::string functors_path;
  std::string explain_path;
  std::string lookup_form;
  bool lookup = false;
  bool classify_tags = false;
  bool numbering = false;

  bool json() const { return format == "json"; }
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot open '" + path + "'");
  return in;
}

Dictionary load_dictionary(const std::string& path, std::ostream& err) {
  auto in = open_input(path);
  try {
    auto dict = Dictionary::load(in);
    if (dict.duplicates_dropped() > 0)
      err << "warning: " << path << ": " << dict.duplicates_dropped()
          << " duplicate triple(s) collapsed\n";
    return dict;
  } catch (const DictionaryError& e) {
    throw Failure(path + ": " + e.what());
  }
}

void write_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

ordered_json location_json(const TokenLocation& loc) {
  return {{"doc", loc.doc}, {"sent", loc.sent}, {"token", loc.token}};
}

// ---------------------------------------------------------------------------

int tags_validate(const RunConfig& cfg, std::ostream& out) {
  std::optional<TagsetSchema> custom;
  if (!cfg.schema_path.empty()) {
    auto in = open_input(cfg.schema_path);
    try {
      custom = TagsetSchema::load(in);
    } catch (const SchemaError& e) {
      throw Failure(cfg.schema_path + ": " + e.what());
    }
  }
  const TagsetSchema& schema = custom ? *custom : TagsetSchema::default_schema();

  auto in = open_input(cfg.input);
  ordered_json violations = ordered_json::array();
  ordered_json classified = ordered_json::array();
  TextTable problems({{"Line", TextTable::Align::right}, {"Tag"}, {"Problem"}});
  TextTable kinds({{"Line", TextTable::Align::right},
                   {"Tag"}, {"Kind"}, {"Aspect"}, {"Aggregate"}, {"Variant"}});

  std::size_t checked = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    // a bare tag per line, or a token line whose last field is the tag
    auto tab = line.rfind('\t');
    std::string text = tab == std::string::npos ? line : line.substr(tab + 1);
    ++checked;

    std::optional<PosTag> tag;
    try {
      tag = PosTag::decode(text);
    } catch (const TagError& e) {
      bool length = e.kind() == TagError::Kind::wrong_length;
      violations.push_back({{"line", line_no},
                            {"tag", text},
                            {"error", length ? "wrong-length" : "illegal-character"},
                            {length ? "length" : "position", e.index()}});
      problems.add_row({std::to_string(line_no), text,
                        length ? "wrong length " + std::to_string(e.index())
                               : "illegal character at position " + std::to_string(e.index())});
      continue;
    }
    for (const auto& v : validate(*tag, schema)) {
      violations.push_back({{"line", line_no},
                            {"tag", tag->encode()},
                            {"error", "not-in-schema"},
                            {"position", v.position},
                            {"value", std::string(1, v.value)}});
      problems.add_row({std::to_string(line_no), tag->encode(),
                        "position " + std::to_string(v.position) + " value '" +
                            std::string(1, v.value) + "' not in schema"});
    }
    if (cfg.classify_tags) {
      auto q = classify(*tag, schema);
      std::string aggregate = q.aggregate ? std::string(1, *q.aggregate) : "";
      classified.push_back({{"line", line_no},
                            {"tag", tag->encode()},
                            {"kind", to_string(q.kind)},
                            {"aspect", to_string(q.aspect)},
                            {"aggregate", q.aggregate ? ordered_json(aggregate) : ordered_json()},
                            {"variant", to_string(q.variant)}});
      kinds.add_row({std::to_string(line_no), tag->encode(), std::string(to_string(q.kind)),
                     std::string(to_string(q.aspect)), aggregate.empty() ? "-" : aggregate,
                     std::string(to_string(q.variant))});
    }
  }

  if (cfg.json()) {
    ordered_json report{{"checked", checked}, {"violations", violations}};
    if (cfg.classify_tags) report["tags"] = classified;
    write_json(out, report);
  } else {
    out << "Checked " << checked << " tag(s), " << violations.size() << " violation(s)\n";
    if (!violations.empty()) {
      out << '\n';
      problems.print(out);
    }
    if (cfg.classify_tags) {
      out << '\n';
      kinds.print(out);
    }
  }
  return violations.empty() ? k_exit_clean : k_exit_findings;
}

int dict_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto dict = load_dictionary(cfg.input, err);
  auto report = check(dict, cfg.numbering);

  if (cfg.json()) {
    ordered_json dups = ordered_json::array();
    for (const auto& d : report.duplicate_tag_forms)
      dups.push_back({{"lemma", d.lemma}, {"tag", d.tag}, {"forms", d.forms}});
    ordered_json advisories = ordered_json::array();
    for (const auto& a : report.numbering_advisories)
      advisories.push_back({{"base", a.base}, {"lemmas", a.lemmas}});
    write_json(out, {{"duplicateTagForms", dups}, {"numberingAdvisories", advisories}});
  } else {
    TextTable table({{"Finding"}, {"Lemma"}, {"Detail"}});
    for (const auto& d : report.duplicate_tag_forms) {
      std::string forms;
      for (const auto& f : d.forms) forms += (forms.empty() ? "" : ", ") + f;
      table.add_row({"DuplicateTagForm", d.lemma, d.tag + ": " + forms});
    }
    for (const auto& a : report.numbering_advisories) {
      std::string lemmas;
      for (const auto& l : a.lemmas) lemmas += (lemmas.empty() ? "" : ", ") + l;
      table.add_row({"NumberingAdvisory", a.base, lemmas});
    }
    out << report.duplicate_tag_forms.size() << " duplicate tag/form finding(s), "
        << report.numbering_advisories.size() << " numbering advisory(ies)\n";
    if (!report.duplicate_tag_forms.empty() || !report.numbering_advisories.empty()) {
      out << '\n';
      table.print(out);
    }
  }
  bool clean = report.duplicate_tag_forms.empty() && report.numbering_advisories.empty();
  return clean ? k_exit_clean : k_exit_findings;
}

int dict_diff(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto old_dict = load_dictionary(cfg.input, err);
  auto new_dict = load_dictionary(cfg.second_input, err);
  auto d = diff(old_dict, new_dict);

  if (cfg.json()) {
    write_json(out, {{"paradigmsOriginal", d.old_paradigms},
                     {"paradigmsNew", d.new_paradigms},
                     {"removed", d.removed.size()},
                     {"added", d.added.size()},
                     {"changed", d.changed.size()},
                     {"removedLemmas", d.removed},
                     {"addedLemmas", d.added},
                     {"changedLemmas", d.changed}});
  } else {
    TextTable table({{"Description"}, {"Volume", TextTable::Align::right}});
    table.add_row({"Paradigms in original version", group_thousands(d.old_paradigms)});
    table.add_row({"Paradigms in new version", group_thousands(d.new_paradigms)});
    table.add_row({"Paradigms removed", group_thousands(d.removed.size())});
    table.add_row({"Paradigms added", group_thousands(d.added.size())});
    table.add_row({"Paradigms changed", group_thousands(d.changed.size())});
    table.print(out);
  }
  bool same = d.removed.empty() && d.added.empty() && d.changed.empty();
  return same ? k_exit_clean : k_exit_findings;
}

int dict_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto dict = load_dictionary(cfg.input, err);
  auto s = stats(dict);

  if (cfg.json()) {
    ordered_json report{{"paradigms", s.paradigms}, {"forms", s.forms}, {"triples", s.triples}};
    if (cfg.lookup) {
      ordered_json analyses = ordered_json::array();
      for (const auto& a : dict.analyses(cfg.lookup_form))
        analyses.push_back({{"lemma", a.paradigm->lemma_text}, {"tag", a.tag.encode()}});
      report["lookup"] = {{"form", cfg.lookup_form}, {"analyses", analyses}};
    }
    write_json(out, report);
  } else {
    TextTable table({{"Description"}, {"Volume", TextTable::Align::right}});
    table.add_row({"Paradigms", group_thousands(s.paradigms)});
    table.add_row({"Distinct forms", group_thousands(s.forms)});
    table.add_row({"Lemma-tag-form triples", group_thousands(s.triples)});
    table.print(out);
    if (cfg.lookup) {
      out << "\nAnalyses of '" << cfg.lookup_form << "':\n";
      TextTable analyses({{"Lemma"}, {"Tag"}});
      for (const auto& a : dict.analyses(cfg.lookup_form))
        analyses.add_row({a.paradigm->lemma_text, a.tag.encode()});
      analyses.print(out);
    }
  }
  return k_exit_clean;
}

ordered_json explanation_json(const TokenAnalysis& token, const Explanation& e) {
  auto list = [&token](const std::vector<Analysis>& analyses) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : analyses) {
      auto c = compare(token.lemma, a.lemma());
      arr.push_back({{"lemma", a.paradigm->lemma_text},
                     {"tag", a.tag.encode()},
                     {"sameBase", c.same_base},
                     {"sameIndex", c.same_index},
                     {"sameTechnicalSuffix", c.same_technical_suffix}});
    }
    return arr;
  };
  auto proper = token.lemma.proper();
  return {{"location", location_json(token.location)},
          {"form", token.form},
          {"lemma", token.lemma.serialize()},
          {"lemmaProper", proper.text()},
          {"tag", token.tag.encode()},
          {"class", json_key(e.result)},
          {"analyses", e.analysis_count},
          {"fullMatch", list(e.full_match)},
          {"commentChange", list(e.comment_change)},
          {"senseChange", list(e.sense_change)},
          {"tagChange", list(e.tag_change)}};
}

int audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto dict = load_dictionary(cfg.second_input, err);
  auto corpus = open_input(cfg.input);

  std::ofstream explain_out;
  if (!cfg.explain_path.empty()) {
    explain_out.open(cfg.explain_path, std::ios::binary);
    if (!explain_out) throw Failure("cannot write '" + cfg.explain_path + "'");
  }

  AuditReport report(cfg.samples);
  CorpusReader reader(corpus);
  try {
    while (auto token = reader.next()) {
      auto cls = classify(*token, dict);
      report.add(cls, token->location);
      if (explain_out.is_open() && cls != InconsistencyClass::full_match)
        explain_out << explanation_json(*token, explain(*token, dict)).dump() << '\n';
    }
  } catch (const CorpusError& e) {
    throw Failure(cfg.input + ": " + e.what());
  }

  if (cfg.json()) {
    ordered_json classes = ordered_json::object();
    for (auto cls : k_all_classes) {
      ordered_json samples = ordered_json::array();
      for (const auto& loc : report.samples(cls)) samples.push_back(location_json(loc));
      classes[std::string(json_key(cls))] = {
          {"count", report.count(cls)},
          {"percent", format_percent(report.percent_hundredths(cls))},
          {"samples", samples}};
    }
    write_json(out, {{"total", report.total()}, {"classes", classes}});
  } else {
    TextTable table({{"Type of inconsistency"},
                     {"%", TextTable::Align::right},
                     {"Forms", TextTable::Align::right}});
    for (auto cls : k_all_classes) {
      if (report.count(cls) == 0) continue;
      table.add_row({std::string(label(cls)), format_percent(report.percent_hundredths(cls)) + "%",
                     group_thousands(report.count(cls))});
    }
    table.print(out);
  }
  bool clean = report.count(InconsistencyClass::full_match) == report.total();
  return clean ? k_exit_clean : k_exit_findings;
}

int layers_validate(const RunConfig& cfg, std::ostream& out) {
  std::optional<FunctorSchema> custom;
  if (!cfg.functors_path.empty()) {
    auto in = open_input(cfg.functors_path);
    try {
      custom = FunctorSchema::load(in);
    } catch (const LayerSchemaError& e) {
      throw Failure(cfg.functors_path + ": " + e.what());
    }
  }
  const FunctorSchema& functors = custom ? *custom : FunctorSchema::default_schema();

  std::optional<LayerDocument> doc;
  {
    auto in = open_input(cfg.input);
    try {
      doc = load_document(in);
    } catch (const LayerSchemaError& e) {
      throw Failure(cfg.input + ": " + e.what());
    }
  }
  std::optional<ValencyLexicon> lexicon;
  if (!cfg.lexicon_path.empty()) {
    auto in = open_input(cfg.lexicon_path);
    try {
      lexicon = ValencyLexicon::load(in, functors);
    } catch (const LayerSchemaError& e) {
      throw Failure(cfg.lexicon_path + ": " + e.what());
    } catch (const ValencyLexicon::DuplicateFrameId& e) {
      throw Failure(cfg.lexicon_path + ": " + e.what());
    }
  }

  std::vector<std::pair<std::string, Violation>> all;
  auto collect = [&all](const char* check_name, std::vector<Violation> found) {
    for (auto& v : found) all.emplace_back(check_name, std::move(v));
  };
  collect("links", validate_links(*doc));
  if (!doc->a.empty()) collect("a-tree", validate_a_tree(*doc));
  if (!doc->t.empty()) collect("t-tree", validate_t_tree(*doc, functors));
  if (lexicon) collect("valency", check_valency(*doc, *lexicon));

  if (cfg.json()) {
    ordered_json violations = ordered_json::array();
    for (const auto& [check_name, v] : all)
      violations.push_back(
          {{"check", check_name}, {"code", v.code}, {"node", v.node}, {"message", v.message}});
    write_json(out, {{"w", doc->w.size()},
                     {"m", doc->m.size()},
                     {"a", doc->a.size()},
                     {"t", doc->t.size()},
                     {"violations", violations}});
  } else {
    out << doc->w.size() << " w, " << doc->m.size() << " m, " << doc->a.size() << " a, "
        << doc->t.size() << " t node(s); " << all.size() << " violation(s)\n";
    if (!all.empty()) {
      TextTable table({{"Check"}, {"Code"}, {"Node"}, {"Message"}});
      for (const auto& [check_name, v] : all) table.add_row({check_name, v.code, v.node, v.message});
      out << '\n';
      table.print(out);
    }
  }
  return all.empty() ? k_exit_clean : k_exit_findings;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positional tag, lemma, dictionary and treebank layer checker", "pdtc"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--schema", cfg.schema_path, "Tagset schema JSON (default: bundled schema)");
  app.add_option("--samples", cfg.samples, "Sample locations kept per audit class")
      ->capture_default_str();
  app.add_option("--output", cfg.output_path, "Write the report here instead of standard output");

  auto* tags = app.add_subcommand("tags-validate", "Validate tags, one per line or in a corpus");
  tags->add_option("input", cfg.input, "Tag list or vertical corpus")->required();
  tags->add_flag("--classify", cfg.classify_tags, "Also report kind, aspect, aggregate and variant");

  auto* check_cmd = app.add_subcommand("dict-check", "Check dictionary paradigms");
  check_cmd->add_option("dictionary", cfg.input, "Dictionary file")->required();
  check_cmd->add_flag("--numbering", cfg.numbering, "Report homonym numbers without a formal basis");

  auto* diff_cmd = app.add_subcommand("dict-diff", "Compare two dictionary versions");
  diff_cmd->add_option("old", cfg.input, "Original dictionary")->required();
  diff_cmd->add_option("new", cfg.second_input, "New dictionary")->required();

  auto* stats_cmd = app.add_subcommand("dict-stats", "Dictionary size summary");
  stats_cmd->add_option("dictionary", cfg.input, "Dictionary file")->required();
  auto* lookup = stats_cmd->add_option("--lookup", cfg.lookup_form, "Also list the analyses of a form");

  auto* audit_cmd = app.add_subcommand("audit", "Audit corpus annotation against a dictionary");
  audit_cmd->add_option("corpus", cfg.input, "Vertical corpus file")->required();
  audit_cmd->add_option("dictionary", cfg.second_input, "Dictionary file")->required();
  audit_cmd->add_option("--explain", cfg.explain_path,
                        "Write one JSON line of evidence per inconsistent token to this file");

  auto* layers_cmd = app.add_subcommand("layers-validate", "Validate a layer document");
  layers_cmd->add_option("document", cfg.input, "Layer document JSON")->required();
  layers_cmd->add_option("--lexicon", cfg.lexicon_path, "Valency lexicon JSON");
  layers_cmd->add_option("--functors", cfg.functors_path, "Functor schema JSON (default: bundled)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return k_exit_failure;
  }
  cfg.lookup = lookup->count() > 0;

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.output_path << "'\n";
      return k_exit_failure;
    }
  }
  std::ostream& sink = file.is_open() ? static_cast<std::ostream&>(file) : out;

  try {
    if (tags->parsed()) return tags_validate(cfg, sink);
    if (check_cmd->parsed()) return dict_check(cfg, sink, err);
    if (diff_cmd->parsed()) return dict_diff(cfg, sink, err);
    if (stats_cmd->parsed()) return dict_stats(cfg, sink, err);
    if (audit_cmd->parsed()) return audit(cfg, sink, err);
    if (layers_cmd->parsed()) return layers_validate(cfg, sink);
  } catch (const Failure& e) {
    err << "error: " << e.what() << '\n';
    return k_exit_failure;
  }
  return k_exit_failure;
}

}  // namespace pdtc
