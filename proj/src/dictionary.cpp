#include "pdtc/dictionary.hpp"

#include <algorithm>

namespace pdtc {

Dictionary::Dictionary(const Dictionary& other) : duplicates_(other.duplicates_) {
  for (const auto& [key, paradigm] : other.paradigms_)
    for (const auto& entry : paradigm.entries) insert(paradigm.lemma, entry.tag, entry.form);
}

Dictionary& Dictionary::operator=(const Dictionary& other) {
  if (this != &other) {
    Dictionary copy(other);
    *this = std::move(copy);
  }
  return *this;
}

bool Dictionary::insert(const Lemma& lemma, const PosTag& tag, std::string_view form) {
  auto key = lemma.serialize();
  auto it = paradigms_.find(key);
  if (it == paradigms_.end()) {
    Paradigm paradigm{lemma, key, lemma.technical_suffix(), {}};
    it = paradigms_.emplace(std::move(key), std::move(paradigm)).first;
  }
  if (!it->second.entries.insert({std::string(form), tag}).second) return false;

  auto slot = form_index_.find(form);
  if (slot == form_index_.end()) slot = form_index_.emplace(std::string(form), std::vector<Analysis>{}).first;
  slot->second.push_back({&it->second, tag});
  ++triples_;
  return true;
}

std::span<const Analysis> Dictionary::analyses(std::string_view form) const {
  auto it = form_index_.find(form);
  if (it == form_index_.end()) return {};
  return it->second;
}

Dictionary Dictionary::load(std::istream& in) {
  Dictionary dict;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::string_view rest = line;
    std::vector<std::string_view> fields;
    for (;;) {
      auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (fields.size() != 3)
      throw DictionaryError(DictionaryError::Kind::malformed_line, line_no,
                            "expected 3 tab-separated fields (lemma, tag, form), got " +
                                std::to_string(fields.size()));
    if (fields[2].empty())
      throw DictionaryError(DictionaryError::Kind::malformed_line, line_no, "empty form");

    std::optional<Lemma> lemma;
    try {
      lemma = Lemma::parse(fields[0]);
    } catch (const LemmaError& e) {
      throw DictionaryError(DictionaryError::Kind::lemma_parse, line_no, e.what());
    }
    std::optional<PosTag> tag;
    try {
      tag = PosTag::decode(fields[1]);
    } catch (const TagError& e) {
      throw DictionaryError(DictionaryError::Kind::tag_decode, line_no, e.what());
    }
    if (!dict.insert(*lemma, *tag, fields[2])) ++dict.duplicates_;
  }
  return dict;
}

void Dictionary::save(std::ostream& out) const {
  for (const auto& [key, paradigm] : paradigms_)
    for (const auto& entry : paradigm.entries)
      out << key << '\t' << entry.tag.raw() << '\t' << entry.form << '\n';
}

CheckReport check(const Dictionary& dict, bool numbering_policy) {
  CheckReport report;

  for (const auto& [key, paradigm] : dict.paradigms()) {
    std::map<std::string_view, std::vector<std::string>> forms_by_tag;
    for (const auto& entry : paradigm.entries) forms_by_tag[entry.tag.raw()].push_back(entry.form);
    for (auto& [tag, forms] : forms_by_tag)
      if (forms.size() > 1) report.duplicate_tag_forms.push_back({key, std::string(tag), forms});
  }

  if (!numbering_policy) return report;

  // base -> lemma proper -> set of (POS, gender, aspect) profiles
  std::map<std::string, std::map<LemmaProper, std::set<std::string>>> by_base;
  for (const auto& [key, paradigm] : dict.paradigms()) {
    auto& profile = by_base[paradigm.lemma.base()][paradigm.lemma.proper()];
    for (const auto& entry : paradigm.entries) {
      const auto& t = entry.tag;
      profile.insert({t.at(TagPosition::pos), t.at(TagPosition::gender), t.at(TagPosition::aspect)});
    }
  }
  for (const auto& [base, propers] : by_base) {
    if (propers.size() < 2) continue;
    std::map<std::set<std::string>, std::vector<std::string>> same_profile;
    for (const auto& [proper, profile] : propers) same_profile[profile].push_back(proper.text());
    for (auto& [profile, lemmas] : same_profile) {
      if (lemmas.size() < 2) continue;
      std::sort(lemmas.begin(), lemmas.end());
      report.numbering_advisories.push_back({base, std::move(lemmas)});
    }
  }
  return report;
}

namespace {

using ParadigmGroup = std::vector<const Paradigm*>;

// Paradigms keyed by lemma proper text; each group is ordered by full lemma.
std::map<std::string, ParadigmGroup> group_by_proper(const Dictionary& dict) {
  std::map<std::string, ParadigmGroup> groups;
  for (const auto& [key, paradigm] : dict.paradigms())
    groups[paradigm.lemma.proper().text()].push_back(&paradigm);
  return groups;
}

bool same_group(const ParadigmGroup& a, const ParadigmGroup& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const Paradigm* x, const Paradigm* y) {
    return x->lemma_text == y->lemma_text && x->entries == y->entries;
  });
}

}  // namespace

DictDiff diff(const Dictionary& old_dict, const Dictionary& new_dict) {
  DictDiff result;
  result.old_paradigms = old_dict.paradigms().size();
  result.new_paradigms = new_dict.paradigms().size();

  auto old_groups = group_by_proper(old_dict);
  auto new_groups = group_by_proper(new_dict);

  auto o = old_groups.begin();
  auto n = new_groups.begin();
  while (o != old_groups.end() || n != new_groups.end()) {
    if (n == new_groups.end() || (o != old_groups.end() && o->first < n->first)) {
      result.removed.push_back(o->first);
      ++o;
    } else if (o == old_groups.end() || n->first < o->first) {
      result.added.push_back(n->first);
      ++n;
    } else {
      if (!same_group(o->second, n->second)) result.changed.push_back(o->first);
      ++o;
      ++n;
    }
  }
  return result;
}

DictStats stats(const Dictionary& dict) {
  return {dict.paradigms().size(), dict.form_count(), dict.triple_count()};
}

}  // namespace pdtc
