#include <unordered_map>

#include "pdtc/layers.hpp"

namespace pdtc {

using nlohmann::json;

ValencyLexicon ValencyLexicon::load(std::istream& in, const FunctorSchema& functors) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw LayerSchemaError("", std::string("not valid JSON: ") + e.what());
  }
  return from_json(doc, functors);
}

ValencyLexicon ValencyLexicon::from_json(const json& doc, const FunctorSchema& functors) {
  if (!doc.is_array()) throw LayerSchemaError("", "valency lexicon must be a JSON array of frames");

  ValencyLexicon lexicon;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    auto path = "/" + std::to_string(i);
    const auto& f = doc[i];
    if (!f.is_object()) throw LayerSchemaError(path, "expected a frame object");

    auto text = [&](const char* key) {
      auto it = f.find(key);
      if (it == f.end() || !it->is_string() || it->get_ref<const std::string&>().empty())
        throw LayerSchemaError(path + "/" + key, "expected a non-empty string");
      return it->get<std::string>();
    };

    ValencyFrame frame;
    frame.id = text("id");
    try {
      frame.head_lemma = Lemma::parse(text("lemma")).proper();
    } catch (const LemmaError& e) {
      throw LayerSchemaError(path + "/lemma", e.what(), LayerSchemaError::Kind::lemma_parse, frame.id);
    }

    auto slots = f.find("slots");
    if (slots == f.end() || !slots->is_array())
      throw LayerSchemaError(path + "/slots", "expected an array");
    for (std::size_t s = 0; s < slots->size(); ++s) {
      auto slot_path = path + "/slots/" + std::to_string(s);
      const auto& slot = (*slots)[s];
      if (!slot.is_object()) throw LayerSchemaError(slot_path, "expected a slot object");
      auto functor = slot.find("functor");
      if (functor == slot.end() || !functor->is_string())
        throw LayerSchemaError(slot_path + "/functor", "expected a string");
      if (!functors.contains(functor->get_ref<const std::string&>()))
        throw LayerSchemaError(slot_path + "/functor",
                               "unknown functor '" + functor->get<std::string>() + "'");
      bool obligatory = false;
      if (auto o = slot.find("obligatory"); o != slot.end()) {
        if (!o->is_boolean()) throw LayerSchemaError(slot_path + "/obligatory", "expected a boolean");
        obligatory = o->get<bool>();
      }
      frame.slots.push_back({functor->get<std::string>(), obligatory});
    }
    lexicon.add(std::move(frame));
  }
  return lexicon;
}

void ValencyLexicon::add(ValencyFrame frame) {
  if (frames_.count(frame.id)) throw DuplicateFrameId(frame.id);
  by_lemma_.emplace(frame.head_lemma, frame.id);
  auto id = frame.id;
  frames_.emplace(std::move(id), std::move(frame));
}

const ValencyFrame* ValencyLexicon::find(std::string_view id) const {
  auto it = frames_.find(id);
  return it == frames_.end() ? nullptr : &it->second;
}

std::vector<const ValencyFrame*> ValencyLexicon::frames_for(const LemmaProper& lemma) const {
  std::vector<const ValencyFrame*> out;
  auto [begin, end] = by_lemma_.equal_range(lemma);
  for (auto it = begin; it != end; ++it) out.push_back(find(it->second));
  return out;
}

std::vector<Violation> check_valency(const LayerDocument& doc, const ValencyLexicon& lexicon) {
  std::unordered_map<std::string, const MToken*> m_by_id;
  for (const auto& m : doc.m) m_by_id.emplace(m.id, &m);
  std::unordered_map<std::string, const ANode*> a_by_id;
  for (const auto& a : doc.a) a_by_id.emplace(a.id, &a);
  std::unordered_map<std::string, std::set<std::string>> child_functors;
  for (const auto& t : doc.t)
    if (auto parent = t.parent()) child_functors[*parent].insert(t.functor);

  std::vector<Violation> out;
  for (const auto& t : doc.t) {
    if (!t.frame_ref) continue;
    const ValencyFrame* frame = lexicon.find(*t.frame_ref);
    if (!frame) {
      out.push_back({"unknown-frame", t.id,
                     "'" + t.id + "' refers to unknown valency frame '" + *t.frame_ref + "'"});
      continue;
    }

    if (!t.generated) {
      bool matched = false;
      std::string seen;
      for (const auto& a_ref : t.a_refs) {
        auto a = a_by_id.find(a_ref);
        if (a == a_by_id.end()) continue;
        auto m = m_by_id.find(a->second->m_ref);
        if (m == m_by_id.end()) continue;
        auto proper = m->second->lemma.proper();
        if (proper == frame->head_lemma) matched = true;
        seen += (seen.empty() ? "" : ", ") + proper.text();
      }
      if (!matched)
        out.push_back({"lemma-mismatch", t.id,
                       "frame '" + frame->id + "' belongs to '" + frame->head_lemma.text() +
                           "' but '" + t.id + "' has lemma(s) [" + seen + "]"});
    }

    static const std::set<std::string> none;
    auto children = child_functors.find(t.id);
    const auto& present = children == child_functors.end() ? none : children->second;
    std::set<std::string> reported;
    for (const auto& slot : frame->slots) {
      if (!slot.obligatory || present.count(slot.functor) || !reported.insert(slot.functor).second)
        continue;
      out.push_back({"missing-obligatory", t.id,
                     "'" + t.id + "' lacks obligatory " + slot.functor + " of frame '" + frame->id + "'"});
    }
  }
  return out;
}

}  // namespace pdtc
