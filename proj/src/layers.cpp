#include "pdtc/layers.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>
#include <unordered_set>

#include "pdtc/embedded_functors.hpp"

namespace pdtc {

using nlohmann::json;

namespace {

const json& field(const json& node, const char* key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) throw LayerSchemaError(path + "/" + key, "missing field");
  return *it;
}

std::string string_field(const json& node, const char* key, const std::string& path) {
  const auto& value = field(node, key, path);
  if (!value.is_string()) throw LayerSchemaError(path + "/" + key, "expected a string");
  return value.get<std::string>();
}

std::string optional_string(const json& node, const char* key, const std::string& path) {
  return node.contains(key) ? string_field(node, key, path) : std::string{};
}

std::optional<std::string> nullable_string(const json& node, const char* key,
                                           const std::string& path) {
  auto it = node.find(key);
  if (it == node.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw LayerSchemaError(path + "/" + key, "expected a string or null");
  return it->get<std::string>();
}

long integer_field(const json& node, const char* key, const std::string& path) {
  const auto& value = field(node, key, path);
  if (!value.is_number_integer()) throw LayerSchemaError(path + "/" + key, "expected an integer");
  return value.get<long>();
}

std::vector<std::string> string_list(const json& node, const char* key, const std::string& path) {
  const auto& value = field(node, key, path);
  if (!value.is_array()) throw LayerSchemaError(path + "/" + key, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string())
      throw LayerSchemaError(path + "/" + key + "/" + std::to_string(i), "expected a string");
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

const json& layer(const json& doc, const char* key, bool required) {
  static const json empty = json::array();
  auto it = doc.find(key);
  if (it == doc.end()) {
    if (required) throw LayerSchemaError(std::string("/") + key, "missing layer");
    return empty;
  }
  if (!it->is_array()) throw LayerSchemaError(std::string("/") + key, "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i)
    if (!(*it)[i].is_object())
      throw LayerSchemaError(std::string("/") + key + "/" + std::to_string(i), "expected an object");
  return *it;
}

}  // namespace

std::optional<std::string> TNode::parent() const {
  auto it = attrs.find("parent");
  if (it == attrs.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

LayerDocument parse_document(const json& doc) {
  if (!doc.is_object()) throw LayerSchemaError("", "document must be a JSON object");
  LayerDocument out;

  const auto& w = layer(doc, "w", true);
  std::unordered_set<std::string> w_ids;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto path = "/w/" + std::to_string(i);
    out.w.push_back({string_field(w[i], "id", path), string_field(w[i], "text", path)});
    w_ids.insert(out.w.back().id);
  }

  const auto& m = layer(doc, "m", true);
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto path = "/m/" + std::to_string(i);
    auto id = string_field(m[i], "id", path);
    auto w_refs = string_list(m[i], "wRefs", path);
    for (std::size_t r = 0; r < w_refs.size(); ++r)
      if (!w_ids.count(w_refs[r]))
        throw LayerSchemaError(path + "/wRefs/" + std::to_string(r),
                               "m-token '" + id + "' refers to unknown w-token '" + w_refs[r] + "'");

    auto lemma_text = string_field(m[i], "lemma", path);
    auto tag_text = string_field(m[i], "tag", path);
    std::optional<Lemma> lemma;
    std::optional<PosTag> tag;
    try {
      lemma = Lemma::parse(lemma_text);
    } catch (const LemmaError& e) {
      throw LayerSchemaError(path + "/lemma", "m-token '" + id + "': " + e.what(),
                             LayerSchemaError::Kind::lemma_parse, id);
    }
    try {
      tag = PosTag::decode(tag_text);
    } catch (const TagError& e) {
      throw LayerSchemaError(path + "/tag", "m-token '" + id + "': " + e.what(),
                             LayerSchemaError::Kind::tag_decode, id);
    }
    out.m.push_back({id, optional_string(m[i], "sent", path), std::move(w_refs),
                     string_field(m[i], "form", path), std::move(*lemma), *tag});
  }

  const auto& a = layer(doc, "a", false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto path = "/a/" + std::to_string(i);
    if (!a[i].contains("parentId")) throw LayerSchemaError(path + "/parentId", "missing field");
    out.a.push_back({string_field(a[i], "id", path), string_field(a[i], "sent", path),
                     string_field(a[i], "mRef", path), nullable_string(a[i], "parentId", path),
                     string_field(a[i], "afun", path), integer_field(a[i], "ord", path)});
  }

  const auto& t = layer(doc, "t", false);
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto path = "/t/" + std::to_string(i);
    TNode node;
    node.id = string_field(t[i], "id", path);
    node.sent = string_field(t[i], "sent", path);
    node.a_refs = t[i].contains("aRefs") ? string_list(t[i], "aRefs", path) : std::vector<std::string>{};
    node.functor = string_field(t[i], "functor", path);
    node.frame_ref = nullable_string(t[i], "frameRef", path);
    if (auto it = t[i].find("generated"); it != t[i].end()) {
      if (!it->is_boolean()) throw LayerSchemaError(path + "/generated", "expected a boolean");
      node.generated = it->get<bool>();
    }
    node.deep_ord = integer_field(t[i], "deepOrd", path);
    if (auto it = t[i].find("attrs"); it != t[i].end()) {
      if (!it->is_object()) throw LayerSchemaError(path + "/attrs", "expected an object");
      node.attrs = *it;
      nullable_string(node.attrs, "parent", path + "/attrs");
    }
    out.t.push_back(std::move(node));
  }
  return out;
}

LayerDocument load_document(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw LayerSchemaError("", std::string("not valid JSON: ") + e.what());
  }
  return parse_document(doc);
}

// ---------------------------------------------------------------------------
// link integrity

std::vector<Violation> validate_links(const LayerDocument& doc) {
  std::vector<Violation> out;

  auto collect_ids = [&out](const auto& nodes, const char* layer_name) {
    std::unordered_set<std::string> ids;
    for (const auto& node : nodes)
      if (!ids.insert(node.id).second)
        out.push_back({"duplicate-id", node.id,
                       std::string("id '") + node.id + "' occurs more than once in the " +
                           layer_name + "-layer"});
    return ids;
  };
  auto w_ids = collect_ids(doc.w, "w");
  auto m_ids = collect_ids(doc.m, "m");
  auto a_ids = collect_ids(doc.a, "a");
  collect_ids(doc.t, "t");

  auto dangling = [&out](const std::string& node, const std::string& ref, const char* target) {
    out.push_back({"dangling-ref", node,
                   "'" + node + "' refers to missing " + target + "-node '" + ref + "'"});
  };

  for (const auto& m : doc.m)
    for (const auto& ref : m.w_refs)
      if (!w_ids.count(ref)) dangling(m.id, ref, "w");

  std::unordered_map<std::string, std::string> m_owner;
  for (const auto& a : doc.a) {
    if (!m_ids.count(a.m_ref)) {
      dangling(a.id, a.m_ref, "m");
      continue;
    }
    auto [it, fresh] = m_owner.emplace(a.m_ref, a.id);
    if (!fresh)
      out.push_back({"shared-mref", a.id,
                     "'" + a.id + "' and '" + it->second + "' both refer to m-token '" + a.m_ref + "'"});
  }

  for (const auto& t : doc.t) {
    if (t.generated && !t.a_refs.empty())
      out.push_back({"generated-has-arefs", t.id, "generated node '" + t.id + "' refers to a-nodes"});
    if (!t.generated && t.a_refs.empty())
      out.push_back({"missing-arefs", t.id, "node '" + t.id + "' is not generated but has no a-nodes"});
    for (const auto& ref : t.a_refs)
      if (!a_ids.count(ref)) dangling(t.id, ref, "a");
  }
  return out;
}

// ---------------------------------------------------------------------------
// tree shape

namespace {

struct TreeNode {
  const std::string* id;
  std::optional<std::string> parent;
  long ord;
};

struct Sentence {
  std::string id;
  std::vector<TreeNode> nodes;
};

// Groups nodes by sentence id, sentences in order of first appearance.
template <typename Node, typename ParentFn, typename OrdFn>
std::vector<Sentence> sentences(const std::vector<Node>& nodes, ParentFn parent_of, OrdFn ord_of) {
  std::vector<Sentence> out;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& node : nodes) {
    auto [it, fresh] = slot.emplace(node.sent, out.size());
    if (fresh) out.push_back({node.sent, {}});
    out[it->second].nodes.push_back({&node.id, parent_of(node), ord_of(node)});
  }
  return out;
}

// Shared shape checks for a- and t-trees. `ord_name` names the ordering
// attribute in messages and violation codes.
void check_tree(const Sentence& sentence, const std::unordered_set<std::string>& all_ids,
                const std::string& ord_name, std::vector<Violation>& out) {
  const auto& nodes = sentence.nodes;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(*nodes[i].id, i);

  // parent[i] == npos: root, or a parent outside the sentence
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(nodes.size(), npos);
  std::size_t roots = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& p = nodes[i].parent;
    if (!p) {
      ++roots;
      continue;
    }
    if (auto it = index.find(*p); it != index.end()) {
      parent[i] = it->second;
    } else if (all_ids.count(*p)) {
      out.push_back({"parent-outside-sentence", *nodes[i].id,
                     "parent '" + *p + "' of '" + *nodes[i].id + "' is in another sentence"});
    } else {
      out.push_back({"dangling-parent", *nodes[i].id,
                     "parent '" + *p + "' of '" + *nodes[i].id + "' does not exist"});
    }
  }
  if (roots != 1)
    out.push_back({"root-count", sentence.id,
                   "sentence '" + sentence.id + "' has " + std::to_string(roots) +
                       " roots, expected 1"});

  // 0 unvisited, 1 on the current path, 2 finished
  std::vector<char> state(nodes.size(), 0);
  for (std::size_t start = 0; start < nodes.size(); ++start) {
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (cur != npos && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = parent[cur];
    }
    if (cur != npos && state[cur] == 1) {
      auto begin = std::find(path.begin(), path.end(), cur);
      std::vector<std::string> members;
      for (auto it = begin; it != path.end(); ++it) members.push_back(*nodes[*it].id);
      auto first = std::min_element(members.begin(), members.end());
      std::string chain;
      for (const auto& id : members) chain += (chain.empty() ? "" : " -> ") + id;
      out.push_back({"cycle", *first, "cycle through " + chain});
    }
    for (auto i : path) state[i] = 2;
  }

  std::vector<long> ords;
  for (const auto& node : nodes) ords.push_back(node.ord);
  std::sort(ords.begin(), ords.end());
  for (std::size_t i = 0; i < ords.size(); ++i) {
    if (ords[i] != static_cast<long>(i + 1)) {
      out.push_back({ord_name + "-permutation", sentence.id,
                     ord_name + " values of sentence '" + sentence.id +
                         "' are not a permutation of 1.." + std::to_string(nodes.size())});
      break;
    }
  }
}

}  // namespace

std::vector<Violation> validate_a_tree(const LayerDocument& doc) {
  std::vector<Violation> out;
  std::unordered_set<std::string> ids;
  for (const auto& a : doc.a) ids.insert(a.id);

  for (const auto& sentence : sentences(doc.a, [](const ANode& n) { return n.parent; },
                                        [](const ANode& n) { return n.ord; }))
    check_tree(sentence, ids, "ord", out);

  for (const auto& a : doc.a)
    if (a.afun.empty()) out.push_back({"empty-afun", a.id, "'" + a.id + "' has no afun"});
  return out;
}

std::vector<Violation> validate_t_tree(const LayerDocument& doc, const FunctorSchema& functors) {
  std::vector<Violation> out;
  std::unordered_set<std::string> ids;
  for (const auto& t : doc.t) ids.insert(t.id);

  for (const auto& sentence : sentences(doc.t, [](const TNode& n) { return n.parent(); },
                                        [](const TNode& n) { return n.deep_ord; }))
    check_tree(sentence, ids, "deepOrd", out);

  for (const auto& t : doc.t)
    if (!functors.contains(t.functor))
      out.push_back({"unknown-functor", t.id, "'" + t.id + "' has unknown functor '" + t.functor + "'"});
  return out;
}

// ---------------------------------------------------------------------------
// functor schema

namespace {

std::set<std::string, std::less<>> functor_list(const json& doc, const char* key, bool required) {
  std::set<std::string, std::less<>> out;
  auto it = doc.find(key);
  if (it == doc.end()) {
    if (required) throw LayerSchemaError(std::string("/") + key, "missing field");
    return out;
  }
  if (!it->is_array()) throw LayerSchemaError(std::string("/") + key, "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& v = (*it)[i];
    if (!v.is_string() || v.get_ref<const std::string&>().empty())
      throw LayerSchemaError(std::string("/") + key + "/" + std::to_string(i),
                             "expected a functor name");
    out.insert(v.get<std::string>());
  }
  return out;
}

}  // namespace

const FunctorSchema& FunctorSchema::default_schema() {
  static const FunctorSchema schema = from_json(json::parse(embedded::k_functors_json));
  return schema;
}

FunctorSchema FunctorSchema::from_json(const json& doc) {
  if (!doc.is_object()) throw LayerSchemaError("", "functor schema must be a JSON object");
  FunctorSchema schema;
  schema.arguments_ = functor_list(doc, "arguments", true);
  schema.adjuncts_ = functor_list(doc, "adjuncts", true);
  schema.other_ = functor_list(doc, "other", false);
  for (const auto& f : schema.arguments_)
    if (schema.adjuncts_.count(f))
      throw LayerSchemaError("/adjuncts", "functor '" + f + "' is listed as argument and adjunct");
  return schema;
}

FunctorSchema FunctorSchema::load(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw LayerSchemaError("", std::string("not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

bool FunctorSchema::contains(std::string_view functor) const {
  return arguments_.count(functor) || adjuncts_.count(functor) || other_.count(functor);
}

bool FunctorSchema::is_argument(std::string_view functor) const {
  return arguments_.count(functor) > 0;
}

}  // namespace pdtc
