// Multi-layer treebank documents: raw tokens (w), morphology (m), surface
// syntax (a) and deep syntax (t). Each layer points down to the layer
// immediately below it: m -> w, a -> m, t -> a.
#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pdtc/lemma.hpp"
#include "pdtc/tag.hpp"

namespace pdtc {

/// Raised for documents, lexica and functor schemas that cannot be loaded.
/// `path()` is a JSON pointer to the offending value; for tag and lemma
/// failures `node()` names the node that carries them.
class LayerSchemaError : public std::runtime_error {
 public:
  enum class Kind { schema, tag_decode, lemma_parse };

  LayerSchemaError(std::string path, const std::string& message, Kind kind = Kind::schema,
                   std::string node = {})
      : std::runtime_error(path + ": " + message),
        kind_(kind),
        path_(std::move(path)),
        node_(std::move(node)) {}

  Kind kind() const { return kind_; }
  const std::string& path() const { return path_; }
  const std::string& node() const { return node_; }

 private:
  Kind kind_;
  std::string path_;
  std::string node_;
};

struct WToken {
  std::string id;
  std::string text;
};

struct MToken {
  std::string id;
  std::string sent;
  std::vector<std::string> w_refs;  // may be empty or list several tokens
  std::string form;
  Lemma lemma;
  PosTag tag;
};

struct ANode {
  std::string id;
  std::string sent;
  std::string m_ref;
  std::optional<std::string> parent;  // nullopt for the sentence root
  std::string afun;
  long ord = 0;
};

struct TNode {
  std::string id;
  std::string sent;
  std::vector<std::string> a_refs;
  std::string functor;
  std::optional<std::string> frame_ref;
  bool generated = false;
  long deep_ord = 0;
  // Everything else, carried through untouched. The tree structure lives
  // here too, under "parent" (string id, or null/absent for the root).
  nlohmann::json attrs = nlohmann::json::object();

  std::optional<std::string> parent() const;
};

struct LayerDocument {
  std::vector<WToken> w;
  std::vector<MToken> m;
  std::vector<ANode> a;
  std::vector<TNode> t;
};

/// Parses a layer document. m-layer references to unknown w tokens are
/// schema errors; dangling a/t references are left for validate_links().
LayerDocument load_document(std::istream& in);
LayerDocument parse_document(const nlohmann::json& doc);

struct Violation {
  std::string code;     // e.g. "dangling-ref", "cycle"
  std::string node;     // node id, or sentence id for per-sentence checks
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Dangling references, duplicate ids, a-nodes sharing an m-token, and
/// t-nodes whose a-references contradict their generated flag.
std::vector<Violation> validate_links(const LayerDocument& doc);

/// Per sentence: one root, parents inside the sentence, no cycles, ord a
/// permutation of 1..n, non-empty afun.
std::vector<Violation> validate_a_tree(const LayerDocument& doc);

class FunctorSchema {
 public:
  static const FunctorSchema& default_schema();
  static FunctorSchema from_json(const nlohmann::json& doc);
  static FunctorSchema load(std::istream& in);

  bool contains(std::string_view functor) const;
  bool is_argument(std::string_view functor) const;

  const std::set<std::string, std::less<>>& arguments() const { return arguments_; }
  const std::set<std::string, std::less<>>& adjuncts() const { return adjuncts_; }
  const std::set<std::string, std::less<>>& other() const { return other_; }

 private:
  std::set<std::string, std::less<>> arguments_;
  std::set<std::string, std::less<>> adjuncts_;
  std::set<std::string, std::less<>> other_;
};

/// Per sentence: rooted tree over attrs.parent, functors known to the
/// schema, deepOrd a permutation of 1..n.
std::vector<Violation> validate_t_tree(const LayerDocument& doc,
                                       const FunctorSchema& functors = FunctorSchema::default_schema());

// ---------------------------------------------------------------------------
// valency

struct ValencySlot {
  std::string functor;
  bool obligatory = false;
};

struct ValencyFrame {
  std::string id;
  LemmaProper head_lemma;
  std::vector<ValencySlot> slots;
};

class ValencyLexicon {
 public:
  class DuplicateFrameId : public std::runtime_error {
   public:
    explicit DuplicateFrameId(const std::string& id)
        : std::runtime_error("duplicate valency frame id '" + id + "'"), id_(id) {}
    const std::string& id() const { return id_; }

   private:
    std::string id_;
  };

  /// Frame slots must use functors known to `functors`.
  static ValencyLexicon load(std::istream& in,
                             const FunctorSchema& functors = FunctorSchema::default_schema());
  static ValencyLexicon from_json(const nlohmann::json& doc,
                                  const FunctorSchema& functors = FunctorSchema::default_schema());

  void add(ValencyFrame frame);

  const ValencyFrame* find(std::string_view id) const;
  std::vector<const ValencyFrame*> frames_for(const LemmaProper& lemma) const;
  std::size_t size() const { return frames_.size(); }

 private:
  std::map<std::string, ValencyFrame, std::less<>> frames_;
  std::multimap<LemmaProper, std::string> by_lemma_;
};

/// For each t-node with a frame reference: the frame exists, its head
/// lemma matches the lemma of one of the node's m-tokens (generated nodes
/// are exempt), and every obligatory functor occurs among the children.
std::vector<Violation> check_valency(const LayerDocument& doc, const ValencyLexicon& lexicon);

}  // namespace pdtc
