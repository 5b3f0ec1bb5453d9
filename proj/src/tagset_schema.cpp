#include <iterator>

#include "json.hpp"
#include "pdtc/embedded_tagset.hpp"
#include "pdtc/tag.hpp"

namespace pdtc {

namespace {

using nlohmann::json;

char single_char(const json& value, const std::string& where) {
  if (!value.is_string())
    throw SchemaError(where + ": expected a single-character string");
  const auto& s = value.get_ref<const std::string&>();
  if (s.size() != 1 || static_cast<unsigned char>(s[0]) < 0x21 ||
      static_cast<unsigned char>(s[0]) > 0x7E)
    throw SchemaError(where + ": '" + s + "' is not a single printable ASCII character");
  return s[0];
}

std::string char_set(const json& array, const std::string& where) {
  if (!array.is_array()) throw SchemaError(where + ": expected an array");
  std::string out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    char c = single_char(array[i], where + "/" + std::to_string(i));
    if (out.find(c) == std::string::npos) out.push_back(c);
  }
  return out;
}

void require(const std::string& set, char c, int position) {
  if (set.find(c) == std::string::npos)
    throw SchemaError("/" + std::to_string(position) + ": alphabet must include '" +
                      std::string(1, c) + "'");
}

}  // namespace

const TagsetSchema& TagsetSchema::default_schema() {
  static const TagsetSchema schema = from_json(embedded::k_tagset_json);
  return schema;
}

TagsetSchema TagsetSchema::load(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return from_json(text);
}

TagsetSchema TagsetSchema::from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("tagset schema is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("tagset schema must be a JSON object");

  TagsetSchema schema;
  for (int i = 1; i <= static_cast<int>(k_tag_length); ++i) {
    auto key = std::to_string(i);
    if (!doc.contains(key)) throw SchemaError("tagset schema lacks position " + key);
    auto& set = schema.allowed_[i - 1];
    set = char_set(doc[key], "/" + key);
    require(set, '-', i);
    if (i >= 3 && i <= 12) require(set, 'X', i);
    if (i == static_cast<int>(TagPosition::aspect))
      for (char c : {'P', 'I', 'B'}) require(set, c, i);
  }

  schema.segment_prefix_ =
      doc.contains("segmentPrefix") ? char_set(doc["segmentPrefix"], "/segmentPrefix") : "2";

  schema.variant_classes_.fill(VariantClass::other);
  schema.variant_classes_['-'] = VariantClass::none;
  if (doc.contains("variantClasses")) {
    const auto& classes = doc["variantClasses"];
    if (!classes.is_object()) throw SchemaError("/variantClasses: expected an object");
    for (const auto& [name, members] : classes.items()) {
      VariantClass cls;
      if (name == "standard") cls = VariantClass::standard;
      else if (name == "substandard") cls = VariantClass::substandard;
      else if (name == "abbreviation") cls = VariantClass::abbreviation;
      else throw SchemaError("/variantClasses: unknown class '" + name + "'");
      for (char c : char_set(members, "/variantClasses/" + name)) {
        if (c == '-') throw SchemaError("/variantClasses/" + name + ": '-' means no variant");
        schema.variant_classes_[static_cast<unsigned char>(c)] = cls;
      }
    }
  }
  return schema;
}

const std::string& TagsetSchema::allowed(int position) const {
  if (position < 1 || position > static_cast<int>(k_tag_length))
    throw std::out_of_range("tag position " + std::to_string(position) + " outside 1..15");
  return allowed_[position - 1];
}

bool TagsetSchema::allows(int position, char value) const {
  return allowed(position).find(value) != std::string::npos;
}

std::string TagsetSchema::aggregate_codes() const {
  std::string codes;
  for (char c : allowed(static_cast<int>(TagPosition::aggregate)))
    if (c != '-') codes.push_back(c);
  return codes;
}

VariantClass TagsetSchema::variant_class(char value) const {
  auto c = static_cast<unsigned char>(value);
  return c < variant_classes_.size() ? variant_classes_[c] : VariantClass::other;
}

}  // namespace pdtc
