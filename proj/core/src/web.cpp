#include "ldq/web.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ldq {

namespace {

using nlohmann::json;

// Decimal index K >= 1 of a generated URI "<prefix>K"; canonical form only
// (no leading zeros), bounded well below overflow.
std::optional<std::uint64_t> generated_index(const std::string& text, const std::string& prefix) {
  if (text.size() <= prefix.size() || text.compare(0, prefix.size(), prefix) != 0) {
    return std::nullopt;
  }
  std::string digits = text.substr(prefix.size());
  if (digits.empty() || digits.size() > 15) return std::nullopt;
  if (digits[0] == '0') return std::nullopt;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  return std::stoull(digits);
}

std::optional<std::uint64_t> uri_index(const Term& uri, const std::string& prefix) {
  if (!uri.is_uri()) return std::nullopt;
  return generated_index(uri.text(), prefix);
}

}  // namespace

TripleSet all_data(const WebOfLinkedData& web) {
  if (!web.materializable()) {
    throw Error(Errc::NotMaterializable, "cannot materialize an infinite web");
  }
  TripleSet out;
  std::set<DocumentId> seen;
  for (const auto& [uri, doc] : web.adoc_entries()) {
    if (!seen.insert(doc).second) continue;
    TripleSet d = web.data(doc);
    out.insert(d.begin(), d.end());
  }
  return out;
}

std::uint64_t document_count(const WebOfLinkedData& web) {
  std::set<DocumentId> seen;
  for (const auto& [uri, doc] : web.adoc_entries()) seen.insert(doc);
  return seen.size();
}

FiniteWeb::FiniteWeb(std::map<DocumentId, TripleSet> documents, std::map<Term, DocumentId> adoc)
    : documents_(std::move(documents)), adoc_(std::move(adoc)) {
  std::set<DocumentId> dereferenced;
  for (const auto& [uri, doc] : adoc_) {
    if (!uri.is_uri()) {
      throw Error(Errc::BadTerm, "dereference map key is not a URI: " + print_term(uri));
    }
    if (!documents_.contains(doc)) {
      throw Error(Errc::UnknownDocument, "dereference map points to unknown document '" +
                                             doc.value + "'");
    }
    dereferenced.insert(doc);
  }
  for (const auto& [doc, data] : documents_) {
    if (!dereferenced.contains(doc)) {
      throw Error(Errc::NonSurjective, "document '" + doc.value + "' has no dereferencing URI");
    }
  }
}

std::optional<DocumentId> FiniteWeb::dereference(const Term& uri) const {
  auto it = adoc_.find(uri);
  if (it == adoc_.end()) return std::nullopt;
  return it->second;
}

TripleSet FiniteWeb::data(const DocumentId& doc) const {
  auto it = documents_.find(doc);
  if (it == documents_.end()) {
    throw Error(Errc::UnknownDocument, "unknown document '" + doc.value + "'");
  }
  return it->second;
}

std::vector<std::pair<Term, DocumentId>> FiniteWeb::adoc_entries() const {
  return {adoc_.begin(), adoc_.end()};
}

std::optional<Term> FiniteWeb::namespace_uri(std::uint64_t index) const {
  if (index >= adoc_.size()) return std::nullopt;
  auto it = adoc_.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(index));
  return it->first;
}

std::set<DocumentId> FiniteWeb::document_ids() const {
  std::set<DocumentId> out;
  for (const auto& [doc, data] : documents_) out.insert(doc);
  return out;
}

FiniteWeb induced_subweb(const FiniteWeb& web, const std::set<DocumentId>& docs) {
  std::map<DocumentId, TripleSet> documents;
  for (const DocumentId& doc : docs) {
    auto it = web.documents().find(doc);
    if (it == web.documents().end()) {
      throw Error(Errc::UnknownDocument, "unknown document '" + doc.value + "'");
    }
    documents.emplace(doc, it->second);
  }
  std::map<Term, DocumentId> adoc;
  for (const auto& [uri, doc] : web.adoc_entries()) {
    if (docs.contains(doc)) adoc.emplace(uri, doc);
  }
  return FiniteWeb(std::move(documents), std::move(adoc));
}

namespace {

Term parse_document_term(const std::string& text, const std::string& docid) {
  try {
    return parse_term(text, docid);
  } catch (const Error& e) {
    if (e.code() == Errc::BlankNodeSharing) throw;
    throw Error(Errc::BadTerm,
                std::string(e.what()) + " (in document '" + docid + "')");
  }
}

Triple parse_document_triple(const json& entry, const std::string& docid) {
  if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
      !entry[1].is_string() || !entry[2].is_string()) {
    throw Error(Errc::BadFile,
                "triples must be arrays of three term strings (document '" + docid + "')");
  }
  Term s = parse_document_term(entry[0].get<std::string>(), docid);
  Term p = parse_document_term(entry[1].get<std::string>(), docid);
  Term o = parse_document_term(entry[2].get<std::string>(), docid);
  try {
    return Triple(std::move(s), std::move(p), std::move(o));
  } catch (const Error& e) {
    throw Error(Errc::BadTerm, std::string(e.what()) + " (in document '" + docid + "')");
  }
}

}  // namespace

FiniteWeb parse_web(const std::string& json_text) {
  // The callback rejects duplicate object keys, which plain JSON parsing
  // would silently collapse.
  std::vector<std::set<std::string>> key_scopes;
  json::parser_callback_t reject_duplicates =
      [&key_scopes](int, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::object_start) {
          key_scopes.emplace_back();
        } else if (event == json::parse_event_t::object_end) {
          key_scopes.pop_back();
        } else if (event == json::parse_event_t::key) {
          const auto key = parsed.get<std::string>();
          if (!key_scopes.back().insert(key).second) {
            throw Error(Errc::DuplicateDoc, "duplicate key '" + key + "'");
          }
        }
        return true;
      };

  json root;
  try {
    root = json::parse(json_text, reject_duplicates);
  } catch (const json::exception& e) {
    throw Error(Errc::BadFile, std::string("malformed web description: ") + e.what());
  }

  if (!root.is_object() || !root.contains("documents") || !root.contains("adoc") ||
      root.size() != 2 || !root["documents"].is_object() || !root["adoc"].is_object()) {
    throw Error(Errc::BadFile,
                "web description must be an object with 'documents' and 'adoc' members");
  }

  std::map<DocumentId, TripleSet> documents;
  for (const auto& [docid, triples] : root["documents"].items()) {
    if (docid.empty()) throw Error(Errc::BadFile, "empty document id");
    if (!triples.is_array()) {
      throw Error(Errc::BadFile, "document '" + docid + "' must hold an array of triples");
    }
    TripleSet data;
    for (const json& entry : triples) {
      data.insert(parse_document_triple(entry, docid));
    }
    documents.emplace(DocumentId{docid}, std::move(data));
  }

  std::map<Term, DocumentId> adoc;
  for (const auto& [uri_text, docid] : root["adoc"].items()) {
    Term uri = parse_term(uri_text);
    if (!uri.is_uri()) {
      throw Error(Errc::BadTerm, "dereference map key is not a URI: " + uri_text);
    }
    if (!docid.is_string()) {
      throw Error(Errc::BadFile, "dereference target for " + uri_text + " must be a string");
    }
    adoc.emplace(std::move(uri), DocumentId{docid.get<std::string>()});
  }

  return FiniteWeb(std::move(documents), std::move(adoc));
}

FiniteWeb load_web(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::BadFile, "cannot open '" + path + "': " + std::strerror(errno));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_web(buffer.str());
}

// --- generators ------------------------------------------------------------

namespace {

constexpr const char* kNumPrefix = "num:";
constexpr const char* kChainPrefix = "chain:";
constexpr const char* kStarPrefix = "star:";

Term numbered_uri(const std::string& prefix, std::uint64_t k) {
  return Term::uri(prefix + std::to_string(k));
}

std::vector<std::pair<Term, DocumentId>> finite_entries(const std::string& prefix,
                                                        std::uint64_t n) {
  std::vector<std::pair<Term, DocumentId>> out;
  out.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    Term u = numbered_uri(prefix, k);
    DocumentId d{u.text()};
    out.emplace_back(std::move(u), std::move(d));
  }
  return out;
}

}  // namespace

std::optional<DocumentId> NumberWeb::dereference(const Term& uri) const {
  auto k = uri_index(uri, kNumPrefix);
  if (!k) return std::nullopt;
  return DocumentId{uri.text()};
}

TripleSet NumberWeb::data(const DocumentId& doc) const {
  auto k = generated_index(doc.value, kNumPrefix);
  if (!k) throw Error(Errc::UnknownDocument, "unknown document '" + doc.value + "'");
  return {Triple(numbered_uri(kNumPrefix, *k), Term::uri("num:succ"),
                 numbered_uri(kNumPrefix, *k + 1))};
}

std::vector<std::pair<Term, DocumentId>> NumberWeb::adoc_entries() const {
  throw Error(Errc::NotMaterializable, "the number web is infinite");
}

std::optional<Term> NumberWeb::namespace_uri(std::uint64_t index) const {
  return numbered_uri(kNumPrefix, index + 1);
}

ChainWeb::ChainWeb(std::optional<std::uint64_t> length) : length_(length) {
  if (length_ && *length_ == 0) {
    throw Error(Errc::BadFile, "chain length must be positive");
  }
}

std::optional<DocumentId> ChainWeb::dereference(const Term& uri) const {
  auto k = uri_index(uri, kChainPrefix);
  if (!k || (length_ && *k > *length_)) return std::nullopt;
  return DocumentId{uri.text()};
}

TripleSet ChainWeb::data(const DocumentId& doc) const {
  auto k = generated_index(doc.value, kChainPrefix);
  if (!k || (length_ && *k > *length_)) {
    throw Error(Errc::UnknownDocument, "unknown document '" + doc.value + "'");
  }
  if (length_ && *k == *length_) return {};  // chain end
  return {Triple(numbered_uri(kChainPrefix, *k), Term::uri("chain:next"),
                 numbered_uri(kChainPrefix, *k + 1))};
}

std::vector<std::pair<Term, DocumentId>> ChainWeb::adoc_entries() const {
  if (!length_) throw Error(Errc::NotMaterializable, "the chain is infinite");
  return finite_entries(kChainPrefix, *length_);
}

std::optional<Term> ChainWeb::namespace_uri(std::uint64_t index) const {
  if (length_ && index >= *length_) return std::nullopt;
  return numbered_uri(kChainPrefix, index + 1);
}

StarWeb::StarWeb(std::optional<std::uint64_t> size) : size_(size) {
  if (size_ && *size_ == 0) {
    throw Error(Errc::BadFile, "star size must be positive");
  }
}

std::optional<DocumentId> StarWeb::dereference(const Term& uri) const {
  auto k = uri_index(uri, kStarPrefix);
  if (!k || (size_ && *k > *size_)) return std::nullopt;
  return DocumentId{uri.text()};
}

TripleSet StarWeb::data(const DocumentId& doc) const {
  auto k = generated_index(doc.value, kStarPrefix);
  if (!k || (size_ && *k > *size_)) {
    throw Error(Errc::UnknownDocument, "unknown document '" + doc.value + "'");
  }
  return {Triple(numbered_uri(kStarPrefix, *k), Term::uri("star:first"),
                 numbered_uri(kStarPrefix, 1))};
}

std::vector<std::pair<Term, DocumentId>> StarWeb::adoc_entries() const {
  if (!size_) throw Error(Errc::NotMaterializable, "the star is infinite");
  return finite_entries(kStarPrefix, *size_);
}

std::optional<Term> StarWeb::namespace_uri(std::uint64_t index) const {
  if (size_ && index >= *size_) return std::nullopt;
  return numbered_uri(kStarPrefix, index + 1);
}

NumberWeb number_web() { return NumberWeb(); }
ChainWeb chain_web(std::optional<std::uint64_t> length) { return ChainWeb(length); }
StarWeb star_web(std::optional<std::uint64_t> size) { return StarWeb(size); }

std::unique_ptr<WebOfLinkedData> make_generator(const std::string& selector) {
  auto parametric = [&](const std::string& head) -> std::optional<std::uint64_t> {
    // selector is head + ("inf" | digits); returns the finite size.
    std::string rest = selector.substr(head.size());
    if (rest == "inf") return std::nullopt;
    auto n = generated_index(rest, "");
    if (!n) throw Error(Errc::BadFile, "bad generator size in '" + selector + "'");
    return n;
  };
  if (selector == "gen:numbers") return std::make_unique<NumberWeb>();
  if (selector.starts_with("gen:chain:")) {
    return std::make_unique<ChainWeb>(parametric("gen:chain:"));
  }
  if (selector.starts_with("gen:star:")) {
    return std::make_unique<StarWeb>(parametric("gen:star:"));
  }
  throw Error(Errc::BadFile, "unknown web selector '" + selector + "'");
}

}  // namespace ldq
