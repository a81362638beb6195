#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ldq/term.hpp"

namespace ldq {

struct DocumentId {
  std::string value;

  friend bool operator==(const DocumentId&, const DocumentId&) = default;
  friend auto operator<=>(const DocumentId&, const DocumentId&) = default;
};

// An abstract source of linked documents: a partial dereference map from
// URIs to documents plus a finite triple set per document. Implementations
// must be deterministic and are immutable after construction, so concurrent
// readers are safe.
class WebOfLinkedData {
 public:
  virtual ~WebOfLinkedData() = default;

  // Authoritative document for `uri`, or nullopt for a broken link.
  // Never fails, whatever the URI.
  virtual std::optional<DocumentId> dereference(const Term& uri) const = 0;

  // The document's finite triple set.
  virtual TripleSet data(const DocumentId& doc) const = 0;

  // Whether the full dereference map can be enumerated.
  virtual bool materializable() const = 0;

  // All (URI, document) pairs of the dereference map, in URI order.
  // Throws NotMaterializable otherwise.
  virtual std::vector<std::pair<Term, DocumentId>> adoc_entries() const = 0;

  // Canonical enumeration of the URI namespace where dereference can
  // succeed; nullopt past the end of a finite namespace.
  virtual std::optional<Term> namespace_uri(std::uint64_t index) const = 0;
};

// Union of the data of all documents. Throws NotMaterializable.
TripleSet all_data(const WebOfLinkedData& web);

// Number of distinct documents of a materializable web.
std::uint64_t document_count(const WebOfLinkedData& web);

// A fully materialized web validated at construction: the dereference map is
// surjective onto the documents and maps only to known documents; blank node
// scoping is structural.
class FiniteWeb final : public WebOfLinkedData {
 public:
  FiniteWeb(std::map<DocumentId, TripleSet> documents, std::map<Term, DocumentId> adoc);

  std::optional<DocumentId> dereference(const Term& uri) const override;
  TripleSet data(const DocumentId& doc) const override;
  bool materializable() const override { return true; }
  std::vector<std::pair<Term, DocumentId>> adoc_entries() const override;
  std::optional<Term> namespace_uri(std::uint64_t index) const override;

  const std::map<DocumentId, TripleSet>& documents() const { return documents_; }
  std::set<DocumentId> document_ids() const;

 private:
  std::map<DocumentId, TripleSet> documents_;
  std::map<Term, DocumentId> adoc_;
};

// The subweb over `docs`: data unchanged, dereference restricted to URIs that
// map into `docs`. Throws UnknownDocument if a doc id is not part of `web`.
FiniteWeb induced_subweb(const FiniteWeb& web, const std::set<DocumentId>& docs);

// Web-description file: a JSON object
//   { "documents": { "<docid>": [ ["<s>","<p>","<o>"], ... ], ... },
//     "adoc": { "<uri>": "<docid>", ... } }
// with triple positions in textual term syntax. `_:label` is scoped to the
// containing document; `_:otherdoc/label` is rejected as blank-node sharing.
FiniteWeb parse_web(const std::string& json_text);
FiniteWeb load_web(const std::string& path);

// Infinite chain over <num:K> (K >= 1): document K holds a single triple
// linking K to K+1 via <num:succ>. Dereference is defined on <num:K> only.
class NumberWeb final : public WebOfLinkedData {
 public:
  std::optional<DocumentId> dereference(const Term& uri) const override;
  TripleSet data(const DocumentId& doc) const override;
  bool materializable() const override { return false; }
  std::vector<std::pair<Term, DocumentId>> adoc_entries() const override;
  std::optional<Term> namespace_uri(std::uint64_t index) const override;
};

// Chain over <chain:K>: document K links to K+1 via <chain:next>; the last
// document of a finite chain is empty. Infinite when length is nullopt.
class ChainWeb final : public WebOfLinkedData {
 public:
  explicit ChainWeb(std::optional<std::uint64_t> length);

  std::optional<DocumentId> dereference(const Term& uri) const override;
  TripleSet data(const DocumentId& doc) const override;
  bool materializable() const override { return length_.has_value(); }
  std::vector<std::pair<Term, DocumentId>> adoc_entries() const override;
  std::optional<Term> namespace_uri(std::uint64_t index) const override;

 private:
  std::optional<std::uint64_t> length_;
};

// Star over <star:K>: every document K links back to document 1 via
// <star:first> (document 1 links to itself). Infinite when size is nullopt.
class StarWeb final : public WebOfLinkedData {
 public:
  explicit StarWeb(std::optional<std::uint64_t> size);

  std::optional<DocumentId> dereference(const Term& uri) const override;
  TripleSet data(const DocumentId& doc) const override;
  bool materializable() const override { return size_.has_value(); }
  std::vector<std::pair<Term, DocumentId>> adoc_entries() const override;
  std::optional<Term> namespace_uri(std::uint64_t index) const override;

 private:
  std::optional<std::uint64_t> size_;
};

NumberWeb number_web();
ChainWeb chain_web(std::optional<std::uint64_t> length);
StarWeb star_web(std::optional<std::uint64_t> size);

// Selector syntax: gen:numbers | gen:chain:N | gen:chain:inf | gen:star:N |
// gen:star:inf. Throws BadFile for anything else.
std::unique_ptr<WebOfLinkedData> make_generator(const std::string& selector);

}  // namespace ldq
