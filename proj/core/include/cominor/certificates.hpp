// JSON certificates. Common fields: kind, pattern (edge-list text),
// host_hash, branch_sets, apex. Butterfly certificates add parts and
// realization; subdivision certificates add paths and tag.

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cominor/embeddings.hpp"
#include "cominor/io.hpp"

namespace cominor {

using Model = std::variant<MinorEmbedding, ButterflyEmbedding, SubdivisionEmbedding>;

struct Certificate {
  AnyGraph pattern;
  std::string host_hash;
  Model model;

  /// "minor", "butterfly" or "subdivision".
  std::string kind() const;
};

Certificate make_certificate(const Graph& host, const Graph& pattern, MinorEmbedding mu);
Certificate make_certificate(const Graph& host, const Graph& pattern, SubdivisionEmbedding s);
Certificate make_certificate(const Digraph& host, const Digraph& pattern, ButterflyEmbedding b);
Certificate make_certificate(const Digraph& host, const Digraph& pattern, SubdivisionEmbedding s);

std::string to_json(const Certificate& c, int indent = 2);
/// Throws GraphError(kParse) on malformed input.
Certificate certificate_from_json(const std::string& text);

/// Hash match plus the model checker for the certificate's kind.
Check check_certificate(const Certificate& c, const AnyGraph& host);

}  // namespace cominor
