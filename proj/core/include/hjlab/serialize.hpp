#pragma once

#include "hjlab/coloring.hpp"
#include "hjlab/hypergraphs.hpp"

#include <string>
#include <string_view>

namespace hjlab {

inline constexpr int kSchemaVersion = 1;

/// Canonical single-line JSON: vertices in label order, edges sorted.
std::string to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(std::string_view text);

/// DIMACS-like edge listing: "p edge V E" then one 1-based "e ..." per edge.
std::string to_dimacs_edges(const Hypergraph& g);

/// FNV-1a 64-bit hash of the canonical JSON, as 16 hex digits.
std::string hypergraph_digest(const Hypergraph& g);

std::string certificate_to_json(const ColourCertificate& cert);

}  // namespace hjlab
