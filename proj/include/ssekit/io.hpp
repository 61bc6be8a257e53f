#pragma once

#include <optional>
#include <string>

#include "ssekit/sse.hpp"

namespace ssekit {

// On-disk documents are JSON with every rational carried as a canonical
// "p/q" (or integer) string; nothing in a file is ever a float.

std::string serialize_matrix(const RatMatrix& m);
RatMatrix parse_matrix(const std::string& text);

RatMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const RatMatrix& m);

// Declared metadata is preserved verbatim on parse so that verification can
// flag stale lag/size values. Lag-0 chains carry their matrix in `initial`.
struct ChainDocument {
    std::string description;
    size_t declared_lag = 0;
    size_t declared_size = 0;
    std::optional<RatMatrix> initial;
    std::vector<EsseStep> steps;

    static ChainDocument wrap(std::string description, const SseChain& chain);
    SseChain to_chain() const;
};

std::string serialize_chain(const ChainDocument& doc);
ChainDocument parse_chain(const std::string& text);

ChainDocument read_chain_file(const std::string& path);
void write_chain_file(const std::string& path, const ChainDocument& doc);

} // namespace ssekit
