#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanet/geometry.hpp"
#include "spanet/graph.hpp"

namespace spanet {

enum class Protocol { push, push_and_pull };

const char* protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

struct ProtocolConfig {
    Protocol protocol = Protocol::push_and_pull;
    uint32_t source = 1;
    uint32_t max_rounds = 1u << 20;
    uint64_t seed = 1;
};

enum class Via : uint8_t { push, pull };

// One rumour delivery: `to` was uninformed at the round's start and received
// the rumour over edge {from,to}.
struct Transmission {
    uint32_t from;
    uint32_t to;
    Via via;
};

struct RoundRecord {
    std::vector<uint32_t> newly_informed; // ascending
    std::vector<Transmission> transmissions;
    uint32_t long_transmissions = 0; // only meaningful when L was configured
};

struct RumourTrace {
    uint32_t source = 0;
    uint32_t component_size = 0;
    std::vector<RoundRecord> rounds;
    std::vector<uint32_t> informed_count_per_round; // count after round k (1-based)
    std::optional<uint32_t> spread_time;            // unset if max_rounds exhausted
    std::optional<uint64_t> long_edge_transmissions; // unset when L not measured

    // round at which v was informed (source: 0); UINT32_MAX if never
    std::vector<uint32_t> informed_at;

    uint32_t informed_total() const {
        return informed_count_per_round.empty() ? 1 : informed_count_per_round.back();
    }
};

// Synchronized push / push&pull on the undirected graph. Choices are drawn
// from substreams keyed by (seed, round, vertex), so the trace is independent
// of iteration order. Pulls test the informed set at the round's start; a
// vertex informed in round k acts from round k+1. When positions and L are
// given, transmissions over edges longer than L (torus metric) are counted.
// Stops when the source's component is informed, when max_rounds is reached,
// or when the informed count reaches stop_at_count (0 = no early stop).
RumourTrace run(const Graph& g, const ProtocolConfig& cfg,
                const PointStore* positions = nullptr, std::optional<double> L = {},
                uint32_t stop_at_count = 0);

// max over informed vertices (through `through_round`, default all rounds) of
// the torus distance to the source
double containment_radius(const RumourTrace& trace, const PointStore& positions,
                          uint32_t source, uint32_t through_round = UINT32_MAX);

} // namespace spanet
