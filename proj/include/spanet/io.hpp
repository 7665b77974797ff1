#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanet/percolation.hpp"
#include "spanet/rgg.hpp"
#include "spanet/rumour.hpp"
#include "spanet/spa_graph.hpp"

namespace spanet {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reals are printed with 17 significant digits so files round-trip exactly.
std::string format_real(double x);

// SPA graph file:
//   spa 1 <m> <A1> <A2> <p> <n> <seed>
//   v <id> <coord_1> ... <coord_m>
//   e <child> <parent> <birth_step>
void write_spa(std::ostream& os, const SpaGraph& g);
void write_spa_file(const std::filesystem::path& path, const SpaGraph& g);
SpaGraph read_spa(std::istream& is);
SpaGraph read_spa_file(const std::filesystem::path& path);

// RGG file:
//   rgg 1 <N> <r> <metric_mode> <seed>
//   v <id> <x> <y>
//   e <u> <v>
void write_rgg(std::ostream& os, const RggSnapshot& snap);
void write_rgg_file(const std::filesystem::path& path, const RggSnapshot& snap);
RggSnapshot read_rgg(std::istream& is);
RggSnapshot read_rgg_file(const std::filesystem::path& path);

// Either graph file, by header token.
struct LoadedGraph {
    enum class Kind { spa, rgg } kind;
    Graph graph;          // undirected view
    PointStore points{2}; // positions (torus coordinates)
    std::optional<SpaGraph> spa;
    std::optional<RggSnapshot> rgg;
};
LoadedGraph load_graph_file(const std::filesystem::path& path);

// Rumour trace: per-round CSV and optional one-line-per-transmission log.
void write_trace_csv(std::ostream& os, const RumourTrace& trace);
void write_trace_events_csv(std::ostream& os, const RumourTrace& trace,
                            const PointStore* positions);

std::string crossing_report_json(const CrossingReport& report);

// Flat key/value config with optional [section] headers; a section prefixes
// following keys as "section.key". '#' starts a comment.
class KeyValueConfig {
public:
    static KeyValueConfig parse_file(const std::filesystem::path& path);
    static KeyValueConfig parse(std::istream& is);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    std::string get(const std::string& key, const std::string& fallback) const;
    double get_real(const std::string& key, double fallback) const;
    int64_t get_int(const std::string& key, int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<uint64_t> get_int_list(const std::string& key,
                                       const std::vector<uint64_t>& fallback) const;
    std::vector<double> get_real_list(const std::string& key,
                                      const std::vector<double>& fallback) const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

} // namespace spanet
