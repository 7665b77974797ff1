#include "spanet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spanet {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot write " + path.string());
    return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot read " + path.string());
    return is;
}

} // namespace

void write_spa(std::ostream& os, const SpaGraph& g) {
    const SpaParams& prm = g.params;
    os << "spa 1 " << prm.m << ' ' << format_real(prm.A1) << ' ' << format_real(prm.A2) << ' '
       << format_real(prm.p) << ' ' << prm.n << ' ' << prm.seed << '\n';
    for (uint32_t v = 1; v <= g.n(); ++v) {
        os << "v " << v;
        for (double c : g.positions.point(v)) os << ' ' << format_real(c);
        os << '\n';
    }
    for (const SpaEdge& e : g.edges)
        os << "e " << e.child << ' ' << e.parent << ' ' << e.child << '\n';
}

void write_spa_file(const std::filesystem::path& path, const SpaGraph& g) {
    auto os = open_out(path);
    write_spa(os, g);
    if (!os) throw io_error("write failed: " + path.string());
}

SpaGraph read_spa(std::istream& is) {
    std::string tag;
    int version = 0;
    SpaParams prm;
    if (!(is >> tag >> version >> prm.m >> prm.A1 >> prm.A2 >> prm.p >> prm.n >> prm.seed) ||
        tag != "spa" || version != 1)
        throw format_error("bad spa header");
    prm.validate();

    SpaGraph g;
    g.params = prm;
    g.positions = PointStore(prm.m);
    g.positions.reserve(prm.n);
    g.in_events.assign(prm.n + 1, {});
    g.out_degree.assign(prm.n + 1, 0);

    std::vector<double> coords(prm.m);
    for (uint32_t v = 1; v <= prm.n; ++v) {
        uint32_t id;
        if (!(is >> tag >> id) || tag != "v" || id != v)
            throw format_error("bad vertex line in spa file");
        for (int a = 0; a < prm.m; ++a)
            if (!(is >> coords[a])) throw format_error("bad vertex coordinates");
        g.positions.append(coords);
    }
    while (is >> tag) {
        uint32_t child, parent, birth;
        if (tag != "e" || !(is >> child >> parent >> birth))
            throw format_error("bad edge line in spa file");
        if (birth != child || parent >= child || parent < 1 || child > prm.n)
            throw format_error("inconsistent spa edge");
        g.edges.push_back({child, parent});
        g.in_events[parent].push_back(child);
        ++g.out_degree[child];
    }
    // event logs must be sorted even if the file lists edges out of order
    for (auto& ev : g.in_events) std::sort(ev.begin(), ev.end());
    return g;
}

SpaGraph read_spa_file(const std::filesystem::path& path) {
    auto is = open_in(path);
    return read_spa(is);
}

void write_rgg(std::ostream& os, const RggSnapshot& snap) {
    os << "rgg 1 " << snap.t << ' ' << format_real(snap.r) << ' ' << metric_mode_name(snap.metric)
       << ' ' << snap.seed << '\n';
    for (uint32_t v = 1; v <= snap.t; ++v) {
        os << "v " << v;
        for (double c : snap.points.point(v)) os << ' ' << format_real(c);
        os << '\n';
    }
    for (auto [u, v] : snap.edges) os << "e " << u << ' ' << v << '\n';
}

void write_rgg_file(const std::filesystem::path& path, const RggSnapshot& snap) {
    auto os = open_out(path);
    write_rgg(os, snap);
    if (!os) throw io_error("write failed: " + path.string());
}

RggSnapshot read_rgg(std::istream& is) {
    std::string tag, metric;
    int version = 0;
    RggSnapshot snap;
    if (!(is >> tag >> version >> snap.t >> snap.r >> metric >> snap.seed) || tag != "rgg" ||
        version != 1)
        throw format_error("bad rgg header");
    snap.metric = metric_mode_from_name(metric);
    snap.M = M_PI * static_cast<double>(snap.t) * snap.r * snap.r;

    PointStore pts(2);
    pts.reserve(snap.t);
    double coords[2];
    for (uint32_t v = 1; v <= snap.t; ++v) {
        uint32_t id;
        if (!(is >> tag >> id >> coords[0] >> coords[1]) || tag != "v" || id != v)
            throw format_error("bad vertex line in rgg file");
        pts.append(coords);
    }
    snap.points = std::move(pts);
    while (is >> tag) {
        uint32_t u, v;
        if (tag != "e" || !(is >> u >> v)) throw format_error("bad edge line in rgg file");
        if (u >= v || v > snap.t) throw format_error("inconsistent rgg edge");
        snap.edges.emplace_back(u, v);
    }
    return snap;
}

RggSnapshot read_rgg_file(const std::filesystem::path& path) {
    auto is = open_in(path);
    return read_rgg(is);
}

LoadedGraph load_graph_file(const std::filesystem::path& path) {
    auto is = open_in(path);
    std::string head;
    is >> head;
    is.seekg(0);
    if (head == "spa") {
        SpaGraph g = read_spa(is);
        LoadedGraph out{LoadedGraph::Kind::spa, undirected_view(g), g.positions, std::move(g), {}};
        return out;
    }
    if (head == "rgg") {
        RggSnapshot snap = read_rgg(is);
        LoadedGraph out{LoadedGraph::Kind::rgg, snap.graph(), snap.points, {}, std::move(snap)};
        return out;
    }
    throw format_error("unknown graph file header in " + path.string());
}

void write_trace_csv(std::ostream& os, const RumourTrace& trace) {
    os << "round,informed_count,new_count,long_edge_transmissions\n";
    for (size_t k = 0; k < trace.rounds.size(); ++k) {
        os << (k + 1) << ',' << trace.informed_count_per_round[k] << ','
           << trace.rounds[k].newly_informed.size() << ',';
        if (trace.long_edge_transmissions.has_value())
            os << trace.rounds[k].long_transmissions;
        else
            os << "not-measured";
        os << '\n';
    }
}

void write_trace_events_csv(std::ostream& os, const RumourTrace& trace,
                            const PointStore* positions) {
    os << "round,from,to,via,edge_length\n";
    for (size_t k = 0; k < trace.rounds.size(); ++k) {
        for (const Transmission& tr : trace.rounds[k].transmissions) {
            os << (k + 1) << ',' << tr.from << ',' << tr.to << ','
               << (tr.via == Via::push ? "push" : "pull") << ',';
            if (positions != nullptr)
                os << format_real(torus_distance(positions->point(tr.from),
                                                 positions->point(tr.to)));
            else
                os << "not-measured";
            os << '\n';
        }
    }
}

std::string crossing_report_json(const CrossingReport& report) {
    nlohmann::json j;
    j["W"] = report.W;
    j["num_slabs"] = report.num_slabs;
    j["slab_width"] = report.slab_width;
    auto slab_array = [](const std::vector<SlabCrossing>& slabs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : slabs) {
            nlohmann::json e;
            e["found"] = s.found;
            e["path"] = s.path;
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["horizontal"] = slab_array(report.horizontal);
    j["vertical"] = slab_array(report.vertical);
    if (report.spanning_component_label.has_value())
        j["spanning_component_label"] = *report.spanning_component_label;
    else
        j["spanning_component_label"] = nullptr;
    return j.dump(2);
}

KeyValueConfig KeyValueConfig::parse_file(const std::filesystem::path& path) {
    auto is = open_in(path);
    return parse(is);
}

KeyValueConfig KeyValueConfig::parse(std::istream& is) {
    KeyValueConfig cfg;
    std::string line, section;
    size_t lineno = 0;
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw format_error("bad section at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw format_error("expected key = value at line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw format_error("empty key at line " + std::to_string(lineno));
        if (!section.empty()) key = section + "." + key;
        cfg.values_[key] = value;
    }
    return cfg;
}

std::string KeyValueConfig::get(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double KeyValueConfig::get_real(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw format_error("config key '" + key + "': not a number: " + it->second);
    }
}

int64_t KeyValueConfig::get_int(const std::string& key, int64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        return std::stoll(it->second);
    } catch (const std::exception&) {
        throw format_error("config key '" + key + "': not an integer: " + it->second);
    }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw format_error("config key '" + key + "': not a boolean: " + v);
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream iss(s);
    while (std::getline(iss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

} // namespace

std::vector<uint64_t> KeyValueConfig::get_int_list(const std::string& key,
                                                   const std::vector<uint64_t>& fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<uint64_t> out;
    for (const std::string& s : split_list(it->second)) {
        try {
            out.push_back(std::stoull(s));
        } catch (const std::exception&) {
            throw format_error("config key '" + key + "': bad integer list item: " + s);
        }
    }
    return out;
}

std::vector<double> KeyValueConfig::get_real_list(const std::string& key,
                                                  const std::vector<double>& fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    for (const std::string& s : split_list(it->second)) {
        try {
            out.push_back(std::stod(s));
        } catch (const std::exception&) {
            throw format_error("config key '" + key + "': bad number list item: " + s);
        }
    }
    return out;
}

} // namespace spanet
