/* Command-line front end: group closures, graph exports, censuses, Dicke
   entropies, magic measures and Ising scans, with a run manifest next to
   every file artifact. Exit codes: 0 ok, 1 computation error, 2 usage. */

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stabatlas/cache.hpp"
#include "stabatlas/census.hpp"
#include "stabatlas/dense_state.hpp"
#include "stabatlas/dicke.hpp"
#include "stabatlas/entropy.hpp"
#include "stabatlas/exact_state.hpp"
#include "stabatlas/gates.hpp"
#include "stabatlas/group.hpp"
#include "stabatlas/ising.hpp"
#include "stabatlas/magic.hpp"
#include "stabatlas/quotient_graph.hpp"
#include "stabatlas/serialize.hpp"
#include "stabatlas/spectrum.hpp"

#ifndef STABATLAS_VERSION
#define STABATLAS_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace stabatlas;

/* fixed shortest-unambiguous formatting so reruns are byte-identical */
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string hex64(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/* Every run that writes files also writes manifest.json beside them. The
   manifest's own hash covers command, parameters, inputs and outputs but
   not the timestamps, so it is stable across reruns with the same inputs. */
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::map<std::string, std::string> input_hashes;
    std::vector<std::pair<std::string, std::string>> outputs;  // file, content hash
    std::string started = now_utc();

    void note_input(const std::string& label, const std::string& bytes) {
        input_hashes[label] = hex64(fnv1a(bytes));
    }

    std::string stable_hash() const {
        std::string acc = command;
        acc.push_back('\0');
        acc += STABATLAS_VERSION;
        for (const auto& [k, v] : parameters) acc += '\0' + k + '=' + v;
        for (const auto& [k, v] : input_hashes) acc += '\0' + k + ':' + v;
        for (const auto& [f, h] : outputs) acc += '\0' + f + '#' + h;
        return hex64(fnv1a(acc));
    }

    void write(const std::filesystem::path& dir) const {
        json j;
        j["command"] = command;
        j["parameters"] = parameters;
        j["tool_version"] = STABATLAS_VERSION;
        j["started"] = started;
        j["finished"] = now_utc();
        j["input_hashes"] = input_hashes;
        json outs = json::array();
        for (const auto& [f, h] : outputs) outs.push_back({{"file", f}, {"hash", h}});
        j["outputs"] = outs;
        j["hash"] = stable_hash();
        std::ofstream out(dir / "manifest.json", std::ios::binary | std::ios::trunc);
        out << j.dump(2) << '\n';
    }
};

/* emit one artifact and record it in the manifest */
void emit(const std::optional<std::filesystem::path>& out_dir, RunManifest& man,
          const std::string& name, const std::string& payload) {
    if (!out_dir) return;
    std::filesystem::create_directories(*out_dir);
    std::ofstream f(*out_dir / name, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + (*out_dir / name).string());
    f << payload;
    man.outputs.emplace_back(name, hex64(fnv1a(payload)));
}

void finish(const std::optional<std::filesystem::path>& out_dir, const RunManifest& man) {
    if (out_dir) man.write(*out_dir);
}

std::vector<Gen> parse_gens(const std::string& csv) {
    std::vector<Gen> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(gen_from_name(tok));
    if (out.empty()) throw std::invalid_argument("empty generator list");
    return out;
}

/* a state argument: dicke:N,k | ghz:N | w:N | file:path */
struct SeedState {
    int n = 0;
    Eigen::VectorXcd dense;
    std::optional<ExactState> exact;
    std::optional<std::string> file_bytes;  // set when loaded from disk
    std::string file_label;
};

/* integer amplitudes up to one common positive scale make an exact state;
   tries the raw ratios and a sqrt2 or 2 rescale before giving up */
std::optional<ExactState> exactify(int n, const Eigen::VectorXcd& v) {
    double mn = 0;
    for (int i = 0; i < v.size(); ++i) {
        double m = std::abs(v(i));
        if (m > 1e-12 && (mn == 0 || m < mn)) mn = m;
    }
    if (mn == 0) return std::nullopt;
    const double scales[] = {1.0 / mn, std::sqrt(2.0) / mn, 2.0 / mn};
    for (double s : scales) {
        ExactState st(n, 0);
        bool ok = true;
        for (int i = 0; i < v.size() && ok; ++i) {
            double re = v(i).real() * s, im = v(i).imag() * s;
            long lre = std::lround(re), lim = std::lround(im);
            if (std::abs(re - lre) > 1e-7 || std::abs(im - lim) > 1e-7) ok = false;
            else st.amp[static_cast<std::size_t>(i)] = GaussianInt(lre, lim);
        }
        if (ok) {
            st.canonicalize();
            return st;
        }
    }
    return std::nullopt;
}

SeedState parse_state(const std::string& spec) {
    SeedState out;
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("state must be dicke:N,k | ghz:N | w:N | file:path");
    const std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
    auto parse_int = [](const std::string& s) {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
        return v;
    };
    if (kind == "dicke" || kind == "w") {
        int n, k;
        if (kind == "w") {
            n = parse_int(rest);
            k = 1;
        } else {
            auto comma = rest.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("dicke wants N,k");
            n = parse_int(rest.substr(0, comma));
            k = parse_int(rest.substr(comma + 1));
        }
        out.n = n;
        out.exact = dicke_state_exact(n, k);
        out.dense = out.exact->to_complex();
    } else if (kind == "ghz") {
        int n = parse_int(rest);
        if (n < 1 || n > 20) throw std::invalid_argument("ghz size out of range");
        out.n = n;
        std::vector<long> values(std::size_t(1) << n, 0);
        values.front() = 1;
        values.back() = 1;
        out.exact = ExactState::from_integers(n, values);
        out.dense = out.exact->to_complex();
    } else if (kind == "file") {
        std::string bytes = read_file(rest);
        json j = json::parse(bytes);
        int n = j.at("n").get<int>();
        const auto& amps = j.at("amplitudes");
        if (amps.size() != (std::size_t(1) << n))
            throw std::invalid_argument("amplitude count must be 2^n");
        Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
        for (std::size_t i = 0; i < amps.size(); ++i)
            v(static_cast<Eigen::Index>(i)) =
                std::complex<double>(amps[i].at(0).get<double>(), amps[i].at(1).get<double>());
        double norm = v.norm();
        if (norm < 1e-12) throw std::invalid_argument("state file holds the zero vector");
        out.n = n;
        out.dense = v / norm;
        out.exact = exactify(n, out.dense);
        out.file_bytes = std::move(bytes);
        out.file_label = rest;
    } else {
        throw std::invalid_argument("unknown state kind: " + kind);
    }
    return out;
}

/* ---- graph exports ---- */

struct ExportGraph {
    std::vector<std::string> vertex_labels;
    std::vector<std::string> gen_names;
    std::vector<std::tuple<std::uint32_t, int, std::uint32_t>> arcs;
};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    return out;
}

std::string to_dot(const ExportGraph& g) {
    std::ostringstream o;
    o << "digraph G {\n";
    for (std::size_t v = 0; v < g.vertex_labels.size(); ++v)
        o << "  v" << v << " [label=\"" << g.vertex_labels[v] << "\"];\n";
    for (const auto& [a, gi, b] : g.arcs)
        o << "  v" << a << " -> v" << b << " [label=\"" << g.gen_names[std::size_t(gi)]
          << "\"];\n";
    o << "}\n";
    return o.str();
}

std::string to_graphml(const ExportGraph& g) {
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"gen\" for=\"edge\" attr.name=\"generator\" attr.type=\"string\"/>\n"
      << "  <graph edgedefault=\"directed\">\n";
    for (std::size_t v = 0; v < g.vertex_labels.size(); ++v)
        o << "    <node id=\"v" << v << "\"><data key=\"label\">"
          << xml_escape(g.vertex_labels[v]) << "</data></node>\n";
    for (const auto& [a, gi, b] : g.arcs)
        o << "    <edge source=\"v" << a << "\" target=\"v" << b << "\"><data key=\"gen\">"
          << xml_escape(g.gen_names[std::size_t(gi)]) << "</data></edge>\n";
    o << "  </graph>\n</graphml>\n";
    return o.str();
}

std::string to_json_graph(const ExportGraph& g) {
    json j;
    j["vertices"] = g.vertex_labels;
    j["generators"] = g.gen_names;
    json arcs = json::array();
    for (const auto& [a, gi, b] : g.arcs) arcs.push_back({a, gi, b});
    j["arcs"] = arcs;
    return j.dump(2) + "\n";
}

std::string to_csv_graph(const ExportGraph& g) {
    std::ostringstream o;
    o << "from,generator,to\n";
    for (const auto& [a, gi, b] : g.arcs)
        o << a << ',' << g.gen_names[std::size_t(gi)] << ',' << b << '\n';
    return o.str();
}

std::string export_graph(const ExportGraph& g, const std::string& format) {
    if (format == "dot") return to_dot(g);
    if (format == "graphml") return to_graphml(g);
    if (format == "json") return to_json_graph(g);
    if (format == "csv") return to_csv_graph(g);
    throw std::invalid_argument("unknown graph format: " + format);
}

std::string graph_ext(const std::string& format) {
    return format == "graphml" ? "graphml" : format;
}

ExportGraph from_gen_graph(const GenGraph& g, std::vector<std::string> labels,
                           std::vector<std::string> gen_names) {
    ExportGraph out;
    out.vertex_labels = std::move(labels);
    out.gen_names = std::move(gen_names);
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
        for (int gi = 0; gi < g.num_gens; ++gi) out.arcs.emplace_back(v, gi, g.step(v, gi));
    return out;
}

std::vector<std::string> gen_name_list(const std::vector<NamedGenerator>& gens) {
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(g.name);
    return out;
}

/* CSV-safe column id for a region mask: qubits concatenated, e.g. S_13 */
std::string region_column(std::uint32_t mask) {
    std::string out = "S_";
    for (int q = 0; mask; ++q, mask >>= 1)
        if (mask & 1u) out += std::to_string(q + 1);
    return out;
}

/* ---- subcommand bodies; each returns stdout payload already printed ---- */

struct CommonOpts {
    std::string gens_csv;
    bool mod_phase = false;
    std::string state_spec;
    std::string format = "csv";
    std::string out_dir;
    int threads = 1;  // reserved knob: runtime only, never output bytes
    double tolerance = 1e-9;

    std::optional<std::filesystem::path> out() const {
        if (out_dir.empty()) return std::nullopt;
        return std::filesystem::path(out_dir);
    }
};

int run_verify_relations() {
    bool all = true;
    for (const Relation& r : relation_catalog()) {
        bool ok = verify_relation(r);
        std::printf("%s %s\n", ok ? "pass" : "FAIL", r.name.c_str());
        all = all && ok;
    }
    return all ? 0 : 1;
}

int run_group_close(const CommonOpts& opt) {
    RunManifest man;
    man.command = "group close";
    man.parameters["gens"] = opt.gens_csv;
    man.parameters["mod_phase"] = opt.mod_phase ? "true" : "false";
    auto gens = generators_from(parse_gens(opt.gens_csv));
    GroupTable g = close_subgroup_cached(gens, opt.mod_phase);
    std::printf("order %zu\n", g.order());
    std::printf("diameter %d\n", g.diameter);
    json j;
    j["generators"] = gen_name_list(gens);
    j["mod_phase"] = opt.mod_phase;
    j["order"] = g.order();
    j["diameter"] = g.diameter;
    emit(opt.out(), man, "group.json", j.dump(2) + "\n");
    finish(opt.out(), man);
    return 0;
}

int run_cayley(const CommonOpts& opt) {
    RunManifest man;
    man.command = "cayley";
    man.parameters["gens"] = opt.gens_csv;
    man.parameters["mod_phase"] = opt.mod_phase ? "true" : "false";
    man.parameters["format"] = opt.format;
    auto gens = generators_from(parse_gens(opt.gens_csv));
    GroupTable g = close_subgroup_cached(gens, opt.mod_phase);
    GenGraph cg = cayley_graph(g);
    std::vector<std::string> labels;
    labels.reserve(g.order());
    for (std::uint32_t e = 0; e < g.order(); ++e) {
        Word w;
        for (int gi : g.word_of(e)) w.push_back(gen_from_name(g.generators[std::size_t(gi)].name));
        labels.push_back(word_to_string(w));
    }
    ExportGraph eg = from_gen_graph(cg, std::move(labels), gen_name_list(gens));
    std::printf("order %zu\n", g.order());
    std::printf("diameter %d\n", g.diameter);
    std::printf("arcs %zu\n", eg.arcs.size());
    emit(opt.out(), man, "cayley." + graph_ext(opt.format), export_graph(eg, opt.format));
    finish(opt.out(), man);
    return 0;
}

int run_reach(const CommonOpts& opt) {
    RunManifest man;
    man.command = "reach";
    man.parameters["gens"] = opt.gens_csv;
    man.parameters["state"] = opt.state_spec;
    man.parameters["format"] = opt.format;
    auto gens = generators_from(parse_gens(opt.gens_csv));
    SeedState seed = parse_state(opt.state_spec);
    if (seed.file_bytes) man.note_input(seed.file_label, *seed.file_bytes);
    if (!seed.exact)
        throw std::runtime_error(
            "orbit enumeration needs amplitudes proportional to Gaussian integers");
    StateOrbit orbit = orbit_of(gens, *seed.exact);
    std::printf("orbit %zu\n", orbit.states.size());
    /* stabilizer order inside the mod-phase closure, when the orbit divides it */
    GroupTable g = close_subgroup_cached(gens, true);
    if (g.order() % orbit.states.size() == 0)
        std::printf("stabilizer %zu\n", g.order() / orbit.states.size());
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < orbit.states.size(); ++v) labels.push_back(std::to_string(v));
    ExportGraph eg = from_gen_graph(orbit.graph, std::move(labels), gen_name_list(gens));
    emit(opt.out(), man, "reach." + graph_ext(opt.format), export_graph(eg, opt.format));
    finish(opt.out(), man);
    return 0;
}

int run_contract(const CommonOpts& opt) {
    RunManifest man;
    man.command = "contract";
    man.parameters["gens"] = opt.gens_csv;
    man.parameters["state"] = opt.state_spec;
    man.parameters["format"] = opt.format;
    auto gens = generators_from(parse_gens(opt.gens_csv));
    SeedState seed = parse_state(opt.state_spec);
    if (seed.file_bytes) man.note_input(seed.file_label, *seed.file_bytes);
    GroupTable g = close_subgroup_cached(gens, true);
    auto local = local_subgroup(g);
    auto stab = ray_stabilizer(g, seed.dense, opt.tolerance);
    CosetPartition cosets = left_cosets(g, stab);
    ContractedOrbit con = contract_by_local(g, local, stab);
    std::printf("cosets %u\n", cosets.num_classes);
    std::printf("classes %u\n", con.num_classes);

    /* label each contracted vertex by the entropy vector of a representative */
    std::vector<std::string> labels;
    for (std::uint32_t c = 0; c < con.num_classes; ++c) {
        Eigen::VectorXcd v = evolve_by_element(g, con.representatives[c], seed.dense);
        EntropyVector ev = entropy_vector_of(v, seed.n, 2.0);
        std::string lab = std::to_string(c) + ":(";
        for (std::size_t i = 0; i < ev.s.size(); ++i) {
            if (i) lab += ' ';
            lab += fmt(ev.s[i]);
        }
        lab += ')';
        labels.push_back(std::move(lab));
    }
    ExportGraph eg;
    eg.vertex_labels = std::move(labels);
    eg.gen_names = gen_name_list(gens);
    eg.arcs = con.arcs;
    emit(opt.out(), man, "contract." + graph_ext(opt.format), export_graph(eg, opt.format));
    finish(opt.out(), man);
    return 0;
}

std::string census_csv(const Census& c) {
    std::ostringstream o;
    auto reps = region_reps(c.n);
    for (std::uint32_t mask : reps) o << region_column(mask) << ',';
    o << "states,subadditivity,araki_lieb,strong_subadditivity,monogamy,holographic\n";
    for (const CensusRow& row : c.rows) {
        for (int v : row.s) o << v << ',';
        o << row.states.str() << ',' << int(row.inequalities.subadditivity) << ','
          << int(row.inequalities.araki_lieb) << ',' << int(row.inequalities.strong_subadditivity)
          << ',' << int(row.inequalities.monogamy) << ',' << int(row.inequalities.holographic())
          << '\n';
    }
    return o.str();
}

std::string census_json(const Census& c) {
    json j;
    j["n"] = c.n;
    j["total_states"] = c.total_states.str();
    auto reps = region_reps(c.n);
    std::vector<std::string> regions;
    for (std::uint32_t mask : reps) regions.push_back(region_name(mask));
    j["regions"] = regions;
    json rows = json::array();
    for (const CensusRow& row : c.rows) {
        json r;
        r["entropies"] = row.s;
        r["states"] = row.states.str();
        r["subadditivity"] = row.inequalities.subadditivity;
        r["araki_lieb"] = row.inequalities.araki_lieb;
        r["strong_subadditivity"] = row.inequalities.strong_subadditivity;
        r["monogamy"] = row.inequalities.monogamy;
        r["holographic"] = row.inequalities.holographic();
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

int run_census(int n, const CommonOpts& opt) {
    RunManifest man;
    man.command = "census";
    man.parameters["n"] = std::to_string(n);
    man.parameters["format"] = opt.format;
    Census c = stabilizer_census(n);
    std::string payload = opt.format == "json" ? census_json(c) : census_csv(c);
    std::fputs(payload.c_str(), stdout);
    emit(opt.out(), man, "census_n" + std::to_string(n) + "." + opt.format, payload);
    finish(opt.out(), man);
    return 0;
}

int run_dicke_entropy(int n, int k, bool bits, const CommonOpts& opt) {
    RunManifest man;
    man.command = "dicke entropy";
    man.parameters["n"] = std::to_string(n);
    man.parameters["k"] = std::to_string(k);
    man.parameters["bits"] = bits ? "true" : "false";
    std::ostringstream o;
    o << "ell,entropy\n";
    for (int ell = 1; ell < n; ++ell)
        o << ell << ',' << fmt(dicke_entropy(n, k, ell, bits)) << '\n';
    std::fputs(o.str().c_str(), stdout);
    emit(opt.out(), man, "dicke_entropy_" + std::to_string(n) + "_" + std::to_string(k) + ".csv",
         o.str());
    finish(opt.out(), man);
    return 0;
}

int run_dicke_cone(int n, int k, const CommonOpts& opt) {
    RunManifest man;
    man.command = "dicke cone";
    man.parameters["n"] = std::to_string(n);
    man.parameters["k"] = std::to_string(k);
    DickeConeReport rep = dicke_cone_report(n, k);
    json j;
    j["n"] = n;
    j["k"] = k;
    std::vector<std::string> ev;
    for (double v : rep.ev.s) ev.push_back(fmt(v));
    j["entropies_nats"] = ev;
    j["mmi"] = rep.mmi;
    j["sqec"] = rep.sqec;
    j["shec"] = rep.shec;
    std::string payload = j.dump(2) + "\n";
    std::fputs(payload.c_str(), stdout);
    emit(opt.out(), man, "dicke_cone_" + std::to_string(n) + "_" + std::to_string(k) + ".json",
         payload);
    finish(opt.out(), man);
    return 0;
}

int run_dicke_stars(int n, int k, int ell, const CommonOpts& opt) {
    RunManifest man;
    man.command = "dicke stars";
    man.parameters["n"] = std::to_string(n);
    man.parameters["k"] = std::to_string(k);
    man.parameters["ell"] = std::to_string(ell);
    StarRealization real = star_realization(n, k, ell);
    std::ostringstream o;
    o << "coefficient,weight,cut_size,min_cut\n";
    for (const StarGraph& s : real.graphs)
        o << fmt(s.coefficient) << ',' << fmt(s.weight) << ',' << s.cut_size << ','
          << fmt(s.min_cut()) << '\n';
    std::fputs(o.str().c_str(), stdout);
    std::printf("value %s\n", fmt(real.value).c_str());
    std::printf("entropy %s\n", fmt(dicke_entropy(n, k, ell)).c_str());
    emit(opt.out(), man,
         "dicke_stars_" + std::to_string(n) + "_" + std::to_string(k) + "_" +
             std::to_string(ell) + ".csv",
         o.str());
    finish(opt.out(), man);
    return 0;
}

int run_magic_m2(const std::string& spectrum_file, const CommonOpts& opt) {
    RunManifest man;
    man.command = "magic m2";
    man.parameters["spectrum"] = spectrum_file;
    std::string bytes = read_file(spectrum_file);
    man.note_input(spectrum_file, bytes);
    json in = json::parse(bytes);
    std::vector<double> values = in.at("values").get<std::vector<double>>();
    Spectrum spec = Spectrum::from_values(values);
    json j;
    j["rank"] = values.size();
    j["m2_estimate"] = fmt(m2_spectrum_estimate(spec));
    j["upper_2s2"] = fmt(2.0 * renyi(spec, 2.0));
    if (values.size() <= 8) {
        M2Bounds b = m2_bounds(spec);
        j["upper_antiflat"] = fmt(b.upper_antiflat);
        j["m2_averaged"] = fmt(b.averaged);
    }
    j["capacity_n1"] = fmt(capacity(spec, 1.0));
    j["anti_flatness"] = fmt(anti_flatness(spec));
    std::string payload = j.dump(2) + "\n";
    std::fputs(payload.c_str(), stdout);
    emit(opt.out(), man, "m2.json", payload);
    finish(opt.out(), man);
    return 0;
}

int run_ising(int n, double gmin, double gmax, int steps, int cut, double bias,
              const CommonOpts& opt) {
    RunManifest man;
    man.command = "ising";
    man.parameters["n"] = std::to_string(n);
    man.parameters["gmin"] = fmt(gmin);
    man.parameters["gmax"] = fmt(gmax);
    man.parameters["steps"] = std::to_string(steps);
    man.parameters["cut"] = std::to_string(cut);
    man.parameters["bias"] = fmt(bias);
    std::vector<IsingPoint> pts = ising_magic_scan(n, gmin, gmax, steps, cut, bias);
    std::ostringstream o;
    o << "g,entropy,m2_estimate,capacity,anti_flatness\n";
    for (const IsingPoint& p : pts)
        o << fmt(p.g) << ',' << fmt(p.entropy) << ',' << fmt(p.m2_estimate) << ','
          << fmt(p.capacity_n1) << ',' << fmt(p.anti_flatness) << '\n';
    std::string payload = o.str();
    std::fputs(payload.c_str(), stdout);
    emit(opt.out(), man,
         "ising_n" + std::to_string(n) + "_cut" + std::to_string(cut) + ".csv", payload);
    finish(opt.out(), man);
    return 0;
}

void add_common_output(CLI::App* cmd, CommonOpts& opt, bool with_format = true) {
    cmd->add_option("--out", opt.out_dir, "directory for file artifacts plus manifest.json");
    if (with_format)
        cmd->add_option("--format", opt.format, "csv, json, dot or graphml")
            ->check(CLI::IsMember({"csv", "json", "dot", "graphml"}));
    cmd->add_option("--threads", opt.threads, "worker threads (runtime only)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tolerance", opt.tolerance, "numeric tolerance for ray comparisons");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Clifford subgroup atlas: closures, quotient graphs, censuses, "
                 "Dicke entropies and magic measures"};
    app.require_subcommand(1);
    CommonOpts opt;

    auto* verify = app.add_subcommand("verify", "check the operator identity catalog");
    verify->require_subcommand(1);
    verify->add_subcommand("relations", "verify all catalog identities exactly");

    auto* group = app.add_subcommand("group", "subgroup closures");
    group->require_subcommand(1);
    auto* close = group->add_subcommand("close", "close a generating set, print order and diameter");
    close->add_option("--gens", opt.gens_csv, "comma list, e.g. H1,P1")->required();
    close->add_flag("--mod-phase", opt.mod_phase, "quotient by the central phase");
    add_common_output(close, opt, false);

    auto* cayley = app.add_subcommand("cayley", "export the Cayley graph of a closure");
    cayley->add_option("--gens", opt.gens_csv, "comma list, e.g. H1,P1")->required();
    cayley->add_flag("--mod-phase", opt.mod_phase, "quotient by the central phase");
    add_common_output(cayley, opt);

    auto* reach = app.add_subcommand("reach", "orbit graph of a state under a generating set");
    reach->add_option("--gens", opt.gens_csv, "comma list")->required();
    reach->add_option("--state", opt.state_spec, "dicke:N,k | ghz:N | w:N | file:path")
        ->required();
    add_common_output(reach, opt);

    auto* contract = app.add_subcommand(
        "contract", "orbit contracted by the local subgroup, one vertex per double coset");
    contract->add_option("--gens", opt.gens_csv, "comma list")->required();
    contract->add_option("--state", opt.state_spec, "dicke:N,k | ghz:N | w:N | file:path")
        ->required();
    add_common_output(contract, opt);

    int census_n = 2;
    auto* census = app.add_subcommand("census", "stabilizer entropy-vector census");
    census->add_option("--n", census_n, "qubit count")->required()->check(CLI::Range(1, 5));
    add_common_output(census, opt);

    auto* dicke = app.add_subcommand("dicke", "Dicke state entropies, cones and star graphs");
    dicke->require_subcommand(1);
    int dn = 0, dk = 0, dl = 0;
    bool dbits = false;
    auto* dent = dicke->add_subcommand("entropy", "entanglement entropy at every cut size");
    dent->add_option("N", dn, "qubit count")->required();
    dent->add_option("k", dk, "excitation number")->required();
    dent->add_flag("--bits", dbits, "report in bits instead of nats");
    add_common_output(dent, opt, false);
    auto* dcone = dicke->add_subcommand("cone", "inequality report for the entropy vector");
    dcone->add_option("N", dn, "qubit count")->required();
    dcone->add_option("k", dk, "excitation number")->required();
    add_common_output(dcone, opt, false);
    auto* dstars = dicke->add_subcommand("stars", "weighted star graphs realizing one entropy");
    dstars->add_option("N", dn, "qubit count")->required();
    dstars->add_option("k", dk, "excitation number")->required();
    dstars->add_option("l", dl, "cut size")->required();
    add_common_output(dstars, opt, false);

    auto* magic = app.add_subcommand("magic", "spectrum magic measures");
    magic->require_subcommand(1);
    std::string spectrum_file;
    auto* m2 = magic->add_subcommand("m2", "second Renyi magic estimate from a spectrum");
    m2->add_option("--spectrum", spectrum_file, "JSON file {\"values\":[...]}")->required();
    add_common_output(m2, opt, false);

    int in_n = 10, in_steps = 31, in_cut = 5;
    double in_gmin = -0.23, in_gmax = 0.22, in_bias = 0.0;
    auto add_ising_opts = [&](CLI::App* cmd) {
        cmd->add_option("--n", in_n, "chain length")->required();
        cmd->add_option("--gmin", in_gmin, "lowest coupling deviation")->required();
        cmd->add_option("--gmax", in_gmax, "highest coupling deviation")->required();
        cmd->add_option("--steps", in_steps, "sample count")->required();
        cmd->add_option("--cut", in_cut, "region size for the Schmidt cut")->required();
        cmd->add_option("--bias", in_bias, "degeneracy-splitting field");
        add_common_output(cmd, opt, false);
    };
    auto* ising = app.add_subcommand("ising", "magic across the transverse-field transition");
    add_ising_opts(ising);
    auto* mising = magic->add_subcommand("ising", "same scan, reachable under magic");
    add_ising_opts(mising);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify_relations();
        if (close->parsed()) return run_group_close(opt);
        if (cayley->parsed()) return run_cayley(opt);
        if (reach->parsed()) return run_reach(opt);
        if (contract->parsed()) return run_contract(opt);
        if (census->parsed()) return run_census(census_n, opt);
        if (dent->parsed()) return run_dicke_entropy(dn, dk, dbits, opt);
        if (dcone->parsed()) return run_dicke_cone(dn, dk, opt);
        if (dstars->parsed()) return run_dicke_stars(dn, dk, dl, opt);
        if (m2->parsed()) return run_magic_m2(spectrum_file, opt);
        if (ising->parsed()) return run_ising(in_n, in_gmin, in_gmax, in_steps, in_cut, in_bias, opt);
        if (mising->parsed()) return run_ising(in_n, in_gmin, in_gmax, in_steps, in_cut, in_bias, opt);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
