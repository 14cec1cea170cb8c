#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "povp/bender_knuth.hpp"
#include "povp/closedform.hpp"
#include "povp/enumerate.hpp"
#include "povp/hall_littlewood.hpp"
#include "povp/json_io.hpp"
#include "povp/paths.hpp"
#include "povp/rsk.hpp"
#include "povp/super.hpp"
#include "povp/tilings.hpp"
#include "povp/verify.hpp"

namespace {

using nlohmann::json;
using namespace povp;

/* --params k=v,... with dot-separated integer lists, e.g. lambda=4.4.2 */
json parse_params(const std::string& s) {
    json out = json::object();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--params", "expected k=v");
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        if (val.find('.') != std::string::npos) {
            std::vector<int> list;
            std::stringstream vs(val);
            std::string tok;
            while (std::getline(vs, tok, '.')) list.push_back(std::stoi(tok));
            out[key] = list;
        } else {
            try {
                out[key] = std::stoi(val);
            } catch (...) {
                out[key] = val;
            }
        }
    }
    return out;
}

int workers_from_env() {
    const char* w = std::getenv("POVP_WORKERS");
    if (!w) return 4;
    int n = std::atoi(w);
    return n > 0 ? n : 4;
}

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

int exit_code(const std::vector<VerificationReport>& reports) {
    bool usage = false, fail = false;
    for (const auto& r : reports) {
        if (!r.error.empty()) usage = true;
        if (!r.pass) fail = true;
    }
    if (usage) return 2;
    return fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating-function toolkit for plane overpartitions"};
    app.require_subcommand(1);

    // ---- verify
    auto* vcmd = app.add_subcommand("verify", "check one identity against its oracle");
    std::string v_id, v_params, v_format = "text";
    int v_maxq = 10;
    vcmd->add_option("--identity", v_id, "identity id")->required();
    vcmd->add_option("--params", v_params, "k=v,... (lists use dots: lambda=4.4.2)");
    vcmd->add_option("--max-q", v_maxq, "truncation order");
    vcmd->add_option("--format", v_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // ---- suite
    auto* scmd = app.add_subcommand("suite", "run a config of identity checks");
    std::string s_file, s_format = "text";
    scmd->add_option("--suite", s_file, "config file (JSON array)")->required();
    scmd->add_option("--format", s_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // ---- list
    auto* lcmd = app.add_subcommand("list", "list identity ids");

    // ---- enum
    auto* ecmd = app.add_subcommand("enum", "enumerate objects as JSON lines");
    std::string e_kind = "pops", e_lambda, e_set, e_profile, e_topology = "planar";
    int e_maxw = 6, e_rows = 0, e_cols = 0, e_maxe = 0;
    ecmd->add_option("--kind", e_kind, "pops|reverse|plane-partitions|interlacing")
        ->check(CLI::IsMember({"pops", "reverse", "plane-partitions", "interlacing"}));
    ecmd->add_option("--max-weight", e_maxw, "weight bound");
    ecmd->add_option("--shape", e_lambda, "partition, dot separated (4.4.2)");
    ecmd->add_option("--bounded-shape", e_set, "partition for row bounds");
    ecmd->add_option("--rows", e_rows, "box rows / plane partition rows");
    ecmd->add_option("--cols", e_cols, "box cols / plane partition cols");
    ecmd->add_option("--max-entry", e_maxe, "entry bound");
    std::string e_parts_in;
    ecmd->add_option("--parts-in", e_parts_in, "allowed part values, dot separated");
    ecmd->add_option("--profile", e_profile, "profile bits, e.g. 0.1.1");
    ecmd->add_option("--topology", e_topology, "planar|cylindric")
        ->check(CLI::IsMember({"planar", "cylindric"}));

    // ---- gf
    auto* gcmd = app.add_subcommand("gf", "print a closed-form series");
    std::string g_id, g_params, g_format = "text";
    int g_maxq = 10;
    gcmd->add_option("--formula", g_id,
                     "box-t|hook-shape|hook-bounded|reverse-hook|all|max-entry|parts-in-set|"
                     "odd-parts|row-bounded|skew|cylindric|det|overpartitions")
        ->required();
    gcmd->add_option("--params", g_params, "k=v,...");
    gcmd->add_option("--max-q", g_maxq, "truncation order");
    gcmd->add_option("--format", g_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // ---- bijection
    auto* bcmd = app.add_subcommand("bijection", "apply a bijection to a JSON object");
    std::string b_name, b_input;
    int b_n = 0, b_k = 0, b_l = 0, b_x = 0;
    bcmd->add_option("--name", b_name, "rsk|rsk-inverse|bk|bk-split|paths|super|toggle")
        ->required();
    bcmd->add_option("--input", b_input, "input file (default stdin)");
    bcmd->add_option("--n", b_n, "block size / toggle bound");
    bcmd->add_option("--k", b_k, "plain entry bound (super)");
    bcmd->add_option("--l", b_l, "overlined entry bound (super)");
    bcmd->add_option("--x", b_x, "horizontal extent (paths)");

    // ---- tile
    auto* tcmd = app.add_subcommand("tile", "render the domino tiling of a plane overpartition");
    std::string t_input, t_format = "ascii", t_window;
    std::string t_shape;
    int t_maxe = -1;
    tcmd->add_option("--input", t_input, "plane overpartition JSON (default stdin)");
    tcmd->add_option("--shape", t_shape, "require this shape, dot separated");
    tcmd->add_option("--max-entry", t_maxe, "require entries at most this");
    tcmd->add_option("--window", t_window, "tmin.tmax.xmin.xmax");
    tcmd->add_option("--format", t_format, "ascii|svg")->check(CLI::IsMember({"ascii", "svg"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*vcmd) {
            json params = v_params.empty() ? json::object() : parse_params(v_params);
            VerificationReport r = verify(v_id, params, v_maxq);
            if (v_format == "json")
                std::cout << r.to_json().dump(2) << "\n";
            else
                std::cout << r.line() << "\n";
            return exit_code({r});
        }
        if (*scmd) {
            std::ifstream in(s_file);
            if (!in) {
                std::cerr << "cannot open " << s_file << "\n";
                return 2;
            }
            json config;
            in >> config;
            auto reports = run_suite(config, workers_from_env());
            if (s_format == "json") {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(r.to_json());
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& r : reports) std::cout << r.line() << "\n";
            }
            return exit_code(reports);
        }
        if (*lcmd) {
            for (const auto& id : identity_catalog()) std::cout << id << "\n";
            return 0;
        }
        if (*ecmd) {
            auto parse_list = [](const std::string& s) {
                std::vector<int> v;
                std::stringstream ss(s);
                std::string tok;
                while (std::getline(ss, tok, '.')) v.push_back(std::stoi(tok));
                return v;
            };
            if (e_kind == "pops") {
                Constraint c = Constraint::all();
                if (!e_lambda.empty()) c = Constraint::shape(Partition(parse_list(e_lambda)));
                else if (!e_set.empty()) c = Constraint::bounded_shape(Partition(parse_list(e_set)));
                else if (e_rows > 0 || e_cols > 0) c = Constraint::box(e_rows, e_cols);
                else if (e_maxe > 0) c = Constraint::entry_bound(e_maxe);
                else if (!e_parts_in.empty()) {
                    auto v = parse_list(e_parts_in);
                    c = Constraint::parts_in_set(std::set<int>(v.begin(), v.end()));
                }
                for (const auto& p : enum_pops_vec(c, e_maxw))
                    std::cout << to_json(p).dump() << "\n";
            } else if (e_kind == "reverse") {
                Partition shape(parse_list(e_lambda));
                for (const auto& p : enum_reverse_pops_vec(shape, e_maxw))
                    std::cout << to_json(p).dump() << "\n";
            } else if (e_kind == "plane-partitions") {
                std::vector<PlanePartition> all;
                enum_plane_partitions(e_rows, e_cols, e_maxw,
                                      [&](const PlanePartition& p) { all.push_back(p); });
                std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
                    if (a.weight() != b.weight()) return a.weight() < b.weight();
                    return a < b;
                });
                for (const auto& p : all) std::cout << to_json(p).dump() << "\n";
            } else {
                Profile prof;
                prof.bits = parse_list(e_profile);
                Topology topo = e_topology == "cylindric" ? Topology::Cylindric : Topology::Planar;
                std::vector<InterlacingSequence> all;
                enum_interlacing(prof, topo, e_maxw,
                                 [&](const InterlacingSequence& s) { all.push_back(s); });
                std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
                    if (a.weight() != b.weight()) return a.weight() < b.weight();
                    std::vector<std::vector<int>> pa, pb;
                    for (const auto& p : a.partitions) pa.push_back(p.parts());
                    for (const auto& p : b.partitions) pb.push_back(p.parts());
                    return pa < pb;
                });
                for (const auto& s : all) std::cout << to_json(s).dump() << "\n";
            }
            return 0;
        }
        if (*gcmd) {
            json p = g_params.empty() ? json::object() : parse_params(g_params);
            TruncSeries s(g_maxq);
            auto ints = [&](const char* key) {
                const json& j = p.at(key);
                if (j.is_number_integer()) return std::vector<int>{j.get<int>()};
                return j.get<std::vector<int>>();
            };
            auto lam = [&]() { return Partition(ints("lambda")); };
            if (g_id == "box-t")
                s = gf_box_t(p.value("r", 1), p.value("c", 1), g_maxq);
            else if (g_id == "hook-shape")
                s = gf_hook_content(lam(), false, g_maxq);
            else if (g_id == "hook-bounded")
                s = gf_hook_content(lam(), true, g_maxq);
            else if (g_id == "reverse-hook")
                s = gf_reverse_hook(lam(), g_maxq);
            else if (g_id == "all")
                s = gf_all_weighted(g_maxq);
            else if (g_id == "max-entry")
                s = gf_max_entry(p.value("n", 1), g_maxq);
            else if (g_id == "parts-in-set") {
                auto v = ints("s");
                s = gf_parts_in_set(std::set<int>(v.begin(), v.end()), g_maxq);
            } else if (g_id == "odd-parts")
                s = gf_odd_parts(g_maxq);
            else if (g_id == "row-bounded")
                s = gf_row_bounded(p.value("n", 1), p.value("c", 1), g_maxq);
            else if (g_id == "skew") {
                Profile prof;
                prof.bits = ints("profile");
                s = gf_skew(prof, g_maxq);
            } else if (g_id == "cylindric") {
                Profile prof;
                prof.bits = ints("profile");
                s = gf_cylindric(prof, g_maxq);
            } else if (g_id == "det")
                s = det_overpartition_matrix(lam(), p.value("shifted", 1) != 0, g_maxq);
            else if (g_id == "overpartitions")
                s = gf_overpartitions(p.value("k", 1), p.value("exact", 0) != 0, g_maxq);
            else {
                std::cerr << "unknown formula\n";
                return 2;
            }
            if (g_format == "json")
                std::cout << to_json(s).dump(2) << "\n";
            else
                std::cout << s.str() << "\n";
            return 0;
        }
        if (*bcmd) {
            json in = read_json_input(b_input);
            json out;
            if (b_name == "rsk") {
                BlockMatrix m = block_matrix_from_json(in);
                RskPair pq = rsk_forward(m);
                out = json{{"P", to_json(pq.p)},
                           {"Q", to_json(pq.q)},
                           {"weight", pq.p.weight()},
                           {"overlines_P", pq.p.overline_count()}};
            } else if (b_name == "rsk-inverse") {
                RskPair pq{pop_from_json(in.at("P")), pop_from_json(in.at("Q"))};
                BlockMatrix m = rsk_inverse(pq, b_n > 0 ? b_n : 1);
                out = to_json(m);
            } else if (b_name == "bk") {
                PlanePartition sig = plane_partition_from_json(in.at("sigma"));
                PlanePartition lam = plane_partition_from_json(in.at("lambda"));
                PlanePartition pi = bk_merge(sig, lam);
                out = json{{"pi", to_json(pi)},
                           {"weight", pi.weight()},
                           {"weight_check", sig.weight() + lam.weight() - slice_shape(sig, 1).weight()},
                           {"a_poly", a_weight(pi).str()}};
            } else if (b_name == "bk-split") {
                PlanePartition pi = plane_partition_from_json(in);
                auto [sig, lam] = bk_split(pi);
                out = json{{"sigma", to_json(sig)}, {"lambda", to_json(lam)}};
            } else if (b_name == "paths") {
                PlaneOverpartition pop = pop_from_json(in);
                int x = b_x > 0 ? b_x : 8;
                auto paths = pop_to_paths(pop, pop.shape(), x);
                json arr = json::array();
                for (const auto& path : paths) {
                    std::string steps;
                    for (Step st : path.steps)
                        steps += st == Step::E ? 'E' : (st == Step::N ? 'N' : 'D');
                    arr.push_back(json{{"start", {path.start_x, path.start_y}},
                                       {"steps", steps},
                                       {"q_weight", path.weight_q()},
                                       {"a_weight", path.weight_a()}});
                }
                out = json{{"paths", arr},
                           {"weight", pop.weight()},
                           {"overlines", pop.overline_count()}};
            } else if (b_name == "super") {
                SuperTableau t;
                t.shape = partition_from_json(in.at("shape"));
                for (const auto& r : in.at("cells")) {
                    std::vector<Cell> row;
                    for (const auto& e : r) row.push_back({e.at("v").get<int>(), e.at("o").get<bool>()});
                    t.cells.push_back(row);
                }
                PlaneOverpartition pop = super_to_pop(t, b_k, b_l);
                out = json{{"pop", to_json(pop)},
                           {"weight_in", t.weight()},
                           {"weight_out", pop.weight()}};
            } else if (b_name == "toggle") {
                ReversePlaneOverpartition r = reverse_pop_from_json(in);
                ReversePlaneOverpartition s = toggle_large_entry(r, b_n);
                out = json{{"result", to_json(s)},
                           {"overlines_before", r.overline_count()},
                           {"overlines_after", s.overline_count()}};
            } else {
                std::cerr << "unknown bijection\n";
                return 2;
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*tcmd) {
            json in = read_json_input(t_input);
            PlaneOverpartition pop = pop_from_json(in);
            ValidationResult pv = pop.validate();
            if (!pv.ok()) {
                std::cerr << "invalid plane overpartition: " << pv.violations.front() << "\n";
                return 2;
            }
            if (!t_shape.empty()) {
                std::vector<int> v;
                std::stringstream ss(t_shape);
                std::string tok;
                while (std::getline(ss, tok, '.')) v.push_back(std::stoi(tok));
                if (!(pop.shape() == Partition(v))) {
                    std::cerr << "shape mismatch\n";
                    return 2;
                }
            }
            int maxe = 0;
            for (const auto& r : pop.rows())
                for (const Cell& c : r) maxe = std::max(maxe, c.value);
            if (t_maxe >= 0 && maxe > t_maxe) {
                std::cerr << "entry bound exceeded\n";
                return 2;
            }
            Window w = Window::standard(pop.shape(), t_maxe >= 0 ? t_maxe : maxe);
            if (!t_window.empty()) {
                std::vector<int> v;
                std::stringstream ss(t_window);
                std::string tok;
                while (std::getline(ss, tok, '.')) v.push_back(std::stoi(tok));
                if (v.size() != 4) {
                    std::cerr << "--window expects tmin.tmax.xmin.xmax\n";
                    return 2;
                }
                w = {v[0], v[1], v[2], v[3]};
            }
            DominoTiling t = pop_to_tiling(pop, w);
            std::cout << (t_format == "svg" ? render_svg(t) : render_ascii(t));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
