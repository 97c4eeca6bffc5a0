// arc: anti-Ramsey / Turán toolkit for uniform hypergraph motifs.
//
// Exit codes: 0 success, 1 property or certificate refuted, 2 invalid input,
// 3 budget exceeded. Machine mode prints a single JSON document; --human
// prints aligned key/value tables instead.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "antiramsey/constructions.hpp"
#include "antiramsey/core.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/io.hpp"
#include "antiramsey/motif.hpp"
#include "antiramsey/solver.hpp"

using nlohmann::json;
using namespace antiramsey;

namespace {

MotifKind parse_motif_kind(const std::string& name) {
    for (MotifKind k : {MotifKind::LinearPath, MotifKind::LoosePath, MotifKind::BergePath, MotifKind::LinearCycle,
                        MotifKind::LooseCycle, MotifKind::BergeCycle, MotifKind::Matching})
        if (name == motif_kind_name(k)) return k;
    throw invalid_input("unknown motif kind '" + name + "'");
}

FamilyKind parse_family_kind(const std::string& name) {
    for (FamilyKind k : {FamilyKind::Star, FamilyKind::StarPlusEdge, FamilyKind::StarPlusBook,
                         FamilyKind::StarPlusMatching, FamilyKind::PairBook, FamilyKind::DisjointCliques})
        if (name == family_kind_name(k)) return k;
    throw invalid_input("unknown family kind '" + name + "'");
}

void emit_human(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        size_t width = 0;
        for (auto& [k, v] : j.items()) width = std::max(width, k.size());
        for (auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured())) {
                os << pad << k << ":\n";
                emit_human(v, os, indent + 2);
            } else {
                os << pad << k << std::string(width - k.size(), ' ') << "  " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) emit_human(v, os, indent);
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const json& j, bool human) {
    if (human)
        emit_human(j, std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

struct Common {
    bool human = false;
    int threads = 1;  // accepted for compatibility; all algorithms are serial
                      // and results are identical for any value, so it is
                      // deliberately not echoed in the output
};

void add_common(CLI::App* app, Common& c) {
    app->add_flag("--human", c.human, "human-readable tables instead of JSON");
    app->add_option("--threads", c.threads, "thread count (results are identical for any value)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-Ramsey / Turan toolkit for uniform hypergraph motifs"};
    app.require_subcommand(1);

    Common common;

    // ---- formulas -----------------------------------------------------
    std::string f_motif, f_quantity = "ar";
    int f_n = 0, f_s = 0, f_k = 0;
    auto* cmd_f = app.add_subcommand("formulas", "evaluate closed-form bounds");
    cmd_f->add_option("--motif", f_motif)->required();
    cmd_f->add_option("--n", f_n)->required();
    cmd_f->add_option("--s", f_s)->required();
    cmd_f->add_option("--k", f_k)->required();
    cmd_f->add_option("--quantity", f_quantity, "ar | ex | berge-bounds");
    add_common(cmd_f, common);

    // ---- construct ------------------------------------------------------
    std::string c_family, c_color = "none", c_out;
    int c_n = 0, c_s = 0, c_t = 0, c_count = 0, c_block = 0, c_k = 0;
    auto* cmd_c = app.add_subcommand("construct", "build extremal families and colorings");
    cmd_c->add_option("--family", c_family, "star | star-plus-edge | star-plus-book | star-plus-matching | pair-book | disjoint-cliques");
    cmd_c->add_option("--n", c_n)->required();
    cmd_c->add_option("--s", c_s)->required();
    cmd_c->add_option("--t", c_t);
    cmd_c->add_option("--count", c_count);
    cmd_c->add_option("--block-size", c_block);
    cmd_c->add_option("--k", c_k, "motif length for berge-block");
    cmd_c->add_option("--color", c_color, "none | rainbow-plus-one | berge-block");
    cmd_c->add_option("--out", c_out, "write arc v1 file here instead of stdout");
    add_common(cmd_c, common);

    // ---- detect ---------------------------------------------------------
    std::string d_coloring, d_motif;
    int d_k = 0;
    auto* cmd_d = app.add_subcommand("detect", "search a coloring for a rainbow copy");
    cmd_d->add_option("--coloring", d_coloring)->required();
    cmd_d->add_option("--motif", d_motif)->required();
    cmd_d->add_option("--k", d_k)->required();
    add_common(cmd_d, common);

    // ---- verify -----------------------------------------------------------
    std::string v_coloring, v_motif, v_expect;
    int v_k = 0;
    auto* cmd_v = app.add_subcommand("verify", "check a coloring against an expectation");
    cmd_v->add_option("--coloring", v_coloring)->required();
    cmd_v->add_option("--motif", v_motif)->required();
    cmd_v->add_option("--k", v_k)->required();
    cmd_v->add_option("--expect", v_expect, "rainbow-free | rainbow")->required();
    add_common(cmd_v, common);

    // ---- solve-ar / solve-turan -------------------------------------------
    std::string s_motif;
    int s_n = 0, s_s = 0, s_k = 0;
    uint64_t s_nodes = Budget{}.node_limit;
    double s_time = Budget{}.time_limit_s;
    size_t s_max_edges = 0;
    auto add_solve_opts = [&](CLI::App* cmd) {
        cmd->add_option("--n", s_n)->required();
        cmd->add_option("--s", s_s)->required();
        cmd->add_option("--motif", s_motif)->required();
        cmd->add_option("--k", s_k)->required();
        cmd->add_option("--node-limit", s_nodes);
        cmd->add_option("--time-limit", s_time, "seconds");
        cmd->add_option("--max-edges", s_max_edges, "override the edge-count cap");
        add_common(cmd, common);
    };
    auto* cmd_sa = app.add_subcommand("solve-ar", "exact anti-Ramsey number");
    add_solve_opts(cmd_sa);
    auto* cmd_st = app.add_subcommand("solve-turan", "exact Turan number");
    add_solve_opts(cmd_st);

    // ---- simulate ---------------------------------------------------------
    std::string m_motif, m_csv;
    int m_n = 0, m_s = 0, m_k = 0, m_colors = 0, m_trials = 0;
    uint64_t m_seed = 0;
    auto* cmd_m = app.add_subcommand("simulate", "Monte-Carlo rainbow probability");
    cmd_m->add_option("--n", m_n)->required();
    cmd_m->add_option("--s", m_s)->required();
    cmd_m->add_option("--motif", m_motif)->required();
    cmd_m->add_option("--k", m_k)->required();
    cmd_m->add_option("--colors", m_colors)->required();
    cmd_m->add_option("--trials", m_trials)->required();
    cmd_m->add_option("--seed", m_seed)->required();
    cmd_m->add_option("--csv", m_csv, "also write a CSV row to this file");
    add_common(cmd_m, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_f->parsed()) {
            MotifSpec m(parse_motif_kind(f_motif), f_k);
            json j;
            j["config"] = {{"command", "formulas"}, {"motif", f_motif}, {"k", f_k},
                           {"n", f_n},              {"s", f_s},         {"quantity", f_quantity}};
            if (f_quantity == "ar") {
                j["report"] = bound_report_to_json(ar_value(m, f_n, f_s));
            } else if (f_quantity == "ex") {
                j["report"] = bound_report_to_json(ex_value(m, f_n, f_s));
            } else if (f_quantity == "berge-bounds") {
                auto [lo, hi] = berge_ar_bounds(m.kind, f_n, f_s, f_k);
                j["lower"] = bound_report_to_json(lo);
                j["upper"] = bound_report_to_json(hi);
            } else {
                throw invalid_input("unknown quantity '" + f_quantity + "'");
            }
            emit(j, common.human);
            return 0;
        }

        if (cmd_c->parsed()) {
            HostGraph h(c_n, c_s);
            json j;
            j["config"] = {{"command", "construct"}, {"family", c_family}, {"n", c_n},        {"s", c_s},
                           {"t", c_t},               {"count", c_count},   {"block_size", c_block},
                           {"k", c_k},               {"color", c_color},   {"out", c_out}};
            std::optional<Coloring> col;
            if (c_color == "berge-block") {
                col = berge_block_coloring(h, c_k);
            } else {
                if (c_family.empty()) throw invalid_input("--family is required unless --color berge-block");
                FamilySpec fs;
                fs.kind = parse_family_kind(c_family);
                fs.t = c_t;
                fs.count = c_count;
                fs.block_size = c_block;
                std::vector<Edge> fam = build_family(h, fs);
                if (c_color == "rainbow-plus-one") {
                    col = rainbow_plus_one(h, fam);
                } else if (c_color == "none") {
                    json edges = json::array();
                    for (const Edge& e : fam) edges.push_back(edge_to_json(e));
                    j["family_size"] = fam.size();
                    j["edges"] = std::move(edges);
                    emit(j, common.human);
                    return 0;
                } else {
                    throw invalid_input("unknown color scheme '" + c_color + "'");
                }
            }
            j["num_colors"] = col->num_colors;
            if (!c_out.empty()) {
                write_coloring(*col, c_out);
                j["written"] = c_out;
                emit(j, common.human);
            } else if (common.human) {
                emit(j, true);
                write_coloring(*col, std::cout);
            } else {
                std::ostringstream ss;
                write_coloring(*col, ss);
                j["arc"] = ss.str();
                emit(j, false);
            }
            return 0;
        }

        if (cmd_d->parsed()) {
            Coloring col = read_coloring(d_coloring);
            MotifSpec m(parse_motif_kind(d_motif), d_k);
            json j;
            j["config"] = {{"command", "detect"}, {"coloring", d_coloring}, {"motif", d_motif}, {"k", d_k}};
            auto w = find_rainbow(col, m);
            j["rainbow_found"] = w.has_value();
            if (w) j["witness"] = witness_to_json(*w, m);
            emit(j, common.human);
            return 0;
        }

        if (cmd_v->parsed()) {
            if (v_expect != "rainbow-free" && v_expect != "rainbow")
                throw invalid_input("--expect must be rainbow-free or rainbow");
            Coloring col = read_coloring(v_coloring);
            MotifSpec m(parse_motif_kind(v_motif), v_k);
            json j;
            j["config"] = {{"command", "verify"},
                           {"coloring", v_coloring},
                           {"motif", v_motif},
                           {"k", v_k},
                           {"expect", v_expect}};
            auto w = find_rainbow(col, m);
            bool holds = (v_expect == "rainbow") == w.has_value();
            j["expectation_holds"] = holds;
            if (w) j["witness"] = witness_to_json(*w, m);
            emit(j, common.human);
            return holds ? 0 : 1;
        }

        if (cmd_sa->parsed() || cmd_st->parsed()) {
            HostGraph h(s_n, s_s);
            MotifSpec m(parse_motif_kind(s_motif), s_k);
            Budget b;
            b.node_limit = s_nodes;
            b.time_limit_s = s_time;
            if (s_max_edges) {
                b.max_edges_partition = s_max_edges;
                b.max_edges_turan = s_max_edges;
            }
            bool is_ar = cmd_sa->parsed();
            SolveResult r = is_ar ? ar_exact(h, m, b) : turan_exact(h, m, b);
            json j;
            j["config"] = {{"command", is_ar ? "solve-ar" : "solve-turan"},
                           {"n", s_n},
                           {"s", s_s},
                           {"motif", s_motif},
                           {"k", s_k}};
            j["result"] = solve_result_to_json(r, m, b);
            emit(j, common.human);
            return r.status == SolveStatus::BudgetExceeded ? 3 : 0;
        }

        if (cmd_m->parsed()) {
            HostGraph h(m_n, m_s);
            MotifSpec m(parse_motif_kind(m_motif), m_k);
            double p = rainbow_probability(h, m, m_colors, m_trials, m_seed);
            json j;
            j["config"] = {{"command", "simulate"}, {"n", m_n},           {"s", m_s},
                           {"motif", m_motif},      {"k", m_k},           {"colors", m_colors},
                           {"trials", m_trials},    {"seed", m_seed}};
            j["probability"] = p;
            if (!m_csv.empty()) {
                std::ofstream f(m_csv, std::ios::binary);
                if (!f) throw invalid_input("cannot open " + m_csv);
                f << "n,s,motif,k,colors,trials,seed,probability\n";
                f << m_n << ',' << m_s << ',' << m_motif << ',' << m_k << ',' << m_colors << ',' << m_trials << ','
                  << m_seed << ',' << p << "\n";
                j["csv"] = m_csv;
            }
            emit(j, common.human);
            return 0;
        }
    } catch (const refutation& e) {
        json j;
        j["error"] = e.what();
        j["kind"] = "certificate-refuted";
        json edges = json::array();
        for (const Edge& ed : e.witness.edges) edges.push_back(edge_to_json(ed));
        j["witness"] = {{"edges", std::move(edges)},
                        {"defining_vertices", e.witness.defining_vertices},
                        {"colors", e.witness.colors}};
        std::cout << j.dump(2) << "\n";
        return 1;
    } catch (const certificate_refuted& e) {
        json j{{"error", e.what()}, {"kind", "certificate-refuted"}};
        std::cout << j.dump(2) << "\n";
        return 1;
    } catch (const resource_limit& e) {
        json j{{"error", e.what()}, {"kind", "budget-exceeded"}};
        std::cout << j.dump(2) << "\n";
        return 3;
    } catch (const not_covered& e) {
        json j{{"error", e.what()}, {"kind", "not-covered"}};
        std::cout << j.dump(2) << "\n";
        return 2;
    } catch (const invalid_input& e) {
        json j{{"error", e.what()}, {"kind", "invalid-input"}};
        std::cout << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json j{{"error", e.what()}, {"kind", "internal"}};
        std::cout << j.dump(2) << "\n";
        return 2;
    }
    return 2;
}
