#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilorb/lie_slice.hpp"
#include "nilorb/matrix_oracle.hpp"
#include "nilorb/orbit_poset.hpp"
#include "nilorb/quiver.hpp"
#include "nilorb/reduction.hpp"
#include "nilorb/specht.hpp"
#include "nilorb/verify.hpp"

using namespace nilorb;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"Exact invariants of nilpotent orbit closures in sl_n"};
    app.require_subcommand(1);

    // orbit
    CLI::App* orbit = app.add_subcommand("orbit", "closure order and dimensions");
    orbit->require_subcommand(1);

    std::string hasse_n;
    bool hasse_dot = false, hasse_json = false;
    CLI::App* hasse = orbit->add_subcommand("hasse", "labelled Hasse diagram of the closure order");
    hasse->add_option("n", hasse_n, "size of the partitions")->required();
    hasse->add_flag("--dot", hasse_dot, "emit a DOT digraph");
    hasse->add_flag("--json", hasse_json, "emit JSON");
    hasse->callback([&] {
        OrbitPoset poset = build_poset(std::stoi(hasse_n));
        if (hasse_dot) {
            std::cout << to_dot(poset);
        } else if (hasse_json) {
            std::cout << to_json_text(poset) << "\n";
        } else {
            std::cout << poset.nodes.size() << " orbits, " << poset.edges.size()
                      << " minimal degenerations\n";
            for (const CoverEdge& e : poset.edges)
                std::cout << e.from.str() << " -> " << e.to.str() << "  " << e.label.str()
                          << "  codim " << e.label.codim << "\n";
        }
    });

    std::string covers_lambda;
    CLI::App* covers = orbit->add_subcommand("covers", "minimal degenerations of one orbit");
    covers->add_option("lambda", covers_lambda, "partition, e.g. 5,4,4,3")->required();
    covers->callback([&] {
        for (const auto& [mu, label] : minimal_degenerations(Partition::parse(covers_lambda)))
            std::cout << mu.str() << "  " << label.str() << "  codim " << label.codim << "\n";
    });

    std::string dim_lambda;
    CLI::App* dim = orbit->add_subcommand("dim", "orbit dimension");
    dim->add_option("lambda", dim_lambda)->required();
    dim->callback([&] { std::cout << orbit_dimension(Partition::parse(dim_lambda)) << "\n"; });

    std::string dom_mu, dom_lambda;
    CLI::App* dom = orbit->add_subcommand("dominates", "dominance test mu <= lambda");
    dom->add_option("mu", dom_mu)->required();
    dom->add_option("lambda", dom_lambda)->required();
    dom->callback([&] {
        bool d = dominates(Partition::parse(dom_mu), Partition::parse(dom_lambda));
        std::cout << (d ? "true" : "false") << "\n";
    });

    // slice
    CLI::App* slice = app.add_subcommand("slice", "Slodowy slices and their equations");
    slice->require_subcommand(1);

    std::string chart_mu;
    int chart_n = 0;
    CLI::App* chart = slice->add_subcommand("chart", "parametrized slice chart");
    chart->add_option("mu", chart_mu)->required();
    chart->add_option("n", chart_n)->required();
    chart->callback([&] {
        Partition mu = Partition::parse(chart_mu);
        if (mu.n() != chart_n)
            throw std::invalid_argument("partition does not sum to n");
        SliceChart sc = slodowy_slice(mu);
        std::cout << sc.chart.str();
        std::cout << "parameters: " << sc.basis.size() << "\n";
    });

    std::string eq_mu;
    int eq_n = 0;
    CLI::App* eqs = slice->add_subcommand("equations", "chi equations of slice cap cone");
    eqs->add_option("mu", eq_mu)->required();
    eqs->add_option("n", eq_n)->required();
    eqs->callback([&] {
        Partition mu = Partition::parse(eq_mu);
        if (mu.n() != eq_n)
            throw std::invalid_argument("partition does not sum to n");
        auto chi = slice_nilpotent_equations(mu);
        for (std::size_t i = 0; i < chi.size(); ++i)
            std::cout << "chi_" << i + 1 << " = " << chi[i].str() << "\n";
    });

    // quiver
    CLI::App* quiver = app.add_subcommand("quiver", "Maffei dimension data and point checks");
    quiver->require_subcommand(1);

    std::string qd_lambda, qd_mu, qd_r;
    CLI::App* qdims = quiver->add_subcommand("dims", "dimension vectors for a pair");
    qdims->add_option("lambda", qd_lambda)->required();
    qdims->add_option("mu", qd_mu)->required();
    qdims->add_option("--r", qd_r, "explicit column-length arrangement, e.g. 1,1,1");
    qdims->callback([&] {
        std::optional<std::vector<int>> r;
        if (!qd_r.empty()) {
            std::vector<int> vals;
            std::stringstream ss(qd_r);
            std::string tok;
            while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
            r = vals;
        }
        QuiverData d = maffei_dims(Partition::parse(qd_lambda), Partition::parse(qd_mu), r);
        std::cout << d.to_json_text() << "\n";
    });

    std::string qc_path;
    CLI::App* qcheck = quiver->add_subcommand("check", "verify relations and stability of a point");
    qcheck->add_option("point", qc_path, "JSON file with a quiver point")->required();
    qcheck->callback([&] {
        std::ifstream in(qc_path);
        if (!in) throw std::runtime_error("cannot open " + qc_path);
        std::stringstream buf;
        buf << in.rdbuf();
        QuiverPoint p = QuiverPoint::from_json_text(buf.str());
        bool rel = check_relations(p);
        bool stable = is_stable(p);
        std::cout << "relations: " << (rel ? "ok" : "violated") << "\n";
        std::cout << "stable: " << (stable ? "yes" : "no") << "\n";
        if (rel && is_mu_trivial(p.data)) {
            RationalMatrix x = kp_project(p);
            std::cout << "projection jordan type: " << jordan_type(x).str() << "\n";
        }
    });

    // reduce
    std::string red_lambda, red_mu;
    bool red_trace = false, red_json = false;
    CLI::App* reduce = app.add_subcommand("reduce", "canonicalize a pair by row/column deletion");
    reduce->add_option("lambda", red_lambda)->required();
    reduce->add_option("mu", red_mu)->required();
    reduce->add_flag("--trace", red_trace, "print each deletion step");
    reduce->add_flag("--json", red_json, "emit the trace as JSON");
    reduce->callback([&] {
        OrbitPair pair{Partition::parse(red_lambda), Partition::parse(red_mu)};
        std::vector<ReductionStep> trace;
        OrbitPair canon = canonicalize(pair, &trace);
        if (red_json) {
            nlohmann::json j;
            j["canonical"] = {{"lambda", canon.lambda.str()}, {"mu", canon.mu.str()}};
            j["trace"] = nlohmann::json::array();
            for (const ReductionStep& s : trace)
                j["trace"].push_back({{"move", s.move},
                                      {"lambda", s.result.lambda.str()},
                                      {"mu", s.result.mu.str()}});
            std::cout << j.dump() << "\n";
            return;
        }
        if (red_trace)
            for (const ReductionStep& s : trace)
                std::cout << s.move << " " << s.result.str() << "\n";
        std::cout << "canonical " << canon.str() << "\n";
    });

    // complement
    std::string comp_lambda, comp_mu;
    int comp_t = 0, comp_m = 0;
    CLI::App* comp = app.add_subcommand("complement", "complement a pair in a t x m rectangle");
    comp->add_option("lambda", comp_lambda)->required();
    comp->add_option("mu", comp_mu)->required();
    comp->add_option("t", comp_t)->required();
    comp->add_option("m", comp_m)->required();
    comp->callback([&] {
        OrbitPair pair{Partition::parse(comp_lambda), Partition::parse(comp_mu)};
        OrbitPair out = complement(pair, comp_t, comp_m);
        std::cout << out.lambda.str() << " " << out.mu.str() << "\n";
    });

    // specht
    CLI::App* specht = app.add_subcommand("specht", "Specht module Gram data");
    specht->require_subcommand(1);

    std::string sg_lambda;
    CLI::App* sgram = specht->add_subcommand("gram", "integer Gram matrix");
    sgram->add_option("lambda", sg_lambda)->required();
    sgram->callback([&] {
        SpechtModule mod = specht_module(Partition::parse(sg_lambda));
        for (const auto& row : mod.gram) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j].get_str();
            std::cout << "\n";
        }
        std::cout << "det " << gram_determinant(mod.lambda).get_str() << "\n";
    });

    int sd_n = 0;
    long sd_p = 0;
    CLI::App* sdims = specht->add_subcommand("dims", "dim D_mu for p-restricted mu of n");
    sdims->add_option("n", sd_n)->required();
    sdims->add_option("p", sd_p)->required();
    sdims->callback([&] {
        for (const Partition& mu : partitions_of(sd_n))
            if (is_p_restricted(mu, sd_p))
                std::cout << mu.str() << " " << dim_irreducible_mod_p(mu, sd_p) << "\n";
    });

    // verify
    std::string suite;
    std::uint64_t seed = 20130913;
    CLI::App* ver = app.add_subcommand("verify", "run a property suite");
    ver->add_option("--suite", suite, "suite name or 'all'")->required();
    ver->add_option("--seed", seed, "seed for randomized checks");
    ver->callback([&] {
        if (!verify::run_suite(suite, seed, std::cout))
            throw std::runtime_error("suite '" + suite + "' failed");
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
