#include "nilorb/orbit_poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nilorb {

using json = nlohmann::json;

std::string DegenerationLabel::str() const {
    return (kind == SingKind::KleinianA ? "A_" : "a_") + std::to_string(index);
}

DegenerationLabel make_label(SingKind kind, int index) {
    if (index < 1) throw std::invalid_argument("degeneration index must be positive");
    if (index == 1) kind = SingKind::KleinianA;  // a_1 = A_1
    int codim = kind == SingKind::KleinianA ? 2 : 2 * index;
    return DegenerationLabel{kind, index, codim};
}

std::vector<std::pair<Partition, DegenerationLabel>> minimal_degenerations(
    const Partition& lambda) {
    std::vector<std::pair<Partition, DegenerationLabel>> out;
    for (auto [row, col] : corner_boxes(lambda)) {
        // Down one row: needs a gap of at least 2 below, else the move is a
        // no-op on the sorted shape.
        int below = lambda.part(row + 1);
        if (col - below >= 2) {
            std::vector<int> parts = lambda.parts();
            parts[row - 1] -= 1;
            if (row < lambda.length())
                parts[row] += 1;
            else
                parts.push_back(1);
            out.emplace_back(Partition(parts), make_label(SingKind::KleinianA, col - below - 1));
        }
        // Left one column: the box lands on the topmost row of length col-2.
        // Skipped when that row is row+1 itself, which is the down move again.
        if (col >= 2) {
            int target = 0;
            for (int k = row + 1; k <= lambda.length() + 1; ++k)
                if (lambda.part(k) == col - 2) {
                    target = k;
                    break;
                }
            if (target > row + 1) {
                std::vector<int> parts = lambda.parts();
                parts[row - 1] -= 1;
                if (target <= lambda.length())
                    parts[target - 1] += 1;
                else
                    parts.push_back(1);
                out.emplace_back(Partition(parts), make_label(SingKind::MinimalA, target - row));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    return out;
}

namespace {

// Dimensions for all partitions of n, assigned by walking covers down from
// (n). A node reached along two chains must get the same value; a mismatch
// throws instead of picking one.
std::map<Partition, long> dimension_table(int n) {
    std::map<Partition, long> dim;
    Partition top(std::vector<int>{n});
    dim[top] = static_cast<long>(n) * n - n;
    std::deque<Partition> queue{top};
    while (!queue.empty()) {
        Partition lam = queue.front();
        queue.pop_front();
        long base = dim.at(lam);
        for (const auto& [mu, label] : minimal_degenerations(lam)) {
            long d = base - label.codim;
            auto it = dim.find(mu);
            if (it == dim.end()) {
                dim[mu] = d;
                queue.push_back(mu);
            } else if (it->second != d) {
                throw std::logic_error("chain-dependent orbit dimension at " + mu.str());
            }
        }
    }
    return dim;
}

}  // namespace

long orbit_dimension(const Partition& lambda) {
    if (lambda.n() < 1) throw std::invalid_argument("orbit_dimension: empty partition");
    static std::map<int, std::map<Partition, long>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto& table = cache[lambda.n()];
    if (table.empty()) table = dimension_table(lambda.n());
    return table.at(lambda);
}

OrbitPoset build_poset(int n) {
    if (n < 1) throw std::invalid_argument("build_poset: n must be positive");
    OrbitPoset poset;
    poset.n = n;
    poset.nodes = partitions_of(n);
    for (const Partition& lam : poset.nodes)
        for (const auto& [mu, label] : minimal_degenerations(lam))
            poset.edges.push_back(CoverEdge{lam, mu, label});
    return poset;
}

std::string to_dot(const OrbitPoset& poset) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=TB;\n";
    for (const Partition& node : poset.nodes)
        out << "  \"" << node.str() << "\";\n";
    for (const CoverEdge& e : poset.edges)
        out << "  \"" << e.from.str() << "\" -> \"" << e.to.str() << "\" [label=\""
            << e.label.str() << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_json_text(const OrbitPoset& poset) {
    json j;
    j["n"] = poset.n;
    j["nodes"] = json::array();
    for (const Partition& node : poset.nodes) j["nodes"].push_back(node.str());
    j["edges"] = json::array();
    for (const CoverEdge& e : poset.edges)
        j["edges"].push_back({{"from", e.from.str()},
                              {"to", e.to.str()},
                              {"label", e.label.str()},
                              {"codim", e.label.codim}});
    return j.dump(2);
}

OrbitPoset poset_from_json_text(const std::string& text) {
    json j = json::parse(text);
    OrbitPoset poset;
    poset.n = j.at("n").get<int>();
    for (const auto& node : j.at("nodes"))
        poset.nodes.push_back(Partition::parse(node.get<std::string>()));
    for (const auto& e : j.at("edges")) {
        std::string label = e.at("label").get<std::string>();
        if (label.size() < 3 || label[1] != '_')
            throw std::invalid_argument("bad edge label: " + label);
        SingKind kind = label[0] == 'A' ? SingKind::KleinianA : SingKind::MinimalA;
        int index = std::stoi(label.substr(2));
        DegenerationLabel lab = make_label(kind, index);
        if (lab.codim != e.at("codim").get<int>())
            throw std::invalid_argument("inconsistent codim for edge label " + label);
        poset.edges.push_back(CoverEdge{Partition::parse(e.at("from").get<std::string>()),
                                        Partition::parse(e.at("to").get<std::string>()), lab});
    }
    return poset;
}

}  // namespace nilorb
