#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

enum class SingKind { KleinianA, MinimalA };

// Label of a minimal degeneration: the transverse singularity type and the
// codimension of the smaller orbit in the larger one's closure. Index 1 is
// always stored as KleinianA, since a_1 and A_1 denote the same singularity.
struct DegenerationLabel {
    SingKind kind;
    int index;
    int codim;

    // "A_2" for Kleinian, "a_3" for minimal singularities.
    std::string str() const;
    bool operator==(const DegenerationLabel& o) const {
        return kind == o.kind && index == o.index && codim == o.codim;
    }
};

DegenerationLabel make_label(SingKind kind, int index);

struct CoverEdge {
    Partition from;  // larger orbit
    Partition to;    // covered orbit
    DegenerationLabel label;
};

struct OrbitPoset {
    int n = 0;
    std::vector<Partition> nodes;  // descending lex order
    std::vector<CoverEdge> edges;
};

// All covers of lambda in the closure order, each labelled; results sorted by
// the covered partition in descending lexicographic order.
std::vector<std::pair<Partition, DegenerationLabel>> minimal_degenerations(const Partition& lambda);

// Dimension of the orbit, obtained by descending a chain of labelled covers
// from the regular orbit and subtracting codimensions. Throws if two chains
// ever disagree.
long orbit_dimension(const Partition& lambda);

OrbitPoset build_poset(int n);

std::string to_dot(const OrbitPoset& poset);
std::string to_json_text(const OrbitPoset& poset);
OrbitPoset poset_from_json_text(const std::string& text);

}  // namespace nilorb
