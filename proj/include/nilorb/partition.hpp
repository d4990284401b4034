#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nilorb {

// A partition: weakly decreasing positive parts, trailing zeros trimmed.
// Indices into rows/columns are 1-based throughout, matching the usual
// lambda_1 convention; part(i) returns 0 beyond the stored length.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based, zero beyond the last part.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    int first() const { return part(1); }

    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Lexicographic on parts; used only for deterministic ordering.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

Partition transpose(const Partition& lambda);

// Dominance order: mu trianglelefteq lambda. Throws if |mu| != |lambda|.
bool dominates(const Partition& mu, const Partition& lambda);

// w[i-1] = multiplicity of i in mu, for 1 <= i <= m-1. Requires m > mu_1.
std::vector<int> multiplicity_vector(const Partition& mu, int m);

// Cells (i, lambda_i) with lambda_{i+1} < lambda_i, in increasing row order.
std::vector<std::pair<int, int>> corner_boxes(const Partition& lambda);

// Successive differences (including mu_last - 0) all < p. Requires p prime.
bool is_p_restricted(const Partition& mu, long p);

bool is_prime(long p);

// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

}  // namespace nilorb
