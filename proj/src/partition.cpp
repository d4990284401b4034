#include "nilorb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilorb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    if (text.empty()) return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            throw std::invalid_argument("bad partition text: '" + text + "'");
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1)
            throw std::invalid_argument("bad partition text: '" + text + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition transpose(const Partition& lambda) {
    std::vector<int> cols;
    cols.reserve(lambda.first());
    for (int j = 1; j <= lambda.first(); ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j) ++count;
        cols.push_back(count);
    }
    return Partition(cols);
}

bool dominates(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n())
        throw std::invalid_argument("dominance undefined: partitions of different n");
    int k = std::max(mu.length(), lambda.length());
    int smu = 0, slam = 0;
    for (int i = 1; i <= k; ++i) {
        smu += mu.part(i);
        slam += lambda.part(i);
        if (smu > slam) return false;
    }
    return true;
}

std::vector<int> multiplicity_vector(const Partition& mu, int m) {
    if (m <= mu.first())
        throw std::invalid_argument("multiplicity_vector requires m > mu_1");
    std::vector<int> w(m - 1, 0);
    for (int p : mu.parts()) ++w[p - 1];
    return w;
}

std::vector<std::pair<int, int>> corner_boxes(const Partition& lambda) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i + 1) < lambda.part(i)) out.emplace_back(i, lambda.part(i));
    return out;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_p_restricted(const Partition& mu, long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) - mu.part(i + 1) >= p) return false;
    return true;
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    if (n == 0) out = {Partition()};
    return out;
}

}  // namespace nilorb
