#include "nilorb/reduction.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace nilorb {

OrbitPair::OrbitPair(Partition lambda_, Partition mu_)
    : lambda(std::move(lambda_)), mu(std::move(mu_)) {
    if (!dominates(mu, lambda))
        throw std::invalid_argument("orbit pair requires mu dominated by lambda");
}

std::string OrbitPair::str() const {
    return "((" + lambda.str() + "),(" + mu.str() + "))";
}

OrbitPair delete_first_row(const OrbitPair& p) {
    if (p.lambda.empty() || p.lambda.first() != p.mu.first())
        throw std::invalid_argument("delete_first_row: first rows differ");
    std::vector<int> lam(p.lambda.parts().begin() + 1, p.lambda.parts().end());
    std::vector<int> mu(p.mu.parts().begin() + 1, p.mu.parts().end());
    return OrbitPair(Partition(lam), Partition(mu));
}

OrbitPair delete_first_column(const OrbitPair& p) {
    if (p.lambda.empty() || p.lambda.length() != p.mu.length())
        throw std::invalid_argument("delete_first_column: part counts differ");
    std::vector<int> lam = p.lambda.parts();
    std::vector<int> mu = p.mu.parts();
    for (int& x : lam) --x;
    for (int& x : mu) --x;
    return OrbitPair(Partition(lam), Partition(mu));
}

OrbitPair canonicalize(const OrbitPair& p, std::vector<ReductionStep>* trace) {
    OrbitPair cur = p;
    while (!cur.lambda.empty()) {
        if (cur.lambda.first() == cur.mu.first()) {
            cur = delete_first_row(cur);
            if (trace) trace->push_back({"row", cur});
        } else if (cur.lambda.length() == cur.mu.length()) {
            cur = delete_first_column(cur);
            if (trace) trace->push_back({"column", cur});
        } else {
            break;
        }
    }
    return cur;
}

OrbitPair complement(const OrbitPair& p, int t, int m) {
    if (t < p.lambda.length() || t < p.mu.length() || m < p.lambda.first() ||
        m < p.mu.first())
        throw std::invalid_argument("complement: rectangle too small");
    auto comp = [&](const Partition& x) {
        std::vector<int> parts;
        for (int i = 1; i <= t; ++i) parts.push_back(m - x.part(t + 1 - i));
        return Partition(parts);
    };
    return OrbitPair(comp(p.lambda), comp(p.mu));
}

DegenerationLabel implied_label(const OrbitPair& canonical) {
    const Partition& lam = canonical.lambda;
    const Partition& mu = canonical.mu;
    if (lam.length() == 1 && lam.first() >= 2) {
        int s = lam.first();
        if (mu == Partition(std::vector<int>{s - 1, 1}))
            return make_label(SingKind::KleinianA, s - 1);
    }
    int k = mu.length();
    if (k >= 2 && mu.first() == 1) {
        std::vector<int> expect{2};
        expect.resize(k - 1, 1);
        if (lam == Partition(expect))
            return make_label(SingKind::MinimalA, k - 1);
    }
    throw std::domain_error("implied_label: not the canonical pair of a minimal degeneration");
}

namespace {

// Orbit of a canonical pair under bounded complement-then-canonicalize moves.
std::set<OrbitPair> class_orbit(const OrbitPair& start, int bound) {
    std::set<OrbitPair> seen{start};
    std::deque<OrbitPair> queue{start};
    while (!queue.empty()) {
        OrbitPair cur = queue.front();
        queue.pop_front();
        int tmin = std::max(std::max(cur.lambda.length(), cur.mu.length()), 1);
        int mmin = std::max(std::max(cur.lambda.first(), cur.mu.first()), 1);
        for (int t = tmin; t <= bound; ++t)
            for (int m = mmin; m <= bound; ++m) {
                OrbitPair next = canonicalize(complement(cur, t, m));
                if (seen.insert(next).second) queue.push_back(next);
            }
    }
    return seen;
}

}  // namespace

bool same_slice_class(const OrbitPair& p, const OrbitPair& q, int* bound_used) {
    OrbitPair cp = canonicalize(p);
    OrbitPair cq = canonicalize(q);
    int bound = 1;
    for (const OrbitPair* pr : std::initializer_list<const OrbitPair*>{&p, &q, &cp, &cq}) {
        bound = std::max(bound, pr->lambda.first());
        bound = std::max(bound, pr->lambda.length());
        bound = std::max(bound, pr->mu.first());
        bound = std::max(bound, pr->mu.length());
    }
    if (bound_used) *bound_used = bound;
    if (cp == cq) return true;
    std::set<OrbitPair> orbit_p = class_orbit(cp, bound);
    if (orbit_p.count(cq)) return true;
    std::set<OrbitPair> orbit_q = class_orbit(cq, bound);
    for (const OrbitPair& x : orbit_p)
        if (orbit_q.count(x)) return true;
    return false;
}

}  // namespace nilorb
