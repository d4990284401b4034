#include "nilorb/verify.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "nilorb/lie_slice.hpp"
#include "nilorb/matrix_oracle.hpp"
#include "nilorb/orbit_poset.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/quiver.hpp"
#include "nilorb/reduction.hpp"
#include "nilorb/specht.hpp"

namespace nilorb::verify {

namespace {

class Checker {
public:
    explicit Checker(std::ostream& log) : log_(log) {}

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        log_ << (pass ? "  ok   " : "  FAIL ") << name;
        if (!pass && !detail.empty()) log_ << ": " << detail;
        log_ << "\n";
        all_ &= pass;
    }

    template <typename F>
    void run(const std::string& name, F&& f) {
        try {
            f();
            check(name, true);
        } catch (const std::exception& e) {
            check(name, false, e.what());
        }
    }

    bool passed() const { return all_; }

private:
    std::ostream& log_;
    bool all_ = true;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

long dim_formula(const Partition& lambda) {
    long n = lambda.n();
    long s = 0;
    Partition tr = transpose(lambda);
    for (int c : tr.parts()) s += static_cast<long>(c) * c;
    return n * n - s;
}

}  // namespace

bool suite_partitions(std::ostream& log) {
    Checker ck(log);
    ck.run("dominance is a partial order (n <= 8)", [] {
        for (int n = 1; n <= 8; ++n) {
            auto ps = partitions_of(n);
            for (const auto& a : ps) {
                require(dominates(a, a), "reflexivity fails at " + a.str());
                for (const auto& b : ps) {
                    if (dominates(a, b) && dominates(b, a))
                        require(a == b, "antisymmetry fails");
                    for (const auto& c : ps)
                        if (dominates(a, b) && dominates(b, c))
                            require(dominates(a, c), "transitivity fails");
                }
            }
        }
    });
    ck.run("transpose reverses dominance (n <= 8)", [] {
        for (int n = 1; n <= 8; ++n)
            for (const auto& a : partitions_of(n))
                for (const auto& b : partitions_of(n))
                    require(dominates(a, b) == dominates(transpose(b), transpose(a)),
                            "duality fails at " + a.str() + " / " + b.str());
    });
    ck.run("transpose is an involution (n <= 8)", [] {
        for (int n = 0; n <= 8; ++n)
            for (const auto& a : partitions_of(n))
                require(transpose(transpose(a)) == a, "involution fails at " + a.str());
    });
    ck.run("multiplicity vector reconstructs the partition (n <= 8)", [] {
        for (int n = 1; n <= 8; ++n)
            for (const auto& mu : partitions_of(n))
                for (int m : {mu.first() + 1, mu.first() + 3}) {
                    auto w = multiplicity_vector(mu, m);
                    std::vector<int> parts;
                    for (int i = m - 1; i >= 1; --i)
                        for (int k = 0; k < w[i - 1]; ++k) parts.push_back(i);
                    require(Partition(parts) == mu, "reconstruction fails at " + mu.str());
                }
    });
    return ck.passed();
}

bool suite_poset(std::ostream& log) {
    Checker ck(log);
    ck.run("cover edges equal dominance covers (n <= 8)", [] {
        for (int n = 1; n <= 8; ++n) {
            auto ps = partitions_of(n);
            for (const auto& lam : ps) {
                std::set<Partition> brute;
                for (const auto& mu : ps) {
                    if (mu == lam || !dominates(mu, lam)) continue;
                    bool between = false;
                    for (const auto& nu : ps)
                        if (nu != lam && nu != mu && dominates(mu, nu) && dominates(nu, lam))
                            between = true;
                    if (!between) brute.insert(mu);
                }
                std::set<Partition> ours;
                for (const auto& [mu, label] : minimal_degenerations(lam)) ours.insert(mu);
                require(brute == ours, "cover mismatch at " + lam.str());
            }
        }
    });
    ck.run("chain sums match the transpose-square formula (n <= 9)", [] {
        for (int n = 1; n <= 9; ++n)
            for (const auto& lam : partitions_of(n))
                require(orbit_dimension(lam) == dim_formula(lam),
                        "dimension mismatch at " + lam.str());
    });
    ck.run("chain sums match the centralizer-rank oracle (n <= 7)", [] {
        for (int n = 1; n <= 7; ++n)
            for (const auto& lam : partitions_of(n))
                require(orbit_dimension(lam) == orbit_dimension_via_centralizer(lam),
                        "oracle mismatch at " + lam.str());
    });
    ck.run("labels have even codimension of the right size (n <= 9)", [] {
        for (int n = 1; n <= 9; ++n)
            for (const CoverEdge& e : build_poset(n).edges) {
                require(e.label.codim > 0 && e.label.codim % 2 == 0, "odd codim");
                if (e.label.kind == SingKind::KleinianA)
                    require(e.label.codim == 2, "Kleinian codim != 2");
                else
                    require(e.label.codim == 2 * e.label.index, "minimal codim != 2m");
                require(e.label.kind == SingKind::KleinianA || e.label.index >= 2,
                        "a_1 not canonicalized to A_1");
                require(dominates(e.to, e.from), "edge violates dominance");
            }
    });
    ck.run("extremal structure: top, bottom and their neighbours (2 <= n <= 9)", [] {
        for (int n = 2; n <= 9; ++n) {
            OrbitPoset poset = build_poset(n);
            Partition top(std::vector<int>{n});
            std::vector<int> ones(n, 1);
            Partition bottom{ones};
            std::vector<int> sub{n - 1};
            if (n >= 2) sub.push_back(1);
            std::vector<int> min{2};
            min.resize(n - 1, 1);
            int from_top = 0, to_bottom = 0;
            for (const CoverEdge& e : poset.edges) {
                if (e.from == top) {
                    require(e.to == Partition(sub), "subregular mismatch");
                    ++from_top;
                }
                if (e.to == bottom) {
                    require(e.from == Partition(min), "minimal mismatch");
                    ++to_bottom;
                }
            }
            require(from_top == 1 && to_bottom == 1, "extremal covers are not unique");
        }
    });
    return ck.passed();
}

bool suite_oracle(std::ostream& log, std::uint64_t seed) {
    Checker ck(log);
    ck.run("rank oracle reproduces the dominance order (n <= 6)", [] {
        for (int n = 1; n <= 6; ++n)
            for (const auto& mu : partitions_of(n))
                for (const auto& lam : partitions_of(n))
                    require(in_orbit_closure(jordan_nilpotent(mu), lam) == dominates(mu, lam),
                            "mismatch at " + mu.str() + " vs " + lam.str());
    });
    ck.run("sl2 triple relations hold exactly (n <= 7)", [] {
        for (int n = 1; n <= 7; ++n)
            for (const auto& lam : partitions_of(n)) {
                Sl2Triple t = sl2_triple(lam);
                require(t.H == commutator(t.X, t.Y), "H != [X,Y]");
                require(commutator(t.H, t.X) == t.X * Rat(2), "[H,X] != 2X");
                require(commutator(t.H, t.Y) == t.Y * Rat(-2), "[H,Y] != -2Y");
                require(t.X.trace() == 0 && t.Y.trace() == 0 && t.H.trace() == 0,
                        "nonzero trace");
                require(is_nilpotent(t.X) && is_nilpotent(t.Y), "not nilpotent");
            }
    });
    ck.run("jordan_type round trip (n <= 7)", [] {
        for (int n = 1; n <= 7; ++n)
            for (const auto& lam : partitions_of(n))
                require(jordan_type(jordan_nilpotent(lam)) == lam, "round trip fails");
    });
    ck.run("jordan_type is conjugation-invariant (n <= 6, 50 trials each)", [&] {
        std::mt19937_64 rng(seed);
        for (int n = 2; n <= 6; ++n)
            for (const auto& lam : partitions_of(n)) {
                RationalMatrix j = jordan_nilpotent(lam);
                for (int trial = 0; trial < 50; ++trial) {
                    RationalMatrix g(j.rows(), j.rows());
                    do {
                        for (std::size_t a = 0; a < g.rows(); ++a)
                            for (std::size_t b = 0; b < g.cols(); ++b)
                                g.at(a, b) = rand_int(rng, -3, 3);
                    } while (g.rank() < g.rows());
                    require(jordan_type(g * j * g.inverse()) == lam, "conjugation changes type");
                }
            }
    });
    return ck.passed();
}

bool suite_slice(std::ostream& log, std::uint64_t seed) {
    Checker ck(log);
    ck.run("chart dimension is the orbit codimension in sl_n (n <= 6)", [] {
        for (int n = 2; n <= 6; ++n)
            for (const auto& mu : partitions_of(n)) {
                SliceChart chart = slodowy_slice(mu);
                long expected = static_cast<long>(n) * n - 1 - orbit_dimension(mu);
                require(static_cast<long>(chart.basis.size()) == expected,
                        "dimension mismatch at " + mu.str());
            }
    });
    ck.run("chart points satisfy [Z - X, Y] = 0 and trace 0 (n <= 5)", [&] {
        std::mt19937_64 rng(seed);
        for (int n = 2; n <= 5; ++n)
            for (const auto& mu : partitions_of(n)) {
                SliceChart chart = slodowy_slice(mu);
                for (int trial = 0; trial < 5; ++trial) {
                    std::vector<Rat> point;
                    for (std::size_t i = 0; i < chart.basis.size(); ++i)
                        point.push_back(rand_rational(rng, 4));
                    RationalMatrix z = chart.chart.eval(point);
                    require(commutator(z - chart.triple.X, chart.triple.Y).is_zero(),
                            "slice equation fails");
                    require(z.trace() == 0, "trace fails");
                }
            }
    });
    ck.run("chi_i is homogeneous of degree i+1 on the full chart (n <= 4)", [] {
        for (int n = 2; n <= 4; ++n) {
            std::vector<int> ones(n, 1);
            auto chi = slice_nilpotent_equations(Partition(ones));
            for (std::size_t i = 0; i < chi.size(); ++i)
                require(chi[i].is_homogeneous(static_cast<int>(i) + 2),
                        "inhomogeneous chi at n=" + std::to_string(n));
        }
    });
    ck.run("chi commutes with specialization (n <= 4, sampled)", [&] {
        std::mt19937_64 rng(seed + 1);
        for (int n = 2; n <= 4; ++n)
            for (const auto& mu : partitions_of(n)) {
                SliceChart chart = slodowy_slice(mu);
                auto chi = chi_invariants(chart.chart);
                for (int trial = 0; trial < 4; ++trial) {
                    std::vector<Rat> point;
                    for (std::size_t i = 0; i < chart.basis.size(); ++i)
                        point.push_back(rand_rational(rng, 3));
                    RationalMatrix z = chart.chart.eval(point);
                    auto direct =
                        chi_invariants(PolyMatrix::from_rational(z, {"s"}));
                    for (std::size_t i = 0; i < chi.size(); ++i) {
                        Rat lhs = chi[i].eval(point);
                        Rat rhs = direct[i].eval({Rat(0)});
                        require(lhs == rhs, "specialization mismatch");
                    }
                }
            }
    });
    ck.run("regular slice meets the cone only at the origin (n <= 5)", [&] {
        std::mt19937_64 rng(seed + 2);
        for (int n = 2; n <= 5; ++n) {
            Partition reg(std::vector<int>{n});
            auto chi = slice_nilpotent_equations(reg);
            std::size_t k = static_cast<std::size_t>(n) - 1;
            // Jacobian at the origin has full rank n-1.
            RationalMatrix jac(chi.size(), k);
            std::vector<Rat> origin(k, Rat(0));
            for (std::size_t i = 0; i < chi.size(); ++i)
                for (std::size_t j = 0; j < k; ++j)
                    jac.at(i, j) = chi[i].derivative(j).eval(origin);
            require(jac.rank() == k, "Jacobian rank deficient at n=" + std::to_string(n));
            for (int trial = 0; trial < 1000; ++trial) {
                std::vector<Rat> point;
                bool zero_point = true;
                for (std::size_t i = 0; i < k; ++i) {
                    point.push_back(rand_rational(rng, 5));
                    zero_point &= point.back() == 0;
                }
                bool all_vanish = true;
                for (const auto& f : chi) all_vanish &= f.eval(point) == 0;
                require(!all_vanish || zero_point, "nonzero common zero found");
            }
        }
    });
    return ck.passed();
}

bool suite_quiver(std::ostream& log, std::uint64_t seed) {
    Checker ck(log);
    ck.run("mu-trivial v matches the column-count formula (n <= 8)", [] {
        for (int n = 1; n <= 8; ++n) {
            std::vector<int> ones(n, 1);
            Partition mu(ones);
            for (const auto& lam : partitions_of(n)) {
                QuiverData d = maffei_dims(lam, mu);
                int rsum = 0;
                for (int i = 1; i <= d.m - 1; ++i) {
                    rsum += d.r[i - 1];
                    require(d.v[i - 1] == n - rsum, "v formula fails at " + lam.str());
                }
                require(d.w[0] == n, "w_1 != n");
                for (std::size_t i = 1; i < d.w.size(); ++i) require(d.w[i] == 0, "w tail");
            }
        }
    });
    ck.run("complement reverses the dimension vectors (n <= 8)", [] {
        for (int n = 2; n <= 8; ++n)
            for (const auto& lam : partitions_of(n))
                for (const auto& mu : partitions_of(n)) {
                    if (!dominates(mu, lam)) continue;
                    int m = lam.first();
                    if (mu.first() >= m || mu.length() <= lam.length()) continue;
                    int t = mu.length();
                    OrbitPair comp = complement(OrbitPair{lam, mu}, t, m);
                    require(comp.lambda.first() == m && comp.mu.first() < m,
                            "complement left the full-rectangle setting");
                    std::vector<int> r = transpose(lam).parts();
                    r.resize(m, 0);
                    std::vector<int> rc = transpose(comp.lambda).parts();
                    rc.resize(m, 0);
                    QuiverData d = maffei_dims(lam, mu, r);
                    QuiverData dc = maffei_dims(comp.lambda, comp.mu, rc);
                    for (int i = 1; i <= m - 1; ++i) {
                        require(dc.v[i - 1] == d.v[m - i - 1], "v symmetry fails");
                        require(dc.w[i - 1] == d.w[m - i - 1], "w symmetry fails");
                    }
                }
    });
    ck.run("random relation points project into the closure (n <= 4, 200 points)", [&] {
        std::mt19937_64 rng(seed);
        int produced = 0;
        while (produced < 200)
            for (int n = 2; n <= 4 && produced < 200; ++n)
                for (const auto& lam : partitions_of(n)) {
                    if (produced >= 200) break;
                    std::vector<int> ones(n, 1);
                    QuiverData d = maffei_dims(lam, Partition(ones));
                    QuiverPoint p = random_relation_point(d, rng);
                    RationalMatrix x = kp_project(p);
                    require(x.trace() == 0, "trace");
                    require(is_nilpotent(x), "nilpotency");
                    require(dominates(jordan_type(x), lam), "jordan type escapes closure");
                    ++produced;
                }
    });
    ck.run("stability tests agree on mu-trivial points (500 trials)", [&] {
        std::mt19937_64 rng(seed + 1);
        int trials = 0;
        while (trials < 500)
            for (int n = 2; n <= 4 && trials < 500; ++n)
                for (const auto& lam : partitions_of(n)) {
                    if (trials >= 500) break;
                    std::vector<int> ones(n, 1);
                    QuiverData d = maffei_dims(lam, Partition(ones));
                    QuiverPoint p = random_relation_point(d, rng, 2);
                    require(is_stable(p) == is_stable_surjective(p), "criteria disagree");
                    ++trials;
                }
    });
    ck.run("flags from stable points have the right shape (n <= 4)", [&] {
        std::mt19937_64 rng(seed + 2);
        for (int n = 2; n <= 4; ++n)
            for (const auto& lam : partitions_of(n)) {
                std::vector<int> ones(n, 1);
                QuiverData d = maffei_dims(lam, Partition(ones));
                QuiverPoint p;
                bool found = false;
                for (int attempt = 0; attempt < 200 && !found; ++attempt) {
                    p = random_relation_point(d, rng);
                    found = is_stable(p);
                }
                require(found, "no stable point sampled for " + lam.str());
                FlagData flag = flag_from_point(p);
                int rsum = 0;
                for (int i = 1; i <= d.m; ++i) {
                    rsum += d.r[i - 1];
                    const RationalMatrix& u = flag.subspaces[i - 1];
                    require(static_cast<int>(u.cols()) == rsum, "flag dimension");
                    // X(U_i) inside U_{i-1}; U_0 = 0.
                    for (std::size_t col = 0; col < u.cols(); ++col) {
                        std::vector<Rat> v(u.rows());
                        for (std::size_t row = 0; row < u.rows(); ++row) v[row] = u.at(row, col);
                        std::vector<Rat> xv = flag.X.apply(v);
                        if (i == 1) {
                            for (const Rat& q : xv) require(q == 0, "X(U_1) != 0");
                        } else {
                            require(in_column_span(flag.subspaces[i - 2], xv),
                                    "X(U_i) escapes U_{i-1}");
                        }
                    }
                    // The flag is increasing.
                    if (i > 1) {
                        const RationalMatrix& prev = flag.subspaces[i - 2];
                        for (std::size_t col = 0; col < prev.cols(); ++col) {
                            std::vector<Rat> v(prev.rows());
                            for (std::size_t row = 0; row < prev.rows(); ++row)
                                v[row] = prev.at(row, col);
                            require(in_column_span(u, v), "flag is not increasing");
                        }
                    }
                }
            }
    });
    return ck.passed();
}

bool suite_reduction(std::ostream& log, std::uint64_t seed) {
    Checker ck(log);
    ck.run("row/column deletions are confluent (500 random pairs, n <= 12)", [&] {
        std::mt19937_64 rng(seed);
        int tested = 0;
        while (tested < 500) {
            int n = static_cast<int>(rand_int(rng, 1, 12));
            auto ps = partitions_of(n);
            const Partition& lam = ps[static_cast<std::size_t>(
                rand_int(rng, 0, static_cast<long>(ps.size()) - 1))];
            const Partition& mu = ps[static_cast<std::size_t>(
                rand_int(rng, 0, static_cast<long>(ps.size()) - 1))];
            if (!dominates(mu, lam)) continue;
            ++tested;
            OrbitPair start{lam, mu};
            // All interleavings, memoized on intermediate pairs.
            std::set<OrbitPair> endpoints;
            std::set<OrbitPair> visited;
            std::vector<OrbitPair> stack{start};
            while (!stack.empty()) {
                OrbitPair cur = stack.back();
                stack.pop_back();
                if (!visited.insert(cur).second) continue;
                bool row_ok = !cur.lambda.empty() && cur.lambda.first() == cur.mu.first();
                bool col_ok = !cur.lambda.empty() && cur.lambda.length() == cur.mu.length();
                if (!row_ok && !col_ok) {
                    endpoints.insert(cur);
                    continue;
                }
                if (row_ok) stack.push_back(delete_first_row(cur));
                if (col_ok) stack.push_back(delete_first_column(cur));
            }
            require(endpoints.size() == 1, "non-confluent pair " + start.str());
            require(*endpoints.begin() == canonicalize(start), "greedy endpoint differs");
        }
    });
    ck.run("moves preserve dominance (n <= 8, rectangles up to 8x8)", [] {
        for (int n = 1; n <= 8; ++n)
            for (const auto& lam : partitions_of(n))
                for (const auto& mu : partitions_of(n)) {
                    if (!dominates(mu, lam)) continue;
                    OrbitPair pair{lam, mu};
                    // Constructors of the results re-check dominance.
                    if (!lam.empty() && lam.first() == mu.first()) delete_first_row(pair);
                    if (!lam.empty() && lam.length() == mu.length()) delete_first_column(pair);
                    for (int t = 1; t <= 8; ++t)
                        for (int m = 1; m <= 8; ++m) {
                            if (t < std::max(lam.length(), mu.length()) ||
                                m < std::max(lam.first(), mu.first()))
                                continue;
                            complement(pair, t, m);
                        }
                }
    });
    ck.run("canonical pairs of covers replay the degeneration labels (n <= 9)", [] {
        for (int n = 2; n <= 9; ++n)
            for (const CoverEdge& e : build_poset(n).edges) {
                OrbitPair canon = canonicalize(OrbitPair{e.from, e.to});
                bool single_part = canon.lambda.length() == 1;
                bool mu_ones = canon.mu.first() == 1;
                require(single_part || mu_ones, "canonical pair has the wrong shape");
                require(implied_label(canon) == e.label,
                        "label mismatch at edge " + e.from.str() + " -> " + e.to.str());
            }
    });
    ck.run("moves preserve the slice dimension (n <= 8)", [] {
        for (int n = 2; n <= 8; ++n)
            for (const auto& lam : partitions_of(n))
                for (const auto& mu : partitions_of(n)) {
                    if (mu == lam || !dominates(mu, lam)) continue;
                    long codim = orbit_dimension(lam) - orbit_dimension(mu);
                    OrbitPair pair{lam, mu};
                    if (lam.first() == mu.first()) {
                        OrbitPair next = delete_first_row(pair);
                        require(codim == orbit_dimension(next.lambda) -
                                             orbit_dimension(next.mu),
                                "row deletion changes codim");
                    }
                    if (lam.length() == mu.length()) {
                        OrbitPair next = delete_first_column(pair);
                        require(codim == orbit_dimension(next.lambda) -
                                             orbit_dimension(next.mu),
                                "column deletion changes codim");
                    }
                    int t = std::max(lam.length(), mu.length()) + 1;
                    int m = std::max(lam.first(), mu.first()) + 1;
                    OrbitPair comp = complement(pair, t, m);
                    require(codim ==
                                orbit_dimension(comp.lambda) - orbit_dimension(comp.mu),
                            "complement changes codim");
                }
    });
    return ck.passed();
}

bool suite_specht(std::ostream& log) {
    Checker ck(log);
    ck.run("n = 3 Gram matrices and determinants", [] {
        SpechtModule triv = specht_module(Partition({1, 1, 1}));
        require(triv.gram == std::vector<std::vector<Int>>{{Int(1)}}, "trivial gram");
        SpechtModule refl = specht_module(Partition({2, 1}));
        std::vector<std::vector<Int>> cartan{{Int(2), Int(-1)}, {Int(-1), Int(2)}};
        require(refl.gram == cartan, "reflection gram");
        SpechtModule sign = specht_module(Partition({3}));
        require(sign.gram == std::vector<std::vector<Int>>{{Int(6)}}, "sign gram");
        require(gram_determinant(Partition({1, 1, 1})) == 1, "det 1");
        require(gram_determinant(Partition({2, 1})) == 3, "det 3");
        require(gram_determinant(Partition({3})) == 6, "det 6");
        require(dim_irreducible_mod_p(Partition({2, 1}), 3) == 1, "dim D_(2,1) mod 3");
        require(dim_irreducible_mod_p(Partition({2, 1}), 5) == 2, "dim D_(2,1) mod 5");
        require(dim_irreducible_mod_p(Partition({1, 1, 1}), 2) == 1, "dim D_(1,1,1) mod 2");
    });
    ck.run("adjacent transpositions keep the lattice stable (n <= 5)", [] {
        for (int n = 2; n <= 5; ++n)
            for (const auto& lam : partitions_of(n)) {
                SpechtModule mod = specht_module(lam);
                for (int s = 0; s + 1 < n; ++s) {
                    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
                    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
                    std::swap(perm[s], perm[s + 1]);
                    for (const MultiPoly& b : mod.basis)
                        require(specht_lattice_contains(mod, b.permute_variables(perm)),
                                "permuted basis element leaves the lattice at " + lam.str());
                }
            }
    });
    ck.run("sum of squared dimensions is n! (n <= 5)", [] {
        long factorial = 1;
        for (int n = 1; n <= 5; ++n) {
            factorial *= n;
            long total = 0;
            for (const auto& lam : partitions_of(n)) {
                long d = static_cast<long>(specht_module(lam).basis.size());
                total += d * d;
            }
            require(total == factorial, "dimension count fails at n=" + std::to_string(n));
        }
    });
    ck.run("p coprime to the Gram determinant keeps S irreducible (n <= 4)", [] {
        for (int n = 1; n <= 4; ++n)
            for (const auto& mu : partitions_of(n)) {
                Int det = gram_determinant(mu);
                for (long p : {2L, 3L, 5L, 7L}) {
                    if (!is_p_restricted(mu, p)) continue;
                    if (det % p == 0) continue;
                    require(dim_irreducible_mod_p(mu, p) ==
                                static_cast<long>(specht_module(mu).basis.size()),
                            "radical unexpectedly nonzero");
                }
            }
    });
    return ck.passed();
}

std::vector<std::string> suite_names() {
    return {"partitions", "poset", "oracle", "slice", "quiver", "reduction", "specht"};
}

bool run_suite(const std::string& name, std::uint64_t seed, std::ostream& log) {
    if (name == "all") {
        bool ok = true;
        for (const std::string& s : suite_names()) {
            log << s << ":\n";
            ok &= run_suite(s, seed, log);
        }
        return ok;
    }
    if (name == "partitions") return suite_partitions(log);
    if (name == "poset") return suite_poset(log);
    if (name == "oracle") return suite_oracle(log, seed);
    if (name == "slice") return suite_slice(log, seed);
    if (name == "quiver") return suite_quiver(log, seed);
    if (name == "reduction") return suite_reduction(log, seed);
    if (name == "specht") return suite_specht(log);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace nilorb::verify
