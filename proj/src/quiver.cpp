#include "nilorb/quiver.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nilorb/matrix_oracle.hpp"

namespace nilorb {

using json = nlohmann::json;

QuiverData maffei_dims(const Partition& lambda, const Partition& mu,
                       const std::optional<std::vector<int>>& r_opt) {
    if (!dominates(mu, lambda))
        throw std::invalid_argument("maffei_dims: mu is not dominated by lambda");
    std::vector<int> cols = transpose(lambda).parts();

    std::vector<int> r;
    if (r_opt) {
        r = *r_opt;
        if (static_cast<int>(r.size()) <= mu.first())
            throw std::invalid_argument("maffei_dims: need m > mu_1");
        std::vector<int> given;
        for (int x : r) {
            if (x < 0) throw std::invalid_argument("maffei_dims: negative entry in r");
            if (x > 0) given.push_back(x);
        }
        std::sort(given.begin(), given.end(), std::greater<int>());
        if (given != cols)
            throw std::invalid_argument(
                "maffei_dims: r is not a rearrangement of the column lengths");
    } else {
        r = cols;
        int m = std::max(lambda.first(), mu.first() + 1);
        r.resize(m, 0);
    }
    int m = static_cast<int>(r.size());

    QuiverData d;
    d.m = m;
    d.r = r;
    d.w = multiplicity_vector(mu, m);
    // Sum of the i longest columns of mu, minus r_1 + ... + r_i.
    int rsum = 0;
    for (int i = 1; i <= m - 1; ++i) {
        int colsum = 0;
        for (int j = 1; j <= m - 1; ++j) colsum += std::min(i, j) * d.w[j - 1];
        rsum += r[i - 1];
        int vi = colsum - rsum;
        if (vi < 0) throw std::logic_error("maffei_dims: negative v_i");
        d.v.push_back(vi);
    }
    return d;
}

void validate_dimensions(const QuiverPoint& p) {
    const QuiverData& d = p.data;
    std::size_t nodes = d.v.size();
    if (d.m < 2 || static_cast<std::size_t>(d.m - 1) != nodes || d.w.size() != nodes)
        throw std::invalid_argument("quiver point: malformed dimension data");
    if (p.A.size() + 1 != nodes && !(nodes == 0 && p.A.empty()))
        throw std::invalid_argument("quiver point: wrong number of A maps");
    if (p.B.size() != p.A.size())
        throw std::invalid_argument("quiver point: wrong number of B maps");
    if (p.Gamma.size() != nodes || p.Delta.size() != nodes)
        throw std::invalid_argument("quiver point: wrong number of framing maps");
    auto check = [](const RationalMatrix& mat, int rows, int cols, const char* what) {
        if (mat.rows() != static_cast<std::size_t>(rows) ||
            mat.cols() != static_cast<std::size_t>(cols))
            throw std::invalid_argument(std::string("quiver point: bad shape for ") + what);
    };
    for (std::size_t i = 0; i + 1 < nodes; ++i) {
        check(p.A[i], d.v[i + 1], d.v[i], "A");
        check(p.B[i], d.v[i], d.v[i + 1], "B");
    }
    for (std::size_t i = 0; i < nodes; ++i) {
        check(p.Gamma[i], d.v[i], d.w[i], "Gamma");
        check(p.Delta[i], d.w[i], d.v[i], "Delta");
    }
}

bool check_relations(const QuiverPoint& p) {
    validate_dimensions(p);
    const QuiverData& d = p.data;
    for (int i = 1; i <= d.m - 1; ++i) {
        std::size_t vi = static_cast<std::size_t>(d.v[i - 1]);
        RationalMatrix lhs(vi, vi);
        if (i >= 2) lhs = p.A[i - 2] * p.B[i - 2];
        lhs = lhs + p.Gamma[i - 1] * p.Delta[i - 1];
        RationalMatrix rhs(vi, vi);
        if (i <= d.m - 2) rhs = p.B[i - 1] * p.A[i - 1];
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

// Incrementally echelonized spanning set for one node.
class SpanBuilder {
public:
    bool add(std::vector<Rat> v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] == 0) continue;
            Rat f = v[pivot];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0) ++pivot;
        if (pivot == v.size()) return false;
        Rat inv = 1 / v[pivot];
        for (Rat& x : v) x *= inv;
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }
    std::size_t dim() const { return rows_.size(); }
    std::vector<std::vector<Rat>> vectors() const {
        std::vector<std::vector<Rat>> out;
        for (const auto& [pivot, row] : rows_) out.push_back(row);
        return out;
    }

private:
    std::vector<std::pair<std::size_t, std::vector<Rat>>> rows_;
};

std::vector<Rat> column_of(const RationalMatrix& m, std::size_t j) {
    std::vector<Rat> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
    return v;
}

}  // namespace

bool is_stable(const QuiverPoint& p) {
    validate_dimensions(p);
    const QuiverData& d = p.data;
    std::size_t nodes = d.v.size();
    std::vector<SpanBuilder> span(nodes);
    for (std::size_t i = 0; i < nodes; ++i)
        for (std::size_t j = 0; j < p.Gamma[i].cols(); ++j)
            span[i].add(column_of(p.Gamma[i], j));

    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i + 1 < nodes; ++i) {
            for (const auto& v : span[i].vectors())
                grew |= span[i + 1].add(p.A[i].apply(v));
            for (const auto& v : span[i + 1].vectors())
                grew |= span[i].add(p.B[i].apply(v));
        }
    }
    for (std::size_t i = 0; i < nodes; ++i)
        if (span[i].dim() != static_cast<std::size_t>(d.v[i])) return false;
    return true;
}

bool is_mu_trivial(const QuiverData& d) {
    for (std::size_t i = 1; i < d.w.size(); ++i)
        if (d.w[i] != 0) return false;
    return !d.w.empty();
}

bool is_stable_surjective(const QuiverPoint& p) {
    validate_dimensions(p);
    if (!is_mu_trivial(p.data))
        throw std::invalid_argument("surjectivity criterion applies to mu-trivial points");
    if (p.Gamma[0].rank() != p.Gamma[0].rows()) return false;
    for (const RationalMatrix& a : p.A)
        if (a.rank() != a.rows()) return false;
    return true;
}

RationalMatrix kp_project(const QuiverPoint& p) {
    if (!is_mu_trivial(p.data))
        throw std::invalid_argument("kp_project: point is not mu-trivial (w must be (n,0,...,0))");
    if (!check_relations(p))
        throw std::domain_error("kp_project: quiver relations are violated");
    RationalMatrix x = p.Delta[0] * p.Gamma[0];
    if (x.trace() != 0) throw std::logic_error("kp_project: projection has nonzero trace");
    if (!is_nilpotent(x)) throw std::logic_error("kp_project: projection is not nilpotent");
    return x;
}

FlagData flag_from_point(const QuiverPoint& p) {
    if (!check_relations(p))
        throw std::domain_error("flag_from_point: quiver relations are violated");
    if (!is_stable(p))
        throw std::domain_error("flag_from_point: point is not stable");
    FlagData out;
    out.X = kp_project(p);
    const QuiverData& d = p.data;
    std::size_t n = out.X.rows();

    RationalMatrix composite = p.Gamma[0];  // C_i : C^n -> C^{v_i}
    int rsum = 0;
    for (int i = 1; i <= d.m; ++i) {
        rsum += d.r[i - 1];
        if (i == d.m) {
            out.subspaces.push_back(RationalMatrix::identity(n));
            break;
        }
        std::vector<std::vector<Rat>> kernel = composite.nullspace();
        if (static_cast<int>(kernel.size()) != rsum)
            throw std::logic_error("flag_from_point: kernel dimension mismatch at step " +
                                   std::to_string(i));
        RationalMatrix u(n, kernel.size());
        for (std::size_t j = 0; j < kernel.size(); ++j)
            for (std::size_t k = 0; k < n; ++k) u.at(k, j) = kernel[j][k];
        out.subspaces.push_back(std::move(u));
        if (i <= d.m - 2) composite = p.A[i - 1] * composite;
    }
    return out;
}

QuiverPoint random_relation_point(const QuiverData& d, std::mt19937_64& rng, long height) {
    if (!is_mu_trivial(d))
        throw std::invalid_argument("random_relation_point: only mu-trivial data supported");
    std::size_t nodes = d.v.size();
    long n = d.w[0];

    auto random_matrix = [&](std::size_t rows, std::size_t cols) {
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rand_int(rng, -height, height);
        return m;
    };

    // Solve M * B = C for B column by column; random kernel shifts keep the
    // sample generic. Returns false if some column system is inconsistent.
    auto solve_right = [&](const RationalMatrix& m, const RationalMatrix& c,
                           RationalMatrix& b) {
        b = RationalMatrix(m.cols(), c.cols());
        std::vector<std::vector<Rat>> kernel = m.nullspace();
        for (std::size_t j = 0; j < c.cols(); ++j) {
            std::vector<Rat> x;
            if (!solve_linear(m, column_of(c, j), x)) return false;
            for (const auto& k : kernel) {
                Rat f(rand_int(rng, -height, height));
                for (std::size_t t = 0; t < x.size(); ++t) x[t] += f * k[t];
            }
            for (std::size_t t = 0; t < x.size(); ++t) b.at(t, j) = x[t];
        }
        return true;
    };

    for (int attempt = 0; attempt < 256; ++attempt) {
        QuiverPoint p;
        p.data = d;
        p.Gamma.push_back(random_matrix(d.v[0], n));
        p.Delta.emplace_back(static_cast<std::size_t>(n), d.v[0]);
        for (std::size_t i = 1; i < nodes; ++i) {
            p.Gamma.emplace_back(d.v[i], 0);
            p.Delta.emplace_back(0, d.v[i]);
        }
        for (std::size_t i = 0; i + 1 < nodes; ++i) {
            p.A.push_back(random_matrix(d.v[i + 1], d.v[i]));
            p.B.emplace_back(d.v[i], d.v[i + 1]);
        }

        // Relation m-1 forces A_{m-2} B_{m-2} = 0; below it each B feeds the
        // next relation. The chain ends with Gamma_1 Delta_1 = B_1 A_1.
        bool ok = true;
        RationalMatrix target;  // right-hand side B_i A_i of the next solve
        if (nodes >= 2) {
            std::size_t last = nodes - 2;
            RationalMatrix zero(d.v[last + 1], d.v[last + 1]);
            ok = solve_right(p.A[last], zero, p.B[last]);
            for (std::size_t i = last; ok && i > 0; --i) {
                target = p.B[i] * p.A[i];
                ok = solve_right(p.A[i - 1], target, p.B[i - 1]);
            }
            if (ok) {
                target = p.B[0] * p.A[0];
                ok = solve_right(p.Gamma[0], target, p.Delta[0]);
            }
        } else {
            RationalMatrix zero(d.v[0], d.v[0]);
            ok = solve_right(p.Gamma[0], zero, p.Delta[0]);
        }
        if (!ok) continue;
        if (!check_relations(p))
            throw std::logic_error("random_relation_point: solver produced a bad point");
        return p;
    }
    throw std::runtime_error("random_relation_point: no consistent sample found");
}

namespace {

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

RationalMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    if (j.size() != rows) throw std::invalid_argument("matrix JSON: wrong row count");
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("matrix JSON: wrong column count");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = parse_rational(j[i][k].get<std::string>());
    }
    return m;
}

json data_to_json(const QuiverData& d) {
    return json{{"m", d.m}, {"r", d.r}, {"v", d.v}, {"w", d.w}};
}

QuiverData data_from_json(const json& j) {
    QuiverData d;
    d.m = j.at("m").get<int>();
    d.r = j.at("r").get<std::vector<int>>();
    d.v = j.at("v").get<std::vector<int>>();
    d.w = j.at("w").get<std::vector<int>>();
    if (static_cast<int>(d.r.size()) != d.m || d.v.size() != d.w.size() ||
        static_cast<int>(d.v.size()) != d.m - 1)
        throw std::invalid_argument("quiver data JSON: inconsistent lengths");
    long rsum = 0, wsum = 0;
    for (int x : d.r) rsum += x;
    for (std::size_t i = 0; i < d.w.size(); ++i) wsum += static_cast<long>(i + 1) * d.w[i];
    if (rsum != wsum)
        throw std::invalid_argument("quiver data JSON: sum(r) != sum(i*w_i)");
    return d;
}

}  // namespace

std::string QuiverData::to_json_text() const { return data_to_json(*this).dump(); }

QuiverData QuiverData::from_json_text(const std::string& text) {
    return data_from_json(json::parse(text));
}

std::string QuiverPoint::to_json_text() const {
    json j;
    j["data"] = data_to_json(data);
    for (const char* key : {"A", "B", "Gamma", "Delta"}) j[key] = json::array();
    for (const RationalMatrix& m : A) j["A"].push_back(matrix_to_json(m));
    for (const RationalMatrix& m : B) j["B"].push_back(matrix_to_json(m));
    for (const RationalMatrix& m : Gamma) j["Gamma"].push_back(matrix_to_json(m));
    for (const RationalMatrix& m : Delta) j["Delta"].push_back(matrix_to_json(m));
    return j.dump(2);
}

QuiverPoint QuiverPoint::from_json_text(const std::string& text) {
    json j = json::parse(text);
    QuiverPoint p;
    p.data = data_from_json(j.at("data"));
    const auto& v = p.data.v;
    const auto& w = p.data.w;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        p.A.push_back(matrix_from_json(j.at("A").at(i), v[i + 1], v[i]));
        p.B.push_back(matrix_from_json(j.at("B").at(i), v[i], v[i + 1]));
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        p.Gamma.push_back(matrix_from_json(j.at("Gamma").at(i), v[i], w[i]));
        p.Delta.push_back(matrix_from_json(j.at("Delta").at(i), w[i], v[i]));
    }
    validate_dimensions(p);
    return p;
}

}  // namespace nilorb
