#include "nilorb/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilorb {

bool MultiPoly::GrlexDesc::operator()(const Expo& a, const Expo& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;  // lexicographic, earlier-variable exponent decides
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[Expo(p.vars_.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t idx) {
    if (idx >= vars.size()) throw std::invalid_argument("variable index out of range");
    MultiPoly p(std::move(vars));
    Expo e(p.vars_.size(), 0);
    e[idx] = 1;
    p.terms_[e] = 1;
    return p;
}

Rat MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Expo& lead = terms_.begin()->first;
    return static_cast<int>(std::accumulate(lead.begin(), lead.end(), 0u));
}

bool MultiPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)) != degree) return false;
    }
    return true;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        d = std::max(d, e[var]);
    }
    return d;
}

MultiPoly& MultiPoly::add_term(const Expo& e, const Rat& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly out(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(vars_, 1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("eval: assignment does not cover all variables");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= rat_pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw std::invalid_argument("derivative: bad variable");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        --d[var];
        out.add_term(d, c * Rat(static_cast<long>(e[var])));
    }
    return out;
}

MultiPoly MultiPoly::coeff_of(std::size_t var, unsigned power) const {
    if (var >= vars_.size()) throw std::invalid_argument("coeff_of: bad variable");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != power) continue;
        Expo d = e;
        d[var] = 0;
        out.add_term(d, c);
    }
    return out;
}

MultiPoly MultiPoly::restrict_to(const std::vector<std::string>& subset) const {
    std::vector<std::size_t> idx;
    for (const std::string& v : subset) {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end())
            throw std::invalid_argument("restrict_to: unknown variable " + v);
        idx.push_back(static_cast<std::size_t>(it - vars_.begin()));
    }
    MultiPoly out(subset);
    for (const auto& [e, c] : terms_) {
        Expo d(subset.size(), 0);
        unsigned moved = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            d[i] = e[idx[i]];
            moved += e[idx[i]];
        }
        if (moved != std::accumulate(e.begin(), e.end(), 0u))
            throw std::domain_error("restrict_to: polynomial uses a dropped variable");
        out.add_term(d, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::vector<std::string>& target_vars,
                                const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size())
        throw std::invalid_argument("substitute: one image per variable required");
    for (const MultiPoly& im : images)
        if (im.vars() != target_vars)
            throw std::invalid_argument("substitute: image over wrong variable list");
    MultiPoly out(target_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * images[i].pow(e[i]);
        out = out + t;
    }
    return out;
}

MultiPoly MultiPoly::permute_variables(const std::vector<std::size_t>& perm) const {
    if (perm.size() != vars_.size())
        throw std::invalid_argument("permute_variables: wrong permutation size");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Expo d(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) d[perm[i]] += e[i];
        out.add_term(d, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = std::accumulate(e.begin(), e.end(), 0u) > 0;
        bool printed_coeff = false;
        if (!has_vars || mag != 1) {
            out << mag.get_str();
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff) out << "*";
            out << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
            printed_coeff = true;
        }
    }
    return out.str();
}

namespace {

// One factor of a '*' product: a rational literal, or name, or name^power.
void parse_factor(const std::vector<std::string>& vars, const std::string& tok,
                  Rat& coeff, MultiPoly::Expo& expo) {
    if (tok.empty()) throw std::invalid_argument("empty factor in polynomial text");
    if (std::isdigit(tok[0]) || tok[0] == '-' || tok[0] == '+') {
        coeff *= parse_rational(tok);
        return;
    }
    std::string name = tok;
    unsigned power = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
        name = tok.substr(0, caret);
        std::string ex = tok.substr(caret + 1);
        std::size_t pos = 0;
        power = static_cast<unsigned>(std::stoul(ex, &pos));
        if (pos != ex.size()) throw std::invalid_argument("bad exponent '" + ex + "'");
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        throw std::invalid_argument("unknown variable '" + name + "' in polynomial text");
    expo[static_cast<std::size_t>(it - vars.begin())] += power;
}

}  // namespace

MultiPoly MultiPoly::parse(const std::vector<std::string>& vars, const std::string& text) {
    MultiPoly out(vars);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial text");

    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("dangling sign in polynomial text");
        Rat coeff(sign);
        Expo expo(vars.size(), 0);
        std::size_t k = 0;
        while (k <= term.size()) {
            std::size_t star = term.find('*', k);
            if (star == std::string::npos) star = term.size();
            parse_factor(vars, term.substr(k, star - k), coeff, expo);
            k = star + 1;
            if (star == term.size()) break;
        }
        out.add_term(expo, coeff);
        i = j;
    }
    return out;
}

}  // namespace nilorb
