#include "covercurve/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace covercurve {

FiniteGroup::FiniteGroup(std::vector<std::vector<Elt>> mul_table) : mul_(std::move(mul_table)) {
    init_tables();
}

void FiniteGroup::init_tables() {
    const int n = static_cast<int>(mul_.size());
    if (n < 1) fail("MalformedGroup", "empty multiplication table");
    for (const auto& row : mul_) {
        if (static_cast<int>(row.size()) != n) fail("MalformedGroup", "table is not square");
        for (Elt x : row)
            if (x < 0 || x >= n) fail("MalformedGroup", "table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (mul_[0][a] != a || mul_[a][0] != a)
            fail("MalformedGroup", "element 0 is not an identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == 0) {
                if (mul_[b][a] != 0) fail("MalformedGroup", "one-sided inverse");
                inv_[a] = b;
            }
        if (inv_[a] < 0) fail("MalformedGroup", "element without inverse");
    }
    // Associativity is checked exhaustively; groups here are small enough.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    fail("MalformedGroup", "multiplication table is not associative");
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& row : mul_)
        for (Elt x : row) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e37;
            h *= 1099511628211ull;
        }
    hash_ = h;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) fail("MalformedGroup", "cyclic group needs n >= 1");
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) fail("MalformedGroup", "dihedral group needs n >= 1");
    // indices 0..n-1 rotations r^k, n..2n-1 reflections s r^k
    auto id = [n](bool refl, int k) { return (refl ? n : 0) + ((k % n) + n) % n; };
    const int m = 2 * n;
    std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            bool ra = a >= n, rb = b >= n;
            int ka = a % n, kb = b % n;
            // (s^ra r^ka)(s^rb r^kb) = s^(ra+rb) r^(kb + ka*(-1)^rb)  with s r^k s = r^-k
            int k = rb ? (kb - ka) : (ka + kb);
            t[a][b] = id(ra != rb, k);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& generators) {
    if (degree < 1) fail("MalformedGroup", "permutation degree must be >= 1");
    std::vector<std::vector<int>> gens = generators;
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != degree) fail("MalformedGroup", "generator arity mismatch");
        std::vector<int> seen(degree, 0);
        for (int x : g) {
            if (x < 0 || x >= degree || seen[x]++) fail("MalformedGroup", "generator is not a permutation");
        }
    }
    std::sort(gens.begin(), gens.end());
    std::vector<int> ident(degree);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<std::vector<int>> elems{ident};
    std::map<std::vector<int>, int> index{{ident, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            std::vector<int> prod(degree);
            for (int x = 0; x < degree; ++x) prod[x] = g[elems[i][x]];
            if (!index.count(prod)) {
                index[prod] = static_cast<int>(elems.size());
                elems.push_back(prod);
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(degree);
            for (int x = 0; x < degree; ++x) prod[x] = elems[a][elems[b][x]];
            t[a][b] = index.at(prod);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    std::vector<std::vector<int>> gens;
    if (n >= 2) {
        std::vector<int> tr(n);
        std::iota(tr.begin(), tr.end(), 0);
        std::swap(tr[0], tr[1]);
        gens.push_back(tr);
        std::vector<int> cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
        gens.push_back(cyc);
    }
    return from_permutations(std::max(n, 1), gens);
}

int FiniteGroup::element_order(Elt a) const {
    int k = 1;
    Elt x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::vector<Elt> FiniteGroup::order_two_elements() const {
    std::vector<Elt> out;
    for (Elt g = 1; g < order(); ++g)
        if (mul(g, g) == 0) out.push_back(g);
    return out;
}

GroupRingElt GroupRingElt::unit(Elt g, std::int64_t c) {
    GroupRingElt r;
    r.set_coeff(g, c);
    return r;
}

std::int64_t GroupRingElt::coeff(Elt g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? 0 : it->second;
}

void GroupRingElt::set_coeff(Elt g, std::int64_t c) {
    if (c == 0)
        coeffs_.erase(g);
    else
        coeffs_[g] = c;
}

void GroupRingElt::add_coeff(Elt g, std::int64_t c) { set_coeff(g, coeff(g) + c); }

GroupRingElt GroupRingElt::operator+(const GroupRingElt& o) const {
    GroupRingElt r = *this;
    for (auto& [g, c] : o.coeffs_) r.add_coeff(g, c);
    return r;
}

GroupRingElt GroupRingElt::operator-(const GroupRingElt& o) const {
    GroupRingElt r = *this;
    for (auto& [g, c] : o.coeffs_) r.add_coeff(g, -c);
    return r;
}

GroupRingElt GroupRingElt::operator-() const {
    GroupRingElt r;
    for (auto& [g, c] : coeffs_) r.set_coeff(g, -c);
    return r;
}

std::string GroupRingElt::to_string(const FiniteGroup&) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [g, c] : coeffs_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        std::int64_t a = c > 0 ? c : -c;
        if (a != 1) os << a << "*";
        os << "g" << g;
        first = false;
    }
    return os.str();
}

GroupRingElt mul(const FiniteGroup& G, const GroupRingElt& a, const GroupRingElt& b) {
    GroupRingElt r;
    for (auto& [g, cg] : a.coeffs())
        for (auto& [h, ch] : b.coeffs()) r.add_coeff(G.mul(g, h), cg * ch);
    return r;
}

GroupRingElt scalar_mul(std::int64_t k, const GroupRingElt& a) {
    GroupRingElt r;
    for (auto& [g, c] : a.coeffs()) r.set_coeff(g, k * c);
    return r;
}

GroupRingElt involution(const FiniteGroup& G, const GroupRingElt& a) {
    GroupRingElt r;
    for (auto& [g, c] : a.coeffs()) r.set_coeff(G.inv(g), c);
    return r;
}

Subgroup Subgroup::trivial(const FiniteGroup&) {
    Subgroup s;
    s.elements_ = {0};
    return s;
}

Subgroup Subgroup::whole(const FiniteGroup& G) {
    Subgroup s;
    for (Elt g = 0; g < G.order(); ++g) s.elements_.insert(g);
    return s;
}

Subgroup Subgroup::generated(const FiniteGroup& G, const std::vector<Elt>& gens) {
    std::set<Elt> elems{0};
    std::vector<Elt> frontier{0};
    while (!frontier.empty()) {
        Elt x = frontier.back();
        frontier.pop_back();
        for (Elt g : gens) {
            Elt y = G.mul(x, g);
            if (elems.insert(y).second) frontier.push_back(y);
        }
    }
    Subgroup s;
    s.elements_ = std::move(elems);
    return s;
}

Subgroup Subgroup::from_elements(const FiniteGroup& G, std::set<Elt> elements) {
    if (!elements.count(0)) fail("MalformedSubgroup", "missing identity");
    for (Elt a : elements) {
        if (!elements.count(G.inv(a))) fail("MalformedSubgroup", "not closed under inverse");
        for (Elt b : elements)
            if (!elements.count(G.mul(a, b))) fail("MalformedSubgroup", "not closed under product");
    }
    Subgroup s;
    s.elements_ = std::move(elements);
    return s;
}

bool Subgroup::is_cyclic(const FiniteGroup& G) const { return cyclic_generator(G) >= 0; }

Elt Subgroup::cyclic_generator(const FiniteGroup& G) const {
    for (Elt g : elements_)
        if (G.element_order(g) == order()) return g;
    return order() == 1 ? 0 : -1;
}

GroupRingElt zeta(const Subgroup& H) {
    GroupRingElt z;
    for (Elt g : H.elements()) z.set_coeff(g, 1);
    return z;
}

std::set<Elt> right_coset(const FiniteGroup& G, const Subgroup& H, Elt g) {
    std::set<Elt> out;
    for (Elt h : H.elements()) out.insert(G.mul(h, g));
    return out;
}

DoubleCoset double_coset(const FiniteGroup& G, const Subgroup& C, Elt g, const Subgroup& D) {
    DoubleCoset dc;
    for (Elt c : C.elements())
        for (Elt d : D.elements()) dc.elements.insert(G.mul(G.mul(c, g), d));
    dc.representative = *dc.elements.begin();
    return dc;
}

TwistedStabilizer twisted_stabilizer(const FiniteGroup& G, const Subgroup& C, Elt g) {
    if (g == 0 || G.mul(g, g) != 0) fail("NotOrderTwo", "twisted stabilizer needs an order-2 element");
    TwistedStabilizer s;
    s.g = g;
    for (Elt c : C.elements())
        for (Elt d : C.elements())
            if (G.mul(G.mul(c, g), G.inv(d)) == g) {
                s.pairs.emplace_back(c, d);
                s.base.insert(c);
                s.iota[c] = d;
            }
    std::vector<Elt> gens(s.base.begin(), s.base.end());
    gens.push_back(g);
    s.extension = Subgroup::generated(G, gens).elements();
    return s;
}

}  // namespace covercurve
