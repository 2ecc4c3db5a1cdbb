#include "crossact/groups.hpp"

#include "crossact/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace crossact {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

// Closure of gens under multiplication, starting from the identity.
std::vector<char> closure(const FiniteGroup& G, const std::vector<Elem>& gens) {
    std::vector<char> in(G.order(), 0);
    std::deque<Elem> queue{G.identity()};
    in[G.identity()] = 1;
    while (!queue.empty()) {
        Elem x = queue.front();
        queue.pop_front();
        for (Elem g : gens) {
            Elem y = G.mul(x, g);
            if (!in[y]) {
                in[y] = 1;
                queue.push_back(y);
            }
        }
    }
    return in;
}

}  // namespace

FiniteGroup::FiniteGroup() : d_(std::make_shared<Data>()) {}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("empty table");
    auto d = std::make_shared<Data>();
    d->n = n;
    d->table.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) throw NotAGroup("row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b) {
            Elem v = table[a][b];
            if (v < 0 || v >= n) throw NotAGroup("entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
            d->table[static_cast<std::size_t>(a) * n + b] = v;
        }
    }
    auto T = [&](Elem a, Elem b) { return d->table[static_cast<std::size_t>(a) * n + b]; };

    Elem e = -1;
    for (Elem c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = T(c, x) == x && T(x, c) == x;
        if (ok) e = c;
    }
    if (e < 0) throw NotAGroup("missing identity");
    d->e = e;

    if (n <= 64) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (T(T(a, b), c) != T(a, T(b, c))) throw NotAGroup("non-associative triple " + triple(a, b, c));
    }

    d->inverse.assign(n, -1);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (T(x, y) == e && T(y, x) == e) {
                d->inverse[x] = y;
                break;
            }
        }
        if (d->inverse[x] < 0) throw NotAGroup("missing inverse for " + std::to_string(x));
    }
    for (Elem a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (Elem b = 0; b < n; ++b) {
            if (row[T(a, b)]++) throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
            if (col[T(b, a)]++) throw NotAGroup("column " + std::to_string(a) + " is not a permutation");
        }
    }

    if (labels.empty()) {
        for (Elem x = 0; x < n; ++x) labels.push_back(x == e ? "e" : std::to_string(x));
    } else if (static_cast<int>(labels.size()) != n) {
        throw NotAGroup("label count does not match order");
    }
    d->labels = std::move(labels);

    FiniteGroup G;
    G.d_ = d;
    // greedy generating set
    std::vector<Elem> gens;
    std::vector<char> span = closure(G, gens);
    for (Elem x = 0; x < n; ++x) {
        if (span[x]) continue;
        gens.push_back(x);
        span = closure(G, gens);
    }
    d->gens = gens;

    if (n > 64) {
        // Light's test: associativity on a generating set in the middle suffices.
        for (Elem g : gens)
            for (Elem a = 0; a < n; ++a)
                for (Elem c = 0; c < n; ++c)
                    if (T(T(a, g), c) != T(a, T(g, c))) throw NotAGroup("non-associative triple " + triple(a, g, c));
    }
    return G;
}

Elem FiniteGroup::pow(Elem a, long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Elem out = identity();
    for (long i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

int FiniteGroup::element_order(Elem a) const {
    int k = 1;
    for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
}

int FiniteGroup::exponent() const {
    long e = 1;
    for (Elem x = 0; x < order(); ++x) e = std::lcm(e, static_cast<long>(element_order(x)));
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
    for (Elem a = 0; a < order(); ++a)
        for (Elem b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
    std::vector<std::vector<Elem>> t(order(), std::vector<Elem>(order()));
    for (Elem a = 0; a < order(); ++a)
        for (Elem b = 0; b < order(); ++b) t[a][b] = mul(a, b);
    return t;
}

Elem FiniteGroup::find_label(const std::string& l) const {
    auto it = std::find(d_->labels.begin(), d_->labels.end(), l);
    return it == d_->labels.end() ? -1 : static_cast<Elem>(it - d_->labels.begin());
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->table == b.d_->table);
}

bool GroupHom::is_trivial() const {
    return std::all_of(map.begin(), map.end(), [&](Elem x) { return x == codomain.identity(); });
}

bool Subgroup::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Elem Subgroup::index_of(Elem x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    return (it != elements.end() && *it == x) ? static_cast<Elem>(it - elements.begin()) : -1;
}

FiniteGroup Subgroup::as_group() const {
    const int k = order();
    std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        labels.push_back(parent.label(elements[i]));
        for (int j = 0; j < k; ++j) t[i][j] = index_of(parent.mul(elements[i], elements[j]));
    }
    return FiniteGroup::from_table(t, labels);
}

FiniteGroup group_from_table(const std::vector<std::vector<Elem>>& table, std::vector<std::string> labels) {
    return FiniteGroup::from_table(table, std::move(labels));
}

FiniteGroup group_cyclic(int n) {
    if (n < 1) throw SizeBound("cyclic group order must be positive");
    if (n > 4096) throw SizeBound("cyclic group order " + std::to_string(n) + " exceeds 4096");
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a));
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup::from_table(t, labels);
}

Elem permutation_index(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (images[j] < images[i]) ++smaller;
        long f = 1;
        for (int k = 2; k < n - i; ++k) f *= k;
        rank += smaller * f;
    }
    return static_cast<Elem>(rank);
}

std::vector<int> permutation_of(int n, Elem index) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    for (Elem k = 0; k < index; ++k) std::next_permutation(p.begin(), p.end());
    return p;
}

namespace {

std::string cycle_label(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n + 1, 0);
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (seen[i] || p[i - 1] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first && n > 9) out += " ";
            first = false;
            out += std::to_string(j);
            j = p[j - 1];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup group_symmetric(int n) {
    if (n < 1) throw SizeBound("symmetric degree must be positive");
    if (n > 7) throw SizeBound("symmetric degree " + std::to_string(n) + " exceeds the table bound 7");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int N = static_cast<int>(perms.size());
    std::vector<std::vector<Elem>> t(N, std::vector<Elem>(N));
    std::vector<int> h(n);
    std::vector<std::string> labels;
    for (int a = 0; a < N; ++a) {
        labels.push_back(cycle_label(perms[a]));
        for (int b = 0; b < N; ++b) {
            for (int x = 0; x < n; ++x) h[x] = perms[a][perms[b][x] - 1];
            t[a][b] = permutation_index(h);
        }
    }
    return FiniteGroup::from_table(t, labels);
}

std::vector<int> parse_cycles(int n, const std::string& text) {
    std::vector<int> result(n);
    std::iota(result.begin(), result.end(), 1);
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ') { ++i; continue; }
        if (ch == 'e' && cycles.empty()) { ++i; continue; }
        if (ch != '(') throw ParseError("bad cycle notation: " + text);
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw ParseError("unclosed cycle: " + text);
        std::string body = text.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        if (body.find(' ') != std::string::npos || body.find(',') != std::string::npos) {
            std::replace(body.begin(), body.end(), ',', ' ');
            std::istringstream is(body);
            int v;
            while (is >> v) cyc.push_back(v);
        } else {
            for (char c : body) cyc.push_back(c - '0');
        }
        for (int v : cyc)
            if (v < 1 || v > n) throw ParseError("point out of range in " + text);
        cycles.push_back(cyc);
        i = close + 1;
    }
    // rightmost cycle acts first
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        std::vector<int> c(n);
        std::iota(c.begin(), c.end(), 1);
        const auto& cyc = *it;
        for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        for (int x = 0; x < n; ++x) result[x] = c[result[x] - 1];
    }
    return result;
}

FiniteGroup group_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order();
    if (static_cast<long>(na) * nb > 4096) throw SizeBound("product order exceeds 4096");
    std::vector<std::vector<Elem>> t(na * nb, std::vector<Elem>(na * nb));
    std::vector<std::string> labels;
    for (int x = 0; x < na * nb; ++x) {
        labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
        for (int y = 0; y < na * nb; ++y)
            t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
    return FiniteGroup::from_table(t, labels);
}

FiniteGroup group_semidirect(const FiniteGroup& G, const FiniteGroup& Gamma,
                             const std::vector<std::vector<Elem>>& act) {
    const int ng = G.order(), ns = Gamma.order();
    if (static_cast<int>(act.size()) != ns) throw NotAGroup("action table has wrong shape");
    for (Elem s = 0; s < ns; ++s) {
        if (static_cast<int>(act[s].size()) != ng) throw NotAGroup("action table has wrong shape");
        if (act[s][G.identity()] != s) throw NotAGroup("identity acts nontrivially on " + std::to_string(s));
        for (Elem g = 0; g < ng; ++g)
            for (Elem h = 0; h < ng; ++h)
                if (act[act[s][g]][h] != act[s][G.mul(g, h)])
                    throw NotAGroup("not a right action at " + triple(s, g, h));
    }
    for (Elem s = 0; s < ns; ++s)
        for (Elem t = 0; t < ns; ++t)
            for (Elem g = 0; g < ng; ++g)
                if (act[Gamma.mul(s, t)][g] != Gamma.mul(act[s][g], act[t][g]))
                    throw NotAGroup("not an action by automorphisms at " + triple(s, t, g));
    const int n = ng * ns;
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
        Elem g = x / ns, s = x % ns;
        labels.push_back("(" + G.label(g) + "," + Gamma.label(s) + ")");
        for (int y = 0; y < n; ++y) {
            Elem h = y / ns, u = y % ns;
            t[x][y] = G.mul(g, h) * ns + Gamma.mul(act[s][h], u);
        }
    }
    return FiniteGroup::from_table(t, labels);
}

GroupHom hom_validate(const FiniteGroup& domain, const FiniteGroup& codomain, const std::vector<Elem>& map) {
    if (static_cast<int>(map.size()) != domain.order()) throw NotAHom("map length does not match domain order");
    for (Elem x : map)
        if (x < 0 || x >= codomain.order()) throw NotAHom("image out of range");
    if (map[domain.identity()] != codomain.identity()) throw NotAHom("identity not mapped to identity");
    for (Elem x = 0; x < domain.order(); ++x)
        for (Elem y = 0; y < domain.order(); ++y)
            if (map[domain.mul(x, y)] != codomain.mul(map[x], map[y]))
                throw NotAHom("pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
    return GroupHom{domain, codomain, map};
}

GroupHom trivial_hom(const FiniteGroup& domain, const FiniteGroup& codomain) {
    return GroupHom{domain, codomain, std::vector<Elem>(domain.order(), codomain.identity())};
}

std::vector<GroupHom> enumerate_homs(const FiniteGroup& D, const FiniteGroup& C, long bound) {
    const auto& gens = D.generators();
    long total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        total *= C.order();
        if (total > bound) throw SizeBound("hom search space exceeds " + std::to_string(bound));
    }
    std::vector<GroupHom> out;
    std::vector<Elem> images(gens.size(), 0);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (std::size_t i = gens.size(); i-- > 0;) {
            images[i] = static_cast<Elem>(c % C.order());
            c /= C.order();
        }
        std::vector<Elem> map(D.order(), -1);
        map[D.identity()] = C.identity();
        std::deque<Elem> queue{D.identity()};
        bool ok = true;
        while (!queue.empty() && ok) {
            Elem x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < gens.size() && ok; ++i) {
                Elem y = D.mul(x, gens[i]);
                Elem img = C.mul(map[x], images[i]);
                if (map[y] < 0) {
                    map[y] = img;
                    queue.push_back(y);
                } else if (map[y] != img) {
                    ok = false;
                }
            }
        }
        if (!ok) continue;
        try {
            out.push_back(hom_validate(D, C, map));
        } catch (const NotAHom&) {
        }
    }
    std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; });
    return out;
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<Elem>& gens) {
    for (Elem g : gens)
        if (g < 0 || g >= G.order()) throw IndexOutOfRange("generator " + std::to_string(g));
    std::vector<char> in = closure(G, gens);
    Subgroup H{G, {}};
    for (Elem x = 0; x < G.order(); ++x)
        if (in[x]) H.elements.push_back(x);
    return H;
}

Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup H = subgroup_generated(G, elements);
    if (H.elements != elements) throw NotAGroup("element set is not a subgroup");
    return H;
}

nlohmann::json group_to_json(const FiniteGroup& G) {
    return {{"order", G.order()}, {"table", G.table()}, {"labels", G.labels()}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("group must be an object");
    if (j.contains("cyclic")) return group_cyclic(j.at("cyclic").get<int>());
    if (j.contains("symmetric")) return group_symmetric(j.at("symmetric").get<int>());
    if (j.contains("product")) {
        const auto& fs = j.at("product");
        if (!fs.is_array() || fs.empty()) throw ParseError("product needs a nonempty list of groups");
        FiniteGroup out = group_from_json(fs[0]);
        for (std::size_t i = 1; i < fs.size(); ++i) out = group_product(out, group_from_json(fs[i]));
        return out;
    }
    if (!j.contains("table")) throw ParseError("group needs a table");
    auto table = j.at("table").get<std::vector<std::vector<Elem>>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw ParseError("order does not match table size");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return group_from_table(table, labels);
}

}  // namespace crossact
