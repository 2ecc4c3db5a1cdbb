#include "crossact/braided.hpp"

#include "crossact/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace crossact {

namespace {

// prod(c over lhs) * lhs_fixed == prod(c over rhs) * rhs_fixed; cells index s*n+t.
struct Equation {
    int family;
    std::vector<int> lhs, rhs;
    Cyclotomic lhs_fixed, rhs_fixed;
    std::string witness;
};

const char* kFamilies[] = {"braiding equivariance on lines", "hexagon splitting the first factor",
                           "hexagon splitting the second factor"};

std::vector<Equation> braiding_equations(const CrossedAction& ca, const BraidingPair& bp) {
    const MatchedPair& mp = ca.mp();
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    const int n = mp.nGamma();
    const Elem e = Gm.identity();
    auto cell = [n, e](std::vector<int>& v, Elem s, Elem t) {
        if (s != e && t != e) v.push_back(s * n + t);
    };
    auto P = [&ca](Elem g, Elem h, Elem d) { return ca.rho2(g, h, d); };
    auto Gs = [&ca](Elem g, Elem a, Elem t) { return ca.gamma(g, a, t); };
    auto L = [&bp](Elem s, Elem t) { return bp.twist(s, t); };
    const GroupHom& psi = bp.psi;

    std::vector<Equation> eqs;
    for (Elem g = 0; g < mp.nG(); ++g)
        for (Elem s = 0; s < n; ++s)
            for (Elem t = 0; t < n; ++t) {
                Equation q{0, {}, {}, {}, {}, {}};
                Elem tg = mp.ract(t, g);
                Elem s1 = mp.lact(s, tg), t1 = mp.lact(t, g), s2 = mp.lact(s, psi(t));
                cell(q.lhs, s1, t1);
                q.lhs_fixed = Gs(g, s, t) * P(L(s1, t1), g, t) * P(psi(t1), tg, s);
                cell(q.rhs, s, t);
                q.rhs_fixed = Gs(g, mp.lact(t, L(s, t)), s2) * P(mp.ract(s2, g), L(s, t), t) * P(g, psi(t), s);
                q.witness = "g=" + G.label(g) + " s=" + Gm.label(s) + " t=" + Gm.label(t);
                eqs.push_back(std::move(q));
            }
    for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t)
            for (Elem u = 0; u < n; ++u) {
                std::string w = "s=" + Gm.label(s) + " t=" + Gm.label(t) + " u=" + Gm.label(u);
                Equation a{1, {}, {}, {}, {}, w};
                Elem u1 = mp.lact(u, L(t, u));
                cell(a.lhs, Gm.mul(s, t), u);
                a.lhs_fixed = Gs(psi(u), s, t);
                cell(a.rhs, t, u);
                cell(a.rhs, s, u1);
                a.rhs_fixed = P(L(s, u1), L(t, u), u);
                eqs.push_back(std::move(a));

                Equation b{2, {}, {}, {}, {}, w};
                cell(b.lhs, s, Gm.mul(t, u));
                b.lhs_fixed = Gs(L(s, Gm.mul(t, u)), t, u);
                cell(b.rhs, s, t);
                cell(b.rhs, mp.lact(s, psi(t)), u);
                b.rhs_fixed = P(psi(u), psi(t), s);
                eqs.push_back(std::move(b));
            }
    return eqs;
}

bool holds(const Equation& q, const std::vector<Cyclotomic>& c) {
    Cyclotomic l = q.lhs_fixed, r = q.rhs_fixed;
    for (int k : q.lhs) l = l * c[k];
    for (int k : q.rhs) r = r * c[k];
    return l == r;
}

}  // namespace

Report scalar_braiding_check(const CrossedAction& ca, const BraidingPair& bp, const std::vector<Cyclotomic>& c) {
    const int n = ca.nGamma();
    if (static_cast<int>(c.size()) != n * n)
        throw ShapeMismatch("c needs " + std::to_string(n * n) + " entries, got " + std::to_string(c.size()));
    const FiniteGroup& Gm = ca.mp().Gamma();
    const Elem e = Gm.identity();
    Report rep;
    CheckBuilder norm("c normalized"), nz("c nonzero");
    for (Elem s = 0; s < n; ++s) {
        norm.expect(c[s * n + e].is_one() && c[e * n + s].is_one(), "s=" + Gm.label(s));
        for (Elem t = 0; t < n; ++t) nz.expect(!c[s * n + t].is_zero(), "s=" + Gm.label(s) + " t=" + Gm.label(t));
    }
    norm.into(rep);
    nz.into(rep);
    std::vector<CheckBuilder> fam{CheckBuilder(kFamilies[0]), CheckBuilder(kFamilies[1]), CheckBuilder(kFamilies[2])};
    // Cells with s = e or t = e enter the equations as 1; "c normalized" covers them.
    for (const Equation& q : braiding_equations(ca, bp))
        if (fam[q.family].ok()) fam[q.family].expect(holds(q, c), q.witness);
    for (auto& f : fam) f.into(rep);
    return rep;
}

BraidingData braiding_data_validate(const CrossedAction& ca, const BraidingPair& bp, std::vector<Cyclotomic> c) {
    Report r = scalar_braiding_check(ca, bp, c);
    for (const auto& chk : r.checks) {
        if (chk.pass) continue;
        if (chk.name == kFamilies[0]) throw NotAMorphism(chk.name + ": " + chk.witness);
        throw HexagonViolation(chk.name + ": " + chk.witness);
    }
    return BraidingData{bp, std::move(c)};
}

std::vector<BraidingData> scalar_braiding_search(const CrossedAction& ca, const BraidingPair& bp, int N,
                                                 const std::vector<int>& exponents, long budget) {
    const int n = ca.nGamma();
    const Elem e = ca.mp().Gamma().identity();
    std::vector<int> free_cells;
    for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t)
            if (s != e && t != e) free_cells.push_back(s * n + t);
    std::vector<int> position(n * n, -1);
    for (int k = 0; k < static_cast<int>(free_cells.size()); ++k) position[free_cells[k]] = k;

    // Each equation is checked once the last of its cells is assigned.
    std::vector<Equation> eqs = braiding_equations(ca, bp);
    std::vector<std::vector<const Equation*>> due(free_cells.size() + 1);
    for (const Equation& q : eqs) {
        int last = -1;
        for (int k : q.lhs) last = std::max(last, position[k]);
        for (int k : q.rhs) last = std::max(last, position[k]);
        due[last + 1].push_back(&q);
    }
    std::vector<Cyclotomic> values;
    for (int x : exponents) values.push_back(Cyclotomic::root_of_unity(N, x));

    std::vector<Cyclotomic> c(n * n, Cyclotomic(1));
    std::vector<BraidingData> out;
    for (const Equation* q : due[0])
        if (!holds(*q, c)) return out;
    long nodes = 0;
    std::function<void(int)> dfs = [&](int k) {
        if (k == static_cast<int>(free_cells.size())) {
            out.push_back(BraidingData{bp, c});
            return;
        }
        for (const Cyclotomic& v : values) {
            if (++nodes > budget) throw SearchBudgetExceeded("more than " + std::to_string(budget) + " search nodes");
            c[free_cells[k]] = v;
            bool ok = true;
            for (const Equation* q : due[k + 1])
                if (!(ok = holds(*q, c))) break;
            if (ok) dfs(k + 1);
        }
        c[free_cells[k]] = Cyclotomic(1);
    };
    dfs(0);
    return out;
}

GradedMap braiding_morphism(const CrossedAction& ca, const BraidingData& bd, const EquivariantObject& X,
                            const EquivariantObject& Y) {
    const FiniteGroup& Gm = ca.mp().Gamma();
    const int dx = X.dim(), dy = Y.dim();
    std::vector<Matrix> rx(ca.nG()), ry(ca.nG());
    for (Elem g = 0; g < ca.nG(); ++g) {
        rx[g] = X.r[g].transpose();
        ry[g] = Y.r[g].transpose();
    }
    Matrix m(dy * dx, dx * dy);
    for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dy; ++j) {
            Elem s = X.X.degrees[i], t = Y.X.degrees[j];
            const Cyclotomic& c = bd(s, t);
            for (const auto& [jp, v] : ry[bd.bp.twist(s, t)].row(j))
                for (const auto& [ip, w] : rx[bd.bp.psi(t)].row(i)) m.set(jp * dx + ip, i * dy + j, c * v * w);
        }
    return GradedMap{graded_tensor(Gm, X.X, Y.X), graded_tensor(Gm, Y.X, X.X), std::move(m)};
}

ObjectSample default_object_sample(const CrossedAction& ca, unsigned long seed) {
    const MatchedPair& mp = ca.mp();
    HopfAlgebra H = build_bicrossed(mp, ca.cp());
    ObjectSample S;
    S.objects.push_back(unit_object(ca));
    for (Elem s = 0; s < mp.nGamma(); ++s) {
        if (s == mp.Gamma().identity()) continue;
        bool fixed = true;
        for (Elem g = 0; g < mp.nG(); ++g) fixed &= mp.lact(s, g) == s;
        if (!fixed) continue;
        try {
            S.objects.push_back(equivariant_validate(ca, GradedSpace{{s}}, std::vector<Matrix>(mp.nG(), Matrix::identity(1))));
        } catch (const NotEquivariant&) {
        }
    }
    const int reg = static_cast<int>(S.objects.size());
    S.objects.push_back(K_functor(ca, H, module_regular(H)));

    // Right multiplication by a basis element is a module map of the regular module.
    std::vector<int> right;
    for (int x = 0; x < H.dim; ++x) right.push_back(x);
    if (H.dim > 8) {
        std::mt19937_64 rng(seed);
        std::shuffle(right.begin(), right.end(), rng);
        right.resize(8);
    }
    for (int x : right) {
        Matrix f(H.dim, H.dim);
        for (int i = 0; i < H.dim; ++i)
            for (const Term& tm : H.product(i, x)) f.set(tm.k, i, tm.c);
        S.morphisms.push_back({reg, reg, std::move(f)});
    }

    // H e_s is spanned by the e_t#h with t<h = s.
    HModule R = module_regular(H);
    int smallest = -1;
    for (Elem s = 0; s < mp.nGamma(); ++s) {
        std::vector<int> basis;
        for (Elem t = 0; t < mp.nGamma(); ++t)
            for (Elem h = 0; h < mp.nG(); ++h)
                if (mp.lact(t, h) == s) basis.push_back(H.index(t, h));
        std::sort(basis.begin(), basis.end());
        std::vector<Matrix> action;
        for (const Matrix& a : R.action) action.push_back(a.submatrix(basis, basis));
        int idx = static_cast<int>(S.objects.size());
        S.objects.push_back(K_functor(ca, H, module_validate(H, std::move(action))));
        Matrix inc(H.dim, static_cast<int>(basis.size()));
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) inc.set(basis[k], k, Cyclotomic(1));
        S.morphisms.push_back({idx, reg, std::move(inc)});
        if (smallest < 0 || S.objects[idx].dim() < S.objects[smallest].dim()) smallest = idx;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> v(-2, 2);
    const GradedSpace& X = S.objects[smallest].X;
    for (;;) {
        Matrix P(X.dim(), X.dim());
        for (int i = 0; i < X.dim(); ++i)
            for (int j = 0; j < X.dim(); ++j)
                if (X.degrees[i] == X.degrees[j]) P.set(i, j, Cyclotomic(v(rng)));
        if (!P.inverse()) continue;
        S.objects.push_back(conjugate(ca, S.objects[smallest], P));
        S.morphisms.push_back({smallest, static_cast<int>(S.objects.size()) - 1, std::move(P)});
        break;
    }
    return S;
}

namespace {

// Symbolic objects for the R-matrix conditions: a leaf is a one-dimensional
// object of a given degree, Rho(g, L) is rho^g applied to the tensor product L.
struct Sym {
    int leaf = -1;  // name of the leaf, -1 for Rho
    Elem deg = 0;   // degree of the leaf
    Elem g = 0;
    std::vector<Sym> kids;
    friend bool operator==(const Sym&, const Sym&) = default;
};

class Evaluator {
public:
    Evaluator(const CrossedAction& ca, const BraidingData& bd) : ca_(ca), bd_(bd), mp_(ca.mp()) {}

    Elem deg(const Sym& x) const { return x.leaf >= 0 ? x.deg : mp_.lact(deg(x.kids), x.g); }
    Elem deg(const std::vector<Sym>& L, std::size_t from = 0, std::size_t to = std::size_t(-1)) const {
        Elem d = mp_.Gamma().identity();
        for (std::size_t i = from; i < std::min(to, L.size()); ++i) d = mp_.Gamma().mul(d, deg(L[i]));
        return d;
    }
    static Sym leaf(int name, Elem d) { return Sym{name, d, 0, {}}; }
    static Sym rho(Elem g, std::vector<Sym> L) { return Sym{-1, 0, g, std::move(L)}; }

    // rho^g(L) -> rho^{deg(L[k:]) > g}(L[:k]) (x) rho^g(L[k:]).
    void split(std::vector<Sym>& list, std::size_t pos, std::size_t k, Cyclotomic& acc) const {
        Sym x = list[pos];
        std::vector<Sym> a(x.kids.begin(), x.kids.begin() + k), b(x.kids.begin() + k, x.kids.end());
        Elem db = deg(b);
        acc = acc * ca_.gamma(x.g, deg(a), db);
        list[pos] = rho(mp_.ract(db, x.g), std::move(a));
        list.insert(list.begin() + pos + 1, rho(x.g, std::move(b)));
    }
    // rho^a(rho^b(L)) -> rho^{ba}(L).
    void mu(std::vector<Sym>& list, std::size_t pos, Cyclotomic& acc) const {
        Sym x = list[pos];
        const Sym& in = x.kids.at(0);
        acc = acc * ca_.rho2(x.g, in.g, deg(in.kids));
        list[pos] = rho(mp_.G().mul(in.g, x.g), in.kids);
    }
    // X = list[pos, pos+n1), Y = the next n2 entries: X (x) Y -> rho^{L(s,t)}(Y) (x) rho^{psi(t)}(X).
    void braid(std::vector<Sym>& list, std::size_t pos, std::size_t n1, std::size_t n2, Cyclotomic& acc) const {
        std::vector<Sym> X(list.begin() + pos, list.begin() + pos + n1), Y(list.begin() + pos + n1, list.begin() + pos + n1 + n2);
        Elem s = deg(X), t = deg(Y);
        acc = acc * bd_(s, t);
        Sym a = rho(bd_.bp.twist(s, t), std::move(Y)), b = rho(bd_.bp.psi(t), std::move(X));
        list.erase(list.begin() + pos, list.begin() + pos + n1 + n2);
        list.insert(list.begin() + pos, {a, b});
    }

private:
    const CrossedAction& ca_;
    const BraidingData& bd_;
    const MatchedPair& mp_;
};

void evaluate_rmatrix_conditions(const CrossedAction& ca, const BraidingData& bd, Report& rep) {
    const MatchedPair& mp = ca.mp();
    const FiniteGroup& Gm = mp.Gamma();
    const int n = mp.nGamma();
    Evaluator ev(ca, bd);
    auto L = [&Gm](Elem x) { return Gm.label(x); };

    CheckBuilder r1("R-matrix compatible with T");
    for (Elem g = 0; g < mp.nG() && r1.ok(); ++g)
        for (Elem s = 0; s < n; ++s)
            for (Elem t = 0; t < n; ++t) {
                Sym X = Evaluator::leaf(0, s), Y = Evaluator::leaf(1, t);
                std::vector<Sym> a{Evaluator::rho(g, {X, Y})}, b = a;
                Cyclotomic ca1(1), cb(1);
                ev.split(a, 0, 1, ca1);
                ev.braid(a, 0, 1, 1, ca1);
                ev.mu(a, 0, ca1);
                ev.mu(a, 1, ca1);
                ev.braid(b[0].kids, 0, 1, 1, cb);
                ev.split(b, 0, 1, cb);
                ev.mu(b, 0, cb);
                ev.mu(b, 1, cb);
                r1.expect(a == b && ca1 == cb, "g=" + mp.G().label(g) + " s=" + L(s) + " t=" + L(t) +
                                                   (a == b ? " (scalar)" : " (group labels)"));
            }
    r1.into(rep);

    CheckBuilder r2("R-matrix splits the first factor"), r3("R-matrix splits the second factor");
    for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t)
            for (Elem u = 0; u < n; ++u) {
                Sym X = Evaluator::leaf(0, s), Y = Evaluator::leaf(1, t), Z = Evaluator::leaf(2, u);
                std::string w = "s=" + L(s) + " t=" + L(t) + " u=" + L(u);
                {
                    std::vector<Sym> a{X, Y, Z}, b = a;
                    Cyclotomic x(1), y(1);
                    ev.braid(a, 0, 2, 1, x);
                    ev.split(a, 1, 1, x);
                    ev.braid(b, 1, 1, 1, y);
                    ev.braid(b, 0, 1, 1, y);
                    ev.mu(b, 0, y);
                    r2.expect(a == b && x == y, w + (a == b ? " (scalar)" : " (group labels)"));
                }
                {
                    std::vector<Sym> a{X, Y, Z}, b = a;
                    Cyclotomic x(1), y(1);
                    ev.braid(a, 0, 1, 2, x);
                    ev.split(a, 0, 1, x);
                    ev.braid(b, 0, 1, 1, y);
                    ev.braid(b, 1, 1, 1, y);
                    ev.mu(b, 2, y);
                    r3.expect(a == b && x == y, w + (a == b ? " (scalar)" : " (group labels)"));
                }
            }
    r2.into(rep);
    r3.into(rep);
}

}  // namespace

Report verify_braiding(const CrossedAction& ca, const BraidingData& bd, const ObjectSample& sample,
                       const BraidingOptions& opt) {
    const auto& obj = sample.objects;
    const int m = static_cast<int>(obj.size());
    std::map<std::pair<int, int>, EquivariantObject> tensor;
    std::map<std::pair<int, int>, Matrix> sigma;
    auto T = [&](int i, int j) -> const EquivariantObject& {
        auto it = tensor.find({i, j});
        if (it == tensor.end()) it = tensor.emplace(std::make_pair(i, j), equivariant_tensor(ca, obj[i], obj[j])).first;
        return it->second;
    };
    auto S = [&](int i, int j) -> const Matrix& {
        auto it = sigma.find({i, j});
        if (it == sigma.end()) it = sigma.emplace(std::make_pair(i, j), braiding_morphism(ca, bd, obj[i], obj[j]).m).first;
        return it->second;
    };
    auto pair_name = [](int i, int j) { return "objects " + std::to_string(i) + "," + std::to_string(j); };

    Report rep;
    CheckBuilder eq("braiding equivariance"), inv("braiding invertible");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            eq.expect(is_equivariant_morphism(T(i, j), T(j, i), S(i, j)), pair_name(i, j));
            inv.expect(S(i, j).inverse().has_value(), pair_name(i, j));
        }
    eq.into(rep);
    inv.into(rep);

    CheckBuilder h1("hexagon X(YZ)"), h2("hexagon (XY)Z");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const int dx = obj[i].dim(), dy = obj[j].dim(), dz = obj[k].dim();
                if (static_cast<long>(dx) * dy * dz > opt.hexagon_dim_limit) continue;
                std::string w = "objects " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
                Matrix lhs1 = braiding_morphism(ca, bd, obj[i], T(j, k)).m;
                Matrix rhs1 = kron(Matrix::identity(dy), S(i, k)) * kron(S(i, j), Matrix::identity(dz));
                h1.expect(lhs1 == rhs1, w);
                Matrix lhs2 = braiding_morphism(ca, bd, T(i, j), obj[k]).m;
                Matrix rhs2 = kron(S(i, k), Matrix::identity(dy)) * kron(Matrix::identity(dx), S(j, k));
                h2.expect(lhs2 == rhs2, w);
            }
    h1.into(rep);
    h2.into(rep);

    CheckBuilder nat("naturality");
    for (std::size_t q = 0; q < sample.morphisms.size(); ++q) {
        const SampleMorphism& f = sample.morphisms[q];
        const std::string w = "morphism " + std::to_string(q);
        if (!is_equivariant_morphism(obj[f.source], obj[f.target], f.f)) {
            nat.fail(w + " is not a morphism of equivariant objects");
            continue;
        }
        for (int y = 0; y < m; ++y) {
            Matrix Iy = Matrix::identity(obj[y].dim());
            nat.expect(S(f.target, y) * kron(f.f, Iy) == kron(Iy, f.f) * S(f.source, y), w + " against object " + std::to_string(y) + " on the right");
            nat.expect(S(y, f.target) * kron(Iy, f.f) == kron(f.f, Iy) * S(y, f.source), w + " against object " + std::to_string(y) + " on the left");
        }
    }
    nat.into(rep);

    evaluate_rmatrix_conditions(ca, bd, rep);
    return rep;
}

void require_braiding(const CrossedAction& ca, const BraidingData& bd, const ObjectSample& sample) {
    Report r = verify_braiding(ca, bd, sample);
    for (const auto& c : r.checks) {
        if (c.pass) continue;
        std::string msg = c.name + ": " + c.witness;
        if (c.name == "braiding equivariance" || c.name == "braiding invertible") throw NotAMorphism(msg);
        if (c.name == "naturality") throw NaturalityViolation(msg);
        throw HexagonViolation(msg);
    }
}

Matrix braid_on_regular(const CrossedAction& ca, const HopfAlgebra& H, const BraidingData& bd) {
    EquivariantObject KR = K_functor(ca, H, module_regular(H));
    return braiding_morphism(ca, bd, KR, KR).m;
}

nlohmann::json braiding_data_to_json(const BraidingData& bd) {
    nlohmann::json j = braiding_pair_to_json(bd.bp);
    nlohmann::json c = nlohmann::json::object();
    const int n = bd.bp.mp.nGamma();
    for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t)
            if (!bd(s, t).is_one()) c[std::to_string(s) + "," + std::to_string(t)] = to_json(bd(s, t));
    j["c"] = c;
    return j;
}

BraidingData braiding_data_from_json(const CrossedAction& ca, const nlohmann::json& j) {
    BraidingData bd{braiding_pair_from_json(ca.mp(), j), {}};
    const int n = ca.nGamma();
    bd.c.assign(static_cast<std::size_t>(n) * n, Cyclotomic(1));
    if (!j.contains("c")) return bd;
    if (!j.at("c").is_object()) throw ParseError("c must be an object keyed \"s,t\"");
    for (const auto& [key, v] : j.at("c").items()) {
        std::istringstream in(key);
        int s = -1, t = -1;
        char comma = 0;
        if (!(in >> s >> comma >> t) || comma != ',' || !in.eof() || s < 0 || s >= n || t < 0 || t >= n)
            throw ParseError("bad braiding key " + key);
        bd.c[static_cast<std::size_t>(s) * n + t] = cyclotomic_from_json(v);
    }
    return bd;
}

}  // namespace crossact
