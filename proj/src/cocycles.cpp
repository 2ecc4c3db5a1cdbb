#include "crossact/cocycles.hpp"

#include "crossact/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace crossact {

namespace {

std::string key3(Elem a, Elem b, Elem c) {
    return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

std::string tuple_str(std::initializer_list<Elem> xs) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (Elem x : xs) {
        if (!first) os << ",";
        first = false;
        os << x;
    }
    os << ")";
    return os.str();
}

template <class F>
void for_grid(int dims, const std::vector<int>& sizes, long seed, F&& f) {
    std::vector<std::vector<int>> points;
    std::vector<int> idx(dims, 0);
    long total = 1;
    for (int d : sizes) total *= d;
    points.reserve(total);
    for (long c = 0; c < total; ++c) {
        long r = c;
        for (int k = dims - 1; k >= 0; --k) {
            idx[k] = static_cast<int>(r % sizes[k]);
            r /= sizes[k];
        }
        points.push_back(idx);
    }
    if (seed >= 0) {
        std::mt19937_64 rng(static_cast<unsigned long>(seed));
        std::shuffle(points.begin(), points.end(), rng);
    }
    for (const auto& p : points) f(p);
}

}  // namespace

std::size_t sigma_index(const MatchedPair& mp, Elem s, Elem g, Elem h) {
    return (static_cast<std::size_t>(s) * mp.nG() + g) * mp.nG() + h;
}

std::size_t tau_index(const MatchedPair& mp, Elem g, Elem s, Elem t) {
    return (static_cast<std::size_t>(g) * mp.nGamma() + s) * mp.nGamma() + t;
}

CocyclePair CocyclePair::unchecked(MatchedPair mp, int N, std::vector<Cyclotomic> sigma, std::vector<Cyclotomic> tau) {
    CocyclePair cp;
    cp.mp_ = std::move(mp);
    cp.N_ = N;
    cp.sigma_ = std::move(sigma);
    cp.tau_ = std::move(tau);
    return cp;
}

bool CocyclePair::is_trivial() const {
    for (const auto& x : sigma_)
        if (!x.is_one()) return false;
    for (const auto& x : tau_)
        if (!x.is_one()) return false;
    return true;
}

Report cocycle_conditions(const CocyclePair& cp, long seed) {
    const MatchedPair& mp = cp.mp();
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    const int ng = mp.nG(), ns = mp.nGamma();
    const Elem e = G.identity(), eg = Gm.identity();
    auto S = [&](Elem s, Elem g, Elem h) -> const Cyclotomic& { return cp.sigma(s, g, h); };
    auto T = [&](Elem g, Elem s, Elem t) -> const Cyclotomic& { return cp.tau(g, s, t); };
    Report r;

    CheckBuilder nonzero("nonzero values");
    for (Elem s = 0; s < ns; ++s)
        for (Elem g = 0; g < ng; ++g)
            for (Elem h = 0; h < ng; ++h)
                nonzero.expect(!S(s, g, h).is_zero(), "sigma" + tuple_str({s, g, h}));
    for (Elem g = 0; g < ng; ++g)
        for (Elem s = 0; s < ns; ++s)
            for (Elem t = 0; t < ns; ++t)
                nonzero.expect(!T(g, s, t).is_zero(), "tau" + tuple_str({g, s, t}));
    nonzero.into(r);

    CheckBuilder sc("sigma-cocycle");
    for_grid(4, {ns, ng, ng, ng}, seed, [&](const std::vector<int>& p) {
        Elem s = p[0], g = p[1], h = p[2], l = p[3];
        if (!sc.ok()) return;
        sc.expect(S(mp.lact(s, g), h, l) * S(s, g, G.mul(h, l)) == S(s, g, h) * S(s, G.mul(g, h), l),
                  "(s,g,h,l)=" + tuple_str({s, g, h, l}));
    });
    sc.into(r);

    CheckBuilder sn("sigma-normalized");
    for (Elem s = 0; s < ns; ++s)
        for (Elem g = 0; g < ng; ++g)
            sn.expect(S(s, e, g).is_one() && S(s, g, e).is_one(), "(s,g)=" + tuple_str({s, g}));
    sn.into(r);

    CheckBuilder tc("tau-cocycle");
    for_grid(4, {ng, ns, ns, ns}, seed, [&](const std::vector<int>& p) {
        Elem g = p[0], s = p[1], t = p[2], u = p[3];
        if (!tc.ok()) return;
        tc.expect(T(g, Gm.mul(s, t), u) * T(mp.ract(u, g), s, t) == T(g, t, u) * T(g, s, Gm.mul(t, u)),
                  "(g,s,t,u)=" + tuple_str({g, s, t, u}));
    });
    tc.into(r);

    CheckBuilder tn("tau-normalized");
    for (Elem g = 0; g < ng; ++g)
        for (Elem s = 0; s < ns; ++s)
            tn.expect(T(g, eg, s).is_one() && T(g, s, eg).is_one(), "(g,s)=" + tuple_str({g, s}));
    tn.into(r);

    CheckBuilder cc("compatibility");
    for_grid(4, {ns, ns, ng, ng}, seed, [&](const std::vector<int>& p) {
        Elem s = p[0], t = p[1], g = p[2], h = p[3];
        if (!cc.ok()) return;
        Elem tg = mp.ract(t, g), tlg = mp.lact(t, g);
        Cyclotomic lhs = S(Gm.mul(s, t), g, h) * T(G.mul(g, h), s, t);
        Cyclotomic rhs = S(s, tg, mp.ract(tlg, h)) * S(t, g, h) * T(g, s, t) * T(h, mp.lact(s, tg), tlg);
        cc.expect(lhs == rhs, "(s,t,g,h)=" + tuple_str({s, t, g, h}));
    });
    cc.into(r);

    CheckBuilder sneu("sigma-neutral");
    for (Elem g = 0; g < ng; ++g)
        for (Elem h = 0; h < ng; ++h) sneu.expect(S(eg, g, h).is_one(), "(g,h)=" + tuple_str({g, h}));
    sneu.into(r);

    CheckBuilder tneu("tau-neutral");
    for (Elem s = 0; s < ns; ++s)
        for (Elem t = 0; t < ns; ++t) tneu.expect(T(e, s, t).is_one(), "(s,t)=" + tuple_str({s, t}));
    tneu.into(r);
    return r;
}

CocyclePair cocycle_pair_validate(const MatchedPair& mp, const std::vector<Cyclotomic>& sigma,
                                  const std::vector<Cyclotomic>& tau, int N) {
    const std::size_t ns = mp.nGamma(), ng = mp.nG();
    if (sigma.size() != ns * ng * ng || tau.size() != ng * ns * ns)
        throw CocycleViolation("shape: tables do not match |Gamma||G|^2 and |G||Gamma|^2");
    std::vector<Cyclotomic> sg, tg;
    sg.reserve(sigma.size());
    tg.reserve(tau.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i].is_zero()) throw ZeroValue("sigma index " + std::to_string(i));
        sg.push_back(sigma[i].embed(N));
    }
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (tau[i].is_zero()) throw ZeroValue("tau index " + std::to_string(i));
        tg.push_back(tau[i].embed(N));
    }
    CocyclePair cp = CocyclePair::unchecked(mp, N, std::move(sg), std::move(tg));
    Report r = cocycle_conditions(cp);
    for (const auto& c : r.checks)
        if (!c.pass) throw CocycleViolation(c.name + " at " + c.witness);
    return cp;
}

CocyclePair trivial_cocycles(const MatchedPair& mp) {
    const std::size_t ns = mp.nGamma(), ng = mp.nG();
    return CocyclePair::unchecked(mp, 1, std::vector<Cyclotomic>(ns * ng * ng, Cyclotomic(1)),
                                  std::vector<Cyclotomic>(ng * ns * ns, Cyclotomic(1)));
}

namespace {

// Multiplicative conditions as linear equations on exponents mod N.
struct Constraint {
    std::vector<std::pair<int, int>> terms;  // (free position, coefficient)
};

struct CellSystem {
    std::vector<std::size_t> free_cells;  // global cell ids in search order
    std::vector<std::vector<Constraint>> closing;  // constraints closed at each position
};

CellSystem build_system(const MatchedPair& mp) {
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    const int ng = mp.nG(), ns = mp.nGamma();
    const Elem e = G.identity(), eg = Gm.identity();
    const std::size_t nsig = static_cast<std::size_t>(ns) * ng * ng;
    auto sid = [&](Elem s, Elem g, Elem h) { return sigma_index(mp, s, g, h); };
    auto tid = [&](Elem g, Elem s, Elem t) { return nsig + tau_index(mp, g, s, t); };
    auto fixed = [&](std::size_t cell) {
        if (cell < nsig) {
            Elem s = static_cast<Elem>(cell / (ng * ng)), g = static_cast<Elem>((cell / ng) % ng), h = static_cast<Elem>(cell % ng);
            return s == eg || g == e || h == e;
        }
        std::size_t c = cell - nsig;
        Elem g = static_cast<Elem>(c / (ns * ns)), s = static_cast<Elem>((c / ns) % ns), t = static_cast<Elem>(c % ns);
        return g == e || s == eg || t == eg;
    };

    std::set<std::vector<std::pair<std::size_t, int>>> eqs;
    auto add = [&](std::initializer_list<std::size_t> lhs, std::initializer_list<std::size_t> rhs) {
        std::map<std::size_t, int> coef;
        for (auto c : lhs)
            if (!fixed(c)) coef[c] += 1;
        for (auto c : rhs)
            if (!fixed(c)) coef[c] -= 1;
        std::vector<std::pair<std::size_t, int>> t;
        for (auto [c, k] : coef)
            if (k != 0) t.push_back({c, k});
        if (!t.empty()) eqs.insert(t);
    };
    for (Elem s = 0; s < ns; ++s)
        for (Elem g = 0; g < ng; ++g)
            for (Elem h = 0; h < ng; ++h)
                for (Elem l = 0; l < ng; ++l)
                    add({sid(mp.lact(s, g), h, l), sid(s, g, G.mul(h, l))}, {sid(s, g, h), sid(s, G.mul(g, h), l)});
    for (Elem g = 0; g < ng; ++g)
        for (Elem s = 0; s < ns; ++s)
            for (Elem t = 0; t < ns; ++t)
                for (Elem u = 0; u < ns; ++u)
                    add({tid(g, Gm.mul(s, t), u), tid(mp.ract(u, g), s, t)}, {tid(g, t, u), tid(g, s, Gm.mul(t, u))});
    for (Elem s = 0; s < ns; ++s)
        for (Elem t = 0; t < ns; ++t)
            for (Elem g = 0; g < ng; ++g)
                for (Elem h = 0; h < ng; ++h) {
                    Elem tg = mp.ract(t, g), tlg = mp.lact(t, g);
                    add({sid(Gm.mul(s, t), g, h), tid(G.mul(g, h), s, t)},
                        {sid(s, tg, mp.ract(tlg, h)), sid(t, g, h), tid(g, s, t), tid(h, mp.lact(s, tg), tlg)});
                }

    // Order cells so that short equations close early.
    std::vector<std::vector<std::pair<std::size_t, int>>> sorted(eqs.begin(), eqs.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::map<std::size_t, int> pos;
    CellSystem sys;
    auto place = [&](std::size_t c) {
        if (!pos.count(c)) {
            pos[c] = static_cast<int>(sys.free_cells.size());
            sys.free_cells.push_back(c);
        }
    };
    for (const auto& eq : sorted)
        for (auto [c, k] : eq) place(c);
    const std::size_t total = nsig + static_cast<std::size_t>(ng) * ns * ns;
    for (std::size_t c = 0; c < total; ++c)
        if (!fixed(c)) place(c);
    sys.closing.assign(sys.free_cells.size(), {});
    for (const auto& eq : sorted) {
        Constraint con;
        int last = -1;
        for (auto [c, k] : eq) {
            con.terms.push_back({pos[c], k});
            last = std::max(last, pos[c]);
        }
        sys.closing[last].push_back(con);
    }
    return sys;
}

struct Search {
    const CellSystem& sys;
    int N;
    const std::vector<int>& exps;
    long budget;
    std::atomic<long>& nodes;
    std::vector<std::vector<int>> found;  // exponent per free position

    void run(std::vector<int>& cur, std::size_t depth) {
        if (depth == sys.free_cells.size()) {
            found.push_back(cur);
            return;
        }
        for (int k : exps) {
            if (nodes.fetch_add(1) + 1 > budget)
                throw SearchBudgetExceeded("more than " + std::to_string(budget) + " search nodes");
            cur[depth] = k;
            bool ok = true;
            for (const auto& con : sys.closing[depth]) {
                long sum = 0;
                for (auto [p, c] : con.terms) sum += static_cast<long>(c) * cur[p];
                if (((sum % N) + N) % N != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) run(cur, depth + 1);
        }
    }
};

}  // namespace

std::vector<CocyclePair> enumerate_cocycle_pairs(const MatchedPair& mp, int N, const std::vector<int>& exponents,
                                                 long budget) {
    if (N < 1) throw ParseError("conductor must be positive");
    std::vector<int> exps;
    for (int k : exponents) exps.push_back(((k % N) + N) % N);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    const CellSystem sys = build_system(mp);
    std::atomic<long> nodes{0};
    std::vector<std::vector<int>> found;

    if (sys.free_cells.empty()) {
        found.push_back({});
    } else {
        // Split on the first cell; branches are concatenated in value order.
        std::vector<std::future<std::vector<std::vector<int>>>> parts;
        const bool threaded = std::thread::hardware_concurrency() > 1;
        for (int k : exps) {
            auto branch = [&, k]() {
                Search srch{sys, N, exps, budget, nodes, {}};
                std::vector<int> cur(sys.free_cells.size(), 0);
                if (nodes.fetch_add(1) + 1 > budget)
                    throw SearchBudgetExceeded("more than " + std::to_string(budget) + " search nodes");
                cur[0] = k;
                for (const auto& con : sys.closing[0]) {
                    long sum = 0;
                    for (auto [p, c] : con.terms) sum += static_cast<long>(c) * cur[p];
                    if (((sum % N) + N) % N != 0) return srch.found;
                }
                srch.run(cur, 1);
                return srch.found;
            };
            parts.push_back(std::async(threaded ? std::launch::async : std::launch::deferred, branch));
        }
        for (auto& f : parts) {
            auto part = f.get();
            found.insert(found.end(), part.begin(), part.end());
        }
    }

    const std::size_t ns = mp.nGamma(), ng = mp.nG();
    const std::size_t nsig = ns * ng * ng;
    std::vector<Cyclotomic> roots;
    for (int k = 0; k < N; ++k) roots.push_back(Cyclotomic::root_of_unity(N, k));
    std::vector<CocyclePair> out;
    for (const auto& sol : found) {
        std::vector<Cyclotomic> sigma(nsig, roots[0]), tau(ng * ns * ns, roots[0]);
        for (std::size_t p = 0; p < sol.size(); ++p) {
            std::size_t c = sys.free_cells[p];
            if (c < nsig) sigma[c] = roots[sol[p]];
            else tau[c - nsig] = roots[sol[p]];
        }
        out.push_back(cocycle_pair_validate(mp, sigma, tau, N));
    }
    return out;
}

CocyclePair cocycle_product(const CocyclePair& a, const CocyclePair& b) {
    if (!(a.mp() == b.mp())) throw CocycleViolation("product of cocycles over different matched pairs");
    int N = static_cast<int>(lcm_l(a.conductor(), b.conductor()));
    std::vector<Cyclotomic> sigma, tau;
    for (std::size_t i = 0; i < a.sigma_table().size(); ++i) sigma.push_back(a.sigma_table()[i] * b.sigma_table()[i]);
    for (std::size_t i = 0; i < a.tau_table().size(); ++i) tau.push_back(a.tau_table()[i] * b.tau_table()[i]);
    return cocycle_pair_validate(a.mp(), sigma, tau, N);
}

nlohmann::json cocycles_to_json(const CocyclePair& cp) {
    const MatchedPair& mp = cp.mp();
    nlohmann::json sigma = nlohmann::json::object(), tau = nlohmann::json::object();
    for (Elem s = 0; s < mp.nGamma(); ++s)
        for (Elem g = 0; g < mp.nG(); ++g)
            for (Elem h = 0; h < mp.nG(); ++h)
                if (!cp.sigma(s, g, h).is_one()) sigma[key3(s, g, h)] = to_json(cp.sigma(s, g, h));
    for (Elem g = 0; g < mp.nG(); ++g)
        for (Elem s = 0; s < mp.nGamma(); ++s)
            for (Elem t = 0; t < mp.nGamma(); ++t)
                if (!cp.tau(g, s, t).is_one()) tau[key3(g, s, t)] = to_json(cp.tau(g, s, t));
    return {{"N", cp.conductor()}, {"sigma", sigma}, {"tau", tau}};
}

namespace {

std::vector<int> parse_key(const std::string& k, int expect) {
    std::vector<int> out;
    std::stringstream ss(k);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw ParseError("bad index key '" + k + "'");
        }
    }
    if (static_cast<int>(out.size()) != expect) throw ParseError("bad index key '" + k + "'");
    return out;
}

}  // namespace

CocyclePair cocycles_from_json(const MatchedPair& mp, const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("cocycles must be an object");
    int N = j.value("N", 1);
    if (N < 1) throw ParseError("conductor must be positive");
    const std::size_t ns = mp.nGamma(), ng = mp.nG();
    std::vector<Cyclotomic> sigma(ns * ng * ng, Cyclotomic(1)), tau(ng * ns * ns, Cyclotomic(1));
    if (j.contains("sigma"))
        for (auto& [k, v] : j.at("sigma").items()) {
            auto i = parse_key(k, 3);
            if (i[0] < 0 || i[0] >= static_cast<int>(ns) || i[1] < 0 || i[1] >= static_cast<int>(ng) || i[2] < 0 || i[2] >= static_cast<int>(ng))
                throw ParseError("sigma index out of range: " + k);
            sigma[sigma_index(mp, i[0], i[1], i[2])] = cyclotomic_from_json(v);
        }
    if (j.contains("tau"))
        for (auto& [k, v] : j.at("tau").items()) {
            auto i = parse_key(k, 3);
            if (i[0] < 0 || i[0] >= static_cast<int>(ng) || i[1] < 0 || i[1] >= static_cast<int>(ns) || i[2] < 0 || i[2] >= static_cast<int>(ns))
                throw ParseError("tau index out of range: " + k);
            tau[tau_index(mp, i[0], i[1], i[2])] = cyclotomic_from_json(v);
        }
    for (auto& x : sigma)
        if (N % x.conductor() != 0) throw ParseError("value conductor does not divide N");
    for (auto& x : tau)
        if (N % x.conductor() != 0) throw ParseError("value conductor does not divide N");
    return cocycle_pair_validate(mp, sigma, tau, N);
}

}  // namespace crossact
