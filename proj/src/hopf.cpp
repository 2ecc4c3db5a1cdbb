#include "crossact/hopf.hpp"

#include "crossact/errors.hpp"

#include <map>

namespace crossact {

namespace {

// Elements of H^{(x)n} as sparse maps from index tuples to coefficients.
using Key = std::vector<int>;
using Tensor = std::map<Key, Cyclotomic>;

void accumulate(Tensor& t, const Key& k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

Tensor basis_tensor(Key k) { return Tensor{{std::move(k), Cyclotomic(1)}}; }

Tensor vector_tensor(const std::vector<Cyclotomic>& v) {
    Tensor t;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) accumulate(t, {i}, v[i]);
    return t;
}

Tensor scaled(const Tensor& t, const Cyclotomic& c) {
    Tensor r;
    for (const auto& [k, v] : t) accumulate(r, k, v * c);
    return r;
}

Tensor add(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    for (const auto& [k, v] : b) accumulate(r, k, v);
    return r;
}

// Componentwise product in H^{(x)n}.
Tensor multiply(const HopfAlgebra& H, const Tensor& a, const Tensor& b) {
    Tensor r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const std::size_t n = ka.size();
            std::vector<Term> partial{{0, ca * cb}};
            std::vector<Key> keys{Key{}};
            for (std::size_t p = 0; p < n; ++p) {
                std::vector<Key> nk;
                std::vector<Term> np;
                for (std::size_t q = 0; q < keys.size(); ++q)
                    for (const auto& [k, c] : H.product(ka[p], kb[p])) {
                        Key key = keys[q];
                        key.push_back(k);
                        nk.push_back(std::move(key));
                        np.push_back({0, partial[q].c * c});
                    }
                keys = std::move(nk);
                partial = std::move(np);
            }
            for (std::size_t q = 0; q < keys.size(); ++q) accumulate(r, keys[q], partial[q].c);
        }
    return r;
}

Tensor comult_at(const HopfAlgebra& H, const Tensor& t, std::size_t pos) {
    Tensor r;
    for (const auto& [k, c] : t)
        for (const auto& ct : H.comult[k[pos]]) {
            Key key(k.begin(), k.begin() + pos);
            key.push_back(ct.j);
            key.push_back(ct.k);
            key.insert(key.end(), k.begin() + pos + 1, k.end());
            accumulate(r, key, c * ct.c);
        }
    return r;
}

Tensor counit_at(const std::vector<Cyclotomic>& counit, const Tensor& t, std::size_t pos) {
    Tensor r;
    for (const auto& [k, c] : t) {
        Key key = k;
        key.erase(key.begin() + pos);
        accumulate(r, key, c * counit[k[pos]]);
    }
    return r;
}

// Applies a linear map, given by its transpose (row j = image of b_j), at one position.
Tensor map_at(const Matrix& ft, const Tensor& t, std::size_t pos) {
    Tensor r;
    for (const auto& [k, c] : t)
        for (const auto& [i, v] : ft.row(k[pos])) {
            Key key = k;
            key[pos] = i;
            accumulate(r, key, c * v);
        }
    return r;
}

// Inserts the unit element at position pos.
Tensor insert_unit(const HopfAlgebra& H, const Tensor& t, std::size_t pos) {
    Tensor r;
    for (const auto& [k, c] : t)
        for (int u = 0; u < H.dim; ++u) {
            if (H.unit[u].is_zero()) continue;
            Key key = k;
            key.insert(key.begin() + pos, u);
            accumulate(r, key, c * H.unit[u]);
        }
    return r;
}

Tensor flip2(const Tensor& t) {
    Tensor r;
    for (const auto& [k, c] : t) accumulate(r, {k[1], k[0]}, c);
    return r;
}

Tensor unit_power(const HopfAlgebra& H, int n) {
    Tensor t{{Key{}, Cyclotomic(1)}};
    for (int p = 0; p < n; ++p) t = insert_unit(H, t, p);
    return t;
}

std::string names(const HopfAlgebra& H, const Key& k) {
    std::string s = "(";
    for (std::size_t p = 0; p < k.size(); ++p) s += (p ? ", " : "") + H.basis[k[p]];
    return s + ")";
}

Matrix column_map(const Matrix& S) { return S.transpose(); }

}  // namespace

HopfAlgebra build_bicrossed(const MatchedPair& mp, const CocyclePair& cp) {
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    HopfAlgebra H;
    H.nG = mp.nG();
    H.nGamma = mp.nGamma();
    H.dim = H.nG * H.nGamma;
    const int d = H.dim;
    H.basis.assign(d, "");
    for (Elem s = 0; s < H.nGamma; ++s)
        for (Elem g = 0; g < H.nG; ++g) H.basis[H.index(s, g)] = "e_" + Gm.label(s) + "#" + G.label(g);

    H.mult.assign(static_cast<std::size_t>(d) * d, {});
    for (Elem s = 0; s < H.nGamma; ++s)
        for (Elem g = 0; g < H.nG; ++g)
            for (Elem h = 0; h < H.nG; ++h) {
                Elem t = mp.lact(s, g);
                H.mult[static_cast<std::size_t>(H.index(s, g)) * d + H.index(t, h)].push_back(
                    {H.index(s, G.mul(g, h)), cp.sigma(s, g, h)});
            }

    H.comult.assign(d, {});
    for (Elem t = 0; t < H.nGamma; ++t)
        for (Elem u = 0; u < H.nGamma; ++u) {
            Elem s = Gm.mul(t, u);
            for (Elem g = 0; g < H.nG; ++g)
                H.comult[H.index(s, g)].push_back({H.index(t, mp.ract(u, g)), H.index(u, g), cp.tau(g, t, u)});
        }

    H.unit.assign(d, Cyclotomic(0));
    H.counit.assign(d, Cyclotomic(0));
    for (Elem s = 0; s < H.nGamma; ++s) H.unit[H.index(s, G.identity())] = Cyclotomic(1);
    for (Elem g = 0; g < H.nG; ++g) H.counit[H.index(Gm.identity(), g)] = Cyclotomic(1);
    return H;
}

Report verify_bialgebra(const HopfAlgebra& H) {
    Report rep;
    const int d = H.dim;
    Tensor one = vector_tensor(H.unit);

    CheckBuilder assoc("associativity");
    for (int i = 0; i < d && assoc.ok(); ++i)
        for (int j = 0; j < d && assoc.ok(); ++j) {
            Tensor ij = multiply(H, basis_tensor({i}), basis_tensor({j}));
            for (int k = 0; k < d; ++k) {
                Tensor jk = multiply(H, basis_tensor({j}), basis_tensor({k}));
                if (multiply(H, ij, basis_tensor({k})) != multiply(H, basis_tensor({i}), jk)) {
                    assoc.fail(names(H, {i, j, k}));
                    break;
                }
            }
        }
    assoc.into(rep);

    CheckBuilder unit("unit");
    for (int i = 0; i < d && unit.ok(); ++i) {
        Tensor b = basis_tensor({i});
        unit.expect(multiply(H, one, b) == b && multiply(H, b, one) == b, names(H, {i}));
    }
    unit.into(rep);

    CheckBuilder coassoc("coassociativity");
    for (int i = 0; i < d && coassoc.ok(); ++i) {
        Tensor D = comult_at(H, basis_tensor({i}), 0);
        coassoc.expect(comult_at(H, D, 0) == comult_at(H, D, 1), names(H, {i}));
    }
    coassoc.into(rep);

    CheckBuilder counit("counit");
    for (int i = 0; i < d && counit.ok(); ++i) {
        Tensor b = basis_tensor({i});
        Tensor D = comult_at(H, b, 0);
        counit.expect(counit_at(H.counit, D, 0) == b && counit_at(H.counit, D, 1) == b, names(H, {i}));
    }
    counit.into(rep);

    CheckBuilder dmult("Δ multiplicative");
    std::vector<Tensor> deltas(d);
    for (int i = 0; i < d; ++i) deltas[i] = comult_at(H, basis_tensor({i}), 0);
    for (int i = 0; i < d && dmult.ok(); ++i)
        for (int j = 0; j < d; ++j) {
            Tensor lhs = comult_at(H, multiply(H, basis_tensor({i}), basis_tensor({j})), 0);
            if (lhs != multiply(H, deltas[i], deltas[j])) {
                dmult.fail(names(H, {i, j}));
                break;
            }
        }
    dmult.into(rep);

    rep.add("Δ unital", comult_at(H, one, 0) == unit_power(H, 2), "Δ(1)");

    CheckBuilder emult("ε multiplicative");
    for (int i = 0; i < d && emult.ok(); ++i)
        for (int j = 0; j < d; ++j) {
            Tensor p = counit_at(H.counit, multiply(H, basis_tensor({i}), basis_tensor({j})), 0);
            Cyclotomic v = p.empty() ? Cyclotomic(0) : p.begin()->second;
            if (v != H.counit[i] * H.counit[j]) {
                emult.fail(names(H, {i, j}));
                break;
            }
        }
    emult.into(rep);

    Tensor e1 = counit_at(H.counit, one, 0);
    rep.add("ε unital", !e1.empty() && e1.begin()->second.is_one(), "ε(1)");
    return rep;
}

Matrix solve_antipode(const HopfAlgebra& H) {
    const int d = H.dim;
    LinearSystem sys;
    sys.nvars = d * d;
    auto var = [d](int j, int b) { return j * d + b; };
    for (int x = 0; x < d; ++x) {
        std::vector<std::map<int, Cyclotomic>> left(d), right(d);
        for (const auto& ct : H.comult[x])
            for (int j = 0; j < d; ++j) {
                for (const auto& [k, m] : H.product(j, ct.k)) left[k][var(j, ct.j)] += ct.c * m;
                for (const auto& [k, m] : H.product(ct.j, j)) right[k][var(j, ct.k)] += ct.c * m;
            }
        for (int k = 0; k < d; ++k) {
            Cyclotomic b = H.counit[x] * H.unit[k];
            sys.add_row(std::move(left[k]), b);
            sys.add_row(std::move(right[k]), b);
        }
    }
    SolveResult res = solve(sys);
    if (res.status == SolveResult::inconsistent) throw NoAntipode("convolution system is inconsistent");
    if (res.status == SolveResult::underdetermined) throw NotUnique("convolution system is underdetermined");
    Matrix S(d, d);
    for (int j = 0; j < d; ++j)
        for (int b = 0; b < d; ++b) S.set(j, b, res.solution[var(j, b)]);
    Report check = verify_antipode(H, S);
    if (!check.passed("antipode left") || !check.passed("antipode right"))
        throw InternalError("solved antipode fails the convolution identities");
    return S;
}

HopfAlgebra with_antipode(HopfAlgebra H) {
    if (!H.has_antipode) {
        H.antipode = solve_antipode(H);
        H.has_antipode = true;
    }
    return H;
}

Report verify_antipode(const HopfAlgebra& H, const Matrix& S) {
    Report rep;
    const int d = H.dim;
    if (S.rows() != d || S.cols() != d) {
        rep.add("antipode shape", false, std::to_string(S.rows()) + "x" + std::to_string(S.cols()));
        return rep;
    }
    Matrix St = column_map(S);
    CheckBuilder left("antipode left"), right("antipode right");
    for (int x = 0; x < d; ++x) {
        Tensor D = comult_at(H, basis_tensor({x}), 0);
        Tensor expect = scaled(vector_tensor(H.unit), H.counit[x]);
        Tensor l, r;
        for (const auto& [k, c] : D) {
            Tensor a = map_at(St, basis_tensor({k[0]}), 0);
            Tensor b = map_at(St, basis_tensor({k[1]}), 0);
            l = add(l, scaled(multiply(H, a, basis_tensor({k[1]})), c));
            r = add(r, scaled(multiply(H, basis_tensor({k[0]}), b), c));
        }
        left.expect(l == expect, names(H, {x}));
        right.expect(r == expect, names(H, {x}));
    }
    left.into(rep);
    right.into(rep);

    CheckBuilder anti("antipode anti-multiplicative");
    std::vector<Tensor> img(d);
    for (int x = 0; x < d; ++x) img[x] = map_at(St, basis_tensor({x}), 0);
    for (int x = 0; x < d && anti.ok(); ++x)
        for (int y = 0; y < d; ++y) {
            Tensor lhs = map_at(St, multiply(H, basis_tensor({x}), basis_tensor({y})), 0);
            if (lhs != multiply(H, img[y], img[x])) {
                anti.fail(names(H, {x, y}));
                break;
            }
        }
    anti.into(rep);
    rep.add("antipode bijective", S.inverse().has_value(), "S is singular");
    return rep;
}

Report verify_hopf(const HopfAlgebra& H) {
    Report rep = verify_bialgebra(H);
    if (H.has_antipode) {
        rep.append(verify_antipode(H, H.antipode));
        return rep;
    }
    try {
        rep.append(verify_antipode(H, solve_antipode(H)));
    } catch (const Error& e) {
        rep.add("antipode exists", false, e.what());
    }
    return rep;
}

HopfAlgebra function_algebra(const FiniteGroup& Gamma) {
    MatchedPair mp = trivial_pair(FiniteGroup(), Gamma);
    return build_bicrossed(mp, trivial_cocycles(mp));
}

HopfAlgebra group_algebra(const FiniteGroup& G) {
    MatchedPair mp = trivial_pair(G, FiniteGroup());
    return build_bicrossed(mp, trivial_cocycles(mp));
}

SeqMaps seq_maps(const HopfAlgebra& H, const MatchedPair& mp) {
    SeqMaps m{Matrix(H.dim, mp.nGamma()), Matrix(mp.nG(), H.dim)};
    for (Elem s = 0; s < mp.nGamma(); ++s) m.i.set(H.index(s, mp.G().identity()), s, Cyclotomic(1));
    for (Elem g = 0; g < mp.nG(); ++g) m.p.set(g, H.index(mp.Gamma().identity(), g), Cyclotomic(1));
    return m;
}

Report verify_hopf_map(const HopfAlgebra& A, const HopfAlgebra& B, const Matrix& f) {
    Report rep;
    Matrix ft = f.transpose();
    CheckBuilder alg("algebra map");
    alg.expect(map_at(ft, vector_tensor(A.unit), 0) == vector_tensor(B.unit), "f(1)");
    for (int i = 0; i < A.dim && alg.ok(); ++i)
        for (int j = 0; j < A.dim; ++j) {
            Tensor lhs = map_at(ft, multiply(A, basis_tensor({i}), basis_tensor({j})), 0);
            Tensor rhs = multiply(B, map_at(ft, basis_tensor({i}), 0), map_at(ft, basis_tensor({j}), 0));
            if (lhs != rhs) {
                alg.fail(names(A, {i, j}));
                break;
            }
        }
    alg.into(rep);
    CheckBuilder coalg("coalgebra map");
    for (int i = 0; i < A.dim && coalg.ok(); ++i) {
        Tensor fi = map_at(ft, basis_tensor({i}), 0);
        Tensor lhs = comult_at(B, fi, 0);
        Tensor rhs = map_at(ft, map_at(ft, comult_at(A, basis_tensor({i}), 0), 0), 1);
        Tensor e1 = counit_at(B.counit, fi, 0);
        Cyclotomic eb = e1.empty() ? Cyclotomic(0) : e1.begin()->second;
        coalg.expect(lhs == rhs && eb == A.counit[i], names(A, {i}));
    }
    coalg.into(rep);
    return rep;
}

Report verify_seq_maps(const HopfAlgebra& H, const MatchedPair& mp) {
    SeqMaps m = seq_maps(H, mp);
    HopfAlgebra kGamma = function_algebra(mp.Gamma());
    HopfAlgebra kG = group_algebra(mp.G());
    Report rep;
    rep.append(verify_hopf_map(kGamma, H, m.i), "i ");
    rep.append(verify_hopf_map(H, kG, m.p), "p ");
    Matrix expect(mp.nG(), mp.nGamma());
    expect.set(mp.G().identity(), mp.Gamma().identity(), Cyclotomic(1));
    rep.add("p∘i = ε·unit", m.p * m.i == expect);
    return rep;
}

HModule module_validate(const HopfAlgebra& H, std::vector<Matrix> action) {
    if (static_cast<int>(action.size()) != H.dim)
        throw NotAModule("expected " + std::to_string(H.dim) + " action matrices");
    const int m = action.empty() ? 0 : action[0].rows();
    for (const auto& a : action)
        if (a.rows() != m || a.cols() != m) throw NotAModule("action matrices are not all " + std::to_string(m) + "x" + std::to_string(m));
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Matrix rhs(m, m);
            for (const auto& [k, c] : H.product(i, j)) rhs = rhs + action[k].scaled(c);
            if (action[i] * action[j] != rhs) throw NotAModule("mult at " + names(H, {i, j}));
        }
    Matrix u(m, m);
    for (int k = 0; k < H.dim; ++k) u = u + action[k].scaled(H.unit[k]);
    if (u != Matrix::identity(m)) throw NotAModule("unit does not act as identity");
    return HModule{m, std::move(action)};
}

HModule module_regular(const HopfAlgebra& H) {
    std::vector<Matrix> action(H.dim, Matrix(H.dim, H.dim));
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j)
            for (const auto& [k, c] : H.product(i, j)) action[i].add(k, j, c);
    return HModule{H.dim, std::move(action)};
}

HModule module_trivial(const HopfAlgebra& H) {
    std::vector<Matrix> action(H.dim, Matrix(1, 1));
    for (int i = 0; i < H.dim; ++i) action[i].set(0, 0, H.counit[i]);
    return HModule{1, std::move(action)};
}

HModule module_tensor(const HopfAlgebra& H, const HModule& M, const HModule& N) {
    const int m = M.dim * N.dim;
    std::vector<Matrix> action(H.dim, Matrix(m, m));
    for (int x = 0; x < H.dim; ++x)
        for (const auto& ct : H.comult[x]) action[x] = action[x] + kron(M.action[ct.j], N.action[ct.k]).scaled(ct.c);
    return HModule{m, std::move(action)};
}

Matrix module_act(const HModule& M, const std::vector<Cyclotomic>& x) {
    Matrix r(M.dim, M.dim);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) r = r + M.action[k].scaled(x[k]);
    return r;
}

RMatrix rmatrix_from_braiding(const HopfAlgebra& H, const Matrix& braid) {
    const int d = H.dim;
    if (braid.rows() != d * d || braid.cols() != d * d) throw ShapeMismatch("braiding is not dim^2 square");
    std::vector<Cyclotomic> v(static_cast<std::size_t>(d) * d, Cyclotomic(0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) v[a * d + b] = H.unit[a] * H.unit[b];
    std::vector<Cyclotomic> w = braid.apply(v);
    RMatrix R{Matrix(d, d)};
    for (int y = 0; y < d; ++y)
        for (int x = 0; x < d; ++x) R.R.set(x, y, w[y * d + x]);
    return R;
}

Report verify_quasitriangular(const HopfAlgebra& H, const RMatrix& Rm) {
    Report rep;
    const int d = H.dim;
    Tensor R;
    for (int i = 0; i < d; ++i)
        for (const auto& [j, c] : Rm.R.row(i)) accumulate(R, {i, j}, c);

    Matrix S = H.has_antipode ? H.antipode : solve_antipode(H);
    Tensor Rinv = map_at(S.transpose(), R, 0);
    Tensor one2 = unit_power(H, 2);
    rep.add("R invertible", multiply(H, R, Rinv) == one2 && multiply(H, Rinv, R) == one2, "(S⊗id)R is not a two-sided inverse");

    CheckBuilder comm("Δop R = R Δ");
    for (int x = 0; x < d && comm.ok(); ++x) {
        Tensor D = comult_at(H, basis_tensor({x}), 0);
        comm.expect(multiply(H, flip2(D), R) == multiply(H, R, D), names(H, {x}));
    }
    comm.into(rep);

    Tensor R13 = insert_unit(H, R, 1);
    Tensor R23 = insert_unit(H, R, 0);
    Tensor R12 = insert_unit(H, R, 2);
    rep.add("(Δ⊗id)R = R13 R23", comult_at(H, R, 0) == multiply(H, R13, R23), "R13 R23");
    rep.add("(id⊗Δ)R = R13 R12", comult_at(H, R, 1) == multiply(H, R13, R12), "R13 R12");
    return rep;
}

nlohmann::json hopf_to_json(const HopfAlgebra& H) {
    using nlohmann::json;
    json j;
    j["dim"] = H.dim;
    j["nG"] = H.nG;
    j["nGamma"] = H.nGamma;
    j["basis"] = H.basis;
    json mult = json::array();
    for (int a = 0; a < H.dim; ++a)
        for (int b = 0; b < H.dim; ++b)
            for (const auto& [k, c] : H.product(a, b)) mult.push_back(json::array({a, b, k, to_json(c)}));
    j["mult"] = mult;
    json comult = json::array();
    for (int a = 0; a < H.dim; ++a)
        for (const auto& ct : H.comult[a]) comult.push_back(json::array({a, ct.j, ct.k, to_json(ct.c)}));
    j["comult"] = comult;
    json unit = json::array(), counit = json::array();
    for (const auto& c : H.unit) unit.push_back(to_json(c));
    for (const auto& c : H.counit) counit.push_back(to_json(c));
    j["unit"] = unit;
    j["counit"] = counit;
    if (H.has_antipode) j["antipode"] = matrix_to_json(H.antipode);
    return j;
}

HopfAlgebra hopf_from_json(const nlohmann::json& j) {
    try {
        HopfAlgebra H;
        H.dim = j.at("dim").get<int>();
        const int d = H.dim;
        if (d < 1) throw ParseError("dim must be positive");
        H.nG = j.value("nG", d);
        H.nGamma = j.value("nGamma", 1);
        if (j.contains("basis")) {
            H.basis = j.at("basis").get<std::vector<std::string>>();
        } else {
            H.basis.clear();
            for (int i = 0; i < d; ++i) H.basis.push_back("b" + std::to_string(i));
        }
        if (static_cast<int>(H.basis.size()) != d) throw ParseError("basis has wrong length");
        auto idx = [d](const nlohmann::json& v) {
            int i = v.get<int>();
            if (i < 0 || i >= d) throw ParseError("basis index " + std::to_string(i) + " out of range");
            return i;
        };
        H.mult.assign(static_cast<std::size_t>(d) * d, {});
        for (const auto& e : j.at("mult")) {
            if (!e.is_array() || e.size() != 4) throw ParseError("mult entries are [i, j, k, c]");
            H.mult[static_cast<std::size_t>(idx(e[0])) * d + idx(e[1])].push_back({idx(e[2]), cyclotomic_from_json(e[3])});
        }
        H.comult.assign(d, {});
        for (const auto& e : j.at("comult")) {
            if (!e.is_array() || e.size() != 4) throw ParseError("comult entries are [i, j, k, c]");
            H.comult[idx(e[0])].push_back({idx(e[1]), idx(e[2]), cyclotomic_from_json(e[3])});
        }
        H.unit.clear();
        H.counit.clear();
        for (const auto& c : j.at("unit")) H.unit.push_back(cyclotomic_from_json(c));
        for (const auto& c : j.at("counit")) H.counit.push_back(cyclotomic_from_json(c));
        if (static_cast<int>(H.unit.size()) != d || static_cast<int>(H.counit.size()) != d)
            throw ParseError("unit/counit have wrong length");
        if (j.contains("antipode")) {
            H.antipode = matrix_from_json(j.at("antipode"), d, d);
            H.has_antipode = true;
        }
        return H;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("hopf json: ") + e.what());
    }
}

}  // namespace crossact
