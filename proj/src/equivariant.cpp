#include "crossact/equivariant.hpp"

#include "crossact/errors.hpp"

#include <algorithm>
#include <numeric>

namespace crossact {

std::vector<int> GradedSpace::dims(int nGamma) const {
    std::vector<int> d(nGamma, 0);
    for (Elem s : degrees) ++d[s];
    return d;
}

GradedSpace GradedSpace::from_dims(const std::vector<int>& dims) {
    GradedSpace X;
    for (Elem s = 0; s < static_cast<Elem>(dims.size()); ++s)
        for (int k = 0; k < dims[s]; ++k) X.degrees.push_back(s);
    return X;
}

GradedSpace graded_tensor(const FiniteGroup& Gamma, const GradedSpace& X, const GradedSpace& Y) {
    GradedSpace Z;
    Z.degrees.reserve(static_cast<std::size_t>(X.dim()) * Y.dim());
    for (Elem a : X.degrees)
        for (Elem b : Y.degrees) Z.degrees.push_back(Gamma.mul(a, b));
    return Z;
}

bool is_degree_preserving(const GradedMap& f) {
    if (f.m.rows() != f.target.dim() || f.m.cols() != f.source.dim()) return false;
    for (int i = 0; i < f.m.rows(); ++i)
        for (const auto& [j, v] : f.m.row(i))
            if (f.target.degrees[i] != f.source.degrees[j]) return false;
    return true;
}

namespace {

std::vector<int> indices_of_degree(const GradedSpace& X, Elem s) {
    std::vector<int> idx;
    for (int i = 0; i < X.dim(); ++i)
        if (X.degrees[i] == s) idx.push_back(i);
    return idx;
}

Matrix diagonal(const std::vector<Cyclotomic>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < static_cast<int>(d.size()); ++i) m.set(i, i, d[i]);
    return m;
}

}  // namespace

EquivariantObject equivariant_validate(const CrossedAction& ca, GradedSpace X, std::vector<Matrix> r) {
    const MatchedPair& mp = ca.mp();
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    const int n = X.dim(), nG = mp.nG();
    for (Elem s : X.degrees)
        if (s < 0 || s >= mp.nGamma()) throw ShapeMismatch("degree out of range");
    if (static_cast<int>(r.size()) != nG)
        throw ShapeMismatch("expected " + std::to_string(nG) + " matrices r^g, got " + std::to_string(r.size()));
    for (Elem g = 0; g < nG; ++g)
        if (r[g].rows() != n || r[g].cols() != n) throw ShapeMismatch("r^" + G.label(g) + " is not " + std::to_string(n) + "x" + std::to_string(n));

    for (Elem g = 0; g < nG; ++g)
        for (int i = 0; i < n; ++i)
            for (const auto& [j, v] : r[g].row(i))
                if (X.degrees[i] != mp.lact(X.degrees[j], g))
                    throw NotEquivariant("r^" + G.label(g) + " maps degree " + Gm.label(X.degrees[j]) + " outside degree " +
                                         Gm.label(mp.lact(X.degrees[j], g)));
    if (r[G.identity()] != Matrix::identity(n)) throw NotEquivariant("r^e is not the identity");
    for (Elem g = 0; g < nG; ++g)
        for (Elem s = 0; s < mp.nGamma(); ++s) {
            std::vector<int> src = indices_of_degree(X, s), dst = indices_of_degree(X, mp.lact(s, g));
            if (src.empty() && dst.empty()) continue;
            if (src.size() != dst.size() || !r[g].submatrix(dst, src).inverse())
                throw NotInvertible("r^" + G.label(g) + " on degree " + Gm.label(s));
        }
    for (Elem g = 0; g < nG; ++g)
        for (Elem h = 0; h < nG; ++h) {
            std::vector<Cyclotomic> d;
            for (Elem s : X.degrees) d.push_back(ca.rho2(g, h, s));
            Matrix lhs = r[g] * r[h];
            Matrix rhs = r[G.mul(h, g)] * diagonal(d);
            if (lhs != rhs) {
                Matrix lt = lhs.transpose(), rt = rhs.transpose();
                Elem s = 0;
                for (int i = 0; i < n; ++i)
                    if (lt.row(i) != rt.row(i)) {
                        s = X.degrees[i];
                        break;
                    }
                throw NotEquivariant("(g,h,s) = (" + G.label(g) + "," + G.label(h) + "," + Gm.label(s) + ")");
            }
        }
    return EquivariantObject{std::move(X), std::move(r)};
}

EquivariantObject unit_object(const CrossedAction& ca) {
    GradedSpace X{{ca.mp().Gamma().identity()}};
    return equivariant_validate(ca, X, std::vector<Matrix>(ca.nG(), Matrix::identity(1)));
}

EquivariantObject equivariant_tensor(const CrossedAction& ca, const EquivariantObject& X, const EquivariantObject& Y) {
    const MatchedPair& mp = ca.mp();
    const int dx = X.dim(), dy = Y.dim(), nG = mp.nG();
    std::vector<Matrix> rt(nG), lt(nG);
    for (Elem g = 0; g < nG; ++g) {
        rt[g] = X.r[g].transpose();  // row i lists column i of r^g
        lt[g] = Y.r[g].transpose();
    }
    std::vector<Matrix> out(nG, Matrix(dx * dy, dx * dy));
    for (Elem g = 0; g < nG; ++g)
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j) {
                Elem t = Y.X.degrees[j];
                Elem k = mp.ract(t, g);
                Cyclotomic sc = ca.gamma(g, X.X.degrees[i], t);
                for (const auto& [ip, v] : rt[k].row(i))
                    for (const auto& [jp, w] : lt[g].row(j)) out[g].set(ip * dy + jp, i * dy + j, sc * v * w);
            }
    return equivariant_validate(ca, graded_tensor(mp.Gamma(), X.X, Y.X), std::move(out));
}

EquivariantObject equivariant_direct_sum(const EquivariantObject& X, const EquivariantObject& Y) {
    EquivariantObject Z;
    Z.X.degrees = X.X.degrees;
    Z.X.degrees.insert(Z.X.degrees.end(), Y.X.degrees.begin(), Y.X.degrees.end());
    for (std::size_t g = 0; g < X.r.size(); ++g) Z.r.push_back(direct_sum(X.r[g], Y.r[g]));
    return Z;
}

EquivariantObject conjugate(const CrossedAction& ca, const EquivariantObject& X, const Matrix& P) {
    if (!is_degree_preserving({X.X, X.X, P})) throw ShapeMismatch("conjugating matrix does not preserve degrees");
    auto Pinv = P.inverse();
    if (!Pinv) throw NotInvertible("conjugating matrix is singular");
    std::vector<Matrix> r;
    for (const auto& m : X.r) r.push_back(P * m * *Pinv);
    return equivariant_validate(ca, X.X, std::move(r));
}

bool is_equivariant_morphism(const EquivariantObject& X, const EquivariantObject& Y, const Matrix& f) {
    if (!is_degree_preserving({X.X, Y.X, f})) return false;
    for (std::size_t g = 0; g < X.r.size(); ++g)
        if (f * X.r[g] != Y.r[g] * f) return false;
    return true;
}

EquivariantObject K_functor(const CrossedAction& ca, const HopfAlgebra& H, const HModule& W) {
    const MatchedPair& mp = ca.mp();
    const Elem e = mp.G().identity();
    const int m = W.dim;
    GradedSpace X{std::vector<Elem>(m, -1)};
    for (Elem s = 0; s < mp.nGamma(); ++s) {
        const Matrix& A = W.action[H.index(s, e)];
        for (int i = 0; i < m; ++i)
            for (const auto& [j, v] : A.row(i)) {
                if (i != j || !v.is_one() || X.degrees[i] != -1)
                    throw NotAModule("the idempotents e_s#e do not act diagonally on this basis");
                X.degrees[i] = s;
            }
    }
    for (Elem d : X.degrees)
        if (d < 0) throw NotAModule("a basis vector is not homogeneous");
    std::vector<Matrix> r;
    for (Elem g = 0; g < mp.nG(); ++g) {
        Matrix gh(m, m);
        for (Elem s = 0; s < mp.nGamma(); ++s) gh = gh + W.action[H.index(s, g)];
        auto inv = gh.inverse();
        if (!inv) throw NotInvertible("the group-like element " + mp.G().label(g) + " acts singularly");
        r.push_back(std::move(*inv));
    }
    return equivariant_validate(ca, std::move(X), std::move(r));
}

HModule K_inverse(const CrossedAction& ca, const HopfAlgebra& H, const EquivariantObject& X) {
    const MatchedPair& mp = ca.mp();
    const int m = X.dim();
    std::vector<Matrix> action(H.dim, Matrix(m, m));
    for (Elem g = 0; g < mp.nG(); ++g) {
        auto inv = X.r[g].inverse();
        if (!inv) throw NotInvertible("r^" + mp.G().label(g));
        for (Elem s = 0; s < mp.nGamma(); ++s) {
            std::vector<Cyclotomic> p;
            for (Elem d : X.X.degrees) p.push_back(Cyclotomic(d == s ? 1 : 0));
            action[H.index(s, g)] = diagonal(p) * *inv;
        }
    }
    return module_validate(H, std::move(action));
}

EquivariantObject sorted_by_degree(const EquivariantObject& X) {
    const int n = X.dim();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&X](int a, int b) { return X.X.degrees[a] < X.X.degrees[b]; });
    Matrix Q(n, n);
    EquivariantObject Y;
    for (int k = 0; k < n; ++k) {
        Q.set(k, perm[k], Cyclotomic(1));
        Y.X.degrees.push_back(X.X.degrees[perm[k]]);
    }
    Matrix Qt = Q.transpose();
    for (const auto& m : X.r) Y.r.push_back(Q * m * Qt);
    return Y;
}

nlohmann::json equivariant_to_json(const CrossedAction& ca, const EquivariantObject& X0) {
    const MatchedPair& mp = ca.mp();
    EquivariantObject X = sorted_by_degree(X0);
    nlohmann::json dims = nlohmann::json::object(), r = nlohmann::json::object();
    std::vector<int> d = X.X.dims(mp.nGamma());
    for (Elem s = 0; s < mp.nGamma(); ++s)
        if (d[s]) dims[mp.Gamma().label(s)] = d[s];
    for (Elem g = 0; g < mp.nG(); ++g) {
        nlohmann::json blocks = nlohmann::json::object();
        for (Elem s = 0; s < mp.nGamma(); ++s) {
            if (!d[s]) continue;
            Matrix b = X.r[g].submatrix(indices_of_degree(X.X, mp.lact(s, g)), indices_of_degree(X.X, s));
            blocks[mp.Gamma().label(s)] = matrix_to_json(b);
        }
        r[mp.G().label(g)] = blocks;
    }
    return {{"dims", dims}, {"r", r}};
}

EquivariantObject equivariant_from_json(const CrossedAction& ca, const nlohmann::json& j) {
    const MatchedPair& mp = ca.mp();
    if (!j.is_object() || !j.contains("dims")) throw ParseError("equivariant object needs dims");
    std::vector<int> d(mp.nGamma(), 0);
    for (const auto& [key, v] : j.at("dims").items()) {
        Elem s = mp.Gamma().find_label(key);
        if (s < 0 || !v.is_number_integer() || v.get<int>() < 0) throw ParseError("bad dims entry " + key);
        d[s] = v.get<int>();
    }
    GradedSpace X = GradedSpace::from_dims(d);
    const int n = X.dim();
    std::vector<Matrix> r(mp.nG(), Matrix(n, n));
    r[mp.G().identity()] = Matrix::identity(n);
    const nlohmann::json rj = j.value("r", nlohmann::json::object());
    for (const auto& [gkey, blocks] : rj.items()) {
        Elem g = mp.G().find_label(gkey);
        if (g < 0) throw ParseError("unknown group element " + gkey);
        r[g] = Matrix(n, n);
        for (const auto& [skey, block] : blocks.items()) {
            Elem s = mp.Gamma().find_label(skey);
            if (s < 0) throw ParseError("unknown degree " + skey);
            std::vector<int> src = indices_of_degree(X, s), dst = indices_of_degree(X, mp.lact(s, g));
            Matrix b = matrix_from_json(block, static_cast<int>(dst.size()), static_cast<int>(src.size()));
            for (int a = 0; a < b.rows(); ++a)
                for (const auto& [c, v] : b.row(a)) r[g].set(dst[a], src[c], v);
        }
    }
    return equivariant_validate(ca, std::move(X), std::move(r));
}

}  // namespace crossact
