#include "cremona/cremaps.hpp"

#include <algorithm>

namespace cremona {

Matrix3 Matrix3::identity() {
    Matrix3 a;
    for (int i = 0; i < 3; ++i) a.m[i][i] = 1;
    return a;
}

Rat Matrix3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 Matrix3::inverse() const {
    Rat d = det();
    if (d == 0) throw SingularMatrix("matrix is singular");
    Matrix3 r;
    auto co = [&](int i, int j) {
        int r1 = (i + 1) % 3, r2 = (i + 2) % 3, c1 = (j + 1) % 3, c2 = (j + 2) % 3;
        return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = co(j, i) / d;
    return r;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
    return r;
}

std::array<Rat, 3> Matrix3::apply(const std::array<Rat, 3>& v) const {
    std::array<Rat, 3> r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) r[i] += m[i][k] * v[k];
    return r;
}

RationalMapP2 RationalMapP2::make(const HomogPoly& c0, const HomogPoly& c1,
                                  const HomogPoly& c2) {
    if (c0.is_zero() && c1.is_zero() && c2.is_zero())
        throw AllZero("map with all components zero");
    int d = -1;
    for (const HomogPoly* p : {&c0, &c1, &c2}) {
        if (p->is_zero()) continue;
        if (d == -1) d = p->degree();
        else if (p->degree() != d)
            throw DegreeMismatch("map components of unequal degree");
    }
    HomogPoly g = gcd(c0, gcd(c1, c2));
    RationalMapP2 f;
    const HomogPoly* cs[3] = {&c0, &c1, &c2};
    for (int i = 0; i < 3; ++i) {
        if (cs[i]->is_zero()) f.f_[i] = HomogPoly::zero(d - g.degree());
        else f.f_[i] = *divide_exact(*cs[i], g);
    }
    Rat lead = 0;
    for (int i = 0; i < 3; ++i) {
        if (!f.f_[i].is_zero()) {
            lead = f.f_[i].lead_coeff();
            break;
        }
    }
    for (int i = 0; i < 3; ++i)
        if (!f.f_[i].is_zero()) f.f_[i] = (Rat(1) / lead) * f.f_[i];
    f.degree_ = f.f_[0].is_zero()
                    ? (f.f_[1].is_zero() ? f.f_[2].degree() : f.f_[1].degree())
                    : f.f_[0].degree();
    if (f.degree_ < 1) throw DegenerateMap("components reduce to constants");
    return f;
}

RationalMapP2 RationalMapP2::identity() { return from_matrix(Matrix3::identity()); }

RationalMapP2 RationalMapP2::sigma() {
    auto X = HomogPoly::variable(0), Y = HomogPoly::variable(1), Z = HomogPoly::variable(2);
    return make(Y * Z, X * Z, X * Y);
}

RationalMapP2 RationalMapP2::rho() {
    auto X = HomogPoly::variable(0), Y = HomogPoly::variable(1), Z = HomogPoly::variable(2);
    return make(X * Y, Z * Z, Y * Z);
}

RationalMapP2 RationalMapP2::tau() {
    auto X = HomogPoly::variable(0), Y = HomogPoly::variable(1), Z = HomogPoly::variable(2);
    return make(X * X, X * Y, Y * Y - X * Z);
}

RationalMapP2 RationalMapP2::from_matrix(const Matrix3& a) {
    if (a.det() == 0) throw SingularMatrix("linear map must be invertible");
    std::array<HomogPoly, 3> c;
    for (int i = 0; i < 3; ++i) {
        c[i] = HomogPoly::zero(1);
        for (int j = 0; j < 3; ++j)
            if (a.m[i][j] != 0) c[i] = c[i] + a.m[i][j] * HomogPoly::variable(j);
    }
    return make(c[0], c[1], c[2]);
}

std::string RationalMapP2::str() const {
    return "(" + f_[0].str() + " : " + f_[1].str() + " : " + f_[2].str() + ")";
}

RationalMapP2 compose(const RationalMapP2& f, const RationalMapP2& g) {
    const auto& a = f.components();
    const auto& b = g.components();
    return RationalMapP2::make(a[0].subst(b[0], b[1], b[2]), a[1].subst(b[0], b[1], b[2]),
                               a[2].subst(b[0], b[1], b[2]));
}

bool projectively_equal(const RationalMapP2& f, const RationalMapP2& g) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(f[i] * g[j] - f[j] * g[i]).is_zero()) return false;
    return true;
}

bool is_identity(const RationalMapP2& f) {
    return projectively_equal(f, RationalMapP2::identity());
}

IndeterminacyReport indeterminacy(const RationalMapP2& f) {
    PointCount pc = common_zeros({f[0], f[1], f[2]}, /*crosscheck=*/true);
    IndeterminacyReport r;
    r.rational_points = pc.rational;
    r.algebraic_count = pc.algebraic_count;
    r.total_distinct = pc.total();
    return r;
}

namespace {

HomogPoly squarefree_locus(const HomogPoly& p) {
    HomogPoly g = gcd(p, gcd(p.derivative(0), gcd(p.derivative(1), p.derivative(2))));
    if (g.is_constant()) return p.normalized();
    return divide_exact(p, g)->normalized();
}

// Two independent points spanning the line alpha x + beta y + gamma z = 0.
std::pair<std::array<Rat, 3>, std::array<Rat, 3>> line_points(const HomogPoly& lin) {
    Rat a = lin.coeff({1, 0, 0}), b = lin.coeff({0, 1, 0}), c = lin.coeff({0, 0, 1});
    if (a != 0) return {{-b / a, 1, 0}, {-c / a, 0, 1}};
    if (b != 0) return {{1, 0, 0}, {0, -c / b, 1}};
    return {{1, 0, 0}, {0, 1, 0}};
}

std::vector<Rat> restrict_binary(const HomogPoly& p, const std::array<Rat, 3>& P,
                                 const std::array<Rat, 3>& Q) {
    int d = p.degree();
    std::vector<Rat> out(d + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) {
        std::vector<Rat> acc{1};
        for (int v = 0; v < 3; ++v) {
            for (int k = 0; k < e[v]; ++k) {
                std::vector<Rat> nxt(acc.size() + 1, Rat(0));
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    nxt[i + 1] += acc[i] * P[v];
                    nxt[i] += acc[i] * Q[v];
                }
                acc.swap(nxt);
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] += c * acc[i];
    }
    return out;
}

}  // namespace

bool contracts_locus(const RationalMapP2& f, const HomogPoly& curve) {
    HomogPoly c = squarefree_locus(curve);
    // The tangent field pos x grad degenerates exactly on the isotropic
    // conic; shear coordinates until the locus avoids it.
    auto X = HomogPoly::variable(0), Y = HomogPoly::variable(1), Z = HomogPoly::variable(2);
    HomogPoly iso = X * X + Y * Y + Z * Z;
    RationalMapP2 g = f;
    for (int shift = 0; !gcd(c, iso).is_constant(); ++shift) {
        if (shift > 5) throw InternalInconsistency("could not avoid isotropic conic");
        Rat s(shift + 1);
        // conjugate: contraction of `curve` by f equals contraction of
        // curve o t by t^-1 o f o t
        c = squarefree_locus(curve.subst(X + s * Z, Y, Z));
        Matrix3 t = Matrix3::identity();
        t.m[0][2] = s;
        g = compose(compose(RationalMapP2::from_matrix(t.inverse()), f),
                    RationalMapP2::from_matrix(t));
    }
    std::array<HomogPoly, 3> grad{c.derivative(0), c.derivative(1), c.derivative(2)};
    std::array<HomogPoly, 3> pos{X, Y, Z};
    auto cross = [](const std::array<HomogPoly, 3>& u, const std::array<HomogPoly, 3>& v) {
        return std::array<HomogPoly, 3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                        u[0] * v[1] - u[1] * v[0]};
    };
    auto T = cross(pos, grad);
    std::array<HomogPoly, 3> v;
    for (int i = 0; i < 3; ++i) {
        v[i] = HomogPoly::zero(0);
        for (int j = 0; j < 3; ++j) {
            HomogPoly t = g[i].derivative(j) * T[j];
            v[i] = v[i].is_zero() ? t : v[i] + t;
        }
    }
    std::array<HomogPoly, 3> fv{g[0], g[1], g[2]};
    auto w = cross(v, fv);
    for (const auto& comp : w) {
        if (comp.is_zero()) continue;
        if (!divide_exact(comp, c)) return false;
    }
    return true;
}

ExceptionalReport exceptional(const RationalMapP2& f) {
    HomogPoly jac = jacobian_det(f[0], f[1], f[2]);
    if (jac.is_zero()) throw DegenerateMap("Jacobian determinant vanishes identically");
    ExceptionalReport rep;
    rep.jacobian = jac;
    auto fact = factor_linear(jac);
    for (const auto& [lin, mult] : fact.linear_factors) {
        ExceptionalEntry e;
        e.curve = lin;
        e.multiplicity = mult;
        auto [P, Q] = line_points(lin);
        std::vector<std::vector<Rat>> b(3);
        for (int i = 0; i < 3; ++i) b[i] = restrict_binary(f[i], P, Q);
        bool prop = true;
        for (int i = 0; i < 3 && prop; ++i)
            for (int j = i + 1; j < 3 && prop; ++j) {
                for (std::size_t k = 0; k < b[i].size() && prop; ++k)
                    for (std::size_t l = 0; l < b[j].size() && prop; ++l)
                        if (k != l && b[i][k] * b[j][l] - b[i][l] * b[j][k] != 0) prop = false;
            }
        e.contracted = prop;
        if (prop) {
            // evaluate at parameter values until the image is nonzero
            static const std::pair<int, int> params[] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1},
                                                         {1, -1}, {1, 3}, {3, 1}};
            for (auto [s, tpar] : params) {
                std::array<Rat, 3> val;
                bool nonzero = false;
                for (int i = 0; i < 3; ++i) {
                    Rat acc = 0;
                    for (std::size_t k = 0; k < b[i].size(); ++k) {
                        // coefficient of s^k t^(d-k)
                        Rat term = b[i][k];
                        for (std::size_t q = 0; q < k; ++q) term *= s;
                        for (std::size_t q = k; q + 1 < b[i].size(); ++q) term *= tpar;
                        acc += term;
                    }
                    val[i] = acc;
                    if (acc != 0) nonzero = true;
                }
                if (nonzero) {
                    ProjPointQ img(val[0], val[1], val[2]);
                    // minor-divisibility confirmation
                    for (int i = 0; i < 3; ++i)
                        for (int j = i + 1; j < 3; ++j) {
                            HomogPoly minor = Rat(img.c[j]) * f[i] - Rat(img.c[i]) * f[j];
                            if (!minor.is_zero() && !divide_exact(minor, lin))
                                throw InternalInconsistency(
                                    "contraction image fails minor divisibility");
                        }
                    e.image = img;
                    break;
                }
            }
            if (!e.image) throw InternalInconsistency("no nonzero image value on line");
        }
        rep.entries.push_back(std::move(e));
    }
    if (!fact.residual.is_constant()) {
        ExceptionalEntry e;
        e.curve = fact.residual;
        e.multiplicity = 1;
        e.contracted = contracts_locus(f, fact.residual);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::string to_string(QuadraticClass c) {
    switch (c) {
        case QuadraticClass::SIGMA_TYPE: return "SIGMA_TYPE";
        case QuadraticClass::RHO_TYPE: return "RHO_TYPE";
        case QuadraticClass::TAU_TYPE: return "TAU_TYPE";
        default: return "NOT_BIRATIONAL";
    }
}

QuadraticClass classify_quadratic(const RationalMapP2& f) {
    if (f.degree() != 2) throw NotQuadratic("classify_quadratic needs a degree-2 map");
    HomogPoly jac = jacobian_det(f[0], f[1], f[2]);
    if (jac.is_zero()) throw DegenerateMap("Jacobian determinant vanishes identically");
    HomogPoly red = squarefree_locus(jac);
    if (!contracts_locus(f, red)) return QuadraticClass::NOT_BIRATIONAL;
    QuadraticClass cls;
    long expected;
    switch (red.degree()) {
        case 1: cls = QuadraticClass::TAU_TYPE; expected = 1; break;
        case 2: cls = QuadraticClass::RHO_TYPE; expected = 2; break;
        case 3: cls = QuadraticClass::SIGMA_TYPE; expected = 3; break;
        default:
            throw InternalInconsistency("quadratic Jacobian with unexpected reduced degree");
    }
    long got = indeterminacy(f).total_distinct;
    if (got != expected)
        throw InternalInconsistency("quadratic class and indeterminacy count disagree: " +
                                    to_string(cls) + " vs " + std::to_string(got) + " points");
    return cls;
}

RationalMapP2 expand_word(const NoetherWord& w) {
    if (w.letters.empty()) throw CremonaError("empty word");
    auto letter_map = [](const NoetherLetter& l) {
        return l.is_sigma ? RationalMapP2::sigma() : RationalMapP2::from_matrix(l.mat);
    };
    RationalMapP2 acc = letter_map(w.letters.front());
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        acc = compose(acc, letter_map(w.letters[i]));
    return acc;
}

NoetherWord invert_word(const NoetherWord& w) {
    NoetherWord r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (it->is_sigma) r.letters.push_back(NoetherLetter::sigma());
        else r.letters.push_back(NoetherLetter::linear(it->mat.inverse()));
    }
    return r;
}

bool homaloidal_check(int n, const std::vector<int>& mults) {
    if (n < 1) throw CremonaError("homaloidal_check needs n >= 1");
    for (int m : mults)
        if (m < 1) throw CremonaError("multiplicities must be positive");
    BigInt sq = 0, lin = 0;
    for (int m : mults) {
        sq += BigInt(m) * m;
        lin += m;
    }
    return sq == BigInt(n) * n - 1 && lin == BigInt(3) * n - 3;
}

namespace {

// Homogenization of a polynomial in y: returns the degree-m form A(Y, Z).
HomogPoly homogenize_y(const UniPoly& p, int m) {
    HomogPoly out = HomogPoly::zero(m);
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) == 0) continue;
        out.set_coeff({0, k, m - k}, p.coeff(k));
    }
    return out;
}

}  // namespace

RationalMapP2 dejonquieres_to_map(const DeJonquieresMap& d) {
    const UniPoly &a = d.fiber[0][0], &b = d.fiber[0][1], &c = d.fiber[1][0],
                  &dd = d.fiber[1][1];
    UniPoly det = a * dd - b * c;
    if (det.is_zero()) throw DegenerateMap("fiber action has zero determinant");
    Rat bdet = d.base[0][0] * d.base[1][1] - d.base[0][1] * d.base[1][0];
    if (bdet == 0) throw DegenerateMap("base action has zero determinant");
    int m = std::max(std::max(a.degree(), b.degree()), std::max(c.degree(), dd.degree()));
    if (m < 0) throw DegenerateMap("fiber action entries all zero");
    auto X = HomogPoly::variable(0), Y = HomogPoly::variable(1), Z = HomogPoly::variable(2);
    HomogPoly A = homogenize_y(a, m), B = homogenize_y(b, m), C = homogenize_y(c, m),
              D = homogenize_y(dd, m);
    HomogPoly num1 = A * X + B * Z;
    HomogPoly den1 = C * X + D * Z;
    HomogPoly ynum = d.base[0][0] * Y + d.base[0][1] * Z;
    HomogPoly yden = d.base[1][0] * Y + d.base[1][1] * Z;
    RationalMapP2 f = RationalMapP2::make(num1 * yden, ynum * den1, den1 * yden);
    if (!preserves_pencil(f, d.base))
        throw InternalInconsistency("de Jonquieres map fails pencil preservation");
    return f;
}

bool preserves_pencil(const RationalMapP2& f, const std::array<std::array<Rat, 2>, 2>& base) {
    auto Y = HomogPoly::variable(1), Z = HomogPoly::variable(2);
    HomogPoly ynum = base[0][0] * Y + base[0][1] * Z;
    HomogPoly yden = base[1][0] * Y + base[1][1] * Z;
    return (f[1] * yden - f[2] * ynum).is_zero();
}

}  // namespace cremona
