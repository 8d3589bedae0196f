#ifndef CREMONA_BSURFACE_HPP
#define CREMONA_BSURFACE_HPP

#include <string>
#include <vector>

#include "cremona/cremaps.hpp"
#include "cremona/poly2.hpp"
#include "cremona/roots.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

// Blow-up chart conventions: new coordinates (t, w) map to the previous
// chart by center + (t, t*w) [exceptional {t=0}] or center + (t*w, w)
// [exceptional {w=0}].
enum class ChartKind { FirstExceptional, SecondExceptional };

enum class RootChart { Z1, X1, Y1 };

struct BlowupStep {
    Rat c1, c2;
    ChartKind kind;
    std::string label;
};

// Integer lattice Z L + Z E_1 + ... + Z E_N with a (possibly non-diagonal)
// intersection form.  For blow-ups of distinct proper points the form is
// diag(1,-1,...,-1); towers with infinitely-near centers use the Gram matrix
// of the strict exceptional classes instead.
struct PicLattice {
    int n = 0;  // number of exceptional classes
    std::vector<std::vector<BigInt>> gram;             // (n+1)x(n+1)
    std::vector<std::vector<BigInt>> strict_in_total;  // basis change, (n+1)x(n+1)
    static PicLattice proper(int n);
    int rank() const { return n + 1; }
};

struct PicVector {
    std::vector<BigInt> c;  // coordinates in (L, E_1..E_N)
    PicVector() = default;
    explicit PicVector(std::vector<BigInt> v) : c(std::move(v)) {}
    static PicVector unit(int rank, int i);
};

struct PicMatrix {
    std::vector<std::vector<BigInt>> m;  // square, column j = image of basis j
    int size() const { return (int)m.size(); }
    static PicMatrix identity(int n);
    friend PicMatrix operator*(const PicMatrix& a, const PicMatrix& b);
    friend bool operator==(const PicMatrix&, const PicMatrix&) = default;
    PicVector apply(const PicVector& v) const;
    BigInt trace() const;
};

BigInt intersection(const PicVector& u, const PicVector& v, const PicLattice& lat);
PicMatrix pullback_matrix(const std::vector<PicVector>& images);
bool preserves_intersection_form(const PicMatrix& m, const PicLattice& lat);

// Exact characteristic polynomial det(tI - M) by Faddeev-LeVerrier.
ZPoly char_poly(const PicMatrix& m);

// Per_n = 2 + trace(M^n) for the H^{1,1}-action of an automorphism.
BigInt periodic_count(const PicMatrix& m, int n);

// Chain of point blow-ups in affine charts.  Tracks the strict transforms of
// earlier exceptional curves so infinitely-near centers are supported and the
// lattice Gram matrix comes out right.
class BlowupTower {
public:
    explicit BlowupTower(RootChart root = RootChart::Z1) : root_(root) {}

    void add_step(const Rat& c1, const Rat& c2, ChartKind kind, std::string label = "");

    int size() const { return (int)steps_.size(); }
    const std::vector<BlowupStep>& steps() const { return steps_; }
    RootChart root_chart() const { return root_; }

    // Composite chart map of chart j (1-based; j steps applied) into P^2,
    // as a triple of bivariate polynomials in the chart coordinates.
    std::array<Poly2, 3> chart_to_p2(int j) const;

    // Which chart variable cuts out E_j in chart j (0 = first, 1 = second).
    int exceptional_var(int j) const;

    // multiplicity of strict E_k at the center of step j (k < j, 1-based)
    int incidence(int j, int k) const;

    PicLattice lattice() const;

    // Class of the strict transform of a plane curve (root-chart visible).
    PicVector curve_class(const HomogPoly& curve) const;

private:
    RootChart root_;
    std::vector<BlowupStep> steps_;
    std::vector<std::vector<int>> mult_;     // mult_[j][k], j,k 0-based
    std::vector<std::vector<Poly2>> strict_;  // strict_[j][k]: eq of E_k in chart j
};

// Orders of vanishing of (the pull-back of) linear_form o f along each E_j.
std::vector<int> vanishing_orders(const RationalMapP2& f, const HomogPoly& linear_form,
                                  const BlowupTower& tower);
// Same with a symbolically generic linear form.
std::vector<int> vanishing_orders_generic(const RationalMapP2& f, const BlowupTower& tower);

// The three-step resolution tower of tau = (x^2 : xy : y^2 - xz).
BlowupTower tau_resolution_tower();

// x^{n+1} (x^3 - x - 1) + x^3 + x^2 - 1, expanded.
ZPoly bk_char_poly(int n);

// Pull-back action on Pic of the plane blown up in p1, p2 and the length
// n+1 orbit of q for the Bedford-Kim family, assembled combinatorially.
// Basis: (L, E1, E2, F0..Fn).
PicMatrix bk_pic_matrix(int n);

// The 3x3 action on Pic(Y) (p1, p2 blown up) of the Bedford-Kim map.
PicMatrix bk_y_matrix();

}  // namespace cremona

#endif
