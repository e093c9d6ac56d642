#pragma once

#include "qv/forms.hpp"
#include "qv/geom3.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qv {

// P^4 is the hyperplane x_0 + ... + x_5 = 0 in P^5; points and forms use all
// six coordinates.

// s_k = sum x_i^k in six variables.
MForm power_sum6(const FieldCtx& ctx, int k);
// F_t = s_4 - t s_2^2.
MForm quartic_ft(const FieldCtx& ctx, const CycNum& t);

// Coordinates on the hyperplane: y (5 entries, basis e_i - e_5) -> x (6 entries).
Vec hyperplane_to_six(const Vec& y);
// A basis of the sum-zero directions, e_i - e_5.
std::vector<Vec> sum_zero_directions(const FieldCtx& ctx);

struct Line6 {
    Vec a, b;
    Vec key;  // rows of the reduced echelon form, concatenated
    static Line6 through(const Vec& a, const Vec& b);
    bool operator==(const Line6& o) const { return key == o.key; }
    bool contains(const Vec& p) const;
};

// Orbits under permutation of coordinates by the elements of g.
std::vector<Vec> coordinate_orbit(const Vec& p, const PermGroup& g);
std::vector<Line6> coordinate_orbit(const Line6& l, const PermGroup& g);

struct P4Orbits {
    std::vector<Vec> sigma6, sigma10, sigma15, sigma30;
    std::vector<Line6> lines15;
};
// The S6-orbits of the seeds [-5:1:1:1:1:1], [-1:-1:-1:1:1:1], [1:-1:0:0:0:0],
// [1:1:w:w:w^2:w^2] and of the line through [1:0:-1:1:0:-1], [0:1:-1:0:1:-1].
// Throws if an orbit has an unexpected length.
P4Orbits build_orbits(const FieldCtx& ctx);

// The set of t with p singular on X_t: all t, one value, or none.
struct TCondition {
    enum Kind { All, Value, None } kind = None;
    CycNum value;
    std::string str() const;
};
// Solve a = t b for t (vectors of equal length).
TCondition solve_proportional(const Vec& a, const Vec& b);
// grad F_t(p) must be proportional to (1,...,1); linear in t.  F_t(p) = 0
// then follows from the Euler identity since p lies on the hyperplane.
TCondition singular_t_condition(const Vec& p);
// Same along a whole line: every partial restricted to the line, modulo the
// all-ones direction.
TCondition line_singular_t_condition(const Line6& l);
bool singular_along_line(const Line6& l, const CycNum& t);
bool is_singular_point(const Vec& p, const CycNum& t);
// Rank of the Hessian of F_t at p on the sum-zero directions; 4 means a node.
int node_rank(const Vec& p, const CycNum& t);

// Short orbits of a subgroup of S6 acting on P^4 through W5, as six-coordinate points.
std::vector<std::vector<Vec>> orbit_census_p4(const FieldCtx& ctx, const PermGroup& g, int bound);

// ---- the image of P^3 under a linear system of quartics ------------------------

struct ImageResult {
    bool found = false;
    CycNum t;
    std::string subgroup;        // the index-6 subgroup whose fixed vector gave q_0
    std::string character;       // "trivial" or "sign"
    std::vector<MForm> q;        // q_0..q_5, sum zero
    std::vector<std::string> attempts;  // one line per (subgroup, character) tried
};

// Matrices of the induced action of the generators of g on span(basis):
// act(lift(p), basis_j) = sum_i M_ij basis_i.  Throws if span(basis) is not invariant.
std::vector<Mat> induced_action(const CoverGroup& cover, const std::vector<Perm>& gens, const std::vector<MForm>& basis);

// Builds q_i from a fixed vector of an index-6 subgroup, then tests
// sum q_i^4 = t (sum q_i^2)^2 coefficient-wise.
ImageResult identify_image(const CoverGroup& cover, const PermGroup& g, const std::vector<MForm>& basis);

struct Contraction {
    bool contracted = false;
    Vec image;  // proportionality constants of the restrictions of q_0..q_5
};
// Throws if every q_i vanishes on the curve.
Contraction contraction_check(const std::vector<MForm>& q, const CurveParam& c);

// ---- arithmetic ------------------------------------------------------------------

// Genera g in [g_min, g_max] with
//   2g - 2 = |G| (2 gq - 2) + sum_k a_k (|G| - len_k),   gq >= 0, a_k >= 0.
std::set<int> rh_search(int group_order, const std::vector<int>& orbit_lengths, int g_min, int g_max);

struct NumericIdentities {
    Rational det;          // of ((-10, 20, 5), (20, -10, 5), (5, 5, 4))
    long six_line_degree;  // 64 - 72 + 12
    long ten_line_degree;  // 64 - 60 + 10
};
NumericIdentities numeric_identities();

}  // namespace qv
