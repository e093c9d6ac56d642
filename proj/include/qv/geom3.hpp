#pragma once

#include "qv/forms.hpp"
#include "qv/rep.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qv {

// ---- lines in P^3 -------------------------------------------------------------

// Plucker coordinates p_ij = a_i b_j - a_j b_i in the order 01 02 03 12 13 23.
Vec plucker(const Vec& a, const Vec& b);
// The bilinear form whose vanishing means two lines meet.
CycNum plucker_pairing(const Vec& p, const Vec& q);
// p01 p23 - p02 p13 + p03 p12.
CycNum plucker_quadric(const Vec& p);

struct ProjLine {
    Vec a, b;     // spanning points
    Vec coords;   // Plucker vector, projectively normalized

    static ProjLine through(const Vec& a, const Vec& b);
    // Recover spanning points from a decomposable Plucker vector.
    static ProjLine from_plucker(const Vec& p);
    bool operator==(const ProjLine& o) const { return coords == o.coords; }
    bool contains(const Vec& x) const;
};

bool lines_meet(const ProjLine& l, const ProjLine& m);
ProjLine apply(const Mat& g, const ProjLine& l);

// Orbit under the group generated by `gens`, in BFS order (the input first).
std::vector<ProjLine> line_orbit(const ProjLine& l, const std::vector<Mat>& gens);
std::vector<Vec> point_orbit(const Vec& p, const std::vector<Mat>& gens, int cap = 100000);

// 1 where the lines meet; the diagonal is 0.
std::vector<std::vector<int>> incidence_profile(const std::vector<ProjLine>& lines);
// L_i pairwise skew, L'_i pairwise skew, L_i skew to L'_i, L_i meets L'_j (i != j).
bool is_double_five(const std::vector<ProjLine>& L, const std::vector<ProjLine>& Lp);

struct TransversalResult {
    bool degenerate = false;   // infinitely many transversals
    int count = 0;             // distinct transversals over the algebraic closure
    bool double_root = false;  // the two solutions coincide
    std::vector<ProjLine> lines;  // explicit when computable in the field
};
// Lines meeting four pairwise skew lines.  Throws if two inputs meet.
TransversalResult transversals(const std::array<ProjLine, 4>& ls);

// The plane spanned by two meeting lines intersected with another such plane.
ProjLine plane_intersection(const ProjLine& l1, const ProjLine& m1, const ProjLine& l2, const ProjLine& m2);

// ---- invariant subspaces ------------------------------------------------------

// The two invariant lines of a subgroup H whose preimage splits U4 as 2 + 2.
std::pair<ProjLine, ProjLine> fixed_lines(const CoverGroup& g, const PermGroup& h);

// Subgroup of h (inside S6) whose lifts preserve the line.
PermGroup line_stabilizer(const CoverGroup& g, const PermGroup& h, const ProjLine& l);

struct OrbitInfo {
    int length = 0;
    Vec rep;                    // normalized
    std::vector<Vec> points;
    std::string source;         // the subgroup whose joint eigenvector produced it
};

// Orbits of length <= bound of the group generated by `gens` on P(V).  A
// point on such an orbit has stabilizer of order >= |G| / bound and is a
// joint eigenvector of it, so the candidates are the 1-dimensional joint
// eigenspaces of `candidates` (one entry per subgroup class of that size,
// given by generator matrices).  A joint eigenspace of dimension >= 2 would
// give infinitely many short orbits and raises an error.
std::vector<OrbitInfo> small_orbit_census(const std::vector<Mat>& gens,
                                          const std::vector<std::pair<std::string, std::vector<Mat>>>& candidates, int bound);

// 1-dimensional joint eigenspaces (and the dimension of the largest one).
std::vector<Vec> joint_eigenvectors(const std::vector<Mat>& gens, int* max_dim = nullptr);

// Candidate subgroups for a census: classes of subgroups of `h` of order at
// least |h| / bound, each given by lifted generator matrices (or W5 matrices
// when `cover` is null).
std::vector<std::pair<std::string, std::vector<Mat>>> census_candidates(const FieldCtx& ctx, const CoverGroup* cover, const PermGroup& h, int bound);

// ---- twisted cubics and quartic surfaces --------------------------------------

struct TwistedCubic {
    int galois = 1;          // which binary icosahedral representation
    std::vector<int> iso;    // images of the two generators in the cover
    Mat intertwiner;         // X Sym3(g) = U4(iso(g)) X
    CurveParam param;        // X (s^3, s^2 t, s t^2, t^3)
};

// The two curves for the 2.A5 preimage of `a5` (a nonstandard A5).
std::array<TwistedCubic, 2> twisted_cubics(const CoverGroup& g, const PermGroup& a5);
// Image of a parametrized curve under a matrix.
CurveParam apply(const Mat& g, const CurveParam& c);

// Splitting of the quadratic forms on P^3 under the preimage of h into
// isotypic pieces (each a list of quadrics).
std::vector<std::vector<MForm>> quadric_pieces(const CoverGroup& g, const PermGroup& h);

// The quartic swept by the tangent lines of a twisted cubic c: the unique
// quartic containing them (a 1-dimensional kernel).  Verified singular along c.
MForm tangent_developable(const CurveParam& c);

// Points of P^1 where c meets the line, counted as the degree of a gcd.
int curve_line_intersection_degree(const CurveParam& c, const ProjLine& l);
// Degree of the gcd of the restrictions of `forms` to c (0: no common point).
int common_zero_degree(const std::vector<MForm>& forms, const CurveParam& c);

// Forms of the given degree vanishing on every line (and, if gens are given,
// invariant under them).  Lines are sampled at u = inf, 0, 1, -1, 2, ...
std::vector<MForm> system_through_lines(const std::vector<ProjLine>& lines, int degree, const std::vector<Mat>& invariant_under = {});

enum class Tangency { Tangent, Contained, Transversal };
std::string to_string(Tangency t);
// The quadric through three skew lines against a fourth line.
Tangency quadric_tangency_check(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3, const ProjLine& l4);

// Member a f1 + b f2 of a pencil through the point p (a = f2(p), b = -f1(p)).
MForm pencil_member_through(const MForm& f1, const MForm& f2, const Vec& p);

// ---- the configuration used throughout --------------------------------------

// Matrices of U4 for chosen lifts of the given permutations.
std::vector<Mat> lift_matrices(const CoverGroup& g, const std::vector<Perm>& ps);
std::vector<Mat> generator_matrices(const CoverGroup& g, const PermGroup& h);

struct P3Scene {
    // A5 = A5nst acting through U4; L_i = r_i L_1, L'_i = r_i L'_1 for the
    // left coset representatives r_i of A4nst in A5nst.
    std::vector<ProjLine> L, Lp;
    // L^1_j, L^2_j: lines fixed by the conjugates r_j A5st r_j^-1 in A6.
    // Family 1 is the one met by the first twisted cubic.
    std::vector<ProjLine> six1, six2;
    // The two A5nst-invariant twisted cubics, and the A6-orbit C^1_i = r_i C^1_1
    // (r_i left coset representatives of A5nst in A6).
    std::array<TwistedCubic, 2> cubics;
    std::vector<CurveParam> cubic_orbit1;
    // Quadrics through each cubic (a 3-dimensional isotypic piece).
    std::array<std::vector<MForm>, 2> cubic_quadrics;
    // Tangent developables of the two cubics.
    std::array<MForm, 2> developables;
};
const P3Scene& p3_scene(const FieldCtx& ctx);

}  // namespace qv
