#pragma once

#include "qv/linalg.hpp"
#include "qv/perm.hpp"

#include <functional>
#include <unordered_map>

namespace qv {

// ---- explicit models of S6-representations --------------------------------

// Permutation matrix sending e_i to e_{p(i)} (the representation W).
Mat perm_matrix(const FieldCtx& ctx, const Perm& p);
// I + W5 inside SO6: sign(p) P + (1 - sign(p))/6 J, with J the all-ones
// matrix.  The ones line carries the trivial summand, the sum-zero
// hyperplane carries sign(p) times the permutation action.
Mat so6_model(const FieldCtx& ctx, const Perm& p);
// W5 on the sum-zero hyperplane, basis f_i = e_i - e_5 (i = 0..4).  W5 is
// the sign twist of the standard representation (trace -3 on a transposition).
Mat w5_model(const FieldCtx& ctx, const Perm& p);

// Second exterior power on the basis e_i ^ e_j (i < j) in lexicographic order.
Mat wedge2(const Mat& h);
// Action on degree-d monomials (ordered as monomials(n, d)) induced by the
// substitution x -> g x:  m(g x) = sym_power_matrix(g, d) m(x).
Mat sym_power_matrix(const Mat& g, int d);
bool is_orthogonal(const Mat& m);

// ---- spin lift SO6 -> SL4 ---------------------------------------------------

// Clifford generators for sum x_i^2 on the exterior algebra of a
// 3-dimensional isotropic space (Jordan-Wigner form, 8x8).  They square to 1
// and anticommute pairwise.
Mat clifford_gamma(const FieldCtx& ctx, int k);
Mat clifford_of(const FieldCtx& ctx, const Vec& v);
// Basis states of even parity, spanning the half-spinor space.
const std::vector<int>& even_half_spinor_states();

Mat reflection(const Vec& v);
// Vectors v_1..v_r with m = r_{v_1} ... r_{v_r}, obtained greedily column by
// column (v = A e_k - e_k).
std::vector<Vec> cartan_dieudonne(const Mat& m);

struct SpinLiftResult {
    std::vector<Mat> lifts;
    Mat plucker_basis;            // T with T wedge2(lift) = target T
    std::vector<Rational> scale;  // lift = (gamma product)/sqrt(scale)
    std::vector<int> reflections;
    int group_order = 0;          // order of the matrix group generated by the lifts (0: over cap)
};

// The fixed identification of wedge2 of the half-spinor space with the
// orthogonal 6-space (a 1-dimensional kernel, normalized projectively).
Mat plucker_identification(const FieldCtx& ctx);

SpinLiftResult spin_lift(const std::vector<Mat>& targets);

// ---- the cover group --------------------------------------------------------

// A finite matrix group given by closure of generator matrices, with each
// element carrying its image in S6.  Element 0 is the identity.
class CoverGroup {
public:
    CoverGroup(const FieldCtx& ctx, const std::vector<Mat>& gen_mats, const std::vector<Perm>& gen_perms, int cap = 5000);

    const FieldCtx& ctx() const { return *ctx_; }
    int order() const { return static_cast<int>(mats_.size()); }
    int dim() const { return mats_.front().rows(); }
    const Mat& matrix(int id) const { return mats_[static_cast<std::size_t>(id)]; }
    const Perm& proj(int id) const { return proj_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& gen_ids() const { return gen_ids_; }
    int central() const { return central_; }  // id of -I, or -1

    int find(const Mat& m) const;
    // The ids projecting to p (one or two of them).
    const std::vector<int>& preimages(const Perm& p) const { return pre_[static_cast<std::size_t>(p.index())]; }
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, int k) const;
    int element_order(int a) const;

    // Ids of the full preimage of a subgroup of S6, ascending.
    std::vector<int> preimage(const PermGroup& h) const;
    // One lift of each generator of h, plus the central element.
    std::vector<int> lift_generators(const PermGroup& h) const;

    // Conjugacy classes.  Labels: element order, projected cycle type,
    // central flag; classes sharing (order, type) are tagged in order of
    // (trace, smallest id).
    std::vector<ConjClass> classes() const;
    // Classes of the subgroup generated by sub_gens, as lists of ids.
    std::vector<std::vector<int>> classes_within(const std::vector<int>& sub_gens) const;
    std::vector<int> closure(const std::vector<int>& gens) const;

private:
    const FieldCtx* ctx_;
    std::vector<Mat> mats_;
    std::vector<Perm> proj_;
    std::unordered_map<Mat, int, MatHash> index_;
    std::vector<std::vector<int>> pre_;
    std::vector<std::pair<int, int>> probe_;  // a nonzero entry per element
    std::vector<int> gen_ids_;
    int central_ = -1;
};

// 2.S6 generated by the spin lifts of so6_model((01)) and so6_model((012345)).
const SpinLiftResult& spin_data(const FieldCtx& ctx);
const CoverGroup& spin_cover(const FieldCtx& ctx);

// ---- characters -------------------------------------------------------------

constexpr int kMaxPower = 6;

struct ClassData {
    std::vector<ConjClass> classes;
    std::unordered_map<int, int> class_of;   // element id -> class
    std::vector<std::vector<int>> power;     // power[k][c]: class of rep(c)^k, k = 0..kMaxPower
    int group_order = 0;
};
ClassData class_data(const CoverGroup& g);
ClassData class_data(const PermGroup& g);

using Character = std::vector<CycNum>;  // indexed by class

Character character_from(const ClassData& cd, const std::function<CycNum(int)>& value_at_rep);
Character dual(const Character& chi);
Character product(const Character& a, const Character& b);
Character sym_power_character(const ClassData& cd, const Character& chi, int d);
// <a, b> over a subgroup given by its per-class element counts.
Rational inner_product(const std::vector<int>& counts, const Character& a, const Character& b);
Rational trivial_multiplicity(const std::vector<int>& counts, const Character& chi);

// ---- commutants, splitting, intertwiners ------------------------------------

// Basis of {X : X A = B X for all (A, B) in zip(gens1, gens2)}.
std::vector<Mat> intertwiners(const std::vector<Mat>& gens1, const std::vector<Mat>& gens2);
std::vector<Mat> commutant(const std::vector<Mat>& gens);

// Split a representation into invariant subspaces using class sums: each
// class sum acts on an irreducible constituent by |C| psi(g)/psi(1), and
// psi(g) is a sum of psi(1) eigenvalues of g.  Multiplicity-free parts come
// out irreducible; repeated constituents stay together as isotypic blocks.
// `elems` lists matrices of all group elements, `classes` partitions indices.
std::vector<std::vector<Vec>> split_isotypic(const std::vector<Mat>& elems, const std::vector<std::vector<int>>& classes);
// Is span(basis) invariant under every matrix in gens?
bool is_invariant_subspace(const std::vector<Mat>& gens, const std::vector<Vec>& basis);

// ---- binary icosahedral group -----------------------------------------------

// Generators S (order 5) and T (order 4) of SL2(F5)-cover 2.A5 over Q(zeta_5),
// with zeta_5 replaced by zeta_5^galois.
std::vector<Mat> binary_icosahedral_generators(const FieldCtx& ctx, int galois = 1);
std::vector<Mat> matrix_closure(const std::vector<Mat>& gens, int cap = 5000);

// Find ids x_1..x_k in the cover group such that gens[i] -> x_i extends to an
// isomorphism from <gens> onto the subgroup with ids `target`; the search
// pairs candidates of matching order and, optionally, matching value of
// `trace_filter`.  Returns empty if none.
std::vector<int> find_isomorphism(const std::vector<Mat>& gens, const CoverGroup& g, const std::vector<int>& target,
                                  const std::function<bool(int gen, int id)>& filter = nullptr);

}  // namespace qv
