#ifndef QADJ_VERIFY_HPP
#define QADJ_VERIFY_HPP

#include "qadj/adjoint.hpp"
#include "qadj/report.hpp"

namespace qadj {

/// Contravariant-form Gram matrix on the canonical basis. Symmetric and
/// block-diagonal by weight; entries in Z[v,v^-1].
struct GramMatrix {
    enum class Provenance { ClosedForm, ContractSolved };
    PolyMatrix entries;
    Provenance provenance;
};

/// Verifies the defining relations of the quantized enveloping algebra as
/// exact matrix identities on the module: K-additivity on unit vectors and
/// all pairwise sums, the K/E and K/F commutations, the EF commutator with
/// diagonal right side [<i,lambda(b)>]_i, and both quantum Serre relations
/// via divided-power matrices.
VerificationReport check_relations(const AdjointModule& m, const std::string& scope = "");

/// Gram matrix from the closed forms: (X_alpha,X_alpha) = v^{-e+1}[e] on
/// short roots and 1 on long roots; zero-weight block (t_i,t_j) by node
/// lengths and adjacency; everything off-weight-block is 0.
GramMatrix gram_closed_form(const AdjointModule& m);

/// Independent oracle: treats all Gram entries as unknowns and solves the
/// linear system generated by (eta,eta) = 1, symmetry, weight-orthogonality
/// and every instance of the E/F adjunction identities on basis pairs.
/// Throws std::runtime_error naming the offending entries if the system is
/// underdetermined or inconsistent (which would signal an implementation
/// bug, not a property of the module).
GramMatrix gram_from_contract(const AdjointModule& m);

/// String-norm recursion, cross-multiplied to stay division-free:
/// (1 - v_i^{-2k-2}) (Z^{k+1},Z^{k+1}) = (1 - v_i^{-2p+2k}) (Z^k,Z^k)
/// for every string base (q = 0, p >= 1) and every k in [0, p-1].
VerificationReport check_string_norms(const AdjointModule& m, const GramMatrix& gram,
                                      const std::string& scope = "");

/// Every matrix entry of E_i, F_i and their divided powers (k <= 4) is a
/// bar-invariant Laurent polynomial. K matrices are intentionally excluded
/// (they are not bar-invariant).
VerificationReport check_bar_compatibility(const AdjointModule& m, const std::string& scope = "");

/// Both adjunction identities of the form contract, checked on all basis
/// pairs against a given Gram matrix:
///   (E_i x, x') = (x, v_i K_i^{i.i/2} F_i x'),
///   (F_i x, x') = (x, v_i K_i^{-i.i/2} E_i x').
VerificationReport check_form_adjunction(const AdjointModule& m, const GramMatrix& gram,
                                         const std::string& scope = "");

} // namespace qadj

#endif
