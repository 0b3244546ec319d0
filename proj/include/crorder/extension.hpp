#pragma once

#include "crorder/linalg.hpp"
#include "crorder/order.hpp"

#include <string>
#include <vector>

namespace crorder {

/// Finite-dimensional Lie algebra over Q given by structure constants, with two
/// designated subspaces q and qbar.
class ExactLieAlgebra {
public:
    explicit ExactLieAlgebra(std::vector<std::string> labels);

    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Sets [b_i, b_j] = value and [b_j, b_i] = -value.
    void set_bracket(std::size_t i, std::size_t j, const Vector& value);
    const Vector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Vector bracket(const Vector& x, const Vector& y) const;
    Vector basis_vector(std::size_t i) const;

    const Subspace& q() const noexcept { return q_; }
    const Subspace& qbar() const noexcept { return qbar_; }
    void set_q(Subspace q) { q_ = std::move(q); }
    void set_qbar(Subspace qbar) { qbar_ = std::move(qbar); }

    bool antisymmetric() const;
    /// Jacobi identity on all basis triples.
    bool jacobi() const;
    bool is_subalgebra(const Subspace& s) const;
    /// Smallest subalgebra containing s.
    Subspace generated_subalgebra(const Subspace& s) const;

    /// Block sum; q and qbar are the direct sums of the factors'.
    static ExactLieAlgebra direct_sum(const ExactLieAlgebra& a, const ExactLieAlgebra& b);

private:
    std::vector<std::string> labels_;
    std::vector<Vector> table_;
    Subspace q_;
    Subspace qbar_;
};

/// The irreducible sl2-module of highest weight k, basis v_0..v_k, v_h of weight k - 2h.
struct Sl2Module {
    enum class Convention {
        Lowering,  ///< F v_h = v_{h+1}, E v_h = h(k-h+1) v_{h-1}
        Raising,   ///< E v_h = v_{h-1}, F v_h = (h+1)(k-h) v_{h+1}
    };

    int k = 0;
    Convention convention = Convention::Lowering;

    int dim() const { return k + 1; }
    int weight(int h) const { return k - 2 * h; }
    /// Coefficient c with E v_h = c v_{h-1} (0 for h = 0).
    Rational e_coeff(int h) const;
    /// Coefficient c with F v_h = c v_{h+1} (0 for h = k).
    Rational f_coeff(int h) const;
    /// [E,F] acts as H on every v_h.
    bool satisfies_axioms() const;
};

/// sl2 semidirect V_k with q' = span(H, F) + V^-, qbar' = span(H, E) + V^+.
/// Basis order: E, H, F, v_0, ..., v_k.
struct LeeExtension {
    Sl2Module module;
    ExactLieAlgebra algebra;

    static constexpr std::size_t kE = 0, kH = 1, kF = 2;
    static std::size_t v(int h) { return 3 + static_cast<std::size_t>(h); }
};

/// Throws InternalInconsistency if any structural invariant fails. k >= 0.
LeeExtension build_lee_extension(int k, Sl2Module::Convention convention = Sl2Module::Convention::Lowering);

struct SubspaceChainReport {
    std::vector<Subspace> chain;
    Order order = Order(0);
    std::size_t stabilized_at = 0;
    std::vector<std::size_t> dims() const;
};

/// q^0 = q, q^p = {Z in q^{p-1} | [Z, qbar] in q^{p-1} + qbar}.
SubspaceChainReport generic_levi_chain(const ExactLieAlgebra& alg);
/// H^0 = q + qbar, H^p = (q n qbar) + {Z in H^{p-1} | [Z, H^0] in H^{p-1}}.
SubspaceChainReport generic_contact_chain(const ExactLieAlgebra& alg);

struct CrDimCodim {
    int cr_dim = 0;
    int cr_codim = 0;
};

/// (dim q - dim q n qbar, dim g - dim(q + qbar)).
CrDimCodim generic_cr_dim_codim(const ExactLieAlgebra& alg);

struct ExtensionCrDimCodim : CrDimCodim {
    bool even_k = true;  ///< false: outside the hypothesis k = 2q of the order formulas
};

ExtensionCrDimCodim extension_cr_dim_codim(const LeeExtension& ext);

/// q + qbar generates the whole algebra.
bool generic_fundamental(const ExactLieAlgebra& alg);

}  // namespace crorder
