#pragma once

#include "jumploci/cup_data.hpp"
#include "jumploci/free_complex.hpp"

#include <vector>

namespace jumploci {

/// Finite square-zero model of a parameter family: graded spaces M^0..M^top
/// with degree-one action matrices b_nu whose generic combination
/// sum x_nu b_nu squares to zero identically. Instantiating the x's gives the
/// fiber differentials; keeping them symbolic gives the polynomial family.
class AlgebraModel {
public:
    /// Exterior algebra on g generators acting on itself by left wedge.
    static AlgebraModel exterior(std::size_t g);

    /// General constructor; verifies the square-zero identity symbolically
    /// (all anticommutators of the b's vanish). `self_acting` marks models
    /// whose module is the algebra itself (M^0 one-dimensional, M^1 = the
    /// direction space), which is what obstruction pairings need.
    static AlgebraModel from_action(std::vector<std::size_t> dims,
                                    std::vector<std::vector<QMatrix>> action, bool self_acting);

    std::size_t q() const { return q_; }
    int top() const { return static_cast<int>(dims_.size()) - 1; }
    bool self_acting() const { return self_acting_; }
    std::size_t dim(int degree) const;
    /// b_nu as a map M^degree -> M^{degree+1}; zero-sized outside the support.
    QMatrix action(std::size_t nu, int degree) const;

    /// sum p_nu b_nu at degree k.
    QMatrix fiber_diff(const RationalPoint& p, int degree) const;
    bool on_cone(const RationalPoint& p) const;

    /// The polynomial family over Q[x_1..x_q] with differential sum x_nu b_nu.
    FreeComplex family() const;

private:
    AlgebraModel(std::size_t q, std::vector<std::size_t> dims,
                 std::vector<std::vector<QMatrix>> action, bool self_acting)
        : q_(q), dims_(std::move(dims)), b_(std::move(action)), self_acting_(self_acting) {}

    std::size_t q_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<QMatrix>> b_; // b_[nu][k]
    bool self_acting_;
};

/// Fiber cohomology at one degree with a fixed splitting: ambient space =
/// image + representatives + complement-of-kernel, all bases pivot-canonical.
struct FiberDecomposition {
    std::size_t ambient = 0;
    std::vector<Vec> reps;
    Subspace image;
    Subspace kernel;
    std::vector<Vec> complement; // completes the kernel to the ambient space

    std::size_t h_dim() const { return reps.size(); }
    /// Coordinates of a closed vector in the representative basis mod image.
    Vec class_of(const Vec& v) const;
    /// Projection of an arbitrary vector onto the representative block along
    /// image and complement; the finite stand-in for a harmonic projection.
    Vec project_class(const Vec& v) const;
};

FiberDecomposition fiber_decomposition(const AlgebraModel& model, const RationalPoint& p,
                                       int degree);

/// Cup data of the fiber at p around degree i: cohomologies with fixed echelon
/// representatives, the induced direction actions, and (for self-acting
/// models) the obstruction pairing through the fixed splitting.
CupData fiber_cup_data(const AlgebraModel& model, const RationalPoint& p, int i);

} // namespace jumploci
