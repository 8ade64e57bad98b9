//! The fold algebra on a pointed space, convolution of pointed maps along
//! a coalgebra structure, and the classical action of little cubes on
//! n-fold loop spaces recovered as the special case
//! `Sⁿ → (Sⁿ)^∨r → X^∨r → X`.

use crate::coalgebra::{nabla_sphere, CoalgebraStructure};
use crate::operad::Configuration;
use crate::spaces::{wedge_point, LoopMap, PointedMap, Space, SpherePoint, WedgePoint};

/// The canonical folds `μ_r : X^∨r → X`, all slots collapsed onto `X`.
/// Satisfies `μ_r ∘ (slot inclusion) = id` and is invariant under slot
/// permutations, making every pointed space a commutative fold-algebra.
#[derive(Clone, Debug)]
pub struct FoldAlgebra<X: Space> {
    space: X,
}

impl<X: Space> FoldAlgebra<X> {
    pub fn new(space: X) -> Self {
        FoldAlgebra { space }
    }

    pub fn space(&self) -> &X {
        &self.space
    }

    /// `μ_r` for the arity carried by the point.
    pub fn fold(&self, w: &WedgePoint<X::Point>) -> X::Point {
        match w {
            WedgePoint::Base => self.space.base(),
            WedgePoint::Slot { point, .. } => point.clone(),
        }
    }
}

/// The convolution of `f₁, …, f_r` along `θ`:
/// `x ↦ μ_r((f₁ ∨ … ∨ f_r)(Δ_r(θ, x)))`.
/// One map per slot and matching dimensions are preconditions.
pub fn convolution<'a, X, Y, D>(
    theta: &'a Configuration,
    structure: &'a D,
    maps: &'a [PointedMap<X, Y>],
    fold: &'a FoldAlgebra<Y>,
) -> impl Fn(&X::Point) -> Y::Point + 'a
where
    X: Space,
    Y: Space,
    D: CoalgebraStructure<X> + ?Sized,
{
    assert_eq!(maps.len(), theta.arity(), "one pointed map per slot");
    assert_eq!(structure.dim(), theta.dim(), "structure/configuration dimension");
    move |x| {
        let mapped = match structure.delta(theta, x) {
            WedgePoint::Base => WedgePoint::Base,
            WedgePoint::Slot { index, arity, point } => {
                wedge_point(fold.space(), arity, index, maps[index].apply(&point))
            }
        };
        fold.fold(&mapped)
    }
}

/// The action of a little-cubes configuration on loops:
/// `may_action(θ, ℓ⃗)(s) = ℓ_i(θ_i⁻¹(s))` on the cube covering `s`, base
/// elsewhere. One loop per slot (at least one, to name the target space)
/// and matching dimensions are preconditions.
pub fn may_action<X: Space>(theta: &Configuration, loops: &[LoopMap<X>]) -> LoopMap<X> {
    assert_eq!(loops.len(), theta.arity(), "one loop per slot");
    assert!(!loops.is_empty(), "the empty action is the constant loop; build it directly");
    let n = theta.dim();
    for l in loops {
        assert_eq!(l.dim(), n, "loop/configuration dimension");
    }
    let target = loops[0].target().clone();
    let base = target.clone();
    let theta = theta.clone();
    let loops = loops.to_vec();
    LoopMap::from_fn(n, target, "may-action", move |s| {
        match nabla_sphere(&theta, &SpherePoint::Interior(s.to_vec())) {
            WedgePoint::Base => base.base(),
            WedgePoint::Slot { index, point, .. } => loops[index].eval(&point),
        }
    })
}
