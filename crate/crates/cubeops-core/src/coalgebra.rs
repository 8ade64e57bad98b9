//! Coalgebras over the little cubes operad in their coend presentation: a
//! family of structure maps `Δ_r : Conf_r × X → X^∨r`, equivariant and
//! compatible with dropping cubes. Suspensions carry the canonical such
//! structure `∇`, and the presentation is interchangeable with the
//! comonadic one (a single map `X → C_n(X)`) by [`coend_to_comonadic`] /
//! [`comonadic_to_coend`].

use std::fmt;
use std::marker::PhantomData;

use crate::comonad::CnElem;
use crate::operad::Configuration;
use crate::spaces::{
    wedge_select, Space, Sphere, SpherePoint, SuspensionPoint, Susp, WedgePoint,
};

/// A coend-style coalgebra structure on `X`: one splitting map per arity.
///
/// Laws (enforced by the test suite, not the trait):
/// equivariance `Δ_r(θ·σ, x) = σ·Δ_r(θ, x)` and restriction compatibility
/// `π_i ∘ Δ_r(θ, −) = Δ_{r−1}(d_i θ, −)`, where `π_i` collapses the `i`-th
/// wedge summand and `d_i` drops the `i`-th cube.
pub trait CoalgebraStructure<X: Space> {
    fn dim(&self) -> usize;

    /// `Δ_r(θ, x)` with `r = θ.arity()`.
    fn delta(&self, theta: &Configuration, x: &X::Point) -> WedgePoint<X::Point>;
}

/// The sphere splitting `∇`: `t` lands in the summand of the unique cube
/// whose interior contains it, rescaled by that cube's inverse; points
/// covered by no cube interior go to the basepoint.
pub fn nabla_sphere(theta: &Configuration, p: &SpherePoint) -> WedgePoint<SpherePoint> {
    let t = match p.interior_coords() {
        None => return WedgePoint::Base,
        Some(t) => t,
    };
    if t.len() != theta.dim() {
        return WedgePoint::Base;
    }
    let mut hit = None;
    for (i, cube) in theta.cubes().iter().enumerate() {
        if cube.contains_interior(t) {
            if hit.is_some() {
                // Unreachable for configurations with disjoint interiors.
                return WedgePoint::Base;
            }
            hit = Some(i);
        }
    }
    match hit {
        None => WedgePoint::Base,
        Some(i) => WedgePoint::Slot {
            index: i,
            arity: theta.arity(),
            point: SpherePoint::Interior(theta.cube(i).preimage(t)),
        },
    }
}

/// The suspension splitting: `∇[t, x] = [θ_i⁻¹(t), x]` in the summand of
/// the unique cube containing `t`. Implemented literally as the
/// factorization through [`nabla_sphere`] smashed with the identity of `X`.
pub fn nabla_suspension<P: Clone>(
    theta: &Configuration,
    p: &SuspensionPoint<P>,
) -> WedgePoint<SuspensionPoint<P>> {
    let (t, x) = match p.pair() {
        None => return WedgePoint::Base,
        Some(pair) => pair,
    };
    match nabla_sphere(theta, &SpherePoint::Interior(t.to_vec())) {
        WedgePoint::Base => WedgePoint::Base,
        WedgePoint::Slot { index, arity, point } => {
            let coords = point
                .interior_coords()
                .expect("sphere splitting lands in cube interiors")
                .to_vec();
            WedgePoint::Slot {
                index,
                arity,
                point: SuspensionPoint::Pair { t: coords, x: x.clone() },
            }
        }
    }
}

/// The pinch comultiplication: `∇` along the two half cubes of axis `0`.
pub fn pinch<P: Clone>(dim: usize, p: &SuspensionPoint<P>) -> WedgePoint<SuspensionPoint<P>> {
    nabla_suspension(&Configuration::halves(dim), p)
}

/// `Sⁿ` with its `∇` coalgebra structure.
#[derive(Clone, Debug)]
pub struct SphereCoalgebra {
    n: usize,
}

impl SphereCoalgebra {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        SphereCoalgebra { n }
    }

    pub fn space(&self) -> Sphere {
        Sphere::new(self.n)
    }
}

impl CoalgebraStructure<Sphere> for SphereCoalgebra {
    fn dim(&self) -> usize {
        self.n
    }

    fn delta(&self, theta: &Configuration, p: &SpherePoint) -> WedgePoint<SpherePoint> {
        debug_assert_eq!(theta.dim(), self.n);
        nabla_sphere(theta, p)
    }
}

/// `ΣⁿY` with its `∇` coalgebra structure.
#[derive(Clone, Debug)]
pub struct SuspensionCoalgebra<Y: Space> {
    susp: Susp<Y>,
}

impl<Y: Space> SuspensionCoalgebra<Y> {
    pub fn new(susp: Susp<Y>) -> Self {
        SuspensionCoalgebra { susp }
    }

    pub fn space(&self) -> &Susp<Y> {
        &self.susp
    }
}

impl<Y: Space> CoalgebraStructure<Susp<Y>> for SuspensionCoalgebra<Y> {
    fn dim(&self) -> usize {
        self.susp.n
    }

    fn delta(
        &self,
        theta: &Configuration,
        p: &SuspensionPoint<Y::Point>,
    ) -> WedgePoint<SuspensionPoint<Y::Point>> {
        debug_assert_eq!(theta.dim(), self.susp.n);
        nabla_suspension(theta, p)
    }
}

/// Repackages a coend-style structure as the comonadic structure map at
/// `x`: the element `c ↦ fold₁(Δ₁(c, x))`, with the basepoint going to the
/// trivial element. Arity one needs no fold beyond selecting the slot.
pub fn coend_to_comonadic<X, D>(space: &X, structure: &D, x: &X::Point) -> CnElem<X>
where
    X: Space,
    D: CoalgebraStructure<X> + Clone + Send + Sync + 'static,
{
    let n = structure.dim();
    if space.is_base(x) {
        return CnElem::trivial(n, space.clone());
    }
    let d = structure.clone();
    let x = x.clone();
    let inner = space.clone();
    CnElem::custom(n, space.clone(), "coend-structure", None, move |c| {
        let w = d.delta(&Configuration::single(c.clone()), &x);
        wedge_select(0, &w, inner.base())
    })
}

/// A coend-style structure derived from a comonadic structure map:
/// `Δ_r(θ, x)` is the expansion of `structure(x)` along `θ`.
pub struct ComonadicCoend<X: Space, F> {
    n: usize,
    structure: F,
    _space: PhantomData<fn(&X)>,
}

pub fn comonadic_to_coend<X, F>(n: usize, structure: F) -> ComonadicCoend<X, F>
where
    X: Space,
    F: Fn(&X::Point) -> CnElem<X>,
{
    assert!(n >= 1);
    ComonadicCoend { n, structure, _space: PhantomData }
}

impl<X: Space, F> fmt::Debug for ComonadicCoend<X, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ComonadicCoend").field("n", &self.n).finish()
    }
}

impl<X: Space, F: Clone> Clone for ComonadicCoend<X, F> {
    fn clone(&self) -> Self {
        ComonadicCoend { n: self.n, structure: self.structure.clone(), _space: PhantomData }
    }
}

impl<X, F> CoalgebraStructure<X> for ComonadicCoend<X, F>
where
    X: Space,
    F: Fn(&X::Point) -> CnElem<X>,
{
    fn dim(&self) -> usize {
        self.n
    }

    fn delta(&self, theta: &Configuration, x: &X::Point) -> WedgePoint<X::Point> {
        (self.structure)(x)
            .expand_to_sequence(theta.arity(), theta)
            .expect("comonadic coalgebra structures split uniquely")
    }
}
