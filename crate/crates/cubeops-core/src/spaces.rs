//! Pointed spaces and the pointed maps between them.
//!
//! A [`Space`] value describes a pointed space whose points are exact data:
//! the n-sphere as `Iⁿ/∂Iⁿ`, the unit interval pointed at 0, finite pointed
//! sets, reduced suspensions, loop spaces, and wedge summands. Quotient
//! identifications are normalized at construction time — a suspension point
//! `[t, x]` with `t` on the boundary or `x` the basepoint *is* `Base`, so
//! derived `PartialEq` on point types is honest equality.
//!
//! Maps out of spheres ([`LoopMap`]) are closure-backed and compared with
//! the probe-set protocol from [`crate::probe`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::probe::probe_coords;
use crate::rational::Rational;

/// A pointed space with exactly comparable points.
pub trait Space: Clone + fmt::Debug + Send + Sync + 'static {
    type Point: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn base(&self) -> Self::Point;

    fn is_base(&self, p: &Self::Point) -> bool {
        *p == self.base()
    }
}

/// A point of `Sⁿ = Iⁿ/∂Iⁿ`: the collapsed boundary, or an interior point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpherePoint {
    Base,
    Interior(Vec<Rational>),
}

impl SpherePoint {
    /// Normalizing constructor: coordinates on or outside the boundary of
    /// the unit cube are the basepoint.
    pub fn from_coords(coords: Vec<Rational>) -> SpherePoint {
        if coords.iter().all(Rational::in_open_unit) {
            SpherePoint::Interior(coords)
        } else {
            SpherePoint::Base
        }
    }

    pub fn interior_coords(&self) -> Option<&[Rational]> {
        match self {
            SpherePoint::Base => None,
            SpherePoint::Interior(c) => Some(c),
        }
    }
}

/// The n-sphere presented as the unit cube with its boundary collapsed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sphere {
    pub dim: usize,
}

impl Sphere {
    pub fn new(dim: usize) -> Self {
        Sphere { dim }
    }

    pub fn point(&self, coords: Vec<Rational>) -> SpherePoint {
        debug_assert_eq!(coords.len(), self.dim);
        SpherePoint::from_coords(coords)
    }
}

impl Space for Sphere {
    type Point = SpherePoint;

    fn base(&self) -> SpherePoint {
        SpherePoint::Base
    }

    fn is_base(&self, p: &SpherePoint) -> bool {
        matches!(p, SpherePoint::Base)
    }
}

/// The unit interval `[0, 1]` pointed at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct UnitInterval;

impl Space for UnitInterval {
    type Point = Rational;

    fn base(&self) -> Rational {
        Rational::zero()
    }

    fn is_base(&self, p: &Rational) -> bool {
        p.is_zero()
    }
}

/// A finite pointed set `{0, …, size−1}` pointed at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinitePointed {
    pub size: usize,
}

impl FinitePointed {
    pub fn new(size: usize) -> Self {
        assert!(size >= 1, "a pointed set needs a basepoint");
        FinitePointed { size }
    }

    pub fn point(&self, i: usize) -> Result<usize> {
        if i < self.size {
            Ok(i)
        } else {
            Err(Error::IndexOutOfRange { index: i, arity: self.size })
        }
    }
}

impl Space for FinitePointed {
    type Point = usize;

    fn base(&self) -> usize {
        0
    }

    fn is_base(&self, p: &usize) -> bool {
        *p == 0
    }
}

/// A point of the n-fold reduced suspension `ΣⁿX = Sⁿ ∧ X`.
#[derive(Clone, PartialEq, Debug)]
pub enum SuspensionPoint<P> {
    Base,
    Pair { t: Vec<Rational>, x: P },
}

impl<P> SuspensionPoint<P> {
    pub fn pair(&self) -> Option<(&[Rational], &P)> {
        match self {
            SuspensionPoint::Base => None,
            SuspensionPoint::Pair { t, x } => Some((t, x)),
        }
    }
}

/// The n-fold reduced suspension of a space.
#[derive(Clone, Debug)]
pub struct Susp<X: Space> {
    pub n: usize,
    pub inner: X,
}

impl<X: Space> Susp<X> {
    pub fn new(n: usize, inner: X) -> Self {
        assert!(n >= 1);
        Susp { n, inner }
    }

    /// Normalizing constructor: `[t, x]` is `Base` when `t` hits the
    /// collapsed boundary or `x` is the basepoint of the inner space.
    pub fn point(&self, t: Vec<Rational>, x: X::Point) -> SuspensionPoint<X::Point> {
        debug_assert_eq!(t.len(), self.n);
        if self.inner.is_base(&x) || !t.iter().all(Rational::in_open_unit) {
            SuspensionPoint::Base
        } else {
            SuspensionPoint::Pair { t, x }
        }
    }
}

impl<X: Space> Space for Susp<X> {
    type Point = SuspensionPoint<X::Point>;

    fn base(&self) -> Self::Point {
        SuspensionPoint::Base
    }

    fn is_base(&self, p: &Self::Point) -> bool {
        matches!(p, SuspensionPoint::Base)
    }
}

/// A point of the r-fold wedge `X^∨r`: the common basepoint, or a point in
/// one summand. `arity` travels with the point so slot bookkeeping is total.
#[derive(Clone, PartialEq, Debug)]
pub enum WedgePoint<P> {
    Base,
    Slot { index: usize, arity: usize, point: P },
}

impl<P> WedgePoint<P> {
    pub fn slot(&self) -> Option<(usize, &P)> {
        match self {
            WedgePoint::Base => None,
            WedgePoint::Slot { index, point, .. } => Some((*index, point)),
        }
    }
}

/// Normalizing wedge-point constructor.
pub fn wedge_point<X: Space>(
    space: &X,
    arity: usize,
    index: usize,
    point: X::Point,
) -> WedgePoint<X::Point> {
    debug_assert!(index < arity);
    if space.is_base(&point) {
        WedgePoint::Base
    } else {
        WedgePoint::Slot { index, arity, point }
    }
}

/// `π_slot`: collapse summand `slot` to the basepoint and close the gap.
pub fn wedge_project<P>(slot: usize, w: &WedgePoint<P>) -> WedgePoint<P>
where
    P: Clone,
{
    match w {
        WedgePoint::Base => WedgePoint::Base,
        WedgePoint::Slot { index, arity, point } => {
            if *index == slot {
                WedgePoint::Base
            } else {
                WedgePoint::Slot {
                    index: if *index > slot { index - 1 } else { *index },
                    arity: arity - 1,
                    point: point.clone(),
                }
            }
        }
    }
}

/// `q_slot = π_0 ⋯ π̂_slot ⋯ π_{r−1}`: keep only summand `slot`.
pub fn wedge_select<P: Clone>(slot: usize, w: &WedgePoint<P>, base: P) -> P {
    match w {
        WedgePoint::Slot { index, point, .. } if *index == slot => point.clone(),
        _ => base,
    }
}

/// Relabel slots by `σ`: the summand at `index` moves to `σ(index)`, which
/// matches the configuration action `(c·σ)_j = c_{σ⁻¹(j)}`.
pub fn wedge_act<P: Clone>(sigma: &crate::operad::Permutation, w: &WedgePoint<P>) -> WedgePoint<P> {
    match w {
        WedgePoint::Base => WedgePoint::Base,
        WedgePoint::Slot { index, arity, point } => WedgePoint::Slot {
            index: sigma.apply(*index),
            arity: *arity,
            point: point.clone(),
        },
    }
}

/// A pointed map `Sⁿ → X`, i.e. a point of `ΩⁿX`. Closure-backed; equality
/// is the probe-set protocol.
pub struct LoopMap<X: Space> {
    n: usize,
    target: X,
    eval: Arc<dyn Fn(&SpherePoint) -> X::Point + Send + Sync>,
    label: String,
}

impl<X: Space> Clone for LoopMap<X> {
    fn clone(&self) -> Self {
        LoopMap {
            n: self.n,
            target: self.target.clone(),
            eval: Arc::clone(&self.eval),
            label: self.label.clone(),
        }
    }
}

impl<X: Space> LoopMap<X> {
    /// Wraps a closure as a pointed map: the basepoint is always sent to the
    /// basepoint regardless of what the closure would do.
    pub fn from_fn(
        n: usize,
        target: X,
        label: impl Into<String>,
        f: impl Fn(&[Rational]) -> X::Point + Send + Sync + 'static,
    ) -> Self {
        let base_target = target.clone();
        LoopMap {
            n,
            target,
            eval: Arc::new(move |p| match p {
                SpherePoint::Base => base_target.base(),
                SpherePoint::Interior(coords) => f(coords),
            }),
            label: label.into(),
        }
    }

    pub fn constant(n: usize, target: X) -> Self {
        let t = target.clone();
        LoopMap::from_fn(n, target, "constant", move |_| t.base())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> &X {
        &self.target
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, p: &SpherePoint) -> X::Point {
        (self.eval)(p)
    }

    pub fn eval_coords(&self, coords: Vec<Rational>) -> X::Point {
        self.eval(&SpherePoint::from_coords(coords))
    }

    /// Is this loop the constant loop on the probe set?
    pub fn is_trivial(&self) -> bool {
        probe_coords(self.n)
            .into_iter()
            .all(|c| self.target.is_base(&self.eval(&SpherePoint::Interior(c))))
    }

    /// Postcompose with a pointed map.
    pub fn postcompose<Y: Space>(&self, phi: &PointedMap<X, Y>) -> LoopMap<Y> {
        let inner = self.clone();
        let phi = phi.clone();
        LoopMap {
            n: self.n,
            target: phi.target().clone(),
            label: format!("{} . {}", phi.label(), self.label),
            eval: Arc::new(move |p| phi.apply(&inner.eval(p))),
        }
    }
}

impl<X: Space> PartialEq for LoopMap<X> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && probe_coords(self.n).into_iter().all(|c| {
                let p = SpherePoint::Interior(c);
                self.eval(&p) == other.eval(&p)
            })
    }
}

impl<X: Space> fmt::Debug for LoopMap<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopMap(n={}, {})", self.n, self.label)
    }
}

/// The n-fold loop space `ΩⁿX`, pointed at the constant loop.
#[derive(Clone, Debug)]
pub struct LoopSpace<X: Space> {
    pub n: usize,
    pub target: X,
}

impl<X: Space> LoopSpace<X> {
    pub fn new(n: usize, target: X) -> Self {
        assert!(n >= 1);
        LoopSpace { n, target }
    }
}

impl<X: Space> Space for LoopSpace<X> {
    type Point = LoopMap<X>;

    fn base(&self) -> LoopMap<X> {
        LoopMap::constant(self.n, self.target.clone())
    }

    fn is_base(&self, p: &LoopMap<X>) -> bool {
        p.is_trivial()
    }
}

/// The identity `Sⁿ → Sⁿ` as a loop.
pub fn identity_loop(sphere: &Sphere) -> LoopMap<Sphere> {
    LoopMap::from_fn(sphere.dim, *sphere, "identity", |coords| {
        SpherePoint::Interior(coords.to_vec())
    })
}

/// The generator loop `s ↦ [s, x]` of `Ωⁿ ΣⁿX` (the unit `η` at `x`).
pub fn generator_loop<X: Space>(susp: &Susp<X>, x: X::Point) -> LoopMap<Susp<X>> {
    let susp2 = susp.clone();
    LoopMap::from_fn(susp.n, susp.clone(), "generator", move |coords| {
        susp2.point(coords.to_vec(), x.clone())
    })
}

/// The bar loop `ℓ̄(s) = [s, ℓ]` of `Ωⁿ ΣⁿΩⁿX`.
pub fn bar_loop<X: Space>(l: &LoopMap<X>) -> LoopMap<Susp<LoopSpace<X>>> {
    let susp = Susp::new(l.dim(), LoopSpace::new(l.dim(), l.target().clone()));
    let susp2 = susp.clone();
    let l = l.clone();
    LoopMap::from_fn(l.dim(), susp, format!("bar({})", l.label()), move |coords| {
        susp2.point(coords.to_vec(), l.clone())
    })
}

/// A pointed map `X → Y`. `base_reflecting` declares that *only* the
/// basepoint maps to the basepoint; it is trusted, not checked (it cannot be
/// decided from finitely many evaluations), and gates exact-support
/// propagation through postcomposition.
pub struct PointedMap<X: Space, Y: Space> {
    source: X,
    target: Y,
    map: Arc<dyn Fn(&X::Point) -> Y::Point + Send + Sync>,
    base_reflecting: bool,
    label: String,
}

impl<X: Space, Y: Space> Clone for PointedMap<X, Y> {
    fn clone(&self) -> Self {
        PointedMap {
            source: self.source.clone(),
            target: self.target.clone(),
            map: Arc::clone(&self.map),
            base_reflecting: self.base_reflecting,
            label: self.label.clone(),
        }
    }
}

impl<X: Space> PointedMap<X, X> {
    pub fn identity(space: X) -> PointedMap<X, X> {
        PointedMap {
            source: space.clone(),
            target: space,
            map: Arc::new(|p: &X::Point| p.clone()),
            base_reflecting: true,
            label: "identity".into(),
        }
    }
}

impl<X: Space, Y: Space> PointedMap<X, Y> {
    /// Builds a pointed map, verifying that the basepoint is preserved.
    pub fn new(
        source: X,
        target: Y,
        label: impl Into<String>,
        base_reflecting: bool,
        f: impl Fn(&X::Point) -> Y::Point + Send + Sync + 'static,
    ) -> Result<Self> {
        if !target.is_base(&f(&source.base())) {
            return Err(Error::NotPointed);
        }
        Ok(PointedMap {
            source,
            target,
            map: Arc::new(f),
            base_reflecting,
            label: label.into(),
        })
    }

    pub fn source(&self) -> &X {
        &self.source
    }

    pub fn target(&self) -> &Y {
        &self.target
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_base_reflecting(&self) -> bool {
        self.base_reflecting
    }

    pub fn apply(&self, p: &X::Point) -> Y::Point {
        if self.source.is_base(p) {
            self.target.base()
        } else {
            (self.map)(p)
        }
    }
}

impl<X: Space, Y: Space> fmt::Debug for PointedMap<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointedMap({})", self.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::Permutation;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn sphere_points_normalize_boundary() {
        let s = Sphere::new(2);
        assert_eq!(s.point(vec![q(0, 1), q(1, 2)]), SpherePoint::Base);
        assert_eq!(s.point(vec![q(1, 1), q(1, 2)]), SpherePoint::Base);
        assert!(matches!(s.point(vec![q(1, 3), q(1, 2)]), SpherePoint::Interior(_)));
        assert!(s.is_base(&SpherePoint::Base));
    }

    #[test]
    fn suspension_points_normalize() {
        let s = Susp::new(1, FinitePointed::new(3));
        assert_eq!(s.point(vec![q(1, 2)], 0), SuspensionPoint::Base);
        assert_eq!(s.point(vec![q(0, 1)], 2), SuspensionPoint::Base);
        assert_eq!(
            s.point(vec![q(1, 2)], 2),
            SuspensionPoint::Pair { t: vec![q(1, 2)], x: 2 }
        );
    }

    #[test]
    fn wedge_ops() {
        let space = UnitInterval;
        let w = wedge_point(&space, 3, 1, q(1, 2));
        assert_eq!(w.slot(), Some((1, &q(1, 2))));
        assert_eq!(wedge_point(&space, 3, 1, q(0, 1)), WedgePoint::Base);
        // π_1 kills it, π_0 shifts it down.
        assert_eq!(wedge_project(1, &w), WedgePoint::Base);
        assert_eq!(
            wedge_project(0, &w),
            WedgePoint::Slot { index: 0, arity: 2, point: q(1, 2) }
        );
        assert_eq!(
            wedge_project(2, &w),
            WedgePoint::Slot { index: 1, arity: 2, point: q(1, 2) }
        );
        assert_eq!(wedge_select(1, &w, q(0, 1)), q(1, 2));
        assert_eq!(wedge_select(0, &w, q(0, 1)), q(0, 1));
        let sigma = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(
            wedge_act(&sigma, &w),
            WedgePoint::Slot { index: 2, arity: 3, point: q(1, 2) }
        );
    }

    #[test]
    fn loop_equality_is_probewise() {
        let sphere = Sphere::new(1);
        let id = identity_loop(&sphere);
        let id2 = LoopMap::from_fn(1, sphere, "same as identity", |c| {
            SpherePoint::Interior(c.to_vec())
        });
        assert_eq!(id, id2);
        let constant = LoopMap::constant(1, sphere);
        assert_ne!(id, constant);
        assert!(constant.is_trivial());
        assert!(!id.is_trivial());
        assert_eq!(id.eval(&SpherePoint::Base), SpherePoint::Base);
    }

    #[test]
    fn generator_loops_detect_base() {
        let susp = Susp::new(1, FinitePointed::new(3));
        let gen = generator_loop(&susp, 1);
        assert!(!gen.is_trivial());
        assert_eq!(
            gen.eval_coords(vec![q(1, 3)]),
            SuspensionPoint::Pair { t: vec![q(1, 3)], x: 1 }
        );
        let gen_base = generator_loop(&susp, 0);
        assert!(gen_base.is_trivial());
    }

    #[test]
    fn bar_loop_wraps_its_argument() {
        let sphere = Sphere::new(1);
        let id = identity_loop(&sphere);
        let bar = bar_loop(&id);
        match bar.eval_coords(vec![q(1, 2)]) {
            SuspensionPoint::Pair { t, x } => {
                assert_eq!(t, vec![q(1, 2)]);
                assert_eq!(x, id);
            }
            SuspensionPoint::Base => panic!("bar loop should be non-base at 1/2"),
        }
        let constant = LoopMap::constant(1, sphere);
        // [s, constant] normalizes to Base, so bar(constant) is trivial.
        assert!(bar_loop(&constant).is_trivial());
    }

    #[test]
    fn pointed_maps_must_be_pointed() {
        let bad = PointedMap::new(UnitInterval, UnitInterval, "shift", false, |x| {
            x + &q(1, 4)
        });
        assert!(matches!(bad, Err(Error::NotPointed)));
        let halve =
            PointedMap::new(UnitInterval, UnitInterval, "halve", true, |x| x * q(1, 2)).unwrap();
        assert_eq!(halve.apply(&q(1, 2)), q(1, 4));
        assert_eq!(halve.apply(&q(0, 1)), q(0, 1));
    }
}
