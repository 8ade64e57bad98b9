//! The little-cubes comonad on pointed spaces.
//!
//! An element of `C_n(X)` is a pointed map from arity-1 cubes to `X`,
//! represented here as a symbolic term ([`CnElem`]) that can always be
//! evaluated exactly. The closed constructors carry enough structure for
//! exact cubical-support computation; [`Term::Custom`] is the escape hatch
//! and falls back to the support oracle.
//!
//! Equality of elements is never structural: two elements are equal when
//! they evaluate equally on the probe-cube catalogue of [`crate::probe`]
//! (distinct terms denote equal maps, e.g. a precomposition with the
//! identity cube).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::Rect;
use crate::operad::{AbstractOperad, Configuration, LittleCube};
use crate::probe::{probe_cubes, PROBE_SEED};
use crate::rational::Rational;
use crate::spaces::{LoopMap, PointedMap, Space, SpherePoint, UnitInterval, WedgePoint};

/// Exact normal form of a cubical support, used to decide whether support
/// can be computed symbolically. `Hinted` is a constructor-supplied exact
/// rectangle; `Opaque` means only the sampling oracle can answer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SupportNf {
    /// The element is base everywhere; support is empty.
    Empty,
    /// Support is the single interior point, and the element evaluates as a
    /// peaked element there (base unless the point is interior to the cube).
    Point(Vec<Rational>),
    /// n = 1: the element is non-base exactly on cubes of width > `a`.
    WidthThreshold { a: Rational },
    /// n = 1: a width-threshold element pushed through the expansion
    /// homotopy at `time`; still exactly resolvable.
    ExpandedWidthThreshold { a: Rational, time: Rational },
    /// Exact support promised by the constructor of a custom element.
    Hinted(Rect),
    /// No symbolic rule applies.
    Opaque,
}

enum Term<X: Space> {
    Trivial,
    Peaked {
        t: Vec<Rational>,
        l: LoopMap<X>,
    },
    /// n = 1 only, built through [`CnElem::threshold`]: evaluates to
    /// `embed(width(c) − a)` when `width(c) > a`, else base. `embed` is the
    /// identity on the unit interval (base-reflecting by construction).
    Threshold {
        a: Rational,
        embed: Arc<dyn Fn(&Rational) -> X::Point + Send + Sync>,
    },
    Precomposed {
        base: Box<CnElem<X>>,
        cube: LittleCube,
    },
    /// Postcomposition with a pointed map, with the original element's
    /// support normal form frozen at construction time.
    PostMapped {
        eval: Arc<dyn Fn(&LittleCube) -> X::Point + Send + Sync>,
        base_support: SupportNf,
        base_reflecting: bool,
        label: String,
    },
    /// The expansion homotopy at a fixed time. `center` is the support
    /// center (interior coords), or `None` when the support is empty, in
    /// which case the term evaluates exactly as its base does.
    Expanded {
        base: Box<CnElem<X>>,
        time: Rational,
        center: Option<Vec<Rational>>,
    },
    Custom {
        eval: Arc<dyn Fn(&LittleCube) -> X::Point + Send + Sync>,
        support_hint: Option<Rect>,
        label: String,
    },
}

impl<X: Space> Clone for Term<X> {
    fn clone(&self) -> Self {
        match self {
            Term::Trivial => Term::Trivial,
            Term::Peaked { t, l } => Term::Peaked { t: t.clone(), l: l.clone() },
            Term::Threshold { a, embed } => {
                Term::Threshold { a: a.clone(), embed: Arc::clone(embed) }
            }
            Term::Precomposed { base, cube } => {
                Term::Precomposed { base: base.clone(), cube: cube.clone() }
            }
            Term::PostMapped { eval, base_support, base_reflecting, label } => Term::PostMapped {
                eval: Arc::clone(eval),
                base_support: base_support.clone(),
                base_reflecting: *base_reflecting,
                label: label.clone(),
            },
            Term::Expanded { base, time, center } => Term::Expanded {
                base: base.clone(),
                time: time.clone(),
                center: center.clone(),
            },
            Term::Custom { eval, support_hint, label } => Term::Custom {
                eval: Arc::clone(eval),
                support_hint: support_hint.clone(),
                label: label.clone(),
            },
        }
    }
}

/// A symbolic element of `C_n(X)`.
#[derive(Clone)]
pub struct CnElem<X: Space> {
    n: usize,
    space: X,
    term: Term<X>,
}

impl<X: Space> CnElem<X> {
    /// The element that is base on every cube.
    pub fn trivial(n: usize, space: X) -> Self {
        assert!(n >= 1);
        CnElem { n, space, term: Term::Trivial }
    }

    /// The peaked element `c ↦ ℓ(c⁻¹(t))` gated on `t` interior to the
    /// image of `c`; this is `α[t, ℓ]`.
    pub fn peaked(t: Vec<Rational>, l: LoopMap<X>) -> Result<Self> {
        if t.len() != l.dim() {
            return Err(Error::DimMismatch { expected: l.dim(), got: t.len() });
        }
        if let Some(bad) = t.iter().find(|c| !c.in_open_unit()) {
            return Err(Error::PointNotInterior(bad.clone()));
        }
        Ok(CnElem {
            n: l.dim(),
            space: l.target().clone(),
            term: Term::Peaked { t, l },
        })
    }

    /// Precompose with a fixed cube: `d ↦ self(cube ∘ d)`.
    pub fn precompose(&self, cube: &LittleCube) -> Result<Self> {
        if cube.dim() != self.n {
            return Err(Error::DimMismatch { expected: self.n, got: cube.dim() });
        }
        Ok(CnElem {
            n: self.n,
            space: self.space.clone(),
            term: Term::Precomposed { base: Box::new(self.clone()), cube: cube.clone() },
        })
    }

    /// `Δ(f)(c)`: the comultiplication, curried at the outer cube. Purely a
    /// precomposition — evaluating the result at `d` gives `f(c ∘ d)`.
    pub fn comultiply(&self, cube: &LittleCube) -> Result<Self> {
        self.precompose(cube)
    }

    /// An arbitrary evaluable element. `support_hint`, when given, promises
    /// the exact cubical support; without it, support questions go to the
    /// oracle. Property (D) is not checked here — the law suite and
    /// [`CnElem::expand_to_sequence`] keep custom elements honest.
    pub fn custom(
        n: usize,
        space: X,
        label: impl Into<String>,
        support_hint: Option<Rect>,
        eval: impl Fn(&LittleCube) -> X::Point + Send + Sync + 'static,
    ) -> Self {
        assert!(n >= 1);
        CnElem {
            n,
            space,
            term: Term::Custom { eval: Arc::new(eval), support_hint, label: label.into() },
        }
    }

    /// Internal constructor for the expansion homotopy; `center` must be
    /// the center of the base's cubical support (interior coordinates) or
    /// `None` for empty support. Public entry point: `homotopy_h`.
    pub(crate) fn expanded(
        base: CnElem<X>,
        time: Rational,
        center: Option<Vec<Rational>>,
    ) -> Self {
        debug_assert!(!time.is_negative() && time <= Rational::one());
        if let Some(p) = &center {
            debug_assert!(p.iter().all(Rational::in_open_unit));
        }
        CnElem {
            n: base.n,
            space: base.space.clone(),
            term: Term::Expanded { base: Box::new(base), time, center },
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &X {
        &self.space
    }

    /// Evaluate at a cube. Panics on dimension mismatch (evaluation is the
    /// one hot path where a `Result` would poison every caller).
    pub fn eval(&self, c: &LittleCube) -> X::Point {
        assert_eq!(c.dim(), self.n, "cube dimension mismatch in eval");
        match &self.term {
            Term::Trivial => self.space.base(),
            Term::Peaked { t, l } => {
                if c.contains_interior(t) {
                    l.eval(&SpherePoint::Interior(c.preimage(t)))
                } else {
                    self.space.base()
                }
            }
            Term::Threshold { a, embed } => {
                let w = c.scale(0);
                if w > a {
                    embed(&(w - a))
                } else {
                    self.space.base()
                }
            }
            Term::Precomposed { base, cube } => base.eval(&cube.compose(c)),
            Term::PostMapped { eval, .. } => eval(c),
            Term::Expanded { base, time, center } => match center {
                None => base.eval(c),
                Some(p) => {
                    if c.contains_closed(p) {
                        let path = crate::approximation::expansion(c, p)
                            .expect("center lies in the closed image");
                        base.eval(&path.at(time))
                    } else {
                        self.space.base()
                    }
                }
            },
            Term::Custom { eval, .. } => eval(c),
        }
    }

    /// `ε_X(f) = f(id)`: evaluation at the identity cube.
    pub fn counit(&self) -> X::Point {
        self.eval(&LittleCube::identity(self.n))
    }

    /// Is the element base on every probe cube? This is the protocol's
    /// notion of "trivial" (equality with [`CnElem::trivial`]).
    pub fn is_trivial_probe(&self) -> bool {
        probe_cubes(self.n).iter().all(|c| self.space.is_base(&self.eval(c)))
    }

    /// The exact support normal form, by structural rules:
    ///
    /// * `Peaked` probes the loop for nontriviality;
    /// * precomposition pulls a point support back through the cube and
    ///   rescales a width threshold (`a ↦ a / width`, empty when the cube is
    ///   too narrow to ever exceed the threshold);
    /// * postcomposition preserves the normal form exactly when the map
    ///   reflects the basepoint, otherwise the support may shrink and only
    ///   the oracle can answer;
    /// * the expansion homotopy fixes peaked elements pointwise and turns a
    ///   width threshold into [`SupportNf::ExpandedWidthThreshold`].
    pub fn support_nf(&self) -> SupportNf {
        match &self.term {
            Term::Trivial => SupportNf::Empty,
            Term::Peaked { t, l } => {
                if l.is_trivial() {
                    SupportNf::Empty
                } else {
                    SupportNf::Point(t.clone())
                }
            }
            Term::Threshold { a, .. } => SupportNf::WidthThreshold { a: a.clone() },
            Term::Precomposed { base, cube } => match base.support_nf() {
                SupportNf::Empty => SupportNf::Empty,
                SupportNf::Point(t) => {
                    if cube.contains_interior(&t) {
                        SupportNf::Point(cube.preimage(&t))
                    } else {
                        SupportNf::Empty
                    }
                }
                SupportNf::WidthThreshold { a } => {
                    let w = cube.scale(0);
                    if *w <= a {
                        SupportNf::Empty
                    } else {
                        SupportNf::WidthThreshold { a: &a / w }
                    }
                }
                _ => SupportNf::Opaque,
            },
            Term::PostMapped { base_support, base_reflecting, .. } => {
                if *base_reflecting {
                    base_support.clone()
                } else {
                    SupportNf::Opaque
                }
            }
            Term::Expanded { base, time, center } => match center {
                None => base.support_nf(),
                Some(_) => match base.support_nf() {
                    SupportNf::Empty => SupportNf::Empty,
                    SupportNf::Point(t) => SupportNf::Point(t),
                    SupportNf::WidthThreshold { a } => {
                        SupportNf::ExpandedWidthThreshold { a, time: time.clone() }
                    }
                    _ => SupportNf::Opaque,
                },
            },
            Term::Custom { support_hint, .. } => match support_hint {
                Some(rect) => SupportNf::Hinted(rect.clone()),
                None => SupportNf::Opaque,
            },
        }
    }

    /// `f_r(θ)` via the determined-by-first-component rule: evaluate at
    /// each cube of the configuration; at most one value may be non-base
    /// (property (D)); return it as a wedge point. Two non-base slots mean
    /// a broken custom element and raise [`Error::PropertyD`].
    pub fn expand_to_sequence(
        &self,
        r: usize,
        theta: &Configuration,
    ) -> Result<WedgePoint<X::Point>> {
        if theta.dim() != self.n {
            return Err(Error::DimMismatch { expected: self.n, got: theta.dim() });
        }
        if theta.arity() != r {
            return Err(Error::ArityMismatch { expected: r, got: theta.arity() });
        }
        let mut hit: Option<(usize, X::Point)> = None;
        for (i, cube) in theta.cubes().iter().enumerate() {
            let v = self.eval(cube);
            if !self.space.is_base(&v) {
                if let Some((first, _)) = hit {
                    return Err(Error::PropertyD { first, second: i });
                }
                hit = Some((i, v));
            }
        }
        Ok(match hit {
            None => WedgePoint::Base,
            Some((index, point)) => WedgePoint::Slot { index, arity: r, point },
        })
    }

    /// `Δ(f)` as an element of `C_n(C_n(X))`: the cube-indexed family of
    /// precompositions. Comultiplication preserves cubical support exactly
    /// (non-base witnesses of `Δ(f)` contain the support of `f`, and every
    /// witness of `f` is one of `Δ(f)` via the identity inner cube), so the
    /// support hint carries over whenever it resolves symbolically.
    pub fn delta(&self) -> CnElem<CnSpace<X>> {
        let outer = CnSpace::new(self.n, self.space.clone());
        let hint = match crate::approximation::csupp(self) {
            Ok(None) => return CnElem::trivial(self.n, outer),
            Ok(Some(rect)) => Some(rect),
            Err(_) => None,
        };
        let base = self.clone();
        CnElem::custom(self.n, outer, "delta", hint, move |c| {
            base.precompose(c).expect("dimensions agree")
        })
    }
}

impl CnElem<UnitInterval> {
    /// The width-threshold element (n = 1): `c ↦ max(width(c) − a, 0)` into
    /// the unit interval pointed at 0. Requires `1/2 ≤ a < 1` so that two
    /// disjoint cubes can never both exceed the threshold.
    pub fn threshold(a: Rational) -> Result<Self> {
        if a < Rational::half() || !a.in_open_unit() {
            return Err(Error::ThresholdRange(a));
        }
        Ok(CnElem {
            n: 1,
            space: UnitInterval,
            term: Term::Threshold { a, embed: Arc::new(|r: &Rational| r.clone()) },
        })
    }
}

impl<X: Space> PartialEq for CnElem<X> {
    /// Protocol equality: equal evaluations on every probe cube.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && probe_cubes(self.n).iter().all(|c| self.eval(c) == other.eval(c))
    }
}

impl<X: Space> fmt::Debug for CnElem<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.term {
            Term::Trivial => "Trivial".to_string(),
            Term::Peaked { t, .. } => format!("Peaked(t={:?})", t),
            Term::Threshold { a, .. } => format!("Threshold(a={})", a),
            Term::Precomposed { base, cube } => {
                format!("Precomposed({:?}, image={:?})", base, cube.image())
            }
            Term::PostMapped { label, .. } => format!("PostMapped({})", label),
            Term::Expanded { base, time, .. } => format!("Expanded({:?}, time={})", base, time),
            Term::Custom { label, .. } => format!("Custom({})", label),
        };
        write!(f, "CnElem(n={}, {})", self.n, kind)
    }
}

/// `C_n(X)` itself as a pointed space, so the comonad can be iterated.
#[derive(Clone, Debug)]
pub struct CnSpace<X: Space> {
    pub n: usize,
    pub inner: X,
}

impl<X: Space> CnSpace<X> {
    pub fn new(n: usize, inner: X) -> Self {
        assert!(n >= 1);
        CnSpace { n, inner }
    }
}

impl<X: Space> Space for CnSpace<X> {
    type Point = CnElem<X>;

    fn base(&self) -> CnElem<X> {
        CnElem::trivial(self.n, self.inner.clone())
    }

    fn is_base(&self, p: &CnElem<X>) -> bool {
        p.is_trivial_probe()
    }
}

/// `C_n(φ)`: postcompose an element with a pointed map. The support normal
/// form of `f` is frozen into the result and remains valid exactly when `φ`
/// reflects the basepoint.
pub fn functor_map<X: Space, Y: Space>(phi: &PointedMap<X, Y>, f: &CnElem<X>) -> CnElem<Y> {
    let base_support = f.support_nf();
    let inner = f.clone();
    let phi2 = phi.clone();
    CnElem {
        n: f.n,
        space: phi.target().clone(),
        term: Term::PostMapped {
            eval: Arc::new(move |c| phi2.apply(&inner.eval(c))),
            base_support,
            base_reflecting: phi.is_base_reflecting(),
            label: phi.label().to_string(),
        },
    }
}

/// The cofree lift: a pointed `φ: A → X` and a coalgebra structure on `A`
/// induce the coalgebra map `a ↦ C(φ)(structure(a))` into the cofree
/// coalgebra `C_n(X)`. The inverse direction is `ψ ↦ ε ∘ ψ`.
pub fn cofree_lift<'a, A: Space, X: Space>(
    phi: &'a PointedMap<A, X>,
    structure: impl Fn(&A::Point) -> CnElem<A> + 'a,
) -> impl Fn(&A::Point) -> CnElem<X> + 'a {
    move |a| functor_map(phi, &structure(a))
}

/// How many arity-2 samples [`generic_comonad_element`] checks.
pub const GENERIC_CHECK_SAMPLES: usize = 64;

/// A comonad element over an abstract unitary operad: an arity-1 evaluable
/// together with the sequence-compatibility evidence gathered at
/// construction (`π_i f_r = f_{r−1} d_i` forces the arity-2 component to be
/// a wedge point, i.e. at most one non-base slot).
pub struct GenericComonadElem<P: AbstractOperad + Clone, X: Space> {
    operad: P,
    space: X,
    f1: Arc<dyn Fn(&P::El1) -> X::Point + Send + Sync>,
    checked_samples: usize,
}

impl<P: AbstractOperad + Clone, X: Space> GenericComonadElem<P, X> {
    pub fn eval1(&self, e: &P::El1) -> X::Point {
        (self.f1)(e)
    }

    /// The induced arity-2 component, as a wedge point.
    pub fn expand2(&self, theta: &P::El2) -> Result<WedgePoint<X::Point>> {
        let a = (self.f1)(&self.operad.extract2(theta, 0));
        let b = (self.f1)(&self.operad.extract2(theta, 1));
        match (self.space.is_base(&a), self.space.is_base(&b)) {
            (false, false) => Err(Error::PropertyD { first: 0, second: 1 }),
            (false, true) => Ok(WedgePoint::Slot { index: 0, arity: 2, point: a }),
            (true, false) => Ok(WedgePoint::Slot { index: 1, arity: 2, point: b }),
            (true, true) => Ok(WedgePoint::Base),
        }
    }

    pub fn checked_samples(&self) -> usize {
        self.checked_samples
    }
}

/// Validates an arity-1 evaluable into a comonad element over an abstract
/// unitary operad, by checking sequence compatibility on the operad's
/// arity-2 samples. Over a reduced operad (arity 1 a single point) every
/// extraction of an arity-2 sample is the unit, so any non-base-valued
/// candidate hits two non-base slots and is rejected: only the trivial
/// element survives.
pub fn generic_comonad_element<P: AbstractOperad + Clone, X: Space>(
    operad: &P,
    space: &X,
    f1: impl Fn(&P::El1) -> X::Point + Send + Sync + 'static,
) -> Option<GenericComonadElem<P, X>> {
    let samples = operad.arity2_samples(PROBE_SEED, GENERIC_CHECK_SAMPLES);
    let checked = samples.len();
    for theta in &samples {
        let a = f1(&operad.extract2(theta, 0));
        let b = f1(&operad.extract2(theta, 1));
        if !space.is_base(&a) && !space.is_base(&b) {
            return None;
        }
    }
    Some(GenericComonadElem {
        operad: operad.clone(),
        space: space.clone(),
        f1: Arc::new(f1),
        checked_samples: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{LittleCubesOperad, OnePointOperad, Permutation};
    use crate::spaces::{identity_loop, wedge_act, Sphere};

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    fn cube1(lo: (i64, i64), hi: (i64, i64)) -> LittleCube {
        LittleCube::from_corners(&[(q(lo.0, lo.1), q(hi.0, hi.1))]).unwrap()
    }

    fn sphere_peak(t: (i64, i64)) -> CnElem<Sphere> {
        CnElem::peaked(vec![q(t.0, t.1)], identity_loop(&Sphere::new(1))).unwrap()
    }

    #[test]
    fn peaked_eval_rules() {
        let f = sphere_peak((1, 2));
        // c = [1/4, 3/4]: c⁻¹(1/2) = 1/2.
        let inside = f.eval(&cube1((1, 4), (3, 4)));
        assert_eq!(inside, SpherePoint::Interior(vec![q(1, 2)]));
        // t outside the interior → base.
        assert_eq!(f.eval(&cube1((0, 1), (1, 4))), SpherePoint::Base);
        // t on the boundary of the image → base.
        assert_eq!(f.eval(&cube1((0, 1), (1, 2))), SpherePoint::Base);
        // ε(Peaked(t,ℓ)) = ℓ(t).
        assert_eq!(f.counit(), SpherePoint::Interior(vec![q(1, 2)]));
    }

    #[test]
    fn threshold_eval_rules() {
        let f = CnElem::threshold(q(3, 4)).unwrap();
        assert_eq!(f.eval(&cube1((0, 1), (7, 8))), q(1, 8));
        assert_eq!(f.eval(&cube1((0, 1), (1, 2))), q(0, 1));
        assert_eq!(f.eval(&cube1((0, 1), (3, 4))), q(0, 1)); // width exactly a
        assert_eq!(f.counit(), q(1, 4)); // 1 − a
        assert!(CnElem::threshold(q(1, 4)).is_err());
        assert!(CnElem::threshold(q(1, 1)).is_err());
        assert!(CnElem::threshold(q(1, 2)).is_ok());
    }

    #[test]
    fn comultiplication_is_precomposition() {
        let f = sphere_peak((1, 2));
        let c = cube1((0, 1), (1, 2));
        let d = cube1((1, 2), (1, 1));
        // Δ(f)(c)(d) = f(c∘d) = f([1/4,1/2]) = base: 1/2 sits on the boundary.
        let g = f.comultiply(&c).unwrap();
        assert_eq!(g.eval(&d), SpherePoint::Base);
        assert_eq!(c.compose(&d).image().side(0).hi(), &q(1, 2));
        // ε(Δ(f)(c)) = f(c).
        assert_eq!(g.counit(), f.eval(&c));
        // Δ(f)(id) ≡ f under protocol equality.
        assert_eq!(f.comultiply(&LittleCube::identity(1)).unwrap(), f);
    }

    #[test]
    fn comultiplication_coassociates_pointwise() {
        let f = sphere_peak((3, 8));
        let c = cube1((0, 1), (3, 4));
        let d = cube1((1, 4), (1, 1));
        // Δ(Δ(f)(c))(d) ≡ Δ(f)(c∘d): both evaluate to f(c∘d∘e).
        let lhs = f.comultiply(&c).unwrap().comultiply(&d).unwrap();
        let rhs = f.comultiply(&c.compose(&d)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn functor_map_composes_and_respects_identity() {
        let f = sphere_peak((1, 2));
        let id = PointedMap::<Sphere, Sphere>::identity(Sphere::new(1));
        assert_eq!(functor_map(&id, &f), f);

        let to_interval = PointedMap::new(
            Sphere::new(1),
            UnitInterval,
            "first-coordinate",
            true,
            |p: &SpherePoint| match p {
                SpherePoint::Base => Rational::zero(),
                SpherePoint::Interior(c) => c[0].clone(),
            },
        )
        .unwrap();
        let halve =
            PointedMap::new(UnitInterval, UnitInterval, "halve", true, |x: &Rational| {
                x * q(1, 2)
            })
            .unwrap();
        // C(φ∘ψ) = C(φ)∘C(ψ) pointwise.
        let via_two = functor_map(&halve, &functor_map(&to_interval, &f));
        let c = cube1((1, 4), (3, 4));
        assert_eq!(via_two.eval(&c), q(1, 4));
        assert_eq!(via_two.support_nf(), SupportNf::Point(vec![q(1, 2)]));

        let collapse = PointedMap::new(Sphere::new(1), UnitInterval, "collapse", false, |_| {
            Rational::zero()
        })
        .unwrap();
        let killed = functor_map(&collapse, &f);
        assert!(killed.is_trivial_probe());
        assert_eq!(killed.support_nf(), SupportNf::Opaque);
    }

    #[test]
    fn expansion_to_sequence_picks_the_unique_slot() {
        let f = sphere_peak((1, 4));
        let halves = Configuration::halves(1);
        // t = 1/4 is interior to the left half; c₀⁻¹(1/4) = 1/2.
        let w = f.expand_to_sequence(2, &halves).unwrap();
        assert_eq!(
            w,
            WedgePoint::Slot { index: 0, arity: 2, point: SpherePoint::Interior(vec![q(1, 2)]) }
        );
        let trivial = CnElem::trivial(1, Sphere::new(1));
        assert_eq!(trivial.expand_to_sequence(2, &halves).unwrap(), WedgePoint::Base);
        // Restriction compatibility: π_0(f_2(θ)) = f_1(d_0 θ).
        let projected = crate::spaces::wedge_project(0, &w);
        let restricted = f
            .expand_to_sequence(1, &halves.restrict(0).unwrap())
            .unwrap();
        assert_eq!(projected, restricted);
    }

    #[test]
    fn expansion_is_equivariant() {
        let f = sphere_peak((1, 4));
        let halves = Configuration::halves(1);
        let sigma = Permutation::transposition(2, 0, 1).unwrap();
        let acted = halves.act(&sigma).unwrap();
        let lhs = f.expand_to_sequence(2, &acted).unwrap();
        let rhs = wedge_act(&sigma, &f.expand_to_sequence(2, &halves).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn property_d_violation_is_detected() {
        let broken = CnElem::custom(1, UnitInterval, "constant-non-base", None, |_| q(1, 2));
        let err = broken.expand_to_sequence(2, &Configuration::halves(1)).unwrap_err();
        assert!(matches!(err, Error::PropertyD { first: 0, second: 1 }));
    }

    #[test]
    fn support_normal_forms() {
        let f = sphere_peak((1, 2));
        assert_eq!(f.support_nf(), SupportNf::Point(vec![q(1, 2)]));

        let flat = CnElem::peaked(
            vec![q(1, 2)],
            LoopMap::constant(1, Sphere::new(1)),
        )
        .unwrap();
        assert_eq!(flat.support_nf(), SupportNf::Empty);

        let th = CnElem::threshold(q(3, 4)).unwrap();
        assert_eq!(th.support_nf(), SupportNf::WidthThreshold { a: q(3, 4) });

        // Point support pulls back through the precomposed cube.
        let g = sphere_peak((1, 4)).precompose(&cube1((0, 1), (1, 2))).unwrap();
        assert_eq!(g.support_nf(), SupportNf::Point(vec![q(1, 2)]));
        // …and dies when the point is not interior to the cube's image.
        let dead = sphere_peak((1, 2)).precompose(&cube1((0, 1), (1, 2))).unwrap();
        assert_eq!(dead.support_nf(), SupportNf::Empty);

        // Width thresholds rescale: a/w = (3/4)/(7/8) = 6/7.
        let tp = th.precompose(&cube1((0, 1), (7, 8))).unwrap();
        assert_eq!(tp.support_nf(), SupportNf::WidthThreshold { a: q(6, 7) });
        // A cube narrower than the threshold can never trigger it.
        let tz = th.precompose(&cube1((0, 1), (1, 2))).unwrap();
        assert_eq!(tz.support_nf(), SupportNf::Empty);
        assert!(tz.is_trivial_probe());
    }

    #[test]
    fn delta_counits_back_to_the_element() {
        let f = sphere_peak((1, 2));
        let delta = f.delta();
        // ε_{C(X)}(Δf) = Δ(f)(id) ≡ f.
        assert_eq!(delta.counit(), f);
        // Δ preserves cubical support.
        assert_eq!(
            crate::approximation::csupp(&delta).unwrap(),
            crate::approximation::csupp(&f).unwrap()
        );
        // Evaluating Δf at c then d agrees with f at c∘d.
        let c = cube1((0, 1), (1, 2));
        let d = cube1((1, 4), (1, 1));
        assert_eq!(delta.eval(&c).eval(&d), f.eval(&c.compose(&d)));
    }

    #[test]
    fn cofree_lift_satisfies_the_triangle_identity() {
        let sphere = Sphere::new(1);
        let structure = |t: &SpherePoint| match t {
            SpherePoint::Base => CnElem::trivial(1, Sphere::new(1)),
            SpherePoint::Interior(c) => {
                CnElem::peaked(c.clone(), identity_loop(&Sphere::new(1))).unwrap()
            }
        };
        let phi = PointedMap::new(sphere, UnitInterval, "coord", true, |p: &SpherePoint| {
            match p {
                SpherePoint::Base => Rational::zero(),
                SpherePoint::Interior(c) => c[0].clone(),
            }
        })
        .unwrap();
        let lift = cofree_lift(&phi, structure);
        for t in [q(1, 3), q(1, 2), q(7, 8)] {
            let point = SpherePoint::Interior(vec![t.clone()]);
            // ε(lift(a)) = φ(a).
            assert_eq!(lift(&point).counit(), t);
        }
    }

    #[test]
    fn reduced_operads_only_admit_the_trivial_element() {
        let op = OnePointOperad;
        assert!(generic_comonad_element(&op, &UnitInterval, |_: &()| q(1, 2)).is_none());
        let trivial = generic_comonad_element(&op, &UnitInterval, |_: &()| q(0, 1));
        assert!(trivial.is_some());
        assert!(trivial.unwrap().checked_samples() >= 1);
    }

    #[test]
    fn threshold_is_a_generic_element_over_little_cubes() {
        let op = LittleCubesOperad { dim: 1 };
        let th = CnElem::threshold(q(3, 4)).unwrap();
        let elem = generic_comonad_element(&op, &UnitInterval, move |c: &LittleCube| th.eval(c));
        let elem = elem.expect("two cubes of width > 3/4 cannot be disjoint");
        let w = elem.expand2(&Configuration::halves(1)).unwrap();
        assert_eq!(w, WedgePoint::Base);
    }

    #[test]
    fn equality_is_protocol_not_structural() {
        let f = sphere_peak((1, 2));
        let same = f.precompose(&LittleCube::identity(1)).unwrap();
        assert_eq!(f, same);
        assert_ne!(f, CnElem::trivial(1, Sphere::new(1)));
    }
}
