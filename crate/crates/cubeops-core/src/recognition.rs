//! Recognition machinery: coalgebras over the comonad and over `ΣⁿΩⁿ`,
//! the change of structure along `α`, cosplit-equalizer identity checks,
//! the subspace `S(X)` of points whose structure value has singleton
//! support, the retraction onto it with its homotopy, the induced
//! `ΣⁿΩⁿ`-structure on `S(X)`, and the equalizer membership test cutting
//! out `P_n(X) ⊆ ΩⁿX`.

use std::fmt;
use std::sync::Arc;

use crate::approximation::{
    alpha, csupp, csupp_oracle, homotopy_h, psi, DEFAULT_ORACLE_BUDGET,
};
use crate::comonad::{functor_map, CnElem, CnSpace};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::spaces::{
    generator_loop, LoopMap, LoopSpace, PointedMap, Space, SpherePoint, SuspensionPoint, Susp,
};

/// A coalgebra over the little-cubes comonad: a pointed structure map
/// `x ↦ c(x)` into the cofree elements, subject (on samples, via the law
/// suite) to the counit law `ε(c(x)) = x` and coassociativity.
pub struct CnCoalgebra<X: Space> {
    n: usize,
    space: X,
    structure: Arc<dyn Fn(&X::Point) -> CnElem<X> + Send + Sync>,
}

impl<X: Space> CnCoalgebra<X> {
    pub fn new(
        n: usize,
        space: X,
        structure: impl Fn(&X::Point) -> CnElem<X> + Send + Sync + 'static,
    ) -> Self {
        assert!(n >= 1);
        CnCoalgebra { n, space, structure: Arc::new(structure) }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &X {
        &self.space
    }

    pub fn structure(&self, x: &X::Point) -> CnElem<X> {
        (self.structure)(x)
    }

    /// The structure map as a pointed map into the cofree space, when it
    /// is one (`c(base)` must be trivial).
    pub fn structure_map(&self) -> Result<PointedMap<X, CnSpace<X>>> {
        let f = Arc::clone(&self.structure);
        PointedMap::new(
            self.space.clone(),
            CnSpace::new(self.n, self.space.clone()),
            "coalgebra-structure",
            true,
            move |x| f(x),
        )
    }
}

impl<X: Space> Clone for CnCoalgebra<X> {
    fn clone(&self) -> Self {
        CnCoalgebra { n: self.n, space: self.space.clone(), structure: Arc::clone(&self.structure) }
    }
}

impl<X: Space> fmt::Debug for CnCoalgebra<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CnCoalgebra").field("n", &self.n).field("space", &self.space).finish()
    }
}

/// A coalgebra over `ΣⁿΩⁿ`: a structure map `x ↦ [t, ℓ]` with counit
/// `ev ∘ γ = id` and coassociativity through `[t, ℓ] ↦ [t, ℓ̄]`.
pub struct SigmaOmegaCoalgebra<X: Space> {
    n: usize,
    space: X,
    structure: Arc<dyn Fn(&X::Point) -> SuspensionPoint<LoopMap<X>> + Send + Sync>,
}

impl<X: Space> SigmaOmegaCoalgebra<X> {
    pub fn new(
        n: usize,
        space: X,
        structure: impl Fn(&X::Point) -> SuspensionPoint<LoopMap<X>> + Send + Sync + 'static,
    ) -> Self {
        assert!(n >= 1);
        SigmaOmegaCoalgebra { n, space, structure: Arc::new(structure) }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &X {
        &self.space
    }

    pub fn structure(&self, x: &X::Point) -> SuspensionPoint<LoopMap<X>> {
        (self.structure)(x)
    }
}

impl<X: Space> Clone for SigmaOmegaCoalgebra<X> {
    fn clone(&self) -> Self {
        SigmaOmegaCoalgebra {
            n: self.n,
            space: self.space.clone(),
            structure: Arc::clone(&self.structure),
        }
    }
}

impl<X: Space> fmt::Debug for SigmaOmegaCoalgebra<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SigmaOmegaCoalgebra")
            .field("n", &self.n)
            .field("space", &self.space)
            .finish()
    }
}

/// The counit of `ΣⁿΩⁿ`: evaluate the loop at the suspension coordinate.
pub fn suspension_counit<X: Space>(space: &X, p: &SuspensionPoint<LoopMap<X>>) -> X::Point {
    match p.pair() {
        None => space.base(),
        Some((t, l)) => l.eval_coords(t.to_vec()),
    }
}

/// Change of coalgebra along `α`: the `ΣⁿΩⁿ`-structure `γ` becomes the
/// comonadic structure `x ↦ α(γ(x))`.
pub fn pushforward_structure<X: Space>(g: &SigmaOmegaCoalgebra<X>) -> CnCoalgebra<X> {
    let n = g.n;
    let space = g.space.clone();
    let inner = Arc::clone(&g.structure);
    CnCoalgebra {
        n,
        space: space.clone(),
        structure: Arc::new(move |x| alpha(n, &space, &inner(x))),
    }
}

/// Verdicts of the cosplit-equalizer identity checks.
#[derive(Clone, Debug, Default)]
pub struct CosplitReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CosplitReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(message());
        }
    }
}

/// Checks the cosplit-equalizer identities for a comonadic coalgebra at
/// the sampled points, with `p = γ`, `f = C(γ)`, `g = Δ`, `h = ε_X`, and
/// `s = ε_{C(X)}`: `hp = id` (the counit law), `sg = id` on the structure
/// values, and `sf = ph` (naturality of the counit).
pub fn cosplit_check<X: Space>(a: &CnCoalgebra<X>, points: &[X::Point]) -> CosplitReport {
    let mut report = CosplitReport::default();
    let structure_map = match a.structure_map() {
        Ok(map) => Some(map),
        Err(_) => {
            report.checked += 1;
            report.failures.push("structure map is not pointed".to_string());
            None
        }
    };
    for x in points {
        let value = a.structure(x);

        // hp = id: the counit law.
        report.record(&value.counit() == x, || format!("counit law fails at {:?}", x));

        // sg = id: the counit of C(X) retracts the comultiplication.
        let delta = value.delta();
        report.record(delta.counit() == value, || {
            format!("comultiplication is not split by the counit at {:?}", x)
        });

        // sf = ph: both routes C(X) → C(X) agree on the structure value.
        if let Some(map) = &structure_map {
            let sf = functor_map(map, &value).counit();
            let ph = a.structure(&value.counit());
            report.record(sf == ph, || format!("counit naturality fails at {:?}", x));
        }
    }
    report
}

/// The cosplit identities for a `ΣⁿΩⁿ`-coalgebra: counit `ev(γ(x)) = x`,
/// `ev` retracts `[t,ℓ] ↦ [t, ℓ̄]`, and `ev(ΣⁿΩⁿγ [t,ℓ]) = γ(ev[t,ℓ])` on
/// the structure values at the sampled points.
pub fn sigma_cosplit_check<X: Space>(
    g: &SigmaOmegaCoalgebra<X>,
    points: &[X::Point],
) -> CosplitReport {
    let mut report = CosplitReport::default();
    let loops = LoopSpace::new(g.n, g.space.clone());
    let doubled = Susp::new(g.n, LoopSpace::new(g.n, Susp::new(g.n, loops.clone())));
    for x in points {
        let value = g.structure(x);

        report.record(&suspension_counit(&g.space, &value) == x, || {
            format!("counit law fails at {:?}", x)
        });

        if let Some((t, l)) = value.pair() {
            // ev retracts the comultiplication [t, ℓ] ↦ [t, ℓ̄].
            let comultiplied = doubled.point(t.to_vec(), crate::spaces::bar_loop(l));
            let back = match comultiplied.pair() {
                None => SuspensionPoint::Base,
                Some((tt, bar)) => bar.eval_coords(tt.to_vec()),
            };
            report.record(back == value, || {
                format!("suspension comultiplication is not split at {:?}", x)
            });

            // ev(ΣⁿΩⁿγ [t,ℓ]) = γ(ev [t,ℓ]).
            let mapped_loop = {
                let l = l.clone();
                let g2 = g.clone();
                LoopMap::from_fn(
                    g.n,
                    Susp::new(g.n, loops.clone()),
                    "gamma-after-loop",
                    move |s| g2.structure(&l.eval(&SpherePoint::Interior(s.to_vec()))),
                )
            };
            let sf = mapped_loop.eval_coords(t.to_vec());
            let ph = g.structure(&suspension_counit(&g.space, &value));
            report.record(sf == ph, || format!("counit naturality fails at {:?}", x));
        }
    }
    report
}

/// Membership answer for the subspace `S(X)`, flagging when the support
/// question needed the brute-force oracle (whose singleton test is
/// conservative: a finite budget cannot certify a point support).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMembership {
    pub member: bool,
    pub used_oracle: bool,
}

/// `x ∈ S(X)` iff `x` is the basepoint or the cubical support of its
/// structure value is a single point.
pub fn in_s<X: Space>(x: &X::Point, a: &CnCoalgebra<X>) -> SMembership {
    if a.space.is_base(x) {
        return SMembership { member: true, used_oracle: false };
    }
    let value = a.structure(x);
    match csupp(&value) {
        Ok(rect) => SMembership {
            member: rect.map_or(false, |r| r.is_point()),
            used_oracle: false,
        },
        Err(_) => {
            let oracle = csupp_oracle(&value, DEFAULT_ORACLE_BUDGET);
            SMembership {
                member: oracle.rect.map_or(false, |r| r.is_point()),
                used_oracle: true,
            }
        }
    }
}

/// The retraction `r = ε ∘ α ∘ Ψ ∘ c` onto `S(X)`. Fixes `S(X)` pointwise
/// and sends the basepoint to itself.
pub fn retraction<X: Space>(x: &X::Point, a: &CnCoalgebra<X>) -> X::Point {
    let value = a.structure(x);
    alpha(a.n, &a.space, &psi(&value)).counit()
}

/// The straight-line realization of the retraction homotopy: the counit of
/// the expansion homotopy at `time`. Time `0` gives `x` (counit law) and
/// time `1` gives [`retraction`] exactly.
pub fn retraction_homotopy<X: Space>(x: &X::Point, a: &CnCoalgebra<X>, time: &Rational) -> X::Point {
    homotopy_h(&a.structure(x), time.clone()).counit()
}

/// The induced `ΣⁿΩⁿ`-structure `c′(x) = [Cent(c(x)), s ↦ c(x)(c_{s,·})]`
/// on `S(X)`, i.e. `Ψ(c(x))`. Errors when `x` is not in `S(X)`.
pub fn induced_structure<X: Space>(
    x: &X::Point,
    a: &CnCoalgebra<X>,
) -> Result<SuspensionPoint<LoopMap<X>>> {
    if !in_s(x, a).member {
        return Err(Error::NotInS);
    }
    Ok(psi(&a.structure(x)))
}

/// Membership in `P_n(X) ⊆ ΩⁿX`: the equalizer of `Ωⁿγ` and `η_{ΩⁿX}`,
/// tested pointwise at the sampled sphere points — `γ(ℓ(s)) = [s, ℓ]` must
/// hold at every sample.
pub fn pn_membership<X: Space>(
    l: &LoopMap<X>,
    g: &SigmaOmegaCoalgebra<X>,
    samples: &[SpherePoint],
) -> bool {
    let susp = Susp::new(g.n, LoopSpace::new(g.n, g.space.clone()));
    samples.iter().all(|s| {
        let via_gamma = g.structure(&l.eval(s));
        let via_unit = match s.interior_coords() {
            None => SuspensionPoint::Base,
            Some(t) => susp.point(t.to_vec(), l.clone()),
        };
        via_gamma == via_unit
    })
}

/// `Sⁿ` with its tautological comonadic structure `t ↦ α[t, id]`.
pub fn sphere_structure(n: usize) -> CnCoalgebra<crate::spaces::Sphere> {
    let sphere = crate::spaces::Sphere::new(n);
    CnCoalgebra::new(n, sphere, move |p: &SpherePoint| match p.interior_coords() {
        None => CnElem::trivial(n, sphere),
        Some(t) => CnElem::peaked(t.to_vec(), crate::spaces::identity_loop(&sphere))
            .expect("interior coordinates"),
    })
}

/// `γ = Σⁿη : ΣⁿZ → ΣⁿΩⁿΣⁿZ`, sending `[t, z]` to `[t, s ↦ [s, z]]`.
pub fn sigma_eta<Z: Space>(susp: &Susp<Z>) -> SigmaOmegaCoalgebra<Susp<Z>> {
    let n = susp.n;
    let inner = susp.clone();
    let outer = Susp::new(n, LoopSpace::new(n, susp.clone()));
    SigmaOmegaCoalgebra::new(n, susp.clone(), move |p| match p.pair() {
        None => SuspensionPoint::Base,
        Some((t, z)) => outer.point(t.to_vec(), generator_loop(&inner, z.clone())),
    })
}

/// The comonadic structure on a suspension: the pushforward of `Σⁿη`,
/// whose values are the peaked elements `α[t, s ↦ [s, z]]`.
pub fn suspension_structure<Z: Space>(susp: &Susp<Z>) -> CnCoalgebra<Susp<Z>> {
    pushforward_structure(&sigma_eta(susp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{coend_to_comonadic, SuspensionCoalgebra};
    use crate::geometry::Rect;
    use crate::operad::LittleCube;
    use crate::probe::{probe_coords, probe_cubes};
    use crate::spaces::{identity_loop, FinitePointed, Sphere, UnitInterval};

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    fn sphere_grid() -> Vec<SpherePoint> {
        (0..=12).map(|k| SpherePoint::from_coords(vec![q(k, 12)])).collect()
    }

    fn three_susp() -> Susp<FinitePointed> {
        Susp::new(1, FinitePointed::new(3))
    }

    fn susp_grid(susp: &Susp<FinitePointed>) -> Vec<SuspensionPoint<usize>> {
        let mut points = vec![SuspensionPoint::Base];
        for x in 1..3usize {
            for k in 1..8 {
                points.push(susp.point(vec![q(k, 8)], x));
            }
        }
        points
    }

    fn probe_points(n: usize) -> Vec<SpherePoint> {
        probe_coords(n).into_iter().map(SpherePoint::Interior).collect()
    }

    #[test]
    fn counit_law_holds_for_the_shipped_instances() {
        let sphere = sphere_structure(1);
        for t in sphere_grid() {
            assert_eq!(sphere.structure(&t).counit(), t);
        }
        let susp = three_susp();
        let gamma = suspension_structure(&susp);
        for p in susp_grid(&susp) {
            assert_eq!(gamma.structure(&p).counit(), p);
        }
    }

    #[test]
    fn suspension_structure_matches_the_splitting_induced_one() {
        let susp = three_susp();
        let gamma = suspension_structure(&susp);
        let nabla = SuspensionCoalgebra::new(susp.clone());
        for p in susp_grid(&susp) {
            let direct = gamma.structure(&p);
            let induced = coend_to_comonadic(&susp, &nabla, &p);
            for c in probe_cubes(1) {
                assert_eq!(direct.eval(&c), induced.eval(&c), "p={:?}, c={:?}", p, c.image());
            }
        }
    }

    #[test]
    fn pushforward_preserves_the_counit() {
        let susp = three_susp();
        let gamma = sigma_eta(&susp);
        let pushed = pushforward_structure(&gamma);
        for p in susp_grid(&susp) {
            assert_eq!(suspension_counit(&susp, &gamma.structure(&p)), p);
            assert_eq!(pushed.structure(&p).counit(), p);
        }
        assert!(pushed.structure(&SuspensionPoint::Base).is_trivial_probe());
    }

    #[test]
    fn cosplit_identities_hold_for_both_presentations() {
        let sphere = sphere_structure(1);
        let report = cosplit_check(&sphere, &sphere_grid());
        assert!(report.passed(), "sphere failures: {:?}", report.failures);

        let susp = three_susp();
        let report = cosplit_check(&suspension_structure(&susp), &susp_grid(&susp));
        assert!(report.passed(), "suspension failures: {:?}", report.failures);

        let report = sigma_cosplit_check(&sigma_eta(&susp), &susp_grid(&susp));
        assert!(report.passed(), "sigma-side failures: {:?}", report.failures);
    }

    #[test]
    fn cosplit_check_flags_a_broken_counit() {
        // A "coalgebra" that forgets where the point was.
        let sphere = Sphere::new(1);
        let broken = CnCoalgebra::new(1, sphere, move |p: &SpherePoint| {
            match p.interior_coords() {
                None => CnElem::trivial(1, sphere),
                Some(_) => CnElem::peaked(vec![q(1, 2)], identity_loop(&sphere)).unwrap(),
            }
        });
        let report = cosplit_check(&broken, &sphere_grid());
        assert!(!report.passed());
        assert!(report.failures.iter().any(|f| f.contains("counit law")));
    }

    #[test]
    fn membership_in_s_is_exact_for_symbolic_structures() {
        let susp = three_susp();
        let gamma = suspension_structure(&susp);
        for p in susp_grid(&susp) {
            let m = in_s(&p, &gamma);
            assert!(m.member, "p={:?}", p);
            assert!(!m.used_oracle);
        }
        let sphere = sphere_structure(1);
        for t in sphere_grid() {
            assert!(in_s(&t, &sphere).member);
        }
    }

    #[test]
    fn membership_falls_back_to_the_oracle_for_opaque_values() {
        // Structure values that hide a box indicator: supports are fat, so
        // the points are not in S, and the oracle is flagged.
        let space = UnitInterval;
        let opaque = CnCoalgebra::new(1, space, move |x: &Rational| {
            if x.is_zero() {
                return CnElem::trivial(1, UnitInterval);
            }
            let x = x.clone();
            CnElem::custom(1, UnitInterval, "box-indicator", None, move |c: &LittleCube| {
                let box_ = Rect::new(vec![crate::geometry::Interval::new(q(1, 4), q(3, 4)).unwrap()])
                    .unwrap();
                if box_.contains_rect(&c.image()) {
                    x.clone()
                } else {
                    Rational::zero()
                }
            })
        });
        let m = in_s(&q(1, 2), &opaque);
        assert!(m.used_oracle);
        assert!(!m.member);
    }

    #[test]
    fn retraction_is_the_identity_on_the_shipped_instances() {
        let sphere = sphere_structure(1);
        for t in sphere_grid() {
            assert_eq!(retraction(&t, &sphere), t);
            let r = retraction(&t, &sphere);
            assert!(in_s(&r, &sphere).member);
        }
        let susp = three_susp();
        let gamma = suspension_structure(&susp);
        for p in susp_grid(&susp) {
            assert_eq!(retraction(&p, &gamma), p);
        }
    }

    #[test]
    fn retraction_homotopy_has_exact_endpoints() {
        let susp = three_susp();
        let gamma = suspension_structure(&susp);
        for p in susp_grid(&susp) {
            assert_eq!(retraction_homotopy(&p, &gamma, &q(0, 1)), p);
            assert_eq!(retraction_homotopy(&p, &gamma, &q(1, 1)), retraction(&p, &gamma));
            // Basepoint: constant in time.
            for time in [q(1, 4), q(1, 2), q(3, 4)] {
                assert_eq!(
                    retraction_homotopy(&SuspensionPoint::Base, &gamma, &time),
                    SuspensionPoint::Base
                );
            }
        }
    }

    #[test]
    fn induced_structure_recovers_the_suspension_generators() {
        let susp = three_susp();
        let gamma = suspension_structure(&susp);
        for x in 1..3usize {
            let p = susp.point(vec![q(1, 4)], x);
            match induced_structure(&p, &gamma).unwrap() {
                SuspensionPoint::Base => panic!("non-base point has non-base structure"),
                SuspensionPoint::Pair { t, x: l } => {
                    assert_eq!(t, vec![q(1, 4)]);
                    assert_eq!(l, generator_loop(&susp, x));
                }
            }
        }
        // Counit: evaluating the induced structure returns the point.
        for p in susp_grid(&susp) {
            let c = induced_structure(&p, &gamma).unwrap();
            assert_eq!(suspension_counit(&susp, &c), p);
        }
        assert_eq!(
            induced_structure(&SuspensionPoint::Base, &gamma).unwrap(),
            SuspensionPoint::Base
        );
    }

    #[test]
    fn induced_structure_pushes_forward_to_the_original() {
        let susp = three_susp();
        let gamma = suspension_structure(&susp);
        for p in susp_grid(&susp) {
            let induced = induced_structure(&p, &gamma).unwrap();
            assert_eq!(alpha(1, &susp, &induced), gamma.structure(&p), "p={:?}", p);
        }
    }

    #[test]
    fn induced_structure_requires_membership() {
        let opaque = CnCoalgebra::new(1, UnitInterval, |x: &Rational| {
            if x.is_zero() {
                CnElem::trivial(1, UnitInterval)
            } else {
                CnElem::threshold(q(3, 4)).unwrap()
            }
        });
        assert!(matches!(induced_structure(&q(1, 4), &opaque), Err(Error::NotInS)));
    }

    #[test]
    fn generators_belong_to_pn() {
        let susp = three_susp();
        let gamma = sigma_eta(&susp);
        let samples = probe_points(1);
        for z in 1..3usize {
            assert!(pn_membership(&generator_loop(&susp, z), &gamma, &samples));
        }
        assert!(pn_membership(&LoopMap::constant(1, susp.clone()), &gamma, &samples));
    }

    #[test]
    fn twisted_loops_are_rejected_from_pn() {
        let susp = three_susp();
        let gamma = sigma_eta(&susp);
        // ℓ(s) = [1 − s, z]: γ(ℓ(s)) = [1 − s, ℓ_z] disagrees with [s, ℓ].
        let twisted = {
            let susp = susp.clone();
            LoopMap::from_fn(1, susp.clone(), "twisted-generator", move |s| {
                susp.point(vec![&Rational::one() - &s[0]], 1usize)
            })
        };
        assert!(!pn_membership(&twisted, &gamma, &probe_points(1)));
    }

    #[test]
    fn suspension_of_generators_shadows_the_space() {
        // [t, Generator(z)] ↦ [t, z] hits each sampled non-base point once.
        let susp = three_susp();
        let outer = Susp::new(1, LoopSpace::new(1, susp.clone()));
        let mut seen = Vec::new();
        for z in 1..3usize {
            for k in 1..8 {
                let lifted = outer.point(vec![q(k, 8)], generator_loop(&susp, z));
                let (t, l) = lifted.pair().expect("generators are nontrivial");
                let shadow = suspension_counit(&susp, &outer.point(t.to_vec(), l.clone()));
                assert_eq!(shadow, susp.point(vec![q(k, 8)], z));
                assert!(!seen.contains(&shadow), "duplicate image {:?}", shadow);
                seen.push(shadow);
            }
        }
        assert_eq!(seen.len(), 14);
    }
}
