//! Approximation machinery: the morphism `α` from suspensions of loop
//! spaces into the comonad, cubical supports and centers, the canonical
//! cube `c_{s,t}`, the map `Ψ` back into `ΣⁿΩⁿX`, and the rectilinear
//! expansion homotopy `H` connecting `id` to `α∘Ψ`.
//!
//! The expansion path is linear interpolation of interval endpoints from
//! `c` to `cube_st(c⁻¹(p), p)`. Interpolating endpoints keeps evaluation
//! affine in the path parameter, so the path fixes the preimage of `p` at
//! every time; that is exactly what makes `H₀ = id` and `H₁ = α∘Ψ` hold as
//! identities of evaluations rather than up-to-homotopy statements.

use crate::comonad::{functor_map, CnElem, CnSpace, SupportNf};
use crate::error::{Error, Result};
use crate::geometry::{Interval, Rect};
use crate::operad::LittleCube;
use crate::rational::Rational;
use crate::rng::SplitMix64;
use crate::spaces::{
    bar_loop, LoopMap, LoopSpace, PointedMap, Space, SuspensionPoint, Susp,
};

/// Evaluation budget used when support questions fall back to the oracle.
pub const DEFAULT_ORACLE_BUDGET: usize = 10_000;

/// Root seed for the oracle's seeded-cube stage. Fixed so that oracle
/// answers are part of the deterministic protocol, never user-derived.
pub const ORACLE_SEED: u64 = 0x0AC1_E5EE_D000_0001;

/// Denominator of seeded oracle cube endpoints.
const ORACLE_DENOMINATOR: u64 = 4096;

/// `α[t, ℓ]` (a peaked element), with the basepoint going to the trivial
/// element.
pub fn alpha<X: Space>(
    n: usize,
    space: &X,
    p: &SuspensionPoint<LoopMap<X>>,
) -> CnElem<X> {
    match p {
        SuspensionPoint::Base => CnElem::trivial(n, space.clone()),
        SuspensionPoint::Pair { t, x } => CnElem::peaked(t.clone(), x.clone())
            .expect("suspension points are normalized, so t is interior"),
    }
}

/// `α` as a pointed map `ΣⁿΩⁿX → C_n(X)`, for use with the functor action.
/// Base-reflecting: a non-base suspension point has an interior coordinate
/// and a probe-nontrivial loop, so its peaked image is probe-nontrivial.
pub fn alpha_map<X: Space>(n: usize, space: &X) -> PointedMap<Susp<LoopSpace<X>>, CnSpace<X>> {
    let source = Susp::new(n, LoopSpace::new(n, space.clone()));
    let target = CnSpace::new(n, space.clone());
    let inner = space.clone();
    PointedMap::new(source, target, "alpha", true, move |p| alpha(n, &inner, p))
        .expect("alpha sends the basepoint to the trivial element")
}

/// The canonical cube `c_{s,t}`: the unique rectilinear cube mapping `s` to
/// `t` whose every coordinate image touches a face of the unit cube.
/// Per coordinate: `x ↦ (t/s)·x` when `t < s` (image `[0, t/s]`),
/// `x ↦ 1 − (1−t)(1−x)/(1−s)` when `t > s` (image `[1 − (1−t)/(1−s), 1]`),
/// identity when `t = s`. Requires `t` strictly interior; `s` may touch the
/// boundary (the comparisons select the formula that stays non-degenerate).
pub fn cube_st(s: &[Rational], t: &[Rational]) -> Result<LittleCube> {
    if s.len() != t.len() {
        return Err(Error::DimMismatch { expected: t.len(), got: s.len() });
    }
    let mut corners = Vec::with_capacity(t.len());
    for (si, ti) in s.iter().zip(t) {
        if !ti.in_open_unit() {
            return Err(Error::PointNotInterior(ti.clone()));
        }
        if !si.in_unit() {
            return Err(Error::PointOutsideUnit(si.clone()));
        }
        let one = Rational::one();
        let (lo, hi) = match ti.cmp(si) {
            std::cmp::Ordering::Less => (Rational::zero(), ti / si),
            std::cmp::Ordering::Equal => (Rational::zero(), one),
            std::cmp::Ordering::Greater => (&one - (&one - ti) / (&one - si), one),
        };
        corners.push((lo, hi));
    }
    LittleCube::from_corners(&corners)
}

/// The rectilinear expansion of a cube toward the canonical cube through a
/// fixed interior point `p` of its closed image.
#[derive(Clone, Debug)]
pub struct ExpansionPath {
    source: LittleCube,
    target: LittleCube,
    point: Vec<Rational>,
}

/// Builds the expansion path of `c` through `p`. Every interpolant maps
/// `c⁻¹(p)` to `p`: evaluation at a fixed argument is affine in the
/// endpoint parameters, and both endpoint cubes send `c⁻¹(p) ↦ p`.
pub fn expansion(c: &LittleCube, p: &[Rational]) -> Result<ExpansionPath> {
    if p.len() != c.dim() {
        return Err(Error::DimMismatch { expected: c.dim(), got: p.len() });
    }
    if !c.contains_closed(p) {
        return Err(Error::PointOutsideImage);
    }
    let target = cube_st(&c.preimage(p), p)?;
    Ok(ExpansionPath { source: c.clone(), target, point: p.to_vec() })
}

impl ExpansionPath {
    /// The cube at `time ∈ [0,1]`: per coordinate,
    /// `lo(τ) = (1−τ)·lo_c + τ·lo_target` and likewise for `hi`.
    pub fn at(&self, time: &Rational) -> LittleCube {
        assert!(!time.is_negative() && time <= &Rational::one(), "time outside [0,1]");
        let one_minus = &Rational::one() - time;
        let corners: Vec<(Rational, Rational)> = self
            .source
            .components()
            .iter()
            .zip(self.target.components())
            .map(|(a, b)| {
                let ia = a.image();
                let ib = b.image();
                (
                    &one_minus * ia.lo() + time * ib.lo(),
                    &one_minus * ia.hi() + time * ib.hi(),
                )
            })
            .collect();
        LittleCube::from_corners(&corners).expect("interpolants of valid cubes are valid")
    }

    pub fn source(&self) -> &LittleCube {
        &self.source
    }

    pub fn target(&self) -> &LittleCube {
        &self.target
    }

    pub fn point(&self) -> &[Rational] {
        &self.point
    }
}

/// Exact cubical support: `None` for empty support, a (possibly degenerate)
/// rectangle otherwise. Fails with [`Error::SupportNeedsOracle`] when no
/// symbolic rule applies — use [`csupp_oracle`] or [`csupp_with_fallback`].
pub fn csupp<X: Space>(f: &CnElem<X>) -> Result<Option<Rect>> {
    resolve_nf(&f.support_nf())
}

fn resolve_nf(nf: &SupportNf) -> Result<Option<Rect>> {
    match nf {
        SupportNf::Empty => Ok(None),
        SupportNf::Point(t) => Ok(Some(Rect::point(t)?)),
        SupportNf::WidthThreshold { a } => {
            let lo = &Rational::one() - a;
            Ok(Some(Rect::new(vec![Interval::new(lo, a.clone())?])?))
        }
        SupportNf::ExpandedWidthThreshold { a, time } => {
            let half = Rational::half();
            let g = if time >= a {
                Rational::zero()
            } else {
                // The support of the expanded threshold shrinks once the
                // expansion can push narrow cubes over the threshold:
                // witnesses with right end 1/2 + g exist iff the best
                // expandable cube ending there exceeds a. Optimizing over
                // witness cubes gives the smaller of (a − 1/2) and
                // (a − τ)/(2(1 − τ)).
                let wide = a - &half;
                let pulled = (a - time) / ((&Rational::one() - time) * Rational::new(2, 1));
                Rational::min(&wide, &pulled).clone()
            };
            let lo = &half - &g;
            let hi = &half + &g;
            Ok(Some(Rect::new(vec![Interval::new(lo, hi)?])?))
        }
        SupportNf::Hinted(rect) => Ok(Some(rect.clone())),
        SupportNf::Opaque => Err(Error::SupportNeedsOracle),
    }
}

/// Result of the brute-force support oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSupport {
    /// Intersection of the images of all witnesses found; contains the true
    /// support. `None` when no witness was found.
    pub rect: Option<Rect>,
    /// Deepest dyadic level evaluated exhaustively; endpoints of `rect` are
    /// within `2^{-depth}` of the true support for the shipped element
    /// families.
    pub dyadic_depth: u32,
    /// Evaluations spent (dyadic plus seeded).
    pub evaluations: usize,
}

/// Brute-force support over-approximation: intersect the images of every
/// witness cube (`eval ≠ base`) drawn from exhaustive dyadic levels — a
/// level is evaluated only if it fits in the remaining budget in full, so
/// its resolution guarantee is honest — followed by seeded cubes with
/// denominator-4096 endpoints until the budget is spent.
pub fn csupp_oracle<X: Space>(f: &CnElem<X>, budget: usize) -> OracleSupport {
    let n = f.dim();
    let space = f.space().clone();
    let mut evaluations = 0usize;
    let mut witness_rect: Option<Rect> = None;
    let mut intersection_emptied = false;

    let mut note = |cube: &LittleCube, value_nonbase: bool| {
        if !value_nonbase {
            return;
        }
        let image = cube.image();
        witness_rect = match witness_rect.take() {
            None => Some(image),
            Some(acc) => match acc.intersect(&image) {
                Some(next) => Some(next),
                None => {
                    intersection_emptied = true;
                    Some(acc)
                }
            },
        };
    };

    // Exhaustive dyadic levels. Level k has (2^k choose-2-with-order
    // endpoints) = 2^k (2^k + 1) / 2 intervals per axis.
    let mut dyadic_depth = 0u32;
    for k in 1u32.. {
        let cells = 1u64 << k;
        let per_axis = (cells * (cells + 1) / 2) as usize;
        let Some(level_cost) = per_axis.checked_pow(n as u32) else { break };
        if evaluations + level_cost > budget {
            break;
        }
        let axis_intervals: Vec<(Rational, Rational)> = (0..cells)
            .flat_map(|i| {
                ((i + 1)..=cells).map(move |j| {
                    (
                        Rational::new(i as i64, cells as i64),
                        Rational::new(j as i64, cells as i64),
                    )
                })
            })
            .collect();
        let mut index = vec![0usize; n];
        loop {
            let corners: Vec<(Rational, Rational)> =
                index.iter().map(|&i| axis_intervals[i].clone()).collect();
            let cube = LittleCube::from_corners(&corners).expect("dyadic corners are valid");
            let v = f.eval(&cube);
            evaluations += 1;
            note(&cube, !space.is_base(&v));
            // Odometer over the per-axis interval list.
            let mut axis = 0;
            loop {
                if axis == n {
                    break;
                }
                index[axis] += 1;
                if index[axis] < axis_intervals.len() {
                    break;
                }
                index[axis] = 0;
                axis += 1;
            }
            if axis == n {
                break;
            }
        }
        dyadic_depth = k;
    }

    // Seeded cubes for the remaining budget.
    let mut rng = SplitMix64::new(ORACLE_SEED ^ (n as u64));
    while evaluations < budget {
        let corners: Vec<(Rational, Rational)> = (0..n)
            .map(|_| {
                let lo = rng.next_below(ORACLE_DENOMINATOR);
                let hi = lo + 1 + rng.next_below(ORACLE_DENOMINATOR - lo);
                (
                    Rational::new(lo as i64, ORACLE_DENOMINATOR as i64),
                    Rational::new(hi as i64, ORACLE_DENOMINATOR as i64),
                )
            })
            .collect();
        let cube = LittleCube::from_corners(&corners).expect("seeded corners are valid");
        let v = f.eval(&cube);
        evaluations += 1;
        note(&cube, !space.is_base(&v));
    }

    OracleSupport {
        rect: if intersection_emptied { None } else { witness_rect },
        dyadic_depth,
        evaluations,
    }
}

/// A support answer that is always available: exact when the normal form
/// resolves, otherwise the oracle's over-approximation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportAnswer {
    pub rect: Option<Rect>,
    pub used_oracle: bool,
}

pub fn csupp_with_fallback<X: Space>(f: &CnElem<X>, budget: usize) -> SupportAnswer {
    match csupp(f) {
        Ok(rect) => SupportAnswer { rect, used_oracle: false },
        Err(_) => SupportAnswer { rect: csupp_oracle(f, budget).rect, used_oracle: true },
    }
}

/// `Cent(f)`: the center of the cubical support, absent iff the support is.
pub fn center<X: Space>(f: &CnElem<X>) -> Result<Option<Vec<Rational>>> {
    Ok(csupp(f)?.map(|rect| rect.center()))
}

/// The loop `s ↦ f(c_{s,p})` of `Ψ`. Requires `p` strictly interior.
pub fn psi_loop<X: Space>(f: &CnElem<X>, p: &[Rational]) -> LoopMap<X> {
    debug_assert!(p.iter().all(Rational::in_open_unit));
    let f = f.clone();
    let p = p.to_vec();
    LoopMap::from_fn(f.dim(), f.space().clone(), "psi-loop", move |s| {
        f.eval(&cube_st(s, &p).expect("interior probe coordinates"))
    })
}

/// `Ψ(f) = [Cent(f), s ↦ f(c_{s,Cent(f)})] ∈ ΣⁿΩⁿX`, the basepoint when the
/// support is empty. Total: opaque supports fall back to the oracle at the
/// default budget, and a support center on the boundary of the unit cube
/// (reachable only through custom elements) normalizes to the basepoint.
pub fn psi<X: Space>(f: &CnElem<X>) -> SuspensionPoint<LoopMap<X>> {
    let susp = Susp::new(f.dim(), LoopSpace::new(f.dim(), f.space().clone()));
    let answer = csupp_with_fallback(f, DEFAULT_ORACLE_BUDGET);
    match answer.rect {
        None => SuspensionPoint::Base,
        Some(rect) => {
            let p = rect.center();
            if !p.iter().all(Rational::in_open_unit) {
                return SuspensionPoint::Base;
            }
            let l = psi_loop(f, &p);
            susp.point(p, l)
        }
    }
}

/// `H(f, time)`: the expansion homotopy as a symbolic element. Evaluates at
/// `c` to `f(expansion(c, Cent(f))(time))` when the center lies in the
/// closed image of `c`, to base when it does not, and exactly as `f` when
/// the support is empty. `H(·,0) ≡ id` and `H(·,1) ≡ α∘Ψ` hold exactly.
/// Total like [`psi`]; a boundary support center degenerates to the
/// constant homotopy.
pub fn homotopy_h<X: Space>(f: &CnElem<X>, time: Rational) -> CnElem<X> {
    assert!(!time.is_negative() && time <= Rational::one(), "time outside [0,1]");
    let answer = csupp_with_fallback(f, DEFAULT_ORACLE_BUDGET);
    let center = answer
        .rect
        .map(|rect| rect.center())
        .filter(|p| p.iter().all(Rational::in_open_unit));
    CnElem::expanded(f.clone(), time, center)
}

/// Report of the morphism-of-comonads identity checks.
#[derive(Clone, Debug, Default)]
pub struct MorphismCheckReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl MorphismCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, on the given samples, that `α` is a morphism of comonads:
/// the counit identity `ε(α[t,ℓ]) = ℓ(t)` (the suspension side's counit is
/// evaluation), and the comultiplication identity comparing
/// `C(α)(α([t, ℓ̄]))` against `Δ(α[t,ℓ])` at every cube pair — both sides
/// reduce to `ℓ((c∘d)⁻¹(t))` guarded by interiority.
pub fn check_comonad_morphism<X: Space>(
    space: &X,
    elems: &[(Vec<Rational>, LoopMap<X>)],
    cube_pairs: &[(LittleCube, LittleCube)],
) -> MorphismCheckReport {
    let mut report = MorphismCheckReport::default();
    for (t, l) in elems {
        let n = l.dim();
        let peaked = alpha(
            n,
            space,
            &Susp::new(n, LoopSpace::new(n, space.clone())).point(t.clone(), l.clone()),
        );

        // Counit identity.
        report.checked += 1;
        let lhs = peaked.counit();
        let rhs = l.eval_coords(t.clone());
        if lhs != rhs {
            report
                .failures
                .push(format!("counit mismatch at t={:?}: {:?} != {:?}", t, lhs, rhs));
        }

        // Comultiplication identity, evaluated pointwise at cube pairs.
        let bar = bar_loop(l);
        let doubled = Susp::new(n, LoopSpace::new(n, bar.target().clone()))
            .point(t.clone(), bar.clone());
        let via_alpha_twice = functor_map(
            &alpha_map(n, space),
            &alpha(n, bar.target(), &doubled),
        );
        for (c, d) in cube_pairs {
            report.checked += 1;
            let lhs = via_alpha_twice.eval(c).eval(d);
            let rhs = peaked.comultiply(c).expect("dims agree").eval(d);
            if lhs != rhs {
                report.failures.push(format!(
                    "comultiplication mismatch at t={:?}, c={:?}, d={:?}: {:?} != {:?}",
                    t,
                    c.image(),
                    d.image(),
                    lhs,
                    rhs
                ));
            }
        }
    }
    report
}
