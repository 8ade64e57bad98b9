//! Deterministic sample streams for the law suites.
//!
//! Every generator is indexed: the value at `(index, rng)` depends only on
//! the index and the rng's seed, and low indices come from a fixed
//! corner-case catalogue (identity cubes, boundary-touching cubes,
//! shared-face pairs, equator points) so that degenerate inputs are
//! exercised on every run regardless of sample count. Seeded values keep
//! all denominators at or below the configured bound before any
//! composition.

use cubeops_core::approximation::homotopy_h;
use cubeops_core::comonad::CnElem;
use cubeops_core::geometry::Rect;
use cubeops_core::operad::{Configuration, LittleCube};
use cubeops_core::rng::SplitMix64;
use cubeops_core::spaces::{
    identity_loop, FinitePointed, LoopMap, PointedMap, Sphere, SpherePoint, Susp,
    SuspensionPoint, UnitInterval,
};
use cubeops_core::Rational;
use serde::{Deserialize, Serialize};

/// Shared knobs for a harness run. `max_den_exp` bounds every generated
/// denominator by `2^max_den_exp` (before composition, which may grow
/// them); `oracle_budget` is the evaluation budget handed to the support
/// oracle wherever a law consults it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub n: usize,
    pub seed: u64,
    pub samples: u64,
    pub max_den_exp: u32,
    pub oracle_budget: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: 1, seed: 42, samples: 100, max_den_exp: 12, oracle_budget: 10_000 }
    }
}

impl SuiteConfig {
    pub fn max_den(&self) -> u64 {
        1u64 << self.max_den_exp
    }
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// A cube with every axis equal to `[lo, hi]`.
fn diagonal_cube(dim: usize, lo: Rational, hi: Rational) -> LittleCube {
    LittleCube::from_corners(&vec![(lo, hi); dim]).expect("valid corners")
}

/// Fixed degenerate cubes tried before any seeded sampling: the identity,
/// cubes touching the boundary at 0 and at 1, a centered cube, and a very
/// thin centered slab.
pub fn corner_cubes(dim: usize) -> Vec<LittleCube> {
    vec![
        LittleCube::identity(dim),
        diagonal_cube(dim, q(0, 1), q(1, 2)),
        diagonal_cube(dim, q(1, 2), q(1, 1)),
        diagonal_cube(dim, q(3, 8), q(5, 8)),
        diagonal_cube(dim, q(2047, 4096), q(2049, 4096)),
    ]
}

/// A seeded cube with per-axis rational corners of bounded denominator.
fn seeded_cube(dim: usize, max_den: u64, rng: &mut SplitMix64) -> LittleCube {
    let corners: Vec<(Rational, Rational)> = (0..dim)
        .map(|_| {
            let a = rng.rational(max_den);
            let b = rng.rational(max_den);
            let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
            if lo == hi {
                // Widen a degenerate draw by one grid step, staying in [0,1].
                let step = Rational::new(1, max_den as i64);
                if &hi + &step <= Rational::one() {
                    hi = &hi + &step;
                } else {
                    lo = &lo - &step;
                }
            }
            (lo, hi)
        })
        .collect();
    LittleCube::from_corners(&corners).expect("corners lie in [0,1] with lo < hi")
}

/// The cube stream: catalogue first, then seeded.
pub fn cube(dim: usize, max_den: u64, index: u64, rng: &mut SplitMix64) -> LittleCube {
    let catalogue = corner_cubes(dim);
    match catalogue.into_iter().nth(index as usize) {
        Some(c) => c,
        None => seeded_cube(dim, max_den, rng),
    }
}

/// Fixed interior points tried before seeded sampling: the equator point
/// and points close to both boundary faces.
pub fn corner_points(dim: usize) -> Vec<Vec<Rational>> {
    vec![
        vec![q(1, 2); dim],
        vec![q(1, 4); dim],
        vec![q(3, 4); dim],
        vec![q(1, 4096); dim],
        vec![q(4095, 4096); dim],
    ]
}

/// The interior-point stream: catalogue first, then seeded coordinates
/// strictly inside (0, 1).
pub fn interior_point(dim: usize, max_den: u64, index: u64, rng: &mut SplitMix64) -> Vec<Rational> {
    let catalogue = corner_points(dim);
    match catalogue.into_iter().nth(index as usize) {
        Some(p) => p,
        None => (0..dim).map(|_| rng.rational_interior(max_den)).collect(),
    }
}

/// Fixed arity-2 configurations: the standard halves first, then a
/// shared-face pair of unequal sizes, a pair with a gap, and (from
/// dimension 2 up) quadrant cubes meeting only in a corner.
fn corner_pairs(dim: usize) -> Vec<Configuration> {
    let full = (q(0, 1), q(1, 1));
    let axis0 = |a: (Rational, Rational), b: (Rational, Rational)| {
        let mut ca = vec![a];
        let mut cb = vec![b];
        for _ in 1..dim {
            ca.push(full.clone());
            cb.push(full.clone());
        }
        Configuration::new(
            dim,
            vec![
                LittleCube::from_corners(&ca).expect("valid corners"),
                LittleCube::from_corners(&cb).expect("valid corners"),
            ],
        )
        .expect("interiors disjoint")
    };
    let mut out = vec![
        Configuration::halves(dim),
        axis0((q(0, 1), q(1, 4)), (q(1, 4), q(1, 1))),
        axis0((q(0, 1), q(3, 8)), (q(5, 8), q(1, 1))),
    ];
    if dim >= 2 {
        out.push(
            Configuration::new(
                dim,
                vec![
                    diagonal_cube(dim, q(0, 1), q(1, 2)),
                    diagonal_cube(dim, q(1, 2), q(1, 1)),
                ],
            )
            .expect("quadrants are disjoint"),
        );
    }
    out
}

/// A seeded configuration built by recursive splitting: start from the
/// identity cube and keep cutting a piece along a random axis at an
/// interior rational until there are `arity` pieces; each piece is then
/// optionally shrunk away from its upper face, so shared faces survive in
/// roughly half the slots.
fn seeded_configuration(
    dim: usize,
    arity: usize,
    max_den: u64,
    rng: &mut SplitMix64,
) -> Configuration {
    let mut pieces: Vec<Vec<(Rational, Rational)>> = vec![vec![(q(0, 1), q(1, 1)); dim]];
    while pieces.len() < arity {
        let pick = rng.next_below(pieces.len() as u64) as usize;
        let axis = rng.next_below(dim as u64) as usize;
        let (lo, hi) = pieces[pick][axis].clone();
        let cut = &lo + &(&(&hi - &lo) * &rng.rational_interior(16));
        let mut right = pieces[pick].clone();
        pieces[pick][axis].1 = cut.clone();
        right[axis].0 = cut;
        pieces.push(right);
    }
    let cubes: Vec<LittleCube> = pieces
        .into_iter()
        .map(|mut corners| {
            if rng.next_ratio(1, 2) {
                for side in corners.iter_mut() {
                    let w = &side.1 - &side.0;
                    side.1 = &side.1 - &(&w * &rng.rational(max_den.min(16)) * &q(1, 4));
                }
            }
            LittleCube::from_corners(&corners).expect("split pieces are nondegenerate")
        })
        .collect();
    Configuration::new(dim, cubes).expect("split pieces have disjoint interiors")
}

/// The configuration stream for a fixed arity. For arity 2 the catalogue
/// of degenerate pairs comes first (standard halves at index 0); for other
/// arities index 0 is the equal axis-0 slicing.
pub fn configuration(
    dim: usize,
    arity: usize,
    max_den: u64,
    index: u64,
    rng: &mut SplitMix64,
) -> Configuration {
    if arity == 2 {
        let catalogue = corner_pairs(dim);
        if let Some(c) = catalogue.into_iter().nth(index as usize) {
            return c;
        }
    } else if index == 0 {
        if arity == 0 {
            return Configuration::empty(dim);
        }
        let slices: Vec<LittleCube> = (0..arity)
            .map(|i| {
                let mut corners = vec![(q(i as i64, arity as i64), q(i as i64 + 1, arity as i64))];
                corners.extend(vec![(q(0, 1), q(1, 1)); dim - 1]);
                LittleCube::from_corners(&corners).expect("valid slice")
            })
            .collect();
        return Configuration::new(dim, slices).expect("slices are disjoint");
    }
    seeded_configuration(dim, arity, max_den, rng)
}

/// The arity-2 stream used by the property (D) laws: halves first, then a
/// shared-face pair, then seeded disjoint pairs.
pub fn disjoint_pair(dim: usize, max_den: u64, index: u64, rng: &mut SplitMix64) -> Configuration {
    configuration(dim, 2, max_den, index, rng)
}

/// A pointed self-map of the sphere reversing every coordinate. Bijective,
/// hence base-reflecting.
pub fn reverse_map(n: usize) -> PointedMap<Sphere, Sphere> {
    PointedMap::new(Sphere::new(n), Sphere::new(n), "reverse", true, |p: &SpherePoint| match p {
        SpherePoint::Base => SpherePoint::Base,
        SpherePoint::Interior(coords) => {
            SpherePoint::from_coords(coords.iter().map(|c| Rational::one() - c).collect())
        }
    })
    .expect("reversal fixes the basepoint")
}

/// A piecewise-linear homeomorphism of [0, 1] sending `a` to `b` and
/// interpolating linearly on both sides.
fn knot_warp(t: &Rational, a: &Rational, b: &Rational) -> Rational {
    if t <= a {
        t * b / a
    } else {
        b + &(&(t - a) * &(Rational::one() - b) / (Rational::one() - a))
    }
}

/// The sphere-loop stream: identity, constant, reversal, coordinate
/// squaring, then seeded knot warps (per-axis PL reparametrizations).
pub fn sphere_loop(n: usize, index: u64, rng: &mut SplitMix64) -> LoopMap<Sphere> {
    let sphere = Sphere::new(n);
    match index {
        0 => identity_loop(&sphere),
        1 => LoopMap::constant(n, sphere),
        2 => LoopMap::from_fn(n, sphere, "reverse", |coords: &[Rational]| {
            SpherePoint::from_coords(coords.iter().map(|c| Rational::one() - c).collect())
        }),
        3 => LoopMap::from_fn(n, sphere, "square", |coords: &[Rational]| {
            SpherePoint::from_coords(coords.iter().map(|c| c * c).collect())
        }),
        _ => {
            let knots: Vec<(Rational, Rational)> =
                (0..n).map(|_| (rng.rational_interior(64), rng.rational_interior(64))).collect();
            LoopMap::from_fn(n, sphere, "warp", move |coords: &[Rational]| {
                SpherePoint::from_coords(
                    coords.iter().zip(&knots).map(|(t, (a, b))| knot_warp(t, a, b)).collect(),
                )
            })
        }
    }
}

/// The interval-loop stream: scaled bump loops `s ↦ λ · 2·dist(s, ∂Iⁿ)`,
/// maximal at the equator point, plus the constant loop at index 1.
pub fn interval_loop(n: usize, index: u64, rng: &mut SplitMix64) -> LoopMap<UnitInterval> {
    if index == 1 {
        return LoopMap::constant(n, UnitInterval);
    }
    let lambda = if index == 0 { Rational::one() } else { rng.rational_interior(64) };
    LoopMap::from_fn(n, UnitInterval, "bump", move |coords: &[Rational]| {
        let dist = coords
            .iter()
            .map(|c| Rational::min(c, &(Rational::one() - c)))
            .fold(Rational::one(), |acc, d| Rational::min(&acc, &d));
        &lambda * &(q(2, 1) * dist)
    })
}

/// Element constructors over the sphere that the harness ships laws for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphereElemKind {
    Trivial,
    Peaked,
    Precomposed,
    Expanded,
    PostMapped,
    Custom,
}

pub const SPHERE_ELEM_KINDS: [SphereElemKind; 6] = [
    SphereElemKind::Trivial,
    SphereElemKind::Peaked,
    SphereElemKind::Precomposed,
    SphereElemKind::Expanded,
    SphereElemKind::PostMapped,
    SphereElemKind::Custom,
];

/// Element constructors over the unit interval (dimension 1 only): the
/// width threshold and its precomposed/expanded forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalElemKind {
    Threshold,
    PrecomposedThreshold,
    ExpandedThreshold,
}

pub const INTERVAL_ELEM_KINDS: [IntervalElemKind; 3] = [
    IntervalElemKind::Threshold,
    IntervalElemKind::PrecomposedThreshold,
    IntervalElemKind::ExpandedThreshold,
];

/// A peaked element at a seeded interior point with a seeded loop. Index 0
/// peaks the identity loop at the equator.
fn seeded_peaked(n: usize, max_den: u64, index: u64, rng: &mut SplitMix64) -> CnElem<Sphere> {
    let t = interior_point(n, max_den, index, rng);
    // Skip the constant loop at stream index 1: a peaked element with a
    // trivial loop is the trivial element, which has its own kind.
    let l = sphere_loop(n, if index == 1 { 0 } else { index }, rng);
    CnElem::peaked(t, l).expect("interior peak point")
}

/// One element of the given sphere constructor kind.
pub fn sphere_element(
    n: usize,
    max_den: u64,
    kind: SphereElemKind,
    index: u64,
    rng: &mut SplitMix64,
) -> CnElem<Sphere> {
    match kind {
        SphereElemKind::Trivial => CnElem::trivial(n, Sphere::new(n)),
        SphereElemKind::Peaked => seeded_peaked(n, max_den, index, rng),
        SphereElemKind::Precomposed => {
            let base = seeded_peaked(n, max_den, index, rng);
            let c = cube(n, max_den, index, rng);
            base.precompose(&c).expect("dimensions agree")
        }
        SphereElemKind::Expanded => {
            let base = seeded_peaked(n, max_den, index, rng);
            let time = if index == 0 { q(1, 2) } else { rng.rational(16) };
            homotopy_h(&base, time)
        }
        SphereElemKind::PostMapped => {
            let base = seeded_peaked(n, max_den, index, rng);
            cubeops_core::comonad::functor_map(&reverse_map(n), &base)
        }
        SphereElemKind::Custom => {
            // Peaked semantics routed through the custom code path, with an
            // honest exact support hint.
            let t = interior_point(n, max_den, index, rng);
            let hint = Rect::point(&t).expect("point rect");
            let sphere = Sphere::new(n);
            CnElem::custom(n, sphere, "boxed-peak", Some(hint), move |c: &LittleCube| {
                if c.contains_interior(&t) {
                    SpherePoint::from_coords(c.preimage(&t))
                } else {
                    SpherePoint::Base
                }
            })
        }
    }
}

/// One element of the given interval constructor kind (always dimension 1).
pub fn interval_element(
    max_den: u64,
    kind: IntervalElemKind,
    index: u64,
    rng: &mut SplitMix64,
) -> CnElem<UnitInterval> {
    let a = if index == 0 { q(3, 4) } else { q(8 + rng.next_below(8) as i64, 16) };
    let threshold = CnElem::threshold(a).expect("1/2 <= a < 1");
    match kind {
        IntervalElemKind::Threshold => threshold,
        IntervalElemKind::PrecomposedThreshold => {
            let c = cube(1, max_den, index, rng);
            threshold.precompose(&c).expect("dimension 1")
        }
        IntervalElemKind::ExpandedThreshold => {
            let time = if index == 0 { q(1, 2) } else { rng.rational(16) };
            homotopy_h(&threshold, time)
        }
    }
}

/// The deliberately broken custom element: non-base on *every* cube, so
/// any disjoint pair already violates the determined-by-first-component
/// rule. Shipped only as a fixture for the violation suite.
pub fn broken_custom(n: usize) -> CnElem<Sphere> {
    let sphere = Sphere::new(n);
    let witness = vec![q(1, 2); n];
    CnElem::custom(n, sphere, "fixture-broken-constant", None, move |_c: &LittleCube| {
        SpherePoint::Interior(witness.clone())
    })
}

/// The three-point suspension `Σⁿ{∗, 1, 2}` used by the coalgebra and
/// recognition suites.
pub fn susp_space(n: usize) -> Susp<FinitePointed> {
    Susp::new(n, FinitePointed::new(3))
}

/// The suspension-point stream over [`susp_space`]: basepoint, the equator
/// over each non-base letter, then seeded interior points.
pub fn susp_point(
    n: usize,
    max_den: u64,
    index: u64,
    rng: &mut SplitMix64,
) -> SuspensionPoint<usize> {
    let space = susp_space(n);
    match index {
        0 => SuspensionPoint::Base,
        1 => space.point(vec![q(1, 2); n], 1),
        2 => space.point(vec![q(1, 2); n], 2),
        _ => {
            let t = interior_point(n, max_den, index, rng);
            let letter = 1 + rng.next_below(2) as usize;
            space.point(t, letter)
        }
    }
}

/// A seeded sphere point: base at index 0, interior otherwise.
pub fn sphere_point(n: usize, max_den: u64, index: u64, rng: &mut SplitMix64) -> SpherePoint {
    if index == 0 {
        SpherePoint::Base
    } else {
        SpherePoint::Interior(interior_point(n, max_den, index - 1, rng))
    }
}

/// A named sample stream rendered to plain data, for external consumers.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Generated {
    Cubes { items: Vec<LittleCube> },
    Configurations { items: Vec<Configuration> },
    Points { items: Vec<Vec<Rational>> },
}

/// Materializes `config.samples` values of the named stream. Known kinds:
/// `cube`, `configuration` (arity 2), `point`.
pub fn generate(kind: &str, config: &SuiteConfig) -> Result<Generated, String> {
    let law_seed = cubeops_core::rng::derive_seed(config.seed, kind);
    let each = |f: &mut dyn FnMut(u64, &mut SplitMix64)| {
        for index in 0..config.samples {
            let mut rng = SplitMix64::new(cubeops_core::rng::sample_seed(law_seed, index));
            f(index, &mut rng);
        }
    };
    match kind {
        "cube" => {
            let mut items = Vec::new();
            each(&mut |i, rng| items.push(cube(config.n, config.max_den(), i, rng)));
            Ok(Generated::Cubes { items })
        }
        "configuration" => {
            let mut items = Vec::new();
            each(&mut |i, rng| items.push(disjoint_pair(config.n, config.max_den(), i, rng)));
            Ok(Generated::Configurations { items })
        }
        "point" => {
            let mut items = Vec::new();
            each(&mut |i, rng| items.push(interior_point(config.n, config.max_den(), i, rng)));
            Ok(Generated::Points { items })
        }
        other => Err(format!("unknown generator kind `{other}`")),
    }
}
