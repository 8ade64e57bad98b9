//! The little n-cubes operad: tuples of axis-aligned affine embeddings of the
//! unit cube with pairwise disjoint open images, together with partial and
//! full composition, the symmetric action, restriction/extraction operators,
//! and a minimal abstract-operad interface used for genericity checks.
//!
//! Conventions: slot indices are zero-based throughout. The symmetric action
//! is `(c·σ)_j = c_{σ⁻¹(j)}`, so `extract(c·σ, j) = extract(c, σ⁻¹(j))` and
//! equivariance laws below are stated for that convention.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{AffineComponent, Interval, Rect};
use crate::rational::Rational;
use crate::rng::SplitMix64;

/// A single little n-cube: one positive affine component per axis.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LittleCube {
    components: Vec<AffineComponent>,
}

impl LittleCube {
    pub fn new(components: Vec<AffineComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::DimMismatch { expected: 1, got: 0 });
        }
        Ok(LittleCube { components })
    }

    pub fn identity(dim: usize) -> Self {
        LittleCube { components: vec![AffineComponent::identity(); dim.max(1)] }
    }

    /// The cube whose image is the given box (each side non-degenerate).
    pub fn from_image(rect: &Rect) -> Result<Self> {
        LittleCube::new(rect.sides().iter().map(AffineComponent::from_image).collect::<Result<_>>()?)
    }

    /// Convenience: a cube from `(lo, hi)` corner coordinate pairs.
    pub fn from_corners(corners: &[(Rational, Rational)]) -> Result<Self> {
        let sides = corners
            .iter()
            .map(|(lo, hi)| Interval::new(lo.clone(), hi.clone()))
            .collect::<Result<Vec<_>>>()?;
        LittleCube::from_image(&Rect::new(sides)?)
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, axis: usize) -> &AffineComponent {
        &self.components[axis]
    }

    pub fn components(&self) -> &[AffineComponent] {
        &self.components
    }

    /// The scale of one axis; for dimension 1 this is the cube's width.
    pub fn scale(&self, axis: usize) -> &Rational {
        self.components[axis].scale()
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(|c| c == &AffineComponent::identity())
    }

    pub fn apply(&self, point: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(point.len(), self.dim());
        self.components.iter().zip(point).map(|(c, t)| c.apply(t)).collect()
    }

    /// Exact affine preimage; meaningful inside the image, callers check.
    pub fn preimage(&self, point: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(point.len(), self.dim());
        self.components.iter().zip(point).map(|(c, t)| c.invert(t)).collect()
    }

    pub fn image(&self) -> Rect {
        Rect::new(self.components.iter().map(AffineComponent::image).collect())
            .expect("cube has at least one axis")
    }

    pub fn contains_interior(&self, point: &[Rational]) -> bool {
        self.image().contains_point_interior(point)
    }

    pub fn contains_closed(&self, point: &[Rational]) -> bool {
        self.image().contains_point(point)
    }

    /// `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &LittleCube) -> LittleCube {
        debug_assert_eq!(inner.dim(), self.dim());
        LittleCube {
            components: self
                .components
                .iter()
                .zip(&inner.components)
                .map(|(outer, inner)| outer.compose(inner))
                .collect(),
        }
    }

    pub fn interiors_disjoint(&self, other: &LittleCube) -> bool {
        debug_assert_eq!(other.dim(), self.dim());
        !self
            .components
            .iter()
            .zip(&other.components)
            .all(|(a, b)| a.image().overlaps_interior(&b.image()))
    }
}

impl Serialize for LittleCube {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.image().sides().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LittleCube {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let sides = Vec::<Interval>::deserialize(d)?;
        let rect = Rect::new(sides).map_err(serde::de::Error::custom)?;
        LittleCube::from_image(&rect).map_err(serde::de::Error::custom)
    }
}

/// A permutation of `0..degree`, stored as `map[i] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { map: (0..degree).collect() }
    }

    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        if i >= degree || j >= degree {
            return Err(Error::IndexOutOfRange { index: i.max(j), arity: degree });
        }
        let mut map: Vec<usize> = (0..degree).collect();
        map.swap(i, j);
        Ok(Permutation { map })
    }

    pub fn random(degree: usize, rng: &mut SplitMix64) -> Self {
        let mut map: Vec<usize> = (0..degree).collect();
        rng.shuffle(&mut map);
        Permutation { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(other.degree(), self.degree());
        Permutation { map: other.map.iter().map(|&i| self.map[i]).collect() }
    }

    /// The block permutation `σ⟨s₀,…,s_{r−1}⟩` on `Σ sizes` letters: letter
    /// `k` of source block `i` goes to letter `k` of target block `σ(i)`,
    /// where the target layout lists block `σ⁻¹(j)`'s letters at slot `j`.
    pub fn block(&self, sizes: &[usize]) -> Result<Permutation> {
        if sizes.len() != self.degree() {
            return Err(Error::ArityMismatch { expected: self.degree(), got: sizes.len() });
        }
        let inv = self.inverse();
        let mut target_offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for j in 0..sizes.len() {
            target_offsets.push(acc);
            acc += sizes[inv.apply(j)];
        }
        let mut map = Vec::with_capacity(acc);
        for (i, &size) in sizes.iter().enumerate() {
            let base = target_offsets[self.apply(i)];
            map.extend((0..size).map(|k| base + k));
        }
        Permutation::new(map)
    }
}

/// An element of the little n-cubes operad: finitely many little cubes with
/// pairwise disjoint open images. Arity 0 (no cubes) is allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Configuration {
    dim: usize,
    cubes: Vec<LittleCube>,
}

impl Configuration {
    pub fn new(dim: usize, cubes: Vec<LittleCube>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimMismatch { expected: 1, got: 0 });
        }
        for cube in &cubes {
            if cube.dim() != dim {
                return Err(Error::DimMismatch { expected: dim, got: cube.dim() });
            }
        }
        for i in 0..cubes.len() {
            for j in (i + 1)..cubes.len() {
                if !cubes[i].interiors_disjoint(&cubes[j]) {
                    return Err(Error::Overlap { first: i, second: j });
                }
            }
        }
        Ok(Configuration { dim, cubes })
    }

    pub fn single(cube: LittleCube) -> Self {
        Configuration { dim: cube.dim(), cubes: vec![cube] }
    }

    pub fn identity(dim: usize) -> Self {
        Configuration::single(LittleCube::identity(dim))
    }

    pub fn empty(dim: usize) -> Self {
        Configuration { dim: dim.max(1), cubes: Vec::new() }
    }

    /// The standard halves configuration: axis 0 split at 1/2, full elsewhere.
    pub fn halves(dim: usize) -> Self {
        let dim = dim.max(1);
        let half = |offset: Rational| {
            let mut comps = vec![AffineComponent::new(Rational::half(), offset).unwrap()];
            comps.extend(std::iter::repeat_with(AffineComponent::identity).take(dim - 1));
            LittleCube::new(comps).unwrap()
        };
        Configuration { dim, cubes: vec![half(Rational::zero()), half(Rational::half())] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.cubes.len()
    }

    pub fn cube(&self, slot: usize) -> &LittleCube {
        &self.cubes[slot]
    }

    pub fn cubes(&self) -> &[LittleCube] {
        &self.cubes
    }

    /// Partial composition `self ∘_slot inner`: replace the cube at `slot`
    /// with `inner`'s cubes pushed forward through it.
    pub fn partial_compose(&self, slot: usize, inner: &Configuration) -> Result<Configuration> {
        if slot >= self.arity() {
            return Err(Error::IndexOutOfRange { index: slot, arity: self.arity() });
        }
        if inner.dim != self.dim {
            return Err(Error::DimMismatch { expected: self.dim, got: inner.dim });
        }
        let mut cubes = Vec::with_capacity(self.arity() + inner.arity() - 1);
        cubes.extend_from_slice(&self.cubes[..slot]);
        cubes.extend(inner.cubes.iter().map(|d| self.cubes[slot].compose(d)));
        cubes.extend_from_slice(&self.cubes[slot + 1..]);
        Configuration::new(self.dim, cubes)
    }

    /// Full composition `γ(self; args[0], …, args[r−1])`.
    pub fn full_compose(&self, args: &[Configuration]) -> Result<Configuration> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: args.len() });
        }
        let mut cubes = Vec::new();
        for (c, arg) in self.cubes.iter().zip(args) {
            if arg.dim != self.dim {
                return Err(Error::DimMismatch { expected: self.dim, got: arg.dim });
            }
            cubes.extend(arg.cubes.iter().map(|d| c.compose(d)));
        }
        Configuration::new(self.dim, cubes)
    }

    /// The symmetric action `(self·σ)_j = self_{σ⁻¹(j)}`.
    pub fn act(&self, sigma: &Permutation) -> Result<Configuration> {
        if sigma.degree() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: sigma.degree() });
        }
        let inv = sigma.inverse();
        let cubes = (0..self.arity()).map(|j| self.cubes[inv.apply(j)].clone()).collect();
        Ok(Configuration { dim: self.dim, cubes })
    }

    /// Restriction `d_slot`: forget the cube at `slot`.
    pub fn restrict(&self, slot: usize) -> Result<Configuration> {
        if slot >= self.arity() {
            return Err(Error::IndexOutOfRange { index: slot, arity: self.arity() });
        }
        let mut cubes = self.cubes.clone();
        cubes.remove(slot);
        Ok(Configuration { dim: self.dim, cubes })
    }

    /// Extraction `D_slot` — the composite of all restrictions except
    /// `d_slot`, which leaves exactly the cube at `slot`.
    pub fn extract(&self, slot: usize) -> Result<LittleCube> {
        if slot >= self.arity() {
            return Err(Error::IndexOutOfRange { index: slot, arity: self.arity() });
        }
        Ok(self.cubes[slot].clone())
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigurationJson {
    dim: usize,
    cubes: Vec<LittleCube>,
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConfigurationJson { dim: self.dim, cubes: self.cubes.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ConfigurationJson::deserialize(d)?;
        Configuration::new(raw.dim, raw.cubes).map_err(serde::de::Error::custom)
    }
}

/// The fragment of an operad needed to probe comonad-element genericity:
/// a unit, arity-2 extraction operators, and sampled arity-2 elements.
pub trait AbstractOperad {
    type El1: Clone + fmt::Debug;
    type El2: Clone + fmt::Debug;

    fn unit(&self) -> Self::El1;

    /// `D_slot` on arity-2 elements, `slot ∈ {0, 1}`.
    fn extract2(&self, theta: &Self::El2, slot: usize) -> Self::El1;

    /// Deterministic sample of arity-2 elements for the given seed.
    fn arity2_samples(&self, seed: u64, count: usize) -> Vec<Self::El2>;
}

/// The terminal operad: one point in every arity. It is reduced (`P(1)` is a
/// point), so only trivial comonad elements exist over it.
#[derive(Clone, Copy, Debug, Default)]
pub struct OnePointOperad;

impl AbstractOperad for OnePointOperad {
    type El1 = ();
    type El2 = ();

    fn unit(&self) -> () {}

    fn extract2(&self, _theta: &(), _slot: usize) -> () {}

    fn arity2_samples(&self, _seed: u64, count: usize) -> Vec<()> {
        vec![(); count]
    }
}

/// The little n-cubes operad as an [`AbstractOperad`].
#[derive(Clone, Copy, Debug)]
pub struct LittleCubesOperad {
    pub dim: usize,
}

impl AbstractOperad for LittleCubesOperad {
    type El1 = LittleCube;
    type El2 = Configuration;

    fn unit(&self) -> LittleCube {
        LittleCube::identity(self.dim)
    }

    fn extract2(&self, theta: &Configuration, slot: usize) -> LittleCube {
        theta.extract(slot).expect("arity-2 element")
    }

    fn arity2_samples(&self, seed: u64, count: usize) -> Vec<Configuration> {
        let mut rng = SplitMix64::new(seed);
        let mut out = vec![Configuration::halves(self.dim)];
        while out.len() < count {
            out.push(random_disjoint_pair(self.dim, &mut rng));
        }
        out.truncate(count);
        out
    }
}

/// A seeded arity-2 configuration: split the unit cube along one axis at an
/// interior dyadic-denominator cut, then shrink each half independently.
pub fn random_disjoint_pair(dim: usize, rng: &mut SplitMix64) -> Configuration {
    let axis = rng.next_below(dim as u64) as usize;
    let cut = rng.rational_interior(64);
    let make = |rng: &mut SplitMix64, lo: &Rational, hi: &Rational| {
        let keep_full = rng.next_ratio(1, 4);
        let (lo, hi) = if keep_full {
            (lo.clone(), hi.clone())
        } else {
            // Shrink within [lo, hi] while keeping exact endpoints.
            let w = hi - lo;
            let lo2 = lo + &(&w * &rng.rational(16) * Rational::new(1, 4));
            let hi2 = &lo2 + &(&w * &(Rational::new(1, 2) + rng.rational(16) * Rational::new(1, 4)));
            (lo2, Rational::min(&hi2, hi))
        };
        (lo, hi)
    };
    let (alo, ahi) = make(rng, &Rational::zero(), &cut);
    let (blo, bhi) = make(rng, &cut, &Rational::one());
    let cube_for = |lo: Rational, hi: Rational| {
        let mut corners = Vec::with_capacity(dim);
        for a in 0..dim {
            if a == axis {
                corners.push((lo.clone(), hi.clone()));
            } else {
                corners.push((Rational::zero(), Rational::one()));
            }
        }
        LittleCube::from_corners(&corners).expect("valid split cube")
    };
    Configuration::new(dim, vec![cube_for(alo, ahi), cube_for(blo, bhi)])
        .expect("halves of a split are disjoint")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    fn cube1(lo: (i64, i64), hi: (i64, i64)) -> LittleCube {
        LittleCube::from_corners(&[(q(lo.0, lo.1), q(hi.0, hi.1))]).unwrap()
    }

    #[test]
    fn halves_compose_into_quarters() {
        // γ(([0,1/2],[1/2,1]); ([0,1/2]), ([1/2,1])) = ([0,1/4], [3/4,1]).
        let outer = Configuration::halves(1);
        let lower = Configuration::single(cube1((0, 1), (1, 2)));
        let upper = Configuration::single(cube1((1, 2), (1, 1)));
        let got = outer.full_compose(&[lower, upper]).unwrap();
        assert_eq!(got.cube(0), &cube1((0, 1), (1, 4)));
        assert_eq!(got.cube(1), &cube1((3, 4), (1, 1)));
    }

    #[test]
    fn partial_compose_inserts_in_place() {
        let outer = Configuration::halves(1);
        let inner = Configuration::halves(1);
        let got = outer.partial_compose(1, &inner).unwrap();
        assert_eq!(got.arity(), 3);
        assert_eq!(got.cube(0), &cube1((0, 1), (1, 2)));
        assert_eq!(got.cube(1), &cube1((1, 2), (3, 4)));
        assert_eq!(got.cube(2), &cube1((3, 4), (1, 1)));
        assert!(outer.partial_compose(2, &inner).is_err());
    }

    #[test]
    fn overlap_is_rejected() {
        let a = cube1((0, 1), (2, 3));
        let b = cube1((1, 2), (1, 1));
        assert_eq!(
            Configuration::new(1, vec![a, b]).unwrap_err(),
            Error::Overlap { first: 0, second: 1 }
        );
        // Sharing a face is fine.
        let a = cube1((0, 1), (1, 2));
        let b = cube1((1, 2), (1, 1));
        assert!(Configuration::new(1, vec![a, b]).is_ok());
    }

    #[test]
    fn action_uses_inverse_indexing() {
        let theta = Configuration::halves(1);
        let sigma = Permutation::transposition(2, 0, 1).unwrap();
        let acted = theta.act(&sigma).unwrap();
        // (θ·σ)_0 = θ_{σ⁻¹(0)} = θ_1
        assert_eq!(acted.cube(0), theta.cube(1));
        assert_eq!(acted.cube(1), theta.cube(0));
        assert_eq!(acted.extract(0).unwrap(), theta.extract(sigma.inverse().apply(0)).unwrap());
    }

    #[test]
    fn action_is_a_right_action() {
        let mut rng = SplitMix64::new(5);
        for _ in 0..20 {
            let theta = random_disjoint_pair(2, &mut rng)
                .partial_compose(0, &Configuration::halves(2))
                .unwrap();
            let sigma = Permutation::random(3, &mut rng);
            let tau = Permutation::random(3, &mut rng);
            let lhs = theta.act(&sigma).unwrap().act(&tau).unwrap();
            let rhs = theta.act(&tau.compose(&sigma)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn simplicial_identity() {
        // d_i d_j = d_{j−1} d_i for i < j (zero-based).
        let theta = Configuration::halves(1).partial_compose(0, &Configuration::halves(1)).unwrap();
        for i in 0..2 {
            for j in (i + 1)..3 {
                let lhs = theta.restrict(j).unwrap().restrict(i).unwrap();
                let rhs = theta.restrict(i).unwrap().restrict(j - 1).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn extraction_matches_restriction_composite() {
        let theta = Configuration::halves(1).partial_compose(1, &Configuration::halves(1)).unwrap();
        for slot in 0..theta.arity() {
            let mut cfg = theta.clone();
            // Apply d_k for every k ≠ slot, from the top down.
            for k in (0..theta.arity()).rev() {
                if k != slot {
                    cfg = cfg.restrict(k).unwrap();
                }
            }
            assert_eq!(cfg.arity(), 1);
            assert_eq!(cfg.cube(0), &theta.extract(slot).unwrap());
        }
    }

    #[test]
    fn composition_equivariance_via_block_permutation() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..20 {
            let c = random_disjoint_pair(1, &mut rng);
            let d0 = random_disjoint_pair(1, &mut rng);
            let d1 = Configuration::identity(1);
            let sigma = Permutation::random(2, &mut rng);
            let inv = sigma.inverse();
            let args = [d0.clone(), d1.clone()];
            let permuted_args: Vec<_> =
                (0..2).map(|j| args[inv.apply(j)].clone()).collect();
            let lhs = c.act(&sigma).unwrap().full_compose(&permuted_args).unwrap();
            let sizes: Vec<usize> = args.iter().map(Configuration::arity).collect();
            let rhs = c
                .full_compose(&args)
                .unwrap()
                .act(&sigma.block(&sizes).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn block_permutation_hand_example() {
        // σ = (0 1) on blocks of sizes [2, 1]: letters 0,1 (block 0) move to
        // the back, letter 2 (block 1) moves to the front.
        let sigma = Permutation::transposition(2, 0, 1).unwrap();
        let block = sigma.block(&[2, 1]).unwrap();
        assert_eq!((0..3).map(|i| block.apply(i)).collect::<Vec<_>>(), vec![1, 2, 0]);
    }

    #[test]
    fn serde_round_trip() {
        let theta = Configuration::halves(2);
        let json = serde_json::to_string(&theta).unwrap();
        assert_eq!(
            json,
            "{\"dim\":2,\"cubes\":[[[\"0\",\"1/2\"],[\"0\",\"1\"]],[[\"1/2\",\"1\"],[\"0\",\"1\"]]]}"
        );
        let back: Configuration = serde_json::from_str(&json).unwrap();
        assert_eq!(back, theta);
        // Overlapping input is rejected at parse time.
        let bad = "{\"dim\":1,\"cubes\":[[[\"0\",\"2/3\"]],[[\"1/2\",\"1\"]]]}";
        assert!(serde_json::from_str::<Configuration>(bad).is_err());
    }

    #[test]
    fn one_point_operad_has_trivial_extractions() {
        let op = OnePointOperad;
        assert_eq!(op.arity2_samples(0, 3).len(), 3);
        op.extract2(&(), 0);
        op.extract2(&(), 1);
    }

    #[test]
    fn little_cubes_samples_start_with_halves() {
        let op = LittleCubesOperad { dim: 1 };
        let samples = op.arity2_samples(42, 5);
        assert_eq!(samples[0], Configuration::halves(1));
        for s in &samples {
            assert_eq!(s.arity(), 2);
        }
    }
}
