//! Closed subintervals of `[0,1]`, axis-aligned boxes, and the positive
//! affine reparameterizations `t ↦ scale·t + offset` used as cube components.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A closed interval `[lo, hi] ⊆ [0, 1]` (possibly degenerate).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi || lo.is_negative() || &hi > &Rational::one() {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn unit() -> Self {
        Interval { lo: Rational::zero(), hi: Rational::one() }
    }

    pub fn point(at: Rational) -> Result<Self> {
        Interval::new(at.clone(), at)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * Rational::half()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo <= t && t <= &self.hi
    }

    pub fn contains_interior(&self, t: &Rational) -> bool {
        &self.lo < t && t < &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Closed intersection; `None` when empty.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = Rational::max(&self.lo, &other.lo);
        let hi = Rational::min(&self.hi, &other.hi);
        (lo <= hi).then(|| Interval { lo, hi })
    }

    /// Do the open interiors meet?
    pub fn overlaps_interior(&self, other: &Interval) -> bool {
        Rational::max(&self.lo, &other.lo) < Rational::min(&self.hi, &other.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.lo, &self.hi].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [lo, hi] = <[Rational; 2]>::deserialize(d)?;
        Interval::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

/// An axis-aligned box `∏ [loᵢ, hiᵢ] ⊆ [0,1]ⁿ`, one closed interval per axis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct Rect {
    sides: Vec<Interval>,
}

impl Rect {
    pub fn new(sides: Vec<Interval>) -> Result<Self> {
        if sides.is_empty() {
            return Err(Error::DimMismatch { expected: 1, got: 0 });
        }
        Ok(Rect { sides })
    }

    pub fn unit(dim: usize) -> Self {
        Rect { sides: vec![Interval::unit(); dim.max(1)] }
    }

    pub fn point(coords: &[Rational]) -> Result<Self> {
        Rect::new(coords.iter().map(|c| Interval::point(c.clone())).collect::<Result<_>>()?)
    }

    pub fn dim(&self) -> usize {
        self.sides.len()
    }

    pub fn side(&self, axis: usize) -> &Interval {
        &self.sides[axis]
    }

    pub fn sides(&self) -> &[Interval] {
        &self.sides
    }

    pub fn is_point(&self) -> bool {
        self.sides.iter().all(Interval::is_point)
    }

    pub fn center(&self) -> Vec<Rational> {
        self.sides.iter().map(Interval::midpoint).collect()
    }

    pub fn contains_point(&self, p: &[Rational]) -> bool {
        debug_assert_eq!(p.len(), self.dim());
        self.sides.iter().zip(p).all(|(s, c)| s.contains(c))
    }

    pub fn contains_point_interior(&self, p: &[Rational]) -> bool {
        debug_assert_eq!(p.len(), self.dim());
        self.sides.iter().zip(p).all(|(s, c)| s.contains_interior(c))
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        debug_assert_eq!(other.dim(), self.dim());
        self.sides.iter().zip(&other.sides).all(|(a, b)| a.contains_interval(b))
    }

    pub fn intersect(&self, other: &Rect) -> Option<Rect> {
        debug_assert_eq!(other.dim(), self.dim());
        let sides: Option<Vec<_>> =
            self.sides.iter().zip(&other.sides).map(|(a, b)| a.intersect(b)).collect();
        sides.map(|sides| Rect { sides })
    }
}

/// One coordinate of a little cube: `t ↦ scale·t + offset` with `scale > 0`
/// and image `[offset, scale + offset] ⊆ [0, 1]`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct AffineComponent {
    scale: Rational,
    offset: Rational,
}

impl AffineComponent {
    pub fn new(scale: Rational, offset: Rational) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::NonPositiveScale(scale));
        }
        let hi = &scale + &offset;
        if offset.is_negative() || &hi > &Rational::one() {
            return Err(Error::ImageOutOfBounds { lo: offset, hi });
        }
        Ok(AffineComponent { scale, offset })
    }

    pub fn identity() -> Self {
        AffineComponent { scale: Rational::one(), offset: Rational::zero() }
    }

    /// The component whose image is the given non-degenerate interval.
    pub fn from_image(iv: &Interval) -> Result<Self> {
        if iv.is_point() {
            return Err(Error::DegenerateInterval(iv.lo().clone()));
        }
        AffineComponent::new(iv.width(), iv.lo().clone())
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn apply(&self, t: &Rational) -> Rational {
        &(&self.scale * t) + &self.offset
    }

    /// Exact affine inverse `(y - offset) / scale`; callers check membership.
    pub fn invert(&self, y: &Rational) -> Rational {
        &(y - &self.offset) / &self.scale
    }

    pub fn image(&self) -> Interval {
        Interval { lo: self.offset.clone(), hi: &self.scale + &self.offset }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &AffineComponent) -> AffineComponent {
        AffineComponent {
            scale: &self.scale * &inner.scale,
            offset: self.apply(&inner.offset),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn interval_validation() {
        assert!(Interval::new(q(1, 2), q(1, 4)).is_err());
        assert!(Interval::new(q(-1, 2), q(1, 4)).is_err());
        assert!(Interval::new(q(1, 2), q(5, 4)).is_err());
        assert!(Interval::new(q(1, 2), q(1, 2)).is_ok());
    }

    #[test]
    fn interval_ops() {
        let a = Interval::new(q(0, 1), q(1, 2)).unwrap();
        let b = Interval::new(q(1, 2), q(1, 1)).unwrap();
        let c = Interval::new(q(1, 4), q(3, 4)).unwrap();
        assert_eq!(a.intersect(&b), Some(Interval::new(q(1, 2), q(1, 2)).unwrap()));
        assert!(!a.overlaps_interior(&b));
        assert!(a.overlaps_interior(&c));
        assert_eq!(a.intersect(&c).unwrap(), Interval::new(q(1, 4), q(1, 2)).unwrap());
        assert_eq!(c.width(), q(1, 2));
        assert_eq!(c.midpoint(), q(1, 2));
        assert!(a.contains(&q(1, 2)));
        assert!(!a.contains_interior(&q(1, 2)));
    }

    #[test]
    fn rect_center_and_containment() {
        let r = Rect::new(vec![
            Interval::new(q(1, 4), q(3, 4)).unwrap(),
            Interval::new(q(0, 1), q(1, 2)).unwrap(),
        ])
        .unwrap();
        assert_eq!(r.center(), vec![q(1, 2), q(1, 4)]);
        assert!(r.contains_point(&[q(1, 4), q(0, 1)]));
        assert!(!r.contains_point_interior(&[q(1, 4), q(0, 1)]));
        assert!(!r.is_point());
        assert!(Rect::point(&[q(1, 3)]).unwrap().is_point());
    }

    #[test]
    fn affine_validation_and_ops() {
        assert!(AffineComponent::new(q(0, 1), q(1, 2)).is_err());
        assert!(AffineComponent::new(q(3, 4), q(1, 2)).is_err());
        let h = AffineComponent::new(q(1, 2), q(1, 2)).unwrap();
        assert_eq!(h.apply(&q(1, 2)), q(3, 4));
        assert_eq!(h.invert(&q(3, 4)), q(1, 2));
        assert_eq!(h.image(), Interval::new(q(1, 2), q(1, 1)).unwrap());
        let g = AffineComponent::new(q(1, 2), q(0, 1)).unwrap();
        // (h ∘ g)(t) = h(t/2) = t/4 + 1/2
        let hg = h.compose(&g);
        assert_eq!(hg.scale(), &q(1, 4));
        assert_eq!(hg.offset(), &q(1, 2));
        assert_eq!(AffineComponent::from_image(&hg.image()).unwrap(), hg);
    }

    fn arb_component() -> impl Strategy<Value = AffineComponent> {
        (1i64..64, 0i64..64).prop_filter_map("image in unit", |(s, o)| {
            AffineComponent::new(Rational::new(s, 64), Rational::new(o, 64)).ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

        #[test]
        fn compose_is_associative(a in arb_component(), b in arb_component(), c in arb_component()) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn invert_is_left_inverse(a in arb_component(), t in 0i64..=64) {
            let t = Rational::new(t, 64);
            prop_assert_eq!(a.invert(&a.apply(&t)), t);
        }

        #[test]
        fn image_of_compose_is_contained(a in arb_component(), b in arb_component()) {
            prop_assert!(a.image().contains_interval(&a.compose(&b).image()));
        }
    }
}
