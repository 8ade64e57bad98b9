//! Deterministic probe sets backing the map-equality protocol.
//!
//! Closure-backed maps cannot be compared structurally, so two loops (or two
//! comonad elements) are declared equal exactly when they agree on the probe
//! set for their dimension: a coarse interior grid plus a fixed number of
//! seeded points (or a small cube catalogue plus seeded cubes). The seed is a
//! compile-time constant — never derived from user seeds — so the protocol
//! gives the same verdict in every run, process, and execution mode.

use crate::operad::LittleCube;
use crate::rational::Rational;
use crate::rng::SplitMix64;

/// Fixed seed for the probe streams. Changing it changes the equality
/// protocol, so it is part of the library's behavior, not configuration.
pub const PROBE_SEED: u64 = 0x9D0B_E590_1CE5_EED5;

/// Seeded interior points per dimension in [`probe_coords`].
pub const SEEDED_POINTS: usize = 8;

/// Seeded cubes per dimension in [`probe_cubes`].
pub const SEEDED_CUBES: usize = 8;

/// The interior grid `{1/4, 1/2, 3/4}ⁿ` in odometer order.
pub fn interior_grid(dim: usize) -> Vec<Vec<Rational>> {
    let axis = [Rational::new(1, 4), Rational::half(), Rational::new(3, 4)];
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(out.len() * 3);
        for prefix in &out {
            for value in &axis {
                let mut point = prefix.clone();
                point.push(value.clone());
                next.push(point);
            }
        }
        out = next;
    }
    out
}

/// Probe points for maps out of the n-sphere: the interior grid plus
/// [`SEEDED_POINTS`] seeded interior points. (The basepoint is implicit:
/// pointed maps agree there by construction.)
pub fn probe_coords(dim: usize) -> Vec<Vec<Rational>> {
    let mut out = interior_grid(dim);
    let mut rng = SplitMix64::new(PROBE_SEED ^ dim as u64);
    for _ in 0..SEEDED_POINTS {
        out.push((0..dim).map(|_| rng.rational_interior(64)).collect());
    }
    out
}

/// Probe cubes for comonad elements: a catalogue (identity, per-axis halves
/// — a shared-face pair —, centered, two corner cubes, a thin slab) plus
/// [`SEEDED_CUBES`] seeded cubes.
pub fn probe_cubes(dim: usize) -> Vec<LittleCube> {
    let q = Rational::new;
    let mut out = vec![LittleCube::identity(dim)];
    let with_axis = |axis: usize, lo: Rational, hi: Rational| {
        let corners: Vec<(Rational, Rational)> = (0..dim)
            .map(|a| {
                if a == axis {
                    (lo.clone(), hi.clone())
                } else {
                    (Rational::zero(), Rational::one())
                }
            })
            .collect();
        LittleCube::from_corners(&corners).expect("catalogue cube")
    };
    for axis in 0..dim {
        out.push(with_axis(axis, q(0, 1), q(1, 2)));
        out.push(with_axis(axis, q(1, 2), q(1, 1)));
    }
    let boxed = |lo: Rational, hi: Rational| {
        LittleCube::from_corners(&vec![(lo, hi); dim]).expect("catalogue cube")
    };
    out.push(boxed(q(1, 4), q(3, 4)));
    out.push(boxed(q(0, 1), q(1, 4)));
    out.push(boxed(q(3, 4), q(1, 1)));
    out.push(boxed(q(15, 32), q(17, 32)));
    let mut rng = SplitMix64::new(PROBE_SEED.wrapping_add(dim as u64));
    for _ in 0..SEEDED_CUBES {
        let corners: Vec<(Rational, Rational)> = (0..dim)
            .map(|_| {
                let lo = rng.next_below(64);
                let hi = lo + 1 + rng.next_below(64 - lo);
                (Rational::new(lo as i64, 64), Rational::new(hi as i64, 64))
            })
            .collect();
        out.push(LittleCube::from_corners(&corners).expect("seeded probe cube"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_has_expected_size_and_order() {
        assert_eq!(interior_grid(1).len(), 3);
        assert_eq!(interior_grid(2).len(), 9);
        assert_eq!(interior_grid(3).len(), 27);
        assert_eq!(interior_grid(1)[0], vec![Rational::new(1, 4)]);
        assert_eq!(interior_grid(2)[1], vec![Rational::new(1, 4), Rational::half()]);
    }

    #[test]
    fn probes_are_deterministic() {
        assert_eq!(probe_coords(2), probe_coords(2));
        assert_eq!(probe_cubes(2), probe_cubes(2));
        assert_eq!(probe_coords(1).len(), 3 + SEEDED_POINTS);
        assert_eq!(probe_cubes(1).len(), 1 + 2 + 4 + SEEDED_CUBES);
    }

    #[test]
    fn probe_points_are_interior() {
        for p in probe_coords(3) {
            assert!(p.iter().all(Rational::in_open_unit));
        }
    }

    #[test]
    fn probe_cubes_include_a_shared_face_pair() {
        let cubes = probe_cubes(1);
        let lower = LittleCube::from_corners(&[(Rational::zero(), Rational::half())]).unwrap();
        let upper = LittleCube::from_corners(&[(Rational::half(), Rational::one())]).unwrap();
        assert!(cubes.contains(&lower));
        assert!(cubes.contains(&upper));
        assert!(cubes.contains(&LittleCube::identity(1)));
    }
}
