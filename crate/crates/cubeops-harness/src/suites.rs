//! The law registry and the deterministic suite runner.
//!
//! A law is a plain function of `(config, case)` where the case carries its
//! index in the stream and a seed derived from
//! `(root seed, suite name, law name, index)`. Every case always runs — no
//! short-circuiting — so sequential and parallel execution produce the same
//! report; a failing law records the counterexample with the smallest case
//! index, and [`replay`] re-runs exactly that case from the recorded seed.

use std::time::Instant;

use cubeops_core::approximation::{
    alpha, center, check_comonad_morphism, csupp, csupp_oracle, homotopy_h, psi,
};
use cubeops_core::coalgebra::{
    coend_to_comonadic, comonadic_to_coend, nabla_sphere, nabla_suspension, CoalgebraStructure,
    SphereCoalgebra, SuspensionCoalgebra,
};
use cubeops_core::comonad::{functor_map, generic_comonad_element, CnElem, CnSpace};
use cubeops_core::convolution::may_action;
use cubeops_core::geometry::Rect;
use cubeops_core::operad::{Configuration, LittleCube, OnePointOperad, Permutation};
use cubeops_core::recognition::{
    cosplit_check, in_s, induced_structure, pn_membership, pushforward_structure, retraction,
    retraction_homotopy, sigma_cosplit_check, sigma_eta, sphere_structure, suspension_counit,
    suspension_structure, SigmaOmegaCoalgebra,
};
use cubeops_core::rng::{derive_seed, sample_seed, SplitMix64};
use cubeops_core::spaces::{
    generator_loop, LoopMap, LoopSpace, PointedMap, Space, Sphere, SpherePoint, Susp,
    SuspensionPoint, UnitInterval, WedgePoint,
};
use cubeops_core::Rational;

use crate::gen::{self, SuiteConfig, INTERVAL_ELEM_KINDS, SPHERE_ELEM_KINDS};
use crate::report::{Counterexample, LawReport, RunOutcome, RunReport, SuiteReport, SuiteTiming};

/// One indexed case of a law's sample stream.
#[derive(Clone, Copy, Debug)]
pub struct Case {
    pub index: u64,
    pub seed: u64,
}

impl Case {
    pub fn rng(&self) -> SplitMix64 {
        SplitMix64::new(self.seed)
    }
}

/// How many cases a law runs: the configured sample count, or a fixed
/// count for laws whose input space is a small explicit grid.
#[derive(Clone, Copy, Debug)]
pub enum SampleCount {
    FromConfig,
    Fixed(u64),
}

pub struct Law {
    pub name: &'static str,
    pub samples: SampleCount,
    pub run: fn(&SuiteConfig, &Case) -> Result<(), String>,
}

pub struct Suite {
    pub name: &'static str,
    pub laws: Vec<Law>,
}

/// Case-execution strategy. `Parallel` falls back to sequential execution
/// when the `parallel` feature is disabled; the report is identical either
/// way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ce<T>(r: cubeops_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("unexpected core error: {e}"))
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

// ---------------------------------------------------------------------------
// operad.laws

fn law_operad_unit(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let dim = cfg.n;
    let arity = 1 + (case.index % 4) as usize;
    let theta = gen::configuration(dim, arity, cfg.max_den(), case.index, &mut rng);
    let ids: Vec<Configuration> = (0..arity).map(|_| Configuration::identity(dim)).collect();
    ensure(ce(theta.full_compose(&ids))? == theta, || {
        format!("right unit failed for arity {arity} at case {}", case.index)
    })?;
    ensure(ce(Configuration::identity(dim).partial_compose(0, &theta))? == theta, || {
        format!("left unit failed for arity {arity} at case {}", case.index)
    })
}

fn law_operad_assoc_nested(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let dim = cfg.n;
    let r = 2 + (case.index % 2) as usize;
    let s = 1 + (case.index % 3) as usize;
    let p = 1 + ((case.index / 3) % 3) as usize;
    let theta = gen::configuration(dim, r, cfg.max_den(), case.index, &mut rng);
    let beta = gen::configuration(dim, s, cfg.max_den(), case.index + 1, &mut rng);
    let gamma = gen::configuration(dim, p, cfg.max_den(), case.index + 2, &mut rng);
    let i = (rng.next_below(r as u64)) as usize;
    let j = (rng.next_below(s as u64)) as usize;
    let lhs = ce(ce(theta.partial_compose(i, &beta))?.partial_compose(i + j, &gamma))?;
    let rhs = ce(theta.partial_compose(i, &ce(beta.partial_compose(j, &gamma))?))?;
    ensure(lhs == rhs, || {
        format!("nested associativity failed at case {} (i={i}, j={j})", case.index)
    })
}

fn law_operad_assoc_parallel(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let dim = cfg.n;
    let r = 2 + (case.index % 3) as usize;
    let theta = gen::configuration(dim, r, cfg.max_den(), case.index, &mut rng);
    let s = 1 + (case.index % 2) as usize;
    let beta = gen::configuration(dim, s, cfg.max_den(), case.index + 1, &mut rng);
    let gamma =
        gen::configuration(dim, 1 + ((case.index / 2) % 2) as usize, cfg.max_den(), case.index + 2, &mut rng);
    let i = 0usize;
    let j = 1 + (rng.next_below((r - 1) as u64)) as usize;
    let lhs = ce(ce(theta.partial_compose(j, &gamma))?.partial_compose(i, &beta))?;
    let rhs = ce(ce(theta.partial_compose(i, &beta))?.partial_compose(j + s - 1, &gamma))?;
    ensure(lhs == rhs, || {
        format!("parallel associativity failed at case {} (i={i}, j={j})", case.index)
    })
}

fn law_operad_assoc_block(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let dim = cfg.n;
    let r = 1 + (case.index % 3) as usize;
    let theta = gen::configuration(dim, r, cfg.max_den(), case.index, &mut rng);
    let args: Vec<Configuration> = (0..r)
        .map(|k| {
            let arity = 1 + ((case.index as usize + k) % 2);
            gen::configuration(dim, arity, cfg.max_den(), case.index + 1 + k as u64, &mut rng)
        })
        .collect();
    let inner: Vec<Vec<Configuration>> = args
        .iter()
        .enumerate()
        .map(|(k, b)| {
            (0..b.arity())
                .map(|j| {
                    let arity = 1 + ((case.index as usize + k + j) % 2);
                    gen::configuration(
                        dim,
                        arity,
                        cfg.max_den(),
                        case.index + 7 + (k + 3 * j) as u64,
                        &mut rng,
                    )
                })
                .collect()
        })
        .collect();
    let middle = ce(theta.full_compose(&args))?;
    let flat: Vec<Configuration> = inner.iter().flatten().cloned().collect();
    let lhs = ce(middle.full_compose(&flat))?;
    let collapsed: Vec<Configuration> = args
        .iter()
        .zip(&inner)
        .map(|(b, g)| ce(b.full_compose(g)))
        .collect::<Result<_, _>>()?;
    let rhs = ce(theta.full_compose(&collapsed))?;
    ensure(lhs == rhs, || format!("block associativity failed at case {}", case.index))
}

fn law_operad_equivariance_compose(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let dim = cfg.n;
    let r = 2 + (case.index % 2) as usize;
    let theta = gen::configuration(dim, r, cfg.max_den(), case.index, &mut rng);
    let args: Vec<Configuration> = (0..r)
        .map(|k| {
            let arity = 1 + ((case.index as usize + k) % 2);
            gen::configuration(dim, arity, cfg.max_den(), case.index + 1 + k as u64, &mut rng)
        })
        .collect();
    let sigma = Permutation::random(r, &mut rng);
    let inv = sigma.inverse();
    let permuted: Vec<Configuration> = (0..r).map(|j| args[inv.apply(j)].clone()).collect();
    let lhs = ce(ce(theta.act(&sigma))?.full_compose(&permuted))?;
    let sizes: Vec<usize> = args.iter().map(Configuration::arity).collect();
    let rhs = ce(ce(theta.full_compose(&args))?.act(&ce(sigma.block(&sizes))?))?;
    ensure(lhs == rhs, || format!("composition equivariance failed at case {}", case.index))
}

fn law_operad_equivariance_action(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let dim = cfg.n;
    let r = 2 + (case.index % 3) as usize;
    let theta = gen::configuration(dim, r, cfg.max_den(), case.index, &mut rng);
    let sigma = Permutation::random(r, &mut rng);
    let tau = Permutation::random(r, &mut rng);
    let lhs = ce(ce(theta.act(&sigma))?.act(&tau))?;
    let rhs = ce(theta.act(&tau.compose(&sigma)))?;
    ensure(lhs == rhs, || format!("action compatibility failed at case {}", case.index))
}

fn law_operad_simplicial(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let dim = cfg.n;
    let r = 3 + (case.index % 2) as usize;
    let theta = gen::configuration(dim, r, cfg.max_den(), case.index, &mut rng);
    for j in 1..r {
        for i in 0..j {
            let lhs = ce(ce(theta.restrict(j))?.restrict(i))?;
            let rhs = ce(ce(theta.restrict(i))?.restrict(j - 1))?;
            ensure(lhs == rhs, || {
                format!("simplicial identity failed at case {} (i={i}, j={j})", case.index)
            })?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// comonad.axioms

fn axiom_counit_left<X: Space>(f: &CnElem<X>, what: &str) -> Result<(), String> {
    ensure(f.delta().counit() == *f, || format!("Δ followed by outer ε failed for {what}"))
}

fn axiom_counit_right<X: Space>(n: usize, f: &CnElem<X>, what: &str) -> Result<(), String> {
    let space = f.space().clone();
    let eps = PointedMap::new(
        CnSpace::new(n, space.clone()),
        space,
        "counit",
        false,
        |g: &CnElem<X>| g.counit(),
    )
    .expect("counit preserves the basepoint");
    ensure(functor_map(&eps, &f.delta()) == *f, || format!("C(ε) after Δ failed for {what}"))
}

fn axiom_coassoc<X: Space>(
    n: usize,
    f: &CnElem<X>,
    c: &LittleCube,
    d: &LittleCube,
    what: &str,
) -> Result<(), String> {
    let space = f.space().clone();
    let delta_map = PointedMap::new(
        CnSpace::new(n, space.clone()),
        CnSpace::new(n, CnSpace::new(n, space)),
        "delta",
        false,
        |g: &CnElem<X>| g.delta(),
    )
    .expect("delta preserves the basepoint");
    let lhs = f.delta().delta();
    let rhs = functor_map(&delta_map, &f.delta());
    ensure(lhs.eval(c).eval(d) == rhs.eval(c).eval(d), || {
        format!("coassociativity failed for {what} at the sampled cube pair")
    })
}

/// Runs `check` on one element of every shipped constructor, with a pair
/// of cubes of the matching dimension.
fn each_constructor(
    cfg: &SuiteConfig,
    case: &Case,
    check: &mut dyn FnMut(
        usize,
        &dyn Fn(&mut SplitMix64) -> Box<dyn ElemLaws>,
        &str,
    ) -> Result<(), String>,
) -> Result<(), String> {
    let md = cfg.max_den();
    let index = case.index;
    for kind in SPHERE_ELEM_KINDS {
        let n = cfg.n;
        check(
            n,
            &move |rng: &mut SplitMix64| {
                Box::new(gen::sphere_element(n, md, kind, index, rng)) as Box<dyn ElemLaws>
            },
            &format!("sphere constructor {kind:?}"),
        )?;
    }
    for kind in INTERVAL_ELEM_KINDS {
        check(
            1,
            &move |rng: &mut SplitMix64| {
                Box::new(gen::interval_element(md, kind, index, rng)) as Box<dyn ElemLaws>
            },
            &format!("interval constructor {kind:?}"),
        )?;
    }
    Ok(())
}

/// Object-safe bundle of the elementwise law checks, so the constructor
/// loop can be written once for both point types.
trait ElemLaws {
    fn counit_left(&self, what: &str) -> Result<(), String>;
    fn counit_right(&self, n: usize, what: &str) -> Result<(), String>;
    fn coassoc(&self, n: usize, c: &LittleCube, d: &LittleCube, what: &str)
        -> Result<(), String>;
    fn property_d(&self, pair: &Configuration, what: &str) -> Result<(), String>;
    fn h_zero(&self, what: &str) -> Result<(), String>;
    fn h_one(&self, what: &str) -> Result<(), String>;
    fn h_disjoint(&self, time: &Rational, pair: &Configuration, what: &str)
        -> Result<(), String>;
}

impl<X: Space> ElemLaws for CnElem<X>
where
    X::Point: PartialEq,
{
    fn counit_left(&self, what: &str) -> Result<(), String> {
        axiom_counit_left(self, what)
    }

    fn counit_right(&self, n: usize, what: &str) -> Result<(), String> {
        axiom_counit_right(n, self, what)
    }

    fn coassoc(
        &self,
        n: usize,
        c: &LittleCube,
        d: &LittleCube,
        what: &str,
    ) -> Result<(), String> {
        axiom_coassoc(n, self, c, d, what)
    }

    fn property_d(&self, pair: &Configuration, what: &str) -> Result<(), String> {
        let expanded = self
            .expand_to_sequence(2, pair)
            .map_err(|e| format!("property (D) failed for {what}: {e}"))?;
        if let WedgePoint::Slot { index, point, .. } = &expanded {
            let direct = self.eval(pair.cube(*index));
            ensure(*point == direct, || {
                format!("expansion disagrees with direct evaluation for {what}")
            })?;
        }
        Ok(())
    }

    fn h_zero(&self, what: &str) -> Result<(), String> {
        ensure(homotopy_h(self, Rational::zero()) == *self, || {
            format!("H(·, 0) is not the identity for {what}")
        })
    }

    fn h_one(&self, what: &str) -> Result<(), String> {
        // H(·, 1) ≡ α∘Ψ holds wherever the support center is interior;
        // with a boundary center the homotopy is deliberately constant
        // while Ψ normalizes to the basepoint, so that case is skipped.
        let interior_center = match center(self) {
            Ok(Some(p)) => p.iter().all(Rational::in_open_unit),
            Ok(None) => true,
            Err(_) => false,
        };
        if !interior_center {
            return Ok(());
        }
        let target = alpha(self.dim(), self.space(), &psi(self));
        ensure(homotopy_h(self, Rational::one()) == target, || {
            format!("H(·, 1) differs from α∘Ψ for {what}")
        })
    }

    fn h_disjoint(
        &self,
        time: &Rational,
        pair: &Configuration,
        what: &str,
    ) -> Result<(), String> {
        homotopy_h(self, time.clone())
            .expand_to_sequence(2, pair)
            .map(|_| ())
            .map_err(|e| format!("H(·, {time}) violates property (D) for {what}: {e}"))
    }
}

fn law_comonad_counit_left(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    each_constructor(cfg, case, &mut |_n, make, what| {
        let mut rng = case.rng();
        make(&mut rng).counit_left(what)
    })
}

fn law_comonad_counit_right(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    each_constructor(cfg, case, &mut |n, make, what| {
        let mut rng = case.rng();
        make(&mut rng).counit_right(n, what)
    })
}

fn law_comonad_coassoc(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    each_constructor(cfg, case, &mut |n, make, what| {
        let mut rng = case.rng();
        let f = make(&mut rng);
        let c = gen::cube(n, cfg.max_den(), case.index, &mut rng);
        let d = gen::cube(n, cfg.max_den(), case.index + 5, &mut rng);
        f.coassoc(n, &c, &d, what)
    })
}

fn law_comonad_property_d(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    each_constructor(cfg, case, &mut |n, make, what| {
        let mut rng = case.rng();
        let f = make(&mut rng);
        let pair = gen::disjoint_pair(n, cfg.max_den(), case.index, &mut rng);
        f.property_d(&pair, what)
    })
}

fn law_broken_custom(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let f = gen::broken_custom(cfg.n);
    let pair = gen::disjoint_pair(cfg.n, cfg.max_den(), case.index, &mut rng);
    f.expand_to_sequence(2, &pair)
        .map(|_| ())
        .map_err(|e| format!("broken custom fixture rejected as expected: {e}"))
}

// ---------------------------------------------------------------------------
// coalgebra.equivalence

fn law_coalgebra_sphere_round_trip(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let sphere = Sphere::new(n);
    let x = gen::sphere_point(n, cfg.max_den(), case.index, &mut rng);
    let direct = SphereCoalgebra::new(n);

    // Coend → comonadic → coend: the reconstructed splitting rule agrees
    // with the original on sampled configurations.
    let comonadic =
        move |p: &SpherePoint| coend_to_comonadic(&Sphere::new(n), &SphereCoalgebra::new(n), p);
    let back = comonadic_to_coend::<Sphere, _>(n, comonadic);
    for arity in 1..=3usize {
        let theta = gen::configuration(n, arity, 64, case.index + arity as u64, &mut rng);
        ensure(back.delta(&theta, &x) == direct.delta(&theta, &x), || {
            format!("sphere coend round trip failed at arity {arity}, case {}", case.index)
        })?;
    }

    // Comonadic → coend → comonadic: pointwise identity of elements.
    let a = sphere_structure(n);
    let a2 = a.clone();
    let coend = comonadic_to_coend::<Sphere, _>(n, move |p: &SpherePoint| a2.structure(p));
    let rebuilt = coend_to_comonadic(&sphere, &coend, &x);
    ensure(rebuilt == a.structure(&x), || {
        format!("sphere comonadic round trip failed at case {}", case.index)
    })
}

fn law_coalgebra_suspension_round_trip(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let susp = gen::susp_space(n);
    let x = gen::susp_point(n, cfg.max_den(), case.index, &mut rng);
    let direct = SuspensionCoalgebra::new(susp.clone());

    let susp2 = susp.clone();
    let comonadic = move |p: &SuspensionPoint<usize>| {
        coend_to_comonadic(&susp2, &SuspensionCoalgebra::new(susp2.clone()), p)
    };
    let back = comonadic_to_coend::<Susp<cubeops_core::spaces::FinitePointed>, _>(n, comonadic);
    for arity in 1..=3usize {
        let theta = gen::configuration(n, arity, 64, case.index + arity as u64, &mut rng);
        ensure(back.delta(&theta, &x) == direct.delta(&theta, &x), || {
            format!("suspension coend round trip failed at arity {arity}, case {}", case.index)
        })?;
    }

    let a = suspension_structure(&susp);
    let a2 = a.clone();
    let coend = comonadic_to_coend::<Susp<cubeops_core::spaces::FinitePointed>, _>(
        n,
        move |p: &SuspensionPoint<usize>| a2.structure(p),
    );
    let rebuilt = coend_to_comonadic(&susp, &coend, &x);
    ensure(rebuilt == a.structure(&x), || {
        format!("suspension comonadic round trip failed at case {}", case.index)
    })
}

// ---------------------------------------------------------------------------
// coalgebra.suspension

fn law_nabla_operad_morphism(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let r = 1 + (case.index % 3) as usize;
    let theta = gen::configuration(n, r, 64, case.index, &mut rng);
    let args: Vec<Configuration> = (0..r)
        .map(|k| {
            let arity = 1 + ((case.index as usize + k) % 2);
            gen::configuration(n, arity, 64, case.index + 1 + k as u64, &mut rng)
        })
        .collect();
    let composite = ce(theta.full_compose(&args))?;
    let total = composite.arity();
    let offsets: Vec<usize> = args
        .iter()
        .scan(0usize, |acc, a| {
            let o = *acc;
            *acc += a.arity();
            Some(o)
        })
        .collect();

    let split_via_factors = |p: &SpherePoint| match nabla_sphere(&theta, p) {
        WedgePoint::Base => WedgePoint::Base,
        WedgePoint::Slot { index: i, point, .. } => match nabla_sphere(&args[i], &point) {
            WedgePoint::Base => WedgePoint::Base,
            WedgePoint::Slot { index: j, point: inner, .. } => {
                WedgePoint::Slot { index: offsets[i] + j, arity: total, point: inner }
            }
        },
    };

    for pi in 0..3u64 {
        let p = gen::sphere_point(n, cfg.max_den(), case.index + pi, &mut rng);
        ensure(nabla_sphere(&composite, &p) == split_via_factors(&p), || {
            format!("∇ composition residual nonzero at case {} (sample {pi})", case.index)
        })?;
    }

    // The suspension ∇ factors through the sphere ∇, so the same residual
    // must vanish on suspension points.
    let susp = gen::susp_space(n);
    let sp = gen::susp_point(n, cfg.max_den(), case.index, &mut rng);
    let lhs = nabla_suspension(&composite, &sp);
    let rhs = match &sp {
        SuspensionPoint::Base => WedgePoint::Base,
        SuspensionPoint::Pair { .. } => {
            let (t, z) = sp.pair().expect("non-base pair");
            match split_via_factors(&SpherePoint::Interior(t.to_vec())) {
                WedgePoint::Base => WedgePoint::Base,
                WedgePoint::Slot { index, point, .. } => match point.interior_coords() {
                    None => WedgePoint::Base,
                    Some(u) => WedgePoint::Slot {
                        index,
                        arity: total,
                        point: susp.point(u.to_vec(), *z),
                    },
                },
            }
        }
    };
    ensure(lhs == rhs, || {
        format!("suspension ∇ does not factor through the sphere ∇ at case {}", case.index)
    })
}

fn law_nabla_equivariance(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let r = 2 + (case.index % 3) as usize;
    let theta = gen::configuration(n, r, 64, case.index, &mut rng);
    let sigma = Permutation::random(r, &mut rng);
    let acted = ce(theta.act(&sigma))?;
    for pi in 0..3u64 {
        let p = gen::sphere_point(n, cfg.max_den(), case.index + pi, &mut rng);
        let lhs = nabla_sphere(&acted, &p);
        let rhs = cubeops_core::spaces::wedge_act(&sigma, &nabla_sphere(&theta, &p));
        ensure(lhs == rhs, || {
            format!("∇ equivariance failed at case {} (sample {pi})", case.index)
        })?;
    }
    Ok(())
}

fn law_nabla_naturality(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let susp = gen::susp_space(n);
    let swap = |z: usize| match z {
        1 => 2,
        2 => 1,
        other => other,
    };
    let map_point = |p: &SuspensionPoint<usize>| match p.pair() {
        None => SuspensionPoint::Base,
        Some((t, z)) => susp.point(t.to_vec(), swap(*z)),
    };
    let r = 1 + (case.index % 3) as usize;
    let theta = gen::configuration(n, r, 64, case.index, &mut rng);
    let p = gen::susp_point(n, cfg.max_den(), case.index, &mut rng);
    let lhs = nabla_suspension(&theta, &map_point(&p));
    let rhs = match nabla_suspension(&theta, &p) {
        WedgePoint::Base => WedgePoint::Base,
        WedgePoint::Slot { index, arity, point } => {
            WedgePoint::Slot { index, arity, point: map_point(&point) }
        }
    };
    ensure(lhs == rhs, || format!("∇ naturality under Σⁿφ failed at case {}", case.index))
}

// ---------------------------------------------------------------------------
// approximation.retract

fn law_psi_alpha_identity(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let t = gen::interior_point(n, cfg.max_den(), case.index, &mut rng);

    let l = gen::sphere_loop(n, case.index, &mut rng);
    let susp = Susp::new(n, LoopSpace::new(n, Sphere::new(n)));
    let input = susp.point(t.clone(), l);
    ensure(psi(&alpha(n, &Sphere::new(n), &input)) == input, || {
        format!("Ψ∘α moved a sphere-valued point at case {}", case.index)
    })?;

    let li = gen::interval_loop(n, case.index, &mut rng);
    let suspi = Susp::new(n, LoopSpace::new(n, UnitInterval));
    let inputi = suspi.point(t, li);
    ensure(psi(&alpha(n, &UnitInterval, &inputi)) == inputi, || {
        format!("Ψ∘α moved an interval-valued point at case {}", case.index)
    })
}

fn law_h_zero(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    each_constructor(cfg, case, &mut |_n, make, what| {
        let mut rng = case.rng();
        make(&mut rng).h_zero(what)
    })
}

fn law_h_one(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    each_constructor(cfg, case, &mut |_n, make, what| {
        let mut rng = case.rng();
        make(&mut rng).h_one(what)
    })
}

fn law_h_property_d(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let time = match case.index {
        0 => Rational::zero(),
        1 => Rational::one(),
        2 => q(1, 2),
        3 => q(1, 8),
        4 => q(7, 8),
        _ => case.rng().rational(16),
    };
    each_constructor(cfg, case, &mut |n, make, what| {
        let mut rng = case.rng();
        let f = make(&mut rng);
        for pair_index in 0..3u64 {
            let pair = gen::disjoint_pair(n, cfg.max_den(), pair_index + case.index, &mut rng);
            f.h_disjoint(&time, &pair, what)?;
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// approximation.morphism

fn law_morphism_identities(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let t = gen::interior_point(n, cfg.max_den(), case.index, &mut rng);
    let c = gen::cube(n, cfg.max_den(), case.index, &mut rng);
    let d = gen::cube(n, cfg.max_den(), case.index + 1, &mut rng);
    let c2 = gen::cube(n, cfg.max_den(), case.index + 5, &mut rng);
    let d2 = gen::cube(n, cfg.max_den(), case.index + 6, &mut rng);
    let pairs = [(c, d), (c2, d2)];

    let l = gen::sphere_loop(n, case.index, &mut rng);
    let report = check_comonad_morphism(&Sphere::new(n), &[(t.clone(), l)], &pairs);
    ensure(report.passed(), || {
        format!("α morphism identities failed over the sphere: {}", report.failures.join("; "))
    })?;

    let li = gen::interval_loop(n, case.index, &mut rng);
    let report = check_comonad_morphism(&UnitInterval, &[(t, li)], &pairs);
    ensure(report.passed(), || {
        format!("α morphism identities failed over the interval: {}", report.failures.join("; "))
    })
}

// ---------------------------------------------------------------------------
// supports

fn law_peaked_singleton(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let t = gen::interior_point(n, cfg.max_den(), case.index, &mut rng);
    let loop_index = if case.index == 1 { 0 } else { case.index };
    let l = gen::sphere_loop(n, loop_index, &mut rng);
    let f = ce(CnElem::peaked(t.clone(), l))?;
    let point_rect = ce(Rect::point(&t))?;
    ensure(ce(csupp(&f))? == Some(point_rect.clone()), || {
        format!("peaked support is not the peak point at case {}", case.index)
    })?;

    // Precomposition relocates the singleton to the inner coordinates of
    // the peak, or kills it when the cube's image misses the peak.
    let c = gen::cube(n, cfg.max_den(), case.index, &mut rng);
    let g = ce(f.precompose(&c))?;
    let expected = if c.contains_interior(&t) {
        Some(ce(Rect::point(&c.preimage(&t)))?)
    } else {
        None
    };
    ensure(ce(csupp(&g))? == expected, || {
        format!("precomposed peaked support wrong at case {}", case.index)
    })?;

    // Pushing forward along a base-reflecting map keeps the support.
    let h = functor_map(&gen::reverse_map(n), &f);
    ensure(ce(csupp(&h))? == Some(point_rect), || {
        format!("post-mapped peaked support moved at case {}", case.index)
    })
}

fn law_suspension_structure_point(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let susp = gen::susp_space(n);
    let a = suspension_structure(&susp);
    let x = gen::susp_point(n, cfg.max_den(), case.index, &mut rng);
    let f = a.structure(&x);
    match x.pair() {
        None => ensure(ce(csupp(&f))?.is_none(), || {
            format!("basepoint structure has nonempty support at case {}", case.index)
        }),
        Some((t, _)) => {
            let expected = ce(Rect::point(t))?;
            ensure(ce(csupp(&f))? == Some(expected), || {
                format!("suspension structure support is not the height at case {}", case.index)
            })
        }
    }
}

fn law_threshold_interval(_cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let a = q(20 + case.index as i64, 40);
    let f = ce(CnElem::threshold(a.clone()))?;
    let got = ce(csupp(&f))?.ok_or_else(|| format!("threshold({a}) support came back empty"))?;
    let lo = Rational::one() - &a;
    ensure(got.dim() == 1 && got.side(0).lo() == &lo && got.side(0).hi() == &a, || {
        format!("threshold({a}) support is not [{lo}, {a}]")
    })
}

fn oracle_brackets<X: Space>(f: &CnElem<X>, budget: usize, what: &str) -> Result<(), String> {
    let exact = match csupp(f) {
        Ok(e) => e,
        Err(_) => return Ok(()),
    };
    let oracle = csupp_oracle(f, budget);
    match (exact, oracle.rect) {
        (None, _) => Ok(()),
        (Some(r), Some(o)) => ensure(o.contains_rect(&r), || {
            format!("oracle support does not contain the exact support for {what}")
        }),
        (Some(_), None) => Err(format!("oracle emptied a nonempty support for {what}")),
    }
}

fn law_oracle_superset(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let md = cfg.max_den();
    let budget = cfg.oracle_budget;
    match case.index % 10 {
        k @ 0..=5 => {
            let kind = SPHERE_ELEM_KINDS[k as usize];
            let f = gen::sphere_element(n, md, kind, case.index, &mut rng);
            oracle_brackets(&f, budget, &format!("sphere constructor {kind:?}"))
        }
        k @ 6..=8 => {
            let kind = INTERVAL_ELEM_KINDS[(k - 6) as usize];
            let f = gen::interval_element(md, kind, case.index, &mut rng);
            oracle_brackets(&f, budget, &format!("interval constructor {kind:?}"))
        }
        _ => {
            let susp = gen::susp_space(n);
            let x = gen::susp_point(n, md, 3 + case.index, &mut rng);
            let f = suspension_structure(&susp).structure(&x);
            oracle_brackets(&f, budget, "suspension structure value")
        }
    }
}

fn law_oracle_threshold_tight(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let a = q(20 + case.index as i64, 40);
    let f = ce(CnElem::threshold(a.clone()))?;
    let oracle = csupp_oracle(&f, cfg.oracle_budget);
    let lo = Rational::one() - &a;
    let rect =
        oracle.rect.ok_or_else(|| format!("oracle emptied threshold({a}) support"))?;
    let side = rect.side(0);
    ensure(side.lo() <= &lo && side.hi() >= &a, || {
        format!("oracle support does not bracket [{lo}, {a}]")
    })?;
    // Budget 10⁴ in dimension 1 reaches dyadic depth 6, so each endpoint
    // is sharp to within one cell of the 1/64 grid.
    let tol = q(1, 64);
    let lo_err = &lo - side.lo();
    let hi_err = side.hi() - &a;
    ensure(lo_err <= tol && hi_err <= tol, || {
        format!(
            "oracle endpoints too loose for threshold({a}): [{}, {}] vs [{lo}, {a}]",
            side.lo(),
            side.hi()
        )
    })
}

// ---------------------------------------------------------------------------
// reduced.triviality

fn law_one_point_rejects(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let letter = 1 + (case.index % 2) as usize;
    ensure(
        generic_comonad_element(
            &OnePointOperad,
            &cubeops_core::spaces::FinitePointed::new(3),
            move |_: &()| letter,
        )
        .is_none(),
        || format!("non-base finite candidate {letter} accepted at case {}", case.index),
    )?;
    let p = gen::interior_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    ensure(
        generic_comonad_element(&OnePointOperad, &Sphere::new(cfg.n), move |_: &()| {
            SpherePoint::Interior(p.clone())
        })
        .is_none(),
        || format!("non-base sphere candidate accepted at case {}", case.index),
    )?;
    ensure(
        generic_comonad_element(
            &OnePointOperad,
            &cubeops_core::spaces::FinitePointed::new(3),
            |_: &()| 0usize,
        )
        .is_some(),
        || "the trivial candidate was rejected".to_string(),
    )
}

// ---------------------------------------------------------------------------
// recognition

fn law_recognition_sphere_counit(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let a = sphere_structure(cfg.n);
    let x = gen::sphere_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    ensure(a.structure(&x).counit() == x, || {
        format!("sphere counit law failed at case {}", case.index)
    })
}

fn law_recognition_sphere_cosplit(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let a = sphere_structure(cfg.n);
    let x = gen::sphere_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    let report = cosplit_check(&a, &[x]);
    ensure(report.passed(), || {
        format!("sphere cosplit identities failed: {}", report.failures.join("; "))
    })
}

fn law_recognition_sphere_retraction(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let a = sphere_structure(cfg.n);
    let x = gen::sphere_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    let m = in_s(&x, &a);
    ensure(m.member, || format!("sphere point not recognized in S at case {}", case.index))?;
    ensure(!m.used_oracle, || {
        format!("sphere membership needed the oracle at case {}", case.index)
    })?;
    ensure(retraction(&x, &a) == x, || {
        format!("retraction moved a sphere point at case {}", case.index)
    })
}

fn law_recognition_sphere_homotopy(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let a = sphere_structure(cfg.n);
    let x = gen::sphere_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    for time in [Rational::zero(), q(1, 2), Rational::one()] {
        ensure(retraction_homotopy(&x, &a, &time) == x, || {
            format!("retraction homotopy moved a sphere point at time {time}, case {}", case.index)
        })?;
    }
    Ok(())
}

fn law_recognition_sphere_induced(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let a = sphere_structure(n);
    let x = gen::sphere_point(n, cfg.max_den(), case.index, &mut rng);
    let cp = ce(induced_structure(&x, &a))?;
    ensure(suspension_counit(&Sphere::new(n), &cp) == x, || {
        format!("induced structure counit failed at case {}", case.index)
    })?;
    let a2 = a.clone();
    let g = SigmaOmegaCoalgebra::new(n, Sphere::new(n), move |y: &SpherePoint| {
        induced_structure(y, &a2).expect("every sphere point lies in S")
    });
    ensure(pushforward_structure(&g).structure(&x) == a.structure(&x), || {
        format!("pushforward of the induced structure diverged at case {}", case.index)
    })
}

fn law_recognition_susp_counit(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let susp = gen::susp_space(cfg.n);
    let a = suspension_structure(&susp);
    let x = gen::susp_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    ensure(a.structure(&x).counit() == x, || {
        format!("suspension counit law failed at case {}", case.index)
    })
}

fn law_recognition_susp_cosplit(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let susp = gen::susp_space(cfg.n);
    let a = suspension_structure(&susp);
    let x = gen::susp_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    let report = cosplit_check(&a, &[x]);
    ensure(report.passed(), || {
        format!("suspension cosplit identities failed: {}", report.failures.join("; "))
    })
}

fn law_recognition_susp_sigma_cosplit(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let susp = gen::susp_space(cfg.n);
    let g = sigma_eta(&susp);
    let x = gen::susp_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    let report = sigma_cosplit_check(&g, &[x]);
    ensure(report.passed(), || {
        format!("ΣΩ cosplit identities failed: {}", report.failures.join("; "))
    })
}

fn law_recognition_susp_retraction(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let susp = gen::susp_space(cfg.n);
    let a = suspension_structure(&susp);
    let x = gen::susp_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    let m = in_s(&x, &a);
    ensure(m.member, || format!("suspension point not recognized in S at case {}", case.index))?;
    ensure(!m.used_oracle, || {
        format!("suspension membership needed the oracle at case {}", case.index)
    })?;
    ensure(retraction(&x, &a) == x, || {
        format!("retraction moved a suspension point at case {}", case.index)
    })
}

fn law_recognition_susp_homotopy(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let susp = gen::susp_space(cfg.n);
    let a = suspension_structure(&susp);
    let x = gen::susp_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    for time in [Rational::zero(), q(1, 2), Rational::one()] {
        ensure(retraction_homotopy(&x, &a, &time) == x, || {
            format!(
                "retraction homotopy moved a suspension point at time {time}, case {}",
                case.index
            )
        })?;
    }
    Ok(())
}

fn law_recognition_susp_induced(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let susp = gen::susp_space(cfg.n);
    let a = suspension_structure(&susp);
    let g0 = sigma_eta(&susp);
    let x = gen::susp_point(cfg.n, cfg.max_den(), case.index, &mut rng);
    let cp = ce(induced_structure(&x, &a))?;
    ensure(cp == g0.structure(&x), || {
        format!("induced structure differs from η at case {}", case.index)
    })
}

fn pn_samples(cfg: &SuiteConfig, case: &Case, rng: &mut SplitMix64) -> Vec<SpherePoint> {
    vec![
        SpherePoint::Base,
        SpherePoint::Interior(vec![q(1, 4); cfg.n]),
        SpherePoint::Interior(vec![q(1, 2); cfg.n]),
        SpherePoint::Interior(gen::interior_point(cfg.n, cfg.max_den(), 5 + case.index, rng)),
    ]
}

fn law_pn_accepts(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let susp = gen::susp_space(n);
    let g = sigma_eta(&susp);
    let samples = pn_samples(cfg, case, &mut rng);
    let letter = 1 + (case.index % 2) as usize;
    ensure(pn_membership(&generator_loop(&susp, letter), &g, &samples), || {
        format!("generator loop over letter {letter} rejected from P_n at case {}", case.index)
    })?;
    ensure(pn_membership(&LoopMap::constant(n, susp.clone()), &g, &samples), || {
        format!("constant loop rejected from P_n at case {}", case.index)
    })
}

fn law_pn_rejects_twisted(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let susp = gen::susp_space(n);
    let g = sigma_eta(&susp);
    let samples = pn_samples(cfg, case, &mut rng);
    let letter = 1 + (case.index % 2) as usize;
    let susp2 = susp.clone();
    let twisted = LoopMap::from_fn(n, susp.clone(), "twisted", move |coords: &[Rational]| {
        susp2.point(coords.iter().map(|c| Rational::one() - c).collect(), letter)
    });
    ensure(!pn_membership(&twisted, &g, &samples), || {
        format!("coordinate-reversed loop admitted to P_n at case {}", case.index)
    })
}

// ---------------------------------------------------------------------------
// may.action

fn law_may_halves_concatenation(_cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let l1 = gen::sphere_loop(1, case.index, &mut rng);
    let l2 = gen::sphere_loop(1, case.index + 2, &mut rng);
    let glued = may_action(&Configuration::halves(1), &[l1.clone(), l2.clone()]);
    let s = match case.index {
        0 => q(1, 2),
        1 => q(1, 4),
        2 => q(3, 4),
        _ => rng.rational_interior(4096),
    };
    let half = q(1, 2);
    let expected = if s < half {
        l1.eval_coords(vec![q(2, 1) * &s])
    } else if s == half {
        SpherePoint::Base
    } else {
        l2.eval_coords(vec![q(2, 1) * &s - Rational::one()])
    };
    ensure(glued.eval_coords(vec![s.clone()]) == expected, || {
        format!("halves action differs from loop concatenation at s = {s}")
    })
}

fn law_may_unit(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let mut rng = case.rng();
    let l = gen::sphere_loop(cfg.n, case.index, &mut rng);
    ensure(may_action(&Configuration::identity(cfg.n), &[l.clone()]) == l, || {
        format!("identity configuration acted nontrivially at case {}", case.index)
    })
}

fn law_may_equivariance(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let r = 2 + (case.index % 2) as usize;
    let theta = gen::configuration(n, r, 64, case.index, &mut rng);
    let loops: Vec<LoopMap<Sphere>> =
        (0..r).map(|k| gen::sphere_loop(n, case.index + k as u64, &mut rng)).collect();
    let sigma = Permutation::random(r, &mut rng);
    let lhs = may_action(&ce(theta.act(&sigma))?, &loops);
    let permuted: Vec<LoopMap<Sphere>> =
        (0..r).map(|i| loops[sigma.apply(i)].clone()).collect();
    let rhs = may_action(&theta, &permuted);
    ensure(lhs == rhs, || format!("action equivariance failed at case {}", case.index))
}

fn law_may_associativity(cfg: &SuiteConfig, case: &Case) -> Result<(), String> {
    let n = cfg.n;
    let mut rng = case.rng();
    let r = 2 + (case.index % 2) as usize;
    let theta = gen::configuration(n, r, 64, case.index, &mut rng);
    let args: Vec<Configuration> = (0..r)
        .map(|k| {
            let arity = 1 + ((case.index as usize + k) % 2);
            gen::configuration(n, arity, 64, case.index + 1 + k as u64, &mut rng)
        })
        .collect();
    let composite = ce(theta.full_compose(&args))?;
    let total: usize = args.iter().map(Configuration::arity).sum();
    let flat: Vec<LoopMap<Sphere>> =
        (0..total).map(|k| gen::sphere_loop(n, case.index + k as u64, &mut rng)).collect();
    let lhs = may_action(&composite, &flat);
    let mut offset = 0usize;
    let glued: Vec<LoopMap<Sphere>> = args
        .iter()
        .map(|b| {
            let block = &flat[offset..offset + b.arity()];
            offset += b.arity();
            may_action(b, block)
        })
        .collect();
    let rhs = may_action(&theta, &glued);
    ensure(lhs == rhs, || format!("operadic action associativity failed at case {}", case.index))
}

// ---------------------------------------------------------------------------
// registry and runner

pub fn registry() -> Vec<Suite> {
    fn law(
        name: &'static str,
        samples: SampleCount,
        run: fn(&SuiteConfig, &Case) -> Result<(), String>,
    ) -> Law {
        Law { name, samples, run }
    }
    use SampleCount::{Fixed, FromConfig};

    vec![
        Suite {
            name: "approximation.morphism",
            laws: vec![law("identities", FromConfig, law_morphism_identities)],
        },
        Suite {
            name: "approximation.retract",
            laws: vec![
                law("psi_alpha.identity", FromConfig, law_psi_alpha_identity),
                law("h.zero_endpoint", FromConfig, law_h_zero),
                law("h.one_endpoint", FromConfig, law_h_one),
                law("h.property_d", Fixed(10), law_h_property_d),
            ],
        },
        Suite {
            name: "coalgebra.equivalence",
            laws: vec![
                law("sphere.round_trip", FromConfig, law_coalgebra_sphere_round_trip),
                law("suspension.round_trip", FromConfig, law_coalgebra_suspension_round_trip),
            ],
        },
        Suite {
            name: "coalgebra.suspension",
            laws: vec![
                law("nabla.operad_morphism", FromConfig, law_nabla_operad_morphism),
                law("nabla.equivariance", FromConfig, law_nabla_equivariance),
                law("nabla.naturality", FromConfig, law_nabla_naturality),
            ],
        },
        Suite {
            name: "comonad.axioms",
            laws: vec![
                law("counit.left", FromConfig, law_comonad_counit_left),
                law("counit.right", FromConfig, law_comonad_counit_right),
                law("coassociativity", FromConfig, law_comonad_coassoc),
            ],
        },
        Suite {
            name: "comonad.property_d",
            laws: vec![law("expand.disjoint_pairs", FromConfig, law_comonad_property_d)],
        },
        Suite {
            name: "fixtures.property_d_violation",
            laws: vec![law("broken_custom.passes_property_d", FromConfig, law_broken_custom)],
        },
        Suite {
            name: "may.action",
            laws: vec![
                law("halves.concatenation", FromConfig, law_may_halves_concatenation),
                law("unit", FromConfig, law_may_unit),
                law("equivariance", FromConfig, law_may_equivariance),
                law("associativity", FromConfig, law_may_associativity),
            ],
        },
        Suite {
            name: "operad.laws",
            laws: vec![
                law("unit", FromConfig, law_operad_unit),
                law("associativity.nested", FromConfig, law_operad_assoc_nested),
                law("associativity.parallel", FromConfig, law_operad_assoc_parallel),
                law("associativity.block", FromConfig, law_operad_assoc_block),
                law("equivariance.compose", FromConfig, law_operad_equivariance_compose),
                law("equivariance.action", FromConfig, law_operad_equivariance_action),
                law("simplicial", FromConfig, law_operad_simplicial),
            ],
        },
        Suite {
            name: "recognition.sphere",
            laws: vec![
                law("counit", FromConfig, law_recognition_sphere_counit),
                law("cosplit", FromConfig, law_recognition_sphere_cosplit),
                law("membership_and_retraction", FromConfig, law_recognition_sphere_retraction),
                law("homotopy.endpoints", FromConfig, law_recognition_sphere_homotopy),
                law("induced.pushforward", FromConfig, law_recognition_sphere_induced),
            ],
        },
        Suite {
            name: "recognition.suspension",
            laws: vec![
                law("counit", FromConfig, law_recognition_susp_counit),
                law("cosplit", FromConfig, law_recognition_susp_cosplit),
                law("sigma_cosplit", FromConfig, law_recognition_susp_sigma_cosplit),
                law("membership_and_retraction", FromConfig, law_recognition_susp_retraction),
                law("homotopy.endpoints", FromConfig, law_recognition_susp_homotopy),
                law("induced.matches_eta", FromConfig, law_recognition_susp_induced),
                law("pn.accepts", FromConfig, law_pn_accepts),
                law("pn.rejects_twisted", FromConfig, law_pn_rejects_twisted),
            ],
        },
        Suite {
            name: "reduced.triviality",
            laws: vec![law("one_point.rejects_nonbase", FromConfig, law_one_point_rejects)],
        },
        Suite {
            name: "supports",
            laws: vec![
                law("peaked.singleton", FromConfig, law_peaked_singleton),
                law("suspension_structure.point", FromConfig, law_suspension_structure_point),
                law("threshold.interval", Fixed(20), law_threshold_interval),
                law("oracle.superset", Fixed(12), law_oracle_superset),
                law("oracle.threshold_tight", Fixed(20), law_oracle_threshold_tight),
            ],
        },
    ]
}

/// Every suite that participates in a default run: all of them except the
/// deliberately failing fixtures.
pub fn default_suite_names() -> Vec<&'static str> {
    registry().iter().map(|s| s.name).filter(|n| !n.starts_with("fixtures.")).collect()
}

fn run_law(cfg: &SuiteConfig, suite_name: &str, law: &Law, mode: Mode) -> LawReport {
    let count = match law.samples {
        SampleCount::FromConfig => cfg.samples,
        SampleCount::Fixed(k) => k,
    };
    let law_seed = derive_seed(derive_seed(cfg.seed, suite_name), law.name);
    let run_case = |index: u64| -> Option<(u64, u64, String)> {
        let seed = sample_seed(law_seed, index);
        (law.run)(cfg, &Case { index, seed }).err().map(|message| (index, seed, message))
    };
    let failure = match mode {
        Mode::Sequential => (0..count).filter_map(run_case).min_by_key(|f| f.0),
        Mode::Parallel => parallel_min_failure(count, &run_case),
    };
    LawReport {
        law: law.name.to_string(),
        pass: failure.is_none(),
        checked: count,
        counterexample: failure.map(|(case_index, case_seed, message)| Counterexample {
            suite: suite_name.to_string(),
            law: law.name.to_string(),
            case_index,
            case_seed,
            message,
        }),
    }
}

#[cfg(feature = "parallel")]
fn parallel_min_failure(
    count: u64,
    run_case: &(impl Fn(u64) -> Option<(u64, u64, String)> + Sync),
) -> Option<(u64, u64, String)> {
    use rayon::prelude::*;
    (0..count).into_par_iter().filter_map(run_case).min_by_key(|f| f.0)
}

#[cfg(not(feature = "parallel"))]
fn parallel_min_failure(
    count: u64,
    run_case: &(impl Fn(u64) -> Option<(u64, u64, String)> + Sync),
) -> Option<(u64, u64, String)> {
    (0..count).filter_map(run_case).min_by_key(|f| f.0)
}

/// Runs the named suites and assembles the deterministic report, sorted by
/// suite name. Unknown names error before anything runs.
pub fn run_suites(cfg: &SuiteConfig, names: &[&str], mode: Mode) -> Result<RunOutcome, String> {
    let all = registry();
    let mut selected: Vec<&Suite> = Vec::with_capacity(names.len());
    for name in names {
        let suite = all
            .iter()
            .find(|s| s.name == *name)
            .ok_or_else(|| format!("unknown suite `{name}`"))?;
        if !selected.iter().any(|s| s.name == suite.name) {
            selected.push(suite);
        }
    }
    selected.sort_by_key(|s| s.name);

    let mut suites = Vec::with_capacity(selected.len());
    let mut timings = Vec::with_capacity(selected.len());
    for suite in selected {
        let start = Instant::now();
        let laws: Vec<LawReport> =
            suite.laws.iter().map(|law| run_law(cfg, suite.name, law, mode)).collect();
        timings.push(SuiteTiming { suite: suite.name.to_string(), millis: start.elapsed().as_millis() });
        suites.push(SuiteReport {
            suite: suite.name.to_string(),
            pass: laws.iter().all(|l| l.pass),
            laws,
        });
    }
    let pass = suites.iter().all(|s| s.pass);
    Ok(RunOutcome { report: RunReport { config: cfg.clone(), pass, suites }, timings })
}

/// Re-runs exactly the failing case recorded in a counterexample. Returns
/// the failure message when the case still fails, `Ok(())` if it now
/// passes (which would mean the report was not reproducible).
pub fn replay(cfg: &SuiteConfig, cex: &Counterexample) -> Result<(), String> {
    let all = registry();
    let suite = all
        .iter()
        .find(|s| s.name == cex.suite)
        .ok_or_else(|| format!("unknown suite `{}` in counterexample", cex.suite))?;
    let law = suite
        .laws
        .iter()
        .find(|l| l.name == cex.law)
        .ok_or_else(|| format!("unknown law `{}` in counterexample", cex.law))?;
    (law.run)(cfg, &Case { index: cex.case_index, seed: cex.case_seed })
}
