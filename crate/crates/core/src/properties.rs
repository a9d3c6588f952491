//! Seeded randomized property suites over the octonions, automorphisms,
//! lattices and valuations.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::apartment::ApartmentPoint;
use crate::arith::{rat, Prime, Rational, Ring};
use crate::automorphisms::{h_alpha, w_alpha, AutWord, Generator, RootLabel};
use crate::lattices::{
    intermediate_fn_at, random_octonion, random_scalar, standard_intermediate_fns, valuation_of,
    ExponentLattice, IntermediateFn, LatticeSequence,
};
use crate::octonion::Octonion;

pub const DEFAULT_CASES: usize = 1000;

/// Number of random intermediate functions in the valuation round trip.
pub const RANDOM_FUNCTIONS: usize = 100;

/// Outcome of one property suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run(
    name: &str,
    cases: usize,
    seed: u64,
    mut case: impl FnMut(&mut StdRng) -> Option<String>,
) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let failures = (0..cases).filter_map(|_| case(&mut rng)).collect();
    SuiteResult {
        name: name.into(),
        cases,
        failures,
    }
}

fn nonzero_scalar(rng: &mut StdRng, p: Prime) -> Rational {
    loop {
        let c = random_scalar(rng, p);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random word of one to four root, `h` and `w` generators.
pub fn random_word(rng: &mut StdRng, p: Prime) -> AutWord<Rational> {
    let labels = RootLabel::all();
    let mut word = AutWord::empty();
    for _ in 0..rng.gen_range(1..=4) {
        let label = labels[rng.gen_range(0..labels.len())];
        let piece = match rng.gen_range(0..3) {
            0 => AutWord::single(Generator::Root(label, random_scalar(rng, p))),
            1 => h_alpha(label, &nonzero_scalar(rng, p)).expect("nonzero parameter"),
            _ => w_alpha(label, &nonzero_scalar(rng, p)).expect("nonzero parameter"),
        };
        word = word.then(&piece);
    }
    word
}

pub fn random_lattice(rng: &mut StdRng) -> ExponentLattice {
    ExponentLattice::new(std::array::from_fn(|_| rng.gen_range(-3..=3)))
}

/// A random apartment point with coordinates in `(1/12)ℤ ∩ [−3, 3]`.
pub fn random_point(rng: &mut StdRng) -> ApartmentPoint {
    ApartmentPoint::new(
        rat(rng.gen_range(-36..=36), 12),
        rat(rng.gen_range(-36..=36), 12),
    )
}

pub fn norm_multiplicativity(seed: u64, cases: usize, p: Prime) -> SuiteResult {
    run("norm multiplicativity", cases, seed, |rng| {
        let (x, y) = (random_octonion(rng, p), random_octonion(rng, p));
        let (lhs, rhs) = ((&x * &y).norm(), x.norm() * y.norm());
        (lhs != rhs).then(|| format!("N(({x})({y})) = {lhs} ≠ {rhs}"))
    })
}

pub fn characteristic_identity(seed: u64, cases: usize, p: Prime) -> SuiteResult {
    run("characteristic identity", cases, seed, |rng| {
        let x = random_octonion(rng, p);
        let rest = &(&x * &x) - &x.scale(&x.trace());
        let total = &rest + &Octonion::one().scale(&x.norm());
        (!total.is_zero()).then(|| format!("x² − T(x)x + N(x) ≠ 0 for x = {x}"))
    })
}

pub fn conjugation_anti_homomorphism(seed: u64, cases: usize, p: Prime) -> SuiteResult {
    run("conjugation anti-homomorphism", cases, seed, |rng| {
        let (x, y) = (random_octonion(rng, p), random_octonion(rng, p));
        let (lhs, rhs) = ((&x * &y).conj(), &y.conj() * &x.conj());
        (lhs != rhs).then(|| format!("conj(xy) ≠ conj(y)conj(x) for x = {x}, y = {y}"))
    })
}

pub fn automorphism_preservation(seed: u64, cases: usize, p: Prime) -> SuiteResult {
    run("automorphism norm preservation", cases, seed, |rng| {
        let g = random_word(rng, p);
        let (x, y) = (random_octonion(rng, p), random_octonion(rng, p));
        let (gx, gy) = (g.apply(&x), g.apply(&y));
        if gx.norm() != x.norm() {
            return Some(format!("N(g·x) ≠ N(x) for g = {g}, x = {x}"));
        }
        (g.apply(&(&x * &y)) != &gx * &gy).then(|| format!("g(xy) ≠ g(x)g(y) for g = {g}"))
    })
}

pub fn dual_involution(seed: u64, cases: usize) -> SuiteResult {
    run(
        "dual involution and containment reversal",
        cases,
        seed,
        |rng| {
            let a = random_lattice(rng);
            let b = a.sum(&random_lattice(rng));
            if a.dual().dual() != a {
                return Some(format!("{a}** ≠ {a}"));
            }
            (a.is_subset(&b) && !b.dual().is_subset(&a.dual()))
                .then(|| format!("{a} ⊆ {b} but {b}* ⊄ {a}*"))
        },
    )
}

/// Compares the direct valuation with the one read back from the lattice
/// sequence, on `v1..v5` and [`RANDOM_FUNCTIONS`] random apartment points,
/// spreading at least `cases` samples evenly over the functions.
pub fn valuation_round_trip(seed: u64, cases: usize, p: Prime) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut fns: Vec<(String, IntermediateFn)> = standard_intermediate_fns()
        .into_iter()
        .filter(|(name, _)| ["v1", "v2", "v3", "v4", "v5"].contains(name))
        .map(|(n, v)| (n.to_string(), v))
        .collect();
    for _ in 0..RANDOM_FUNCTIONS {
        let pt = random_point(&mut rng);
        fns.push((format!("v at {pt}"), intermediate_fn_at(&pt)));
    }
    let per_fn = cases.div_ceil(fns.len());
    let mut failures = Vec::new();
    for (name, v) in &fns {
        let seq = LatticeSequence::new(v.clone());
        for _ in 0..per_fn {
            let x = random_octonion(&mut rng, p);
            let (direct, read) = (valuation_of(&x, v, p), seq.valuation(&x, p));
            if direct != read {
                failures.push(format!(
                    "{name}: val({x}) = {direct}, sequence gives {read}"
                ));
            }
        }
    }
    SuiteResult {
        name: "valuation round trip".into(),
        cases: per_fn * fns.len(),
        failures,
    }
}

/// Every suite, each seeded from `seed`.
pub fn all_suites(seed: u64, cases: usize, p: Prime) -> Vec<SuiteResult> {
    vec![
        norm_multiplicativity(seed, cases, p),
        characteristic_identity(seed, cases, p),
        conjugation_anti_homomorphism(seed, cases, p),
        automorphism_preservation(seed, cases, p),
        dual_involution(seed, cases),
        valuation_round_trip(seed, cases, p),
    ]
}
