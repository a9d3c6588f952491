//! Diagonal lattices and orders in the split octonions, their duals and
//! products, the vertex-order classification, and the valuations and
//! lattice sequences attached to apartment points.
//!
//! A lattice `Λ(a2 a3 a4 | a1 ; a5 a6 a7 | a8)` holds the octonions whose
//! `i`-th coordinate has `p`-adic valuation at least `a_i`. Internally the
//! exponents are stored in coordinate order `(a, v1, v2, v3, w1, w2, w3, d)`.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::apartment::ApartmentPoint;
use crate::arith::{ceil, frac, int, rat, to_i64, val_p, Extended, Prime, Rational};
use crate::error::Error;
use crate::octonion::{BasisIndex, Octonion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentLattice {
    exps: [i64; 8],
}

impl ExponentLattice {
    /// From exponents in coordinate order `(a1, a2, a3, a4, a5, a6, a7, a8)`.
    pub fn new(exps: [i64; 8]) -> Self {
        ExponentLattice { exps }
    }

    /// From the two displayed rows, with zero diagonal entries.
    pub fn from_rows(v: [i64; 3], w: [i64; 3]) -> Self {
        ExponentLattice::new([0, v[0], v[1], v[2], w[0], w[1], w[2], 0])
    }

    pub fn standard() -> Self {
        ExponentLattice::new([0; 8])
    }

    pub fn exps(&self) -> [i64; 8] {
        self.exps
    }

    /// Exponent of the coordinate `coord` (0 to 7).
    pub fn exp(&self, coord: usize) -> i64 {
        self.exps[coord]
    }

    pub fn v(&self) -> [i64; 3] {
        [self.exps[1], self.exps[2], self.exps[3]]
    }

    pub fn w(&self) -> [i64; 3] {
        [self.exps[4], self.exps[5], self.exps[6]]
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &ExponentLattice) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a >= b)
    }

    pub fn is_proper_subset(&self, other: &ExponentLattice) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn contains(&self, x: &Octonion<Rational>, p: Prime) -> bool {
        x.coords()
            .iter()
            .zip(&self.exps)
            .all(|(c, &a)| val_p(c, p) >= Extended::Finite(a))
    }

    /// `p^k · Λ`.
    pub fn scale(&self, k: i64) -> Self {
        ExponentLattice::new(self.exps.map(|a| a + k))
    }

    /// `Λ1 + Λ2`.
    pub fn sum(&self, other: &ExponentLattice) -> Self {
        ExponentLattice::new(std::array::from_fn(|i| self.exps[i].min(other.exps[i])))
    }

    /// The dual under the trace form `T(xy)`.
    pub fn dual(&self) -> Self {
        let e = &self.exps;
        ExponentLattice::new([-e[0], -e[4], -e[5], -e[6], -e[1], -e[2], -e[3], -e[7]])
    }

    /// The lattice spanned by all products `xy`, `x ∈ self`, `y ∈ other`.
    ///
    /// Each output exponent is the minimum of the summed exponents over the
    /// terms of the Zorn product landing in that coordinate.
    pub fn product(&self, other: &ExponentLattice) -> Self {
        let (x, y) = (&self.exps, &other.exps);
        let (xa, xd, ya, yd) = (x[0], x[7], y[0], y[7]);
        let xv = |j: usize| x[1 + j % 3];
        let xw = |j: usize| x[4 + j % 3];
        let yv = |j: usize| y[1 + j % 3];
        let yw = |j: usize| y[4 + j % 3];
        let mut out = [0i64; 8];
        out[0] = (0..3).map(|j| xv(j) + yw(j)).fold(xa + ya, i64::min);
        out[7] = (0..3).map(|j| xw(j) + yv(j)).fold(xd + yd, i64::min);
        for j in 0..3 {
            // a·φ + δ·v − w × ψ
            out[1 + j] = [
                xa + yv(j),
                xv(j) + yd,
                xw(j + 1) + yw(j + 2),
                xw(j + 2) + yw(j + 1),
            ]
            .into_iter()
            .min()
            .unwrap();
            // α·w + d·ψ + v × φ
            out[4 + j] = [
                ya + xw(j),
                xd + yw(j),
                xv(j + 1) + yv(j + 2),
                xv(j + 2) + yv(j + 1),
            ]
            .into_iter()
            .min()
            .unwrap();
        }
        ExponentLattice::new(out)
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// Contains the identity and is closed under multiplication.
    pub fn is_order(&self) -> bool {
        let [a1, a2, a3, a4, a5, a6, a7, a8] = self.exps;
        a1 == 0
            && a8 == 0
            && a2 + a3 >= a7
            && a2 + a4 >= a6
            && a3 + a4 >= a5
            && a5 + a6 >= a4
            && a5 + a7 >= a3
            && a6 + a7 >= a2
            && a2 + a5 >= 0
            && a3 + a6 >= 0
            && a4 + a7 >= 0
    }

    /// Maximality within the diagonal family: an order whose columns sum to zero.
    pub fn is_maximal_order(&self) -> bool {
        let e = &self.exps;
        self.is_order() && (0..3).all(|j| e[1 + j] + e[4 + j] == 0)
    }

    /// `θ(diag(p^e1, p^e2, p^e3))·Λ` for `e1 + e2 + e3 = 0`.
    pub fn transport(&self, e: [i64; 3]) -> Result<Self, Error> {
        if e.iter().sum::<i64>() != 0 {
            return Err(Error::domain("torus exponents must sum to zero"));
        }
        let mut out = self.exps;
        for j in 0..3 {
            out[1 + j] += e[j];
            out[4 + j] -= e[j];
        }
        Ok(ExponentLattice::new(out))
    }
}

impl fmt::Display for ExponentLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.exps;
        if e[0] == 0 && e[7] == 0 {
            write!(
                f,
                "L[{} {} {}; {} {} {}]",
                e[1], e[2], e[3], e[4], e[5], e[6]
            )
        } else {
            write!(
                f,
                "L[{} {} {} | {} ; {} {} {} | {}]",
                e[1], e[2], e[3], e[0], e[4], e[5], e[6], e[7]
            )
        }
    }
}

impl FromStr for ExponentLattice {
    type Err = Error;

    /// Reads `L[a2 a3 a4 | a1 ; a5 a6 a7 | a8]`; the `| a1` parts may be omitted.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::parse(format!("cannot parse lattice `{s}`"));
        let body = s
            .trim()
            .strip_prefix("L[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (top, bottom) = body.split_once(';').ok_or_else(bad)?;
        let row = |r: &str| -> Result<([i64; 3], i64), Error> {
            let (vec, diag) = match r.split_once('|') {
                Some((v, d)) => (v, d.trim().parse::<i64>().map_err(|_| bad())?),
                None => (r, 0),
            };
            let nums = vec
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            let arr: [i64; 3] = nums.try_into().map_err(|_| bad())?;
            Ok((arr, diag))
        };
        let (v, a1) = row(top)?;
        let (w, a8) = row(bottom)?;
        Ok(ExponentLattice::new([
            a1, v[0], v[1], v[2], w[0], w[1], w[2], a8,
        ]))
    }
}

impl Serialize for ExponentLattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Outcome of the vertex-order classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexOrder {
    Type1Maximal,
    Type2,
    /// Type 3, with the self-dual lattice `M = p·Λ*² + Λ`.
    Type3 {
        m: ExponentLattice,
    },
    None,
}

impl fmt::Display for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexOrder::Type1Maximal => f.write_str("type1"),
            VertexOrder::Type2 => f.write_str("type2"),
            VertexOrder::Type3 { m } => write!(f, "type3, M = {m}"),
            VertexOrder::None => f.write_str("none"),
        }
    }
}

pub fn classify_vertex_order(l: &ExponentLattice) -> VertexOrder {
    if !l.is_order() {
        return VertexOrder::None;
    }
    if l.is_maximal_order() {
        return VertexOrder::Type1Maximal;
    }
    let dual = l.dual();
    let inv = l.scale(-1);
    if !(l.is_proper_subset(&dual) && dual.is_proper_subset(&inv)) {
        return VertexOrder::None;
    }
    let dual_sq = dual.product(&dual);
    if dual_sq.is_subset(&inv) {
        return VertexOrder::Type2;
    }
    let m = dual_sq.scale(1).sum(l);
    if m.is_self_dual() {
        VertexOrder::Type3 { m }
    } else {
        VertexOrder::None
    }
}

/// Rational shifts `v(b_i)` on the standard basis, in coordinate order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntermediateFn {
    pub values: [Rational; 8],
}

impl IntermediateFn {
    pub fn new(values: [Rational; 8]) -> Self {
        IntermediateFn { values }
    }

    pub fn zero() -> Self {
        IntermediateFn::new(std::array::from_fn(|_| int(0)))
    }

    /// From values on `b1, b2, b3` and `b−1, b−2, b−3`, with `v(b±4) = 0`.
    pub fn from_rows(v: [Rational; 3], w: [Rational; 3]) -> Self {
        let [v1, v2, v3] = v;
        let [w1, w2, w3] = w;
        IntermediateFn::new([int(0), v1, v2, v3, w1, w2, w3, int(0)])
    }

    pub fn at(&self, b: BasisIndex) -> &Rational {
        &self.values[b.coord()]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        IntermediateFn::new(self.values.clone().map(|v| v * c))
    }
}

impl fmt::Display for IntermediateFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..8)
            .map(|c| format!("{}={}", BasisIndex::from_coord(c), self.values[c]))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// The named intermediate functions `v0` (standard) through `v5`.
pub fn standard_intermediate_fns() -> Vec<(&'static str, IntermediateFn)> {
    let r = |n: i64, d: i64| rat(n, d);
    let v1 = IntermediateFn::from_rows([r(-1, 1), r(1, 1), r(0, 1)], [r(1, 1), r(-1, 1), r(0, 1)]);
    let v1b = IntermediateFn::from_rows([r(0, 1), r(1, 1), r(-1, 1)], [r(0, 1), r(-1, 1), r(1, 1)]);
    let v2 = v1.scale(&r(1, 2));
    let v3 = IntermediateFn::from_rows([r(-1, 3), r(2, 3), r(-1, 3)], [r(1, 3), r(-2, 3), r(1, 3)]);
    let v4 = v2.scale(&r(2, 3));
    let v5 = v3.scale(&r(1, 2));
    vec![
        ("v0", IntermediateFn::zero()),
        ("v1", v1),
        ("v1b", v1b),
        ("v2", v2),
        ("v3", v3),
        ("v4", v4),
        ("v5", v5),
    ]
}

pub fn intermediate_fn(name: &str) -> Result<IntermediateFn, Error> {
    standard_intermediate_fns()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, v)| v)
        .ok_or_else(|| Error::parse(format!("unknown intermediate function `{name}`")))
}

/// The intermediate function of an apartment point `x·δ∨ + y·γ∨`:
/// `v(b_j) = −E_j`, `v(b−j) = E_j`, `v(b±4) = 0` with
/// `E = x·(−1, −1, 2) + y·(1, 0, −1)`.
pub fn intermediate_fn_at(pt: &ApartmentPoint) -> IntermediateFn {
    let e = [-&pt.x + &pt.y, -pt.x.clone(), int(2) * &pt.x - &pt.y];
    IntermediateFn::from_rows(e.clone().map(|c| -c), e)
}

/// The order attached to an apartment point: `Λ_0` of its lattice sequence.
pub fn order_at(pt: &ApartmentPoint) -> ExponentLattice {
    lattice_at(&intermediate_fn_at(pt), &int(0))
}

/// `min_i val_p(x_i) + v(b_i)`, or `+inf` for `x = 0`.
pub fn valuation_of(x: &Octonion<Rational>, v: &IntermediateFn, p: Prime) -> Extended<Rational> {
    x.coords()
        .iter()
        .zip(&v.values)
        .filter_map(|(c, s)| val_p(c, p).finite().map(|k| int(k) + s))
        .min()
        .map_or(Extended::Infinity, Extended::Finite)
}

/// `Λ_r = {x : val(x) ≥ r}`, with exponents `⌈r − v(b_i)⌉`.
pub fn lattice_at(v: &IntermediateFn, r: &Rational) -> ExponentLattice {
    ExponentLattice::new(std::array::from_fn(|i| to_i64(&ceil(&(r - &v.values[i])))))
}

/// The indices `r ∈ [0, 1)` with `Λ_{r+ε} ≠ Λ_r`, sorted.
pub fn jumps(v: &IntermediateFn) -> Vec<Rational> {
    let mut out: Vec<Rational> = v.values.iter().map(frac).collect();
    out.sort();
    out.dedup();
    out
}

/// The lattice sequence of an intermediate function.
#[derive(Clone, Debug)]
pub struct LatticeSequence {
    pub generator: IntermediateFn,
}

impl LatticeSequence {
    pub fn new(generator: IntermediateFn) -> Self {
        LatticeSequence { generator }
    }

    pub fn at(&self, r: &Rational) -> ExponentLattice {
        lattice_at(&self.generator, r)
    }

    pub fn jumps(&self) -> Vec<Rational> {
        jumps(&self.generator)
    }

    /// The valuation read back from the sequence: the largest `r` with
    /// `x ∈ Λ_r`, searched over the jump grid.
    pub fn valuation(&self, x: &Octonion<Rational>, p: Prime) -> Extended<Rational> {
        if x.is_zero() {
            return Extended::Infinity;
        }
        let ks: Vec<i64> = x
            .coords()
            .iter()
            .filter_map(|c| val_p(c, p).finite())
            .collect();
        let bound = self
            .generator
            .values
            .iter()
            .map(|v| to_i64(&ceil(&v.abs_rat())))
            .max()
            .unwrap_or(0);
        let mut n = ks.iter().min().unwrap() - bound - 1;
        while self.at(&int(n + 1)).contains(x, p) {
            n += 1;
        }
        let jumps = self.jumps();
        let best = jumps
            .iter()
            .rev()
            .map(|j| int(n) + j)
            .find(|r| self.at(r).contains(x, p))
            .unwrap_or_else(|| int(n));
        Extended::Finite(best)
    }
}

trait AbsRat {
    fn abs_rat(&self) -> Rational;
}

impl AbsRat for Rational {
    fn abs_rat(&self) -> Rational {
        if *self < int(0) {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Violations found while checking the algebra-valuation axioms.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ValuationReport {
    pub samples: usize,
    pub additivity: Vec<String>,
    pub strict_additivity: Vec<String>,
    pub homogeneity: Vec<String>,
    pub definiteness: Vec<String>,
    pub multiplicativity: Vec<String>,
    pub minorization: Vec<String>,
}

impl ValuationReport {
    pub fn passed(&self) -> bool {
        self.additivity.is_empty()
            && self.strict_additivity.is_empty()
            && self.homogeneity.is_empty()
            && self.definiteness.is_empty()
            && self.multiplicativity.is_empty()
            && self.minorization.is_empty()
    }
}

/// A random rational with `p`-adic valuation in `[−2, 2]`, or zero.
pub fn random_scalar(rng: &mut StdRng, p: Prime) -> Rational {
    if rng.gen_ratio(1, 6) {
        return int(0);
    }
    let mut unit: i64 = rng.gen_range(1..50);
    while unit % p.get() as i64 == 0 {
        unit += 1;
    }
    if rng.gen_bool(0.5) {
        unit = -unit;
    }
    let denom: i64 = {
        let mut d = rng.gen_range(1..8);
        while d % p.get() as i64 == 0 {
            d += 1;
        }
        d
    };
    rat(unit, denom) * p.pow(rng.gen_range(-2..=2))
}

pub fn random_octonion(rng: &mut StdRng, p: Prime) -> Octonion<Rational> {
    Octonion::from_coords(std::array::from_fn(|_| random_scalar(rng, p)))
}

/// Checks axioms (a)–(d) and minorization of `val(B(x, y))` on all basis
/// pairs and on `samples` seeded random pairs.
pub fn check_algebra_valuation(
    v: &IntermediateFn,
    p: Prime,
    seed: u64,
    samples: usize,
) -> ValuationReport {
    let val = |x: &Octonion<Rational>| valuation_of(x, v, p);
    let mut report = ValuationReport {
        samples,
        ..Default::default()
    };
    let mut pairs: Vec<(Octonion<Rational>, Octonion<Rational>)> = Vec::new();
    for i in BasisIndex::ALL {
        for j in BasisIndex::ALL {
            pairs.push((Octonion::basis(i), Octonion::basis(j)));
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        pairs.push((random_octonion(&mut rng, p), random_octonion(&mut rng, p)));
    }
    for (x, y) in &pairs {
        let (vx, vy) = (val(x), val(y));
        let low = vx.clone().min(vy.clone());
        let vs = val(&(x + y));
        if vs < low {
            report
                .additivity
                .push(format!("val({x} + {y}) = {vs} < {low}"));
        }
        if vx != vy && vs != low {
            report
                .strict_additivity
                .push(format!("val({x} + {y}) = {vs} ≠ {low}"));
        }
        let sum = vx.clone() + vy.clone();
        let prod = val(&(x * y));
        if prod < sum {
            report
                .multiplicativity
                .push(format!("val({x} · {y}) = {prod} < {sum}"));
        }
        let b = val_p(&x.bilin(y), p).map(int);
        if b < sum {
            report
                .minorization
                .push(format!("val(B({x}, {y})) = {b} < {sum}"));
        }
        if x.is_zero() != vx.is_infinite() {
            report.definiteness.push(format!("val({x}) = {vx}"));
        }
    }
    for _ in 0..samples.min(200) {
        let (c, x) = (random_scalar(&mut rng, p), random_octonion(&mut rng, p));
        let lhs = val(&x.scale(&c));
        let rhs = val_p(&c, p).map(int) + val(&x);
        if lhs != rhs {
            report
                .homogeneity
                .push(format!("val({c} · {x}) = {lhs} ≠ {rhs}"));
        }
    }
    report
}

/// The lattices of the sequence at each jump in `[0, 1]`, ending with `r = 1`.
pub fn sequence_table(v: &IntermediateFn) -> Vec<(Rational, ExponentLattice)> {
    let mut out: Vec<(Rational, ExponentLattice)> = jumps(v)
        .into_iter()
        .map(|j| (j.clone(), lattice_at(v, &j)))
        .collect();
    out.push((int(1), lattice_at(v, &int(1))));
    out
}
