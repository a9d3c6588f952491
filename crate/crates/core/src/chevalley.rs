//! Commutators of root subgroups and extraction of the structure constants
//! `N_ij` in `[e_α(s), e_β(t)] = ∏ e_{iα+jβ}(N_ij sⁱ tʲ)`.
//!
//! The commutator word is `α(s), β(t), α(−s), β(−t)` with the first factor
//! acting first. The product side runs over the root string ordered by `j`
//! ascending, then `i` ascending.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::apartment::Root;
use crate::arith::{MultiPoly, Ring};
use crate::automorphisms::{AutWord, Generator, RootLabel};
use crate::error::Error;
use crate::octonion::Octonion;

/// Candidate values for a single structure constant.
pub const CANDIDATES: [i64; 6] = [-3, -2, -1, 1, 2, 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommutatorSpec {
    pub alpha: RootLabel,
    pub beta: RootLabel,
}

impl CommutatorSpec {
    pub fn new(alpha: RootLabel, beta: RootLabel) -> Self {
        CommutatorSpec { alpha, beta }
    }

    pub fn is_vacuous(&self) -> bool {
        self.alpha.root() + self.beta.root() == Root::new(0, 0)
    }
}

impl fmt::Display for CommutatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}(s), {}(t)]", self.alpha, self.beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootStringEntry {
    pub i: u32,
    pub j: u32,
    #[serde(skip)]
    pub root: Option<Root>,
    #[serde(rename = "N")]
    pub constant: i64,
}

impl RootStringEntry {
    /// Equality of the index and constant, ignoring the cached root.
    pub fn same_constant(&self, o: &RootStringEntry) -> bool {
        (self.i, self.j, self.constant) == (o.i, o.j, o.constant)
    }
}

/// One column of a table: the constants for the pair `(alpha, beta)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub alpha: RootLabel,
    pub beta: RootLabel,
    pub constants: Vec<RootStringEntry>,
}

pub type ConstantTable = Vec<TableEntry>;

/// Outcome of a root-string query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootString {
    /// `α + β = 0`; the commutator relation does not apply.
    Vacuous,
    /// The pairs `(i, j)` with `iα + jβ` a root, possibly empty.
    Pairs(Vec<(u32, u32)>),
}

pub fn root_string(alpha: RootLabel, beta: RootLabel) -> RootString {
    let (a, b) = (alpha.root(), beta.root());
    if a + b == Root::new(0, 0) {
        return RootString::Vacuous;
    }
    let mut pairs = Vec::new();
    for j in 1..=3u32 {
        for i in 1..=3u32 {
            if (a.scale(i as i64) + b.scale(j as i64)).is_root() {
                pairs.push((i, j));
            }
        }
    }
    RootString::Pairs(pairs)
}

/// The word `α(s), β(t), α(−s), β(−t)`.
pub fn commutator_word<C: Ring>(spec: CommutatorSpec, s: &C, t: &C) -> AutWord<C> {
    AutWord(vec![
        Generator::Root(spec.alpha, s.clone()),
        Generator::Root(spec.beta, t.clone()),
        Generator::Root(spec.alpha, -s.clone()),
        Generator::Root(spec.beta, -t.clone()),
    ])
}

fn string_factor<C: Ring>(
    spec: CommutatorSpec,
    i: u32,
    j: u32,
    n: i64,
    s: &C,
    t: &C,
) -> Generator<C> {
    let root = spec.alpha.root().scale(i as i64) + spec.beta.root().scale(j as i64);
    let label = RootLabel::from_root(root).expect("root string entries are roots");
    let mut param = C::from_i64(n);
    for _ in 0..i {
        param = param * s;
    }
    for _ in 0..j {
        param = param * t;
    }
    Generator::Root(label, param)
}

/// The ordered product `∏ e_{iα+jβ}(N_ij sⁱ tʲ)` for given constants.
pub fn product_word<C: Ring>(
    spec: CommutatorSpec,
    entries: &[RootStringEntry],
    s: &C,
    t: &C,
) -> AutWord<C> {
    AutWord(
        entries
            .iter()
            .map(|e| string_factor(spec, e.i, e.j, e.constant, s, t))
            .collect(),
    )
}

/// The octonion with coordinates `a, …, h` as independent variables.
pub fn generic_octonion() -> Octonion<MultiPoly> {
    let names = ["a", "b", "c", "d", "e", "f", "g", "h"];
    Octonion::from_coords(std::array::from_fn(|k| MultiPoly::var(names[k])))
}

/// Finds the unique constants making the commutator equal to the ordered
/// product on a generic octonion, by exhaustive search over `{±1, ±2, ±3}`.
pub fn extract_constants(spec: CommutatorSpec) -> Result<Vec<RootStringEntry>, Error> {
    let pairs = match root_string(spec.alpha, spec.beta) {
        RootString::Vacuous => {
            return Err(Error::domain(format!("{spec} is vacuous: α + β = 0")));
        }
        RootString::Pairs(p) => p,
    };
    let (s, t) = (MultiPoly::var("s"), MultiPoly::var("t"));
    let x = generic_octonion();
    let target = commutator_word(spec, &s, &t).apply(&x);
    let mut solutions = Vec::new();
    let mut chosen = Vec::with_capacity(pairs.len());
    search(
        spec,
        &pairs,
        &s,
        &t,
        &x,
        &target,
        &mut chosen,
        &mut solutions,
    );
    match solutions.len() {
        1 => {
            let values = solutions.pop().unwrap();
            Ok(pairs
                .iter()
                .zip(values)
                .map(|(&(i, j), n)| RootStringEntry {
                    i,
                    j,
                    root: Some(
                        spec.alpha.root().scale(i as i64) + spec.beta.root().scale(j as i64),
                    ),
                    constant: n,
                })
                .collect())
        }
        0 => Err(Error::Verification(format!(
            "no constants reproduce {spec}"
        ))),
        k => Err(Error::Verification(format!(
            "{k} constant tuples reproduce {spec}"
        ))),
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    spec: CommutatorSpec,
    pairs: &[(u32, u32)],
    s: &MultiPoly,
    t: &MultiPoly,
    partial: &Octonion<MultiPoly>,
    target: &Octonion<MultiPoly>,
    chosen: &mut Vec<i64>,
    solutions: &mut Vec<Vec<i64>>,
) {
    let depth = chosen.len();
    if depth == pairs.len() {
        if (partial - target).is_zero() {
            solutions.push(chosen.clone());
        }
        return;
    }
    let (i, j) = pairs[depth];
    for n in CANDIDATES {
        let next = string_factor(spec, i, j, n, s, t).apply(partial);
        chosen.push(n);
        search(spec, pairs, s, t, &next, target, chosen, solutions);
        chosen.pop();
    }
}

/// All ordered pairs with a nonempty root string.
pub fn nonempty_pairs() -> Vec<CommutatorSpec> {
    let mut out = Vec::new();
    for alpha in RootLabel::all() {
        for beta in RootLabel::all() {
            if let RootString::Pairs(p) = root_string(alpha, beta) {
                if !p.is_empty() {
                    out.push(CommutatorSpec::new(alpha, beta));
                }
            }
        }
    }
    out
}

/// Extracts the constants for every nonempty pair, in parallel.
pub fn emit_all_tables() -> Result<ConstantTable, Error> {
    nonempty_pairs()
        .into_par_iter()
        .map(|spec| {
            Ok(TableEntry {
                alpha: spec.alpha,
                beta: spec.beta,
                constants: extract_constants(spec)?,
            })
        })
        .collect()
}

/// The published tables, one entry per printed column, in printed order.
pub fn reference_table() -> ConstantTable {
    serde_json::from_str(include_str!("../data/reference_constants.json"))
        .expect("embedded reference table is valid JSON")
}

/// Labels failing the additivity relation `e_α(s)e_α(t) = e_α(s+t)` or the
/// torus relation `h_α(s)h_α(t) = h_α(st)`, checked on a generic octonion.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    pub checked: usize,
    pub additive_failures: Vec<RootLabel>,
    pub torus_failures: Vec<RootLabel>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.additive_failures.is_empty() && self.torus_failures.is_empty()
    }
}

pub fn check_relations() -> Result<RelationReport, Error> {
    let (s, t) = (MultiPoly::var("s"), MultiPoly::var("t"));
    let x = generic_octonion();
    let mut report = RelationReport::default();
    for label in RootLabel::all() {
        report.checked += 1;
        let split = AutWord(vec![
            Generator::Root(label, s.clone()),
            Generator::Root(label, t.clone()),
        ]);
        let joined = AutWord::single(Generator::Root(label, s.clone() + &t));
        if split.apply(&x) != joined.apply(&x) {
            report.additive_failures.push(label);
        }
        let hs = crate::automorphisms::h_alpha(label, &s)?;
        let ht = crate::automorphisms::h_alpha(label, &t)?;
        let hst = crate::automorphisms::h_alpha(label, &(s.clone() * &t))?;
        if hs.then(&ht).apply(&x) != hst.apply(&x) {
            report.torus_failures.push(label);
        }
    }
    Ok(report)
}

/// Result of comparing computed constants against the published tables.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TableComparison {
    /// Published constants found with the same value at the same `(i, j)`.
    pub matched: usize,
    /// Published constants whose computed value differs, or is absent.
    pub mismatched: Vec<String>,
    /// Computed constants with no published counterpart.
    pub unpublished: Vec<String>,
    /// Published pairs with no computed entry.
    pub missing_pairs: Vec<String>,
}

impl TableComparison {
    pub fn published_agree(&self) -> bool {
        self.mismatched.is_empty() && self.missing_pairs.is_empty()
    }
}

pub fn compare_with_reference(
    computed: &[TableEntry],
    reference: &[TableEntry],
) -> TableComparison {
    let mut report = TableComparison::default();
    for r in reference {
        let Some(c) = computed
            .iter()
            .find(|c| c.alpha == r.alpha && c.beta == r.beta)
        else {
            report.missing_pairs.push(format!("{} {}", r.alpha, r.beta));
            continue;
        };
        for e in &r.constants {
            match c.constants.iter().find(|x| (x.i, x.j) == (e.i, e.j)) {
                Some(x) if x.constant == e.constant => report.matched += 1,
                Some(x) => report.mismatched.push(format!(
                    "{} {} N{}{}: computed {}, published {}",
                    r.alpha, r.beta, e.i, e.j, x.constant, e.constant
                )),
                None => report.mismatched.push(format!(
                    "{} {} N{}{}: not in the computed root string",
                    r.alpha, r.beta, e.i, e.j
                )),
            }
        }
    }
    for c in computed {
        let published = reference
            .iter()
            .find(|r| r.alpha == c.alpha && r.beta == c.beta);
        for x in &c.constants {
            let listed =
                published.is_some_and(|r| r.constants.iter().any(|e| (e.i, e.j) == (x.i, x.j)));
            if !listed {
                report.unpublished.push(format!(
                    "{} {} N{}{} = {}",
                    c.alpha, c.beta, x.i, x.j, x.constant
                ));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> RootLabel {
        s.parse().unwrap()
    }

    #[test]
    fn root_strings() {
        assert_eq!(
            root_string(l("delta+i"), l("gamma-k")),
            RootString::Pairs(vec![(1, 1), (2, 1), (3, 1), (3, 2)])
        );
        assert_eq!(
            root_string(l("gamma+i"), l("delta+k")),
            RootString::Pairs(vec![(1, 1), (1, 2), (1, 3), (2, 3)])
        );
        assert_eq!(
            root_string(l("gamma+i"), l("gamma+j")),
            RootString::Pairs(vec![(1, 1)])
        );
        assert_eq!(root_string(l("delta+i"), l("delta-i")), RootString::Vacuous);
        assert_eq!(
            root_string(l("delta+i"), l("gamma-j")),
            RootString::Pairs(vec![])
        );
    }

    #[test]
    fn short_pair_constants() {
        let got = extract_constants(CommutatorSpec::new(l("gamma+i"), l("gamma+j"))).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].constant, 1);
    }

    #[test]
    fn vacuous_pair_is_rejected() {
        assert!(extract_constants(CommutatorSpec::new(l("gamma+i"), l("gamma-i"))).is_err());
    }
}
