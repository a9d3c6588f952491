//! The G2 root and coroot systems, affine roots, and vertex types in the
//! standard apartment.
//!
//! Roots are written `mδ + nγ` with `δ` the short and `γ` the long simple
//! root. Apartment points are written `x·δ∨ + y·γ∨`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::arith::{ceil, int, rat, to_i64, Rational, Ring};
use crate::error::Error;

/// The root `m·δ + n·γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub m: i64,
    pub n: i64,
}

impl Root {
    pub const DELTA: Root = Root { m: 1, n: 0 };
    pub const GAMMA: Root = Root { m: 0, n: 1 };

    pub const POSITIVE: [Root; 6] = [
        Root { m: 1, n: 0 },
        Root { m: 0, n: 1 },
        Root { m: 1, n: 1 },
        Root { m: 2, n: 1 },
        Root { m: 3, n: 1 },
        Root { m: 3, n: 2 },
    ];

    pub fn new(m: i64, n: i64) -> Self {
        Root { m, n }
    }

    /// All twelve roots: the positive ones followed by their negatives.
    pub fn all() -> Vec<Root> {
        Root::POSITIVE
            .iter()
            .copied()
            .chain(Root::POSITIVE.iter().map(|r| -*r))
            .collect()
    }

    pub fn is_root(self) -> bool {
        Root::POSITIVE.iter().any(|r| *r == self || -*r == self)
    }

    pub fn is_long(self) -> bool {
        self.n != 0 && self.m % 3 == 0
    }

    pub fn scale(self, k: i64) -> Root {
        Root::new(self.m * k, self.n * k)
    }
}

impl std::ops::Add for Root {
    type Output = Root;

    fn add(self, o: Root) -> Root {
        Root::new(self.m + o.m, self.n + o.n)
    }
}

impl std::ops::Neg for Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root::new(-self.m, -self.n)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |k: i64, s: &str| match k {
            1 => s.to_string(),
            -1 => format!("-{s}"),
            k => format!("{k}{s}"),
        };
        match (self.m, self.n) {
            (0, 0) => f.write_str("0"),
            (m, 0) => f.write_str(&term(m, "δ")),
            (0, n) => f.write_str(&term(n, "γ")),
            (m, n) if n > 0 => write!(f, "{}+{}", term(m, "δ"), term(n, "γ")),
            (m, n) => write!(f, "{}{}", term(m, "δ"), term(n, "γ")),
        }
    }
}

/// The coroot `c_delta·δ∨ + c_gamma·γ∨`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coroot {
    pub c_delta: i64,
    pub c_gamma: i64,
}

impl Coroot {
    pub fn new(c_delta: i64, c_gamma: i64) -> Self {
        Coroot { c_delta, c_gamma }
    }
}

impl std::ops::Neg for Coroot {
    type Output = Coroot;

    fn neg(self) -> Coroot {
        Coroot::new(-self.c_delta, -self.c_gamma)
    }
}

/// `⟨α, c⟩`, the bilinear extension of `⟨δ,δ∨⟩ = 2`, `⟨δ,γ∨⟩ = −1`,
/// `⟨γ,δ∨⟩ = −3`, `⟨γ,γ∨⟩ = 2`.
pub fn pairing(alpha: Root, c: Coroot) -> i64 {
    alpha.m * (2 * c.c_delta - c.c_gamma) + alpha.n * (-3 * c.c_delta + 2 * c.c_gamma)
}

pub fn coroot_of(alpha: Root) -> Result<Coroot, Error> {
    let (sign, pos) = if Root::POSITIVE.contains(&alpha) {
        (1, alpha)
    } else if Root::POSITIVE.contains(&-alpha) {
        (-1, -alpha)
    } else {
        return Err(Error::domain(format!("{alpha} is not a root")));
    };
    let c = match (pos.m, pos.n) {
        (1, 0) => Coroot::new(1, 0),
        (0, 1) => Coroot::new(0, 1),
        (1, 1) => Coroot::new(1, 3),
        (2, 1) => Coroot::new(2, 3),
        (3, 1) => Coroot::new(1, 1),
        (3, 2) => Coroot::new(1, 2),
        _ => unreachable!(),
    };
    Ok(if sign > 0 { c } else { -c })
}

/// The reflection `s_α(β) = β − ⟨β, α∨⟩·α`.
pub fn reflect(alpha: Root, beta: Root) -> Root {
    let c = coroot_of(alpha).expect("reflection in a non-root");
    beta + alpha.scale(-pairing(beta, c))
}

/// `[[⟨γ,γ∨⟩, ⟨γ,δ∨⟩], [⟨δ,γ∨⟩, ⟨δ,δ∨⟩]]` for the simple roots ordered `(γ, δ)`.
pub fn cartan_matrix() -> [[i64; 2]; 2] {
    let simple = [Root::GAMMA, Root::DELTA];
    let mut a = [[0; 2]; 2];
    for (i, ai) in simple.iter().enumerate() {
        for (j, aj) in simple.iter().enumerate() {
            a[i][j] = pairing(*ai, coroot_of(*aj).unwrap());
        }
    }
    a
}

/// The Weyl group as permutations of [`Root::all`], generated by the two
/// simple reflections.
pub fn weyl_group() -> Vec<Vec<usize>> {
    let roots = Root::all();
    let index = |r: Root| roots.iter().position(|x| *x == r).unwrap();
    let gens: Vec<Vec<usize>> = [Root::DELTA, Root::GAMMA]
        .iter()
        .map(|a| roots.iter().map(|b| index(reflect(*a, *b))).collect())
        .collect();
    let identity: Vec<usize> = (0..roots.len()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for s in &gens {
            let h: Vec<usize> = g.iter().map(|&i| s[i]).collect();
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort();
    out
}

pub fn weyl_group_order() -> usize {
    weyl_group().len()
}

/// A rational point `x·δ∨ + y·γ∨` of the apartment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ApartmentPoint {
    pub x: Rational,
    pub y: Rational,
}

impl ApartmentPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        ApartmentPoint { x, y }
    }

    pub fn origin() -> Self {
        ApartmentPoint::new(int(0), int(0))
    }

    pub fn from_coroot(c: Coroot) -> Self {
        ApartmentPoint::new(int(c.c_delta), int(c.c_gamma))
    }

    pub fn translate(&self, c: Coroot) -> Self {
        ApartmentPoint::new(&self.x + int(c.c_delta), &self.y + int(c.c_gamma))
    }

    /// Position in the plane, with `δ∨` along the positive horizontal axis and
    /// `γ∨` at 150°; `|δ∨| = √3` and `|γ∨| = 1`.
    pub fn euclidean(&self) -> (f64, f64) {
        let x = num_traits::ToPrimitive::to_f64(&self.x).unwrap();
        let y = num_traits::ToPrimitive::to_f64(&self.y).unwrap();
        euclidean(x, y)
    }
}

/// Plane position of `x·δ∨ + y·γ∨`; see [`ApartmentPoint::euclidean`].
pub fn euclidean(x: f64, y: f64) -> (f64, f64) {
    let r3 = 3f64.sqrt();
    (r3 * x - r3 / 2.0 * y, y / 2.0)
}

impl fmt::Display for ApartmentPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `⟨α, x⟩` for a rational apartment point.
pub fn pair_point(alpha: Root, x: &ApartmentPoint) -> Rational {
    int(alpha.m) * (int(2) * &x.x - &x.y) + int(alpha.n) * (int(-3) * &x.x + int(2) * &x.y)
}

/// The affine function `x ↦ ⟨α, x⟩ + n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AffineRoot {
    pub root: Root,
    pub n: i64,
}

pub fn affine_eval(ar: AffineRoot, x: &ApartmentPoint) -> Rational {
    pair_point(ar.root, x) + int(ar.n)
}

/// Affine roots with positive gradient whose hyperplane contains `x`.
pub fn hyperplanes_through(x: &ApartmentPoint) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    for root in Root::POSITIVE {
        let bound = to_i64(&ceil(&pair_point(root, x).abs_value())) + 1;
        for n in -bound..=bound {
            let ar = AffineRoot { root, n };
            if affine_eval(ar, x).is_zero() {
                out.push(ar);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexType {
    Type1,
    Type2,
    Type3,
    Edge,
    Interior,
}

impl VertexType {
    pub fn is_vertex(self) -> bool {
        matches!(
            self,
            VertexType::Type1 | VertexType::Type2 | VertexType::Type3
        )
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexType::Type1 => "type1",
            VertexType::Type2 => "type2",
            VertexType::Type3 => "type3",
            VertexType::Edge => "edge",
            VertexType::Interior => "interior",
        })
    }
}

/// Classifies `x` by how many of the six hyperplane directions pass through it.
pub fn vertex_type(x: &ApartmentPoint) -> VertexType {
    let directions: BTreeSet<Root> = hyperplanes_through(x).into_iter().map(|h| h.root).collect();
    match directions.len() {
        6 => VertexType::Type1,
        3 => VertexType::Type3,
        2 => VertexType::Type2,
        1 => VertexType::Edge,
        0 => VertexType::Interior,
        k => unreachable!("{k} hyperplane directions meet at {x}"),
    }
}

trait AbsValue {
    fn abs_value(&self) -> Rational;
}

impl AbsValue for Rational {
    fn abs_value(&self) -> Rational {
        if *self < int(0) {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// All vertices (types 1, 2, 3) in the closed rectangle `[x0, x1] × [y0, y1]`,
/// sorted by coordinates.
///
/// Every vertex of the arrangement has coordinates in `(1/6)ℤ`, since any two
/// hyperplane directions meet with a pairing determinant dividing 6.
pub fn vertices_in_region(
    x0: &Rational,
    y0: &Rational,
    x1: &Rational,
    y1: &Rational,
) -> Vec<(ApartmentPoint, VertexType)> {
    let six = int(6);
    let lo = |a: &Rational| to_i64(&ceil(&(a * &six)));
    let hi = |a: &Rational| -to_i64(&ceil(&(-(a * &six))));
    let mut out = Vec::new();
    for i in lo(x0)..=hi(x1) {
        for j in lo(y0)..=hi(y1) {
            let p = ApartmentPoint::new(rat(i, 6), rat(j, 6));
            let t = vertex_type(&p);
            if t.is_vertex() {
                out.push((p, t));
            }
        }
    }
    out.sort();
    out
}
