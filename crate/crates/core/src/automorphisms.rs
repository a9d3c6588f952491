//! The automorphism families θ, γ, δ of the split octonions, the twelve
//! root-labelled one-parameter subgroups, and generator words.
//!
//! Words act left to right: the first generator in the list acts first.
//! Lowering a word to an 8×8 matrix uses the column convention, so
//! `M · coords(x) = coords(f(x))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::apartment::Root;
use crate::arith::{parse_rational, val_p, MultiPoly, Prime, Rational, Ring};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::octonion::{Axis, BasisIndex, Mat2, Octonion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gamma,
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One of the twelve labels `γ_u^±`, `δ_u^±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootLabel {
    pub family: Family,
    pub axis: Axis,
    pub sign: Sign,
}

impl RootLabel {
    pub fn new(family: Family, axis: Axis, sign: Sign) -> Self {
        RootLabel { family, axis, sign }
    }

    /// All twelve labels, ordered γ before δ, then by axis, then `+` before `−`.
    pub fn all() -> Vec<RootLabel> {
        let mut out = Vec::with_capacity(12);
        for family in [Family::Gamma, Family::Delta] {
            for axis in Axis::ALL {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.push(RootLabel::new(family, axis, sign));
                }
            }
        }
        out
    }

    /// The label of the opposite root: same family and axis, opposite sign.
    pub fn mirror(self) -> RootLabel {
        RootLabel {
            sign: self.sign.flip(),
            ..self
        }
    }

    /// The root attached to this label.
    pub fn root(self) -> Root {
        use Axis::*;
        use Family::*;
        let (m, n) = match (self.family, self.axis) {
            (Delta, I) => (1, 0),
            (Delta, J) => (1, 1),
            (Delta, K) => (-2, -1),
            (Gamma, J) => (-3, -1),
            (Gamma, I) => (3, 2),
            (Gamma, K) => (0, -1),
        };
        let r = Root::new(m, n);
        match self.sign {
            Sign::Plus => r,
            Sign::Minus => -r,
        }
    }

    pub fn from_root(r: Root) -> Option<RootLabel> {
        RootLabel::all().into_iter().find(|l| l.root() == r)
    }

    /// The simple root `δ = δ_i^+`.
    pub fn delta() -> RootLabel {
        RootLabel::new(Family::Delta, Axis::I, Sign::Plus)
    }

    /// The simple root `γ = γ_k^-`.
    pub fn gamma() -> RootLabel {
        RootLabel::new(Family::Gamma, Axis::K, Sign::Minus)
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = match self.family {
            Family::Gamma => "gamma",
            Family::Delta => "delta",
        };
        let sign = match self.sign {
            Sign::Plus => "+",
            Sign::Minus => "-",
        };
        write!(f, "{family}{sign}{}", self.axis)
    }
}

impl FromStr for RootLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::parse(format!("unknown root label `{s}`"));
        let (family, rest) = if let Some(r) = s.strip_prefix("gamma") {
            (Family::Gamma, r)
        } else if let Some(r) = s.strip_prefix("delta") {
            (Family::Delta, r)
        } else {
            return Err(bad());
        };
        let mut chars = rest.chars();
        let sign = match chars.next() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(bad()),
        };
        let axis: Axis = chars.as_str().parse().map_err(|_| bad())?;
        Ok(RootLabel::new(family, axis, sign))
    }
}

impl Serialize for RootLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RootLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub type Mat3<C> = [[C; 3]; 3];

fn det3<C: Ring>(g: &Mat3<C>) -> C {
    let m = |i: usize, j: usize| g[i][j].clone();
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

/// The adjugate, which is the inverse of a unimodular matrix.
fn adj3<C: Ring>(g: &Mat3<C>) -> Mat3<C> {
    let m = |i: usize, j: usize| g[i % 3][j % 3].clone();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            m(j + 1, i + 1) * m(j + 2, i + 2) - m(j + 1, i + 2) * m(j + 2, i + 1)
        })
    })
}

fn mat3_vec<C: Ring>(g: &Mat3<C>, x: &[C; 3]) -> [C; 3] {
    std::array::from_fn(|i| {
        g[i][0].clone() * &x[0] + g[i][1].clone() * &x[1] + g[i][2].clone() * &x[2]
    })
}

/// A single automorphism of the octonions.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator<C> {
    /// `θ(g)`: `v ↦ g v`, `w ↦ g⁻ᵀ w`, diagonal fixed.
    Theta(Mat3<C>),
    /// `γ_u(g)`: `a + b·l_u ↦ a + (g b)·l_u`.
    Gamma(Axis, Mat2<C>),
    /// `δ_u(g)`: `a + b·l_u ↦ g a g⁻¹ + (b g⁻¹)·l_u`.
    Delta(Axis, Mat2<C>),
    /// The root subgroup element `e_α(t)`.
    Root(RootLabel, C),
}

impl<C: Ring> Generator<C> {
    pub fn theta(g: Mat3<C>) -> Result<Self, Error> {
        if !det3(&g).is_one() {
            return Err(Error::domain("θ requires a matrix of determinant 1"));
        }
        Ok(Generator::Theta(g))
    }

    pub fn gamma(u: Axis, g: Mat2<C>) -> Result<Self, Error> {
        if !g.det().is_one() {
            return Err(Error::domain("γ requires a matrix of determinant 1"));
        }
        Ok(Generator::Gamma(u, g))
    }

    pub fn delta(u: Axis, g: Mat2<C>) -> Result<Self, Error> {
        if !g.det().is_one() {
            return Err(Error::domain("δ requires a matrix of determinant 1"));
        }
        Ok(Generator::Delta(u, g))
    }

    /// The diagonal torus element `θ(diag(t1, t2, t3))` with `t1·t2·t3 = 1`.
    pub fn theta_diag(t: [C; 3]) -> Result<Self, Error> {
        let [a, b, c] = t;
        let z = || C::zero();
        Generator::theta([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    /// Expands a root element into its `γ(e^±)` or `δ(e^±)` form.
    pub fn expand(&self) -> Generator<C> {
        match self {
            Generator::Root(label, t) => {
                let g = match label.sign {
                    Sign::Plus => Mat2::e_plus(t.clone()),
                    Sign::Minus => Mat2::e_minus(t.clone()),
                };
                match label.family {
                    Family::Gamma => Generator::Gamma(label.axis, g),
                    Family::Delta => Generator::Delta(label.axis, g),
                }
            }
            other => other.clone(),
        }
    }

    pub fn apply(&self, x: &Octonion<C>) -> Octonion<C> {
        match self {
            Generator::Theta(g) => {
                let inv_t = adj3(g);
                let inv_t: Mat3<C> =
                    std::array::from_fn(|i| std::array::from_fn(|j| inv_t[j][i].clone()));
                Octonion::new(
                    x.a.clone(),
                    mat3_vec(g, &x.v),
                    mat3_vec(&inv_t, &x.w),
                    x.d.clone(),
                )
            }
            Generator::Gamma(u, g) => {
                let (a, b) = x.decompose(*u);
                Octonion::recompose(*u, &a, &g.mul(&b))
            }
            Generator::Delta(u, g) => {
                let (a, b) = x.decompose(*u);
                let gi = g.adjugate();
                Octonion::recompose(*u, &g.mul(&a).mul(&gi), &b.mul(&gi))
            }
            Generator::Root(..) => self.expand().apply(x),
        }
    }

    pub fn inverse(&self) -> Generator<C> {
        match self {
            Generator::Theta(g) => Generator::Theta(adj3(g)),
            Generator::Gamma(u, g) => Generator::Gamma(*u, g.adjugate()),
            Generator::Delta(u, g) => Generator::Delta(*u, g.adjugate()),
            Generator::Root(l, t) => Generator::Root(*l, -t.clone()),
        }
    }
}

impl<C: Ring> fmt::Display for Generator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m2 = |g: &Mat2<C>| {
            format!(
                "[[{},{}],[{},{}]]",
                g.m[0][0], g.m[0][1], g.m[1][0], g.m[1][1]
            )
        };
        match self {
            Generator::Theta(g) => {
                let rows: Vec<String> = g
                    .iter()
                    .map(|r| format!("[{},{},{}]", r[0], r[1], r[2]))
                    .collect();
                write!(f, "theta[{}]", rows.join(","))
            }
            Generator::Gamma(u, g) => write!(f, "gamma{u}{}", m2(g)),
            Generator::Delta(u, g) => write!(f, "delta{u}{}", m2(g)),
            Generator::Root(l, t) => write!(f, "{l}({t})"),
        }
    }
}

pub fn root_generator<C: Ring>(label: RootLabel, t: C) -> Generator<C> {
    Generator::Root(label, t)
}

/// A finite sequence of generators; the first one acts first.
#[derive(Clone, Debug, PartialEq)]
pub struct AutWord<C>(pub Vec<Generator<C>>);

impl<C: Ring> AutWord<C> {
    pub fn empty() -> Self {
        AutWord(Vec::new())
    }

    pub fn single(g: Generator<C>) -> Self {
        AutWord(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `next`.
    pub fn then(mut self, next: &AutWord<C>) -> Self {
        self.0.extend(next.0.iter().cloned());
        self
    }

    pub fn apply(&self, x: &Octonion<C>) -> Octonion<C> {
        self.0.iter().fold(x.clone(), |acc, g| g.apply(&acc))
    }

    pub fn inverse(&self) -> Self {
        AutWord(self.0.iter().rev().map(Generator::inverse).collect())
    }

    /// The 8×8 matrix of the word acting on coordinate columns.
    pub fn to_matrix(&self) -> Matrix<C> {
        let columns: Vec<Vec<C>> = (0..8)
            .map(|c| {
                self.apply(&Octonion::basis(BasisIndex::from_coord(c)))
                    .coords()
                    .to_vec()
            })
            .collect();
        Matrix::from_columns(&columns)
    }
}

impl<C: Ring> fmt::Display for AutWord<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// `w_α(t) = e_α(t) e_{−α}(−t⁻¹) e_α(t)`.
pub fn w_alpha<C: Ring>(label: RootLabel, t: &C) -> Result<AutWord<C>, Error> {
    let inv = t
        .try_inverse()
        .ok_or_else(|| Error::domain("w_α(t) needs an invertible t"))?;
    Ok(AutWord(vec![
        Generator::Root(label, t.clone()),
        Generator::Root(label.mirror(), -inv),
        Generator::Root(label, t.clone()),
    ]))
}

/// `h_α(t) = w_α(t) w_α(−1)`; as a word, `w_α(−1)` acts first.
pub fn h_alpha<C: Ring>(label: RootLabel, t: &C) -> Result<AutWord<C>, Error> {
    let minus_one = -C::one();
    Ok(w_alpha(label, &minus_one)?.then(&w_alpha(label, t)?))
}

/// Reads the exponents `(e1, e2, e3)` of a word acting as `θ(diag(p^e1, p^e2, p^e3))`.
pub fn torus_exponents(word: &AutWord<Rational>, p: Prime) -> Result<[i64; 3], Error> {
    let m = word.to_matrix();
    let not_toral = || Error::domain("word does not act as a diagonal torus element");
    for i in 0..8 {
        for j in 0..8 {
            if i != j && !m[(i, j)].is_zero() {
                return Err(not_toral());
            }
        }
    }
    if !m[(0, 0)].is_one() || !m[(7, 7)].is_one() {
        return Err(not_toral());
    }
    let mut e = [0i64; 3];
    for j in 0..3 {
        let (vj, wj) = (&m[(1 + j, 1 + j)], &m[(4 + j, 4 + j)]);
        let k = val_p(vj, p).finite().ok_or_else(not_toral)?;
        if *vj != p.pow(k) || *wj != p.pow(-k) {
            return Err(not_toral());
        }
        e[j] = k;
    }
    Ok(e)
}

/// Parses a word of generators separated by `;`. Parameters are read by
/// `param`, so the same syntax serves rational and symbolic words.
///
/// Accepted generators: `gamma+i(3/2)`, `delta-k(s)`,
/// `theta[[1,0,0],[0,1,0],[0,0,1]]`, `h(gamma+k, p)`, `w(delta+i, 2)`.
pub fn parse_word_with<C: Ring>(
    s: &str,
    param: &dyn Fn(&str) -> Result<C, Error>,
) -> Result<AutWord<C>, Error> {
    let mut word = AutWord::empty();
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        word = word.then(&parse_generator_with(part, param)?);
    }
    Ok(word)
}

fn parse_generator_with<C: Ring>(
    s: &str,
    param: &dyn Fn(&str) -> Result<C, Error>,
) -> Result<AutWord<C>, Error> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::parse(format!("cannot parse generator `{s}`"));
    if let Some(body) = s.strip_prefix("theta") {
        let rows = parse_matrix(body, param)?;
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(bad());
        }
        let g: Mat3<C> = std::array::from_fn(|i| std::array::from_fn(|j| rows[i][j].clone()));
        return Ok(AutWord::single(Generator::theta(g)?));
    }
    let open = s.find('(').ok_or_else(bad)?;
    let args = s[open..]
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let head = &s[..open];
    if head == "h" || head == "w" {
        let (label, t) = args.split_once(',').ok_or_else(bad)?;
        let label: RootLabel = label.parse()?;
        let t = param(t)?;
        return if head == "h" {
            h_alpha(label, &t)
        } else {
            w_alpha(label, &t)
        };
    }
    let label: RootLabel = head.parse()?;
    Ok(AutWord::single(Generator::Root(label, param(args)?)))
}

fn parse_matrix<C: Ring>(
    s: &str,
    param: &dyn Fn(&str) -> Result<C, Error>,
) -> Result<Vec<Vec<C>>, Error> {
    let bad = || Error::parse(format!("cannot parse matrix `{s}`"));
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?;
    let mut rows = Vec::new();
    for row in inner.split("],") {
        let row = row.trim_start_matches('[').trim_end_matches(']');
        rows.push(
            row.split(',')
                .map(param)
                .collect::<Result<Vec<C>, Error>>()?,
        );
    }
    Ok(rows)
}

/// Parameter reader for rational words: a rational, or `p`, `-p`, `p^k`, `-p^k`.
pub fn rational_param(p: Prime) -> impl Fn(&str) -> Result<Rational, Error> {
    move |s: &str| {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let value = if body == "p" {
            p.as_rational()
        } else if let Some(k) = body.strip_prefix("p^") {
            let k: i64 = k
                .trim_matches(|c| c == '(' || c == ')')
                .parse()
                .map_err(|_| Error::parse(format!("invalid exponent in `{s}`")))?;
            p.pow(k)
        } else {
            return parse_rational(s);
        };
        Ok(if neg { -value } else { value })
    }
}

/// Parameter reader for symbolic words: a rational or a variable name.
pub fn poly_param(s: &str) -> Result<MultiPoly, Error> {
    let s = s.trim();
    if let Ok(q) = parse_rational(s) {
        return Ok(MultiPoly::constant(q));
    }
    let (neg, name) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::parse(format!("invalid parameter `{s}`")));
    }
    let v = MultiPoly::var(name);
    Ok(if neg { -v } else { v })
}

pub fn parse_word(s: &str, p: Prime) -> Result<AutWord<Rational>, Error> {
    let param = rational_param(p);
    parse_word_with(s, &param)
}
