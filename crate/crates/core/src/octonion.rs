//! Split octonions as Zorn vector matrices over an exact coefficient ring.
//!
//! An octonion is a 2×2 array `[[a, v], [w, d]]` with scalar diagonal and
//! 3-vector off-diagonal entries. Coordinates are always listed in the order
//! `(a, v1, v2, v3, w1, w2, w3, d)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::arith::{parse_rational, rat, Rational, Ring};
use crate::error::Error;

/// One of the three coordinate axes used to split the octonions into a
/// quaternion subalgebra plus its orthogonal complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];

    pub fn index(self) -> usize {
        match self {
            Axis::I => 0,
            Axis::J => 1,
            Axis::K => 2,
        }
    }

    /// Vector indices `(p, q, r)`: the axis itself and the next two in cyclic order.
    fn cycle(self) -> (usize, usize, usize) {
        let p = self.index();
        (p, (p + 1) % 3, (p + 2) % 3)
    }

    /// The splitting element `l_u`: `J` for `i`, `K` for `j`, `I` for `k`.
    pub fn splitting<C: Ring>(self) -> Octonion<C> {
        let (_, q, _) = self.cycle();
        let mut x = Octonion::zero();
        x.v[q] = C::one();
        x.w[q] = C::one();
        x
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::I => "i",
            Axis::J => "j",
            Axis::K => "k",
        })
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "i" => Ok(Axis::I),
            "j" => Ok(Axis::J),
            "k" => Ok(Axis::K),
            _ => Err(Error::parse(format!("unknown axis `{s}`"))),
        }
    }
}

/// Index of a standard basis element `b_{±1}, …, b_{±4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisIndex(i8);

impl BasisIndex {
    pub const ALL: [BasisIndex; 8] = [
        BasisIndex(1),
        BasisIndex(2),
        BasisIndex(3),
        BasisIndex(4),
        BasisIndex(-1),
        BasisIndex(-2),
        BasisIndex(-3),
        BasisIndex(-4),
    ];

    pub fn new(i: i8) -> Result<Self, Error> {
        if i != 0 && (-4..=4).contains(&i) {
            Ok(BasisIndex(i))
        } else {
            Err(Error::domain(format!("no basis element b{i}")))
        }
    }

    pub fn get(self) -> i8 {
        self.0
    }

    /// Position in the coordinate order `(a, v1, v2, v3, w1, w2, w3, d)`.
    pub fn coord(self) -> usize {
        match self.0 {
            4 => 0,
            -4 => 7,
            j if j > 0 => j as usize,
            j => 3 + (-j) as usize,
        }
    }

    pub fn from_coord(c: usize) -> BasisIndex {
        match c {
            0 => BasisIndex(4),
            7 => BasisIndex(-4),
            1..=3 => BasisIndex(c as i8),
            4..=6 => BasisIndex(-((c - 3) as i8)),
            _ => panic!("coordinate index {c} out of range"),
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.0)
    }
}

/// A 2×2 matrix over `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<C> {
    pub m: [[C; 2]; 2],
}

impl<C: Ring> Mat2<C> {
    pub fn new(a: C, b: C, c: C, d: C) -> Self {
        Mat2 {
            m: [[a, b], [c, d]],
        }
    }

    pub fn zero() -> Self {
        Mat2::new(C::zero(), C::zero(), C::zero(), C::zero())
    }

    pub fn identity() -> Self {
        Mat2::new(C::one(), C::zero(), C::zero(), C::one())
    }

    /// `e⁺(s) = [[1, s], [0, 1]]`.
    pub fn e_plus(s: C) -> Self {
        Mat2::new(C::one(), s, C::zero(), C::one())
    }

    /// `e⁻(s) = [[1, 0], [s, 1]]`.
    pub fn e_minus(s: C) -> Self {
        Mat2::new(C::one(), C::zero(), s, C::one())
    }

    pub fn det(&self) -> C {
        self.m[0][0].clone() * &self.m[1][1] - self.m[0][1].clone() * &self.m[1][0]
    }

    pub fn trace(&self) -> C {
        self.m[0][0].clone() + &self.m[1][1]
    }

    /// The adjugate; equals the inverse when the determinant is 1.
    pub fn adjugate(&self) -> Self {
        Mat2::new(
            self.m[1][1].clone(),
            -self.m[0][1].clone(),
            -self.m[1][0].clone(),
            self.m[0][0].clone(),
        )
    }

    pub fn mul(&self, o: &Mat2<C>) -> Self {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * &o.m[0][j] + self.m[i][1].clone() * &o.m[1][j]
        };
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add(&self, o: &Mat2<C>) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].clone() + &o.m[i][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn sub(&self, o: &Mat2<C>) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].clone() - &o.m[i][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, c: &C) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].clone() * c;
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// The commutator `self·o − o·self`.
    pub fn bracket(&self, o: &Mat2<C>) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Ring::is_zero)
    }
}

fn dot<C: Ring>(x: &[C; 3], y: &[C; 3]) -> C {
    x[0].clone() * &y[0] + x[1].clone() * &y[1] + x[2].clone() * &y[2]
}

fn cross<C: Ring>(x: &[C; 3], y: &[C; 3]) -> [C; 3] {
    [
        x[1].clone() * &y[2] - x[2].clone() * &y[1],
        x[2].clone() * &y[0] - x[0].clone() * &y[2],
        x[0].clone() * &y[1] - x[1].clone() * &y[0],
    ]
}

/// A split octonion `[[a, v], [w, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<C> {
    pub a: C,
    pub v: [C; 3],
    pub w: [C; 3],
    pub d: C,
}

impl<C: Ring> Octonion<C> {
    pub fn new(a: C, v: [C; 3], w: [C; 3], d: C) -> Self {
        Octonion { a, v, w, d }
    }

    pub fn from_coords(c: [C; 8]) -> Self {
        let [a, v1, v2, v3, w1, w2, w3, d] = c;
        Octonion::new(a, [v1, v2, v3], [w1, w2, w3], d)
    }

    pub fn coords(&self) -> [C; 8] {
        [
            self.a.clone(),
            self.v[0].clone(),
            self.v[1].clone(),
            self.v[2].clone(),
            self.w[0].clone(),
            self.w[1].clone(),
            self.w[2].clone(),
            self.d.clone(),
        ]
    }

    pub fn coord(&self, i: usize) -> &C {
        match i {
            0 => &self.a,
            1..=3 => &self.v[i - 1],
            4..=6 => &self.w[i - 4],
            7 => &self.d,
            _ => panic!("coordinate index {i} out of range"),
        }
    }

    pub fn zero() -> Self {
        Octonion::new(
            C::zero(),
            [C::zero(), C::zero(), C::zero()],
            [C::zero(), C::zero(), C::zero()],
            C::zero(),
        )
    }

    pub fn one() -> Self {
        let mut x = Octonion::zero();
        x.a = C::one();
        x.d = C::one();
        x
    }

    pub fn basis(b: BasisIndex) -> Self {
        let mut c: [C; 8] = std::array::from_fn(|_| C::zero());
        c[b.coord()] = C::one();
        Octonion::from_coords(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(Ring::is_zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Octonion::from_coords(self.coords().map(|x| x * c))
    }

    /// `N(x) = ad − v·w`.
    pub fn norm(&self) -> C {
        self.a.clone() * &self.d - dot(&self.v, &self.w)
    }

    /// `T(x) = a + d`.
    pub fn trace(&self) -> C {
        self.a.clone() + &self.d
    }

    /// The involution `[[a, v], [w, d]] ↦ [[d, −v], [−w, a]]`.
    pub fn conj(&self) -> Self {
        Octonion::new(
            self.d.clone(),
            self.v.clone().map(|x| -x),
            self.w.clone().map(|x| -x),
            self.a.clone(),
        )
    }

    /// The polarization `B(x, y) = ½[N(x + y) − N(x) − N(y)]`.
    pub fn bilin(&self, y: &Octonion<C>) -> C {
        let half = C::from_rational(&rat(1, 2));
        ((self + y).norm() - self.norm() - y.norm()) * &half
    }

    /// Splits `x = η_u(a) + η_u(b)·l_u` and returns `(a, b)`.
    pub fn decompose(&self, u: Axis) -> (Mat2<C>, Mat2<C>) {
        let (p, q, r) = u.cycle();
        let a = Mat2::new(
            self.a.clone(),
            self.v[p].clone(),
            self.w[p].clone(),
            self.d.clone(),
        );
        let b = Mat2::new(
            self.v[q].clone(),
            self.w[r].clone(),
            -self.v[r].clone(),
            self.w[q].clone(),
        );
        (a, b)
    }

    /// Inverse of [`Octonion::decompose`].
    pub fn recompose(u: Axis, a: &Mat2<C>, b: &Mat2<C>) -> Self {
        let (p, q, r) = u.cycle();
        let mut x = Octonion::zero();
        x.a = a.m[0][0].clone();
        x.v[p] = a.m[0][1].clone();
        x.w[p] = a.m[1][0].clone();
        x.d = a.m[1][1].clone();
        x.v[q] = b.m[0][0].clone();
        x.w[r] = b.m[0][1].clone();
        x.v[r] = -b.m[1][0].clone();
        x.w[q] = b.m[1][1].clone();
        x
    }

    /// The embedding `η_u` of 2×2 matrices along the unit vector of axis `u`.
    pub fn embed_eta(u: Axis, m: &Mat2<C>) -> Self {
        let p = u.index();
        let mut x = Octonion::zero();
        x.a = m.m[0][0].clone();
        x.v[p] = m.m[0][1].clone();
        x.w[p] = m.m[1][0].clone();
        x.d = m.m[1][1].clone();
        x
    }
}

impl<C: Ring> Mul for &Octonion<C> {
    type Output = Octonion<C>;

    fn mul(self, y: &Octonion<C>) -> Octonion<C> {
        let x = self;
        let a = x.a.clone() * &y.a + dot(&x.v, &y.w);
        let wxw = cross(&x.w, &y.w);
        let vxv = cross(&x.v, &y.v);
        let v =
            std::array::from_fn(|i| x.a.clone() * &y.v[i] + y.d.clone() * &x.v[i] - wxw[i].clone());
        let w =
            std::array::from_fn(|i| y.a.clone() * &x.w[i] + x.d.clone() * &y.w[i] + vxv[i].clone());
        let d = dot(&x.w, &y.v) + x.d.clone() * &y.d;
        Octonion::new(a, v, w, d)
    }
}

impl<C: Ring> Add for &Octonion<C> {
    type Output = Octonion<C>;

    fn add(self, y: &Octonion<C>) -> Octonion<C> {
        let (x, y) = (self.coords(), y.coords());
        Octonion::from_coords(std::array::from_fn(|i| x[i].clone() + &y[i]))
    }
}

impl<C: Ring> Sub for &Octonion<C> {
    type Output = Octonion<C>;

    fn sub(self, y: &Octonion<C>) -> Octonion<C> {
        let (x, y) = (self.coords(), y.coords());
        Octonion::from_coords(std::array::from_fn(|i| x[i].clone() - &y[i]))
    }
}

impl<C: Ring> Neg for &Octonion<C> {
    type Output = Octonion<C>;

    fn neg(self) -> Octonion<C> {
        Octonion::from_coords(self.coords().map(|x| -x))
    }
}

impl<C: Ring> fmt::Display for Octonion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses eight comma-separated rationals in coordinate order.
pub fn parse_octonion(s: &str) -> Result<Octonion<Rational>, Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 8 {
        return Err(Error::parse(format!(
            "expected 8 coordinates, found {}",
            parts.len()
        )));
    }
    let mut coords = Vec::with_capacity(8);
    for p in parts {
        coords.push(parse_rational(p)?);
    }
    let coords: [Rational; 8] = coords.try_into().unwrap();
    Ok(Octonion::from_coords(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn oct(c: [i64; 8]) -> Octonion<Rational> {
        Octonion::from_coords(c.map(int))
    }

    fn b(i: i8) -> Octonion<Rational> {
        Octonion::basis(BasisIndex::new(i).unwrap())
    }

    #[test]
    fn unit_and_basis_products() {
        let x = oct([3, -1, 4, 1, -5, 9, 2, -6]);
        assert_eq!(&Octonion::one() * &x, x);
        assert_eq!(&x * &Octonion::one(), x);
        assert_eq!(&b(1) * &b(-1), b(4));
        assert_eq!(&b(-1) * &b(1), b(-4));
    }

    #[test]
    fn norm_trace_of_one() {
        let one = Octonion::<Rational>::one();
        assert_eq!(one.norm(), int(1));
        assert_eq!(one.trace(), int(2));
        assert_eq!(b(1).bilin(&b(-1)), rat(-1, 2));
    }

    #[test]
    fn decomposition_on_axis_i() {
        let x = oct([1, 2, 3, 4, 5, 6, 7, 8]);
        let (a, bm) = x.decompose(Axis::I);
        assert_eq!(a, Mat2::new(int(1), int(2), int(5), int(8)));
        assert_eq!(bm, Mat2::new(int(3), int(7), int(-4), int(6)));
        let (a, bm) = Octonion::<Rational>::one().decompose(Axis::K);
        assert_eq!(a, Mat2::identity());
        assert!(bm.is_zero());
    }

    #[test]
    fn splitting_elements() {
        let swap = Mat2::new(int(0), int(1), int(1), int(0));
        // η_i places the off-diagonal entries along the unit vector i, giving I = l_k.
        assert_eq!(
            Octonion::embed_eta(Axis::I, &swap),
            Axis::K.splitting::<Rational>()
        );
        assert_eq!(
            Octonion::embed_eta(Axis::J, &swap),
            Axis::I.splitting::<Rational>()
        );
        assert_eq!(
            Octonion::embed_eta(Axis::I, &Mat2::identity()),
            Octonion::<Rational>::one()
        );
        for u in Axis::ALL {
            let l: Octonion<Rational> = u.splitting();
            assert_eq!(&l * &l, Octonion::one());
        }
    }

    #[test]
    fn parse_round_trip() {
        let x = parse_octonion("1, -2/3,0,0,5,0,0,7").unwrap();
        assert_eq!(x.to_string(), "1,-2/3,0,0,5,0,0,7");
        assert!(parse_octonion("1,2").is_err());
    }

    #[test]
    fn basis_coordinates() {
        for c in 0..8 {
            assert_eq!(BasisIndex::from_coord(c).coord(), c);
        }
        assert_eq!(BasisIndex::new(-3).unwrap().coord(), 6);
        assert!(BasisIndex::new(0).is_err());
    }
}
