use super::{Rational, Ring};
use crate::error::Error;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

fn registry() -> &'static RwLock<Vec<String>> {
    static VARS: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    VARS.get_or_init(|| RwLock::new(Vec::new()))
}

fn intern(name: &str) -> u32 {
    if let Some(i) = registry().read().unwrap().iter().position(|v| v == name) {
        return i as u32;
    }
    let mut vars = registry().write().unwrap();
    if let Some(i) = vars.iter().position(|v| v == name) {
        return i as u32;
    }
    vars.push(name.to_string());
    (vars.len() - 1) as u32
}

fn var_name(id: u32) -> String {
    registry().read().unwrap()[id as usize].clone()
}

/// A monomial as `(variable, exponent)` pairs sorted by variable id, with no
/// zero exponents. Negative exponents are allowed, so monomials are units.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
struct Monomial(Vec<(u32, i32)>);

impl Monomial {
    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }
}

/// A Laurent polynomial in named variables with exact rational coefficients.
///
/// Terms are kept in a sorted map without zero coefficients, so two
/// polynomials are equal exactly when their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![(intern(name), 1)]), <Rational as Ring>::one());
        MultiPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::default(), c);
        }
        MultiPoly { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Variable names that occur, sorted alphabetically.
    pub fn variables(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| var_name(v)))
            .collect();
        names.sort();
        names.dedup();
        names
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(<Rational as Ring>::zero()),
            1 => self.terms.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = MultiPoly::one();
        for _ in 0..k {
            out = out * self;
        }
        out
    }

    /// Substitutes every variable; fails if one is left unassigned.
    pub fn eval(&self, assignment: &HashMap<String, Rational>) -> Result<Rational, Error> {
        let mut total = <Rational as Ring>::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in &m.0 {
                let name = var_name(v);
                let x = assignment
                    .get(&name)
                    .ok_or_else(|| Error::Domain(format!("no value assigned to `{name}`")))?;
                if e < 0 && x.is_zero() {
                    return Err(Error::Domain(format!("`{name}` = 0 in a negative power")));
                }
                term *= num_traits::pow::Pow::pow(x, e);
            }
            total += term;
        }
        Ok(total)
    }

    fn insert(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl Add<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: &MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            MultiPoly::insert(&mut self.terms, m.clone(), c.clone());
        }
        self
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: MultiPoly) -> MultiPoly {
        if self.terms.len() < rhs.terms.len() {
            rhs + &self
        } else {
            self + &rhs
        }
    }
}

impl Sub<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;

    fn sub(mut self, rhs: &MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            MultiPoly::insert(&mut self.terms, m.clone(), -c.clone());
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self - &rhs
    }
}

impl Mul<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                MultiPoly::insert(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { terms }
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }

    fn one() -> Self {
        MultiPoly::constant(<Rational as Ring>::one())
    }

    fn from_rational(q: &Rational) -> Self {
        MultiPoly::constant(q.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Only single terms are invertible.
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(m.inverse(), c.recip());
        Some(MultiPoly { terms })
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut rendered: Vec<(Vec<(String, i32)>, &Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut vars: Vec<(String, i32)> =
                    m.0.iter().map(|&(v, e)| (var_name(v), e)).collect();
                vars.sort();
                (vars, c)
            })
            .collect();
        rendered.sort_by(|a, b| {
            let deg = |v: &Vec<(String, i32)>| -v.iter().map(|x| x.1).sum::<i32>();
            let lex = |v: &Vec<(String, i32)>| -> Vec<(String, i32)> {
                v.iter().map(|(n, e)| (n.clone(), -e)).collect()
            };
            deg(&a.0)
                .cmp(&deg(&b.0))
                .then_with(|| lex(&a.0).cmp(&lex(&b.0)))
        });
        for (k, (vars, c)) in rendered.iter().enumerate() {
            let negative = **c < <Rational as Ring>::zero();
            let mag = if negative {
                -(*c).clone()
            } else {
                (*c).clone()
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || vars.is_empty() {
                factors.push(mag.to_string());
            }
            for (name, e) in vars {
                if *e == 1 {
                    factors.push(name.clone());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
