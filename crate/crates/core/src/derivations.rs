//! The derivation algebra of the split octonions as exact 8×8 matrices, the
//! root vectors `E_φ`, and the Chevalley-basis axioms.
//!
//! Matrices act on coordinate columns: column `c` holds `D(b_c)`.

use serde::Serialize;

use crate::apartment::{coroot_of, pairing, Root};
use crate::arith::{rat, to_i64, MultiPoly, Rational, Ring};
use crate::automorphisms::{root_generator, AutWord, Family, RootLabel, Sign};
use crate::error::Error;
use crate::matrix::{nullspace, solve, Matrix};
use crate::octonion::{BasisIndex, Mat2, Octonion};

pub type EndoMatrix = Matrix<Rational>;

/// The expected dimension of the derivation algebra.
pub const DIMENSION: usize = 14;

pub fn apply_endo<C: Ring>(m: &Matrix<C>, x: &Octonion<C>) -> Octonion<C> {
    let y = m.mul_vec(&x.coords());
    Octonion::from_coords(std::array::from_fn(|k| y[k].clone()))
}

fn basis(c: usize) -> Octonion<Rational> {
    Octonion::basis(BasisIndex::from_coord(c))
}

fn endo_from_fn(f: impl Fn(&Octonion<Rational>) -> Octonion<Rational>) -> EndoMatrix {
    let columns: Vec<Vec<Rational>> = (0..8).map(|c| f(&basis(c)).coords().to_vec()).collect();
    Matrix::from_columns(&columns)
}

/// The root vector `E_φ`, the derivative at `t = 0` of the generator `φ(t)`.
pub fn e_root(label: RootLabel) -> EndoMatrix {
    let one = Rational::one();
    let zero = Rational::zero();
    let n = match label.sign {
        Sign::Plus => Mat2::new(zero.clone(), one, zero.clone(), zero),
        Sign::Minus => Mat2::new(zero.clone(), zero.clone(), one, zero),
    };
    let u = label.axis;
    endo_from_fn(|x| {
        let (a, b) = x.decompose(u);
        match label.family {
            Family::Gamma => Octonion::recompose(u, &Mat2::zero(), &n.mul(&b)),
            Family::Delta => {
                let minus_n = n.scale(&-Rational::one());
                Octonion::recompose(u, &n.bracket(&a), &b.mul(&minus_n))
            }
        }
    })
}

/// Residual of the derivation law on all 64 basis pairs, flattened.
fn derivation_residual(m: &EndoMatrix) -> Vec<Rational> {
    let images: Vec<Octonion<Rational>> = (0..8).map(|c| apply_endo(m, &basis(c))).collect();
    let mut out = Vec::with_capacity(512);
    for i in 0..8 {
        for j in 0..8 {
            let (x, y) = (basis(i), basis(j));
            let lhs = apply_endo(m, &(&x * &y));
            let rhs = &(&x * &images[j]) + &(&images[i] * &y);
            out.extend((&lhs - &rhs).coords());
        }
    }
    out
}

/// Whether `D(xy) = x D(y) + D(x) y` holds on every pair of basis vectors.
pub fn is_derivation(m: &EndoMatrix) -> bool {
    derivation_residual(m).iter().all(Ring::is_zero)
}

/// A basis of the derivation algebra together with coordinate solves.
#[derive(Clone, Debug)]
pub struct DerivationBasis {
    pub basis: Vec<EndoMatrix>,
    flattened: Matrix<Rational>,
}

impl DerivationBasis {
    pub fn new(basis: Vec<EndoMatrix>) -> Self {
        let columns: Vec<Vec<Rational>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        DerivationBasis {
            flattened: Matrix::from_columns(&columns),
            basis,
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `m` in this basis, or `None` if `m` is outside the span.
    pub fn coordinates(&self, m: &EndoMatrix) -> Option<Vec<Rational>> {
        solve(&self.flattened, m.entries())
    }

    pub fn contains(&self, m: &EndoMatrix) -> bool {
        self.coordinates(m).is_some()
    }

    /// The matrix of `ad D = [D, −]` in this basis.
    pub fn ad_matrix(&self, d: &EndoMatrix) -> Result<Matrix<Rational>, Error> {
        let columns = self
            .basis
            .iter()
            .map(|b| {
                self.coordinates(&d.bracket(b)).ok_or_else(|| {
                    Error::Verification("bracket left the derivation algebra".into())
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(&columns))
    }

    pub fn combine(&self, coeffs: &[Rational]) -> EndoMatrix {
        self.basis
            .iter()
            .zip(coeffs)
            .fold(Matrix::zeros(8, 8), |acc, (b, c)| acc.add(&b.scale(c)))
    }
}

/// Solves the derivation law as a linear system in the 64 matrix entries.
pub fn derivation_nullspace() -> Result<DerivationBasis, Error> {
    let columns: Vec<Vec<Rational>> = (0..64)
        .map(|k| {
            let unit = Matrix::from_fn(8, 8, |r, c| {
                if r * 8 + c == k {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            });
            derivation_residual(&unit)
        })
        .collect();
    let system = Matrix::from_columns(&columns);
    let basis: Vec<EndoMatrix> = nullspace(&system)
        .into_iter()
        .map(|x| Matrix::from_fn(8, 8, |r, c| x[r * 8 + c].clone()))
        .collect();
    if basis.len() != DIMENSION {
        return Err(Error::Verification(format!(
            "derivation algebra has dimension {}, expected {DIMENSION}",
            basis.len()
        )));
    }
    Ok(DerivationBasis::new(basis))
}

/// Smallest `k ≤ limit` with `m^k = 0`.
pub fn nilpotency_index<C: Ring>(m: &Matrix<C>, limit: usize) -> Option<usize> {
    let mut power = m.clone();
    for k in 1..=limit {
        if power.is_zero() {
            return Some(k);
        }
        power = power.mul(m);
    }
    None
}

/// `exp(t·M) = Σ (tM)^k / k!`, for `M` nilpotent of index at most its size.
pub fn exp_nilpotent<C: Ring>(m: &Matrix<C>, t: &C) -> Result<Matrix<C>, Error> {
    let n = m.rows();
    let tm = m.scale(t);
    let mut total = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=n {
        term = term.mul(&tm).scale(&C::from_rational(&rat(1, k as i64)));
        if term.is_zero() {
            return Ok(total);
        }
        total = total.add(&term);
    }
    if term.mul(&tm).is_zero() {
        Ok(total)
    } else {
        Err(Error::domain("exponential needs a nilpotent matrix"))
    }
}

/// Observed outcome of axiom (e) for one pair.
#[derive(Clone, Debug, Serialize)]
pub struct StringBracket {
    pub phi: RootLabel,
    pub psi: RootLabel,
    pub r: u32,
    pub coefficient: Option<i64>,
    pub magnitude_ok: bool,
}

/// Nilpotency data for one root vector.
#[derive(Clone, Debug, Serialize)]
pub struct Nilpotency {
    pub label: RootLabel,
    pub is_derivation: bool,
    pub matrix_index: Option<usize>,
    pub ad_index: Option<usize>,
    pub exp_matches_generator: bool,
}

/// The axiom and nilpotency report for `{H_γ, H_δ, E_φ}`.
#[derive(Clone, Debug, Serialize)]
pub struct ChevalleyReport {
    pub dimension: usize,
    pub spans_algebra: bool,
    /// `[H_γ, H_δ] = 0`.
    pub axiom_a: bool,
    /// Failures of `[H_α, E_φ] = ⟨φ, α∨⟩ E_φ`.
    pub axiom_b_failures: Vec<String>,
    /// Failures of the printed form `[H_α, E_φ] = ⟨α, φ∨⟩ E_φ`.
    pub axiom_b_printed_failures: Vec<String>,
    /// Failures of `[E_φ, E_−φ] = c_δ H_δ + c_γ H_γ` with `φ∨ = c_δ δ∨ + c_γ γ∨`.
    pub axiom_c_failures: Vec<String>,
    /// Failures of the printed form with root coefficients `φ = aγ + bδ`.
    pub axiom_c_printed_failures: Vec<String>,
    pub axiom_d_failures: Vec<String>,
    pub axiom_e: Vec<StringBracket>,
    pub nilpotency: Vec<Nilpotency>,
}

impl ChevalleyReport {
    pub fn axiom_e_ok(&self) -> bool {
        self.axiom_e.iter().all(|e| e.magnitude_ok)
    }

    pub fn axioms_ok(&self) -> bool {
        self.axiom_a
            && self.axiom_b_failures.is_empty()
            && self.axiom_c_failures.is_empty()
            && self.axiom_d_failures.is_empty()
            && self.axiom_e_ok()
    }

    /// Labels with `E_φ² ≠ 0`.
    pub fn square_nonzero(&self) -> Vec<RootLabel> {
        self.nilpotency
            .iter()
            .filter(|n| n.matrix_index != Some(2))
            .map(|n| n.label)
            .collect()
    }

    /// Labels with `ad(E_φ)³ ≠ 0`.
    pub fn ad_cube_nonzero(&self) -> Vec<RootLabel> {
        self.nilpotency
            .iter()
            .filter(|n| n.ad_index.is_none_or(|k| k > 3))
            .map(|n| n.label)
            .collect()
    }
}

/// `H_γ = [E_γ, E_−γ]` and `H_δ = [E_δ, E_−δ]` for the simple roots.
pub fn cartan_elements() -> (EndoMatrix, EndoMatrix) {
    let (g, d) = (RootLabel::gamma(), RootLabel::delta());
    let h_gamma = e_root(g).bracket(&e_root(g.mirror()));
    let h_delta = e_root(d).bracket(&e_root(d.mirror()));
    (h_gamma, h_delta)
}

/// The scalar `c` with `m = c·target`, if one exists.
fn multiple_of(m: &EndoMatrix, target: &EndoMatrix) -> Option<Rational> {
    let k = target.entries().iter().position(|x| !x.is_zero())?;
    let c = &m.entries()[k] / &target.entries()[k];
    (m == &target.scale(&c)).then_some(c)
}

/// The largest `r` with `ψ − rφ` a root.
fn string_depth(phi: Root, psi: Root) -> u32 {
    let mut r = 0;
    while (psi + phi.scale(-(r as i64 + 1))).is_root() {
        r += 1;
    }
    r
}

pub fn chevalley_basis_check() -> Result<ChevalleyReport, Error> {
    let der = derivation_nullspace()?;
    let labels = RootLabel::all();
    let e: Vec<EndoMatrix> = labels.iter().map(|&l| e_root(l)).collect();
    let (h_gamma, h_delta) = cartan_elements();
    let mut members = e.clone();
    members.push(h_gamma.clone());
    members.push(h_delta.clone());
    let spans_algebra = {
        let columns: Vec<Vec<Rational>> = members
            .iter()
            .map(|m| der.coordinates(m).unwrap_or_default())
            .collect();
        columns.iter().all(|c| c.len() == DIMENSION)
            && crate::matrix::rank(&Matrix::from_columns(&columns)) == DIMENSION
    };

    let axiom_a = h_gamma.bracket(&h_delta).is_zero();

    let (gamma, delta) = (RootLabel::gamma().root(), RootLabel::delta().root());
    let (gamma_v, delta_v) = (coroot_of(gamma)?, coroot_of(delta)?);
    let mut axiom_b_failures = Vec::new();
    let mut axiom_b_printed_failures = Vec::new();
    for (k, &l) in labels.iter().enumerate() {
        let phi = l.root();
        let phi_v = coroot_of(phi)?;
        for (name, h, alpha, alpha_v) in [
            ("H_gamma", &h_gamma, gamma, gamma_v),
            ("H_delta", &h_delta, delta, delta_v),
        ] {
            let lhs = h.bracket(&e[k]);
            if lhs != e[k].scale(&Rational::from_i64(pairing(phi, alpha_v))) {
                axiom_b_failures.push(format!("[{name}, E_{l}]"));
            }
            if lhs != e[k].scale(&Rational::from_i64(pairing(alpha, phi_v))) {
                axiom_b_printed_failures.push(format!("[{name}, E_{l}]"));
            }
        }
    }

    let mut axiom_c_failures = Vec::new();
    let mut axiom_c_printed_failures = Vec::new();
    for (k, &l) in labels.iter().enumerate() {
        let phi = l.root();
        let lhs = e[k].bracket(&e_root(l.mirror()));
        let cv = coroot_of(phi)?;
        let by_coroot = h_delta
            .scale(&Rational::from_i64(cv.c_delta))
            .add(&h_gamma.scale(&Rational::from_i64(cv.c_gamma)));
        if lhs != by_coroot {
            axiom_c_failures.push(format!("[E_{l}, E_{}]", l.mirror()));
        }
        let by_root = h_gamma
            .scale(&Rational::from_i64(phi.n))
            .add(&h_delta.scale(&Rational::from_i64(phi.m)));
        if lhs != by_root {
            axiom_c_printed_failures.push(format!("[E_{l}, E_{}]", l.mirror()));
        }
    }

    let mut axiom_d_failures = Vec::new();
    let mut axiom_e = Vec::new();
    for (a, &la) in labels.iter().enumerate() {
        for (b, &lb) in labels.iter().enumerate() {
            let sum = la.root() + lb.root();
            if sum == Root::new(0, 0) {
                continue;
            }
            let bracket = e[a].bracket(&e[b]);
            match RootLabel::from_root(sum) {
                None => {
                    if !bracket.is_zero() {
                        axiom_d_failures.push(format!("[E_{la}, E_{lb}]"));
                    }
                }
                Some(target) => {
                    let r = string_depth(la.root(), lb.root());
                    let coefficient = multiple_of(&bracket, &e_root(target))
                        .filter(|c| c.is_integer())
                        .map(|c| to_i64(c.numer()));
                    let magnitude_ok =
                        coefficient.is_some_and(|c| c.unsigned_abs() == r as u64 + 1);
                    axiom_e.push(StringBracket {
                        phi: la,
                        psi: lb,
                        r,
                        coefficient,
                        magnitude_ok,
                    });
                }
            }
        }
    }

    let t = MultiPoly::var("t");
    let mut nilpotency = Vec::new();
    for (k, &l) in labels.iter().enumerate() {
        let ad = der.ad_matrix(&e[k])?;
        let lifted = e[k].map(|q| MultiPoly::constant(q.clone()));
        let generator = AutWord::single(root_generator(l, t.clone())).to_matrix();
        let exp_matches_generator = exp_nilpotent(&lifted, &t).is_ok_and(|m| m == generator);
        nilpotency.push(Nilpotency {
            label: l,
            is_derivation: is_derivation(&e[k]),
            matrix_index: nilpotency_index(&e[k], 9),
            ad_index: nilpotency_index(&ad, 15),
            exp_matches_generator,
        });
    }

    Ok(ChevalleyReport {
        dimension: der.dimension(),
        spans_algebra,
        axiom_a,
        axiom_b_failures,
        axiom_b_printed_failures,
        axiom_c_failures,
        axiom_c_printed_failures,
        axiom_d_failures,
        axiom_e,
        nilpotency,
    })
}
