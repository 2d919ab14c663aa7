//! Holomorphic vector fields on `P^n` induced by linear endomorphisms,
//! their zeros and Poincaré-Hopf indices, tangency to divisors, and GSV
//! index totals.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chow::{curve_chern_integral, divisor_chern_integral};
use crate::error::{Error, Result};
use crate::gb::{ideal_membership, rational_roots, Matrix, MonOrder};
use crate::milnor::{coordinate_chart_for, local_algebra_dim, Chart};
use crate::poly::{fmt_point, fmt_rat, normalize_projective, HomogPoly, Monomial, Poly, Rat, Vars};

/// The field `v_A` on `P^n`, `x' = A x`, for an `(n+1) x (n+1)` matrix.
/// `A` and `A + c I` induce the same field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFieldPn {
    vars: Vars,
    matrix: Matrix,
    trace_free: Matrix,
}

impl VectorFieldPn {
    pub fn new(matrix: Matrix, vars: &Vars) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                left: matrix.rows(),
                right: matrix.cols(),
            });
        }
        if matrix.rows() != vars.len() {
            return Err(Error::DimensionMismatch {
                left: vars.len(),
                right: matrix.rows(),
            });
        }
        if matrix.rows() < 2 {
            return Err(Error::InvalidInput("vector fields need n >= 1".into()));
        }
        let size = Rat::from_integer(BigInt::from(matrix.rows()));
        let trace_free = matrix.shift(&(matrix.trace() / size));
        Ok(VectorFieldPn {
            vars: vars.clone(),
            matrix,
            trace_free,
        })
    }

    /// Field on `P^n` with homogeneous coordinates `x0, ..., xn`.
    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        let vars = Vars::numbered("x", matrix.rows());
        VectorFieldPn::new(matrix, &vars)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// The matrix as given.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `A - tr(A)/(n+1) I`, the normalized representative.
    pub fn trace_free(&self) -> &Matrix {
        &self.trace_free
    }

    pub fn is_scalar(&self) -> bool {
        self.trace_free.is_zero()
    }

    /// Components `(A x)_i` of the homogeneous lift.
    pub fn homogeneous_components(&self) -> Vec<Poly> {
        let n = self.vars.len();
        (0..n)
            .map(|i| {
                Poly::from_terms(
                    &self.vars,
                    self.matrix
                        .row(i)
                        .iter()
                        .enumerate()
                        .map(|(j, c)| (Monomial::var(n, j), c.clone())),
                )
            })
            .collect()
    }

    /// `v(F) = sum_i (A x)_i dF/dx_i`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        self.vars.check(f.vars())?;
        let mut out = Poly::zero(&self.vars);
        for (c, d) in self.homogeneous_components().iter().zip(f.gradient()) {
            out = &out + &(c * &d);
        }
        Ok(out)
    }

    /// Components of the field in the affine chart `x_k = 1`:
    /// `y_i' = (A y)_i - y_i (A y)_k` with `y_k = 1`.
    pub fn chart_components(&self, k: usize) -> Result<Vec<Poly>> {
        let affine = self.vars.without(k)?;
        let lifted: Vec<Poly> = self
            .homogeneous_components()
            .iter()
            .map(|c| c.dehomogenize_at(k))
            .collect::<Result<_>>()?;
        let n = self.vars.len();
        let mut out = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != k) {
            let yi = Poly::var(&affine, if i < k { i } else { i - 1 });
            out.push(&lifted[i] - &(&yi * &lifted[k]));
        }
        Ok(out)
    }

    /// Whether the projective point is fixed by the field: `A p` is a
    /// multiple of `p`.
    pub fn vanishes_at(&self, p: &[Rat]) -> Result<bool> {
        let ap = self.matrix.mul_vec(p)?;
        Ok(Matrix::from_rows(vec![ap, p.to_vec()])?.rank() <= 1)
    }
}

/// An isolated zero of a field with its eigenvalue and index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldZero {
    /// Normalized so the first nonzero coordinate is one.
    pub point: Vec<Rat>,
    pub eigenvalue: Rat,
    /// Algebraic multiplicity of the eigenvalue.
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSet {
    pub zeros: Vec<FieldZero>,
    /// True when every eigenvalue is rational, so `zeros` is the full zero set.
    pub complete: bool,
}

/// Zeros of `v_A`: the eigenlines of `A`. An eigenvalue with a
/// two-dimensional eigenspace gives a whole line of zeros and is rejected.
pub fn zeros_of_field(v: &VectorFieldPn) -> Result<ZeroSet> {
    if v.is_scalar() {
        return Err(Error::DegenerateField("scalar matrix induces the zero field".into()));
    }
    let a = v.trace_free();
    let cp = a.char_poly()?;
    let mut zeros = Vec::new();
    let mut found = 0;
    for (lambda, mult) in rational_roots(&cp) {
        let kernel = a.shift(&lambda).kernel();
        if kernel.len() != 1 {
            return Err(Error::DegenerateField(format!(
                "eigenvalue {} has a {}-dimensional eigenspace",
                fmt_rat(&lambda),
                kernel.len()
            )));
        }
        found += mult;
        let trace_shift = v.matrix().trace() / Rat::from_integer(BigInt::from(v.vars.len()));
        zeros.push(FieldZero {
            point: normalize_projective(&kernel[0])?,
            eigenvalue: lambda + trace_shift,
            multiplicity: mult,
        });
    }
    zeros.sort_by(|a, b| b.point.cmp(&a.point));
    Ok(ZeroSet {
        zeros,
        complete: found == v.vars.len(),
    })
}

/// Poincaré-Hopf index of an isolated zero: the local intersection
/// multiplicity of the chart components.
pub fn ph_index_at(v: &VectorFieldPn, p: &[Rat]) -> Result<usize> {
    if p.len() != v.vars.len() {
        return Err(Error::DimensionMismatch {
            left: v.vars.len(),
            right: p.len(),
        });
    }
    let p = normalize_projective(p)?;
    if !v.vanishes_at(&p)? {
        return Err(Error::NotAZero(fmt_point(&p)));
    }
    let k = coordinate_chart_for(&p)?;
    let local = Chart::Coordinate(k)
        .affine_point(&p)?
        .expect("pivot coordinate is nonzero");
    local_algebra_dim(&v.chart_components(k)?, &local)
}

/// Index of an isolated zero of an affine field given by its components.
pub fn ph_index_affine(components: &[Poly], p: &[Rat]) -> Result<usize> {
    if components.iter().any(|c| !c.evaluate(p).is_zero()) {
        return Err(Error::NotAZero(fmt_point(p)));
    }
    local_algebra_dim(components, p)
}

/// Whether `v` is tangent to `{F = 0}`: `v(F) in (F)`.
pub fn is_logarithmic(v: &VectorFieldPn, f: &HomogPoly) -> Result<bool> {
    let vf = v.apply(f.poly())?;
    ideal_membership(&vf, &[f.poly().clone()], MonOrder::GrevLex)
}

fn require_logarithmic(v: &VectorFieldPn, f: &HomogPoly) -> Result<()> {
    if is_logarithmic(v, f)? {
        Ok(())
    } else {
        Err(Error::NotLogarithmic(f.to_string()))
    }
}

/// Total GSV index of a logarithmic field along a hypersurface:
/// `int_D c_{n-1}(TX - [D])`.
pub fn gsv_total_divisor(v: &VectorFieldPn, f: &HomogPoly) -> Result<BigInt> {
    require_logarithmic(v, f)?;
    divisor_chern_integral(v.dim(), f.degree())
}

/// Total GSV index along `C = {F1 = F2 = 0}`:
/// `int_C c_{n-2}(TX - [D1] (+) [D2])`.
pub fn gsv_total_curve(v: &VectorFieldPn, f1: &HomogPoly, f2: &HomogPoly) -> Result<BigInt> {
    require_logarithmic(v, f1)?;
    require_logarithmic(v, f2)?;
    curve_chern_integral(v.dim(), f1.degree(), f2.degree())
}

/// Checks that `p` is a non-degenerate zero of `v` on the smooth part of
/// `D` and returns its index (always one).
fn smooth_zero_index(v: &VectorFieldPn, f: &HomogPoly, p: &[Rat]) -> Result<usize> {
    let p = normalize_projective(p)?;
    if !v.vanishes_at(&p)? {
        return Err(Error::NotAZero(fmt_point(&p)));
    }
    if !f.poly().evaluate(&p).is_zero() {
        return Err(Error::NotOnDivisor(fmt_point(&p)));
    }
    if f.poly().gradient().iter().all(|g| g.evaluate(&p).is_zero()) {
        return Err(Error::PointOnSingularLocus(fmt_point(&p)));
    }
    let ph = ph_index_at(v, &p)?;
    if ph != 1 {
        return Err(Error::DegenerateZero(fmt_point(&p)));
    }
    Ok(ph)
}

/// `gsv_total - sum PH` over listed non-degenerate zeros on `D_reg`: the
/// GSV index carried by the singular points of `D`.
pub fn gsv_residual_at_singular(v: &VectorFieldPn, f: &HomogPoly, smooth_zeros: &[Vec<Rat>]) -> Result<BigInt> {
    let total = gsv_total_divisor(v, f)?;
    let mut sum = 0usize;
    for p in smooth_zeros {
        sum += smooth_zero_index(v, f, p)?;
    }
    Ok(total - BigInt::from(sum))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedZero {
    pub point: Vec<Rat>,
    pub ph: usize,
}

/// Per-divisor GSV data of a logarithmic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorIndices {
    pub name: String,
    pub gsv_total: BigInt,
    /// Zeros of `v` on the smooth part of the divisor.
    pub smooth_zeros: Vec<Vec<Rat>>,
    /// Zeros of `v` at singular points of the divisor.
    pub singular_zeros: Vec<Vec<Rat>>,
    /// `gsv_total - sum PH` over `smooth_zeros`; absent when one of them is
    /// degenerate.
    pub residual_at_singular: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub zeros: Vec<IndexedZero>,
    pub ph_total: usize,
    pub all_nondegenerate: bool,
    pub divisors: Vec<DivisorIndices>,
}

/// Zeros, indices and GSV totals of `v` along each named divisor.
pub fn index_report(v: &VectorFieldPn, divisors: &[(String, HomogPoly)]) -> Result<IndexReport> {
    let set = zeros_of_field(v)?;
    if !set.complete {
        let found = set.zeros.iter().map(|z| z.multiplicity).sum();
        return Err(Error::IncompleteZeros {
            found,
            expected: v.vars.len(),
        });
    }
    let mut zeros = Vec::with_capacity(set.zeros.len());
    for z in &set.zeros {
        zeros.push(IndexedZero {
            point: z.point.clone(),
            ph: ph_index_at(v, &z.point)?,
        });
    }
    let ph_total: usize = zeros.iter().map(|z| z.ph).sum();
    if ph_total != v.vars.len() {
        return Err(Error::RouteDisagreement {
            quantity: "Poincaré-Hopf total".into(),
            left: ph_total.to_string(),
            right: format!("chi(P^{}) = {}", v.dim(), v.vars.len()),
        });
    }
    let mut out = Vec::with_capacity(divisors.len());
    for (name, f) in divisors {
        let gsv_total = gsv_total_divisor(v, f)?;
        let mut smooth_zeros = Vec::new();
        let mut singular_zeros = Vec::new();
        let mut smooth_ph = 0usize;
        let mut degenerate = false;
        for z in &zeros {
            if !f.poly().evaluate(&z.point).is_zero() {
                continue;
            }
            if f.poly().gradient().iter().all(|g| g.evaluate(&z.point).is_zero()) {
                singular_zeros.push(z.point.clone());
            } else {
                smooth_ph += z.ph;
                degenerate |= z.ph != 1;
                smooth_zeros.push(z.point.clone());
            }
        }
        let residual_at_singular = (!degenerate).then(|| &gsv_total - BigInt::from(smooth_ph));
        out.push(DivisorIndices {
            name: name.clone(),
            gsv_total,
            smooth_zeros,
            singular_zeros,
            residual_at_singular,
        });
    }
    Ok(IndexReport {
        all_nondegenerate: zeros.iter().all(|z| z.ph == 1),
        zeros,
        ph_total,
        divisors: out,
    })
}

/// `v(F) / F` when `v` is logarithmic along `F`; a constant, since `v(F)`
/// has the degree of `F`.
pub fn logarithmic_cofactor(v: &VectorFieldPn, f: &HomogPoly) -> Result<Option<Rat>> {
    let vf = v.apply(f.poly())?;
    let (m, c) = f.poly().terms().next_back().expect("nonzero");
    let ratio = vf.coeff(m) / c;
    let candidate = f.poly().scale(&ratio);
    Ok((candidate == vf).then_some(ratio))
}

/// Eigenvalue conditions are easier to state on diagonal matrices.
pub fn diagonal_field(entries: &[Rat]) -> Result<VectorFieldPn> {
    VectorFieldPn::from_matrix(Matrix::diagonal(entries))
}
