//! Milnor numbers of isolated hypersurface and curve singularities.
//!
//! Local values are dimensions of local algebras, computed with Mora's
//! standard basis after moving the point to the origin. Totals over the
//! singular locus are computed without locating any point: on the global
//! algebra `Q[x]/J(f)` multiplication by `f` is invertible on the blocks of
//! critical points off the zero level, so the generalized kernel of that
//! map has dimension `sum_{f(p) = 0} mu_p(f)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gb::{
    groebner, joint_generalized_kernel_dim, mora_standard_basis, mult_matrix, quotient_algebra,
    truncated_standard_basis, BasisResult, Matrix, MonOrder,
};
use crate::poly::{fmt_point, fmt_rat, normalize_projective, rat, HomogPoly, Poly, Rat, Vars};

/// Affine chart of `P^n`: the complement of a coordinate hyperplane, or of
/// the hyperplane `{sum_i c_i x_i = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chart {
    Coordinate(usize),
    Linear(Vec<Rat>),
}

impl Chart {
    fn form(&self, nvars: usize) -> Result<Vec<Rat>> {
        match self {
            Chart::Coordinate(k) => {
                if *k >= nvars {
                    return Err(Error::IndexOutOfRange { index: *k, len: nvars });
                }
                let mut c = vec![Rat::zero(); nvars];
                c[*k] = Rat::one();
                Ok(c)
            }
            Chart::Linear(c) => {
                if c.len() != nvars {
                    return Err(Error::DimensionMismatch {
                        left: nvars,
                        right: c.len(),
                    });
                }
                if c.iter().all(Zero::is_zero) {
                    return Err(Error::InvalidInput("chart form is identically zero".into()));
                }
                Ok(c.clone())
            }
        }
    }

    /// Index of the variable that the chart form replaces.
    pub fn pivot(&self, nvars: usize) -> Result<usize> {
        let c = self.form(nvars)?;
        Ok(c.iter().rposition(|x| !x.is_zero()).expect("nonzero form"))
    }

    /// `x = M y`, where `y` agrees with `x` except that `y_pivot` is the
    /// chart form.
    fn substitution(&self, nvars: usize) -> Result<(usize, Vec<Vec<Rat>>)> {
        let c = self.form(nvars)?;
        let k = self.pivot(nvars)?;
        let mut m = vec![vec![Rat::zero(); nvars]; nvars];
        for (i, row) in m.iter_mut().enumerate() {
            if i != k {
                row[i] = Rat::one();
            }
        }
        for j in 0..nvars {
            m[k][j] = if j == k { c[k].recip() } else { -&c[j] / &c[k] };
        }
        Ok((k, m))
    }

    /// `F` rewritten in chart coordinates, together with the pivot index.
    pub fn transform(&self, f: &HomogPoly) -> Result<(HomogPoly, usize)> {
        let (k, m) = self.substitution(f.vars().len())?;
        Ok((f.linear_change(&m)?, k))
    }

    /// Affine equation of `F` in this chart.
    pub fn dehomogenize(&self, f: &HomogPoly) -> Result<Poly> {
        let (g, k) = self.transform(f)?;
        g.dehomogenize(k)
    }

    /// Affine coordinates of a projective point, or `None` when the point
    /// lies on the hyperplane at infinity.
    pub fn affine_point(&self, p: &[Rat]) -> Result<Option<Vec<Rat>>> {
        let c = self.form(p.len())?;
        let k = self.pivot(p.len())?;
        let l: Rat = c.iter().zip(p).map(|(a, b)| a * b).sum();
        if l.is_zero() {
            return Ok(None);
        }
        Ok(Some(
            p.iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, x)| x / &l)
                .collect(),
        ))
    }

    /// Human-readable chart description, e.g. `x3` or `x0 + 2*x1 + x3`.
    pub fn label(&self, vars: &Vars) -> String {
        match self {
            Chart::Coordinate(k) => vars.names().get(*k).cloned().unwrap_or_else(|| format!("#{k}")),
            Chart::Linear(c) => {
                let poly = Poly::from_terms(
                    vars,
                    c.iter()
                        .enumerate()
                        .map(|(i, a)| (crate::poly::Monomial::var(vars.len(), i), a.clone())),
                );
                poly.to_string()
            }
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chart::Coordinate(k) => write!(f, "coordinate {k}"),
            Chart::Linear(c) => {
                let parts: Vec<String> = c.iter().map(fmt_rat).collect();
                write!(f, "linear [{}]", parts.join(", "))
            }
        }
    }
}

/// Chart with the largest index whose coordinate does not vanish at `p`.
pub fn coordinate_chart_for(p: &[Rat]) -> Result<usize> {
    p.iter()
        .rposition(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidInput("projective point with all coordinates zero".into()))
}

/// Charts tried when none is requested: the last coordinate first, then
/// the others in increasing order.
pub fn default_charts(nvars: usize) -> Vec<Chart> {
    let mut out = vec![Chart::Coordinate(nvars - 1)];
    out.extend((0..nvars - 1).map(Chart::Coordinate));
    out
}

/// Fixed generic-looking form used to tell a bad chart choice apart from a
/// positive-dimensional singular locus.
fn probe_form(nvars: usize) -> Chart {
    const PRIMES: [i64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];
    Chart::Linear(
        (0..nvars)
            .map(|i| rat(PRIMES[i % PRIMES.len()] + (i / PRIMES.len()) as i64))
            .collect(),
    )
}

fn check_point_len(p: &[Rat], vars: &Vars) -> Result<()> {
    if p.len() != vars.len() {
        return Err(Error::DimensionMismatch {
            left: vars.len(),
            right: p.len(),
        });
    }
    Ok(())
}

/// Dimension of the local algebra `O_p / (gens)`; zero when some generator
/// does not vanish at `p`.
///
/// When the global ideal is zero-dimensional of colength `N`, the local
/// colength `mu <= N` is read off truncated standard bases of `I + m^d`:
/// their colengths increase strictly until `m^d` lies in `I O_p`, and stay
/// equal from then on, which happens by `d = mu`. Otherwise the untruncated
/// standard basis decides whether the staircase is finite.
pub fn local_algebra_dim(gens: &[Poly], p: &[Rat]) -> Result<usize> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    check_point_len(p, first.vars())?;
    let moved = gens.iter().map(|g| g.translate(p)).collect::<Result<Vec<_>>>()?;
    let global = groebner(&moved, MonOrder::GrevLex)?;
    if global.is_unit_ideal() {
        return Ok(0);
    }
    if global.has_finite_staircase() {
        let bound = global.staircase()?.len() as u32;
        let mut previous = None;
        for d in 1..=bound + 1 {
            let colength = truncated_standard_basis(&moved, MonOrder::NegDegRevLex, d)?
                .staircase()?
                .len();
            if colength == 0 || previous == Some(colength) {
                return Ok(colength);
            }
            previous = Some(colength);
        }
        return Err(Error::RouteDisagreement {
            quantity: format!("local colength at {}", fmt_point(p)),
            left: format!("still growing at degree {}", bound + 1),
            right: format!("global colength {bound}"),
        });
    }
    let basis = mora_standard_basis(&moved, MonOrder::NegDegRevLex)?;
    if basis.is_unit_ideal() {
        return Ok(0);
    }
    match basis.staircase() {
        Ok(s) => Ok(s.len()),
        Err(Error::NotZeroDimensional) => Err(Error::NonIsolated(fmt_point(p))),
        Err(e) => Err(e),
    }
}

/// Local Milnor number `dim O_p / J(f)` at a singular point of `{f = 0}`.
pub fn local_milnor(f: &Poly, p: &[Rat]) -> Result<usize> {
    check_point_len(p, f.vars())?;
    let grad = f.gradient();
    if !f.evaluate(p).is_zero() || grad.iter().any(|g| !g.evaluate(p).is_zero()) {
        return Err(Error::NotSingular(fmt_point(p)));
    }
    local_algebra_dim(&grad, p)
}

/// Global algebra `Q[x]/I` for an affine ideal; `None` for the unit ideal.
fn finite_algebra(gens: &[Poly]) -> Result<Option<crate::gb::QuotientAlgebra>> {
    let b: BasisResult = groebner(gens, MonOrder::GrevLex)?;
    if b.is_unit_ideal() {
        return Ok(None);
    }
    match quotient_algebra(&b) {
        Ok(a) => Ok(Some(a)),
        Err(Error::NotZeroDimensional) => Err(Error::NonIsolatedCriticalLocus(
            gens.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        )),
        Err(e) => Err(e),
    }
}

/// Dimension of the joint generalized kernel of multiplication by `fs` on
/// `Q[x]/(gens)`: the length of that algebra along the common zero set of
/// the `fs`.
fn zero_level_length(gens: &[Poly], fs: &[&Poly]) -> Result<usize> {
    let Some(alg) = finite_algebra(gens)? else { return Ok(0) };
    let ms = fs
        .iter()
        .map(|f| mult_matrix(&alg, f))
        .collect::<Result<Vec<Matrix>>>()?;
    joint_generalized_kernel_dim(&ms)
}

fn chart_guard(gens: Vec<Poly>, chart: &Chart, vars: &Vars) -> Result<bool> {
    let mut gens = gens;
    let c = chart.form(vars.len())?;
    gens.push(Poly::from_terms(
        vars,
        c.into_iter()
            .enumerate()
            .map(|(i, a)| (crate::poly::Monomial::var(vars.len(), i), a)),
    ));
    Ok(groebner(&gens, MonOrder::GrevLex)?.has_finite_staircase())
}

/// `sum_{p in Sing(D)} mu_p` for `D = {F = 0}`, computed in one affine chart.
pub fn milnor_sum_on_zero_level(f: &HomogPoly, chart: &Chart) -> Result<usize> {
    if !chart_guard(f.poly().gradient(), chart, f.vars())? {
        return Err(Error::SingularitiesAtInfinity {
            chart: chart.label(f.vars()),
        });
    }
    let g = chart.dehomogenize(f)?;
    zero_level_length(&g.gradient(), &[&g])
}

/// Runs `attempt` on the requested chart, or on the default charts in turn.
fn with_chart_policy<T>(
    nvars: usize,
    requested: Option<&Chart>,
    mut attempt: impl FnMut(&Chart) -> Result<T>,
) -> Result<(T, Chart)> {
    if let Some(c) = requested {
        return attempt(c).map(|v| (v, c.clone()));
    }
    let mut last_err = None;
    for c in default_charts(nvars) {
        match attempt(&c) {
            Ok(v) => return Ok((v, c)),
            Err(e @ (Error::SingularitiesAtInfinity { .. } | Error::NonIsolatedCriticalLocus(_))) => {
                last_err = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    match last_err {
        Some(Error::NonIsolatedCriticalLocus(m)) => Err(Error::NonIsolatedCriticalLocus(m)),
        _ => {
            // every coordinate hyperplane meets the singular locus
            match attempt(&probe_form(nvars)) {
                Err(Error::SingularitiesAtInfinity { chart }) => Err(Error::NonIsolatedCriticalLocus(format!(
                    "singular locus meets every tested hyperplane, including {chart}"
                ))),
                _ => Err(Error::NoAffineChart),
            }
        }
    }
}

/// Milnor total with the chart policy: the requested chart only, or the
/// last coordinate chart followed by the remaining coordinate charts.
pub fn milnor_total(f: &HomogPoly, requested: Option<&Chart>) -> Result<(usize, Chart)> {
    with_chart_policy(f.vars().len(), requested, |c| milnor_sum_on_zero_level(f, c))
}

/// A certified singular point of a projective hypersurface or curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPointCert {
    /// Normalized so the first nonzero coordinate is one.
    pub point: Vec<Rat>,
    pub local_milnor: usize,
    /// Coordinate chart used for the local computation.
    pub chart: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorReport {
    /// Total from the global route.
    pub total: usize,
    pub per_point: Vec<SingularPointCert>,
    /// Whether the per-point values add up to `total`.
    pub certified_complete: bool,
    /// Chart used by the global route.
    pub chart: Chart,
}

impl MilnorReport {
    pub fn per_point_total(&self) -> usize {
        self.per_point.iter().map(|c| c.local_milnor).sum()
    }
}

fn normalize_distinct(points: &[Vec<Rat>], nvars: usize) -> Result<Vec<Vec<Rat>>> {
    let mut out: Vec<Vec<Rat>> = Vec::with_capacity(points.len());
    for p in points {
        if p.len() != nvars {
            return Err(Error::DimensionMismatch {
                left: nvars,
                right: p.len(),
            });
        }
        let q = normalize_projective(p)?;
        if out.contains(&q) {
            return Err(Error::InvalidInput(format!("point {} listed twice", fmt_point(&q))));
        }
        out.push(q);
    }
    Ok(out)
}

/// Checks each listed point, computes its local Milnor number, and compares
/// the sum with the global route.
pub fn certify_points(f: &HomogPoly, points: &[Vec<Rat>], requested: Option<&Chart>) -> Result<MilnorReport> {
    let points = normalize_distinct(points, f.vars().len())?;
    let mut per_point = Vec::with_capacity(points.len());
    for p in points {
        if f.poly().gradient().iter().any(|g| !g.evaluate(&p).is_zero()) {
            return Err(Error::NotSingular(fmt_point(&p)));
        }
        let k = coordinate_chart_for(&p)?;
        let chart = Chart::Coordinate(k);
        let local = chart.affine_point(&p)?.expect("pivot coordinate is nonzero");
        let mu = local_milnor(&chart.dehomogenize(f)?, &local)?;
        per_point.push(SingularPointCert {
            point: p,
            local_milnor: mu,
            chart: k,
        });
    }
    let (total, chart) = milnor_total(f, requested)?;
    let sum: usize = per_point.iter().map(|c| c.local_milnor).sum();
    Ok(MilnorReport {
        total,
        per_point,
        certified_complete: sum == total,
        chart,
    })
}

/// 2x2 minors of the Jacobian matrix of `(f1, f2)`.
fn jacobian_minors(f1: &Poly, f2: &Poly) -> Vec<Poly> {
    let g1 = f1.gradient();
    let g2 = f2.gradient();
    let mut out = Vec::new();
    for i in 0..g1.len() {
        for j in i + 1..g1.len() {
            let m = &(&g1[i] * &g2[j]) - &(&g1[j] * &g2[i]);
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

/// Some linear sections through the origin, used to test that `(f1, f2)`
/// cuts out a set of codimension two.
fn section_forms(vars: &Vars, count: usize, seed: i64) -> Vec<Poly> {
    let n = vars.len();
    (0..count)
        .map(|j| {
            Poly::from_terms(
                vars,
                (0..n).map(|i| {
                    let c = (seed + i as i64 + 1).pow(j as u32 + 1) % 97 + 1;
                    (crate::poly::Monomial::var(n, i), rat(c))
                }),
            )
        })
        .collect()
}

fn is_regular_sequence_at(f1: &Poly, f2: &Poly, p: &[Rat]) -> Result<bool> {
    let n = f1.nvars();
    if n < 2 {
        return Ok(false);
    }
    for seed in 0..4 {
        let mut gens = vec![f1.translate(p)?, f2.translate(p)?];
        gens.extend(section_forms(f1.vars(), n - 2, seed * 7));
        let origin = vec![Rat::zero(); n];
        match local_algebra_dim(&gens, &origin) {
            Ok(_) => return Ok(true),
            Err(Error::NonIsolated(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(false)
}

/// One ordering of the Lê-Greuel formula:
/// `mu_p(C) = dim O_p / ((f1) + I_2(Jac)) - mu_p(f1)`.
fn le_greuel(f1: &Poly, f2: &Poly, p: &[Rat]) -> Result<usize> {
    let mu1 = if f1.gradient().iter().any(|g| !g.evaluate(p).is_zero()) {
        0
    } else {
        local_milnor(f1, p)?
    };
    let mut gens = vec![f1.clone()];
    gens.extend(jacobian_minors(f1, f2));
    let total = local_algebra_dim(&gens, p)?;
    total.checked_sub(mu1).ok_or_else(|| Error::RouteDisagreement {
        quantity: "Lê-Greuel length".into(),
        left: total.to_string(),
        right: mu1.to_string(),
    })
}

/// Milnor number of the complete intersection `{f1 = f2 = 0}` at `p`.
///
/// Both orderings are tried; when both are defined they must agree.
pub fn icis_milnor(f1: &Poly, f2: &Poly, p: &[Rat]) -> Result<usize> {
    f1.vars().check(f2.vars())?;
    check_point_len(p, f1.vars())?;
    if !f1.evaluate(p).is_zero() || !f2.evaluate(p).is_zero() {
        return Err(Error::InvalidInput(format!(
            "point {} is not on the curve",
            fmt_point(p)
        )));
    }
    if !is_regular_sequence_at(f1, f2, p)? {
        return Err(Error::NotRegularSequence(fmt_point(p)));
    }
    let a = le_greuel(f1, f2, p);
    let b = le_greuel(f2, f1, p);
    match (a, b) {
        (Ok(x), Ok(y)) if x != y => Err(Error::RouteDisagreement {
            quantity: format!("ICIS Milnor number at {}", fmt_point(p)),
            left: x.to_string(),
            right: y.to_string(),
        }),
        (Ok(x), _) | (_, Ok(x)) => Ok(x),
        (Err(e), Err(_)) => Err(e),
    }
}

fn check_pair(f1: &HomogPoly, f2: &HomogPoly) -> Result<()> {
    f1.vars().check(f2.vars())
}

/// `sum_{p in Sing(C)} mu_p(C)` for `C = {F1 = F2 = 0}` in one chart, with
/// `F1` playing the first role of the Lê-Greuel formula.
pub fn curve_milnor_sum(f1: &HomogPoly, f2: &HomogPoly, chart: &Chart) -> Result<usize> {
    check_pair(f1, f2)?;
    let mut guard = vec![f1.poly().clone(), f2.poly().clone()];
    guard.extend(jacobian_minors(f1.poly(), f2.poly()));
    if !chart_guard(guard, chart, f1.vars())? {
        return Err(Error::SingularitiesAtInfinity {
            chart: chart.label(f1.vars()),
        });
    }
    let g1 = chart.dehomogenize(f1)?;
    let g2 = chart.dehomogenize(f2)?;
    let mut gens = vec![g1.clone()];
    gens.extend(jacobian_minors(&g1, &g2));
    let length = zero_level_length(&gens, &[&g2])?;
    let mu1 = zero_level_length(&g1.gradient(), &[&g1, &g2])?;
    length.checked_sub(mu1).ok_or_else(|| Error::RouteDisagreement {
        quantity: "global Lê-Greuel length".into(),
        left: length.to_string(),
        right: mu1.to_string(),
    })
}

/// Curve Milnor total with the chart policy; falls back to the swapped
/// ordering when the first one has a non-isolated critical locus.
pub fn curve_milnor_total(f1: &HomogPoly, f2: &HomogPoly, requested: Option<&Chart>) -> Result<(usize, Chart)> {
    check_pair(f1, f2)?;
    with_chart_policy(f1.vars().len(), requested, |c| match curve_milnor_sum(f1, f2, c) {
        Err(Error::NonIsolatedCriticalLocus(_)) => curve_milnor_sum(f2, f1, c),
        r => r,
    })
}

/// Curve analogue of [`certify_points`].
pub fn certify_curve_points(
    f1: &HomogPoly,
    f2: &HomogPoly,
    points: &[Vec<Rat>],
    requested: Option<&Chart>,
) -> Result<MilnorReport> {
    check_pair(f1, f2)?;
    let points = normalize_distinct(points, f1.vars().len())?;
    let mut per_point = Vec::with_capacity(points.len());
    for p in points {
        let rows = vec![
            f1.poly().gradient().iter().map(|g| g.evaluate(&p)).collect(),
            f2.poly().gradient().iter().map(|g| g.evaluate(&p)).collect(),
        ];
        let on_curve = f1.poly().evaluate(&p).is_zero() && f2.poly().evaluate(&p).is_zero();
        if !on_curve || Matrix::from_rows(rows)?.rank() == 2 {
            return Err(Error::NotSingular(fmt_point(&p)));
        }
        let k = coordinate_chart_for(&p)?;
        let chart = Chart::Coordinate(k);
        let local = chart.affine_point(&p)?.expect("pivot coordinate is nonzero");
        let mu = icis_milnor(&chart.dehomogenize(f1)?, &chart.dehomogenize(f2)?, &local)?;
        per_point.push(SingularPointCert {
            point: p,
            local_milnor: mu,
            chart: k,
        });
    }
    let (total, chart) = curve_milnor_total(f1, f2, requested)?;
    let sum: usize = per_point.iter().map(|c| c.local_milnor).sum();
    Ok(MilnorReport {
        total,
        per_point,
        certified_complete: sum == total,
        chart,
    })
}

/// `prod_i (d / w_i - 1)`, the Milnor number of a weighted homogeneous
/// isolated singularity of degree `d` with weights `w_i`.
pub fn milnor_orlik_oracle(weights: &[Rat], d: &Rat) -> Result<Rat> {
    if weights.iter().any(|w| w <= &Rat::zero()) || d <= &Rat::zero() {
        return Err(Error::InvalidInput("weights and degree must be positive".into()));
    }
    Ok(weights.iter().map(|w| d / w - Rat::one()).product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, ratio};

    fn origin(n: usize) -> Vec<Rat> {
        vec![Rat::zero(); n]
    }

    fn p3() -> Vars {
        Vars::numbered("x", 4)
    }

    fn hp(s: &str) -> HomogPoly {
        HomogPoly::parse(s, &p3()).unwrap()
    }

    fn pt(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn local_examples() {
        let v = Vars::new(["x", "y", "z"]);
        let f = parse_poly("x^2 + y^2 + z^2", &v).unwrap();
        assert_eq!(local_milnor(&f, &origin(3)).unwrap(), 1);
        for k in 1..=5 {
            let f = parse_poly(&format!("x^{} + y^2 + z^2", k + 1), &v).unwrap();
            assert_eq!(local_milnor(&f, &origin(3)).unwrap(), k);
        }
        let v2 = Vars::new(["x", "y"]);
        let f = parse_poly("x^2*y + x*y^2", &v2).unwrap();
        assert_eq!(local_milnor(&f, &origin(2)).unwrap(), 4);
    }

    #[test]
    fn local_errors() {
        let v = Vars::new(["x", "y"]);
        let f = parse_poly("x + y^2", &v).unwrap();
        assert!(matches!(local_milnor(&f, &origin(2)), Err(Error::NotSingular(_))));
        let f = parse_poly("x^2", &v).unwrap();
        assert!(matches!(local_milnor(&f, &origin(2)), Err(Error::NonIsolated(_))));
    }

    #[test]
    fn local_milnor_away_from_origin() {
        // node of y^2 - x^2 (x + 1) at the origin and a node of the shifted
        // curve at (2, -1)
        let v = Vars::new(["x", "y"]);
        let f = parse_poly("(y + 1)^2 - (x - 2)^2*(x - 1)", &v).unwrap();
        assert_eq!(local_milnor(&f, &[rat(2), rat(-1)]).unwrap(), 1);
    }

    #[test]
    fn global_examples() {
        let smooth = hp("x0^2 + x1^2 + x2^2 + x3^2");
        assert_eq!(milnor_sum_on_zero_level(&smooth, &Chart::Coordinate(3)).unwrap(), 0);
        let cone = hp("x0*x1 - x2^2");
        assert_eq!(milnor_sum_on_zero_level(&cone, &Chart::Coordinate(3)).unwrap(), 1);
        // eight affine critical points, critical values +-2 and +-6
        let off = hp("x0^3 - 3*x0*x3^2 + x1^3 - 3*x1*x3^2 + x2^3 - 3*x2*x3^2");
        assert_eq!(milnor_sum_on_zero_level(&off, &Chart::Coordinate(3)).unwrap(), 0);
    }

    #[test]
    fn chart_failures() {
        let cone = hp("x0*x1 - x2^2");
        assert!(matches!(
            milnor_sum_on_zero_level(&cone, &Chart::Coordinate(0)),
            Err(Error::SingularitiesAtInfinity { .. })
        ));
        // the policy falls back past the failing chart
        let shifted = hp("x1*x2 - x3^2");
        let (total, chart) = milnor_total(&shifted, None).unwrap();
        assert_eq!((total, chart), (1, Chart::Coordinate(0)));
    }

    #[test]
    fn cayley_cubic() {
        let f = hp("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3");
        assert!(matches!(milnor_total(&f, None), Err(Error::NoAffineChart)));
        let chart = Chart::Linear(pt(&[1, 1, 1, 1]));
        let nodes = vec![
            pt(&[1, 0, 0, 0]),
            pt(&[0, 1, 0, 0]),
            pt(&[0, 0, 1, 0]),
            pt(&[0, 0, 0, 1]),
        ];
        let r = certify_points(&f, &nodes, Some(&chart)).unwrap();
        assert_eq!(r.total, 4);
        assert!(r.per_point.iter().all(|c| c.local_milnor == 1));
        assert!(r.certified_complete);
        let partial = certify_points(&f, &nodes[..3], Some(&chart)).unwrap();
        assert!(!partial.certified_complete);
        assert_eq!(partial.per_point_total(), 3);
    }

    #[test]
    fn certify_rejects_smooth_points() {
        let f = hp("x0*x1 - x2^2");
        assert!(matches!(
            certify_points(&f, &[pt(&[1, 0, 0, 0])], None),
            Err(Error::NotSingular(_))
        ));
        let smooth = hp("x0^2 + x1^2 + x2^2 + x3^2");
        let r = certify_points(&smooth, &[], None).unwrap();
        assert_eq!(r.total, 0);
        assert!(r.certified_complete);
    }

    #[test]
    fn icis_examples() {
        let v = Vars::new(["x", "y", "z"]);
        let z = parse_poly("z", &v).unwrap();
        let node = parse_poly("y^2 - x^3 - x^2", &v).unwrap();
        let cusp = parse_poly("y^2 - x^3", &v).unwrap();
        assert_eq!(icis_milnor(&z, &node, &origin(3)).unwrap(), 1);
        assert_eq!(icis_milnor(&node, &z, &origin(3)).unwrap(), 1);
        assert_eq!(icis_milnor(&z, &cusp, &origin(3)).unwrap(), 2);
        let sphere = parse_poly("x^2 + y^2 + z^2 + 2*x", &v).unwrap();
        assert_eq!(icis_milnor(&z, &sphere, &origin(3)).unwrap(), 0);
        assert!(matches!(
            icis_milnor(&z, &z, &origin(3)),
            Err(Error::NotRegularSequence(_))
        ));
    }

    #[test]
    fn icis_symmetric_when_both_defined() {
        let v = Vars::new(["x", "y", "z"]);
        let f1 = parse_poly("x^2 + y^2 + z^2", &v).unwrap();
        let f2 = parse_poly("x*y + z^3", &v).unwrap();
        assert_eq!(
            le_greuel(&f1, &f2, &origin(3)).unwrap(),
            le_greuel(&f2, &f1, &origin(3)).unwrap()
        );
    }

    #[test]
    fn curve_totals() {
        // plane x0 = 0 cutting a smooth cubic in a nodal cubic curve
        let h = hp("x0");
        let cubic = hp("x0*x3^2 + x0^3 + x2^2*x3 - x1^3 - x1^2*x3");
        let (total, _) = curve_milnor_total(&h, &cubic, None).unwrap();
        assert_eq!(total, 1);
        let r = certify_curve_points(&h, &cubic, &[pt(&[0, 0, 0, 1])], None).unwrap();
        assert!(r.certified_complete);
        // transverse plane and quadric
        let (total, _) = curve_milnor_total(&hp("x3"), &hp("x0^2 + x1^2 + x2^2 + x3^2"), None).unwrap();
        assert_eq!(total, 0);
    }

    #[test]
    fn oracle_examples() {
        let one = rat(1);
        assert_eq!(
            milnor_orlik_oracle(&[one.clone(), one.clone(), one.clone()], &rat(2)).unwrap(),
            rat(1)
        );
        for k in 1..=5i64 {
            let w = ratio(k + 1, 2);
            assert_eq!(
                milnor_orlik_oracle(&[one.clone(), w.clone(), w], &rat(k + 1)).unwrap(),
                rat(k)
            );
        }
        assert_eq!(milnor_orlik_oracle(&[one.clone(), one], &rat(3)).unwrap(), rat(4));
    }

    #[test]
    fn linear_chart_maps_points() {
        let c = Chart::Linear(pt(&[1, 1, 1, 1]));
        assert_eq!(c.pivot(4).unwrap(), 3);
        let a = c.affine_point(&pt(&[1, 0, 0, 0])).unwrap().unwrap();
        assert_eq!(a, pt(&[1, 0, 0]));
        assert_eq!(c.affine_point(&pt(&[1, -1, 0, 0])).unwrap(), None);
        assert_eq!(c.label(&p3()), "x0 + x1 + x2 + x3");
    }
}
