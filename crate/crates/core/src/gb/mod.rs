//! Gröbner bases for global orders, standard bases for the local degree
//! order, zero-dimensional quotient algebras and their multiplication maps.

mod buchberger;
pub mod linalg;
mod mora;
mod sorted;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{cmp_grevlex, cmp_revlex_tie, HomogPoly, Monomial, Poly, Rat, Vars};

pub use linalg::{generalized_kernel_dim, joint_generalized_kernel_dim, rational_roots, Matrix};

use sorted::SortedPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonOrder {
    GrevLex,
    Lex,
    /// Local degree order: lower total degree ranks higher, so `1` is the
    /// largest monomial. Ties are broken as in grevlex.
    NegDegRevLex,
}

impl MonOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonOrder::GrevLex => cmp_grevlex(a, b),
            MonOrder::Lex => a.exponents().cmp(b.exponents()),
            MonOrder::NegDegRevLex => match b.degree().cmp(&a.degree()) {
                Ordering::Equal => cmp_revlex_tie(a, b),
                o => o,
            },
        }
    }

    pub fn is_global(&self) -> bool {
        !matches!(self, MonOrder::NegDegRevLex)
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonOrder::GrevLex => "grevlex",
            MonOrder::Lex => "lex",
            MonOrder::NegDegRevLex => "negdegrevlex",
        }
    }
}

/// A Gröbner basis (global order) or standard basis (local order).
#[derive(Clone, Debug)]
pub struct BasisResult {
    vars: Vars,
    generators: Vec<Poly>,
    order: MonOrder,
    reduced: bool,
    /// Leading monomials of `generators`, minimal generators of the leading ideal.
    leading: Vec<Monomial>,
    sorted: Vec<SortedPoly>,
}

impl BasisResult {
    fn from_sorted(vars: &Vars, order: MonOrder, reduced: bool, sorted: Vec<SortedPoly>) -> Self {
        BasisResult {
            vars: vars.clone(),
            generators: sorted.iter().map(|s| s.to_poly(vars)).collect(),
            order,
            reduced,
            leading: sorted.iter().map(|s| s.lm().clone()).collect(),
            sorted,
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> MonOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// True when the basis generates the whole (local) ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    /// True when every variable has a pure power among the leading monomials.
    pub fn has_finite_staircase(&self) -> bool {
        self.is_unit_ideal() || self.pure_power_bounds().is_some()
    }

    fn pure_power_bounds(&self) -> Option<Vec<u32>> {
        let n = self.vars.len();
        let mut bounds: Vec<Option<u32>> = vec![None; n];
        for m in &self.leading {
            if let Some(i) = m.pure_power_var() {
                let e = m.exponents()[i];
                bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
            }
        }
        bounds.into_iter().collect()
    }

    /// Monomials outside the leading ideal, in increasing grevlex order.
    pub fn staircase(&self) -> Result<Vec<Monomial>> {
        if self.is_unit_ideal() {
            return Ok(Vec::new());
        }
        let bounds = self.pure_power_bounds().ok_or(Error::NotZeroDimensional)?;
        let mut out = Vec::new();
        let mut exps = vec![0u32; bounds.len()];
        loop {
            let m = Monomial::from_exponents(exps.clone());
            if !self.leading.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == exps.len() {
                    out.sort();
                    return Ok(out);
                }
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Normal form of `p`: the full remainder for global orders, Mora's weak
    /// normal form for the local order (zero iff `p` lies in the local ideal).
    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        self.vars.check(p.vars())?;
        let sp = SortedPoly::from_poly(p, self.order);
        let r = if self.order.is_global() {
            buchberger::reduce_full(sp, &self.sorted, self.order)
        } else {
            mora::weak_normal_form(sp, &self.sorted, self.order, None)
        };
        Ok(r.to_poly(&self.vars))
    }
}

fn common_vars(gens: &[Poly]) -> Result<Vars> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    for g in gens {
        first.vars().check(g.vars())?;
    }
    Ok(first.vars().clone())
}

/// Reduced Gröbner basis by Buchberger's algorithm.
pub fn groebner(gens: &[Poly], order: MonOrder) -> Result<BasisResult> {
    if !order.is_global() {
        return Err(Error::WrongOrderKind {
            expected: "global",
            got: order.name(),
        });
    }
    let vars = common_vars(gens)?;
    let sorted = buchberger::reduced_groebner(gens.iter().map(|g| SortedPoly::from_poly(g, order)).collect(), order);
    Ok(BasisResult::from_sorted(&vars, order, true, sorted))
}

/// Standard basis for the local degree order by Mora's tangent cone algorithm.
pub fn mora_standard_basis(gens: &[Poly], order: MonOrder) -> Result<BasisResult> {
    if order.is_global() {
        return Err(Error::WrongOrderKind {
            expected: "local",
            got: order.name(),
        });
    }
    let vars = common_vars(gens)?;
    let sorted = mora::standard_basis(
        gens.iter().map(|g| SortedPoly::from_poly(g, order)).collect(),
        order,
        None,
        vars.len(),
    );
    Ok(BasisResult::from_sorted(&vars, order, false, sorted))
}

/// Local standard basis of `I + m^d`, computed with every term of degree
/// `>= d` discarded. Its staircase is always finite.
pub fn truncated_standard_basis(gens: &[Poly], order: MonOrder, d: u32) -> Result<BasisResult> {
    if order.is_global() {
        return Err(Error::WrongOrderKind {
            expected: "local",
            got: order.name(),
        });
    }
    if d == 0 {
        return Err(Error::InvalidInput("truncation degree must be positive".into()));
    }
    let vars = common_vars(gens)?;
    let sorted = mora::standard_basis(
        gens.iter().map(|g| SortedPoly::from_poly(g, order)).collect(),
        order,
        Some(d),
        vars.len(),
    );
    Ok(BasisResult::from_sorted(&vars, order, false, sorted))
}

/// Basis (global or local, chosen by the order kind).
pub fn standard_basis(gens: &[Poly], order: MonOrder) -> Result<BasisResult> {
    if order.is_global() {
        groebner(gens, order)
    } else {
        mora_standard_basis(gens, order)
    }
}

/// Finite-dimensional quotient by an ideal, with its monomial basis.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    source: BasisResult,
}

impl QuotientAlgebra {
    pub fn basis_monomials(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn source(&self) -> &BasisResult {
        &self.source
    }

    /// Coordinates of the normal form of `p` in the monomial basis.
    pub fn coordinates(&self, p: &Poly) -> Result<Vec<Rat>> {
        let nf = self.source.normal_form(p)?;
        let mut v = vec![Rat::from_integer(0.into()); self.basis.len()];
        for (m, c) in nf.terms() {
            let i = *self.index.get(m).ok_or_else(|| Error::RouteDisagreement {
                quantity: "normal form support".into(),
                left: "basis monomials".into(),
                right: format!("{m:?}"),
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }
}

pub fn quotient_algebra(b: &BasisResult) -> Result<QuotientAlgebra> {
    let basis = b.staircase()?;
    let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(QuotientAlgebra {
        basis,
        index,
        source: b.clone(),
    })
}

/// Matrix of `[q] -> [p q]` in the monomial basis; column `j` is the image
/// of basis monomial `j`. Requires a global order.
pub fn mult_matrix(a: &QuotientAlgebra, p: &Poly) -> Result<Matrix> {
    if !a.source.order.is_global() {
        return Err(Error::WrongOrderKind {
            expected: "global",
            got: a.source.order.name(),
        });
    }
    let vars = a.source.vars();
    vars.check(p.vars())?;
    let n = a.dimension();
    let mut m = Matrix::zeros(n, n);
    for (j, mono) in a.basis.iter().enumerate() {
        let image = p.mul_monomial(mono, &Rat::from_integer(1.into()));
        for (i, c) in a.coordinates(&image)?.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

pub fn ideal_membership(p: &Poly, gens: &[Poly], order: MonOrder) -> Result<bool> {
    let b = standard_basis(gens, order)?;
    Ok(b.normal_form(p)?.is_zero())
}

/// True when the singular scheme of `{F = 0}` misses the hyperplane
/// `{x_chart = 0}`: the ideal `(dF/dx_0, ..., dF/dx_n, x_chart)` must have a
/// finite staircase.
pub fn no_singularities_at_infinity(f: &HomogPoly, chart: usize) -> Result<bool> {
    let vars = f.vars();
    if chart >= vars.len() {
        return Err(Error::IndexOutOfRange {
            index: chart,
            len: vars.len(),
        });
    }
    let mut gens = f.poly().gradient();
    gens.push(Poly::var(vars, chart));
    Ok(groebner(&gens, MonOrder::GrevLex)?.has_finite_staircase())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    fn ps(v: &Vars, xs: &[&str]) -> Vec<Poly> {
        xs.iter().map(|s| parse_poly(s, v).unwrap()).collect()
    }

    #[test]
    fn orders_compare_as_documented() {
        let a = Monomial::from_exponents(vec![2, 0]);
        let b = Monomial::from_exponents(vec![0, 1]);
        assert_eq!(MonOrder::GrevLex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonOrder::NegDegRevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonOrder::NegDegRevLex.cmp(&Monomial::one(2), &b), Ordering::Greater);
        assert_eq!(
            MonOrder::Lex.cmp(
                &Monomial::from_exponents(vec![1, 0]),
                &Monomial::from_exponents(vec![0, 5])
            ),
            Ordering::Greater
        );
    }

    #[test]
    fn groebner_examples() {
        let v = Vars::new(["x", "y"]);
        let b = groebner(&ps(&v, &["x", "y"]), MonOrder::GrevLex).unwrap();
        assert_eq!(b.generators().len(), 2);
        assert_eq!(b.staircase().unwrap(), vec![Monomial::one(2)]);

        // Bezout bound 2*2 = 4 attained
        let b = groebner(&ps(&v, &["x^2 - y", "y^2 - x"]), MonOrder::GrevLex).unwrap();
        assert_eq!(b.staircase().unwrap().len(), 4);
        for g in ps(&v, &["x^2 - y", "y^2 - x"]) {
            assert!(b.normal_form(&g).unwrap().is_zero());
        }

        let b = groebner(&ps(&v, &["x^3*y - 2*x*y", "1"]), MonOrder::GrevLex).unwrap();
        assert_eq!(b.generators(), &[Poly::one(&v)]);
        assert!(b.staircase().unwrap().is_empty());
    }

    #[test]
    fn groebner_rejects_local_order_and_empty_input() {
        let v = Vars::new(["x"]);
        assert!(matches!(
            groebner(&ps(&v, &["x"]), MonOrder::NegDegRevLex),
            Err(Error::WrongOrderKind { .. })
        ));
        assert!(matches!(groebner(&[], MonOrder::GrevLex), Err(Error::InvalidInput(_))));
        assert!(matches!(
            mora_standard_basis(&ps(&v, &["x"]), MonOrder::Lex),
            Err(Error::WrongOrderKind { .. })
        ));
    }

    #[test]
    fn lex_basis_eliminates() {
        let v = Vars::new(["x", "y"]);
        let b = groebner(&ps(&v, &["x^2 - y", "y^2 - x"]), MonOrder::Lex).unwrap();
        // the last generator is univariate in y
        let last = b.generators().last().unwrap();
        assert!(last.terms().all(|(m, _)| m.exponents()[0] == 0));
        assert_eq!(last.total_degree(), Some(4));
    }

    #[test]
    fn mora_examples() {
        let v = Vars::new(["x0", "x1", "x2"]);
        let b = mora_standard_basis(&ps(&v, &["x1", "x0", "-2*x2"]), MonOrder::NegDegRevLex).unwrap();
        assert_eq!(quotient_algebra(&b).unwrap().dimension(), 1);

        let v2 = Vars::new(["x", "y"]);
        let b = mora_standard_basis(&ps(&v2, &["3*x^2 - 3", "2*y"]), MonOrder::NegDegRevLex).unwrap();
        assert!(b.is_unit_ideal());
        assert_eq!(quotient_algebra(&b).unwrap().dimension(), 0);

        let v3 = Vars::new(["x", "y", "z"]);
        let b = mora_standard_basis(&ps(&v3, &["3*x^2", "2*y", "2*z"]), MonOrder::NegDegRevLex).unwrap();
        let q = quotient_algebra(&b).unwrap();
        assert_eq!(q.basis_monomials(), &[Monomial::one(3), Monomial::var(3, 0)]);
    }

    #[test]
    fn local_and_global_dimensions_differ_off_origin() {
        // x(x - 1): globally two points, locally at the origin one
        let v = Vars::new(["x"]);
        let gens = ps(&v, &["x^2 - x"]);
        assert_eq!(
            quotient_algebra(&groebner(&gens, MonOrder::GrevLex).unwrap())
                .unwrap()
                .dimension(),
            2
        );
        assert_eq!(
            quotient_algebra(&mora_standard_basis(&gens, MonOrder::NegDegRevLex).unwrap())
                .unwrap()
                .dimension(),
            1
        );
    }

    #[test]
    fn quotient_examples() {
        let v = Vars::new(["x", "y"]);
        let q = quotient_algebra(&groebner(&ps(&v, &["x", "y"]), MonOrder::GrevLex).unwrap()).unwrap();
        assert_eq!(q.dimension(), 1);

        // Jacobian of x^2 y + x y^2 is (2xy + y^2, x^2 + 2xy); its staircase
        // in grevlex is {1, x, y, y^2}, listed in increasing order
        let f = parse_poly("x^2*y + x*y^2", &v).unwrap();
        let q = quotient_algebra(&groebner(&f.gradient(), MonOrder::GrevLex).unwrap()).unwrap();
        assert_eq!(q.dimension(), 4);
        let mono = |a, b| Monomial::from_exponents(vec![a, b]);
        assert_eq!(q.basis_monomials(), &[mono(0, 0), mono(0, 1), mono(1, 0), mono(0, 2)]);

        let q = quotient_algebra(&groebner(&ps(&v, &["x - 1", "x"]), MonOrder::GrevLex).unwrap()).unwrap();
        assert_eq!(q.dimension(), 0);

        let inf = groebner(&ps(&v, &["x*y"]), MonOrder::GrevLex).unwrap();
        assert!(matches!(quotient_algebra(&inf), Err(Error::NotZeroDimensional)));
    }

    #[test]
    fn mult_matrix_examples() {
        let v = Vars::new(["x"]);
        let q = quotient_algebra(&groebner(&ps(&v, &["x^2"]), MonOrder::GrevLex).unwrap()).unwrap();
        assert!(mult_matrix(&q, &Poly::zero(&v)).unwrap().is_zero());
        assert_eq!(mult_matrix(&q, &Poly::one(&v)).unwrap(), Matrix::identity(2));
        let m = mult_matrix(&q, &Poly::var(&v, 0)).unwrap();
        assert_eq!(m, Matrix::from_i64(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn membership_examples() {
        let v = Vars::new(["x", "y"]);
        let f = parse_poly("x^3 - x*y + 2", &v).unwrap();
        assert!(ideal_membership(&f, std::slice::from_ref(&f), MonOrder::GrevLex).unwrap());
        assert!(!ideal_membership(&Poly::one(&v), &ps(&v, &["x", "y"]), MonOrder::GrevLex).unwrap());
        assert!(ideal_membership(&parse_poly("x^2", &v).unwrap(), &ps(&v, &["x"]), MonOrder::GrevLex).unwrap());
        // locally, x - x^2 = x (1 - x) and 1 - x is a unit
        assert!(ideal_membership(
            &parse_poly("x", &v).unwrap(),
            &ps(&v, &["x - x^2"]),
            MonOrder::NegDegRevLex
        )
        .unwrap());
        assert!(!ideal_membership(&parse_poly("x", &v).unwrap(), &ps(&v, &["x - x^2"]), MonOrder::GrevLex).unwrap());
    }

    #[test]
    fn membership_agrees_with_explicit_cofactors() {
        let v = Vars::new(["x", "y", "z"]);
        let gens = ps(&v, &["x^2 - y*z", "y^2 - x + z", "x*z - 1/2"]);
        let cof = ps(&v, &["z + 1", "x*y - 3", "y^2"]);
        let combo = gens
            .iter()
            .zip(&cof)
            .fold(Poly::zero(&v), |acc, (g, c)| &acc + &(g * c));
        assert!(ideal_membership(&combo, &gens, MonOrder::GrevLex).unwrap());
        let off = &combo + &Poly::var(&v, 0);
        let b = groebner(&gens, MonOrder::GrevLex).unwrap();
        assert_eq!(b.normal_form(&off).unwrap(), b.normal_form(&Poly::var(&v, 0)).unwrap());
    }

    #[test]
    fn singularities_at_infinity_examples() {
        let v = Vars::numbered("x", 4);
        let cone = HomogPoly::parse("x0*x1 - x2^2", &v).unwrap();
        assert!(no_singularities_at_infinity(&cone, 3).unwrap());
        assert!(!no_singularities_at_infinity(&cone, 0).unwrap());
        let smooth = HomogPoly::parse("x0^2 + x1^2 + x2^2 + x3^2", &v).unwrap();
        assert!((0..4).all(|c| no_singularities_at_infinity(&smooth, c).unwrap()));

        // cuspidal cubic: singular point [0:1:0]
        let v3 = Vars::numbered("x", 3);
        let cusp = HomogPoly::parse("x0^2*x1 - x2^3", &v3).unwrap();
        assert!(no_singularities_at_infinity(&cusp, 1).unwrap());
        assert!(!no_singularities_at_infinity(&cusp, 0).unwrap());
        assert!(!no_singularities_at_infinity(&cusp, 2).unwrap());
        assert!(matches!(
            no_singularities_at_infinity(&cusp, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        let _ = rat(0);
    }
}
