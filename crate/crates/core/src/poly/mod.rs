//! Sparse multivariate polynomials over the rationals.
//!
//! Every [`Poly`] carries its variable context explicitly. Binary operations
//! between polynomials over different contexts are refused: the `checked_*`
//! methods return [`Error::ContextMismatch`], the operator impls panic.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use parse::parse_poly;

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q`, or just `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with an optional leading sign.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let t = text.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: `{text}`"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Returns the integer value of `r`, or a [`Error::NonIntegral`] naming `what`.
pub fn to_integer(r: &Rat, what: &str) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral {
            what: what.to_string(),
            value: fmt_rat(r),
        })
    }
}

/// An ordered list of variable names shared by a family of polynomials.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl Vars {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Vars(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    /// `prefix0, prefix1, ...`
    pub fn numbered(prefix: &str, count: usize) -> Self {
        Vars::new((0..count).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// The context with variable `index` removed.
    pub fn without(&self, index: usize) -> Result<Vars> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange { index, len: self.len() });
        }
        Ok(Vars::new(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != index)
                .map(|(_, v)| v.clone()),
        ))
    }

    pub fn check(&self, other: &Vars) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.0.join(","),
                right: other.0.join(","),
            })
        }
    }
}

/// Exponent vector, one slot per variable of the ambient context.
///
/// `Ord` is graded reverse lexicographic, which fixes the printing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Every monomial of total degree `d` in `nvars` variables.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        if nvars == 0 {
            return if d == 0 { vec![Monomial(Vec::new())] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for first in 0..=d {
            for mut rest in Monomial::all_of_degree(nvars - 1, d - first) {
                rest.0.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    /// `Some(i)` when the monomial is `x_i^k` with `k >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    fn without(&self, index: usize) -> Monomial {
        let mut e = self.0.clone();
        e.remove(index);
        Monomial(e)
    }

    fn with_inserted(&self, index: usize, exp: u32) -> Monomial {
        let mut e = self.0.clone();
        e.insert(index, exp);
        Monomial(e)
    }
}

/// Graded reverse lexicographic comparison.
pub fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => cmp_revlex_tie(a, b),
        o => o,
    }
}

/// Tie-break shared by grevlex and its local counterpart: the monomial with
/// the smaller exponent in the last differing variable is larger.
pub(crate) fn cmp_revlex_tie(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_grevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with rational coefficients over an explicit variable context.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(vars: &Vars) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rat) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Poly::constant(vars, Rat::one())
    }

    pub fn var(vars: &Vars, index: usize) -> Self {
        let mut p = Poly::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), index), Rat::one());
        p
    }

    pub fn monomial(vars: &Vars, mono: Monomial, coeff: Rat) -> Self {
        assert_eq!(mono.len(), vars.len(), "monomial length differs from context");
        let mut p = Poly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    /// Sums the given terms; repeated monomials accumulate.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial length differs from context");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in increasing grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.vars.check(&other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.vars.check(&other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.vars.check(&other.vars)?;
        let mut out = Poly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly::from_terms(&self.vars, self.terms.iter().map(|(k, a)| (k.mul(m), a * c)))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Poly {
        assert!(index < self.nvars(), "variable index out of range");
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e > 0 {
                let mut exps = m.0.clone();
                exps[index] -= 1;
                out.add_term(Monomial(exps), c * rat(i64::from(e)));
            }
        }
        out
    }

    pub fn differentiate(&self, var: &str) -> Result<Poly> {
        let index = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable { name: var.to_string() })?;
        Ok(self.derivative(index))
    }

    /// All first partial derivatives, in context order.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars(), "point length differs from context");
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes `subs[i]` for variable `i`. All substitutes share one
    /// target context, which becomes the context of the result.
    pub fn compose(&self, subs: &[Poly]) -> Result<Poly> {
        if subs.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                left: self.nvars(),
                right: subs.len(),
            });
        }
        let target = match subs.first() {
            Some(s) => s.vars.clone(),
            None => return Ok(self.clone()),
        };
        for s in subs {
            target.check(&s.vars)?;
        }
        // powers[i][e] = subs[i]^e, filled lazily
        let mut powers: Vec<Vec<Poly>> = subs.iter().map(|s| vec![Poly::one(&target), s.clone()]).collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// `p(x + point)`; the constant term of the result is `p(point)`.
    pub fn translate(&self, point: &[Rat]) -> Result<Poly> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                left: self.nvars(),
                right: point.len(),
            });
        }
        let subs: Vec<Poly> = point
            .iter()
            .enumerate()
            .map(|(i, a)| &Poly::var(&self.vars, i) + &Poly::constant(&self.vars, a.clone()))
            .collect();
        self.compose(&subs)
    }

    /// `p(M x)`: variable `i` is replaced by `sum_j m[i][j] x_j`.
    pub fn linear_change(&self, m: &[Vec<Rat>]) -> Result<Poly> {
        let n = self.nvars();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: m.len(),
            });
        }
        let subs: Vec<Poly> = m
            .iter()
            .map(|row| {
                Poly::from_terms(
                    &self.vars,
                    row.iter().enumerate().map(|(j, c)| (Monomial::var(n, j), c.clone())),
                )
            })
            .collect();
        self.compose(&subs)
    }

    /// Sets variable `index` to one and drops it from the context.
    pub fn dehomogenize_at(&self, index: usize) -> Result<Poly> {
        let vars = self.vars.without(index)?;
        Ok(Poly::from_terms(
            &vars,
            self.terms.iter().map(|(m, c)| (m.without(index), c.clone())),
        ))
    }

    /// Inverse of [`Poly::dehomogenize_at`]: inserts variable `index` of
    /// `full` so that every term reaches `degree`.
    pub fn homogenize(&self, full: &Vars, index: usize, degree: u32) -> Result<HomogPoly> {
        if full.len() != self.nvars() + 1 || full.without(index)? != self.vars {
            return Err(Error::ContextMismatch {
                left: self.vars.names().join(","),
                right: full.names().join(","),
            });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let d = m.degree();
            if d > degree {
                return Err(Error::InvalidInput(format!(
                    "term of degree {d} exceeds homogenization degree {degree}"
                )));
            }
            terms.push((m.with_inserted(index, degree - d), c.clone()));
        }
        HomogPoly::new(Poly::from_terms(full, terms))
    }

    /// Divides by the leading (grevlex-largest) coefficient.
    pub fn monic(&self) -> Poly {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial context mismatch")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial context mismatch")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial context mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for Poly {
    /// Canonical form: terms in decreasing grevlex order, `c*x^a*y^b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        let name = &self.vars.names()[i];
                        if e == 1 {
                            name.clone()
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
            if mono.is_empty() {
                f.write_str(&fmt_rat(&a))?;
            } else if a.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A nonzero homogeneous polynomial of positive degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogPoly {
    poly: Poly,
    degree: u32,
}

impl HomogPoly {
    pub fn new(poly: Poly) -> Result<Self> {
        match poly.total_degree() {
            Some(d) if d > 0 && poly.is_homogeneous() => Ok(HomogPoly { poly, degree: d }),
            _ => Err(Error::NotHomogeneous(poly.to_string())),
        }
    }

    pub fn parse(text: &str, vars: &Vars) -> Result<Self> {
        HomogPoly::new(parse_poly(text, vars)?)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn vars(&self) -> &Vars {
        self.poly.vars()
    }

    /// Checks `sum_i x_i dF/dx_i = d F` identically.
    pub fn euler_check(&self) -> bool {
        let vars = self.poly.vars();
        let mut lhs = Poly::zero(vars);
        for i in 0..vars.len() {
            lhs = &lhs + &(&Poly::var(vars, i) * &self.poly.derivative(i));
        }
        lhs == self.poly.scale(&rat(i64::from(self.degree)))
    }

    pub fn dehomogenize(&self, chart: usize) -> Result<Poly> {
        self.poly.dehomogenize_at(chart)
    }

    pub fn mul(&self, other: &HomogPoly) -> Result<HomogPoly> {
        HomogPoly::new(self.poly.checked_mul(&other.poly)?)
    }

    /// `F(M x)` for an invertible matrix `M`.
    pub fn linear_change(&self, m: &[Vec<Rat>]) -> Result<HomogPoly> {
        HomogPoly::new(self.poly.linear_change(m)?)
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Scales a projective point so its first nonzero coordinate is one.
pub fn normalize_projective(point: &[Rat]) -> Result<Vec<Rat>> {
    let lead = point
        .iter()
        .find(|c| !c.is_zero())
        .ok_or_else(|| Error::InvalidInput("projective point with all coordinates zero".into()))?
        .clone();
    Ok(point.iter().map(|c| c / &lead).collect())
}

pub fn fmt_point(point: &[Rat]) -> String {
    let parts: Vec<String> = point.iter().map(fmt_rat).collect();
    format!("[{}]", parts.join(":"))
}
