//! Both sides of the Gauss-Bonnet and Poincaré-Hopf type identities for
//! divisor complements in `P^n`, each computed by independent routes.
//!
//! Every quantity that enters a report is recorded in its ledger together
//! with the route that produced it. Where two sign conventions are in
//! circulation, both are evaluated as named variants and the verdict is
//! taken from the default one.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chow::{
    complete_intersection_integral, complete_symmetric, curve_chern_integral, divisor_chern_integral, log_chern_class,
    snc_log_chern_class, tangent_class, twisted_top_chern,
};
use crate::error::{Error, Result};
use crate::indices::{index_report, is_logarithmic, logarithmic_cofactor, IndexReport, VectorFieldPn};
use crate::milnor::{certify_curve_points, certify_points, curve_milnor_total, milnor_total, Chart, MilnorReport};
use crate::poly::{fmt_point, fmt_rat, rat, to_integer, HomogPoly, Rat, Vars};

/// Reserved key for singular points of `C = D1 ∩ D2`.
pub const CURVE_KEY: &str = "C";

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn big(k: usize) -> BigInt {
    BigInt::from(k)
}

/// A reduced hypersurface `D = {F = 0}` in `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorOnPn {
    name: String,
    equation: HomogPoly,
}

impl DivisorOnPn {
    pub fn new(name: impl Into<String>, equation: HomogPoly) -> Result<Self> {
        if equation.vars().len() < 2 {
            return Err(Error::InvalidInput("divisors live in P^n with n >= 1".into()));
        }
        Ok(DivisorOnPn {
            name: name.into(),
            equation,
        })
    }

    pub fn parse(name: &str, text: &str, vars: &Vars) -> Result<Self> {
        DivisorOnPn::new(name, HomogPoly::parse(text, vars)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn equation(&self) -> &HomogPoly {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.equation.degree()
    }

    pub fn dim(&self) -> usize {
        self.equation.vars().len() - 1
    }
}

/// `D = D1 ∪ D2` with `C = D1 ∩ D2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub d1: DivisorOnPn,
    pub d2: DivisorOnPn,
}

impl Decomposition {
    pub fn new(d1: DivisorOnPn, d2: DivisorOnPn) -> Result<Self> {
        d1.equation.vars().check(d2.equation.vars())?;
        Ok(Decomposition { d1, d2 })
    }

    /// Equation `F1 F2` of the union.
    pub fn union_equation(&self) -> Result<HomogPoly> {
        self.d1.equation.mul(&self.d2.equation)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Coordinate chart for the global Milnor routes.
    pub chart: Option<usize>,
    /// Linear form whose complement is the chart; overrides `chart`.
    pub chart_form: Option<Vec<Rat>>,
    /// Add sign-convention probe results to reports.
    pub probes: bool,
}

impl Options {
    pub fn requested_chart(&self) -> Option<Chart> {
        match (&self.chart_form, self.chart) {
            (Some(c), _) => Some(Chart::Linear(c.clone())),
            (None, Some(k)) => Some(Chart::Coordinate(k)),
            (None, None) => None,
        }
    }
}

/// A complete problem: ambient `P^n`, divisors, and optional data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub n: usize,
    pub vars: Vars,
    pub divisors: Vec<DivisorOnPn>,
    /// Names of `D1` and `D2`.
    pub decomposition: Option<(String, String)>,
    /// Name of a divisor that must equal `D1 ∪ D2`.
    pub total: Option<String>,
    pub field: Option<VectorFieldPn>,
    /// Certified singular points per divisor name, and for [`CURVE_KEY`].
    pub singular_points: BTreeMap<String, Vec<Vec<Rat>>>,
    pub options: Options,
}

/// The divisor data a verification runs on.
#[derive(Clone, Debug)]
pub enum Target<'a> {
    Single(&'a DivisorOnPn),
    Pair(Decomposition),
}

impl ProblemSpec {
    pub fn new(vars: Vars, divisors: Vec<DivisorOnPn>) -> Result<Self> {
        if vars.len() < 2 {
            return Err(Error::InvalidInput("need at least two homogeneous coordinates".into()));
        }
        let spec = ProblemSpec {
            n: vars.len() - 1,
            vars,
            divisors,
            decomposition: None,
            total: None,
            field: None,
            singular_points: BTreeMap::new(),
            options: Options::default(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn divisor(&self, name: &str) -> Result<&DivisorOnPn> {
        self.divisors
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| Error::InvalidInput(format!("no divisor named `{name}`")))
    }

    /// Shape checks; mathematical preconditions are checked by the routes.
    pub fn validate(&self) -> Result<()> {
        if self.vars.len() != self.n + 1 {
            return Err(Error::DimensionMismatch {
                left: self.n + 1,
                right: self.vars.len(),
            });
        }
        let mut seen = Vec::new();
        for d in &self.divisors {
            self.vars.check(d.equation.vars())?;
            if d.name == CURVE_KEY {
                return Err(Error::InvalidInput(format!("divisor name `{CURVE_KEY}` is reserved")));
            }
            if seen.contains(&&d.name) {
                return Err(Error::InvalidInput(format!("divisor `{}` defined twice", d.name)));
            }
            seen.push(&d.name);
        }
        if let Some((a, b)) = &self.decomposition {
            self.divisor(a)?;
            self.divisor(b)?;
            if a == b {
                return Err(Error::InvalidInput("decomposition needs two different divisors".into()));
            }
        }
        if let Some(t) = &self.total {
            let total = self.divisor(t)?;
            let dec = self
                .decomposition()?
                .ok_or_else(|| Error::MissingData("decomposition".into()))?;
            let product = dec.union_equation()?;
            if !same_up_to_scalar(total.equation(), &product) {
                return Err(Error::InvalidInput(format!(
                    "divisor `{t}` is not the union of `{}` and `{}`",
                    dec.d1.name, dec.d2.name
                )));
            }
        }
        if let Some(v) = &self.field {
            if v.vars().len() != self.n + 1 {
                return Err(Error::DimensionMismatch {
                    left: self.n + 1,
                    right: v.vars().len(),
                });
            }
        }
        for (key, pts) in &self.singular_points {
            if key != CURVE_KEY {
                self.divisor(key)?;
            }
            if let Some(p) = pts.iter().find(|p| p.len() != self.n + 1) {
                return Err(Error::DimensionMismatch {
                    left: self.n + 1,
                    right: p.len(),
                });
            }
        }
        Ok(())
    }

    pub fn decomposition(&self) -> Result<Option<Decomposition>> {
        match &self.decomposition {
            None => Ok(None),
            Some((a, b)) => Ok(Some(Decomposition::new(
                self.divisor(a)?.clone(),
                self.divisor(b)?.clone(),
            )?)),
        }
    }

    /// The decomposition when present, otherwise the only divisor.
    pub fn target(&self) -> Result<Target<'_>> {
        if let Some(dec) = self.decomposition()? {
            return Ok(Target::Pair(dec));
        }
        match self.divisors.as_slice() {
            [d] => Ok(Target::Single(d)),
            [] => Err(Error::MissingData("divisors".into())),
            _ => Err(Error::MissingData("decomposition (several divisors given)".into())),
        }
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.n < 3 {
            out.push(format!("n = {} < 3: the identities are stated for n >= 3", self.n));
        }
        out
    }
}

fn same_up_to_scalar(a: &HomogPoly, b: &HomogPoly) -> bool {
    let Some((m, c)) = a.poly().terms().next_back() else {
        return false;
    };
    let r = b.poly().coeff(m) / c;
    !r.is_zero() && a.poly().scale(&r) == *b.poly()
}

/// One computed quantity and the route that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub quantity: String,
    pub value: BigInt,
    pub route: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ledger(pub Vec<LedgerEntry>);

impl Ledger {
    pub fn push(&mut self, quantity: impl Into<String>, value: &BigInt, route: impl Into<String>) {
        self.0.push(LedgerEntry {
            quantity: quantity.into(),
            value: value.clone(),
            route: route.into(),
        });
    }

    pub fn get(&self, quantity: &str) -> Option<&BigInt> {
        self.0.iter().find(|e| e.quantity == quantity).map(|e| &e.value)
    }

    pub fn entries(&self) -> &[LedgerEntry] {
        &self.0
    }
}

/// Right-hand side of an identity under one convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variant {
    pub name: String,
    pub rhs: BigInt,
    /// `lhs - rhs`
    pub residual: BigInt,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub formula: String,
    pub lhs_name: String,
    pub lhs: BigInt,
    pub default_variant: String,
    pub variants: Vec<Variant>,
    pub ledger: Ledger,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(formula: &str, lhs_name: &str, lhs: BigInt, default_variant: &str) -> Self {
        VerificationReport {
            formula: formula.into(),
            lhs_name: lhs_name.into(),
            lhs,
            default_variant: default_variant.into(),
            variants: Vec::new(),
            ledger: Ledger::default(),
            notes: Vec::new(),
        }
    }

    fn add_variant(&mut self, name: &str, rhs: BigInt) {
        let residual = &self.lhs - &rhs;
        let pass = residual.is_zero();
        self.variants.push(Variant {
            name: name.into(),
            rhs,
            residual,
            pass,
        });
    }

    pub fn variant(&self, name: &str) -> Option<&Variant> {
        self.variants.iter().find(|v| v.name == name)
    }

    /// Verdict under the default convention.
    pub fn passes(&self) -> bool {
        self.variant(&self.default_variant).is_some_and(|v| v.pass)
    }

    /// Adds a note for every variant whose verdict differs from the default.
    fn flag_disagreements(&mut self) {
        let Some(default) = self.variant(&self.default_variant).cloned() else {
            return;
        };
        let flagged: Vec<String> = self
            .variants
            .iter()
            .filter(|v| v.pass != default.pass)
            .map(|v| {
                format!(
                    "variant {} gives {} (residual {}) while {} gives {} (residual {})",
                    v.name, v.rhs, v.residual, default.name, default.rhs, default.residual
                )
            })
            .collect();
        self.notes.extend(flagged);
    }
}

/// Milnor total of one hypersurface or of `C`, with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorData {
    pub total: BigInt,
    pub route: String,
    pub certified: Option<MilnorReport>,
}

fn chart_text(chart: &Chart, vars: &Vars) -> String {
    format!("chart {} = 1", chart.label(vars))
}

pub fn divisor_milnor(spec: &ProblemSpec, d: &DivisorOnPn) -> Result<MilnorData> {
    let requested = spec.options.requested_chart();
    if let Some(points) = spec.singular_points.get(&d.name) {
        let r = certify_points(&d.equation, points, requested.as_ref())?;
        let route = format!(
            "generalized kernel of f on Q[x]/J(f), {}; {} certified point(s) sum to {}",
            chart_text(&r.chart, &spec.vars),
            r.per_point.len(),
            r.per_point_total()
        );
        return Ok(MilnorData {
            total: big(r.total),
            route,
            certified: Some(r),
        });
    }
    let (total, chart) = milnor_total(&d.equation, requested.as_ref())?;
    Ok(MilnorData {
        total: big(total),
        route: format!(
            "generalized kernel of f on Q[x]/J(f), {}",
            chart_text(&chart, &spec.vars)
        ),
        certified: None,
    })
}

pub fn curve_milnor(spec: &ProblemSpec, dec: &Decomposition) -> Result<MilnorData> {
    let requested = spec.options.requested_chart();
    let (f1, f2) = (&dec.d1.equation, &dec.d2.equation);
    if let Some(points) = spec.singular_points.get(CURVE_KEY) {
        let r = certify_curve_points(f1, f2, points, requested.as_ref())?;
        let route = format!(
            "global Lê-Greuel length, {}; {} certified point(s) sum to {}",
            chart_text(&r.chart, &spec.vars),
            r.per_point.len(),
            r.per_point_total()
        );
        return Ok(MilnorData {
            total: big(r.total),
            route,
            certified: Some(r),
        });
    }
    let (total, chart) = curve_milnor_total(f1, f2, requested.as_ref())?;
    Ok(MilnorData {
        total: big(total),
        route: format!("global Lê-Greuel length, {}", chart_text(&chart, &spec.vars)),
        certified: None,
    })
}

/// `chi(D) = int_D c_{n-1}(TX - [D]) - (-1)^{n-1} sum mu`.
pub fn euler_hypersurface(d: &DivisorOnPn, milnor_total: &BigInt) -> Result<BigInt> {
    let n = d.dim();
    Ok(divisor_chern_integral(n, d.degree())? - sign(n - 1) * milnor_total)
}

/// `chi(C) = int_C c_{n-2}(TX - [D1] (+) [D2]) - (-1)^{n-2} sum mu(C)`.
pub fn euler_intersection_curve(dec: &Decomposition, milnor_total_c: &BigInt) -> Result<BigInt> {
    let n = dec.d1.dim();
    if n < 2 {
        return Err(Error::InvalidInput("intersections need n >= 2".into()));
    }
    Ok(curve_chern_integral(n, dec.d1.degree(), dec.d2.degree())? - sign(n - 2) * milnor_total_c)
}

/// `chi(P^n)` as the degree of `c_n(T P^n)`.
pub fn euler_pn(n: usize) -> Result<BigInt> {
    to_integer(&tangent_class(n).integrate(), "c_n(T P^n)")
}

/// Everything the identities are assembled from.
#[derive(Clone, Debug)]
pub struct Ingredients {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub chi_pn: BigInt,
    /// `int c_n(Omega^1(log D))`
    pub log_top: BigInt,
    /// Per divisor: name, `int_D c_{n-1}(TX - [D])`, Milnor data, `chi(D)`.
    pub divisors: Vec<(String, BigInt, MilnorData, BigInt)>,
    /// `int_C c_{n-2}`, Milnor data and `chi(C)` for a decomposition.
    pub curve: Option<(BigInt, MilnorData, BigInt)>,
    pub ledger: Ledger,
    pub notes: Vec<String>,
}

impl Ingredients {
    pub fn mu_sum(&self) -> BigInt {
        self.divisors.iter().map(|(_, _, m, _)| m.total.clone()).sum()
    }

    pub fn mu_curve(&self) -> BigInt {
        self.curve
            .as_ref()
            .map_or_else(BigInt::zero, |(_, m, _)| m.total.clone())
    }

    pub fn integral_sum(&self) -> BigInt {
        self.divisors.iter().map(|(_, i, _, _)| i.clone()).sum()
    }

    pub fn curve_integral(&self) -> BigInt {
        self.curve.as_ref().map_or_else(BigInt::zero, |(i, _, _)| i.clone())
    }

    /// `chi(P^n) - sum chi(D_i) + chi(C)`.
    pub fn chi_inclusion_exclusion(&self) -> BigInt {
        let mut chi = self.chi_pn.clone();
        for (_, _, _, c) in &self.divisors {
            chi -= c;
        }
        if let Some((_, _, c)) = &self.curve {
            chi += c;
        }
        chi
    }

    /// `(-1)^n (int c_n(log) - sum mu - mu(C))`.
    pub fn chi_log_chern(&self) -> BigInt {
        sign(self.n) * (&self.log_top - self.mu_sum() - self.mu_curve())
    }
}

fn record_certificate(ledger: &mut Ledger, notes: &mut Vec<String>, label: &str, m: &MilnorData) {
    if let Some(r) = &m.certified {
        for c in &r.per_point {
            ledger.push(
                format!("mu_p({label}) at {}", fmt_point(&c.point)),
                &big(c.local_milnor),
                format!("local standard basis, chart x{} = 1", c.chart),
            );
        }
        if !r.certified_complete {
            notes.push(format!(
                "certified points of {label} sum to {} but the global route gives {}; the list is incomplete",
                r.per_point_total(),
                r.total
            ));
        }
    }
}

/// Computes the Chern integrals, Milnor totals and Euler characteristics of
/// every piece of the target.
pub fn ingredients(spec: &ProblemSpec) -> Result<Ingredients> {
    spec.validate()?;
    let n = spec.n;
    let mut ledger = Ledger::default();
    let mut notes = spec.warnings();
    let chi_pn = euler_pn(n)?;
    ledger.push(format!("chi(P^{n})"), &chi_pn, "degree of c_n(T P^n) = (1+h)^(n+1)");
    let pieces: Vec<DivisorOnPn> = match spec.target()? {
        Target::Single(d) => vec![d.clone()],
        Target::Pair(dec) => vec![dec.d1.clone(), dec.d2.clone()],
    };
    let degrees: Vec<u32> = pieces.iter().map(DivisorOnPn::degree).collect();
    let log_class = log_chern_class(n, &degrees)?;
    let log_top = to_integer(&log_class.integrate(), "c_n(Omega^1(log D))")?;
    ledger.push(
        "int c_n(Omega^1(log D))",
        &log_top,
        format!(
            "h^{n} coefficient of (1-h)^{}/prod(1-d_j h), degrees {:?}",
            n + 1,
            degrees
        ),
    );
    let mut divisors = Vec::new();
    for d in &pieces {
        let integral = divisor_chern_integral(n, d.degree())?;
        ledger.push(
            format!("int_{} c_{}(TX - [{}])", d.name, n - 1, d.name),
            &integral,
            format!(
                "{} * h^{} coefficient of (1+h)^{}/(1+{}h)",
                d.degree(),
                n - 1,
                n + 1,
                d.degree()
            ),
        );
        let m = divisor_milnor(spec, d)?;
        ledger.push(format!("mu({})", d.name), &m.total, m.route.clone());
        record_certificate(&mut ledger, &mut notes, &d.name, &m);
        let chi = euler_hypersurface(d, &m.total)?;
        ledger.push(format!("chi({})", d.name), &chi, "Chern integral minus (-1)^(n-1) mu");
        divisors.push((d.name.clone(), integral, m, chi));
    }
    let curve = match spec.target()? {
        Target::Single(_) => None,
        Target::Pair(dec) => {
            let integral = curve_chern_integral(n, dec.d1.degree(), dec.d2.degree())?;
            ledger.push(
                format!(
                    "int_C c_{}(TX - [{}] + [{}])",
                    n.saturating_sub(2),
                    dec.d1.name,
                    dec.d2.name
                ),
                &integral,
                format!(
                    "d1 d2 * h^{} coefficient of (1+h)^{}/((1+d1 h)(1+d2 h))",
                    n.saturating_sub(2),
                    n + 1
                ),
            );
            let m = curve_milnor(spec, &dec)?;
            ledger.push("mu(C)", &m.total, m.route.clone());
            record_certificate(&mut ledger, &mut notes, CURVE_KEY, &m);
            let chi = euler_intersection_curve(&dec, &m.total)?;
            ledger.push("chi(C)", &chi, "Chern integral minus (-1)^(n-2) mu(C)");
            Some((integral, m, chi))
        }
    };
    Ok(Ingredients {
        n,
        degrees,
        chi_pn,
        log_top,
        divisors,
        curve,
        ledger,
        notes,
    })
}

/// Euler characteristic of the complement by two routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementResult {
    pub value: BigInt,
    pub log_chern_route: BigInt,
    pub inclusion_exclusion_route: BigInt,
}

/// `chi(P^n \ D)` from the log Chern number and from inclusion-exclusion;
/// the two must agree.
pub fn euler_complement_from(ing: &Ingredients) -> Result<ComplementResult> {
    let a = ing.chi_log_chern();
    let b = ing.chi_inclusion_exclusion();
    if a != b {
        return Err(Error::RouteDisagreement {
            quantity: "chi(P^n \\ D)".into(),
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(ComplementResult {
        value: a.clone(),
        log_chern_route: a,
        inclusion_exclusion_route: b,
    })
}

pub fn euler_complement(spec: &ProblemSpec) -> Result<(ComplementResult, Ingredients)> {
    let mut ing = ingredients(spec)?;
    let r = euler_complement_from(&ing)?;
    ing.ledger.push(
        "chi(X~) [log Chern]",
        &r.log_chern_route,
        "(-1)^n (int c_n(log) - sum mu)",
    );
    ing.ledger.push(
        "chi(X~) [inclusion-exclusion]",
        &r.inclusion_exclusion_route,
        "chi(P^n) - sum chi(D_i) + chi(C)",
    );
    Ok((r, ing))
}

fn probe_notes() -> Result<Vec<String>> {
    // smallest case separating the two symmetric-function expressions
    let direct = to_integer(&log_chern_class(2, &[1, 1])?.integrate(), "probe")?;
    let args = [rat(0), rat(0)];
    let printed: Rat = (0..=2).map(|i| complete_symmetric(2 - i, &args)).sum();
    let derived = complete_symmetric(2, &args);
    Ok(vec![format!(
        "probe n=2, degrees (1,1): direct coefficient {direct}, sigma_n form {}, printed sum of sigma_(n-i) {}",
        fmt_rat(&derived),
        fmt_rat(&printed)
    )])
}

fn finish(mut report: VerificationReport, spec: &ProblemSpec, ing: Ingredients) -> Result<VerificationReport> {
    let mut ledger = ing.ledger;
    ledger.0.append(&mut report.ledger.0);
    report.ledger = ledger;
    let mut notes = ing.notes;
    notes.append(&mut report.notes);
    report.notes = notes;
    report.flag_disagreements();
    if spec.options.probes {
        report.notes.extend(probe_notes()?);
    }
    Ok(report)
}

/// `int c_n(Omega^1(log D)) = (-1)^n chi(X~) + sum mu`, with the curve term
/// for a decomposition under both signs.
pub fn verify_gauss_bonnet(spec: &ProblemSpec) -> Result<VerificationReport> {
    let (chi, ing) = euler_complement(spec)?;
    let n = ing.n;
    let s = sign(n);
    let chi_term = &s * &chi.inclusion_exclusion_route;
    let mu = ing.mu_sum();
    let mu_c = ing.mu_curve();
    let integrals = ing.integral_sum();
    let mut r;
    if ing.curve.is_some() {
        r = VerificationReport::new(
            "gauss-bonnet",
            "int c_n(Omega^1(log D))",
            ing.log_top.clone(),
            "proof-sign",
        );
        r.add_variant("proof-sign", &chi_term + &mu + &mu_c);
        r.add_variant("printed-sign", &chi_term + &mu - &mu_c);
        let bracket = &ing.chi_pn - &integrals;
        r.add_variant("term-form-proof", &s * (&bracket + ing.curve_integral()));
        r.add_variant("term-form-printed", &s * &bracket + ing.curve_integral());
    } else {
        r = VerificationReport::new(
            "gauss-bonnet",
            "int c_n(Omega^1(log D))",
            ing.log_top.clone(),
            "isolated",
        );
        r.add_variant("isolated", &chi_term + &mu);
        r.add_variant("term-form", &s * (&ing.chi_pn - &integrals));
    }
    finish(r, spec, ing)
}

/// Poincaré-Hopf type identity for a logarithmic field: `chi(X~)` from the
/// indices, GSV totals and Milnor numbers.
pub fn verify_poincare_hopf(spec: &ProblemSpec) -> Result<VerificationReport> {
    let v = spec
        .field
        .as_ref()
        .ok_or_else(|| Error::MissingData("vector_field".into()))?;
    let pieces: Vec<DivisorOnPn> = match spec.target()? {
        Target::Single(d) => vec![d.clone()],
        Target::Pair(dec) => vec![dec.d1, dec.d2],
    };
    let mut tangency = Ledger::default();
    for d in &pieces {
        if !is_logarithmic(v, d.equation())? {
            return Err(Error::NotLogarithmic(d.name.clone()));
        }
        if let Some(c) = logarithmic_cofactor(v, d.equation())? {
            let route = format!("v(F) = {} F, membership in (F) by normal form", fmt_rat(&c));
            tangency.push(format!("v tangent to {}", d.name), &BigInt::one(), route);
        }
    }
    let named: Vec<(String, HomogPoly)> = pieces.iter().map(|d| (d.name.clone(), d.equation.clone())).collect();
    let idx = index_report(v, &named)?;
    let (chi, ing) = euler_complement(spec)?;
    let n = ing.n;
    let sm = sign(n - 1);
    let ph = big(idx.ph_total);
    let gsv: BigInt = idx.divisors.iter().map(|d| d.gsv_total.clone()).sum();
    let mu = ing.mu_sum();
    let mu_c = ing.mu_curve();
    let mut r;
    let mut ledger = tangency;
    record_indices(&mut ledger, &idx);
    if let Target::Pair(dec) = spec.target()? {
        let gsv_c = crate::indices::gsv_total_curve(v, dec.d1.equation(), dec.d2.equation())?;
        ledger.push("GSV(v, C)", &gsv_c, "int_C c_(n-2)(TX - [D1] + [D2])");
        r = VerificationReport::new("poincare-hopf", "chi(X~)", chi.value.clone(), "proof-sign");
        let base = &ph - &gsv + &gsv_c;
        r.add_variant("proof-sign", &base + &sm * (&mu + &mu_c));
        r.add_variant("printed-sign", &base + &sm * (&mu - &mu_c));
    } else {
        r = VerificationReport::new("poincare-hopf", "chi(X~)", chi.value.clone(), "isolated");
        r.add_variant("isolated", &ph - &gsv + &sm * &mu);
        let d = &idx.divisors[0];
        match (&d.residual_at_singular, idx.all_nondegenerate) {
            (Some(gsv_sing), true) => {
                let on_reg: usize = idx
                    .zeros
                    .iter()
                    .filter(|z| d.smooth_zeros.contains(&z.point))
                    .map(|z| z.ph)
                    .sum();
                let off_reg = &ph - big(on_reg);
                r.add_variant("non-degenerate-printed", &off_reg - (gsv_sing + &sm * &mu));
                r.add_variant("non-degenerate-derived", &off_reg - (gsv_sing - &sm * &mu));
            }
            _ => r
                .notes
                .push("field has degenerate zeros; non-degenerate variants skipped".into()),
        }
    }
    r.ledger = ledger;
    finish(r, spec, ing)
}

fn record_indices(ledger: &mut Ledger, idx: &IndexReport) {
    for z in &idx.zeros {
        ledger.push(
            format!("PH(v) at {}", fmt_point(&z.point)),
            &big(z.ph),
            "local algebra of chart components",
        );
    }
    ledger.push("PH(v, Sing(v))", &big(idx.ph_total), "sum over eigenlines");
    for d in &idx.divisors {
        ledger.push(format!("GSV(v, {})", d.name), &d.gsv_total, "int_D c_(n-1)(TX - [D])");
        if let Some(res) = &d.residual_at_singular {
            ledger.push(
                format!("GSV(v, {}) at Sing({})", d.name, d.name),
                res,
                "total minus PH at non-degenerate zeros on the smooth part",
            );
        }
    }
}

/// `int c_n(Omega^1(log D)) = (-1)^n chi(X~)` for a smooth normal crossings
/// arrangement of hypersurfaces of the given degrees. Smoothness and
/// transversality are assumed, not checked.
pub fn nsa_baseline(n: usize, degrees: &[u32]) -> Result<VerificationReport> {
    if n < 1 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if degrees.len() > 16 {
        return Err(Error::InvalidInput("at most 16 divisors".into()));
    }
    let lhs = to_integer(&snc_log_chern_class(n, degrees)?.integrate(), "c_n(Omega^1(log D))")?;
    let mut r = VerificationReport::new("nsa", "int c_n(Omega^1(log D))", lhs.clone(), "inclusion-exclusion");
    r.ledger.push(
        "int c_n(Omega^1(log D))",
        &lhs,
        format!("normal crossings class, degrees {degrees:?}"),
    );
    let mut chi = BigInt::zero();
    for mask in 0u32..(1 << degrees.len()) {
        let subset: Vec<u32> = (0..degrees.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| degrees[i])
            .collect();
        let value = if subset.is_empty() {
            euler_pn(n)?
        } else {
            complete_intersection_integral(n, &subset)?
        };
        if !subset.is_empty() {
            r.ledger.push(
                format!("chi(D_S), degrees {subset:?}"),
                &value,
                "Chern integral of a smooth complete intersection",
            );
        }
        chi += sign(subset.len()) * value;
    }
    r.ledger.push("chi(X~)", &chi, "inclusion-exclusion");
    r.add_variant("inclusion-exclusion", sign(n) * &chi);
    r.notes.push("smoothness and normal crossings are assumed".into());
    if n < 3 {
        r.notes.push(format!("n = {n} < 3"));
    }
    Ok(r)
}

/// [`nsa_baseline`] for the divisors of a problem, after checking that every
/// piece and the curve `C` are smooth.
pub fn verify_nsa(spec: &ProblemSpec) -> Result<VerificationReport> {
    let ing = ingredients(spec)?;
    for (name, _, m, _) in &ing.divisors {
        if !m.total.is_zero() {
            return Err(Error::NotNormalCrossings(format!(
                "{name} has Milnor total {}",
                m.total
            )));
        }
    }
    if !ing.mu_curve().is_zero() {
        return Err(Error::NotNormalCrossings(format!(
            "C has Milnor total {}",
            ing.mu_curve()
        )));
    }
    let mut r = nsa_baseline(ing.n, &ing.degrees)?;
    let mut ledger = ing.ledger;
    ledger.0.append(&mut r.ledger.0);
    r.ledger = ledger;
    r.notes.retain(|n| !n.starts_with("smoothness"));
    r.notes.insert(
        0,
        "pieces and their intersection are smooth (all Milnor totals vanish)".into(),
    );
    Ok(r)
}

/// Closed forms for `chi(P^n \ D)` in terms of the degrees, compared with
/// the value from [`euler_complement`].
pub fn corollary_pn_report(spec: &ProblemSpec) -> Result<VerificationReport> {
    let (chi, ing) = euler_complement(spec)?;
    let n = ing.n;
    let mu = ing.mu_sum();
    let mu_c = ing.mu_curve();
    let s1 = sign(n + 1);
    let mut r;
    match ing.degrees.as_slice() {
        [d] => {
            r = VerificationReport::new("corollary-pn", "chi(X~)", chi.value.clone(), "alternating-sum");
            let base = rat(i64::from(*d) - 1);
            let alt: Rat = (0..=n).map(|i| num_traits::pow(-base.clone(), i)).sum();
            let alt = to_integer(&alt, "sum (-1)^i (d-1)^i")?;
            r.ledger.push("sum (-1)^i (d-1)^i", &alt, "closed form");
            let tt = to_integer(&twisted_top_chern(n, i64::from(*d))?, "c_n(T(-d))")?;
            r.ledger.push(
                "c_n(T P^n (x) O(-d))",
                &tt,
                "sum (1-d)^i, checked against the binomial expansion",
            );
            r.add_variant("alternating-sum", &alt + &s1 * &mu);
        }
        [d1, d2] => {
            r = VerificationReport::new("corollary-pn", "chi(X~)", chi.value.clone(), "sigma-n");
            let args = [rat(i64::from(*d1) - 1), rat(i64::from(*d2) - 1)];
            let sigma_n = to_integer(&complete_symmetric(n, &args), "sigma_n")?;
            let printed: Rat = (0..=n).map(|i| complete_symmetric(n - i, &args)).sum();
            let printed = to_integer(&printed, "sum sigma_(n-i)")?;
            r.ledger
                .push("sigma_n(d1-1, d2-1)", &sigma_n, "complete symmetric function");
            r.ledger.push(
                "sum_i sigma_(n-i)(d1-1, d2-1)",
                &printed,
                "complete symmetric functions",
            );
            if sigma_n != ing.log_top {
                r.notes.push(format!(
                    "sigma_n = {sigma_n} differs from the direct coefficient {}",
                    ing.log_top
                ));
            }
            if printed != ing.log_top {
                r.notes.push(format!(
                    "sum of sigma_(n-i) = {printed} differs from the direct coefficient {}",
                    ing.log_top
                ));
            }
            r.add_variant("sigma-n", sign(n) * &sigma_n + &s1 * (&mu + &mu_c));
            r.add_variant("printed-sigma-sum", sign(n) * &printed + &s1 * (&mu - &mu_c));
        }
        _ => return Err(Error::UnsupportedDivisorCount(ing.degrees.len())),
    }
    finish(r, spec, ing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::Matrix;

    fn p3() -> Vars {
        Vars::numbered("x", 4)
    }

    fn single(eq: &str) -> ProblemSpec {
        ProblemSpec::new(p3(), vec![DivisorOnPn::parse("D", eq, &p3()).unwrap()]).unwrap()
    }

    fn pair(eq1: &str, eq2: &str) -> ProblemSpec {
        let mut s = ProblemSpec::new(
            p3(),
            vec![
                DivisorOnPn::parse("D1", eq1, &p3()).unwrap(),
                DivisorOnPn::parse("D2", eq2, &p3()).unwrap(),
            ],
        )
        .unwrap();
        s.decomposition = Some(("D1".into(), "D2".into()));
        s
    }

    const NODAL: &str = "x0*x3^2 + x0^3 + x2^2*x3 - x1^3 - x1^2*x3";

    #[test]
    fn euler_characteristics() {
        let quadric = single("x0^2 + x1^2 + x2^2 + x3^2");
        let (c, ing) = euler_complement(&quadric).unwrap();
        assert_eq!(c.value, BigInt::zero());
        assert_eq!(ing.divisors[0].3, BigInt::from(4));
        let cone = single("x0*x1 - x2^2");
        let (c, ing) = euler_complement(&cone).unwrap();
        assert_eq!(c.value, BigInt::one());
        assert_eq!(ing.divisors[0].3, BigInt::from(3));
        let mut cayley = single("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3");
        cayley.options.chart_form = Some(vec![rat(1), rat(1), rat(1), rat(1)]);
        let (c, ing) = euler_complement(&cayley).unwrap();
        assert_eq!(c.value, BigInt::from(-1));
        assert_eq!(ing.divisors[0].3, BigInt::from(5));
    }

    #[test]
    fn curve_euler_characteristics() {
        let conic = pair("x3", "x0^2 + x1^2 + x2^2 + x3^2");
        let ing = ingredients(&conic).unwrap();
        assert_eq!(ing.curve.as_ref().unwrap().2, BigInt::from(2));
        let nodal = pair("x0", NODAL);
        let ing = ingredients(&nodal).unwrap();
        assert_eq!(ing.curve.as_ref().unwrap().2, BigInt::one());
        assert_eq!(ing.divisors[1].2.total, BigInt::zero());
        let lines = pair("x0", "x1");
        let ing = ingredients(&lines).unwrap();
        assert_eq!(ing.curve.as_ref().unwrap().2, BigInt::from(2));
    }

    #[test]
    fn gauss_bonnet_sign_adjudication() {
        let r = verify_gauss_bonnet(&pair("x0", NODAL)).unwrap();
        assert_eq!(r.lhs, BigInt::from(8));
        assert_eq!(r.variant("proof-sign").unwrap().rhs, BigInt::from(8));
        assert_eq!(r.variant("printed-sign").unwrap().rhs, BigInt::from(6));
        assert!(r.passes());
        assert!(r.notes.iter().any(|n| n.contains("printed-sign")));
        let transverse = verify_gauss_bonnet(&pair("x3", "x0^2 + x1^2 + x2^2 + x3^2")).unwrap();
        assert_eq!(transverse.lhs, BigInt::one());
        assert!(transverse
            .variants
            .iter()
            .filter(|v| v.name.ends_with("sign"))
            .all(|v| v.pass));
        assert!(!transverse.variant("term-form-printed").unwrap().pass);
    }

    #[test]
    fn poincare_hopf_cone() {
        let mut cone = single("x0*x1 - x2^2");
        cone.field = Some(VectorFieldPn::from_matrix(Matrix::diagonal(&[rat(0), rat(2), rat(1), rat(5)])).unwrap());
        let r = verify_poincare_hopf(&cone).unwrap();
        assert_eq!(r.lhs, BigInt::one());
        assert!(r.passes());
        assert!(r.variant("non-degenerate-derived").unwrap().pass);
        assert!(!r.variant("non-degenerate-printed").unwrap().pass);
        assert_eq!(r.ledger.get("PH(v, Sing(v))"), Some(&BigInt::from(4)));
        assert_eq!(r.ledger.get("GSV(v, D)"), Some(&BigInt::from(4)));
        cone.field = Some(VectorFieldPn::from_matrix(Matrix::diagonal(&[rat(1), rat(0), rat(0), rat(0)])).unwrap());
        assert!(matches!(verify_poincare_hopf(&cone), Err(Error::NotLogarithmic(_))));
    }

    #[test]
    fn poincare_hopf_smooth_quadric() {
        let mut q = single("x0*x1 + x2*x3");
        q.field = Some(VectorFieldPn::from_matrix(Matrix::diagonal(&[rat(0), rat(3), rat(1), rat(2)])).unwrap());
        let r = verify_poincare_hopf(&q).unwrap();
        assert_eq!(r.lhs, BigInt::zero());
        assert!(r.passes());
    }

    #[test]
    fn nsa_examples() {
        let r = nsa_baseline(3, &[1, 2]).unwrap();
        assert_eq!(r.lhs, BigInt::one());
        assert!(r.passes());
        let r = nsa_baseline(2, &[1, 1]).unwrap();
        assert_eq!(r.lhs, BigInt::zero());
        assert!(r.passes());
        assert!(nsa_baseline(4, &[1, 1, 2, 3]).unwrap().passes());
    }

    #[test]
    fn corollary_pn() {
        let r = corollary_pn_report(&single("x0^3 + x1^3 + x2^3 + x3^3")).unwrap();
        assert_eq!(r.lhs, BigInt::from(-5));
        assert!(r.passes());
        let r = corollary_pn_report(&pair("x3", "x0^2 + x1^2 + x2^2 + x3^2")).unwrap();
        assert_eq!(r.lhs, BigInt::from(-1));
        assert!(r.passes());
        assert_eq!(r.variant("printed-sigma-sum").unwrap().rhs, BigInt::from(-4));
        let r = corollary_pn_report(&pair("x0", NODAL)).unwrap();
        assert_eq!(r.lhs, BigInt::from(-7));
        assert!(r.passes());
    }

    #[test]
    fn spec_validation() {
        let mut s = pair("x0", "x1");
        s.total = Some("D1".into());
        assert!(s.validate().is_err());
        let d = DivisorOnPn::parse("C", "x0", &p3()).unwrap();
        assert!(ProblemSpec::new(p3(), vec![d]).is_err());
        let two = ProblemSpec::new(
            p3(),
            vec![
                DivisorOnPn::parse("A", "x0", &p3()).unwrap(),
                DivisorOnPn::parse("B", "x1", &p3()).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(two.target(), Err(Error::MissingData(_))));
    }
}
