//! Term lists kept sorted by a runtime monomial order.

use num_traits::{One, Zero};

use super::MonOrder;
use crate::poly::{Monomial, Poly, Rat, Vars};

/// Terms in increasing order; the leading term is the last one.
#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    pub(crate) terms: Vec<(Monomial, Rat)>,
}

impl SortedPoly {
    pub(crate) fn from_poly(p: &Poly, order: MonOrder) -> Self {
        let mut terms: Vec<(Monomial, Rat)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub(crate) fn to_poly(&self, vars: &Vars) -> Poly {
        Poly::from_terms(vars, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("leading monomial of zero").0
    }

    pub(crate) fn lc(&self) -> &Rat {
        &self.terms.last().expect("leading coefficient of zero").1
    }

    /// `deg(f) - deg(LM(f))`, the écart used by Mora's normal form.
    pub(crate) fn ecart(&self) -> u32 {
        let max = self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        max - self.lm().degree()
    }

    pub(crate) fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `self - c * m * g`, merged in one pass.
    pub(crate) fn sub_scaled(&self, c: &Rat, m: &Monomial, g: &SortedPoly, order: MonOrder) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, -bc));
                }
                (Some((am, _)), Some((bm, _))) => match order.cmp(am, bm) {
                    std::cmp::Ordering::Less => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Greater => {
                        let (bm, bc) = b.next().unwrap();
                        out.push((bm, -bc));
                    }
                    std::cmp::Ordering::Equal => {
                        let (am, ac) = a.next().unwrap();
                        let (_, bc) = b.next().unwrap();
                        let s = ac - bc;
                        if !s.is_zero() {
                            out.push((am.clone(), s));
                        }
                    }
                },
            }
        }
        SortedPoly { terms: out }
    }

    /// Cancels the leading term of `self` against `g`, whose leading monomial
    /// must divide it.
    pub(crate) fn reduce_lead_by(&self, g: &SortedPoly, order: MonOrder) -> SortedPoly {
        let q = self.lm().div(g.lm()).expect("leading monomial divides");
        let c = self.lc() / g.lc();
        self.sub_scaled(&c, &q, g, order)
    }

    /// S-polynomial of two nonzero polynomials.
    pub(crate) fn spoly(f: &SortedPoly, g: &SortedPoly, order: MonOrder) -> SortedPoly {
        let l = f.lm().lcm(g.lm());
        let mf = l.div(f.lm()).unwrap();
        let mg = l.div(g.lm()).unwrap();
        let scaled_f = SortedPoly::zero().sub_scaled(&-f.lc().recip(), &mf, f, order);
        scaled_f.sub_scaled(&g.lc().recip(), &mg, g, order)
    }

    pub(crate) fn monomial(m: Monomial) -> SortedPoly {
        SortedPoly {
            terms: vec![(m, Rat::one())],
        }
    }

    /// Drops every term of degree `>= d`.
    pub(crate) fn truncate(&mut self, d: u32) {
        self.terms.retain(|(m, _)| m.degree() < d);
    }

    pub(crate) fn zero() -> SortedPoly {
        SortedPoly { terms: Vec::new() }
    }
}
