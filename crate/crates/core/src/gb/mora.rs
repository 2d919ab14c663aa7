//! Mora's tangent cone algorithm for the local degree order.
//!
//! The weak normal form only cancels leading terms and may multiply the
//! input by a unit of the local ring; that is enough to decide membership
//! and to compute leading ideals.
//!
//! With a truncation degree `d` every term of degree `>= d` is dropped, which
//! computes a standard basis of `I + m^d` inside the finite-dimensional ring
//! `O / m^d`.

use super::sorted::SortedPoly;
use super::MonOrder;
use crate::poly::Monomial;

/// Mora's weak normal form with écart-minimal divisor selection.
pub(crate) fn weak_normal_form(
    f: SortedPoly,
    basis: &[SortedPoly],
    order: MonOrder,
    truncate: Option<u32>,
) -> SortedPoly {
    let mut h = f;
    if let Some(d) = truncate {
        h.truncate(d);
    }
    let mut extra: Vec<SortedPoly> = Vec::new();
    while !h.is_zero() {
        let lm = h.lm().clone();
        let best = basis
            .iter()
            .chain(extra.iter())
            .filter(|g| g.lm().divides(&lm))
            .min_by_key(|g| g.ecart())
            .cloned();
        let Some(g) = best else { return h };
        if g.ecart() > h.ecart() {
            extra.push(h.clone());
        }
        h = h.reduce_lead_by(&g, order);
        if let Some(d) = truncate {
            h.truncate(d);
        }
    }
    h
}

struct Pair {
    i: usize,
    j: usize,
    lcm_degree: u32,
}

/// Standard basis; the result is minimal (no leading monomial divides
/// another) but not reduced. With `truncate = Some(d)` it is a basis of
/// `I + m^d` and contains the monomials of degree `d`.
pub(crate) fn standard_basis(
    gens: Vec<SortedPoly>,
    order: MonOrder,
    truncate: Option<u32>,
    nvars: usize,
) -> Vec<SortedPoly> {
    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let add = |basis: &mut Vec<SortedPoly>, pairs: &mut Vec<Pair>, mut h: SortedPoly| -> bool {
        h.make_monic();
        if h.lm().is_one() {
            basis.clear();
            basis.push(h);
            return true;
        }
        let k = basis.len();
        let lm_h = h.lm().clone();
        pairs.retain(|p| {
            let l = basis[p.i].lm().lcm(basis[p.j].lm());
            !(lm_h.divides(&l) && basis[p.i].lm().lcm(&lm_h) != l && basis[p.j].lm().lcm(&lm_h) != l)
        });
        for (i, g) in basis.iter().enumerate() {
            if !g.lm().coprime(&lm_h) {
                pairs.push(Pair {
                    i,
                    j: k,
                    lcm_degree: g.lm().lcm(&lm_h).degree(),
                });
            }
        }
        basis.push(h);
        false
    };
    for mut g in gens {
        if let Some(d) = truncate {
            g.truncate(d);
        }
        if g.is_zero() {
            continue;
        }
        if add(&mut basis, &mut pairs, g) {
            return basis;
        }
    }
    while let Some(best) = (0..pairs.len()).min_by_key(|&a| (pairs[a].lcm_degree, pairs[a].j, pairs[a].i)) {
        let p = pairs.swap_remove(best);
        let s = SortedPoly::spoly(&basis[p.i], &basis[p.j], order);
        let h = weak_normal_form(s, &basis, order, truncate);
        if !h.is_zero() && add(&mut basis, &mut pairs, h) {
            return basis;
        }
    }
    if let Some(d) = truncate {
        basis.extend(Monomial::all_of_degree(nvars, d).into_iter().map(SortedPoly::monomial));
    }
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    minimal
}
