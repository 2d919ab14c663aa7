//! Buchberger's algorithm with the normal selection strategy, the product
//! criterion and the Gebauer-Möller form of the chain criterion.

use super::sorted::SortedPoly;
use super::MonOrder;
use crate::poly::Monomial;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Full reduction of `f` by `basis` (leading and tail terms).
pub(crate) fn reduce_full(mut f: SortedPoly, basis: &[SortedPoly], order: MonOrder) -> SortedPoly {
    let mut remainder: Vec<(Monomial, crate::poly::Rat)> = Vec::new();
    while !f.is_zero() {
        match basis.iter().find(|g| g.lm().divides(f.lm())) {
            Some(g) => f = f.reduce_lead_by(g, order),
            None => remainder.push(f.terms.pop().expect("nonzero")),
        }
    }
    remainder.reverse();
    SortedPoly { terms: remainder }
}

fn add_generator(basis: &mut Vec<SortedPoly>, pairs: &mut Vec<Pair>, h: SortedPoly) {
    let k = basis.len();
    let lm_h = h.lm().clone();
    // chain criterion: (i, j) is redundant once LM(h) | lcm(i, j) strictly inside
    pairs.retain(|p| {
        !(lm_h.divides(&p.lcm) && basis[p.i].lm().lcm(&lm_h) != p.lcm && basis[p.j].lm().lcm(&lm_h) != p.lcm)
    });
    for (i, g) in basis.iter().enumerate() {
        // product criterion
        if g.lm().coprime(&lm_h) {
            continue;
        }
        pairs.push(Pair {
            i,
            j: k,
            lcm: g.lm().lcm(&lm_h),
        });
    }
    basis.push(h);
}

fn select_pair(pairs: &mut Vec<Pair>, order: MonOrder) -> Option<Pair> {
    let best = (0..pairs.len()).min_by(|&a, &b| {
        order
            .cmp(&pairs[a].lcm, &pairs[b].lcm)
            .then((pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
    })?;
    Some(pairs.swap_remove(best))
}

/// Reduced Gröbner basis, monic, sorted by decreasing leading monomial.
pub(crate) fn reduced_groebner(gens: Vec<SortedPoly>, order: MonOrder) -> Vec<SortedPoly> {
    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for mut g in gens.into_iter().filter(|g| !g.is_zero()) {
        g = reduce_full(g, &basis, order);
        if g.is_zero() {
            continue;
        }
        g.make_monic();
        if g.lm().is_one() {
            return vec![g];
        }
        add_generator(&mut basis, &mut pairs, g);
    }
    while let Some(p) = select_pair(&mut pairs, order) {
        let s = SortedPoly::spoly(&basis[p.i], &basis[p.j], order);
        let mut h = reduce_full(s, &basis, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            return vec![h];
        }
        add_generator(&mut basis, &mut pairs, h);
    }
    interreduce(basis, order)
}

fn interreduce(basis: Vec<SortedPoly>, order: MonOrder) -> Vec<SortedPoly> {
    // keep one generator per minimal leading monomial
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
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let mut g = minimal[i].clone();
        let lead = g.terms.pop().expect("nonzero");
        let others: Vec<SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let mut tail = reduce_full(g, &others, order);
        tail.terms.push(lead);
        tail.make_monic();
        out.push(tail);
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    out
}
