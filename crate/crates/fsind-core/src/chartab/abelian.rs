//! Character tables of abelian subgroups via the dual group.
//!
//! Characters of an abelian group `A` with exponent `N` take values in the
//! `N`-th roots of unity, so each one is stored as a map from elements to
//! exponents of `zeta_N`. The dual group is built by extending characters
//! along a chain `A_0 = 1 < A_1 < ... < A`, one generator at a time.

use std::collections::HashMap;

use crate::perm::{Permutation, Subgroup};

/// All `|A|` characters as exponent maps, together with the exponent `N`.
pub fn dual_characters(sub: &Subgroup) -> (u64, Vec<HashMap<Permutation, u64>>) {
    let n_exp = sub.exponent();
    let id = Permutation::identity(sub.parent_degree);
    let mut members: Vec<Permutation> = vec![id.clone()];
    let mut chars: Vec<HashMap<Permutation, u64>> = vec![HashMap::from([(id, 0u64)])];

    for g in &sub.elements {
        if chars[0].contains_key(g) {
            continue;
        }
        // d = smallest positive power of g landing in the current subgroup
        let mut d = 1u64;
        let mut gp = g.clone();
        while !chars[0].contains_key(&gp) {
            gp = gp.mul(g);
            d += 1;
        }
        let mut next_chars = Vec::with_capacity(chars.len() * d as usize);
        for chi in &chars {
            // chi(g^d) = zeta^s; the d extensions send g to zeta^c with
            // d*c = s (mod N)
            let s = chi[&gp];
            debug_assert_eq!(s % d, 0);
            for k in 0..d {
                let c = (s / d + k * (n_exp / d)) % n_exp;
                let mut ext = HashMap::with_capacity(chi.len() * d as usize);
                for (a, &v) in chi {
                    let mut ag = a.clone();
                    for t in 0..d {
                        ext.insert(ag.clone(), (v + c * t) % n_exp);
                        if t + 1 < d {
                            ag = ag.mul(g);
                        }
                    }
                }
                next_chars.push(ext);
            }
        }
        let mut next_members = Vec::with_capacity(members.len() * d as usize);
        for a in &members {
            let mut ag = a.clone();
            for t in 0..d {
                next_members.push(ag.clone());
                if t + 1 < d {
                    ag = ag.mul(g);
                }
            }
        }
        members = next_members;
        chars = next_chars;
        if members.len() == sub.order() {
            break;
        }
    }
    assert_eq!(chars.len(), sub.order());
    (n_exp, chars)
}
