//! Constructive certificates that the summation domain `{h : (uh)^m = h^m}`
//! is nonempty: an explicit `h` with `(uh)^m = h^m = id`, built cycle by
//! cycle for even `m` and from three structural patterns for `m = 3`.
//!
//! The index patterns are easy to get wrong, so every constructed `h` is
//! validated against the defining property before it is returned; the
//! validator, not the construction, is authoritative.

use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    EvenM,
    M3SingleOddCycle,
    M3TranspositionByEvenCycle,
    M3FourCycleByEvenCycle,
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub u: Permutation,
    pub m: u64,
    pub h: Permutation,
    pub kind: WitnessKind,
}

fn validated(u: &Permutation, m: u64, h: Permutation, kind: WitnessKind) -> Witness {
    let hm = h.power(m);
    assert!(hm.is_identity(), "witness power is not the identity: u={u} m={m} h={h}");
    assert!(
        u.mul(&h).power(m).is_identity(),
        "witness fails (uh)^m = id: u={u} m={m} h={h}"
    );
    Witness { u: u.clone(), m, h, kind }
}

/// For even `m`: reversing each cycle of `u` by a palindrome of
/// transpositions gives `h` with `h^2 = (uh)^2 = id`.
pub fn even_m_witness(u: &Permutation, m: u64) -> Witness {
    assert!(m % 2 == 0, "construction requires even m");
    let n = u.degree();
    let mut h = Permutation::identity(n);
    for cycle in u.cycles() {
        let k = cycle.len();
        for j in 0..k / 2 {
            let t = Permutation::from_cycles(n, &[&[cycle[j], cycle[k - 1 - j]]]).unwrap();
            h = h.mul(&t);
        }
    }
    validated(u, m, h, WitnessKind::EvenM)
}

/// For `m = 3` and three families of even `u` (fixed points ignored):
/// a single odd cycle, a transposition times one even cycle, and a 4-cycle
/// times an even cycle of length at least 4. Other shapes return `None`.
pub fn m3_witness(u: &Permutation) -> Option<Witness> {
    let n = u.degree();
    let cycles = u.cycles();
    match cycles.len() {
        0 => Some(validated(u, 3, Permutation::identity(n), WitnessKind::M3SingleOddCycle)),
        1 => {
            let a = &cycles[0];
            let k = a.len();
            if k % 2 == 0 {
                return None;
            }
            // k = 4b+3: triples (a_{3j-1}, a_{k-2-j}, a_{3j}) for j <= b;
            // k = 4b+1: the same with the last triple dropped
            let upto = if k % 4 == 3 { (k - 3) / 4 } else { (k - 1) / 4 - 1 };
            let mut parts: Vec<Vec<u8>> = vec![vec![a[k - 1], a[k - 2], a[k - 3]]];
            for j in 1..=upto {
                parts.push(vec![a[3 * j - 2], a[k - 3 - j], a[3 * j - 1]]);
            }
            let refs: Vec<&[u8]> = parts.iter().map(|v| v.as_slice()).collect();
            let h = Permutation::from_cycles(n, &refs).unwrap();
            Some(validated(u, 3, h, WitnessKind::M3SingleOddCycle))
        }
        2 => {
            let (small, big) = if cycles[0].len() <= cycles[1].len() {
                (&cycles[0], &cycles[1])
            } else {
                (&cycles[1], &cycles[0])
            };
            if big.len() % 2 != 0 {
                return None;
            }
            if small.len() == 2 {
                // labels a_1 a_2 on the transposition, a_3.. on the cycle
                let a: Vec<u8> = small.iter().chain(big.iter()).copied().collect();
                let two_r = a.len();
                let r = two_r / 2;
                let j_max = if r % 2 == 1 { (r - 1) / 2 } else { r / 2 - 1 };
                let mut parts: Vec<Vec<u8>> = vec![vec![a[0], a[1], a[2]]];
                for j in 1..=j_max {
                    parts.push(vec![a[3 * j], a[two_r - j], a[3 * j + 1]]);
                }
                let refs: Vec<&[u8]> = parts.iter().map(|v| v.as_slice()).collect();
                let h = Permutation::from_cycles(n, &refs).unwrap();
                Some(validated(u, 3, h, WitnessKind::M3TranspositionByEvenCycle))
            } else if small.len() == 4 && big.len() >= 4 {
                let a: Vec<u8> = small.iter().chain(big.iter()).copied().collect();
                let two_r = a.len();
                let r = two_r / 2;
                let j_max = if r % 2 == 1 { (r - 3) / 2 } else { r.saturating_sub(4) / 2 };
                let mut parts: Vec<Vec<u8>> =
                    vec![vec![a[1], a[0], a[4]], vec![a[6], a[3], a[2]]];
                for j in 1..=j_max {
                    parts.push(vec![a[2 * j + 5], a[two_r + 1 - 2 * j], a[2 * j + 6]]);
                }
                let refs: Vec<&[u8]> = parts.iter().map(|v| v.as_slice()).collect();
                let h = Permutation::from_cycles(n, &refs).unwrap();
                Some(validated(u, 3, h, WitnessKind::M3FourCycleByEvenCycle))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// True iff the scan is provably empty on parity grounds: odd `u`, odd `m`.
pub fn parity_emptiness(u: &Permutation, m: u64) -> bool {
    crate::indicator::parity_skip(u, m)
}
