//! Permutations of `{1..n}`, symmetric-group context (classes, centralizers,
//! exponent) and subgroup element handling.
//!
//! The composition convention throughout is `(p * q)(i) = p(q(i))`: `q` acts
//! first. Elements are ordered lexicographically on their image sequences,
//! which makes every derived listing reproducible.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image sequence is not a bijection of 1..={0}")]
    NotABijection(usize),
    #[error("invalid cycle notation: {0}")]
    BadCycleText(String),
    #[error("subgroup is not closed under products")]
    NotClosed,
}

/// A permutation of `{1..n}` stored as its image sequence: `images[i-1]` is
/// the image of the point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(PermError::NotABijection(n));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `degree` from disjoint cycles given as point
    /// lists, e.g. `&[&[1, 2, 3], &[4, 5]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u8]]) -> Result<Self, PermError> {
        let mut images: Vec<u8> = (1..=degree as u8).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                if from == 0 || from > degree {
                    return Err(PermError::BadCycleText(format!("point {from} out of range")));
                }
                images[from - 1] = to;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the point `i` (1-based).
    #[inline]
    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `(p * q)(i) = p(q(i))`; `q` acts first.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&x| self.images[x as usize - 1]).collect(),
        })
    }

    /// Infallible composition for same-degree operands; panics on mismatch.
    #[inline]
    pub fn mul(&self, q: &Permutation) -> Permutation {
        self.compose(q).expect("degree mismatch")
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { images }
    }

    /// `p^m` by repeated squaring; `p^0` is the identity.
    pub fn power(&self, m: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut m = m;
        while m > 0 {
            if m & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            m >>= 1;
        }
        result
    }

    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        x.mul(self).mul(&x.inverse())
    }

    /// Disjoint cycles in canonical order: each cycle starts at its minimal
    /// point, cycles sorted by starting point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n as u8 {
            if seen[start as usize] || self.apply(start) == start {
                seen[start as usize] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = parts.iter().sum();
        parts.extend(std::iter::repeat(1).take(n - moved));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// `+1` for even, `-1` for odd: `(-1)^(n - #cycles)` counting fixed points.
    pub fn parity(&self) -> i32 {
        let moved_cycles = self.cycles().len();
        let moved_points: usize = self.cycles().iter().map(|c| c.len()).sum();
        let cycle_count = moved_cycles + (self.degree() - moved_points);
        if (self.degree() - cycle_count) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .parts
            .iter()
            .fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle text, `()` for the identity: `(1,2,3)(4,5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses disjoint-cycle text. The degree is the largest point mentioned;
    /// use [`Permutation::parse_with_degree`] to pad with fixed points.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let cycles = parse_cycle_text(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        let refs: Vec<&[u8]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree.max(1), &refs)
    }
}

impl Permutation {
    pub fn parse_with_degree(s: &str, degree: usize) -> Result<Self, PermError> {
        let cycles = parse_cycle_text(s)?;
        let refs: Vec<&[u8]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs)
    }
}

fn parse_cycle_text(s: &str) -> Result<Vec<Vec<u8>>, PermError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(PermError::BadCycleText(s.clone()));
        }
        let close = rest.find(')').ok_or_else(|| PermError::BadCycleText(s.clone()))?;
        let inner = &rest[1..close];
        if !inner.is_empty() {
            let cycle: Result<Vec<u8>, _> = inner.split(',').map(|p| p.parse::<u8>()).collect();
            let cycle = cycle.map_err(|_| PermError::BadCycleText(s.clone()))?;
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        rest = &rest[close + 1..];
    }
    Ok(cycles)
}

/// Cycle type of a permutation as a weakly decreasing partition of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    pub parts: Vec<usize>,
}

impl CycleType {
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Iterator over all of `S_n` in lexicographic order of image sequences.
pub struct SymmetricGroupIter {
    current: Option<Vec<u8>>,
}

impl Iterator for SymmetricGroupIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let images = self.current.take()?;
        let result = Permutation { images: images.clone() };
        self.current = next_lex_permutation(images);
        Some(result)
    }
}

fn next_lex_permutation(mut v: Vec<u8>) -> Option<Vec<u8>> {
    if v.len() < 2 {
        return None;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

pub fn symmetric_group(n: usize) -> SymmetricGroupIter {
    SymmetricGroupIter {
        current: Some((1..=n as u8).collect()),
    }
}

/// All partitions of `n` in ascending lexicographic order of their weakly
/// decreasing part lists: `[1,1,..]` first, `[n]` last.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=max.min(n) {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, n, &mut Vec::new(), &mut raw);
    // descending-part lists, sorted ascending lexicographically
    raw.sort();
    raw
}

/// Size of the `S_n` conjugacy class with the given cycle type.
pub fn class_size(parts: &[usize]) -> u64 {
    let n: usize = parts.iter().sum();
    let mut mult: HashMap<usize, u64> = HashMap::new();
    for &p in parts {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut denom = 1u64;
    for (len, k) in mult {
        denom *= (len as u64).pow(k as u32) * factorial(k);
    }
    factorial(n as u64) / denom
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// The symmetric group `S_n`: class representatives in canonical form, class
/// sizes, and the exponent `lcm(1..n)`.
#[derive(Clone, Debug)]
pub struct GroupContext {
    pub degree: usize,
    pub exponent: u64,
    pub class_reps: Vec<Permutation>,
    pub class_types: Vec<CycleType>,
    pub class_sizes: Vec<u64>,
}

impl GroupContext {
    /// One representative per partition of `n`, with each part laid out on
    /// consecutive increasing points, largest part first: `(1,2,3)(4,5)`.
    pub fn new(n: usize) -> GroupContext {
        assert!(n >= 1, "degree must be positive");
        let parts_list = partitions(n);
        let mut reps = Vec::with_capacity(parts_list.len());
        let mut sizes = Vec::with_capacity(parts_list.len());
        let mut types = Vec::with_capacity(parts_list.len());
        for parts in &parts_list {
            let mut cycles: Vec<Vec<u8>> = Vec::new();
            let mut next = 1u8;
            for &len in parts {
                if len > 1 {
                    cycles.push((next..next + len as u8).collect());
                }
                next += len as u8;
            }
            let refs: Vec<&[u8]> = cycles.iter().map(|c| c.as_slice()).collect();
            reps.push(Permutation::from_cycles(n, &refs).unwrap());
            sizes.push(class_size(parts));
            types.push(CycleType { parts: parts.clone() });
        }
        let exponent = (1..=n as u64).fold(1u64, |acc, k| acc.lcm(&k));
        GroupContext {
            degree: n,
            exponent,
            class_reps: reps,
            class_types: types,
            class_sizes: sizes,
        }
    }

    pub fn order(&self) -> u64 {
        factorial(self.degree as u64)
    }

    pub fn elements(&self) -> SymmetricGroupIter {
        symmetric_group(self.degree)
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    /// Index of the `S_n`-class of `p` (classes are cycle types).
    pub fn class_index_of(&self, p: &Permutation) -> usize {
        let ct = p.cycle_type();
        self.class_types
            .iter()
            .position(|t| *t == ct)
            .expect("cycle type covers every class")
    }

    /// Sorted divisors of the group exponent.
    pub fn divisors_of_exponent(&self) -> Vec<u64> {
        divisors(self.exponent)
    }

    /// `{ x : xu = ux }` with deterministic (lexicographic) element order.
    ///
    /// For `n <= 8` this filters the full enumeration of `S_n`; for larger
    /// degrees the centralizer is assembled structurally from cycle rotations
    /// and swaps of equal-length cycles, which stays cheap even when `n!` is
    /// out of reach.
    pub fn centralizer(&self, u: &Permutation) -> Subgroup {
        assert_eq!(u.degree(), self.degree);
        let elements: Vec<Permutation> = if self.degree <= 8 {
            self.elements().filter(|x| x.mul(u) == u.mul(x)).collect()
        } else {
            let mut els = structural_centralizer(u);
            els.sort();
            els
        };
        let generators = centralizer_generators(u);
        Subgroup {
            parent_degree: self.degree,
            elements,
            generators: Some(generators),
        }
    }
}

/// Sorted divisors of `m`.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
    out.sort_unstable();
    out
}

/// Generators of `C_{S_n}(u)`: each cycle of `u`, plus a swap of each pair of
/// consecutive equal-length cycles.
fn centralizer_generators(u: &Permutation) -> Vec<Permutation> {
    let n = u.degree();
    let mut cycles = u.cycles();
    // fixed points are 1-cycles for the swap generators
    let moved: Vec<bool> = {
        let mut m = vec![false; n + 1];
        for c in &cycles {
            for &p in c {
                m[p as usize] = true;
            }
        }
        m
    };
    for p in 1..=n as u8 {
        if !moved[p as usize] {
            cycles.push(vec![p]);
        }
    }
    cycles.sort_by_key(|c| (c.len(), c[0]));
    let mut gens = Vec::new();
    for c in &cycles {
        if c.len() > 1 {
            gens.push(Permutation::from_cycles(n, &[c.as_slice()]).unwrap());
        }
    }
    for w in cycles.windows(2) {
        if w[0].len() == w[1].len() {
            let swap: Vec<Vec<u8>> = (0..w[0].len())
                .map(|i| vec![w[0][i], w[1][i]])
                .collect();
            let refs: Vec<&[u8]> = swap.iter().map(|c| c.as_slice()).collect();
            gens.push(Permutation::from_cycles(n, &refs).unwrap());
        }
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(n));
    }
    gens
}

/// Every element commuting with `u`, built from the cycle structure: rotate
/// each cycle independently and permute cycles of equal length.
fn structural_centralizer(u: &Permutation) -> Vec<Permutation> {
    let n = u.degree();
    let mut cycles = u.cycles();
    let moved: Vec<bool> = {
        let mut m = vec![false; n + 1];
        for c in &cycles {
            for &p in c {
                m[p as usize] = true;
            }
        }
        m
    };
    for p in 1..=n as u8 {
        if !moved[p as usize] {
            cycles.push(vec![p]);
        }
    }
    // group cycles by length
    let mut by_len: HashMap<usize, Vec<Vec<u8>>> = HashMap::new();
    for c in cycles {
        by_len.entry(c.len()).or_default().push(c);
    }
    let mut result = vec![Permutation::identity(n)];
    for (len, group) in by_len {
        let k = group.len();
        // all assignments: a permutation of the k cycles plus a rotation
        // offset per cycle
        let mut block: Vec<Permutation> = Vec::new();
        let mut perm_indices: Vec<Vec<usize>> = Vec::new();
        permutations_of(k, &mut perm_indices);
        for assignment in &perm_indices {
            let mut offsets = vec![0usize; k];
            loop {
                let mut images: Vec<u8> = (1..=n as u8).collect();
                for (src, &dst) in assignment.iter().enumerate() {
                    let from = &group[src];
                    let to = &group[dst];
                    for (i, &p) in from.iter().enumerate() {
                        images[p as usize - 1] = to[(i + offsets[src]) % len];
                    }
                }
                block.push(Permutation { images });
                // odometer over rotation offsets
                let mut pos = 0;
                loop {
                    if pos == k {
                        break;
                    }
                    offsets[pos] += 1;
                    if offsets[pos] < len {
                        break;
                    }
                    offsets[pos] = 0;
                    pos += 1;
                }
                if pos == k {
                    break;
                }
            }
        }
        let mut combined = Vec::with_capacity(result.len() * block.len());
        for r in &result {
            for b in &block {
                combined.push(r.mul(b));
            }
        }
        result = combined;
    }
    result
}

fn permutations_of(k: usize, out: &mut Vec<Vec<usize>>) {
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let next = next_lex_indices(&current);
        match next {
            Some(v) => current = v,
            None => break,
        }
    }
}

fn next_lex_indices(v: &[usize]) -> Option<Vec<usize>> {
    let mut v = v.to_vec();
    if v.len() < 2 {
        return None;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

/// A subgroup of some `S_n`, held as an explicit sorted element list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub parent_degree: usize,
    pub elements: Vec<Permutation>,
    pub generators: Option<Vec<Permutation>>,
}

impl Subgroup {
    pub fn from_elements(parent_degree: usize, mut elements: Vec<Permutation>) -> Subgroup {
        elements.sort();
        elements.dedup();
        Subgroup {
            parent_degree,
            elements,
            generators: None,
        }
    }

    /// Closure of a generator list under products.
    pub fn generated_by(parent_degree: usize, generators: &[Permutation]) -> Subgroup {
        let mut seen: Vec<Permutation> = vec![Permutation::identity(parent_degree)];
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in generators {
                    let y = x.mul(g);
                    if !seen.contains(&y) && !next.contains(&y) {
                        next.push(y);
                    }
                }
            }
            seen.extend(next.iter().cloned());
            frontier = next;
        }
        seen.sort();
        Subgroup {
            parent_degree,
            elements: seen,
            generators: Some(generators.to_vec()),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_closed(&self) -> bool {
        let set: std::collections::HashSet<&Permutation> = self.elements.iter().collect();
        if !set.contains(&Permutation::identity(self.parent_degree)) {
            return false;
        }
        self.elements.iter().all(|a| {
            set.contains(&a.inverse()) && self.elements.iter().all(|b| set.contains(&a.mul(b)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<&Permutation> = match &self.generators {
            Some(g) => g.iter().collect(),
            None => self.elements.iter().collect(),
        };
        gens.iter()
            .all(|a| gens.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, p| acc.lcm(&p.order()))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Partition into conjugation orbits under the subgroup itself.
    ///
    /// Classes are ordered by their minimal (lexicographic) element, which is
    /// also the chosen representative; the identity class comes first.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjClass>, PermError> {
        if !self.is_closed() {
            return Err(PermError::NotClosed);
        }
        let conjugators: &[Permutation] = match &self.generators {
            Some(g) if !g.is_empty() => g,
            _ => &self.elements,
        };
        let index: HashMap<&Permutation, usize> =
            self.elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut assigned = vec![false; self.elements.len()];
        let mut classes = Vec::new();
        for start in 0..self.elements.len() {
            if assigned[start] {
                continue;
            }
            // BFS orbit under conjugation; `start` is minimal in its orbit
            // because smaller elements are already assigned.
            let mut orbit_idx = vec![start];
            assigned[start] = true;
            let mut frontier = vec![start];
            while let Some(i) = frontier.pop() {
                let p = &self.elements[i];
                for x in conjugators {
                    let c = p.conjugate_by(x);
                    let j = index[&c];
                    if !assigned[j] {
                        assigned[j] = true;
                        orbit_idx.push(j);
                        frontier.push(j);
                    }
                }
            }
            orbit_idx.sort_unstable();
            classes.push(ConjClass {
                representative: self.elements[orbit_idx[0]].clone(),
                members: orbit_idx.iter().map(|&i| self.elements[i].clone()).collect(),
            });
        }
        Ok(classes)
    }
}

/// A conjugacy class of a subgroup: minimal-element representative plus the
/// full sorted member list.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub representative: Permutation,
    pub members: Vec<Permutation>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, degree: usize) -> Permutation {
        Permutation::parse_with_degree(s, degree).unwrap()
    }

    #[test]
    fn transposition_is_involution() {
        let t = p("(1,2)", 2);
        assert!(t.mul(&t).is_identity());
    }

    #[test]
    fn paper_product_pins_composition_convention() {
        // u = (1 3 7 6 2 4 5), h = (5 4 2)(3 6 7): uh = (2 1 3) with "h first"
        let u = p("(1,3,7,6,2,4,5)", 7);
        let h = p("(5,4,2)(3,6,7)", 7);
        let uh = u.mul(&h);
        assert_eq!(uh, p("(2,1,3)", 7));
    }

    #[test]
    fn parity_is_multiplicative() {
        let mut all: Vec<Permutation> = symmetric_group(6).collect();
        all.truncate(120); // sampled prefix is enough
        for a in &all {
            for b in all.iter().step_by(7) {
                assert_eq!(a.mul(b).parity(), a.parity() * b.parity());
            }
        }
    }

    #[test]
    fn parity_matches_transposition_count_oracle() {
        // decompose into transpositions by sorting and count them
        for q in symmetric_group(5) {
            let mut v: Vec<u8> = q.images().to_vec();
            let mut swaps = 0;
            for i in 0..v.len() {
                while v[i] as usize != i + 1 {
                    let j = v[i] as usize - 1;
                    v.swap(i, j);
                    swaps += 1;
                }
            }
            let oracle = if swaps % 2 == 0 { 1 } else { -1 };
            assert_eq!(q.parity(), oracle, "parity of {q}");
        }
    }

    #[test]
    fn powers() {
        assert_eq!(p("(3,4,5)", 5).power(2), p("(3,5,4)", 5));
        assert_eq!(p("(1,2,3,4)", 4).power(2), p("(1,3)(2,4)", 4));
        let g = p("(1,2,3)(4,5)", 5);
        assert!(g.power(g.order()).is_identity());
    }

    #[test]
    fn parity_of_powers() {
        for n in 2..=7 {
            for q in symmetric_group(n).step_by(11) {
                for m in 0..=12u64 {
                    let expected = if q.parity() == -1 && m % 2 == 1 { -1 } else { 1 };
                    assert_eq!(q.power(m).parity(), expected);
                }
            }
        }
    }

    #[test]
    fn cycle_type_and_display() {
        let g = p("(1,2,3)(4,5)", 5);
        assert_eq!(g.cycle_type().parts, vec![3, 2]);
        assert_eq!(g.parity(), -1);
        assert_eq!(g.to_string(), "(1,2,3)(4,5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let t = p("(1,2)(3,4)", 5);
        assert_eq!(t.cycle_type().parts, vec![2, 2, 1]);
        assert_eq!(t.parity(), 1);
    }

    #[test]
    fn roundtrip_cycle_text() {
        for q in symmetric_group(5) {
            let text = q.to_string();
            assert_eq!(Permutation::parse_with_degree(&text, 5).unwrap(), q);
        }
    }

    #[test]
    fn class_reps_s3_s5_s10() {
        let ctx = GroupContext::new(3);
        assert_eq!(ctx.class_count(), 3);
        assert_eq!(ctx.exponent, 6);
        let ctx5 = GroupContext::new(5);
        assert_eq!(ctx5.class_count(), 7);
        assert_eq!(ctx5.exponent, 60);
        let ctx10 = GroupContext::new(10);
        assert_eq!(ctx10.class_count(), 42);
        assert_eq!(ctx10.exponent, 2520);
        assert_eq!(ctx10.divisors_of_exponent().len(), 48);
    }

    #[test]
    fn class_reps_use_consecutive_points() {
        let ctx = GroupContext::new(5);
        let labels: Vec<String> = ctx.class_reps.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            labels,
            vec![
                "()",
                "(1,2)",
                "(1,2)(3,4)",
                "(1,2,3)",
                "(1,2,3)(4,5)",
                "(1,2,3,4)",
                "(1,2,3,4,5)"
            ]
        );
    }

    #[test]
    fn centralizers_match_paper() {
        let ctx4 = GroupContext::new(4);
        let c = ctx4.centralizer(&p("(1,2)(3,4)", 4));
        assert_eq!(c.order(), 8);
        assert!(c.contains(&p("(1,3)(2,4)", 4)));
        assert!(!c.is_abelian());

        let ctx3 = GroupContext::new(3);
        let all = ctx3.centralizer(&Permutation::identity(3));
        assert_eq!(all.order(), 6);

        let ctx5 = GroupContext::new(5);
        let c6 = ctx5.centralizer(&p("(1,2,3)(4,5)", 5));
        assert_eq!(c6.order(), 6);
        assert!(c6.is_abelian());
    }

    #[test]
    fn structural_centralizer_agrees_with_filter() {
        let ctx = GroupContext::new(6);
        for u in &ctx.class_reps {
            let filtered = ctx.centralizer(u);
            let mut structural = structural_centralizer(u);
            structural.sort();
            structural.dedup();
            assert_eq!(filtered.elements, structural, "centralizer of {u}");
        }
    }

    #[test]
    fn orbit_stabilizer() {
        for n in 3..=6 {
            let ctx = GroupContext::new(n);
            for (i, u) in ctx.class_reps.iter().enumerate() {
                let c = ctx.centralizer(u);
                assert_eq!(c.order() as u64 * ctx.class_sizes[i], ctx.order());
            }
        }
    }

    #[test]
    fn conjugacy_classes_of_d8() {
        let ctx = GroupContext::new(4);
        let c = ctx.centralizer(&p("(1,2)(3,4)", 4));
        let classes = c.conjugacy_classes().unwrap();
        let reps: Vec<String> = classes.iter().map(|c| c.representative.to_string()).collect();
        assert_eq!(classes.len(), 5);
        // the class {(1,2),(3,4)} is represented by its lex-minimal member
        for expected in ["()", "(3,4)", "(1,2)(3,4)", "(1,3)(2,4)", "(1,3,2,4)"] {
            assert!(reps.contains(&expected.to_string()), "missing {expected}");
        }
        let total: usize = classes.iter().map(|c| c.size()).sum();
        assert_eq!(total, 8);
        for cls in &classes {
            assert_eq!(8 % cls.size(), 0);
        }
    }

    #[test]
    fn centralizer_classes_s5_transposition() {
        let ctx = GroupContext::new(5);
        let c = ctx.centralizer(&p("(1,2)", 5));
        assert_eq!(c.order(), 12);
        assert_eq!(c.conjugacy_classes().unwrap().len(), 6);
    }

    #[test]
    fn trivial_subgroup_one_class() {
        let triv = Subgroup::from_elements(4, vec![Permutation::identity(4)]);
        assert_eq!(triv.conjugacy_classes().unwrap().len(), 1);
    }

    #[test]
    fn exponent_divides_orders() {
        let ctx = GroupContext::new(7);
        for u in &ctx.class_reps {
            assert_eq!(ctx.exponent % u.order(), 0);
        }
    }

    #[test]
    fn generated_subgroup_closure() {
        let gens = vec![p("(1,2)", 4), p("(1,3)(2,4)", 4), p("(3,4)", 4)];
        let sub = Subgroup::generated_by(4, &gens);
        assert_eq!(sub.order(), 8);
        assert!(sub.is_closed());
    }
}
