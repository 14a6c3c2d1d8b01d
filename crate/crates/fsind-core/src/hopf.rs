//! Brute-force ground truth: the double of a small permutation group built
//! from first principles. Basis elements are `p_g (x) x` pairs; the
//! product twists by conjugation, and the integral is the averaged group
//! sum over the identity projector. Everything here is exact and slow on
//! purpose — it exists to cross-check the fast engine.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chartab::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::perm::{GroupContext, Permutation, Subgroup};

pub const ORACLE_MAX_ORDER: usize = 120;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("group of order {0} exceeds the oracle cap of {ORACLE_MAX_ORDER}")]
    TooLarge(usize),
    #[error("iterated-coproduct and closed-form integral powers disagree at m = {0}")]
    LambdaMismatch(u64),
    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),
}

/// A small group with indexed elements, the ambient structure for
/// [`DGElement`].
pub struct OracleGroup {
    pub degree: usize,
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl OracleGroup {
    pub fn new(degree: usize, mut elements: Vec<Permutation>) -> Result<OracleGroup, HopfError> {
        if elements.len() > ORACLE_MAX_ORDER {
            return Err(HopfError::TooLarge(elements.len()));
        }
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(OracleGroup { degree, elements, index })
    }

    pub fn symmetric(n: usize) -> Result<OracleGroup, HopfError> {
        let ctx = GroupContext::new(n);
        OracleGroup::new(n, ctx.elements().collect())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn idx(&self, p: &Permutation) -> usize {
        self.index[p]
    }

    pub fn identity_idx(&self) -> usize {
        self.index[&Permutation::identity(self.degree)]
    }
}

/// A sparse element of the double: finitely many basis labels `(g, x)`
/// with exact rational coefficients, zeros pruned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGElement {
    pub terms: BTreeMap<(usize, usize), BigRational>,
}

impl DGElement {
    pub fn zero() -> DGElement {
        DGElement { terms: BTreeMap::new() }
    }

    pub fn basis(g: usize, x: usize) -> DGElement {
        let mut terms = BTreeMap::new();
        terms.insert((g, x), BigRational::one());
        DGElement { terms }
    }

    /// The unit `1 = sum_g p_g (x) id`.
    pub fn unit(group: &OracleGroup) -> DGElement {
        let id = group.identity_idx();
        let mut terms = BTreeMap::new();
        for g in 0..group.order() {
            terms.insert((g, id), BigRational::one());
        }
        DGElement { terms }
    }

    pub fn add_term(&mut self, key: (usize, usize), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &DGElement) -> DGElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> DGElement {
        if c.is_zero() {
            return DGElement::zero();
        }
        DGElement {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }
}

/// `(p_k (x) z)(p_h (x) y) = [k = z h z^-1] p_k (x) zy`.
pub fn multiply(group: &OracleGroup, a: &DGElement, b: &DGElement) -> DGElement {
    let mut out = DGElement::zero();
    for (&(k, z), ca) in &a.terms {
        let zp = &group.elements[z];
        let zinv = zp.inverse();
        for (&(h, y), cb) in &b.terms {
            let conj = zp.mul(&group.elements[h]).mul(&zinv);
            if group.idx(&conj) == k {
                let zy = group.idx(&zp.mul(&group.elements[y]));
                out.add_term((k, zy), ca * cb);
            }
        }
    }
    out
}

/// Sparse two-tensor, keyed by ordered basis pairs.
pub type DGTensor = BTreeMap<((usize, usize), (usize, usize)), BigRational>;

/// `Delta(p_g (x) x) = sum_h (p_h (x) x) (x) (p_{h^-1 g} (x) x)`.
pub fn comultiply(group: &OracleGroup, a: &DGElement) -> DGTensor {
    let mut out: DGTensor = BTreeMap::new();
    for (&(g, x), c) in &a.terms {
        let gp = &group.elements[g];
        for h in 0..group.order() {
            let rest = group.idx(&group.elements[h].inverse().mul(gp));
            let key = ((h, x), (rest, x));
            let entry = out.entry(key).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

/// `eps(p_g (x) x) = [g = id]`.
pub fn counit(group: &OracleGroup, a: &DGElement) -> BigRational {
    let id = group.identity_idx();
    a.terms
        .iter()
        .filter(|(&(g, _), _)| g == id)
        .map(|(_, c)| c.clone())
        .sum()
}

/// `S(p_g (x) x) = p_{x^-1 g^-1 x} (x) x^-1`.
pub fn antipode(group: &OracleGroup, a: &DGElement) -> DGElement {
    let mut out = DGElement::zero();
    for (&(g, x), c) in &a.terms {
        let xp = &group.elements[x];
        let xinv = xp.inverse();
        let img = xinv.mul(&group.elements[g].inverse()).mul(xp);
        out.add_term((group.idx(&img), group.idx(&xinv)), c.clone());
    }
    out
}

/// The normalized integral `(1/|G|) sum_g p_1 (x) g`.
pub fn integral(group: &OracleGroup) -> DGElement {
    let id = group.identity_idx();
    let scale = BigRational::new(BigInt::one(), BigInt::from(group.order()));
    let mut out = DGElement::zero();
    for x in 0..group.order() {
        out.add_term((id, x), scale.clone());
    }
    out
}

/// `Lambda^[m]` by both the iterated coproduct-then-product recursion and
/// the closed form over counted power conditions; exact agreement is
/// mandatory.
pub fn lambda_power(group: &OracleGroup, m: u64) -> Result<DGElement, HopfError> {
    let n = group.order();
    let id = group.identity_idx();
    let scale = BigRational::new(BigInt::one(), BigInt::from(n));

    // path 1: w_l(g, x) = m^(l-1) o Delta^(l-1) applied to p_g (x) x has
    // support on second coordinate x^l; track integer coefficient vectors
    // over the first coordinate, one x at a time
    let mut recursive = DGElement::zero();
    for x in 0..n {
        let xp = &group.elements[x];
        let xinv = xp.inverse();
        // conj[k] = index of x k x^-1
        let conj: Vec<usize> = (0..n)
            .map(|k| group.idx(&xp.mul(&group.elements[k]).mul(&xinv)))
            .collect();
        // w[g][k], level 1: identity matrix
        let mut w: Vec<Vec<u64>> = (0..n)
            .map(|g| (0..n).map(|k| u64::from(k == g)).collect())
            .collect();
        // inv_mul[g][h] = h^-1 g
        let invmul: Vec<Vec<usize>> = (0..n)
            .map(|g| {
                (0..n)
                    .map(|h| group.idx(&group.elements[h].inverse().mul(&group.elements[g])))
                    .collect()
            })
            .collect();
        for _ in 1..m {
            let mut next = vec![vec![0u64; n]; n];
            for g in 0..n {
                for k in 0..n {
                    let h = conj[k];
                    let prev = w[invmul[g][h]][k];
                    if prev != 0 {
                        next[g][h] += prev;
                    }
                }
            }
            w = next;
        }
        let xm = group.idx(&xp.power(m));
        for (k, &c) in w[id].iter().enumerate() {
            if c != 0 {
                recursive.add_term((k, xm), &scale * BigRational::from(BigInt::from(c)));
            }
        }
    }

    // path 2: (1/|G|) sum over g and x with prod_j x^-j g x^j = 1 of
    // p_g (x) x^m
    let mut closed = DGElement::zero();
    for g in 0..n {
        let gp = &group.elements[g];
        for x in 0..n {
            let xp = &group.elements[x];
            let xinv = xp.inverse();
            let mut prod = Permutation::identity(group.degree);
            let mut conj = gp.clone();
            for _ in 0..m {
                prod = prod.mul(&conj);
                conj = xinv.mul(&conj).mul(xp);
            }
            if prod.is_identity() {
                closed.add_term((g, group.idx(&xp.power(m))), scale.clone());
            }
        }
    }

    if recursive != closed {
        return Err(HopfError::LambdaMismatch(m));
    }
    Ok(recursive)
}

/// A character of the double induced from row `row` of the centralizer
/// table of `u`, evaluated through the trace of the induced action.
pub struct InducedCharacter<'a> {
    pub u: Permutation,
    pub table: &'a CharacterTable,
    pub row: usize,
    centralizer: Subgroup,
    /// transversal: for each class member h, some t with t u t^-1 = h
    transversal: HashMap<Permutation, Permutation>,
}

impl<'a> InducedCharacter<'a> {
    pub fn new(
        group: &OracleGroup,
        u: Permutation,
        centralizer: Subgroup,
        table: &'a CharacterTable,
        row: usize,
    ) -> InducedCharacter<'a> {
        let mut transversal = HashMap::new();
        for t in &group.elements {
            let h = u.conjugate_by(t);
            transversal.entry(h).or_insert_with(|| t.clone());
        }
        InducedCharacter { u, table, row, centralizer, transversal }
    }

    /// `chi(p_h (x) x)`: nonzero only for `h` conjugate to `u` with
    /// `t_h^-1 x t_h` centralizing `u`, where it is the centralizer
    /// character at that element.
    pub fn basis_value(&self, group: &OracleGroup, h: usize, x: usize) -> Cyclotomic {
        let hp = &group.elements[h];
        let t = match self.transversal.get(hp) {
            Some(t) => t,
            None => return Cyclotomic::zero(),
        };
        let c = t.inverse().mul(&group.elements[x]).mul(t);
        if self.centralizer.contains(&c) {
            self.table.value(self.row, &c).clone()
        } else {
            Cyclotomic::zero()
        }
    }

    pub fn evaluate(&self, group: &OracleGroup, a: &DGElement) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (&(h, x), coeff) in &a.terms {
            let v = self.basis_value(group, h, x);
            if !v.is_zero() {
                acc = acc.add(&v.scale(coeff));
            }
        }
        acc
    }
}

/// `nu_m` by direct evaluation against a precomputed `Lambda^[m]`.
pub fn oracle_indicator(
    group: &OracleGroup,
    ind: &InducedCharacter<'_>,
    lambda_m: &DGElement,
) -> Cyclotomic {
    ind.evaluate(group, lambda_m)
}

/// `nu_m = (1/|C(u)|) sum_x eta(x^m)` over `x` satisfying the ordered
/// product condition `prod_j x^-j u x^j = 1`.
pub fn zm_formula_indicator(
    group: &OracleGroup,
    ind: &InducedCharacter<'_>,
    m: u64,
) -> Cyclotomic {
    let u = &ind.u;
    let mut acc = Cyclotomic::zero();
    for x in &group.elements {
        let xinv = x.inverse();
        let mut prod = Permutation::identity(group.degree);
        let mut conj = u.clone();
        for _ in 0..m {
            prod = prod.mul(&conj);
            conj = xinv.mul(&conj).mul(x);
        }
        if prod.is_identity() {
            acc = acc.add(ind.table.value(ind.row, &x.power(m)));
        }
    }
    acc.scale(&BigRational::new(
        BigInt::one(),
        BigInt::from(ind.centralizer.order()),
    ))
}

/// A verified automorphism of a permutation group, stored pointwise.
#[derive(Debug, Clone)]
pub struct GroupAutomorphism {
    pub map: HashMap<Permutation, Permutation>,
}

impl GroupAutomorphism {
    pub fn identity(elements: &[Permutation]) -> GroupAutomorphism {
        GroupAutomorphism {
            map: elements.iter().map(|p| (p.clone(), p.clone())).collect(),
        }
    }

    pub fn inner(elements: &[Permutation], t: &Permutation) -> GroupAutomorphism {
        GroupAutomorphism {
            map: elements
                .iter()
                .map(|p| (p.clone(), p.conjugate_by(t)))
                .collect(),
        }
    }

    pub fn apply(&self, p: &Permutation) -> &Permutation {
        &self.map[p]
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        GroupAutomorphism {
            map: self.map.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// Full verification: bijective and multiplicative on every pair.
    pub fn verify(&self, elements: &[Permutation]) -> Result<(), HopfError> {
        if self.map.len() != elements.len() {
            return Err(HopfError::NotAutomorphism("domain size mismatch".into()));
        }
        let mut images: Vec<&Permutation> = self.map.values().collect();
        images.sort();
        images.dedup();
        if images.len() != elements.len() {
            return Err(HopfError::NotAutomorphism("not injective".into()));
        }
        for a in elements {
            for b in elements {
                if self.map[&a.mul(b)] != self.map[a].mul(&self.map[b]) {
                    return Err(HopfError::NotAutomorphism(format!(
                        "sigma({a} * {b}) != sigma({a}) sigma({b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `gamma_sigma(p_x (x) g) = p_{sigma^-1(x)} (x) sigma^-1(g)`.
pub fn gamma_automorphism(
    group: &OracleGroup,
    sigma: &GroupAutomorphism,
    a: &DGElement,
) -> DGElement {
    let inv = sigma.inverse();
    let mut out = DGElement::zero();
    for (&(g, x), c) in &a.terms {
        let gi = group.idx(inv.apply(&group.elements[g]));
        let xi = group.idx(inv.apply(&group.elements[x]));
        out.add_term((gi, xi), c.clone());
    }
    out
}

/// The order-2 outer automorphism of `S_6`, defined on the transposition
/// generators `(1 i)` and extended by breadth-first word decomposition.
pub fn s6_outer_automorphism() -> GroupAutomorphism {
    let gens: Vec<(Permutation, Permutation)> = [
        ("(1,2)", "(1,5)(2,3)(4,6)"),
        ("(1,3)", "(1,4)(2,6)(3,5)"),
        ("(1,4)", "(1,3)(2,4)(5,6)"),
        ("(1,5)", "(1,2)(3,6)(4,5)"),
        ("(1,6)", "(1,6)(2,5)(3,4)"),
    ]
    .iter()
    .map(|(a, b)| {
        (
            Permutation::parse_with_degree(a, 6).unwrap(),
            Permutation::parse_with_degree(b, 6).unwrap(),
        )
    })
    .collect();
    let id = Permutation::identity(6);
    let mut map: HashMap<Permutation, Permutation> = HashMap::from([(id.clone(), id.clone())]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        let sg = map[&g].clone();
        for (t, st) in &gens {
            let gt = g.mul(t);
            let sgt = sg.mul(st);
            match map.get(&gt) {
                Some(existing) => assert_eq!(existing, &sgt, "inconsistent extension at {gt}"),
                None => {
                    map.insert(gt.clone(), sgt);
                    frontier.push(gt);
                }
            }
        }
    }
    assert_eq!(map.len(), 720);
    let sigma = GroupAutomorphism { map };
    for (g, img) in &sigma.map {
        assert_eq!(sigma.map[img], *g, "sigma^2 != id at {g}");
    }
    sigma
}

/// Full cross-check for one symmetric group: every `(character, divisor)`
/// indicator computed three ways — the class-bucketed engine formula, a
/// direct `chi(Lambda^[m])` evaluation, and the counted power-condition
/// sum — must agree. Returns the number of comparisons on success.
pub fn verify_triple_agreement(ctx: &GroupContext) -> Result<usize, String> {
    let group = OracleGroup::new(ctx.degree, ctx.elements().collect())
        .map_err(|e| e.to_string())?;
    let divisors = ctx.divisors_of_exponent();
    let lambdas: Vec<DGElement> = divisors
        .iter()
        .map(|&m| lambda_power(&group, m).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let mut compared = 0usize;
    for u in &ctx.class_reps {
        let cent = ctx.centralizer(u);
        let table = crate::indicator::centralizer_table(ctx, u).map_err(|e| e.to_string())?;
        let engine_rows =
            crate::indicator::indicators_for_class(ctx, u, &table, &divisors)
                .map_err(|e| e.to_string())?;
        for row in 0..table.row_count() {
            let ind = InducedCharacter::new(&group, u.clone(), cent.clone(), &table, row);
            for (c, &m) in divisors.iter().enumerate() {
                let engine = Cyclotomic::from_integer(engine_rows[row][c]);
                let direct = oracle_indicator(&group, &ind, &lambdas[c]);
                let counted = zm_formula_indicator(&group, &ind, m);
                if direct != engine || counted != engine {
                    return Err(format!(
                        "disagreement at u = {u}, row {row}, m = {m}: engine {engine}, direct {direct}, counted {counted}"
                    ));
                }
                compared += 1;
            }
        }
    }
    Ok(compared)
}
