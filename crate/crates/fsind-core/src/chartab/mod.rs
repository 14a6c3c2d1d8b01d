//! Irreducible character tables of the subgroups that appear as
//! centralizers in `S_n`, over exact cyclotomic values.
//!
//! Abelian subgroups go through the dual-group construction, nonabelian
//! ones through the modular eigenvalue method, and the full symmetric
//! group through the border-strip recursion. Rows are always sorted by
//! degree and then lexicographically on the value tuple, so the table of a
//! given subgroup is deterministic.

mod abelian;
mod dixon;
mod mn;
pub mod modp;

use std::collections::HashMap;

use num_rational::BigRational;
use thiserror::Error;

use crate::cyclo::Cyclotomic;
use crate::perm::{class_size, GroupContext, PermError, Permutation, Subgroup};

#[derive(Debug, Error)]
pub enum ChartabError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("eigenvalue separation failed for subgroup of order {0}")]
    EigenSplit(usize),
    #[error("character value lift failed for subgroup of order {0}")]
    LiftFailed(usize),
    #[error("orthogonality violated in table of group of order {0}")]
    Orthogonality(u64),
}

enum ClassLookup {
    /// full symmetric group: class index determined by cycle type
    CycleType(HashMap<Vec<usize>, usize>),
    /// explicit element-to-class map
    Table(HashMap<Permutation, usize>),
}

pub struct CharacterTable {
    pub order: u64,
    pub exponent: u64,
    pub class_reps: Vec<Permutation>,
    pub class_sizes: Vec<u64>,
    /// row degrees, i.e. values at the identity class
    pub degrees: Vec<u64>,
    /// `values[row][class]`
    pub values: Vec<Vec<Cyclotomic>>,
    lookup: ClassLookup,
}

impl CharacterTable {
    /// Table of an arbitrary subgroup given by its element list.
    pub fn of_subgroup(sub: &Subgroup) -> Result<CharacterTable, ChartabError> {
        let classes = sub.conjugacy_classes()?;
        let mut class_of = HashMap::with_capacity(sub.order());
        for (i, cls) in classes.iter().enumerate() {
            for m in &cls.members {
                class_of.insert(m.clone(), i);
            }
        }
        let (degrees, values) = if sub.is_abelian() {
            let (n, chars) = abelian::dual_characters(sub);
            let values: Vec<Vec<Cyclotomic>> = chars
                .iter()
                .map(|chi| {
                    classes
                        .iter()
                        .map(|c| Cyclotomic::root_of_unity(n, chi[&c.representative]))
                        .collect()
                })
                .collect();
            (vec![1u64; chars.len()], values)
        } else {
            dixon::characters(sub, &classes, &class_of)?
        };
        let mut table = CharacterTable {
            order: sub.order() as u64,
            exponent: sub.exponent(),
            class_reps: classes.iter().map(|c| c.representative.clone()).collect(),
            class_sizes: classes.iter().map(|c| c.size() as u64).collect(),
            degrees,
            values,
            lookup: ClassLookup::Table(class_of),
        };
        table.sort_rows();
        table.verify_orthogonality()?;
        Ok(table)
    }

    /// Table of the full symmetric group, indexed by cycle type.
    pub fn of_symmetric_group(ctx: &GroupContext) -> Result<CharacterTable, ChartabError> {
        let n = ctx.degree;
        let lambdas = crate::perm::partitions(n);
        let mut values = Vec::with_capacity(lambdas.len());
        let mut degrees = Vec::with_capacity(lambdas.len());
        let ones = vec![1usize; n];
        for lam in &lambdas {
            let row: Vec<Cyclotomic> = ctx
                .class_types
                .iter()
                .map(|t| Cyclotomic::from_integer(mn::character_value(lam, &t.parts)))
                .collect();
            degrees.push(mn::character_value(lam, &ones) as u64);
            values.push(row);
        }
        let type_index: HashMap<Vec<usize>, usize> = ctx
            .class_types
            .iter()
            .enumerate()
            .map(|(i, t)| (t.parts.clone(), i))
            .collect();
        let mut table = CharacterTable {
            order: ctx.order(),
            exponent: ctx.exponent,
            class_reps: ctx.class_reps.clone(),
            class_sizes: ctx.class_sizes.clone(),
            degrees,
            values,
            lookup: ClassLookup::CycleType(type_index),
        };
        table.sort_rows();
        table.verify_orthogonality()?;
        Ok(table)
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn row_count(&self) -> usize {
        self.values.len()
    }

    pub fn class_of(&self, g: &Permutation) -> usize {
        match &self.lookup {
            ClassLookup::CycleType(map) => map[&g.cycle_type().parts],
            ClassLookup::Table(map) => map[g],
        }
    }

    pub fn value(&self, row: usize, g: &Permutation) -> &Cyclotomic {
        &self.values[row][self.class_of(g)]
    }

    fn sort_rows(&mut self) {
        let e = self.exponent;
        let mut keyed: Vec<(u64, Vec<Vec<BigRational>>, usize)> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, row)| {
                (
                    self.degrees[i],
                    row.iter().map(|v| v.sort_key(e)).collect(),
                    i,
                )
            })
            .collect();
        keyed.sort();
        let perm: Vec<usize> = keyed.into_iter().map(|(_, _, i)| i).collect();
        self.values = perm.iter().map(|&i| self.values[i].clone()).collect();
        self.degrees = perm.iter().map(|&i| self.degrees[i]).collect();
    }

    /// First orthogonality relation for every pair of rows.
    pub fn verify_orthogonality(&self) -> Result<(), ChartabError> {
        let k = self.row_count();
        for i in 0..k {
            for j in i..k {
                let mut acc = Cyclotomic::zero();
                for (c, sz) in self.class_sizes.iter().enumerate() {
                    let term = self.values[i][c].mul(&self.values[j][c].conj());
                    acc = acc.add(&term.scale_int(*sz as i64));
                }
                let expect = if i == j {
                    Cyclotomic::from_integer(self.order as i64)
                } else {
                    Cyclotomic::zero()
                };
                if acc != expect {
                    return Err(ChartabError::Orthogonality(self.order));
                }
            }
        }
        Ok(())
    }
}

/// Convenience: sizes of the `S_n` classes of each cycle type, used by
/// table emitters.
pub fn symmetric_class_size(parts: &[usize]) -> u64 {
    class_size(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::GroupContext;
    use num_traits::Signed;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    #[test]
    fn s3_full_group() {
        let ctx = GroupContext::new(3);
        let t = CharacterTable::of_symmetric_group(&ctx).unwrap();
        assert_eq!(t.row_count(), 3);
        assert_eq!(t.degrees, vec![1, 1, 2]);
    }

    #[test]
    fn d8_table() {
        let ctx = GroupContext::new(4);
        let sub = ctx.centralizer(&p("(1,2)(3,4)", 4));
        let t = CharacterTable::of_subgroup(&sub).unwrap();
        assert_eq!(t.row_count(), 5);
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
        // all D8 character values are rational integers
        for row in &t.values {
            for v in row {
                v.as_integer().unwrap();
            }
        }
    }

    #[test]
    fn q8_like_centralizer_s5() {
        // C_{S_5}((1,2,3,4,5)) is cyclic of order 5: values are 5th roots
        let ctx = GroupContext::new(5);
        let sub = ctx.centralizer(&p("(1,2,3,4,5)", 5));
        let t = CharacterTable::of_subgroup(&sub).unwrap();
        assert_eq!(t.row_count(), 5);
        assert!(t.degrees.iter().all(|&d| d == 1));
    }

    #[test]
    fn dixon_matches_border_strip_on_s5() {
        let ctx = GroupContext::new(5);
        let full = Subgroup::from_elements(5, ctx.elements().collect());
        let via_dixon = CharacterTable::of_subgroup(&full).unwrap();
        let via_mn = CharacterTable::of_symmetric_group(&ctx).unwrap();
        assert_eq!(via_dixon.degrees, via_mn.degrees);
        // rows are sorted identically, but class orders differ; compare
        // through class representatives
        for (i, row) in via_mn.values.iter().enumerate() {
            for (j, rep) in ctx.class_reps.iter().enumerate() {
                assert_eq!(via_dixon.value(i, rep), &row[j], "row {i} rep {rep}");
            }
        }
    }

    #[test]
    fn centralizer_tables_up_to_s6() {
        for n in 3..=6 {
            let ctx = GroupContext::new(n);
            for u in &ctx.class_reps {
                let sub = ctx.centralizer(u);
                let t = CharacterTable::of_subgroup(&sub).unwrap();
                assert_eq!(t.row_count(), t.class_count(), "u = {u}");
                let sum: u64 = t.degrees.iter().map(|d| d * d).sum();
                assert_eq!(sum, t.order, "degree squares for u = {u}");
            }
        }
    }

    #[test]
    fn s6_transposition_centralizer_values_real_or_not() {
        // spot check: second orthogonality (column norm) on a mid-size table
        let ctx = GroupContext::new(6);
        let sub = ctx.centralizer(&p("(1,2)", 6));
        let t = CharacterTable::of_subgroup(&sub).unwrap();
        for c in 0..t.class_count() {
            let mut acc = Cyclotomic::zero();
            for row in &t.values {
                acc = acc.add(&row[c].mul(&row[c].conj()));
            }
            let norm = acc.as_rational().unwrap();
            assert!(norm.is_positive());
            assert_eq!(
                norm,
                num_rational::BigRational::from(num_bigint::BigInt::from(
                    (t.order / t.class_sizes[c]) as i64
                ))
            );
        }
    }
}
