//! Grouping of induced characters with identical indicator vectors
//! (I-equivalence), homogeneous/mixed detection, and the audit that
//! classifies every zero indicator as expected or unexpected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::indicator::{GammaSet, IndicatorMatrix};
use crate::perm::{GroupContext, Permutation, Subgroup};

/// A maximal set of induced characters sharing one indicator vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IEquivalenceClass {
    /// 1-based `(i, j)` labels
    pub members: Vec<(usize, usize)>,
    pub row: Vec<i64>,
    /// true when all members are induced from the same centralizer
    pub homogeneous: bool,
}

impl IEquivalenceClass {
    pub fn centralizer_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.members.iter().map(|&(i, _)| i).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Groups identical rows, preserving first-seen order. Comparing over the
/// divisor columns suffices since every other `m` reduces to one of them.
pub fn reduce(matrix: &IndicatorMatrix) -> Vec<IEquivalenceClass> {
    let mut classes: Vec<IEquivalenceClass> = Vec::new();
    for (r, row) in matrix.rows.iter().enumerate() {
        match classes.iter_mut().find(|c| &c.row == row) {
            Some(c) => c.members.push(matrix.labels[r]),
            None => classes.push(IEquivalenceClass {
                members: vec![matrix.labels[r]],
                row: row.clone(),
                homogeneous: true,
            }),
        }
    }
    for c in &mut classes {
        c.homogeneous = c.centralizer_indices().len() == 1;
    }
    classes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroReason {
    MIsOne,
    TriviallyInduced,
    OddUOddM,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroRecord {
    /// 1-based `(i, j)` label of the character
    pub label: (usize, usize),
    pub m: u64,
    pub unexpected: bool,
    pub reason: ZeroReason,
}

/// One line of the audit table: a centralizer and the `m` values at which
/// the same number of I-classes vanish unexpectedly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroTableRow {
    pub class_index: usize,
    pub u: String,
    /// the full set of m values at which these classes vanish unexpectedly
    pub ms: Vec<u64>,
    /// number of I-classes attributed to `u` with exactly this `ms` set
    pub class_count: usize,
    /// true when every I-class induced from `u` is counted in this line
    pub all: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroAudit {
    pub records: Vec<ZeroRecord>,
    pub table: Vec<ZeroTableRow>,
    /// number of (I-class, m) incidences classified unexpected
    pub unexpected_total: usize,
    /// distinct indicator rows not induced from the identity class
    pub nontrivial_class_total: usize,
}

/// Classifies every zero entry of the matrix. A zero is expected when
/// `m = 1`, when the character is induced from the identity class, or when
/// `u` and `m` are both odd; anything else is unexpected.
pub fn zero_audit(matrix: &IndicatorMatrix, ctx: &GroupContext) -> ZeroAudit {
    let parities: Vec<i32> = ctx.class_reps.iter().map(|u| u.parity()).collect();
    let mut records = Vec::new();
    for (r, row) in matrix.rows.iter().enumerate() {
        let (i, _) = matrix.labels[r];
        for (c, &m) in matrix.divisors.iter().enumerate() {
            if row[c] != 0 {
                continue;
            }
            let reason = if m == 1 {
                ZeroReason::MIsOne
            } else if i == 1 {
                ZeroReason::TriviallyInduced
            } else if parities[i - 1] == -1 && m % 2 == 1 {
                ZeroReason::OddUOddM
            } else {
                ZeroReason::None
            };
            records.push(ZeroRecord {
                label: matrix.labels[r],
                m,
                unexpected: reason == ZeroReason::None,
                reason,
            });
        }
    }

    // The summary counts work on I-classes, not individual characters: a
    // class zero is expected when m = 1, when the class is trivially
    // induced, or when every inducing u is odd and m is odd. A class
    // induced from several centralizers is attributed to the lowest index.
    let classes = reduce(matrix);
    let nontrivial_class_total = classes
        .iter()
        .filter(|c| c.centralizer_indices() != vec![1])
        .count();

    let mut class_unexpected: Vec<(usize, Vec<u64>)> = Vec::new();
    for c in &classes {
        let idxs = c.centralizer_indices();
        if idxs[0] == 1 {
            continue;
        }
        let all_odd = idxs.iter().all(|&i| parities[i - 1] == -1);
        let ms: Vec<u64> = matrix
            .divisors
            .iter()
            .enumerate()
            .filter(|&(col, &m)| c.row[col] == 0 && m != 1 && !(all_odd && m % 2 == 1))
            .map(|(_, &m)| m)
            .collect();
        if !ms.is_empty() {
            class_unexpected.push((idxs[0], ms));
        }
    }
    let unexpected_total: usize = class_unexpected.iter().map(|(_, ms)| ms.len()).sum();

    // one audit line per (centralizer, vanishing-m set), counting classes
    let mut grouped: BTreeMap<(usize, Vec<u64>), usize> = BTreeMap::new();
    for (i, ms) in class_unexpected {
        *grouped.entry((i, ms)).or_default() += 1;
    }
    let table = grouped
        .into_iter()
        .map(|((i, ms), count)| {
            let induced_from_i = classes
                .iter()
                .filter(|c| c.centralizer_indices().contains(&i))
                .count();
            ZeroTableRow {
                class_index: i,
                u: ctx.class_reps[i - 1].to_string(),
                ms,
                class_count: count,
                all: count == induced_from_i,
            }
        })
        .collect();

    ZeroAudit {
        records,
        table,
        unexpected_total,
        nontrivial_class_total,
    }
}

/// True when one indicator row can be computed and replicated across every
/// character of `C(u)`: the centralizer is abelian and each summation
/// support is empty or the identity class alone, so all rows coincide.
pub fn abelian_singleton_predictor(
    centralizer: &Subgroup,
    table: &CharacterTable,
    gamma_sets: &[GammaSet],
) -> bool {
    if !centralizer.is_abelian() {
        return false;
    }
    let id_class = table.class_of(&Permutation::identity(centralizer.parent_degree));
    gamma_sets
        .iter()
        .all(|gs| gs.entries.iter().all(|&(_, c)| c == id_class))
}
