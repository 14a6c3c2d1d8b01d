//! The core computation: for each conjugacy-class representative `u` of
//! `S_n` and each divisor `m` of the group exponent, the indicator of every
//! irreducible character induced from `C(u)` is
//!
//! `nu_m = (1/|C(u)|) * sum_y Gamma_m(u,y) eta(y)`
//!
//! where the sum runs over centralizer classes of `m`-th powers of elements
//! `h` with `(uh)^m = h^m`. Values for non-divisor `m` follow from
//! `nu_m = nu_{gcd(m,e)}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chartab::{CharacterTable, ChartabError};
use crate::cyclo::Cyclotomic;
use crate::perm::{symmetric_group, GroupContext, Permutation};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error("non-integral indicator for u = {u}, row {row}, m = {m}: {value}")]
    NonIntegral { u: String, row: usize, m: u64, value: String },
    #[error("indicator out of i64 range for u = {u}, row {row}, m = {m}")]
    Overflow { u: String, row: usize, m: u64 },
}

/// Summation support of the indicator formula: the nonzero class-bucketed
/// counts `Gamma_m(u, y)` keyed by centralizer class index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    pub m: u64,
    /// `(count, class index in the centralizer table)`, count > 0
    pub entries: Vec<(u64, usize)>,
}

impl GammaSet {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|G_m(u)|` — the number of qualifying `h`.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(c, _)| c).sum()
    }

    pub fn count_for(&self, class: usize) -> u64 {
        self.entries
            .iter()
            .find(|&&(_, c)| c == class)
            .map(|&(c, _)| c)
            .unwrap_or(0)
    }
}

/// True exactly when the scan is provably empty: an odd `u` with odd `m`
/// admits no `h` at all.
pub fn parity_skip(u: &Permutation, m: u64) -> bool {
    u.parity() == -1 && m % 2 == 1
}

/// Scans `S_n` for `h` with `(uh)^m = h^m`, bucketing `h^m` by centralizer
/// class. `table` must be the character table of `C(u)`.
pub fn gamma_set(
    ctx: &GroupContext,
    u: &Permutation,
    table: &CharacterTable,
    m: u64,
) -> GammaSet {
    if parity_skip(u, m) {
        return GammaSet { m, entries: Vec::new() };
    }
    gamma_set_forced(ctx, u, table, m)
}

/// The same scan without the parity shortcut (used to test the shortcut).
pub fn gamma_set_forced(
    ctx: &GroupContext,
    u: &Permutation,
    table: &CharacterTable,
    m: u64,
) -> GammaSet {
    let k = table.class_count();
    let counts: Vec<u64> = if u.is_identity() {
        // every h qualifies; bucket whole S_n classes through rep^m
        let mut counts = vec![0u64; k];
        for (j, rep) in ctx.class_reps.iter().enumerate() {
            counts[table.class_of(&rep.power(m))] += ctx.class_sizes[j];
        }
        counts
    } else {
        symmetric_group(ctx.degree)
            .par_bridge()
            .fold(
                || vec![0u64; k],
                |mut acc, h| {
                    let hm = h.power(m);
                    if u.mul(&h).power(m) == hm {
                        acc[table.class_of(&hm)] += 1;
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u64; k],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(&b) {
                        *x += y;
                    }
                    a
                },
            )
    };
    GammaSet {
        m,
        entries: counts
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(i, c)| (c, i))
            .collect(),
    }
}

/// `nu_m` for the character induced from row `row` of the centralizer
/// table. Non-integral and negative results are implementation bugs and
/// surface as errors.
pub fn indicator(gs: &GammaSet, table: &CharacterTable, row: usize) -> Result<i64, EngineError> {
    let mut acc = Cyclotomic::zero();
    for &(count, class) in &gs.entries {
        acc = acc.add(&table.values[row][class].scale_int(count as i64));
    }
    let acc = acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(table.order)));
    finish(acc, table, row, gs.m)
}

/// Classical `m`-th indicator of a character of the group itself:
/// `(1/|H|) sum_h eta(h^m)`, summed class-by-class.
pub fn group_indicator(table: &CharacterTable, row: usize, m: u64) -> Result<i64, EngineError> {
    let mut acc = Cyclotomic::zero();
    for (j, rep) in table.class_reps.iter().enumerate() {
        let v = table.value(row, &rep.power(m));
        acc = acc.add(&v.scale_int(table.class_sizes[j] as i64));
    }
    let acc = acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(table.order)));
    finish(acc, table, row, m)
}

fn finish(acc: Cyclotomic, table: &CharacterTable, row: usize, m: u64) -> Result<i64, EngineError> {
    let label = format!("table of order {}", table.order);
    let int = acc.as_integer().map_err(|_| EngineError::NonIntegral {
        u: label.clone(),
        row,
        m,
        value: acc.to_string(),
    })?;
    if int.is_negative() {
        return Err(EngineError::NonIntegral {
            u: label.clone(),
            row,
            m,
            value: int.to_string(),
        });
    }
    int.to_i64().ok_or(EngineError::Overflow { u: label, row, m })
}

/// Indicator rows over `divisors` for every irreducible character of
/// `C(u)`; rows are in the table's row order.
pub fn indicators_for_class(
    ctx: &GroupContext,
    u: &Permutation,
    table: &CharacterTable,
    divisors: &[u64],
) -> Result<Vec<Vec<i64>>, EngineError> {
    let mut rows = vec![Vec::with_capacity(divisors.len()); table.row_count()];
    if u.is_identity() {
        // trivially induced characters: classical group indicators
        for &m in divisors {
            for (j, row) in rows.iter_mut().enumerate() {
                row.push(group_indicator(table, j, m)?);
            }
        }
        return Ok(rows);
    }
    let sets: Vec<GammaSet> = divisors
        .par_iter()
        .map(|&m| gamma_set(ctx, u, table, m))
        .collect();
    for gs in &sets {
        for (j, row) in rows.iter_mut().enumerate() {
            row.push(indicator(gs, table, j)?);
        }
    }
    Ok(rows)
}

/// `nu_m` for arbitrary `m >= 1` from a row indexed by the divisors of `e`.
pub fn extend_to_all_m(row: &[i64], divisors: &[u64], e: u64, m: u64) -> i64 {
    let d = m.gcd(&e);
    let idx = divisors
        .iter()
        .position(|&x| x == d)
        .expect("gcd with the exponent is a divisor of the exponent");
    row[idx]
}

/// The complete table for `D(S_n)`: one row per induced character
/// `chi_{i.j}`, one column per divisor of `exp(S_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndicatorMatrix {
    pub n: usize,
    pub exponent: u64,
    pub divisors: Vec<u64>,
    /// 1-based `(i, j)` labels parallel to `rows`
    pub labels: Vec<(usize, usize)>,
    pub rows: Vec<Vec<i64>>,
}

impl IndicatorMatrix {
    pub fn label_of(&self, row: usize) -> String {
        let (i, j) = self.labels[row];
        format!("{i}.{j}")
    }

    /// Rows grouped by the inducing class index `i` (1-based).
    pub fn class_rows(&self, i: usize) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| self.labels[r].0 == i).collect()
    }
}

/// Builds the table of a single centralizer, dispatching the identity
/// class to the symmetric-group fast path.
pub fn centralizer_table(ctx: &GroupContext, u: &Permutation) -> Result<CharacterTable, ChartabError> {
    if u.is_identity() {
        CharacterTable::of_symmetric_group(ctx)
    } else {
        CharacterTable::of_subgroup(&ctx.centralizer(u))
    }
}

pub fn indicator_matrix(ctx: &GroupContext) -> Result<IndicatorMatrix, EngineError> {
    let divisors = ctx.divisors_of_exponent();
    let per_class: Vec<Result<Vec<Vec<i64>>, EngineError>> = ctx
        .class_reps
        .par_iter()
        .map(|u| {
            let table = centralizer_table(ctx, u)?;
            indicators_for_class(ctx, u, &table, &divisors)
        })
        .collect();
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for (i, res) in per_class.into_iter().enumerate() {
        let class_rows = res?;
        for (j, row) in class_rows.into_iter().enumerate() {
            labels.push((i + 1, j + 1));
            rows.push(row);
        }
    }
    Ok(IndicatorMatrix {
        n: ctx.degree,
        exponent: ctx.exponent,
        divisors,
        labels,
        rows,
    })
}

/// Checks `nu_1 = 0` off the trivial character, `nu_2 = 1`, and
/// nonnegativity; used by both tests and the verification command.
pub fn check_observed_laws(m: &IndicatorMatrix) -> Result<(), String> {
    let col2 = m.divisors.iter().position(|&d| d == 2);
    for (r, row) in m.rows.iter().enumerate() {
        if let Some(c) = col2 {
            if row[c] != 1 {
                return Err(format!("nu_2 = {} at row {}", row[c], m.label_of(r)));
            }
        }
        if row.iter().any(|&v| v < 0) {
            return Err(format!("negative entry at row {}", m.label_of(r)));
        }
    }
    // column m=1 sums to 1: only the trivial character has nu_1 = 1
    let ones: i64 = m.rows.iter().map(|row| row[0]).sum();
    if ones != 1 {
        return Err(format!("m=1 column sums to {ones}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    fn fixture_entries(
        table: &CharacterTable,
        gs: &GammaSet,
        expected: &[(u64, &str)],
        n: usize,
    ) {
        assert_eq!(gs.entries.len(), expected.len(), "entry count");
        for &(count, rep) in expected {
            let class = table.class_of(&p(rep, n));
            assert_eq!(gs.count_for(class), count, "count at {rep}");
        }
    }

    #[test]
    fn s5_transposition_m2() {
        let ctx = GroupContext::new(5);
        let u = p("(1,2)", 5);
        let table = centralizer_table(&ctx, &u).unwrap();
        let gs = gamma_set(&ctx, &u, &table, 2);
        fixture_entries(&table, &gs, &[(8, "()"), (4, "(3,4,5)")], 5);
    }

    #[test]
    fn s3_fixtures() {
        let ctx = GroupContext::new(3);
        let u2 = p("(1,2)", 3);
        let t2 = centralizer_table(&ctx, &u2).unwrap();
        assert!(gamma_set(&ctx, &u2, &t2, 3).is_empty());
        let u3 = p("(1,2,3)", 3);
        let t3 = centralizer_table(&ctx, &u3).unwrap();
        fixture_entries(&t3, &gamma_set(&ctx, &u3, &t3, 6), &[(6, "()")], 3);
        // identity-class shortcut, m = 2
        let t1 = centralizer_table(&ctx, &p("()", 3)).unwrap();
        let gs = gamma_set(&ctx, &p("()", 3), &t1, 2);
        fixture_entries(&t1, &gs, &[(4, "()"), (2, "(1,2,3)")], 3);
    }

    #[test]
    fn identity_shortcut_matches_forced_scan() {
        for n in 3..=5 {
            let ctx = GroupContext::new(n);
            let id = Permutation::identity(n);
            let table = centralizer_table(&ctx, &id).unwrap();
            for &m in &ctx.divisors_of_exponent() {
                let fast = gamma_set(&ctx, &id, &table, m);
                // direct scan without the class-size shortcut
                let mut counts = vec![0u64; table.class_count()];
                for h in ctx.elements() {
                    counts[table.class_of(&h.power(m))] += 1;
                }
                for (i, &c) in counts.iter().enumerate() {
                    assert_eq!(fast.count_for(i), c, "n={n} m={m} class {i}");
                }
            }
        }
    }

    #[test]
    fn gamma_total_matches_rescan() {
        let ctx = GroupContext::new(4);
        for u in &ctx.class_reps {
            let table = centralizer_table(&ctx, u).unwrap();
            for &m in &ctx.divisors_of_exponent() {
                let gs = gamma_set(&ctx, u, table_ref(&table), m);
                let direct = ctx
                    .elements()
                    .filter(|h| u.mul(h).power(m) == h.power(m))
                    .count() as u64;
                assert_eq!(gs.total(), direct, "u={u} m={m}");
            }
        }
    }

    fn table_ref(t: &CharacterTable) -> &CharacterTable {
        t
    }

    #[test]
    fn spec_indicator_values() {
        let ctx = GroupContext::new(3);
        let u = p("(1,2)", 3);
        let table = centralizer_table(&ctx, &u).unwrap();
        let gs = gamma_set(&ctx, &u, &table, 6);
        for row in 0..table.row_count() {
            assert_eq!(indicator(&gs, &table, row).unwrap(), 3);
        }

        let ctx4 = GroupContext::new(4);
        let u4 = p("(1,2,3)", 4);
        let t4 = centralizer_table(&ctx4, &u4).unwrap();
        let gs4 = gamma_set(&ctx4, &u4, &t4, 12);
        let trivial = (0..t4.row_count())
            .find(|&r| t4.values[r].iter().all(|v| v == &Cyclotomic::one()))
            .unwrap();
        assert_eq!(indicator(&gs4, &t4, trivial).unwrap(), 8);
    }

    #[test]
    fn s5_five_cycle_rows() {
        let ctx = GroupContext::new(5);
        let u = p("(1,2,3,4,5)", 5);
        let table = centralizer_table(&ctx, &u).unwrap();
        let rows = indicators_for_class(&ctx, &u, &table, &ctx.divisors_of_exponent()).unwrap();
        assert_eq!(rows.len(), 5);
        for row in &rows {
            assert_eq!(row, &vec![0, 1, 1, 6, 2, 7, 5, 16, 7, 10, 15, 24]);
        }
    }

    #[test]
    fn extension_rule() {
        let divisors = vec![1, 2, 3, 6];
        let row = vec![0, 1, 1, 2];
        assert_eq!(extend_to_all_m(&row, &divisors, 6, 4), 1);
        assert_eq!(extend_to_all_m(&row, &divisors, 6, 12), 2);
        assert_eq!(extend_to_all_m(&row, &divisors, 6, 5), 0);
    }

    #[test]
    fn s3_matrix_laws() {
        let ctx = GroupContext::new(3);
        let m = indicator_matrix(&ctx).unwrap();
        assert_eq!(m.rows.len(), 8);
        check_observed_laws(&m).unwrap();
    }
}
