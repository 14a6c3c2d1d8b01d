//! Resumable checkpoint store for long chunked runs: one JSON document
//! per (n, class, m) task plus a manifest, assembling to the same matrix
//! as a monolithic computation.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::chartab::CharacterTable;
use crate::indicator::{self, EngineError, IndicatorMatrix};
use crate::perm::GroupContext;

#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("engine: {0}")]
    Engine(#[from] EngineError),
    #[error("completed checkpoint for (i={i}, m={m}) disagrees with recomputation")]
    Mismatch { i: usize, m: u64 },
}

/// One completed (class, divisor) task: the indicator column for every
/// character of the centralizer, bound to its table by a signature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub n: usize,
    /// 1-based centralizer class index
    pub i: usize,
    /// class representative in cycle text
    pub u: String,
    pub m: u64,
    /// `nu_m` per table row, in table row order
    pub values: Vec<i64>,
    /// hash of the character table this column was computed against
    pub table_signature: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Manifest {
    /// completed `(i, m)` task keys
    pub done: BTreeSet<(usize, u64)>,
}

/// Hash binding a checkpoint to one concrete table: row order, degrees,
/// and every value's exact printed form all contribute.
pub fn table_signature(table: &CharacterTable) -> String {
    let mut hasher = Sha256::new();
    hasher.update(table.order.to_le_bytes());
    for (row, degree) in table.values.iter().zip(&table.degrees) {
        hasher.update(degree.to_le_bytes());
        for v in row {
            hasher.update(v.to_string().as_bytes());
            hasher.update([0u8]);
        }
    }
    format!("{:x}", hasher.finalize())
}

pub struct CheckpointStore {
    dir: PathBuf,
    n: usize,
    manifest: Manifest,
}

impl CheckpointStore {
    pub fn open(dir: &Path, n: usize) -> Result<CheckpointStore, CheckpointError> {
        fs::create_dir_all(dir)?;
        let manifest_path = dir.join(format!("manifest_n{n}.json"));
        let manifest = match fs::read_to_string(&manifest_path) {
            Ok(text) => serde_json::from_str(&text).unwrap_or_default(),
            Err(_) => Manifest::default(),
        };
        Ok(CheckpointStore {
            dir: dir.to_path_buf(),
            n,
            manifest,
        })
    }

    fn task_path(&self, i: usize, m: u64) -> PathBuf {
        self.dir.join(format!("n{}_i{}_m{}.json", self.n, i, m))
    }

    pub fn is_done(&self, i: usize, m: u64) -> bool {
        self.manifest.done.contains(&(i, m))
    }

    pub fn done_count(&self) -> usize {
        self.manifest.done.len()
    }

    /// Loads a completed checkpoint, discarding it (quarantined with a
    /// `.corrupt` suffix) if it fails to parse or was computed against a
    /// different table.
    pub fn load(
        &mut self,
        i: usize,
        m: u64,
        expected_signature: &str,
    ) -> Result<Option<Checkpoint>, CheckpointError> {
        let path = self.task_path(i, m);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(_) => {
                self.forget(i, m)?;
                return Ok(None);
            }
        };
        match serde_json::from_str::<Checkpoint>(&text) {
            Ok(cp) if cp.table_signature == expected_signature && cp.n == self.n => Ok(Some(cp)),
            _ => {
                self.quarantine(i, m)?;
                Ok(None)
            }
        }
    }

    fn quarantine(&mut self, i: usize, m: u64) -> Result<(), CheckpointError> {
        let path = self.task_path(i, m);
        if path.exists() {
            let mut bad = path.clone();
            bad.set_extension("json.corrupt");
            fs::rename(&path, &bad)?;
        }
        self.forget(i, m)
    }

    fn forget(&mut self, i: usize, m: u64) -> Result<(), CheckpointError> {
        if self.manifest.done.remove(&(i, m)) {
            self.write_manifest()?;
        }
        Ok(())
    }

    pub fn write(&mut self, cp: &Checkpoint) -> Result<(), CheckpointError> {
        let path = self.task_path(cp.i, cp.m);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(cp)?)?;
        fs::rename(&tmp, &path)?;
        self.manifest.done.insert((cp.i, cp.m));
        self.write_manifest()
    }

    fn write_manifest(&self) -> Result<(), CheckpointError> {
        let path = self.dir.join(format!("manifest_n{}.json", self.n));
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&self.manifest)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

/// Runs (or resumes) the full matrix through the checkpoint store. Each
/// (class, divisor) task is computed at most once; completed tasks are
/// loaded and, when `verify_completed` is set, recomputed and compared.
/// The assembled matrix is identical to `indicator_matrix`.
pub fn chunked_indicator_matrix(
    ctx: &GroupContext,
    store: &mut CheckpointStore,
    verify_completed: bool,
    mut progress: impl FnMut(usize, u64, bool),
) -> Result<IndicatorMatrix, CheckpointError> {
    let divisors = ctx.divisors_of_exponent();
    let mut labels = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (idx, u) in ctx.class_reps.iter().enumerate() {
        let i = idx + 1;
        let table = indicator::centralizer_table(ctx, u).map_err(EngineError::from)?;
        let signature = table_signature(&table);
        let mut class_rows = vec![Vec::with_capacity(divisors.len()); table.row_count()];
        for &m in &divisors {
            let loaded = if store.is_done(i, m) {
                store.load(i, m, &signature)?
            } else {
                None
            };
            let values = match loaded {
                Some(cp) if cp.values.len() == table.row_count() => {
                    if verify_completed {
                        let fresh = task_column(ctx, idx, &table, m)?;
                        if fresh != cp.values {
                            return Err(CheckpointError::Mismatch { i, m });
                        }
                    }
                    progress(i, m, true);
                    cp.values
                }
                _ => {
                    let values = task_column(ctx, idx, &table, m)?;
                    store.write(&Checkpoint {
                        n: ctx.degree,
                        i,
                        u: u.to_string(),
                        m,
                        values: values.clone(),
                        table_signature: signature.clone(),
                    })?;
                    progress(i, m, false);
                    values
                }
            };
            for (j, v) in values.into_iter().enumerate() {
                class_rows[j].push(v);
            }
        }
        for (j, row) in class_rows.into_iter().enumerate() {
            labels.push((i, j + 1));
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

/// One task: the `nu_m` column over all characters of centralizer `idx`
/// (0-based).
fn task_column(
    ctx: &GroupContext,
    idx: usize,
    table: &CharacterTable,
    m: u64,
) -> Result<Vec<i64>, EngineError> {
    let u = &ctx.class_reps[idx];
    if u.is_identity() {
        return (0..table.row_count())
            .map(|j| indicator::group_indicator(table, j, m))
            .collect();
    }
    let gs = indicator::gamma_set(ctx, u, table, m);
    (0..table.row_count())
        .map(|j| indicator::indicator(&gs, table, j))
        .collect()
}
