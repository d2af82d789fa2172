//! Closed-form `Tor^R_i(-, k)` for elementary modules and their truncations,
//! Betti tables, and `Ext` between simple objects.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::eqmod::{ModuleKind, ModuleModel};
use crate::error::{Error, Result};
use crate::partitions::{vertical_strips, Partition};
use crate::rep_ring::{DimContext, RepSum};

/// `B(λ, i)`: add a vertical strip of `i` boxes to `λ` avoiding the first
/// row; partitions with more than `n` rows are dropped.
pub fn first_row_fixed_strips(lambda: &Partition, i: usize, ctx: DimContext) -> BTreeSet<Partition> {
    vertical_strips(lambda, i)
        .into_iter()
        .filter(|eta| eta.first_row() == lambda.first_row() && ctx.admits(eta))
        .collect()
}

/// `Tor_i(M_λ)`, concentrated in degree `|λ| + i`.
pub fn tor_elementary(lambda: &Partition, i: usize, ctx: DimContext) -> RepSum {
    if !ctx.admits(lambda) {
        return RepSum::zero();
    }
    RepSum::from_partitions(first_row_fixed_strips(lambda, i, ctx))
}

/// `Tor_i` of a truncation, split by internal degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationTor {
    /// In degree `|λ| + i`.
    pub bottom: RepSum,
    /// In degree `|λ| + l + i − 1`; always zero when `l = 1`.
    pub top: RepSum,
}

/// `Tor_i(M_λ / V^l M_λ)`.
///
/// For `l ≥ 2` the bottom strand is `B(λ, i)` and the top strand is
/// `B(λ + (l), i − 1)`. For `l = 1` the module is `S_λ` itself and the
/// answer is all of `VS(λ, i)`.
pub fn tor_truncation(lambda: &Partition, l: usize, i: usize, ctx: DimContext) -> Result<TruncationTor> {
    if l == 0 {
        return Err(Error::Precondition("a truncation needs l ≥ 1".into()));
    }
    if !ctx.admits(lambda) {
        return Ok(TruncationTor::default());
    }
    if l == 1 {
        let all = vertical_strips(lambda, i).into_iter().filter(|eta| ctx.admits(eta));
        return Ok(TruncationTor {
            bottom: RepSum::from_partitions(all),
            top: RepSum::zero(),
        });
    }
    let top = match i.checked_sub(1) {
        Some(j) => tor_elementary(&lambda.extend_first_row(l), j, ctx),
        None => RepSum::zero(),
    };
    Ok(TruncationTor {
        bottom: tor_elementary(lambda, i, ctx),
        top,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: usize,
    pub terms: RepSum,
}

/// Nonzero `Tor_i` components by `(i, degree)`, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub n: usize,
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, i: usize, degree: usize) -> RepSum {
        self.entries
            .iter()
            .find(|e| e.i == i && e.degree == degree)
            .map(|e| e.terms.clone())
            .unwrap_or_default()
    }

    /// `Tor_i` summed over all degrees.
    pub fn tor(&self, i: usize) -> RepSum {
        self.entries
            .iter()
            .filter(|e| e.i == i)
            .fold(RepSum::zero(), |acc, e| &acc + &e.terms)
    }

    /// Entries as `(i, degree, terms)` triples.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &RepSum)> {
        self.entries.iter().map(|e| (e.i, e.degree, &e.terms))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn push(&mut self, i: usize, degree: usize, terms: RepSum) {
        if terms.is_zero() {
            return;
        }
        match self.entries.iter_mut().find(|e| e.i == i && e.degree == degree) {
            Some(e) => e.terms += &terms,
            None => self.entries.push(BettiEntry { i, degree, terms }),
        }
    }
}

/// All nonzero Betti entries of `m`.
pub fn betti_table(m: &ModuleModel) -> BettiTable {
    let ctx = m.ctx;
    let n = ctx.n();
    let lambda = m.lambda();
    let base = m.base_degree();
    let mut t = BettiTable { n, entries: Vec::new() };
    if m.is_zero() {
        return t;
    }
    match &m.kind {
        ModuleKind::Projective { .. } => t.push(0, base, RepSum::single(lambda.clone())),
        ModuleKind::Elementary { .. } => {
            for i in 0..=n {
                t.push(i, base + i, tor_elementary(lambda, i, ctx));
            }
        }
        ModuleKind::Truncation { l, .. } => {
            for i in 0..=n {
                let tor = tor_truncation(lambda, *l, i, ctx).expect("l ≥ 1 by construction");
                t.push(i, base + i, tor.bottom);
                t.push(i, base + l + i - 1, tor.top);
            }
        }
    }
    t.entries.sort_by_key(|e| (e.i, e.degree));
    t
}

/// `dim Ext^i(S_λ, S_η)`, which is 1 exactly when `η ∈ VS(λ, i)` and `S_η ≠ 0`.
pub fn ext_simples(lambda: &Partition, eta: &Partition, i: usize, ctx: DimContext) -> u8 {
    u8::from(ctx.admits(eta) && vertical_strips(lambda, i).contains(eta))
}

/// Largest `i` with `Tor_i(m) ≠ 0`.
pub fn projective_dimension(m: &ModuleModel) -> Result<usize> {
    betti_table(m)
        .entries
        .iter()
        .map(|e| e.i)
        .max()
        .ok_or(Error::ZeroModule)
}
