//! Exact rank and span computations.
//!
//! [`Echelon`] is an incremental sparse row echelon form over a field; it is
//! what everything else uses. [`bareiss_rank`] is a dense fraction-free
//! elimination kept as an independent check.

use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::One;

use crate::tensor_lab::scalar::Scalar;
use crate::tensor_lab::space::{Key, TensorVec};
use crate::{Integer, Rational};

/// Rows in echelon form keyed by their leading basis key.
///
/// Each stored row has coefficient one at its pivot and no term with a key
/// smaller than the pivot.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: BTreeMap<Key, TensorVec<F>>,
}

impl<F: Scalar> Default for Echelon<F> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<F: Scalar> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows until its leading key is not a pivot.
    pub fn reduce(&self, mut v: TensorVec<F>) -> TensorVec<F> {
        loop {
            let Some((lead, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            match self.rows.get(&lead) {
                Some(row) => v.add_scaled(row, &-c),
                None => return v,
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank went up.
    pub fn insert(&mut self, v: TensorVec<F>) -> bool {
        let v = self.reduce(v);
        let Some((lead, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = F::one() / c;
        self.rows.insert(lead, v.scaled(&inv));
        true
    }

    pub fn contains(&self, v: &TensorVec<F>) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Whether every vector of `other`'s span lies in this span.
    pub fn contains_span(&self, other: &Echelon<F>) -> bool {
        other.rows.values().all(|r| self.contains(r))
    }

    pub fn same_span(&self, other: &Echelon<F>) -> bool {
        self.rank() == other.rank() && self.contains_span(other)
    }

    pub fn rows(&self) -> impl Iterator<Item = &TensorVec<F>> {
        self.rows.values()
    }
}

impl<F: Scalar> FromIterator<TensorVec<F>> for Echelon<F> {
    fn from_iter<I: IntoIterator<Item = TensorVec<F>>>(iter: I) -> Self {
        let mut e = Echelon::new();
        for v in iter {
            e.insert(v);
        }
        e
    }
}

/// Dimension of the span of `vectors`.
pub fn rank<F: Scalar>(vectors: &[TensorVec<F>]) -> usize {
    vectors.iter().cloned().collect::<Echelon<F>>().rank()
}

/// Lays sparse vectors out as dense rows over the union of their keys.
pub fn to_dense<F: Scalar>(vectors: &[TensorVec<F>]) -> Vec<Vec<F>> {
    let mut keys: BTreeMap<&Key, usize> = BTreeMap::new();
    for v in vectors {
        for (k, _) in v.iter() {
            keys.insert(k, 0);
        }
    }
    for (i, slot) in keys.values_mut().enumerate() {
        *slot = i;
    }
    vectors
        .iter()
        .map(|v| {
            let mut row = vec![F::zero(); keys.len()];
            for (k, c) in v.iter() {
                row[keys[k]] = c.clone();
            }
            row
        })
        .collect()
}

/// Clears denominators row by row.
pub fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<Integer>> {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(Integer::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Rank by Bareiss fraction-free elimination.
///
/// Every division is exact, so this also works over an integral domain such
/// as [`Integer`].
pub fn bareiss_rank<F: Scalar>(mut m: Vec<Vec<F>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = F::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (m[r][c].clone() * m[i][j].clone() - m[i][c].clone() * m[r][j].clone()) / prev.clone();
                m[i][j] = v;
            }
            m[i][c] = F::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn vec_of(entries: &[(u8, i64)]) -> TensorVec<Rational> {
        entries.iter().map(|&(k, c)| (vec![vec![k]], q(c))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let a = vec_of(&[(0, 1), (1, 2)]);
        let b = vec_of(&[(1, 1), (2, 1)]);
        let c = vec_of(&[(0, 1), (1, 4), (2, 2)]);
        let e: Echelon<Rational> = [a.clone(), b.clone(), c.clone()].into_iter().collect();
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&c));
        assert!(!e.contains(&vec_of(&[(2, 1)])));
        let f: Echelon<Rational> = [c, b].into_iter().collect();
        assert!(e.same_span(&f));
    }

    #[test]
    fn bareiss_matches_echelon_on_integers() {
        let m: Vec<Vec<Integer>> = [[2, 4, 1, 0], [1, 2, 0, 3], [3, 6, 1, 3], [0, 0, 5, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
            .collect();
        assert_eq!(bareiss_rank(m.clone()), 3);
        let as_vecs: Vec<TensorVec<Rational>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(j, x)| (vec![vec![j as u8]], Rational::from_integer(x.clone())))
                    .collect()
            })
            .collect();
        assert_eq!(rank(&as_vecs), 3);
        let dense = to_dense(&as_vecs);
        assert_eq!(bareiss_rank(integer_rows(&dense)), 3);
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(bareiss_rank::<Integer>(vec![]), 0);
        assert_eq!(rank::<Rational>(&[TensorVec::zero()]), 0);
    }
}
