//! Tensor products of exterior and symmetric powers of `V = k^n`, vectors in
//! them, and linear maps between them.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tensor_lab::scalar::Scalar;
use crate::tensor_lab::schur::semistandard_tableaux;

/// Largest basis a single map may materialize before we give up.
pub const DEFAULT_BASIS_CAP: u128 = 1_000_000;

/// One tensor factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `Λ^p V`, basis `e_I` for strictly increasing `I`.
    Ext(usize),
    /// `Sym_p V`, basis monomials keyed by weakly increasing index tuples.
    Sym(usize),
}

impl Factor {
    pub fn degree(&self) -> usize {
        match *self {
            Factor::Ext(p) | Factor::Sym(p) => p,
        }
    }

    /// Degree that counts for Koszul signs: `p` for `Λ^p`, zero for `Sym_p`.
    pub fn parity_degree(&self) -> usize {
        match *self {
            Factor::Ext(p) => p,
            Factor::Sym(_) => 0,
        }
    }

    pub fn dim(&self, n: usize) -> u128 {
        match *self {
            Factor::Ext(p) => binomial(n as u128, p as u128),
            Factor::Sym(p) => {
                if n == 0 {
                    u128::from(p == 0)
                } else {
                    binomial((n + p - 1) as u128, p as u128)
                }
            }
        }
    }

    /// Basis index tuples (0-based entries) in lexicographic order.
    pub fn basis(&self, n: usize) -> Vec<Vec<u8>> {
        fn go(n: u8, len: usize, strict: bool, acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if acc.len() == len {
                out.push(acc.clone());
                return;
            }
            let start = match acc.last() {
                None => 0,
                Some(&l) => l + u8::from(strict),
            };
            for x in start..n {
                acc.push(x);
                go(n, len, strict, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        let strict = matches!(self, Factor::Ext(_));
        go(n as u8, self.degree(), strict, &mut Vec::new(), &mut out);
        out
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Basis element of a [`TensorSpace`]: one sorted index tuple per factor.
pub type Key = Vec<Vec<u8>>;

/// An ordered tensor product of [`Factor`]s over `V` of dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    factors: Vec<Factor>,
    n: usize,
}

impl TensorSpace {
    pub fn new(factors: Vec<Factor>, n: usize) -> Self {
        TensorSpace { factors, n }
    }

    /// `Λ^{l_1} V ⊗ ⋯ ⊗ Λ^{l_t} V`.
    pub fn exterior(l: &[usize], n: usize) -> Self {
        Self::new(l.iter().map(|&p| Factor::Ext(p)).collect(), n)
    }

    /// `Sym_{l_1} V ⊗ ⋯ ⊗ Sym_{l_t} V`.
    pub fn symmetric(l: &[usize], n: usize) -> Self {
        Self::new(l.iter().map(|&p| Factor::Sym(p)).collect(), n)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn then(&self, other: &TensorSpace) -> TensorSpace {
        debug_assert_eq!(self.n, other.n);
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        TensorSpace::new(factors, self.n)
    }

    pub fn dim(&self) -> u128 {
        self.factors.iter().map(|f| f.dim(self.n)).product()
    }

    pub fn check_cap(&self, cap: u128) -> Result<()> {
        let dim = self.dim();
        if dim > cap {
            return Err(Error::Guardrail(format!(
                "basis of {self} has {dim} elements (cap {cap})"
            )));
        }
        Ok(())
    }

    /// Product basis in lexicographic order.
    pub fn basis(&self) -> Vec<Key> {
        let mut out: Vec<Key> = vec![Vec::new()];
        for f in &self.factors {
            let fb = f.basis(self.n);
            out = out
                .into_iter()
                .flat_map(|k| {
                    fb.iter().map(move |b| {
                        let mut k = k.clone();
                        k.push(b.clone());
                        k
                    })
                })
                .collect();
        }
        out
    }

    /// Whether `key` is a basis element of this space.
    pub fn contains(&self, key: &Key) -> bool {
        key.len() == self.factors.len()
            && key.iter().zip(&self.factors).all(|(k, f)| {
                k.len() == f.degree()
                    && k.iter().all(|&x| (x as usize) < self.n)
                    && match f {
                        Factor::Ext(_) => k.windows(2).all(|w| w[0] < w[1]),
                        Factor::Sym(_) => k.windows(2).all(|w| w[0] <= w[1]),
                    }
            })
    }
}

impl fmt::Display for TensorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "k");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊗ ")?;
            }
            match fac {
                Factor::Ext(p) => write!(f, "Λ^{p}")?,
                Factor::Sym(p) => write!(f, "Sym_{p}")?,
            }
        }
        write!(f, " (n = {})", self.n)
    }
}

/// A sparse vector: basis key → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVec<F> {
    terms: BTreeMap<Key, F>,
}

impl<F: Scalar> Default for TensorVec<F> {
    fn default() -> Self {
        TensorVec { terms: BTreeMap::new() }
    }
}

impl<F: Scalar> TensorVec<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: Key) -> Self {
        let mut v = Self::zero();
        v.add_term(key, F::one());
        v
    }

    pub fn add_term(&mut self, key: Key, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &TensorVec<F>, c: &F) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn scaled(&self, c: &F) -> TensorVec<F> {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, key: &Key) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &F)> {
        self.terms.iter()
    }

    /// Applies a linear map given on basis keys.
    pub fn map<G: FnMut(&Key) -> TensorVec<F>>(&self, mut f: G) -> TensorVec<F> {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a linear map given on basis keys as `(key, coefficient)` lists.
    pub fn map_terms<G, I>(&self, mut f: G) -> TensorVec<F>
    where
        G: FnMut(&Key) -> I,
        I: IntoIterator<Item = (Key, F)>,
    {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in f(k) {
                out.add_term(k2, c2 * c.clone());
            }
        }
        out
    }

    /// `Some(c)` with `self = c · other`, if such a nonzero scalar exists.
    pub fn ratio_to(&self, other: &TensorVec<F>) -> Option<F> {
        if self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (k0, a0) = self.terms.iter().next()?;
        let b0 = other.terms.get(k0)?;
        let c = a0.clone() / b0.clone();
        let same = self
            .terms
            .iter()
            .all(|(k, a)| other.terms.get(k).is_some_and(|b| *a == c.clone() * b.clone()));
        same.then_some(c)
    }
}

impl<F: Scalar> FromIterator<(Key, F)> for TensorVec<F> {
    fn from_iter<I: IntoIterator<Item = (Key, F)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

/// Source of a [`LinMap`]: either a tensor space with its product basis, or
/// a Schur module `S_λ` with its semistandard-tableau basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Tensor(TensorSpace),
    Schur { shape: Partition, n: usize },
}

impl Domain {
    pub fn dim(&self) -> u128 {
        match self {
            Domain::Tensor(t) => t.dim(),
            Domain::Schur { shape, n } => semistandard_tableaux(shape, *n).len() as u128,
        }
    }
}

/// A linear map stored column by column in the source basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap<F> {
    source: Domain,
    target: TensorSpace,
    columns: Vec<TensorVec<F>>,
    index: HashMap<Key, usize>,
}

impl<F: Scalar> LinMap<F> {
    /// Materializes a map on a tensor space from its values on basis keys.
    pub fn from_fn<G>(source: TensorSpace, target: TensorSpace, cap: u128, f: G) -> Result<Self>
    where
        G: FnMut(&Key) -> TensorVec<F>,
    {
        source.check_cap(cap)?;
        target.check_cap(cap)?;
        let basis = source.basis();
        let columns: Vec<_> = basis.iter().map(f).collect();
        let index = basis.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
        Ok(LinMap {
            source: Domain::Tensor(source),
            target,
            columns,
            index,
        })
    }

    /// A map out of a Schur module, one column per semistandard tableau.
    pub fn from_columns(source: Domain, target: TensorSpace, columns: Vec<TensorVec<F>>) -> Self {
        debug_assert_eq!(source.dim(), columns.len() as u128);
        LinMap {
            source,
            target,
            columns,
            index: HashMap::new(),
        }
    }

    pub fn identity(space: TensorSpace, cap: u128) -> Result<Self> {
        Self::from_fn(space.clone(), space, cap, |k| TensorVec::basis(k.clone()))
    }

    pub fn source(&self) -> &Domain {
        &self.source
    }

    pub fn target(&self) -> &TensorSpace {
        &self.target
    }

    pub fn columns(&self) -> &[TensorVec<F>] {
        &self.columns
    }

    /// Image of a source basis key (tensor-space sources only).
    pub fn apply_key(&self, key: &Key) -> TensorVec<F> {
        match self.index.get(key) {
            Some(&i) => self.columns[i].clone(),
            None => panic!("{key:?} is not a basis element of the source"),
        }
    }

    pub fn apply(&self, v: &TensorVec<F>) -> TensorVec<F> {
        v.map(|k| self.apply_key(k))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &LinMap<F>) -> Result<LinMap<F>> {
        if Domain::Tensor(first.target.clone()) != self.source {
            return Err(Error::Precondition(format!(
                "cannot compose: {} does not match the source",
                first.target
            )));
        }
        Ok(LinMap {
            source: first.source.clone(),
            target: self.target.clone(),
            columns: first.columns.iter().map(|c| self.apply(c)).collect(),
            index: first.index.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn rank(&self) -> usize {
        crate::tensor_lab::linalg::rank(&self.columns)
    }

    /// `Some(c)` with `self = c · other` columnwise, for one global scalar `c`.
    pub fn ratio_to(&self, other: &LinMap<F>) -> Option<F> {
        if self.columns.len() != other.columns.len() || self.target != other.target {
            return None;
        }
        let mut scalar: Option<F> = None;
        for (a, b) in self.columns.iter().zip(&other.columns) {
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let c = a.ratio_to(b)?;
            match &scalar {
                None => scalar = Some(c),
                Some(s) if *s == c => {}
                Some(_) => return None,
            }
        }
        scalar
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn basis_sizes() {
        for n in 1..=4 {
            for p in 0..=4 {
                assert_eq!(Factor::Ext(p).basis(n).len() as u128, Factor::Ext(p).dim(n));
                assert_eq!(Factor::Sym(p).basis(n).len() as u128, Factor::Sym(p).dim(n));
            }
        }
        let t = TensorSpace::new(vec![Factor::Ext(2), Factor::Sym(2)], 3);
        assert_eq!(t.basis().len(), 3 * 6);
        assert!(t.basis().iter().all(|k| t.contains(k)));
    }

    #[test]
    fn guardrail_trips() {
        let big = TensorSpace::symmetric(&[6, 6, 6], 8);
        let err = LinMap::<Rational>::identity(big, DEFAULT_BASIS_CAP).unwrap_err();
        assert!(matches!(err, Error::Guardrail(_)));
    }

    #[test]
    fn composition_and_identity() {
        let t = TensorSpace::exterior(&[1, 2], 3);
        let id = LinMap::<Rational>::identity(t.clone(), DEFAULT_BASIS_CAP).unwrap();
        let twice = LinMap::from_fn(t.clone(), t.clone(), DEFAULT_BASIS_CAP, |k| {
            TensorVec::basis(k.clone()).scaled(&Rational::from_int(2))
        })
        .unwrap();
        assert_eq!(id.after(&twice).unwrap(), twice);
        assert_eq!(twice.ratio_to(&id), Some(Rational::from_int(2)));
        assert_eq!(id.rank(), 9);
    }
}
