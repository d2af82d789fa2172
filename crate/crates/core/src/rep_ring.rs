//! The polynomial representation ring of `GL(V)`: signed integer combinations
//! of Schur functors, Pieri multiplication, Weyl dimensions and graded
//! characters.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{horizontal_strips, vertical_strips, Partition};

/// The dimension `n` of `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimContext {
    n: usize,
}

impl DimContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension);
        }
        Ok(DimContext { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `S_λ(V)` is nonzero iff `λ` has at most `n` rows.
    pub fn admits(&self, lambda: &Partition) -> bool {
        lambda.len() <= self.n
    }
}

/// A formal integer combination `Σ m_λ [S_λ]`. Zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<RepTerm>", into = "Vec<RepTerm>")]
pub struct RepSum {
    mult: BTreeMap<Partition, i64>,
}

/// Serialized form of one summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepTerm {
    pub partition: Partition,
    pub mult: i64,
}

impl From<Vec<RepTerm>> for RepSum {
    fn from(terms: Vec<RepTerm>) -> Self {
        let mut s = RepSum::zero();
        for t in terms {
            s.add_term(t.partition, t.mult);
        }
        s
    }
}

impl From<RepSum> for Vec<RepTerm> {
    fn from(s: RepSum) -> Self {
        s.mult
            .into_iter()
            .map(|(partition, mult)| RepTerm { partition, mult })
            .collect()
    }
}

impl RepSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(lambda: Partition) -> Self {
        let mut s = Self::zero();
        s.add_term(lambda, 1);
        s
    }

    /// Sum of `[S_η]` over the given partitions, each with multiplicity one
    /// per occurrence.
    pub fn from_partitions<I: IntoIterator<Item = Partition>>(parts: I) -> Self {
        let mut s = Self::zero();
        for p in parts {
            s.add_term(p, 1);
        }
        s
    }

    pub fn add_term(&mut self, lambda: Partition, m: i64) {
        if m == 0 {
            return;
        }
        match self.mult.entry(lambda) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += m;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn multiplicity(&self, lambda: &Partition) -> i64 {
        self.mult.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// All multiplicities nonnegative, i.e. the class of an actual representation.
    pub fn is_effective(&self) -> bool {
        self.mult.values().all(|&m| m > 0)
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.mult.iter().map(|(p, &m)| (p, m))
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.mult.keys()
    }

    /// Drops every `S_λ` with more than `n` rows (they vanish on `V`).
    pub fn truncate(&self, ctx: DimContext) -> RepSum {
        RepSum {
            mult: self
                .mult
                .iter()
                .filter(|(p, _)| ctx.admits(p))
                .map(|(p, &m)| (p.clone(), m))
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> RepSum {
        if c == 0 {
            return RepSum::zero();
        }
        RepSum {
            mult: self.mult.iter().map(|(p, &m)| (p.clone(), m * c)).collect(),
        }
    }

    /// `Σ m_λ dim S_λ(V)`.
    pub fn dim(&self, ctx: DimContext) -> Result<i128> {
        self.mult.iter().try_fold(0i128, |acc, (p, &m)| {
            let d = i128::try_from(checked_dim_schur(p, ctx)?).map_err(|_| Error::Overflow(format!("dim S_{p}")))?;
            d.checked_mul(m as i128)
                .and_then(|t| acc.checked_add(t))
                .ok_or_else(|| Error::Overflow("representation dimension".into()))
        })
    }
}

impl AddAssign<&RepSum> for RepSum {
    fn add_assign(&mut self, rhs: &RepSum) {
        for (p, &m) in &rhs.mult {
            self.add_term(p.clone(), m);
        }
    }
}

impl SubAssign<&RepSum> for RepSum {
    fn sub_assign(&mut self, rhs: &RepSum) {
        for (p, &m) in &rhs.mult {
            self.add_term(p.clone(), -m);
        }
    }
}

impl Add for &RepSum {
    type Output = RepSum;
    fn add(self, rhs: &RepSum) -> RepSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &RepSum {
    type Output = RepSum;
    fn sub(self, rhs: &RepSum) -> RepSum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &RepSum {
    type Output = RepSum;
    fn neg(self) -> RepSum {
        self.scale(-1)
    }
}

impl FromIterator<(Partition, i64)> for RepSum {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        let mut s = RepSum::zero();
        for (p, m) in iter {
            s.add_term(p, m);
        }
        s
    }
}

impl fmt::Display for RepSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, &m)) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "S{p}")?;
        }
        Ok(())
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Weyl dimension `∏_{i<j≤n} (λ_i − λ_j + j − i)/(j − i)`; zero past `n` rows.
pub fn checked_dim_schur(lambda: &Partition, ctx: DimContext) -> Result<u128> {
    let n = ctx.n();
    if !ctx.admits(lambda) {
        return Ok(0);
    }
    let overflow = || Error::Overflow(format!("dim S_{lambda} at n = {n}"));
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..n {
        for j in i + 1..n {
            let top = (lambda.row(i) - lambda.row(j) + j - i) as u128;
            let bottom = (j - i) as u128;
            num = num.checked_mul(top).ok_or_else(overflow)?;
            den = den.checked_mul(bottom).ok_or_else(overflow)?;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}

/// `dim S_λ(V)`. Panics on `u128` overflow rather than wrapping.
pub fn dim_schur(lambda: &Partition, ctx: DimContext) -> u128 {
    checked_dim_schur(lambda, ctx).unwrap_or_else(|e| panic!("{e}"))
}

/// `x ⊗ Sym_k V`, by the horizontal-strip Pieri rule.
pub fn pieri_sym(x: &RepSum, k: usize, ctx: DimContext) -> RepSum {
    let mut out = RepSum::zero();
    for (p, m) in x.iter() {
        for eta in horizontal_strips(p, k) {
            if ctx.admits(&eta) {
                out.add_term(eta, m);
            }
        }
    }
    out
}

/// `x ⊗ Λ^k V`, by the vertical-strip Pieri rule.
pub fn pieri_ext(x: &RepSum, k: usize, ctx: DimContext) -> RepSum {
    let mut out = RepSum::zero();
    if k > ctx.n() {
        return out;
    }
    for (p, m) in x.iter() {
        for eta in vertical_strips(p, k) {
            if ctx.admits(&eta) {
                out.add_term(eta, m);
            }
        }
    }
    out
}

/// A family of [`RepSum`]s indexed by internal degree; component `d` only
/// contains `S_λ` with `|λ| = d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCharacter {
    components: BTreeMap<usize, RepSum>,
}

impl GradedCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `x` to the degree-`d` component.
    pub fn add_component(&mut self, d: usize, x: &RepSum) -> Result<()> {
        if let Some(p) = x.partitions().find(|p| p.size() != d) {
            return Err(Error::Precondition(format!("S_{p} cannot live in degree {d}")));
        }
        let entry = self.components.entry(d).or_default();
        *entry += x;
        if entry.is_zero() {
            self.components.remove(&d);
        }
        Ok(())
    }

    pub fn component(&self, d: usize) -> RepSum {
        self.components.get(&d).cloned().unwrap_or_default()
    }

    /// Nonzero components in increasing degree.
    pub fn components(&self) -> impl Iterator<Item = (usize, &RepSum)> {
        self.components.iter().map(|(&d, x)| (d, x))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sub(&self, other: &GradedCharacter) -> GradedCharacter {
        let mut out = self.clone();
        for (d, x) in other.components() {
            out.add_component(d, &-x).expect("degrees already consistent");
        }
        out
    }

    pub fn add(&self, other: &GradedCharacter) -> GradedCharacter {
        let mut out = self.clone();
        for (d, x) in other.components() {
            out.add_component(d, x).expect("degrees already consistent");
        }
        out
    }
}

/// `dim` of the degree-`d` component.
pub fn dim_graded(g: &GradedCharacter, d: usize, ctx: DimContext) -> u128 {
    let dim = g.component(d).dim(ctx).unwrap_or_else(|e| panic!("{e}"));
    u128::try_from(dim).expect("graded character of a module has nonnegative dimension")
}
