//! Partitions, Young diagrams and the strip combinatorics behind the Pieri
//! rules, together with saturations, strata and labeled diagrams.
//!
//! Box coordinates are `(row, column)`, both 1-based, in English notation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Parts must be weakly decreasing.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Trusted constructor for parts already known to be canonical.
    pub(crate) fn from_canonical(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `i` (0-based); zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of columns, i.e. the length of the first row.
    pub fn first_row(&self) -> usize {
        self.row(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        let parts = (1..=cols)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self + (d, 0, 0, …)`.
    pub fn extend_first_row(&self, d: usize) -> Partition {
        if d == 0 {
            return self.clone();
        }
        let mut parts = self.0.clone();
        match parts.first_mut() {
            Some(p) => *p += d,
            None => parts.push(d),
        }
        Partition(parts)
    }

    /// Whether `self` is `other + (d, 0, …)` for some `d ≥ 0`.
    pub fn is_first_row_extension_of(&self, other: &Partition) -> bool {
        if other.is_empty() {
            return self.len() <= 1;
        }
        self.len() == other.len() && self.0[1..] == other.0[1..] && self.0[0] >= other.0[0]
    }

    /// Boxes `(row, col)` of the diagram, 1-based, row by row.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
            .collect()
    }

    /// The corners where one box may be added, as the resulting partitions.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..=self.len() {
            if r == 0 || self.row(r) < self.row(r - 1) {
                let mut parts = self.0.clone();
                if r == parts.len() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"3,1"`, `"(3,1)"`, `"3,1,0"`; the empty partition is `""`, `"0"` or `"()"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Convenience macro-free constructor for literals in code and tests.
///
/// Panics if `parts` is not weakly decreasing.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition must be weakly decreasing")
}

/// The skew diagram `outer − inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidSkewShape(format!("{inner} ⊄ {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Skew boxes `(row, col)`, 1-based.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|r| (self.inner.row(r) + 1..=self.outer.row(r)).map(move |c| (r + 1, c)))
            .collect()
    }

    /// Boxes added per row (index 0 is row 1).
    pub fn row_counts(&self) -> Vec<usize> {
        (0..self.outer.len())
            .map(|r| self.outer.row(r) - self.inner.row(r))
            .collect()
    }

    /// Boxes added per column (index 0 is column 1).
    pub fn column_counts(&self) -> Vec<usize> {
        let (o, i) = (self.outer.conjugate(), self.inner.conjugate());
        (0..o.len()).map(|c| o.row(c) - i.row(c)).collect()
    }

    /// At most one box per row.
    pub fn is_vertical_strip(&self) -> bool {
        self.row_counts().iter().all(|&c| c <= 1)
    }

    /// At most one box per column.
    pub fn is_horizontal_strip(&self) -> bool {
        self.column_counts().iter().all(|&c| c <= 1)
    }
}

/// `VS(λ, k)`: add `k` boxes to `λ`, no two in the same row.
pub fn vertical_strips(lambda: &Partition, k: usize) -> BTreeSet<Partition> {
    fn go(lambda: &Partition, rows: usize, left: usize, acc: &mut Vec<usize>, out: &mut BTreeSet<Partition>) {
        let row = acc.len();
        if row == rows {
            if left == 0 {
                let parts = acc.iter().copied().filter(|&p| p > 0).collect();
                out.insert(Partition::from_canonical(parts));
            }
            return;
        }
        for add in 0..=left.min(1) {
            let len = lambda.row(row) + add;
            if row > 0 && len > acc[row - 1] {
                continue;
            }
            acc.push(len);
            go(lambda, rows, left - add, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(lambda, lambda.len() + k, k, &mut Vec::new(), &mut out);
    out
}

/// `HS(λ, k)`: add `k` boxes to `λ`, no two in the same column.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> BTreeSet<Partition> {
    // interlacing: λ_i ≤ μ_i ≤ λ_{i-1}
    fn go(lambda: &Partition, row: usize, left: usize, acc: &mut Vec<usize>, out: &mut BTreeSet<Partition>) {
        if row > lambda.len() {
            if left == 0 {
                let parts = acc.iter().copied().filter(|&p| p > 0).collect();
                out.insert(Partition::from_canonical(parts));
            }
            return;
        }
        let lo = lambda.row(row);
        let hi = if row == 0 {
            lo + left
        } else {
            lambda.row(row - 1).min(lo + left)
        };
        for len in lo..=hi {
            acc.push(len);
            go(lambda, row + 1, left - (len - lo), acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `size` with at most `max_rows` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(size: usize, max_rows: usize) -> Vec<Partition> {
    fn go(left: usize, max: usize, rows: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::from_canonical(acc.clone()));
            return;
        }
        if rows == 0 {
            return;
        }
        for x in (1..=left.min(max)).rev() {
            acc.push(x);
            go(left - x, x, rows - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, max_rows, &mut Vec::new(), &mut out);
    out
}

/// All partitions with `|λ| ≤ max_size` and at most `max_rows` parts, by size.
pub fn partitions_up_to(max_size: usize, max_rows: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|s| partitions_of(s, max_rows)).collect()
}

/// `λ̄`: one box added on top of every column, i.e. `(λ₁, λ₁, λ₂, λ₃, …)`.
pub fn saturation(lambda: &Partition) -> Partition {
    if lambda.is_empty() {
        return Partition::empty();
    }
    let mut parts = vec![lambda.first_row()];
    parts.extend_from_slice(lambda.parts());
    Partition::from_canonical(parts)
}

/// `λ̲`: one box removed from every nonempty column, i.e. `(λ₂, λ₃, …)`.
pub fn underline(lambda: &Partition) -> Partition {
    Partition::from_canonical(lambda.parts().iter().skip(1).copied().collect())
}

/// `S(λ, i)`: the β with `λ ⊆ β ⊆ λ̄`, one box per column at most, missing `i`
/// boxes of `λ̄ − λ`. Empty unless `0 ≤ i ≤ λ₁`.
pub fn strata(lambda: &Partition, i: usize) -> BTreeSet<Partition> {
    let t = lambda.first_row();
    if i > t {
        return BTreeSet::new();
    }
    let sat = saturation(lambda);
    horizontal_strips(lambda, t - i)
        .into_iter()
        .filter(|beta| beta.is_contained_in(&sat))
        .collect()
}

/// Which tensor factor contributed a box of a labeled diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mark {
    /// A box coming from `Λ^k V`.
    Wedge,
    /// The single box coming from `V`.
    Vbox,
}

/// A skew extension `shape ⊇ base` whose added boxes carry [`Mark`]s; it
/// encodes an embedding `S_shape ↣ V ⊗ S_base ⊗ Λ^k V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledDiagram {
    base: Partition,
    shape: Partition,
    marks: BTreeMap<(usize, usize), Mark>,
}

impl LabeledDiagram {
    pub fn new(base: Partition, shape: Partition, marks: BTreeMap<(usize, usize), Mark>) -> Result<Self> {
        let skew = SkewShape::new(shape.clone(), base.clone())?;
        let boxes: BTreeSet<_> = skew.boxes().into_iter().collect();
        let marked: BTreeSet<_> = marks.keys().copied().collect();
        if boxes != marked {
            return Err(Error::InvalidLabeledDiagram(format!(
                "marks {marked:?} do not cover the skew boxes {boxes:?} of {shape}/{base}"
            )));
        }
        if marks.values().filter(|&&m| m == Mark::Vbox).count() != 1 {
            return Err(Error::InvalidLabeledDiagram("exactly one V box required".into()));
        }
        let mut wedge_rows = BTreeSet::new();
        for (&(r, _), &m) in &marks {
            if m == Mark::Wedge && !wedge_rows.insert(r) {
                return Err(Error::InvalidLabeledDiagram(format!("two wedges in row {r}")));
            }
        }
        let d = LabeledDiagram { base, shape, marks };
        if !d.is_v_outside() && !d.is_v_inside() {
            return Err(Error::InvalidLabeledDiagram(
                "marks come from neither bracket placement".into(),
            ));
        }
        Ok(d)
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn marks(&self) -> &BTreeMap<(usize, usize), Mark> {
        &self.marks
    }

    pub fn v_box(&self) -> (usize, usize) {
        *self
            .marks
            .iter()
            .find(|(_, &m)| m == Mark::Vbox)
            .map(|(b, _)| b)
            .expect("validated")
    }

    /// Number of wedge boxes in each column (index 0 is column 1), up to the
    /// last column of the shape.
    pub fn wedge_columns(&self) -> Vec<usize> {
        let mut a = vec![0; self.shape.first_row()];
        for (&(_, c), &m) in &self.marks {
            if m == Mark::Wedge {
                a[c - 1] += 1;
            }
        }
        a
    }

    fn with_boxes(base: &Partition, boxes: &[(usize, usize)]) -> Option<Partition> {
        let mut rows: Vec<usize> = base.parts().to_vec();
        let mut sorted = boxes.to_vec();
        sorted.sort();
        for (r, c) in sorted {
            if rows.len() < r {
                rows.resize(r, 0);
            }
            if rows[r - 1] + 1 != c {
                return None;
            }
            rows[r - 1] = c;
        }
        Partition::new(rows).ok()
    }

    fn wedge_boxes(&self) -> Vec<(usize, usize)> {
        self.marks
            .iter()
            .filter(|(_, &m)| m == Mark::Wedge)
            .map(|(&b, _)| b)
            .collect()
    }

    /// Bracketing `V ⊗ (S_base ⊗ Λ^k V)`: wedges first (a vertical strip on
    /// `base`), then the `V` box.
    pub fn is_v_outside(&self) -> bool {
        match Self::with_boxes(&self.base, &self.wedge_boxes()) {
            Some(mid) => SkewShape::new(mid.clone(), self.base.clone())
                .map(|s| s.is_vertical_strip())
                .unwrap_or(false),
            None => false,
        }
    }

    /// Bracketing `(V ⊗ S_base) ⊗ Λ^k V`: the `V` box first, then the wedges as
    /// a vertical strip on `base + V`.
    pub fn is_v_inside(&self) -> bool {
        match Self::with_boxes(&self.base, &[self.v_box()]) {
            Some(mid) => SkewShape::new(self.shape.clone(), mid)
                .map(|s| s.is_vertical_strip())
                .unwrap_or(false),
            None => false,
        }
    }

    /// Moves `V` inside: returns the `(V ⊗ S_base) ⊗ Λ^k V` labeling defining
    /// the same embedding. Diagrams already in that form come back unchanged.
    pub fn normalize_labels(&self) -> LabeledDiagram {
        if self.is_v_inside() {
            return self.clone();
        }
        let (vr, vc) = self.v_box();
        let mut marks = self.marks.clone();
        // a row holding two skew boxes reads [∧, V]; swap them
        if vc >= 2 && marks.get(&(vr, vc - 1)) == Some(&Mark::Wedge) {
            marks.insert((vr, vc - 1), Mark::Vbox);
            marks.insert((vr, vc), Mark::Wedge);
        } else {
            // slide V to the top of the skew boxes of its column
            let top = (1..vr)
                .rev()
                .take_while(|&r| marks.get(&(r, vc)) == Some(&Mark::Wedge))
                .last()
                .unwrap_or(vr);
            marks.insert((vr, vc), Mark::Wedge);
            marks.insert((top, vc), Mark::Vbox);
        }
        LabeledDiagram {
            base: self.base.clone(),
            shape: self.shape.clone(),
            marks,
        }
    }
}

impl fmt::Display for LabeledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.shape.len() {
            if r > 1 {
                write!(f, "/")?;
            }
            for c in 1..=self.shape.row(r - 1) {
                let ch = match self.marks.get(&(r, c)) {
                    None => '.',
                    Some(Mark::Wedge) => '^',
                    Some(Mark::Vbox) => 'V',
                };
                write!(f, "{ch}")?;
            }
        }
        Ok(())
    }
}
