//! Two independent checks of the Tor formulas: Euler characteristics of
//! `m ⊗_R K•` in the representation ring, and the homology of the explicit
//! complex computed with exact linear algebra.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::eqmod::{ModuleKind, ModuleModel};
use crate::error::{Error, Result};
use crate::partitions::{underline, Partition};
use crate::rep_ring::{pieri_ext, RepSum};
use crate::report::CheckReport;
use crate::resolutions::betti_table;
use crate::tensor_lab::comult::sym_mul;
use crate::tensor_lab::linalg::Echelon;
use crate::tensor_lab::schur::{schur_module, semistandard_tableaux, Tableau};
use crate::tensor_lab::{pieri_inclusion, PieriMode};
use crate::{QVec, Rational};

/// The degree-`D` strand of `m ⊗_R K•`: term `i` is `m_{D−i} ⊗ Λ^i V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSlice {
    pub degree: usize,
    pub terms: BTreeMap<usize, RepSum>,
}

impl ComplexSlice {
    pub fn term(&self, i: usize) -> RepSum {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    /// `Σ_i (−1)^i [term i]`.
    pub fn euler(&self) -> RepSum {
        alternating(self.terms.iter().map(|(&i, x)| (i, x)))
    }
}

fn alternating<'a, I: Iterator<Item = (usize, &'a RepSum)>>(terms: I) -> RepSum {
    terms.fold(
        RepSum::zero(),
        |acc, (i, x)| if i % 2 == 0 { &acc + x } else { &acc - x },
    )
}

pub fn complex_characters(m: &ModuleModel, degree: usize) -> ComplexSlice {
    let terms = (0..=m.ctx.n().min(degree))
        .map(|i| (i, pieri_ext(&m.component(degree - i), i, m.ctx)))
        .filter(|(_, x)| !x.is_zero())
        .collect();
    ComplexSlice { degree, terms }
}

/// The complex and the predicted Tor have the same Euler characteristic in
/// degree `D`.
pub fn euler_check(m: &ModuleModel, degree: usize) -> CheckReport {
    let lhs = complex_characters(m, degree).euler();
    let betti = betti_table(m);
    let rhs = alternating(betti.iter().filter(|e| e.1 == degree).map(|(i, _, x)| (i, x)));
    let mismatches = if lhs == rhs {
        Vec::new()
    } else {
        vec![format!("complex gives {lhs}, Tor gives {rhs}")]
    };
    CheckReport::new(format!("euler {m} D={degree}"), mismatches)
}

/// Largest instance [`brute_homology`] accepts.
pub const BRUTE_MAX_N: usize = 3;
pub const BRUTE_MAX_SIZE: usize = 4;
pub const BRUTE_MAX_L: usize = 3;

/// Part of `H_i(m ⊗_R K•)` in one internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyPiece {
    pub degree: usize,
    pub dim: u128,
    pub terms: RepSum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteHomology {
    pub i: usize,
    /// Internal degrees examined.
    pub degrees: Vec<usize>,
    /// Nonzero pieces only.
    pub pieces: Vec<HomologyPiece>,
}

impl BruteHomology {
    pub fn dim(&self) -> u128 {
        self.pieces.iter().map(|p| p.dim).sum()
    }

    pub fn terms(&self) -> RepSum {
        self.pieces.iter().fold(RepSum::zero(), |acc, p| &acc + &p.terms)
    }

    pub fn in_degree(&self, degree: usize) -> RepSum {
        self.pieces
            .iter()
            .find(|p| p.degree == degree)
            .map(|p| p.terms.clone())
            .unwrap_or_default()
    }
}

/// `H_i(m ⊗_R K•)` from explicit matrices.
///
/// Elementary modules and truncations are realized as `⟨S_λ⟩ ⊂ R ⊗ S_λ̲`,
/// projectives as `R ⊗ S_λ`. Infinite modules are examined in internal
/// degrees up to `|λ| + n + 2`.
pub fn brute_homology(m: &ModuleModel, i: usize) -> Result<BruteHomology> {
    Ok(brute_tor_indices(m, &[i])?.remove(0))
}

/// [`brute_homology`] for every `i ≤ n`.
pub fn brute_tor(m: &ModuleModel) -> Result<Vec<BruteHomology>> {
    let all: Vec<usize> = (0..=m.ctx.n()).collect();
    brute_tor_indices(m, &all)
}

fn check_guardrails(m: &ModuleModel, wanted: &[usize]) -> Result<()> {
    let n = m.ctx.n();
    let size = m.base_degree();
    if n > BRUTE_MAX_N || size > BRUTE_MAX_SIZE {
        return Err(Error::Guardrail(format!(
            "brute-force homology is limited to n ≤ {BRUTE_MAX_N} and |λ| ≤ {BRUTE_MAX_SIZE}, got {m}"
        )));
    }
    if let ModuleKind::Truncation { l, .. } = m.kind {
        if l > BRUTE_MAX_L {
            return Err(Error::Guardrail(format!(
                "brute-force homology needs l ≤ {BRUTE_MAX_L}, got {l}"
            )));
        }
    }
    if let Some(&i) = wanted.iter().find(|&&i| i > n) {
        return Err(Error::Guardrail(format!("homological index {i} exceeds n = {n}")));
    }
    Ok(())
}

fn brute_tor_indices(m: &ModuleModel, wanted: &[usize]) -> Result<Vec<BruteHomology>> {
    check_guardrails(m, wanted)?;
    let n = m.ctx.n();
    let base = m.base_degree();
    let window = |i: usize| -> Vec<usize> {
        let hi = match m.top_degree() {
            Some(top) => top + i,
            None => base + n + 2,
        };
        (base + i..=hi).collect()
    };
    let mut out: Vec<BruteHomology> = wanted
        .iter()
        .map(|&i| BruteHomology {
            i,
            degrees: window(i),
            pieces: Vec::new(),
        })
        .collect();
    if m.is_zero() {
        return Ok(out);
    }
    let mut real = Realization::new(m)?;
    let mut degrees: Vec<usize> = wanted.iter().flat_map(|&i| window(i)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let indices: Vec<usize> = wanted.iter().copied().filter(|&i| window(i).contains(&d)).collect();
        for (i, piece) in real.homology_in_degree(d, &indices)? {
            if piece.dim > 0 {
                let slot = out.iter_mut().find(|h| h.i == i).expect("requested index");
                slot.pieces.push(piece);
            }
        }
    }
    Ok(out)
}

/// An explicit model of `m` inside `R ⊗ Sym_μ V`: vector keys are
/// `[μ rows.., R monomial]`.
struct Realization {
    m: ModuleModel,
    /// Generators of the module with their weights.
    generators: Vec<(Vec<usize>, QVec)>,
    pieces: HashMap<(usize, Vec<usize>), Vec<QVec>>,
    tableaux: HashMap<Partition, Vec<Tableau>>,
}

impl Realization {
    fn new(m: &ModuleModel) -> Result<Self> {
        let ctx = m.ctx;
        let lambda = m.lambda();
        let weights: Vec<Vec<usize>> = semistandard_tableaux(lambda, ctx.n())
            .iter()
            .map(|t| t.content(ctx.n()))
            .collect();
        let columns: Vec<QVec> = match m.kind {
            ModuleKind::Projective { .. } => schur_module::<Rational>(lambda, ctx)?
                .image_sym
                .columns()
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|(k, c)| {
                            let mut k = k.clone();
                            k.push(Vec::new());
                            (k, c.clone())
                        })
                        .collect()
                })
                .collect(),
            _ => {
                let lower = underline(lambda);
                pieri_inclusion::<Rational>(&lower, lambda, PieriMode::Sym(lambda.first_row()), ctx)?
                    .columns()
                    .to_vec()
            }
        };
        Ok(Realization {
            m: m.clone(),
            generators: weights.into_iter().zip(columns).collect(),
            pieces: HashMap::new(),
            tableaux: HashMap::new(),
        })
    }

    fn kostka(&mut self, eta: &Partition, weight: &[usize]) -> usize {
        let n = self.m.ctx.n();
        self.tableaux
            .entry(eta.clone())
            .or_insert_with(|| semistandard_tableaux(eta, n))
            .iter()
            .filter(|t| t.content(n) == weight)
            .count()
    }

    /// A basis of the weight-`w` part of the degree-`e` component.
    fn piece(&mut self, e: usize, w: &[usize]) -> Result<Vec<QVec>> {
        if let Some(b) = self.pieces.get(&(e, w.to_vec())) {
            return Ok(b.clone());
        }
        let in_support = e >= self.m.base_degree() && self.m.top_degree().is_none_or(|top| e <= top);
        let mut span = Echelon::new();
        if in_support {
            for (content, g) in &self.generators {
                if content.iter().zip(w).any(|(c, w)| c > w) {
                    continue;
                }
                let alpha: Vec<u8> = content
                    .iter()
                    .zip(w)
                    .enumerate()
                    .flat_map(|(x, (c, w))| std::iter::repeat_n(x as u8, w - c))
                    .collect();
                span.insert(shift_monomial(g, &alpha));
            }
        }
        let expected: usize = self
            .m
            .component(e)
            .iter()
            .map(|(eta, mult)| mult as usize * self.kostka(eta, w))
            .sum();
        if span.rank() != expected {
            return Err(Error::Inconsistent(format!(
                "{} in degree {e}, weight {w:?}: span has dimension {}, character predicts {expected}",
                self.m,
                span.rank()
            )));
        }
        let basis: Vec<QVec> = span.rows().cloned().collect();
        self.pieces.insert((e, w.to_vec()), basis.clone());
        Ok(basis)
    }

    /// Basis of `C_i` at weight `u` in internal degree `d`, as `(J, vector)`.
    fn chain_basis(&mut self, d: usize, i: usize, u: &[usize]) -> Result<Vec<(Vec<u8>, QVec)>> {
        let n = self.m.ctx.n();
        let mut out = Vec::new();
        if i > d {
            return Ok(out);
        }
        for j in subsets(n, i) {
            let mut w = u.to_vec();
            if j.iter().any(|&x| w[x as usize] == 0) {
                continue;
            }
            for &x in &j {
                w[x as usize] -= 1;
            }
            for b in self.piece(d - i, &w)? {
                out.push((j.clone(), b));
            }
        }
        Ok(out)
    }

    /// `rank(d_i: C_i → C_{i−1})` at weight `u`, and `dim C_i`.
    fn differential(&mut self, d: usize, i: usize, u: &[usize]) -> Result<(usize, usize)> {
        let basis = self.chain_basis(d, i, u)?;
        let past_top = self.m.top_degree().is_some_and(|top| d + 1 - i > top);
        if i == 0 || past_top {
            return Ok((0, basis.len()));
        }
        let mut image = Echelon::<Rational>::new();
        for (j, b) in &basis {
            image.insert(koszul_differential(j, b));
        }
        Ok((image.rank(), basis.len()))
    }

    fn homology_in_degree(&mut self, d: usize, indices: &[usize]) -> Result<Vec<(usize, HomologyPiece)>> {
        let ctx = self.m.ctx;
        let n = ctx.n();
        let weights = dominant_weights(d, n);
        let mut dims: BTreeMap<usize, Vec<(Vec<usize>, usize)>> = BTreeMap::new();
        for u in &weights {
            let mut cache: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
            for &i in indices {
                for k in [i, i + 1] {
                    if let Entry::Vacant(e) = cache.entry(k) {
                        let v = if k > n { (0, 0) } else { self.differential(d, k, u)? };
                        e.insert(v);
                    }
                }
                let (rank_in, dim_c) = cache[&i];
                let (rank_out, _) = cache[&(i + 1)];
                dims.entry(i).or_default().push((u.clone(), dim_c - rank_in - rank_out));
            }
        }
        let mut out = Vec::new();
        for (i, by_weight) in dims {
            let terms = self.identify(&by_weight)?;
            let dim = u128::try_from(terms.dim(ctx)?).map_err(|_| Error::Inconsistent("negative dimension".into()))?;
            out.push((i, HomologyPiece { degree: d, dim, terms }));
        }
        Ok(out)
    }

    /// Reads off a representation from its dominant weight multiplicities,
    /// highest weights first.
    fn identify(&mut self, by_weight: &[(Vec<usize>, usize)]) -> Result<RepSum> {
        let mut found = RepSum::zero();
        for (u, h) in by_weight {
            let mut left = *h as i64;
            let found_now: Vec<(Partition, i64)> = found.iter().map(|(p, c)| (p.clone(), c)).collect();
            for (eta, c) in found_now {
                left -= c * self.kostka(&eta, u) as i64;
            }
            if left < 0 {
                return Err(Error::Inconsistent(format!("weight {u:?} is overcounted by {}", -left)));
            }
            if left > 0 {
                found.add_term(Partition::new(u.clone())?, left);
            }
        }
        Ok(found)
    }
}

/// `g · x^α` on the last (`R`) factor.
fn shift_monomial(g: &QVec, alpha: &[u8]) -> QVec {
    g.iter()
        .map(|(k, c)| {
            let mut k = k.clone();
            let last = k.pop().expect("R factor");
            k.push(sym_mul(&last, alpha));
            (k, c.clone())
        })
        .collect()
}

/// `d(e_J ⊗ m) = Σ_r (−1)^{r+1} e_{J∖j_r} ⊗ x_{j_r} m` (1-based `r`).
fn koszul_differential(j: &[u8], m: &QVec) -> QVec {
    let mut out = QVec::zero();
    for (r, &x) in j.iter().enumerate() {
        let mut rest = j.to_vec();
        rest.remove(r);
        let s = crate::tensor_lab::scalar::sign::<Rational>(r % 2 == 1);
        for (k, c) in shift_monomial(m, &[x]).iter() {
            let mut key = vec![rest.clone()];
            key.extend(k.iter().cloned());
            out.add_term(key, c.clone() * s.clone());
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    crate::tensor_lab::Factor::Ext(k).basis(n)
}

/// Partitions of `d` with at most `n` parts, padded to length `n`, in
/// decreasing lexicographic order.
fn dominant_weights(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, slots: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for x in (0..=left.min(max)).rev() {
            acc.push(x);
            go(left - x, x, slots - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, n, &mut Vec::new(), &mut out);
    out
}

/// Compares [`brute_tor`] with the closed-form Betti table in every degree
/// examined.
pub fn brute_check(m: &ModuleModel) -> Result<CheckReport> {
    let betti = betti_table(m);
    let mut mismatches = Vec::new();
    for h in brute_tor(m)? {
        for &d in &h.degrees {
            let (got, want) = (h.in_degree(d), betti.get(h.i, d));
            if got != want {
                mismatches.push(format!("Tor_{} in degree {d}: homology {got}, formula {want}", h.i));
            }
        }
    }
    Ok(CheckReport::new(format!("brute {m}"), mismatches))
}
