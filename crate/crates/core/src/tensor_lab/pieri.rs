//! Pieri inclusions `S_η ↣ S_λ ⊗ Sym_k V` and `S_η ↣ S_λ ⊗ Λ^k V`, the
//! labeled-diagram embeddings into `V ⊗ S_λ ⊗ Λ^k V`, and the nonvanishing
//! check for composites of Pieri maps.

use crate::error::{Error, Result};
use crate::partitions::{LabeledDiagram, Mark, Partition, SkewShape};
use crate::rep_ring::DimContext;
use crate::tensor_lab::comult::{phi_key, sym_mul, sym_splits, wedge_all};
use crate::tensor_lab::scalar::{sign, Scalar};
use crate::tensor_lab::schur::{ext_to_sym, schur_module, sym_to_ext, young_symmetrize};
use crate::tensor_lab::space::{Domain, Factor, Key, LinMap, TensorSpace, TensorVec};

/// Which power of `V` the new boxes come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieriMode {
    /// `Sym_k V`; the new boxes form a horizontal strip.
    Sym(usize),
    /// `Λ^k V`; the new boxes form a vertical strip.
    Ext(usize),
}

impl PieriMode {
    pub fn k(&self) -> usize {
        match *self {
            PieriMode::Sym(k) | PieriMode::Ext(k) => k,
        }
    }
}

fn check_strip(lambda: &Partition, eta: &Partition, mode: PieriMode) -> Result<()> {
    let skew = SkewShape::new(eta.clone(), lambda.clone()).map_err(|_| not_strip(lambda, eta, mode))?;
    let ok = skew.size() == mode.k()
        && match mode {
            PieriMode::Sym(_) => skew.is_horizontal_strip(),
            PieriMode::Ext(_) => skew.is_vertical_strip(),
        };
    if ok {
        Ok(())
    } else {
        Err(not_strip(lambda, eta, mode))
    }
}

fn not_strip(lambda: &Partition, eta: &Partition, mode: PieriMode) -> Error {
    let kind = match mode {
        PieriMode::Sym(_) => "horizontal",
        PieriMode::Ext(_) => "vertical",
    };
    Error::NotAStrip {
        lambda: lambda.to_string(),
        eta: eta.to_string(),
        kind,
    }
}

/// The Sym-mode Pieri map on one monomial of `Sym_η V`: split each row `i`
/// into `λ_i` front variables and `η_i − λ_i` back ones, multiply all back
/// pieces together, and project the front onto `S_λ`.
///
/// Output keys are `[λ rows.., Sym_k monomial]`. Restricted to `S_η` this is
/// the Pieri inclusion; it is defined on all of `Sym_η V`.
pub fn pieri_sym_on_monomial<F: Scalar>(lambda: &Partition, eta: &Partition, key: &Key) -> TensorVec<F> {
    let mut acc: Vec<(Key, Vec<u8>, F)> = vec![(Vec::new(), Vec::new(), F::one())];
    for (i, row) in key.iter().enumerate() {
        let b = eta.row(i) - lambda.row(i);
        let mut next = Vec::new();
        for (front, back, c) in &acc {
            for (f, bk, m) in sym_splits(row, b) {
                let mut front = front.clone();
                if i < lambda.len() {
                    front.push(f);
                }
                next.push((front, sym_mul(back, &bk), c.clone() * F::from_int(m as i64)));
            }
        }
        acc = next;
    }
    let mut out = TensorVec::zero();
    for (front, back, c) in acc {
        for (k, v) in young_symmetrize::<F>(lambda, &front).iter() {
            let mut k = k.clone();
            k.push(back.clone());
            out.add_term(k, v.clone() * c.clone());
        }
    }
    out
}

/// The Ext-mode Pieri map on one basis key of `Λ^{η̃} V`: comultiply off
/// `a_j = η̃_j − λ̃_j` entries of column `j`, wedge the pieces into `Λ^k V`
/// and send the rest to `S_λ ⊂ Sym_λ V`. Output keys are `[λ rows.., Λ^k]`.
pub fn pieri_ext_on_columns<F: Scalar>(lambda: &Partition, eta: &Partition, key: &Key) -> TensorVec<F> {
    let (lt, et) = (lambda.conjugate(), eta.conjugate());
    let a: Vec<usize> = (0..et.len()).map(|j| et.row(j) - lt.row(j)).collect();
    let t = a.len();
    let mut out = TensorVec::zero();
    for (k, c) in phi_key::<F>(key, &a) {
        let Some((back, s)) = wedge_all(&k[t..]) else {
            continue;
        };
        let front: Key = k[..lt.len()].to_vec();
        for (fk, v) in ext_to_sym::<F>(lambda, &front).iter() {
            let mut fk = fk.clone();
            fk.push(back.clone());
            out.add_term(fk, v.clone() * c.clone() * sign::<F>(s));
        }
    }
    out
}

/// The Pieri inclusion `S_η ↣ S_λ ⊗ Sym_k V` or `S_η ↣ S_λ ⊗ Λ^k V`, one
/// column per semistandard tableau of `η`, with `S_λ` inside `Sym_λ V`.
///
/// This is the canonical map up to one nonzero scalar.
pub fn pieri_inclusion<F: Scalar>(
    lambda: &Partition,
    eta: &Partition,
    mode: PieriMode,
    ctx: DimContext,
) -> Result<LinMap<F>> {
    check_strip(lambda, eta, mode)?;
    let n = ctx.n();
    let source = schur_module::<F>(eta, ctx)?;
    let mut factors: Vec<Factor> = lambda.parts().iter().map(|&p| Factor::Sym(p)).collect();
    let columns = match mode {
        PieriMode::Sym(k) => {
            factors.push(Factor::Sym(k));
            source
                .image_sym
                .columns()
                .iter()
                .map(|v| v.map(|key| pieri_sym_on_monomial(lambda, eta, key)))
                .collect()
        }
        PieriMode::Ext(k) => {
            factors.push(Factor::Ext(k));
            source
                .image_sym
                .columns()
                .iter()
                .map(|v| {
                    v.map(|key| sym_to_ext::<F>(eta, key))
                        .map(|key| pieri_ext_on_columns(lambda, eta, key))
                })
                .collect()
        }
    };
    Ok(LinMap::from_columns(
        Domain::Schur { shape: eta.clone(), n },
        TensorSpace::new(factors, n),
        columns,
    ))
}

/// Order of the two comultiplications in a labeled-diagram embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// `V ⊗ (S_λ ⊗ Λ^k V)`: split off the `V` box first.
    VOutside,
    /// `(V ⊗ S_λ) ⊗ Λ^k V`: split off the wedges first.
    VInside,
}

/// The embedding `S_η ↣ V ⊗ S_λ ⊗ Λ^k V` encoded by a labeled diagram.
/// Output keys are `[V, λ rows.., Λ^k]`.
pub fn labeled_embedding<F: Scalar>(d: &LabeledDiagram, bracketing: Bracketing, ctx: DimContext) -> Result<LinMap<F>> {
    let form_ok = match bracketing {
        Bracketing::VOutside => d.is_v_outside(),
        Bracketing::VInside => d.is_v_inside(),
    };
    if !form_ok {
        return Err(Error::InvalidLabeledDiagram(format!(
            "marks do not match the {bracketing:?} placement"
        )));
    }
    let (lambda, eta) = (d.base(), d.shape());
    let n = ctx.n();
    let t = eta.first_row();
    let lt_len = lambda.first_row();
    let a = d.wedge_columns();
    let mut b = vec![0; t];
    b[d.v_box().1 - 1] = 1;
    let k: usize = a.iter().sum();
    let source = schur_module::<F>(eta, ctx)?;

    // on a key of Λ^{η̃}: the V piece, the remaining columns, and the wedge pieces
    let split = |key: &Key| -> Vec<(u8, Key, Key, F)> {
        let mut out = Vec::new();
        match bracketing {
            Bracketing::VOutside => {
                for (k1, c1) in phi_key::<F>(key, &b) {
                    let v = k1[t..].iter().find_map(|p| p.first().copied()).expect("one V entry");
                    for (k2, c2) in phi_key::<F>(&k1[..t].to_vec(), &a) {
                        out.push((v, k2[..t].to_vec(), k2[t..].to_vec(), c1.clone() * c2));
                    }
                }
            }
            Bracketing::VInside => {
                for (k1, c1) in phi_key::<F>(key, &a) {
                    let wedges = k1[t..].to_vec();
                    for (k2, c2) in phi_key::<F>(&k1[..t].to_vec(), &b) {
                        let v = k2[t..].iter().find_map(|p| p.first().copied()).expect("one V entry");
                        out.push((v, k2[..t].to_vec(), wedges.clone(), c1.clone() * c2));
                    }
                }
            }
        }
        out
    };

    let columns = source
        .image_sym
        .columns()
        .iter()
        .map(|v| {
            let mut out = TensorVec::zero();
            for (ek, ec) in v.map(|key| sym_to_ext::<F>(eta, key)).iter() {
                for (x, front, wedges, c) in split(ek) {
                    let Some((w, s)) = wedge_all(&wedges) else {
                        continue;
                    };
                    let c = c * ec.clone() * sign::<F>(s);
                    for (sk, sv) in ext_to_sym::<F>(lambda, &front[..lt_len].to_vec()).iter() {
                        let mut key = vec![vec![x]];
                        key.extend(sk.iter().cloned());
                        key.push(w.clone());
                        out.add_term(key, sv.clone() * c.clone());
                    }
                }
            }
            out
        })
        .collect();
    let mut factors = vec![Factor::Sym(1)];
    factors.extend(lambda.parts().iter().map(|&p| Factor::Sym(p)));
    factors.push(Factor::Ext(k));
    Ok(LinMap::from_columns(
        Domain::Schur { shape: eta.clone(), n },
        TensorSpace::new(factors, n),
        columns,
    ))
}

/// All labeled diagrams on `λ` with `k` wedges in the `V ⊗ (S_λ ⊗ Λ^k V)` form.
pub fn v_outside_diagrams(lambda: &Partition, k: usize) -> Vec<LabeledDiagram> {
    let mut out = Vec::new();
    for mid in crate::partitions::vertical_strips(lambda, k) {
        let wedge_boxes = SkewShape::new(mid.clone(), lambda.clone()).expect("strip").boxes();
        for eta in mid.add_one_box() {
            let v = SkewShape::new(eta.clone(), mid.clone()).expect("one box").boxes()[0];
            let mut marks: std::collections::BTreeMap<_, _> = wedge_boxes.iter().map(|&b| (b, Mark::Wedge)).collect();
            marks.insert(v, Mark::Vbox);
            out.push(LabeledDiagram::new(lambda.clone(), eta, marks).expect("valid by construction"));
        }
    }
    out
}

/// `S_η ↣ R_d ⊗ S_μ → R_{m+d} ⊗ S_ν`, the Pieri inclusion of `η` into
/// `Sym_d V ⊗ S_μ` followed by the map induced by `S_μ ↣ Sym_m V ⊗ S_ν`.
/// Output keys are `[ν rows.., Sym_{m+d}]`.
pub fn sam_composite<F: Scalar>(nu: &Partition, mu: &Partition, eta: &Partition, ctx: DimContext) -> Result<LinMap<F>> {
    let m = mu.size().checked_sub(nu.size()).ok_or_else(|| sam_pre(nu, mu, eta))?;
    let d = eta.size().checked_sub(mu.size()).ok_or_else(|| sam_pre(nu, mu, eta))?;
    for (inner, outer, k) in [(nu, mu, m), (mu, eta, d), (nu, eta, m + d)] {
        check_strip(inner, outer, PieriMode::Sym(k)).map_err(|_| sam_pre(nu, mu, eta))?;
    }
    let first = pieri_inclusion::<F>(mu, eta, PieriMode::Sym(d), ctx)?;
    let columns = first
        .columns()
        .iter()
        .map(|v| {
            v.map(|key| {
                let (rows, r) = key.split_at(key.len() - 1);
                let mut out = TensorVec::zero();
                for (k2, c) in pieri_sym_on_monomial::<F>(nu, mu, &rows.to_vec()).iter() {
                    let mut k2 = k2.clone();
                    let s = k2.pop().expect("Sym_m factor");
                    k2.push(sym_mul(&s, &r[0]));
                    out.add_term(k2, c.clone());
                }
                out
            })
        })
        .collect();
    let n = ctx.n();
    let mut factors: Vec<Factor> = nu.parts().iter().map(|&p| Factor::Sym(p)).collect();
    factors.push(Factor::Sym(m + d));
    Ok(LinMap::from_columns(
        Domain::Schur { shape: eta.clone(), n },
        TensorSpace::new(factors, n),
        columns,
    ))
}

fn sam_pre(nu: &Partition, mu: &Partition, eta: &Partition) -> Error {
    Error::Precondition(format!(
        "need {mu} ∈ HS({nu}), {eta} ∈ HS({mu}) and {eta} ∈ HS({nu}) for the composite S_{eta} → R ⊗ S_{mu} → R ⊗ S_{nu}"
    ))
}

/// Whether `S_η ↣ R ⊗ S_μ → R ⊗ S_ν` is nonzero.
pub fn verify_sam(nu: &Partition, mu: &Partition, eta: &Partition, ctx: DimContext) -> Result<bool> {
    Ok(!sam_composite::<crate::Rational>(nu, mu, eta, ctx)?.is_zero())
}
