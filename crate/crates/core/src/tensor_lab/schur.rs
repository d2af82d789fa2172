//! Schur modules `S_λ V` realized inside `Sym_λ V` through column wedges.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rep_ring::DimContext;
use crate::tensor_lab::comult::wedge_all;
use crate::tensor_lab::scalar::{sign, Scalar};
use crate::tensor_lab::space::{Domain, Key, LinMap, TensorSpace, TensorVec};

/// A filling of a Young diagram with entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    /// Builds a tableau from its rows; the entries must be semistandard.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect::<Vec<_>>())?;
        let t = Tableau { shape, rows };
        if t.shape.len() != t.rows.len() || !t.is_semistandard() {
            return Err(Error::Precondition(format!("{t} is not a semistandard tableau")));
        }
        Ok(t)
    }

    fn is_semistandard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.iter().all(|&x| x >= 1) && r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Entry in box `(row, col)`, 1-based.
    pub fn entry(&self, row: usize, col: usize) -> Option<u8> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// Number of occurrences of each value `1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    /// `v_T`: the basis key of `Λ^{λ̃} V` whose `j`-th factor wedges column `j`.
    pub fn column_key(&self) -> Key {
        (0..self.shape.first_row())
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j] - 1).collect())
            .collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for x in r {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Semistandard tableaux of `shape` with entries `≤ n`, ordered
/// lexicographically by row reading word.
pub fn semistandard_tableaux(shape: &Partition, n: usize) -> Vec<Tableau> {
    let boxes: Vec<(usize, usize)> = shape.boxes().into_iter().map(|(r, c)| (r - 1, c - 1)).collect();
    let mut rows: Vec<Vec<u8>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fn go(
        shape: &Partition,
        boxes: &[(usize, usize)],
        k: usize,
        n: u8,
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<Tableau>,
    ) {
        let Some(&(r, c)) = boxes.get(k) else {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        };
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for x in left.max(above)..=n {
            rows[r][c] = x;
            go(shape, boxes, k + 1, n, rows, out);
        }
    }
    if shape.len() <= n {
        go(shape, &boxes, 0, n as u8, &mut rows, &mut out);
    }
    out
}

/// All orderings of `v` (repeats included) with the parity of each.
pub(crate) fn permutations(v: &[u8]) -> Vec<(Vec<u8>, bool)> {
    if v.len() <= 1 {
        return vec![(v.to_vec(), false)];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for (mut p, s) in permutations(&rest) {
            p.insert(0, x);
            out.push((p, s ^ (i % 2 == 1)));
        }
    }
    out
}

/// `Λ^{λ̃} V → Sym_λ V`: antisymmetrize each column into its boxes, then
/// multiply along rows.
pub fn ext_to_sym<F: Scalar>(shape: &Partition, key: &Key) -> TensorVec<F> {
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); shape.len()];
    let mut out = TensorVec::zero();
    fn go<F: Scalar>(key: &Key, j: usize, rows: &mut Vec<Vec<u8>>, odd: bool, out: &mut TensorVec<F>) {
        let Some(col) = key.get(j) else {
            let k: Key = rows
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.sort_unstable();
                    r
                })
                .collect();
            out.add_term(k, sign(odd));
            return;
        };
        for (p, s) in permutations(col) {
            for (i, &x) in p.iter().enumerate() {
                rows[i].push(x);
            }
            go(key, j + 1, rows, odd ^ s, out);
            for row in rows.iter_mut().take(p.len()) {
                row.pop();
            }
        }
    }
    go(key, 0, &mut rows, false, &mut out);
    out
}

/// `Sym_λ V → Λ^{λ̃} V`: symmetrize each row over all orderings, then wedge
/// the columns.
pub fn sym_to_ext<F: Scalar>(shape: &Partition, key: &Key) -> TensorVec<F> {
    let cols = shape.first_row();
    let mut placed: Vec<Vec<u8>> = Vec::with_capacity(key.len());
    let mut out = TensorVec::zero();
    fn go<F: Scalar>(key: &Key, cols: usize, placed: &mut Vec<Vec<u8>>, out: &mut TensorVec<F>) {
        if placed.len() == key.len() {
            let mut k: Key = Vec::with_capacity(cols);
            let mut odd = false;
            for j in 0..cols {
                let column: Vec<Vec<u8>> = placed.iter().take_while(|r| r.len() > j).map(|r| vec![r[j]]).collect();
                let Some((w, s)) = wedge_all(&column) else {
                    return;
                };
                odd ^= s;
                k.push(w);
            }
            out.add_term(k, sign(odd));
            return;
        }
        for (p, _) in permutations(&key[placed.len()]) {
            placed.push(p);
            go(key, cols, placed, out);
            placed.pop();
        }
    }
    go(key, cols, &mut placed, &mut out);
    out
}

/// `c_λ = ext_to_sym ∘ sym_to_ext` on one monomial of `Sym_λ V`; a nonzero
/// multiple of the projection onto `S_λ`.
pub fn young_symmetrize<F: Scalar>(shape: &Partition, key: &Key) -> TensorVec<F> {
    sym_to_ext::<F>(shape, key).map(|k| ext_to_sym(shape, k))
}

/// `S_λ V` with its semistandard basis and the maps `T ↦ v_T ∈ Λ^{λ̃} V` and
/// `T ↦ image of v_T in Sym_λ V`.
#[derive(Clone, Debug)]
pub struct SchurModule<F> {
    pub shape: Partition,
    pub n: usize,
    pub basis: Vec<Tableau>,
    pub embed_ext: LinMap<F>,
    pub image_sym: LinMap<F>,
}

pub fn schur_module<F: Scalar>(shape: &Partition, ctx: DimContext) -> Result<SchurModule<F>> {
    let n = ctx.n();
    if shape.len() > n {
        return Err(Error::Precondition(format!("{shape} has more than n = {n} rows")));
    }
    let basis = semistandard_tableaux(shape, n);
    let domain = Domain::Schur {
        shape: shape.clone(),
        n,
    };
    let ext_space = TensorSpace::exterior(shape.conjugate().parts(), n);
    let sym_space = TensorSpace::symmetric(shape.parts(), n);
    let embed_ext = LinMap::from_columns(
        domain.clone(),
        ext_space,
        basis.iter().map(|t| TensorVec::basis(t.column_key())).collect(),
    );
    let image_sym = LinMap::from_columns(
        domain,
        sym_space,
        basis.iter().map(|t| ext_to_sym(shape, &t.column_key())).collect(),
    );
    Ok(SchurModule {
        shape: shape.clone(),
        n,
        basis,
        embed_ext,
        image_sym,
    })
}
