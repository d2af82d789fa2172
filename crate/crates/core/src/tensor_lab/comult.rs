//! Multiplication and comultiplication in `ΛV` and `Sym V`, on basis tuples.

use crate::error::{Error, Result};
use crate::rep_ring::DimContext;
use crate::tensor_lab::scalar::{sign, Scalar};
use crate::tensor_lab::space::{Key, LinMap, TensorSpace, TensorVec, DEFAULT_BASIS_CAP};
use crate::Integer;

/// Splits a strictly increasing tuple into `(front, back)` with `back.len() = a`.
///
/// The flag is the parity of the permutation sorting `front ++ back`.
pub fn shuffles(idx: &[u8], a: usize) -> Vec<(Vec<u8>, Vec<u8>, bool)> {
    fn go(idx: &[u8], a: usize, pos: usize, back: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if back.len() == a {
            out.push(back.clone());
            return;
        }
        for p in pos..idx.len() {
            back.push(p);
            go(idx, a, p + 1, back, out);
            back.pop();
        }
    }
    if a > idx.len() {
        return Vec::new();
    }
    let mut picks = Vec::new();
    go(idx, a, 0, &mut Vec::new(), &mut picks);
    picks
        .into_iter()
        .map(|back_pos| {
            let mut front = Vec::with_capacity(idx.len() - a);
            let mut back = Vec::with_capacity(a);
            let mut inversions = 0usize;
            for (p, &x) in idx.iter().enumerate() {
                if back_pos.contains(&p) {
                    back.push(x);
                } else {
                    // every earlier back entry is smaller and now sits after x
                    inversions += back.len();
                    front.push(x);
                }
            }
            (front, back, inversions % 2 == 1)
        })
        .collect()
}

/// Splits a monomial (sorted multiset) into `(front, back)` with `back.len() = a`.
///
/// Distinct splits only; the count is `∏ C(m_x, b_x)`, the coefficient of
/// the comultiplication of `Sym V`.
pub fn sym_splits(idx: &[u8], a: usize) -> Vec<(Vec<u8>, Vec<u8>, u64)> {
    let mut groups: Vec<(u8, usize)> = Vec::new();
    for &x in idx {
        match groups.last_mut() {
            Some((y, m)) if *y == x => *m += 1,
            _ => groups.push((x, 1)),
        }
    }
    let mut out = Vec::new();
    fn go(
        groups: &[(u8, usize)],
        left: usize,
        front: &mut Vec<u8>,
        back: &mut Vec<u8>,
        mult: u64,
        out: &mut Vec<(Vec<u8>, Vec<u8>, u64)>,
    ) {
        let Some((&(x, m), rest)) = groups.split_first() else {
            if left == 0 {
                out.push((front.clone(), back.clone(), mult));
            }
            return;
        };
        for b in 0..=m.min(left) {
            let (fl, bl) = (front.len(), back.len());
            front.extend(std::iter::repeat_n(x, m - b));
            back.extend(std::iter::repeat_n(x, b));
            let c = crate::tensor_lab::space::binomial(m as u128, b as u128) as u64;
            go(rest, left - b, front, back, mult * c, out);
            front.truncate(fl);
            back.truncate(bl);
        }
    }
    go(&groups, a, &mut Vec::new(), &mut Vec::new(), 1, &mut out);
    out
}

/// `e_a ∧ e_b` as a sorted tuple and sign, or `None` if an index repeats.
pub fn wedge(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, bool)> {
    let mut inversions = 0usize;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, inversions % 2 == 1))
}

/// Product of two monomials.
pub fn sym_mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = [a, b].concat();
    out.sort_unstable();
    out
}

/// Wedges several tuples together left to right.
pub fn wedge_all<'a, I: IntoIterator<Item = &'a Vec<u8>>>(parts: I) -> Option<(Vec<u8>, bool)> {
    let mut acc = (Vec::new(), false);
    for p in parts {
        let (w, s) = wedge(&acc.0, p)?;
        acc = (w, acc.1 ^ s);
    }
    Some(acc)
}

/// `Φ(l, a)` on one basis key of `Λ^l V`, whose factors are the first
/// `a.len()` entries of `key`; any further factors are carried along
/// untouched after the back block.
pub fn phi_key<F: Scalar>(key: &Key, a: &[usize]) -> Vec<(Key, F)> {
    let t = a.len();
    let mut acc: Vec<(Key, Key, bool, usize)> = vec![(Vec::new(), Vec::new(), false, 0)];
    for (j, &aj) in a.iter().enumerate() {
        let mut next = Vec::new();
        for (fronts, backs, s, back_deg) in &acc {
            for (f, b, sf) in shuffles(&key[j], aj) {
                // move the new front past every earlier back piece
                let koszul = (back_deg * f.len()) % 2 == 1;
                let mut fronts = fronts.clone();
                let mut backs = backs.clone();
                fronts.push(f);
                backs.push(b);
                next.push((fronts, backs, s ^ sf ^ koszul, back_deg + aj));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(mut fronts, backs, s, _)| {
            fronts.extend(backs);
            fronts.extend(key[t..].iter().cloned());
            (fronts, sign(s))
        })
        .collect()
}

fn check_counts(l: &[usize], a: &[usize]) -> Result<()> {
    if l.len() != a.len() || l.iter().zip(a).any(|(l, a)| a > l) {
        return Err(Error::Precondition(format!(
            "comultiplication needs 0 ≤ a ≤ l componentwise, got l = {l:?}, a = {a:?}"
        )));
    }
    Ok(())
}

/// `Φ(l, a): Λ^l V → Λ^{l−a} V ⊗ Λ^a V` as an explicit matrix.
pub fn comult_ext<F: Scalar>(l: &[usize], a: &[usize], ctx: DimContext) -> Result<LinMap<F>> {
    check_counts(l, a)?;
    let n = ctx.n();
    let front: Vec<usize> = l.iter().zip(a).map(|(l, a)| l - a).collect();
    let source = TensorSpace::exterior(l, n);
    let target = TensorSpace::exterior(&[front, a.to_vec()].concat(), n);
    LinMap::from_fn(source, target, DEFAULT_BASIS_CAP, |k| {
        phi_key(k, a).into_iter().collect()
    })
}

/// Checks that both routes around the coassociativity square agree:
/// `(Φ(l−a, b) ⊗ 1) ∘ Φ(l, a)` equals `σ ∘ (Φ(l−b, a) ⊗ 1) ∘ Φ(l, b)`, where
/// `σ` swaps the last two blocks with the sign `(−1)^{|a||b|}`.
pub fn coassociativity_holds(l: &[usize], a: &[usize], b: &[usize], ctx: DimContext) -> Result<bool> {
    check_counts(l, a)?;
    check_counts(l, b)?;
    let t = l.len();
    let la: Vec<usize> = l.iter().zip(a).map(|(l, a)| l - a).collect();
    check_counts(&la, b)?;
    let lb: Vec<usize> = l.iter().zip(b).map(|(l, b)| l - b).collect();
    check_counts(&lb, a)?;
    let odd_swap = (a.iter().sum::<usize>() * b.iter().sum::<usize>()) % 2 == 1;
    let source = TensorSpace::exterior(l, ctx.n());
    source.check_cap(DEFAULT_BASIS_CAP)?;
    for key in source.basis() {
        let route_a: TensorVec<Integer> = TensorVec::basis(key.clone())
            .map_terms(|k| phi_key(k, a))
            .map_terms(|k| phi_key(k, b));
        let route_b: TensorVec<Integer> = TensorVec::basis(key)
            .map_terms(|k| phi_key(k, b))
            .map_terms(|k| phi_key(k, a))
            .map_terms(|k| {
                let mut k = k.clone();
                let tail = k.split_off(2 * t);
                let mid = k.split_off(t);
                k.extend(tail);
                k.extend(mid);
                [(k, sign::<Integer>(odd_swap))]
            });
        if route_a != route_b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn ctx(n: usize) -> DimContext {
        DimContext::new(n).unwrap()
    }

    #[test]
    fn single_wedge_splits_with_sign() {
        let m: LinMap<Rational> = comult_ext(&[2], &[1], ctx(2)).unwrap();
        let image = m.apply_key(&vec![vec![0, 1]]);
        let expected: TensorVec<Rational> = [
            (vec![vec![0], vec![1]], Rational::from_int(1)),
            (vec![vec![1], vec![0]], Rational::from_int(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(image, expected);
    }

    #[test]
    fn zero_split_is_identity() {
        let m: LinMap<Rational> = comult_ext(&[2, 1], &[0, 0], ctx(3)).unwrap();
        for (i, col) in m.columns().iter().enumerate() {
            let mut key = TensorSpace::exterior(&[2, 1], 3).basis()[i].clone();
            key.extend([vec![], vec![]]);
            assert_eq!(*col, TensorVec::basis(key));
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(comult_ext::<Rational>(&[2], &[3], ctx(3)).is_err());
        assert!(comult_ext::<Rational>(&[2, 1], &[1], ctx(3)).is_err());
    }

    #[test]
    fn two_factor_block_sign() {
        // (e1 ⊗ e2) ↦ (1 ⊗ 1) ⊗ (e1 ⊗ e2); moving the empty fronts costs nothing
        let m: LinMap<Rational> = comult_ext(&[1, 1], &[1, 1], ctx(2)).unwrap();
        let image = m.apply_key(&vec![vec![0], vec![1]]);
        assert_eq!(image, TensorVec::basis(vec![vec![], vec![], vec![0], vec![1]]));
        // (e1 ⊗ e2) ↦ (1 ⊗ e2) ⊗ (e1 ⊗ 1) picks up a sign moving e2 past e1
        let m: LinMap<Rational> = comult_ext(&[1, 1], &[1, 0], ctx(2)).unwrap();
        let image = m.apply_key(&vec![vec![0], vec![1]]);
        let expected = TensorVec::basis(vec![vec![], vec![1], vec![0], vec![]]);
        assert_eq!(image, expected.scaled(&Rational::from_int(-1)));
    }

    #[test]
    fn coassociativity_single_factor() {
        assert!(coassociativity_holds(&[3], &[1], &[1], ctx(3)).unwrap());
        for n in 1..=3 {
            for l in 0..=4 {
                for a in 0..=l {
                    for b in 0..=l - a {
                        assert!(
                            coassociativity_holds(&[l], &[a], &[b], ctx(n)).unwrap(),
                            "l={l} a={a} b={b} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn coassociativity_two_factors() {
        assert!(coassociativity_holds(&[2, 2], &[1, 1], &[1, 0], ctx(3)).unwrap());
        assert!(coassociativity_holds(&[3, 1], &[1, 0], &[1, 1], ctx(3)).unwrap());
    }

    #[test]
    fn sym_split_counts() {
        let s = sym_splits(&[0, 0, 1], 1);
        assert_eq!(s, vec![(vec![0, 0], vec![1], 1), (vec![0, 1], vec![0], 2)]);
        let total: u64 = sym_splits(&[0, 0, 1, 2], 2).iter().map(|s| s.2).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge(&[1], &[0]), Some((vec![0, 1], true)));
        assert_eq!(wedge(&[0, 2], &[1]), Some((vec![0, 1, 2], true)));
        assert_eq!(wedge(&[0], &[0]), None);
        assert_eq!(sym_mul(&[2], &[0, 1]), vec![0, 1, 2]);
    }
}
