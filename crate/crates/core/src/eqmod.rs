//! The modules `P_λ`, `M_λ` and `M_λ / V^l M_λ`, their graded characters and
//! lattice diagrams, the saturation filtration of `P_λ`, and splicing.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{strata, Partition};
use crate::rep_ring::{pieri_sym, DimContext, GradedCharacter, RepSum};
use crate::report::CheckReport;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleKind {
    /// `P_λ = R ⊗ S_λ`.
    Projective { lambda: Partition },
    /// `M_λ`: one copy of `S_{λ+(d)}` in each degree `|λ|+d`.
    Elementary { lambda: Partition },
    /// `M_λ / V^l M_λ`.
    Truncation { lambda: Partition, l: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleModel {
    pub kind: ModuleKind,
    pub ctx: DimContext,
}

impl ModuleModel {
    pub fn projective(lambda: Partition, ctx: DimContext) -> Self {
        ModuleModel {
            kind: ModuleKind::Projective { lambda },
            ctx,
        }
    }

    pub fn elementary(lambda: Partition, ctx: DimContext) -> Self {
        ModuleModel {
            kind: ModuleKind::Elementary { lambda },
            ctx,
        }
    }

    pub fn truncation(lambda: Partition, l: usize, ctx: DimContext) -> Result<Self> {
        if l == 0 {
            return Err(Error::Precondition("a truncation needs l ≥ 1".into()));
        }
        Ok(ModuleModel {
            kind: ModuleKind::Truncation { lambda, l },
            ctx,
        })
    }

    pub fn lambda(&self) -> &Partition {
        match &self.kind {
            ModuleKind::Projective { lambda }
            | ModuleKind::Elementary { lambda }
            | ModuleKind::Truncation { lambda, .. } => lambda,
        }
    }

    /// Degree of the generators, `|λ|`.
    pub fn base_degree(&self) -> usize {
        self.lambda().size()
    }

    /// Last nonzero degree, if the module is finite dimensional.
    pub fn top_degree(&self) -> Option<usize> {
        match self.kind {
            ModuleKind::Truncation { l, .. } => Some(self.base_degree() + l - 1),
            _ => None,
        }
    }

    /// `S_λ` vanishes when `λ` has more than `n` rows, and so does the module.
    pub fn is_zero(&self) -> bool {
        !self.ctx.admits(self.lambda())
    }

    /// The degree-`d` component of the character.
    pub fn component(&self, d: usize) -> RepSum {
        let base = self.base_degree();
        if d < base || self.is_zero() || self.top_degree().is_some_and(|top| d > top) {
            return RepSum::zero();
        }
        let lambda = self.lambda();
        match self.kind {
            ModuleKind::Projective { .. } => pieri_sym(&RepSum::single(lambda.clone()), d - base, self.ctx),
            _ => RepSum::single(lambda.extend_first_row(d - base)),
        }
    }

    pub fn character(&self, dmin: usize, dmax: usize) -> Result<GradedCharacter> {
        if dmin > dmax {
            return Err(Error::Precondition(format!("empty degree range {dmin}..={dmax}")));
        }
        let mut g = GradedCharacter::new();
        for d in dmin..=dmax {
            g.add_component(d, &self.component(d))?;
        }
        Ok(g)
    }
}

impl fmt::Display for ModuleModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ModuleKind::Projective { lambda } => write!(f, "P{lambda}")?,
            ModuleKind::Elementary { lambda } => write!(f, "M{lambda}")?,
            ModuleKind::Truncation { lambda, l } => write!(f, "M{lambda}/V^{l}")?,
        }
        write!(f, " (n = {})", self.ctx.n())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeNode {
    pub id: usize,
    pub degree: usize,
    pub partition: Partition,
    /// Distinguishes copies of the same partition in different branches.
    pub branch: usize,
}

/// Nodes are irreducible summands; an edge `a → b` says `S_b` lies in the
/// image of `V ⊗ S_a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeModel {
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<(usize, usize)>,
}

impl LatticeModel {
    fn push_node(&mut self, degree: usize, partition: Partition, branch: usize) -> usize {
        let id = self.nodes.len();
        self.nodes.push(LatticeNode {
            id,
            degree,
            partition,
            branch,
        });
        id
    }

    pub fn node(&self, id: usize) -> &LatticeNode {
        &self.nodes[id]
    }

    pub fn nodes_in_degree(&self, d: usize) -> impl Iterator<Item = &LatticeNode> {
        self.nodes.iter().filter(move |v| v.degree == d)
    }

    pub fn out_degree(&self, id: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == id).count()
    }

    /// Every edge raises the degree by one and adds a single box.
    pub fn is_well_formed(&self) -> bool {
        self.nodes.iter().all(|v| v.degree == v.partition.size())
            && self.edges.iter().all(|&(a, b)| {
                let (a, b) = (self.node(a), self.node(b));
                b.degree == a.degree + 1 && a.partition.is_contained_in(&b.partition)
            })
    }
}

/// The lattice of `m` in degrees `≤ dmax`.
///
/// For `P_λ` every Pieri-possible arrow is present; for `M_λ` and its
/// truncations it is the single first-row chain.
pub fn lattice(m: &ModuleModel, dmax: usize) -> Result<LatticeModel> {
    let base = m.base_degree();
    if dmax < base {
        return Err(Error::Precondition(format!(
            "dmax = {dmax} is below the generator degree {base}"
        )));
    }
    let mut out = LatticeModel::default();
    let mut previous: Vec<usize> = Vec::new();
    for d in base..=dmax {
        let mut parts: Vec<Partition> = m.component(d).partitions().cloned().collect();
        parts.reverse();
        let current: Vec<usize> = parts.into_iter().map(|p| out.push_node(d, p, 0)).collect();
        for &a in &previous {
            for &b in &current {
                if out.node(a).partition.is_contained_in(&out.node(b).partition) {
                    out.edges.push((a, b));
                }
            }
        }
        previous = current;
    }
    Ok(out)
}

/// `[S(λ,0), S(λ,1), …, S(λ,λ₁)]`, the strata of the saturation filtration
/// of `P_λ`.
pub fn filtration_strata(lambda: &Partition) -> Vec<BTreeSet<Partition>> {
    (0..=lambda.first_row()).map(|i| strata(lambda, i)).collect()
}

/// Compares the character of `P_λ` with that of the associated graded
/// `⊕_i ⊕_{β ∈ S(λ,i)} M_β` in every degree up to `dmax`.
pub fn verify_filtration(lambda: &Partition, ctx: DimContext, dmax: usize) -> CheckReport {
    let p = ModuleModel::projective(lambda.clone(), ctx);
    let pieces: Vec<ModuleModel> = filtration_strata(lambda)
        .into_iter()
        .flatten()
        .map(|beta| ModuleModel::elementary(beta, ctx))
        .collect();
    let mut mismatches = Vec::new();
    for d in 0..=dmax {
        let lhs = p.component(d);
        let rhs: RepSum = pieces.iter().fold(RepSum::zero(), |acc, m| &acc + &m.component(d));
        if lhs != rhs {
            mismatches.push(format!("degree {d}: P has {lhs}, strata give {rhs}"));
        }
    }
    CheckReport::new(format!("filtration λ={lambda} n={} dmax={dmax}", ctx.n()), mismatches)
}

/// A generator `S_partition` sitting in `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placed {
    pub partition: Partition,
    pub degree: usize,
}

impl Placed {
    pub fn new(partition: Partition, degree: usize) -> Self {
        Placed { partition, degree }
    }
}

impl fmt::Display for Placed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.partition, self.degree)
    }
}

/// Parses `"2,1@3"`.
impl FromStr for Placed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, d) = s
            .split_once('@')
            .ok_or_else(|| Error::InvalidPartition(format!("{s:?} is not of the form partition@degree")))?;
        let degree = d
            .trim()
            .parse()
            .map_err(|_| Error::InvalidPartition(format!("bad degree {d:?} in {s:?}")))?;
        Ok(Placed {
            partition: p.parse()?,
            degree,
        })
    }
}

/// Lattice of `(⊕_b M_b) / ⟨diagonal S_glue⟩` in degrees `≤ dmax`.
///
/// Below the glue degree each branch is its own chain (tags `0..count`);
/// from the glue degree on, the branches merge into `count − 1` chains
/// (tags `count..`). Every branch's last node before the glue degree points
/// to every merged node at the glue degree.
pub fn splice(branches: &[Placed], glue: &Placed, dmax: usize) -> Result<LatticeModel> {
    if branches.is_empty() {
        return Err(Error::Precondition("splice needs at least one branch".into()));
    }
    for p in branches.iter().chain(std::iter::once(glue)) {
        if p.degree != p.partition.size() {
            return Err(Error::Precondition(format!("{p}: S_λ lives in degree |λ|")));
        }
    }
    for b in branches {
        if !glue.partition.is_first_row_extension_of(&b.partition) {
            return Err(Error::Precondition(format!(
                "{glue} is not reachable from the branch {b}"
            )));
        }
    }
    let count = branches.len();
    let mut out = LatticeModel::default();
    let mut last_before_glue = Vec::new();
    for (tag, b) in branches.iter().enumerate() {
        let mut prev = None;
        for d in b.degree..glue.degree.min(dmax + 1) {
            let id = out.push_node(d, b.partition.extend_first_row(d - b.degree), tag);
            if let Some(p) = prev {
                out.edges.push((p, id));
            }
            prev = Some(id);
        }
        last_before_glue.extend(prev.filter(|&p| out.node(p).degree + 1 == glue.degree));
    }
    for c in 0..count - 1 {
        let mut prev: Option<usize> = None;
        for d in glue.degree..=dmax {
            let id = out.push_node(d, glue.partition.extend_first_row(d - glue.degree), count + c);
            match prev {
                Some(p) => out.edges.push((p, id)),
                None => out.edges.extend(last_before_glue.iter().map(|&a| (a, id))),
            }
            prev = Some(id);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn ctx(n: usize) -> DimContext {
        DimContext::new(n).unwrap()
    }

    #[test]
    fn placed_parsing() {
        let p: Placed = "2,1@3".parse().unwrap();
        assert_eq!(p, Placed::new(part(&[2, 1]), 3));
        assert_eq!(p.to_string().parse::<Placed>().unwrap(), p);
        assert!("2,1".parse::<Placed>().is_err());
        assert!("2,1@x".parse::<Placed>().is_err());
    }

    #[test]
    fn character_examples() {
        let m = ModuleModel::elementary(part(&[1, 1]), ctx(2));
        assert_eq!(m.component(3), RepSum::single(part(&[2, 1])));
        let t = ModuleModel::truncation(part(&[1, 1]), 1, ctx(3)).unwrap();
        assert!(t.component(3).is_zero());
        assert_eq!(t.component(2), RepSum::single(part(&[1, 1])));
        let p = ModuleModel::projective(part(&[1]), ctx(2));
        assert_eq!(p.component(2), RepSum::from_partitions([part(&[2]), part(&[1, 1])]));
        assert!(ModuleModel::truncation(part(&[1]), 0, ctx(2)).is_err());
        assert!(p.character(3, 2).is_err());
    }

    #[test]
    fn too_many_rows_is_zero() {
        let m = ModuleModel::elementary(part(&[1, 1, 1]), ctx(2));
        assert!(m.is_zero());
        assert!(m.character(0, 6).unwrap().is_zero());
    }

    #[test]
    fn truncation_exact_sequence() {
        for n in 1..=4 {
            for lambda in [part(&[]), part(&[1]), part(&[2, 1]), part(&[3, 3]), part(&[2, 2, 1, 1])] {
                for l in 1..=4 {
                    let full = ModuleModel::elementary(lambda.clone(), ctx(n));
                    let trunc = ModuleModel::truncation(lambda.clone(), l, ctx(n)).unwrap();
                    let sub = ModuleModel::elementary(lambda.extend_first_row(l), ctx(n));
                    for d in 0..lambda.size() + 10 {
                        assert_eq!(&trunc.component(d) + &sub.component(d), full.component(d));
                    }
                }
            }
        }
    }

    #[test]
    fn r_tensor_v_lattice() {
        let lat = lattice(&ModuleModel::projective(part(&[1]), ctx(2)), 4).unwrap();
        assert!(lat.is_well_formed());
        let shape: Vec<(usize, String)> = lat.nodes.iter().map(|v| (v.degree, v.partition.to_string())).collect();
        assert_eq!(
            shape,
            [
                (1, "(1)"),
                (2, "(2)"),
                (2, "(1,1)"),
                (3, "(3)"),
                (3, "(2,1)"),
                (4, "(4)"),
                (4, "(3,1)")
            ]
            .map(|(d, s)| (d, s.to_string()))
        );
        assert_eq!(lat.edges.len(), 2 + 3 + 3);
    }

    #[test]
    fn every_possible_arrow_is_drawn() {
        let lat = lattice(&ModuleModel::projective(part(&[1, 1, 1]), ctx(5)), 5).unwrap();
        assert!(lat.is_well_formed());
        assert_eq!(lat.nodes_in_degree(4).count(), 2);
        for v in &lat.nodes {
            let reachable = lat
                .nodes_in_degree(v.degree + 1)
                .filter(|w| v.partition.add_one_box().contains(&w.partition))
                .count();
            assert_eq!(lat.out_degree(v.id), reachable);
        }
    }

    #[test]
    fn elementary_lattice_is_a_chain() {
        let lat = lattice(&ModuleModel::elementary(part(&[2, 1]), ctx(3)), 5).unwrap();
        let parts: Vec<String> = lat.nodes.iter().map(|v| v.partition.to_string()).collect();
        assert_eq!(parts, ["(2,1)", "(3,1)", "(4,1)"]);
        assert_eq!(lat.edges, [(0, 1), (1, 2)]);
        assert!(lattice(&ModuleModel::elementary(part(&[2, 1]), ctx(3)), 2).is_err());
    }

    #[test]
    fn strata_lists() {
        let names = |l: &Partition| -> Vec<Vec<String>> {
            filtration_strata(l)
                .iter()
                .map(|s| s.iter().map(|p| p.to_string()).collect())
                .collect()
        };
        assert_eq!(
            names(&part(&[2, 1])),
            [vec!["(2,2,1)"], vec!["(2,1,1)", "(2,2)"], vec!["(2,1)"]]
        );
        assert_eq!(names(&part(&[])), [vec!["()"]]);
        assert_eq!(names(&part(&[2])), [vec!["(2,2)"], vec!["(2,1)"], vec!["(2)"]]);
    }

    #[test]
    fn filtration_examples() {
        assert!(verify_filtration(&part(&[1]), ctx(2), 8).passed);
        assert!(verify_filtration(&part(&[]), ctx(3), 8).passed);
        assert!(verify_filtration(&part(&[2, 1]), ctx(3), 10).passed);
    }

    #[test]
    fn splice_two_chains() {
        let lat = splice(
            &[Placed::new(part(&[2, 1]), 3), Placed::new(part(&[3, 1]), 4)],
            &Placed::new(part(&[5, 1]), 6),
            8,
        )
        .unwrap();
        assert!(lat.is_well_formed());
        let by_branch = |b: usize| -> Vec<String> {
            lat.nodes
                .iter()
                .filter(|v| v.branch == b)
                .map(|v| v.partition.to_string())
                .collect()
        };
        assert_eq!(by_branch(0), ["(2,1)", "(3,1)", "(4,1)"]);
        assert_eq!(by_branch(1), ["(3,1)", "(4,1)"]);
        assert_eq!(by_branch(2), ["(5,1)", "(6,1)", "(7,1)"]);
        let glue_node = lat.nodes.iter().find(|v| v.branch == 2 && v.degree == 6).unwrap().id;
        let into_glue: Vec<usize> = lat.edges.iter().filter(|e| e.1 == glue_node).map(|e| e.0).collect();
        assert_eq!(into_glue.len(), 2);
    }

    #[test]
    fn splice_degenerate_cases() {
        // one branch glued l degrees up is the truncation
        let lat = splice(&[Placed::new(part(&[2, 1]), 3)], &Placed::new(part(&[4, 1]), 5), 9).unwrap();
        let trunc = lattice(&ModuleModel::truncation(part(&[2, 1]), 2, ctx(3)).unwrap(), 9).unwrap();
        assert_eq!(lat, trunc);
        // two identical branches glued at their start leave one chain
        let b = Placed::new(part(&[2]), 2);
        let lat = splice(&[b.clone(), b.clone()], &b, 4).unwrap();
        assert_eq!(lat.nodes.len(), 3);
        assert!(lat.nodes.iter().all(|v| v.branch == 2));
        assert!(splice(&[Placed::new(part(&[2, 2]), 4)], &Placed::new(part(&[3, 1]), 4), 6).is_err());
        assert!(splice(&[Placed::new(part(&[2, 1]), 4)], &Placed::new(part(&[3, 1]), 4), 6).is_err());
    }

    #[test]
    fn lattice_json_round_trip() {
        let lat = lattice(&ModuleModel::projective(part(&[2]), ctx(3)), 5).unwrap();
        let back: LatticeModel = serde_json::from_str(&serde_json::to_string(&lat).unwrap()).unwrap();
        assert_eq!(back, lat);
        let m = ModuleModel::truncation(part(&[2, 1]), 2, ctx(3)).unwrap();
        let back: ModuleModel = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }
}
