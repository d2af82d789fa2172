//! Parameter grids for the property checks. Each instance is independent,
//! so callers may run them in any order or in parallel.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eqmod::{verify_filtration, ModuleModel};
use crate::error::{Error, Result};
use crate::koszul_oracle::{brute_check, euler_check};
use crate::partitions::{horizontal_strips, partitions_up_to, vertical_strips, LabeledDiagram, Partition, SkewShape};
use crate::rep_ring::{dim_schur, DimContext};
use crate::report::CheckReport;
use crate::tensor_lab::linalg::Echelon;
use crate::tensor_lab::pieri::v_outside_diagrams;
use crate::tensor_lab::{
    coassociativity_holds, labeled_embedding, pieri_inclusion, sam_composite, Bracketing, PieriMode,
};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Filtration,
    Euler,
    Brute,
    Pieri,
    Coass,
    Sam,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Filtration,
        Suite::Euler,
        Suite::Brute,
        Suite::Pieri,
        Suite::Coass,
        Suite::Sam,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Filtration => "filtration",
            Suite::Euler => "euler",
            Suite::Brute => "brute",
            Suite::Pieri => "pieri",
            Suite::Coass => "coass",
            Suite::Sam => "sam",
        }
    }

    pub fn default_bounds(&self) -> GridBounds {
        let (max_size, max_n, max_l, extra_degrees) = match self {
            Suite::Filtration => (6, 4, 0, 8),
            Suite::Euler => (5, 4, 3, 8),
            Suite::Brute => (4, 3, 2, 0),
            Suite::Pieri => (3, 3, 2, 0),
            Suite::Coass => (4, 3, 0, 0),
            Suite::Sam => (2, 3, 2, 0),
        };
        GridBounds {
            max_size,
            max_n,
            max_l,
            extra_degrees,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

/// Grid limits. `max_size` bounds `|λ|` (for coassociativity, the exterior
/// degree `l`); `max_l` bounds truncation levels, Pieri `k` and the strip
/// sizes in Sam's check; `extra_degrees` is how far past `|λ|` characters
/// are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBounds {
    pub max_size: usize,
    pub max_n: usize,
    pub max_l: usize,
    pub extra_degrees: usize,
}

/// One check in a grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Filtration {
        lambda: Partition,
        ctx: DimContext,
        dmax: usize,
    },
    Euler {
        module: ModuleModel,
        dmax: usize,
    },
    Brute {
        module: ModuleModel,
    },
    Pieri {
        lambda: Partition,
        eta: Partition,
        mode: PieriMode,
        ctx: DimContext,
    },
    Labeled {
        diagram: LabeledDiagram,
        ctx: DimContext,
    },
    Coass {
        l: usize,
        a: usize,
        b: usize,
        ctx: DimContext,
    },
    Sam {
        nu: Partition,
        mu: Partition,
        eta: Partition,
        ctx: DimContext,
    },
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Filtration { lambda, ctx, dmax } => write!(f, "filtration λ={lambda} n={} dmax={dmax}", ctx.n()),
            Instance::Euler { module, dmax } => write!(f, "euler {module} D≤{dmax}"),
            Instance::Brute { module } => write!(f, "brute {module}"),
            Instance::Pieri { lambda, eta, mode, ctx } => write!(f, "pieri {lambda} ⊂ {eta} {mode:?} n={}", ctx.n()),
            Instance::Labeled { diagram, ctx } => write!(f, "labeled {diagram} n={}", ctx.n()),
            Instance::Coass { l, a, b, ctx } => write!(f, "coass l={l} a={a} b={b} n={}", ctx.n()),
            Instance::Sam { nu, mu, eta, ctx } => write!(f, "sam ν={nu} μ={mu} η={eta} n={}", ctx.n()),
        }
    }
}

fn contexts(max_n: usize) -> impl Iterator<Item = DimContext> {
    (1..=max_n).filter_map(|n| DimContext::new(n).ok())
}

fn modules(lambda: &Partition, ctx: DimContext, max_l: usize, projective: bool) -> Vec<ModuleModel> {
    let mut out = Vec::new();
    if projective {
        out.push(ModuleModel::projective(lambda.clone(), ctx));
    }
    out.push(ModuleModel::elementary(lambda.clone(), ctx));
    out.extend((1..=max_l).filter_map(|l| ModuleModel::truncation(lambda.clone(), l, ctx).ok()));
    out
}

/// Every instance of `suite` within `bounds`, in a fixed order.
pub fn instances(suite: Suite, bounds: GridBounds) -> Vec<Instance> {
    let GridBounds {
        max_size,
        max_n,
        max_l,
        extra_degrees,
    } = bounds;
    let mut out = Vec::new();
    for ctx in contexts(max_n) {
        let n = ctx.n();
        match suite {
            Suite::Filtration => {
                for lambda in partitions_up_to(max_size, n) {
                    let dmax = lambda.size() + extra_degrees;
                    out.push(Instance::Filtration { lambda, ctx, dmax });
                }
            }
            Suite::Euler => {
                for lambda in partitions_up_to(max_size, n) {
                    let dmax = lambda.size() + extra_degrees;
                    for module in modules(&lambda, ctx, max_l, false) {
                        out.push(Instance::Euler { module, dmax });
                    }
                }
            }
            Suite::Brute => {
                for lambda in partitions_up_to(max_size, n) {
                    for module in modules(&lambda, ctx, max_l, true) {
                        out.push(Instance::Brute { module });
                    }
                }
            }
            Suite::Pieri => {
                for lambda in partitions_up_to(max_size, n) {
                    for k in 0..=max_l {
                        for eta in horizontal_strips(&lambda, k).into_iter().filter(|e| ctx.admits(e)) {
                            out.push(Instance::Pieri {
                                lambda: lambda.clone(),
                                eta,
                                mode: PieriMode::Sym(k),
                                ctx,
                            });
                        }
                        for eta in vertical_strips(&lambda, k).into_iter().filter(|e| ctx.admits(e)) {
                            out.push(Instance::Pieri {
                                lambda: lambda.clone(),
                                eta,
                                mode: PieriMode::Ext(k),
                                ctx,
                            });
                        }
                        for diagram in v_outside_diagrams(&lambda, k)
                            .into_iter()
                            .filter(|d| ctx.admits(d.shape()))
                        {
                            out.push(Instance::Labeled { diagram, ctx });
                        }
                    }
                }
            }
            Suite::Coass => {
                for l in 0..=max_size {
                    for a in 0..=l {
                        for b in 0..=l - a {
                            out.push(Instance::Coass { l, a, b, ctx });
                        }
                    }
                }
            }
            Suite::Sam => {
                for nu in partitions_up_to(max_size, n) {
                    for m in 0..=max_l {
                        for mu in horizontal_strips(&nu, m) {
                            for d in 0..=max_l {
                                for eta in horizontal_strips(&mu, d) {
                                    let in_both =
                                        SkewShape::new(eta.clone(), nu.clone()).is_ok_and(|s| s.is_horizontal_strip());
                                    if ctx.admits(&eta) && in_both {
                                        out.push(Instance::Sam {
                                            nu: nu.clone(),
                                            mu: mu.clone(),
                                            eta,
                                            ctx,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn expect_rank(instance: &Instance, rank: usize, shape: &Partition, ctx: DimContext) -> CheckReport {
    let dim = dim_schur(shape, ctx);
    let mismatches = if rank as u128 == dim {
        Vec::new()
    } else {
        vec![format!("rank {rank}, expected dim S_{shape} = {dim}")]
    };
    CheckReport::new(instance.to_string(), mismatches)
}

impl Instance {
    /// Runs the check. Errors mean the instance could not be evaluated, for
    /// example because it exceeds a guardrail.
    pub fn run(&self) -> Result<CheckReport> {
        match self {
            Instance::Filtration { lambda, ctx, dmax } => Ok(verify_filtration(lambda, *ctx, *dmax)),
            Instance::Euler { module, dmax } => {
                let mismatches = (0..=*dmax)
                    .flat_map(|d| {
                        euler_check(module, d)
                            .mismatches
                            .into_iter()
                            .map(move |m| format!("D={d}: {m}"))
                    })
                    .collect();
                Ok(CheckReport::new(self.to_string(), mismatches))
            }
            Instance::Brute { module } => brute_check(module),
            Instance::Pieri { lambda, eta, mode, ctx } => {
                let map = pieri_inclusion::<Rational>(lambda, eta, *mode, *ctx)?;
                Ok(expect_rank(self, map.rank(), eta, *ctx))
            }
            Instance::Labeled { diagram, ctx } => {
                let outside = labeled_embedding::<Rational>(diagram, Bracketing::VOutside, *ctx)?;
                let inside = labeled_embedding::<Rational>(&diagram.normalize_labels(), Bracketing::VInside, *ctx)?;
                let a: Echelon<Rational> = outside.columns().iter().cloned().collect();
                let b: Echelon<Rational> = inside.columns().iter().cloned().collect();
                let mut report = expect_rank(self, a.rank(), diagram.shape(), *ctx);
                if !a.same_span(&b) {
                    report = CheckReport::new(
                        self.to_string(),
                        vec!["the two bracketings span different subspaces".into()],
                    );
                }
                Ok(report)
            }
            Instance::Coass { l, a, b, ctx } => {
                let ok = coassociativity_holds(&[*l], &[*a], &[*b], *ctx)?;
                let mismatches = if ok {
                    Vec::new()
                } else {
                    vec!["the two composites differ".into()]
                };
                Ok(CheckReport::new(self.to_string(), mismatches))
            }
            Instance::Sam { nu, mu, eta, ctx } => {
                let map = sam_composite::<Rational>(nu, mu, eta, *ctx)?;
                Ok(expect_rank(self, map.rank(), eta, *ctx))
            }
        }
    }
}

/// Runs a whole suite sequentially; evaluation errors become failures.
pub fn run_suite(suite: Suite, bounds: GridBounds) -> Vec<CheckReport> {
    instances(suite, bounds)
        .iter()
        .map(|x| {
            x.run()
                .unwrap_or_else(|e| CheckReport::new(x.to_string(), vec![e.to_string()]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(suite: Suite) -> GridBounds {
        let mut b = suite.default_bounds();
        b.max_size = b.max_size.min(2);
        b.max_n = 2;
        b
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_grids_pass() {
        for s in Suite::ALL {
            let reports = run_suite(s, small(s));
            assert!(!reports.is_empty(), "{s}");
            for r in reports {
                assert!(r.passed, "{}: {:?}", r.instance, r.mismatches);
            }
        }
    }

    #[test]
    fn instance_order_is_fixed() {
        let b = Suite::Euler.default_bounds();
        assert_eq!(instances(Suite::Euler, b), instances(Suite::Euler, b));
        assert_eq!(
            instances(
                Suite::Coass,
                GridBounds {
                    max_size: 2,
                    max_n: 1,
                    max_l: 0,
                    extra_degrees: 0
                }
            )
            .len(),
            10
        );
    }
}
