//! Acceptance checks, one line per criterion.

#![allow(clippy::type_complexity)]

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eqres::eqmod::ModuleModel;
use eqres::koszul_oracle::brute_tor;
use eqres::partitions::{part, partitions_up_to, SkewShape};
use eqres::rep_ring::{dim_schur, DimContext, RepSum};
use eqres::resolutions::{betti_table, ext_simples};
use eqres::suites::{run_suite, Suite};
use eqres::tensor_lab::{
    coassociativity_holds, pieri_inclusion, schur_module, semistandard_tableaux, verify_sam, LinMap, PieriMode,
    TensorVec,
};
use eqres::Rational;

type Outcome = Result<String, String>;

fn ctx(n: usize) -> DimContext {
    DimContext::new(n).unwrap()
}

fn sum(ps: &[&[usize]]) -> RepSum {
    RepSum::from_partitions(ps.iter().map(|p| part(p)))
}

fn q(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn betti_matches(m: &ModuleModel, expected: &[(usize, usize, RepSum)]) -> Result<(), String> {
    let got: Vec<(usize, usize, RepSum)> = betti_table(m).iter().map(|(i, d, x)| (i, d, x.clone())).collect();
    ensure(got == expected, || format!("got {got:?}"))
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let m = ModuleModel::elementary(part(&[2, 2]), ctx(3));
    betti_matches(&m, &[(0, 4, sum(&[&[2, 2]])), (1, 5, sum(&[&[2, 2, 1]]))])?;
    let dims = (dim_schur(&part(&[2, 2]), ctx(3)), dim_schur(&part(&[2, 2, 1]), ctx(3)));
    ensure(dims == (6, 3), || format!("dims {dims:?}"))?;
    within(Duration::from_secs(1), start)?;
    Ok("(0,4): (2,2) dim 6; (1,5): (2,2,1) dim 3".into())
}

fn ac2() -> Outcome {
    let m = ModuleModel::elementary(part(&[2, 1]), ctx(3));
    betti_matches(
        &m,
        &[
            (0, 3, sum(&[&[2, 1]])),
            (1, 4, sum(&[&[2, 2], &[2, 1, 1]])),
            (2, 5, sum(&[&[2, 2, 1]])),
        ],
    )?;
    Ok("(0,3): (2,1); (1,4): (2,2)+(2,1,1); (2,5): (2,2,1)".into())
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let m = ModuleModel::elementary(part(&[1, 1]), ctx(3));
    let h = brute_tor(&m).map_err(|e| e.to_string())?;
    let got: Vec<(u128, RepSum)> = h.iter().map(|x| (x.dim(), x.terms())).collect();
    let want = vec![
        (3, sum(&[&[1, 1]])),
        (1, sum(&[&[1, 1, 1]])),
        (0, RepSum::zero()),
        (0, RepSum::zero()),
    ];
    ensure(got == want, || format!("got {got:?}"))?;
    within(Duration::from_secs(10), start)?;
    Ok("H0 = (1,1) dim 3, H1 = (1,1,1) dim 1, H2 = H3 = 0".into())
}

fn sorted(xs: &[u8]) -> Vec<u8> {
    let mut v: Vec<u8> = xs.iter().map(|x| x - 1).collect();
    v.sort_unstable();
    v
}

fn elt(terms: &[(i64, &[&[u8]])]) -> TensorVec<Rational> {
    terms
        .iter()
        .map(|(c, fs)| (fs.iter().map(|f| sorted(f)).collect(), q(*c)))
        .collect()
}

/// One global scalar relating every column of `got` to `want`.
fn scalar(got: &[TensorVec<Rational>], want: &[TensorVec<Rational>]) -> Result<Rational, String> {
    ensure(got.len() == want.len(), || {
        format!("{} columns, expected {}", got.len(), want.len())
    })?;
    let mut c: Option<Rational> = None;
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        let r = g.ratio_to(w).ok_or_else(|| format!("column {i} is not proportional"))?;
        if *c.get_or_insert_with(|| r.clone()) != r {
            return Err(format!("column {i} has a different scalar"));
        }
    }
    c.ok_or_else(|| "no columns".into())
}

fn ac4() -> Outcome {
    let c3 = ctx(3);
    // ab⊗cd − ad⊗cb − cb⊗ad + cd⊗ab
    let p1 =
        pieri_inclusion::<Rational>(&part(&[2]), &part(&[2, 2]), PieriMode::Sym(2), c3).map_err(|e| e.to_string())?;
    let want1: Vec<_> = semistandard_tableaux(&part(&[2, 2]), 3)
        .iter()
        .map(|t| {
            let r = t.rows();
            let (a, b, c, d) = (r[0][0], r[0][1], r[1][0], r[1][1]);
            elt(&[
                (1, &[&[a, b], &[c, d]]),
                (-1, &[&[a, d], &[c, b]]),
                (-1, &[&[c, b], &[a, d]]),
                (1, &[&[c, d], &[a, b]]),
            ])
        })
        .collect();
    let s1 = scalar(p1.columns(), &want1)?;
    let reference = LinMap::from_columns(p1.source().clone(), p1.target().clone(), want1);
    ensure(p1.ratio_to(&reference) == Some(s1.clone()), || {
        "map-level scalar differs".into()
    })?;

    // c⊗ab − a⊗cb, with the V factor last
    let want2: Vec<_> = semistandard_tableaux(&part(&[2, 1]), 3)
        .iter()
        .map(|t| {
            let r = t.rows();
            let (a, b, c) = (r[0][0], r[0][1], r[1][0]);
            elt(&[(1, &[&[a, b], &[c]]), (-1, &[&[c, b], &[a]])])
        })
        .collect();
    let mut s2 = Vec::new();
    for mode in [PieriMode::Sym(1), PieriMode::Ext(1)] {
        let p2 = pieri_inclusion::<Rational>(&part(&[2]), &part(&[2, 1]), mode, c3).map_err(|e| e.to_string())?;
        s2.push(scalar(p2.columns(), &want2)?);
    }

    let s22 = schur_module::<Rational>(&part(&[2, 2]), c3).map_err(|e| e.to_string())?;
    let want22 = [
        elt(&[
            (1, &[&[1, 1], &[2, 2]]),
            (-2, &[&[1, 2], &[1, 2]]),
            (1, &[&[2, 2], &[1, 1]]),
        ]),
        elt(&[
            (1, &[&[1, 1], &[2, 3]]),
            (-1, &[&[1, 3], &[1, 2]]),
            (-1, &[&[1, 2], &[1, 3]]),
            (1, &[&[2, 3], &[1, 1]]),
        ]),
        elt(&[
            (1, &[&[1, 1], &[3, 3]]),
            (-2, &[&[1, 3], &[1, 3]]),
            (1, &[&[3, 3], &[1, 1]]),
        ]),
        elt(&[
            (1, &[&[1, 2], &[2, 3]]),
            (-1, &[&[1, 3], &[2, 2]]),
            (-1, &[&[2, 2], &[1, 3]]),
            (1, &[&[2, 3], &[1, 2]]),
        ]),
        elt(&[
            (1, &[&[1, 2], &[3, 3]]),
            (-1, &[&[1, 3], &[2, 3]]),
            (-1, &[&[2, 3], &[1, 3]]),
            (1, &[&[3, 3], &[1, 2]]),
        ]),
        elt(&[
            (1, &[&[2, 2], &[3, 3]]),
            (-2, &[&[2, 3], &[2, 3]]),
            (1, &[&[3, 3], &[2, 2]]),
        ]),
    ];
    let s6 = scalar(s22.image_sym.columns(), &want22)?;

    let s21 = schur_module::<Rational>(&part(&[2, 1]), c3).map_err(|e| e.to_string())?;
    let listed: [(&[u8], &[u8], &[u8], &[u8]); 8] = [
        (&[2], &[1, 1], &[1], &[2, 1]),
        (&[3], &[1, 1], &[1], &[1, 3]),
        (&[2], &[1, 2], &[1], &[2, 2]),
        (&[3], &[1, 2], &[1], &[2, 3]),
        (&[2], &[1, 3], &[1], &[2, 3]),
        (&[3], &[1, 3], &[1], &[3, 3]),
        (&[3], &[2, 2], &[2], &[2, 3]),
        (&[3], &[2, 3], &[2], &[3, 3]),
    ];
    let want21: Vec<_> = listed
        .iter()
        .map(|(v1, s1, v2, s2)| elt(&[(1, &[s1, v1]), (-1, &[s2, v2])]))
        .collect();
    let s8 = scalar(s21.image_sym.columns(), &want21)?;
    Ok(format!(
        "Sym2⊗Sym2 scalar {s1}; V⊗Sym2 scalars {} (Sym) {} (Ext); six (2,2) images scalar {s6}; eight (2,1) images scalar {s8}",
        s2[0], s2[1]
    ))
}

fn suite(s: Suite, limit: Duration) -> Outcome {
    let start = Instant::now();
    let reports = run_suite(s, s.default_bounds());
    if let Some(bad) = reports.iter().find(|r| !r.passed) {
        return Err(format!("{}: {}", bad.instance, bad.mismatches.join("; ")));
    }
    within(limit, start)?;
    Ok(format!("{} instances in {:.2?}", reports.len(), start.elapsed()))
}

fn ac8() -> Outcome {
    let (l, e) = (part(&[3, 1]), part(&[3, 2]));
    let got: Vec<u8> = (0..=3).map(|i| ext_simples(&l, &e, i, ctx(3))).collect();
    ensure(got == [0, 1, 0, 0], || format!("Ext^i((3,1),(3,2)) = {got:?}"))?;
    let mut count = 0;
    for n in 1..=4 {
        let c = ctx(n);
        let shapes = partitions_up_to(6, n);
        for lambda in partitions_up_to(5, n) {
            for eta in &shapes {
                for i in 0..=n {
                    let strip = SkewShape::new(eta.clone(), lambda.clone())
                        .is_ok_and(|s| s.size() == i && s.is_vertical_strip());
                    let want = u8::from(strip);
                    count += 1;
                    ensure(ext_simples(&lambda, eta, i, c) == want, || {
                        format!("λ={lambda} η={eta} i={i} n={n}")
                    })?;
                }
            }
        }
    }
    Ok(format!("Ext^1((3,1),(3,2)) = 1, others 0; {count} grid cases"))
}

fn ac9() -> Outcome {
    let c = coassociativity_holds(&[3], &[1], &[1], ctx(3)).map_err(|e| e.to_string())?;
    ensure(c, || "l=(3) a=(1) b=(1) fails".into())?;
    let cases: [(&[usize], &[usize], &[usize], usize); 3] = [
        (&[1], &[2], &[2, 1], 2),
        (&[2, 1], &[2, 1], &[2, 1], 3),
        (&[1, 1], &[2, 1], &[3, 1], 3),
    ];
    for (nu, mu, eta, n) in cases {
        let ok = verify_sam(&part(nu), &part(mu), &part(eta), ctx(n)).map_err(|e| e.to_string())?;
        ensure(ok, || format!("Sam composite vanishes for {nu:?} {mu:?} {eta:?}"))?;
    }
    let a = suite(Suite::Coass, Duration::from_secs(600))?;
    let b = suite(Suite::Sam, Duration::from_secs(600))?;
    Ok(format!("coassociativity: {a}; Sam: {b}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("AC1 resolution of M_(2,2), n=3", ac1),
        ("AC2 resolution of M_(2,1), n=3", ac2),
        ("AC3 Koszul homology of M_(1,1), n=3", ac3),
        ("AC4 Pieri and Schur images up to scalar", ac4),
        ("AC5 filtration characters, |λ|≤6, n≤4", || {
            suite(Suite::Filtration, Duration::from_secs(60))
        }),
        ("AC6 Euler characteristics, |λ|≤5, n≤4, l≤3", || {
            suite(Suite::Euler, Duration::from_secs(120))
        }),
        ("AC7 brute-force homology, |λ|≤4, n≤3, l≤2", || {
            suite(Suite::Brute, Duration::from_secs(900))
        }),
        ("AC8 Ext between simples", ac8),
        ("AC9 coassociativity and Sam composites", ac9),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {name} ({took:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name} ({took:.2?}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
