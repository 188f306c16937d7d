//! Acceptance criteria 1-9, one PASS/FAIL line each.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{poly, random_monic, random_poly};
use qolab_core::adic::{adic_expand, approximate_root, multi_adic_expand};
use qolab_core::charseq::{contact, order_from_contact};
use qolab_core::embedding::{
    embedding_decide, qo_property_decide, verify_chain, EmbeddingVerdict, NotCoordinateReason,
    QoPropertyOutcome,
};
use qolab_core::irreducibility::{
    family_invariance, irreducibility_test, is_quasi_ordinary, Convention, ReducibleReason, Verdict,
};
use qolab_core::resultant::{discriminant_y, resultant_y};
use qolab_core::roots::{expand_root, order_via_root, Parametrization};
use qolab_core::text::parse_laurent;
use qolab_core::{ev, q, Error, ExponentVec, LaurentPoly, YPoly, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const F4: &str = "y^4 - 2*x1*y^2 - 4*x1^2*x2*y + x1^2 - x1^3*x2^2";

/// Quasi-ordinary polynomials whose meromorphic counterparts are irreducible.
const CATALOG: &[(&str, usize)] = &[
    (F4, 2),
    ("y^4 - 2*x^3*y^2 - 4*x^4*y + x^6 - x^5", 1),
    (
        "y^4 - 2*x1^3*x2^2*y^2 - 4*x1^4*x2^2*y + x1^6*x2^4 - x1^5*x2^2",
        2,
    ),
    ("y^2 - 2*x^2*y + x^4 - x^3", 1),
    ("y^2 - x^3", 1),
    ("y^2 - x1^3*x2", 2),
    ("y^3 - x^2", 1),
    ("y^2 - x^3 - x", 1),
    ("(y^2 - x)^3 + y", 1),
];

const TEST_G1: &[&str] = &[
    "y",
    "y + x",
    "x^2",
    "y^2 - x^3 + 1",
    "y^3 + x*y - x^4",
    "y - x^2 + 3",
];
const TEST_G2: &[&str] = &[
    "y",
    "x1*x2^2",
    "y^2 - x1",
    "y + x1^2*x2 + 1",
    "y^3 - x1*x2^2*y + x2",
    "y^2 + x1^3*x2",
];

/// Retries with growing precision until the oracle certifies its answer.
fn with_precision<T>(mut run: impl FnMut(i64) -> qolab_core::Result<T>) -> qolab_core::Result<T> {
    let mut p = 16;
    loop {
        match run(p) {
            Err(Error::InsufficientPrecision(_)) if p < 512 => p *= 2,
            other => return other,
        }
    }
}

fn root(f: &YPoly<Q>, p: i64) -> qolab_core::Result<Parametrization<Q>> {
    expand_root(f, p).map(|r| r.param)
}

fn x(e: usize, i: usize) -> LaurentPoly<Q> {
    LaurentPoly::var(e, i)
}

/// Independent gcd of the maximal minors for e = 2 and the index sequence.
fn d_sequence_2(n: i64, m: &[ExponentVec]) -> Vec<i64> {
    let mut rows = vec![(n, 0), (0, n)];
    let mut out = vec![n];
    for v in m {
        rows.push((v.0[0], v.0[1]));
        let mut g = 0i64;
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let det = rows[i].0 * rows[j].1 - rows[i].1 * rows[j].0;
                g = num_integer::gcd(g, det);
            }
        }
        out.push(g / n);
    }
    out
}

fn criterion_1() -> Outcome {
    let f = poly(F4, 2);
    let qo = is_quasi_ordinary(&f).map_err(|e| e.to_string())?;
    ensure!(qo.is_qo, "f4 not quasi-ordinary");
    let rep = irreducibility_test(&f, Convention::Local).map_err(|e| e.to_string())?;
    ensure!(rep.is_irreducible(), "verdict {:?}", rep.verdict);
    // the root t1^2 + t1^3 t2^2 has characteristic exponents (2,0), (3,2)
    let m = vec![ev![2, 0], ev![3, 2]];
    let d = d_sequence_2(4, &m);
    ensure!(d == vec![4, 2, 1], "oracle d = {:?}", d);
    ensure!(rep.d == d, "d = {:?}", rep.d);
    let e1 = d[0] / d[1];
    let r2 = &(&(&m[0] * e1) + &m[1]) - &m[0];
    ensure!(rep.r == vec![m[0].clone(), r2.clone()], "r = {:?}", rep.r);
    ensure!(rep.r == vec![ev![2, 0], ev![5, 2]], "r = {:?}", rep.r);
    let app2 = poly("y^2 - x1", 2);
    ensure!(
        rep.approx_roots[1] == app2,
        "App_2 = {:?}",
        rep.approx_roots[1]
    );
    let rest = &f - &app2.pow(2);
    ensure!(rest.deg() < 2, "App_2 degree bound fails");
    Ok(format!(
        "d = {:?}, r = {:?}, App_2 = y^2 - x1",
        rep.d, rep.r
    ))
}

fn criterion_2() -> Outcome {
    let mut pairs = 0;
    for (text, e) in CATALOG {
        let f = poly(text, *e);
        let big_f = f.mero_involute();
        let gs = if *e == 1 { TEST_G1 } else { TEST_G2 };
        for gt in gs.iter().copied() {
            let g = poly(gt, *e);
            let res = resultant_y(&f, &g).map_err(|err| format!("{} / {}: {}", text, gt, err))?;
            let lhs = res.diag_leading_exp().map_err(|err| err.to_string())?;
            let big_g = g.mero_involute();
            let order = with_precision(|p| order_via_root(&big_g, &root(&big_f, p)?))
                .map_err(|err| format!("{} / {}: {}", text, gt, err))?;
            ensure!(
                lhs == -&order,
                "{} with {}: Res gives {}, root gives {}",
                text,
                gt,
                lhs,
                order
            );
            pairs += 1;
        }
    }
    Ok(format!(
        "{} polynomials, {} pairs agree",
        CATALOG.len(),
        pairs
    ))
}

fn check_orders(f: &YPoly<Q>, conv: Convention) -> Result<usize, String> {
    let rep = irreducibility_test(f, conv).map_err(|e| e.to_string())?;
    ensure!(rep.is_irreducible(), "{:?}: {:?}", conv, rep.verdict);
    let h = rep.r.len();
    for k in 1..=h {
        let app = &rep.approx_roots[k - 1];
        let o = with_precision(|p| order_via_root(app, &root(&rep.depressed, p)?))
            .map_err(|e| e.to_string())?;
        ensure!(
            o == rep.r[k - 1],
            "k = {}: root order {} but r_k = {}",
            k,
            o,
            rep.r[k - 1]
        );
    }
    Ok(h)
}

fn criterion_3() -> Outcome {
    let mut checks = 0;
    for (text, e) in CATALOG {
        let f = poly(text, *e);
        checks += check_orders(&f.mero_involute(), Convention::Meromorphic)
            .map_err(|m| format!("{}: {}", text, m))?;
        if let Ok(rep) = irreducibility_test(&f, Convention::Local) {
            if rep.is_irreducible() {
                checks += check_orders(&f, Convention::Local)
                    .map_err(|m| format!("{} local: {}", text, m))?;
            }
        }
    }
    Ok(format!("{} approximate root orders match r_k", checks))
}

fn criterion_4() -> Outcome {
    let lambdas = [q(1, 1), q(-1, 1), q(2, 1)];
    for (text, e) in [("y^2 - x^3", 1), (F4, 2)] {
        let big_f = poly(text, e).mero_involute();
        let rep = family_invariance(&big_f, &lambdas, Convention::Meromorphic)
            .map_err(|err| err.to_string())?;
        let h = rep.base.r.len();
        for m in &rep.members {
            ensure!(
                m.report.is_irreducible(),
                "{} - {}: {:?}",
                text,
                m.lambda,
                m.report.verdict
            );
            ensure!(
                m.report.n == rep.base.n && m.report.r == rep.base.r,
                "{} - {}: semigroup changed",
                text,
                m.lambda
            );
            ensure!(
                m.report.approx_roots[..h] == rep.base.approx_roots[..h],
                "{} - {}: approximate roots changed",
                text,
                m.lambda
            );
            ensure!(m.holds(), "{} - {}", text, m.lambda);
        }
    }
    Ok("y^2 - x^3 and f4 stable under F - lambda, lambda in {1, -1, 2}".into())
}

fn criterion_5() -> Outcome {
    let f = poly("y^2 - x^2", 1);
    let product = &poly("y - x", 1) * &poly("y + x", 1);
    ensure!(product == f, "(y - x)(y + x) differs from y^2 - x^2");
    let rep = irreducibility_test(&f, Convention::Local).map_err(|e| e.to_string())?;
    ensure!(
        rep.verdict
            == Verdict::Reducible {
                stage: 1,
                reason: ReducibleReason::GcdStall
            },
        "verdict {:?}",
        rep.verdict
    );
    ensure!(rep.big_d.len() == 1, "D sequence {:?}", rep.big_d);
    Ok(format!("stage 1 gcd stall, D_1 = D_2 = {}", rep.big_d[0]))
}

fn criterion_6() -> Outcome {
    let f = poly("y^2 - x1", 2);
    let EmbeddingVerdict::Coordinate(w) = embedding_decide(&f).map_err(|e| e.to_string())? else {
        return Err("y^2 - x1 not a coordinate".into());
    };
    let image = verify_chain(&w.chain, &f).map_err(|e| e.to_string())?;
    ensure!(image.to_laurent() == x(3, 0), "image {:?}", image);
    for (text, v) in [("y^2 - x1*x2", ev![1, 1]), ("y^2 - x1^3", ev![3, 0])] {
        let verdict = embedding_decide(&poly(text, 2)).map_err(|e| e.to_string())?;
        ensure!(
            verdict
                == EmbeddingVerdict::NotCoordinate(NotCoordinateReason::NotUnitVector(v.clone())),
            "{}: {:?}",
            text,
            verdict
        );
    }
    Ok("y^2 - x1 -> x1; y^2 - x1*x2 and y^2 - x1^3 rejected".into())
}

fn plane(text: &str) -> LaurentPoly<Q> {
    parse_laurent(text, &["X".to_string(), "Y".to_string()]).unwrap()
}

/// `D(w^{-1})` is a monomial times `1 + u` with `u(0) = 0`: the inverted
/// support has a coordinate-wise minimum inside it.
fn monomial_times_unit(d: &LaurentPoly<Q>) -> bool {
    let inv = d.involute();
    let min: Vec<i64> = (0..2)
        .map(|i| inv.exponents().map(|e| e.0[i]).min().unwrap())
        .collect();
    let min = ExponentVec(min);
    !inv.coeff(&min).is_zero_q() && inv.exponents().all(|e| min.le_all(e))
}

trait ZeroQ {
    fn is_zero_q(&self) -> bool;
}

impl ZeroQ for Q {
    fn is_zero_q(&self) -> bool {
        *self == q(0, 1)
    }
}

fn has_qo(
    d: &LaurentPoly<Q>,
) -> Result<(Vec<LaurentPoly<Q>>, LaurentPoly<Q>, Vec<&'static str>), String> {
    match qo_property_decide(d, 8).map_err(|e| e.to_string())? {
        QoPropertyOutcome::HasQo {
            change,
            substitution,
            image,
            path,
            ..
        } => {
            ensure!(
                monomial_times_unit(&image),
                "image {:?} fails the support check",
                image
            );
            ensure!(
                substitution.apply(d).unwrap() == image,
                "substitution does not give the image"
            );
            ensure!(
                change.apply(&image).unwrap() == *d,
                "image does not pull back to D"
            );
            Ok((
                change.components().unwrap(),
                image,
                path.iter().map(|s| s.branch).collect(),
            ))
        }
        other => Err(format!("{:?}", other)),
    }
}

fn criterion_7() -> Outcome {
    let f = poly("y^3 - x1 - x2", 2);
    let qo = is_quasi_ordinary(&f).map_err(|e| e.to_string())?;
    ensure!(!qo.is_qo, "y^3 - x1 - x2 reported quasi-ordinary");
    let disc = discriminant_y(&f).map_err(|e| e.to_string())?;
    // the discriminant is -27 (x1 + x2)^2; its shape is (X + Y)^2
    let shape = plane("(X + Y)^2");
    ensure!(
        disc == shape.scale(&q(-27, 1)).extend_vars(0),
        "discriminant {:?}",
        disc
    );
    let (comps, image, _) = has_qo(&shape)?;
    ensure!(
        comps == vec![plane("X + Y"), plane("Y")],
        "change {:?}",
        comps
    );
    ensure!(image == plane("X^2"), "image {:?}", image);

    let QoPropertyOutcome::HasQo { substitution, .. } = qo_property_decide(&shape, 4).unwrap()
    else {
        unreachable!()
    };
    let lifted = substitution.lift(3, &[0, 1]).map_err(|e| e.to_string())?;
    let g = verify_chain(&lifted, &f).map_err(|e| e.to_string())?;
    ensure!(g == poly("y^3 - x1", 2), "after the change: {:?}", g);
    let EmbeddingVerdict::Coordinate(w) = embedding_decide(&g).map_err(|e| e.to_string())? else {
        return Err("y^3 - w1 not a coordinate".into());
    };
    ensure!(
        verify_chain(&w.chain, &g).unwrap().to_laurent() == x(3, 0),
        "chain does not give w1"
    );
    let full = lifted.then(&w.chain);
    ensure!(
        verify_chain(&full, &f).unwrap().to_laurent() == x(3, 0),
        "composite chain does not give w1"
    );
    Ok("not q.o.; (X + Y)^2 -> w1^2 via (X + Y, Y); y^3 - w1 is a coordinate".into())
}

fn criterion_8() -> Outcome {
    let (_, _, path) = has_qo(&plane("X*Y"))?;
    ensure!(path == vec!["1"], "XY path {:?}", path);
    match qo_property_decide(&plane("X*Y*(X + Y)"), 8).map_err(|e| e.to_string())? {
        QoPropertyOutcome::NoQo {
            branch: "2.2.1",
            r: Some(3),
            ..
        } => {}
        other => return Err(format!("XY(X + Y): {:?}", other)),
    }
    let (comps, image, path) = has_qo(&plane("X^2 - Y^2"))?;
    ensure!(path == vec!["2.2.4", "1"], "X^2 - Y^2 path {:?}", path);
    ensure!(
        comps == vec![plane("X + Y"), plane("X - Y")],
        "X^2 - Y^2 change {:?}",
        comps
    );
    ensure!(image == plane("X*Y"), "X^2 - Y^2 image {:?}", image);
    let (_, image, path) = has_qo(&plane("X + Y"))?;
    ensure!(path == vec!["2.2.5", "1"], "X + Y path {:?}", path);
    ensure!(image == plane("X"), "X + Y image {:?}", image);
    Ok("branches 1, 2.2.1, 2.2.4 -> 1, 2.2.5 -> 1".into())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    // adic roundtrips
    for case in 0..1000 {
        let e = rng.gen_range(1..=3);
        if case % 4 == 3 {
            let g1 = YPoly::y(e);
            let g2 = random_monic(&mut rng, e, 2, false);
            let g4 = &g2.pow(2) + &random_poly(&mut rng, e, 1);
            let deg = rng.gen_range(0..=9);
            let f = random_poly(&mut rng, e, deg);
            let bases = vec![g1, g2, g4];
            let exp = multi_adic_expand(&f, &bases).map_err(|err| err.to_string())?;
            ensure!(
                exp.reconstruct(e) == f,
                "ladder case {} does not reconstruct",
                case
            );
            ensure!(
                exp.support.values().all(|c| c.deg() < 1),
                "ladder case {} coefficient degree",
                case
            );
        } else {
            let (gd, fd) = (rng.gen_range(1..=4), rng.gen_range(0..=9));
            let g = random_monic(&mut rng, e, gd, false);
            let f = random_poly(&mut rng, e, fd);
            let exp = adic_expand(&f, &g).map_err(|err| err.to_string())?;
            ensure!(
                exp.reconstruct(e) == f,
                "case {} does not reconstruct",
                case
            );
            ensure!(
                exp.support
                    .values()
                    .all(|c| c.is_zero() || c.deg() < g.deg()),
                "case {} coefficient degree",
                case
            );
        }
    }
    // App_d degree bound
    for case in 0..200 {
        let e = rng.gen_range(1..=2);
        let n = rng.gen_range(2..=8);
        let divisors: Vec<usize> = (2..=n).filter(|d| n % d == 0).collect();
        let d = divisors[rng.gen_range(0..divisors.len())];
        let f = random_monic(&mut rng, e, n, false);
        let g = approximate_root(&f, d).map_err(|err| err.to_string())?;
        ensure!(
            g.is_monic() && g.deg() == n / d,
            "case {}: App has degree {}",
            case,
            g.deg()
        );
        let rest = &f - &g.pow(d as u32);
        ensure!(
            rest.is_zero() || rest.deg() < n - n / d,
            "case {}: deg(f - App^d) = {} with n = {}, d = {}",
            case,
            rest.deg(),
            n,
            d
        );
    }
    // App commutes with the meromorphic involution
    for case in 0..50 {
        let e = rng.gen_range(1..=2);
        let n = [2usize, 4, 6][rng.gen_range(0..3)];
        let f = random_monic(&mut rng, e, n, true);
        let d = if n == 2 {
            2
        } else {
            [2, n][rng.gen_range(0..2)]
        };
        let a = approximate_root(&f.mero_involute(), d).map_err(|err| err.to_string())?;
        let b = approximate_root(&f, d)
            .map_err(|err| err.to_string())?
            .mero_involute();
        ensure!(
            a == b,
            "case {}: App and the involution do not commute",
            case
        );
    }
    // contact formula against the resultant
    let pairs: &[(&str, &str, usize)] = &[
        ("y^2 - x^3", "y - x", 1),
        ("y^2 - x^3", "y + x^2", 1),
        ("y^2 - x^3", "y^2 - x^3 - x^4", 1),
        ("y^2 - x^3", "y^3 - x^5", 1),
        (F4, "y - x1", 2),
        (F4, "y^2 - x1 - x1^2*x2", 2),
        (F4, "y^2 - x1*x2", 2),
    ];
    let mut qs = Vec::new();
    for (ft, gt, e) in pairs {
        let f = poly(ft, *e);
        let g = poly(gt, *e);
        let cs = irreducibility_test(&f, Convention::Local)
            .map_err(|err| err.to_string())?
            .charseq
            .ok_or("catalog branch reducible")?;
        let c = with_precision(|p| contact(&root(&f, p)?, &root(&g, p)?))
            .map_err(|err| err.to_string())?;
        let o = order_from_contact(&cs, g.deg() as i64, &c)
            .map_err(|err| format!("{} / {}: {}", ft, gt, err))?;
        let res = resultant_y(&f, &g).map_err(|err| err.to_string())?;
        let want = res.initial_data().map_err(|err| err.to_string())?.exp;
        ensure!(
            o.order == want,
            "{} / {}: contact gives {}, resultant {}",
            ft,
            gt,
            o.order,
            want
        );
        qs.push((o.q, cs.h()));
    }
    ensure!(qs.iter().any(|(q, _)| *q == 0), "no pair with q = 0");
    ensure!(qs.iter().any(|(q, h)| q == h), "no pair with q = h");
    Ok(format!(
        "1000 adic, 200 App bounds, 50 involution cases, {} contact pairs",
        pairs.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("quartic pipeline", criterion_1),
        ("resultant vs root oracle", criterion_2),
        ("approximate root orders", criterion_3),
        ("family invariance", criterion_4),
        ("reducible rejection", criterion_5),
        ("coordinate decision", criterion_6),
        ("q.o. property end to end", criterion_7),
        ("Newton polygon branches", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {} {}: {} ({} ms)", i + 1, name, detail, ms),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {}: {} ({} ms)", i + 1, name, why, ms);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
