//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use quadlie::analysis::{
    chain_dot, classify_local_quadratic, dot_node_count, is_local, named_ideals, Classification,
};
use quadlie::constructions::*;
use quadlie::derivations::{inner_derivations, is_derivation, is_skew, skew_derivations};
use quadlie::forms::{
    find_nondegenerate_proper_ideal, find_quadratic_structure, omega_dual, validate_quadratic,
    CertificateReason, Metrizability,
};
use quadlie::linalg::pencil::ZeroProof;
use quadlie::linalg::Subspace;
use quadlie::sampling;
use quadlie::{LieAlgebra, QuadraticAlgebra, TypePair};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quadlie"))
        .args(args)
        .output()
        .expect("run quadlie");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_1() -> Outcome {
    let n23 = n23_quadratic();
    let skew = skew_derivations(n23.algebra(), n23.form()).map_err(|e| e.to_string())?;
    ensure(skew.dim() == 6, format!("dim der_phi(n23) = {}", skew.dim()))?;
    let d4 = oscillator_d4();
    let skew4 = skew_derivations(d4.algebra(), d4.form()).map_err(|e| e.to_string())?;
    let inner4 = inner_derivations(d4.algebra());
    ensure(inner4.dim() == 3, format!("dim inner(d4) = {}", inner4.dim()))?;
    ensure(skew4.as_subspace() == inner4.as_subspace(), "der_psi(d4) != inner(d4)")?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let file = dir.path().join("n23.alg");
    let file = file.to_str().unwrap();
    let (code, _) = cli(&["build", "n23q", "-o", file]);
    ensure(code == 0, "cli build n23q failed")?;
    let (code, out) = cli(&["der", file, "--skew"]);
    ensure(code == 0 && out.contains("dim 6"), format!("cli der --skew printed {out:?}"))?;
    Ok("der_phi(n23) = 6 (library and CLI), der_psi(d4) = inner(d4) of dim 3".into())
}

fn criterion_2() -> Outcome {
    let q = n32_quadratic();
    let (l, phi) = (q.algebra(), q.form());
    let levi = n32_levi_generators();
    let inner_display = n32_inner_generators();
    for (i, m) in levi.iter().chain(&inner_display).enumerate() {
        ensure(is_derivation(l, m).unwrap(), format!("generator {i} is not a derivation"))?;
        ensure(is_skew(phi, m).unwrap(), format!("generator {i} is not skew"))?;
    }
    let solver = skew_derivations(l, phi).map_err(|e| e.to_string())?;
    let space = solver.as_subspace();
    let inner = inner_derivations(l);
    ensure(inner.dim() == 3, format!("dim inner(n32) = {}", inner.dim()))?;
    ensure(space.contains(&inner.as_subspace()).unwrap(), "solver space misses inner")?;
    let d_span = Subspace::span(36, levi.iter().map(|m| m.flat().to_vec()));
    ensure(d_span.dim() == 8, "D-block generators are dependent")?;
    ensure(space.contains(&d_span).unwrap(), "solver space misses the D-block")?;
    let display = d_span.sum(&Subspace::span(36, inner_display.iter().map(|m| m.flat().to_vec()))).unwrap();
    ensure(display.dim() == 11, format!("display span has dim {}", display.dim()))?;
    ensure(display == inner.as_subspace().sum(&d_span).unwrap(), "display d-block differs from inner")?;
    let s = n32_levi_algebra();
    ensure(s.killing_form().is_nondegenerate(), "D-block Killing form degenerate")?;
    ensure(s.is_simple(), "D-block algebra not simple")?;
    println!(
        "  note: solver dim der_phi(n32) = {}; display parameters 8 + 3 = 11",
        solver.dim()
    );
    ensure(solver.dim() == display.dim(), "solver space strictly larger than display")?;
    Ok(format!(
        "11 generators validate; solver dim {} = display span; contains inner (3) and simple D-span (8)",
        solver.dim()
    ))
}

fn criterion_3() -> Outcome {
    let mut details = Vec::new();
    for (name, q, dim, nodes) in [("n23(s)", n23s(), 11, 6), ("n32(s)", n32s(), 22, 5)] {
        let l = q.algebra();
        ensure(l.dim() == dim, format!("{name} dim {}", l.dim()))?;
        ensure(l.is_perfect(), format!("{name} not perfect"))?;
        ensure(validate_quadratic(l, q.form()).is_empty(), format!("{name} not quadratic"))?;
        ensure(is_local(l), format!("{name} not local"))?;
        ensure(l.center().is_zero(), format!("{name} has nonzero centre"))?;
        let c = classify_local_quadratic(&q).map_err(|e| e.to_string())?;
        ensure(c == Classification::PerfectMixed, format!("{name} classified {}", c.letter()))?;
        let dot = chain_dot(l, Some(q.form()));
        let count = dot_node_count(&dot);
        ensure(count == nodes, format!("{name} DOT has {count} nodes"))?;
        let ideals = named_ideals(l, Some(q.form()), &[]);
        ensure(quadlie::analysis::is_chain(&ideals), format!("{name} named ideals not a chain"))?;
        let dims: Vec<usize> = ideals.iter().map(|i| i.subspace.dim()).collect();
        details.push(format!("{name}: chain dims {dims:?}"));
    }
    Ok(details.join("; "))
}

fn criterion_4() -> Outcome {
    for m in 1..=3 {
        let q = a_sl2(m).map_err(|e| e.to_string())?;
        let l = q.algebra();
        let n = l.dim();
        ensure(n == 2 * m + 7, format!("a_sl2({m}) dim {n}"))?;
        ensure(validate_quadratic(l, q.form()).is_empty(), format!("a_sl2({m}) not quadratic"))?;
        ensure(is_local(l), format!("a_sl2({m}) not local"))?;
        let chain = [
            Subspace::zero(n),
            Subspace::coordinate(n, n - 3..n),
            Subspace::coordinate(n, 3..n),
            Subspace::full(n),
        ];
        for (k, i) in chain.iter().enumerate() {
            ensure(l.is_ideal(i).unwrap(), format!("a_sl2({m}) chain term {k} not an ideal"))?;
            let dual = omega_dual(&q, i).map_err(|e| e.to_string())?;
            ensure(dual == chain[3 - k], format!("a_sl2({m}) Ω does not reverse term {k}"))?;
        }
        let nodes = dot_node_count(&chain_dot(l, Some(q.form())));
        ensure(nodes == 4, format!("a_sl2({m}) named ideals give {nodes} nodes"))?;
    }
    Ok("m = 1, 2, 3: dims 9, 11, 13; quadratic, local, 4-chain reversed by Ω".into())
}

fn criterion_5() -> Outcome {
    let cases: Vec<(&str, LieAlgebra)> = vec![
        ("h1", heisenberg(1).unwrap()),
        ("h2", heisenberg(2).unwrap()),
        ("split h3", split_h3_extension()),
    ];
    let mut details = Vec::new();
    for (name, l) in cases {
        match find_quadratic_structure(&l, 0) {
            Metrizability::NotQuadratic(c) => {
                let exact = matches!(
                    c.reason,
                    CertificateReason::NoInvariantForms
                        | CertificateReason::PencilIdenticallyZero(ZeroProof::Symbolic)
                        | CertificateReason::PencilIdenticallyZero(ZeroProof::EmptyPencil)
                );
                ensure(exact, format!("{name}: certificate is not a pencil proof ({c})"))?;
                details.push(format!("{name}: {c}"));
            }
            other => return Err(format!("{name}: expected certificate, got {other:?}")),
        }
    }
    Ok(details.join("; "))
}

fn criterion_6() -> Outcome {
    let mut details = Vec::new();
    for (d, t) in [(2usize, 2usize), (2, 3), (3, 2), (2, 4), (3, 3)] {
        let l = free_nilpotent(d, t).map_err(|e| e.to_string())?;
        let w = witt_dim(d as u64, t as u64) as usize;
        let oracle = common::lyndon_count(d, t);
        ensure(w == oracle, format!("witt_dim({d},{t}) = {w} but Lyndon count {oracle}"))?;
        ensure(l.center().dim() == w, format!("centre of n({d},{t}) has dim {}", l.center().dim()))?;
        let tp = l.type_pair();
        let identity = l.dim() == tp.r + tp.s;
        let expected = matches!((d, t), (2, 3) | (3, 2));
        ensure(identity == expected, format!("dimension identity on n({d},{t}) = {identity}"))?;
        let found = find_quadratic_structure(&l, 0);
        ensure(
            found.quadratic().is_some() == expected,
            format!("metrizability of n({d},{t}): {found:?}"),
        )?;
        details.push(format!("n({d},{t}) dim {} (r,s)=({},{})", l.dim(), tp.r, tp.s));
    }
    Ok(details.join(", "))
}

fn dim_checks(name: &str, q: &QuadraticAlgebra, seed: u64) -> Result<(), String> {
    let l = q.algebra();
    let n = l.dim();
    let derived = l.derived_algebra();
    ensure(q.perp(&derived) == l.center(), format!("{name}: (g^2)^perp != Z"))?;
    let series = l.series();
    let steps = series.lower_central.len().max(series.upper_central.len()) + 1;
    for t in 0..steps {
        ensure(
            &q.perp(series.lower(t + 1)) == series.upper(t),
            format!("{name}: (g^{})^perp != Z_{t}", t + 1),
        )?;
    }
    let mut rng = sampling::rng(seed);
    for k in 0..100 {
        let u = sampling::random_subspace(&mut rng, n);
        let p = q.perp(&u);
        ensure(u.dim() + p.dim() == n, format!("{name}: dim U + dim U^perp on sample {k}"))?;
        let commutes = l.product_subspace(&p, &u).unwrap().is_zero();
        ensure(
            commutes == l.is_ideal(&u).unwrap(),
            format!("{name}: ideal criterion fails on random subspace {k}"),
        )?;
    }
    let ideals: Vec<Subspace> = (0..100).map(|_| sampling::random_ideal(l, &mut rng)).collect();
    for (k, i) in ideals.iter().enumerate() {
        let p = omega_dual(q, i).map_err(|e| e.to_string())?;
        ensure(l.is_ideal(&p).unwrap(), format!("{name}: Ω(I) not an ideal ({k})"))?;
        ensure(l.product_subspace(&p, i).unwrap().is_zero(), format!("{name}: [I^perp, I] != 0 ({k})"))?;
        ensure(&q.perp(&p) == i, format!("{name}: Ω not involutive ({k})"))?;
        let j = ideals[(k * 7 + 3) % ideals.len()].sum(i).unwrap();
        ensure(
            p.contains(&q.perp(&j)).unwrap(),
            format!("{name}: Ω not order-reversing ({k})"),
        )?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let corpus = common::quadratic_corpus();
    for (k, (name, q)) in corpus.iter().enumerate() {
        dim_checks(name, q, 1000 + k as u64)?;
    }
    Ok(format!("{} quadratic corpus members, zero failures", corpus.len()))
}

fn criterion_8() -> Outcome {
    let d4 = oscillator_d4();
    let skew = skew_derivations(d4.algebra(), d4.form()).map_err(|e| e.to_string())?;
    ensure(skew.dim() == 3, "der_psi(d4) is not 3-dimensional")?;
    for (k, delta) in skew.basis().iter().enumerate() {
        let ext = double_extension_by_derivation(&d4, delta).map_err(|e| e.to_string())?;
        let w = find_nondegenerate_proper_ideal(&ext)
            .ok_or_else(|| format!("no witness for generator {k}"))?;
        ensure(
            ext.algebra().is_ideal(&w).unwrap() && ext.form().is_nondegenerate_on(&w),
            format!("invalid witness for generator {k}"),
        )?;
    }
    let q = n23s();
    ensure(find_nondegenerate_proper_ideal(&q).is_none(), "witness found in n23(s)")?;
    ensure(is_local(q.algebra()), "n23(s) not local")?;
    Ok("3 extensions of d4 decomposable; n23(s) no witness and local".into())
}

fn criterion_9() -> Outcome {
    let g = generalized_oscillator(&[quadlie::linalg::int(1)]).map_err(|e| e.to_string())?;
    let d4 = oscillator_d4();
    // relabeling d -> x1, e1 -> x2, e2 -> x3, d_dual -> z
    ensure(g.algebra().labels() == ["d", "e1", "e2", "d_dual"], "unexpected labels")?;
    ensure(
        g.algebra().clone().with_labels(d4.algebra().labels().to_vec()).with_provenance("d4")
            == *d4.algebra(),
        "table differs from d4",
    )?;
    ensure(g.form() == d4.form(), "form differs from d4")?;
    for len in 1..=3 {
        for seed in 0..3u64 {
            let lambdas = common::seeded_lambdas(100 * len as u64 + seed, len);
            let q = generalized_oscillator(&lambdas).map_err(|e| e.to_string())?;
            let l = q.algebra();
            let n = l.dim();
            let tag = format!("λ = {lambdas:?}");
            ensure(validate_quadratic(l, q.form()).is_empty(), format!("{tag}: not quadratic"))?;
            ensure(is_local(l), format!("{tag}: not local"))?;
            let c = classify_local_quadratic(&q).map_err(|e| e.to_string())?;
            ensure(c == Classification::SolvableDoubleExtension, format!("{tag}: class {}", c.letter()))?;
            let sq = l.derived_algebra();
            ensure(sq == Subspace::coordinate(n, 1..n), format!("{tag}: g^2 shape"))?;
            let sq2 = l.product_subspace(&sq, &sq).unwrap();
            ensure(sq2 == Subspace::coordinate(n, [n - 1]), format!("{tag}: [g^2, g^2] shape"))?;
        }
    }
    Ok("generalized_oscillator([1]) = d4 after relabeling; 9 seeded λ-lists of lengths 1..3 are type d".into())
}

fn criterion_10() -> Outcome {
    let mut pairs: BTreeSet<(String, TypePair, bool)> = BTreeSet::new();
    for (name, q) in common::quadratic_corpus() {
        let l = q.algebra();
        let reduced = l.derived_algebra().contains(&l.center()).unwrap();
        pairs.insert((name, l.type_pair(), reduced));
    }
    for (name, l) in common::other_corpus() {
        let reduced = l.derived_algebra().contains(&l.center()).unwrap();
        pairs.insert((format!("{name} (not quadratic)"), l.type_pair(), reduced));
    }
    let mut listing = Vec::new();
    for (name, tp, reduced) in &pairs {
        listing.push(format!("{name}=({},{}){}", tp.r, tp.s, if *reduced { "r" } else { "" }));
        let quadratic = !name.ends_with("(not quadratic)");
        if quadratic && *reduced {
            let excluded = matches!((tp.r, tp.s), (5, 0) | (7, 0)) || (tp.r == 4 && tp.s <= 4);
            ensure(!excluded, format!("{name} realizes excluded type ({},{})", tp.r, tp.s))?;
        }
    }
    println!("  type pairs (r = reduced): {}", listing.join(", "));
    Ok("consistency check only: no reduced quadratic member has an excluded type".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("skew-derivation dimensions", criterion_1),
        ("n32 derivation display cross-check", criterion_2),
        ("double-extension flagships", criterion_3),
        ("a(sl2) family", criterion_4),
        ("non-quadraticity certificates", criterion_5),
        ("free-nilpotent gate", criterion_6),
        ("pattern suite", criterion_7),
        ("decomposability", criterion_8),
        ("oscillator family", criterion_9),
        ("type-pair consistency", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.1}s] {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL [{secs:.1}s] {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
