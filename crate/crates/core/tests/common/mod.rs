#![allow(dead_code)]

use quadlie::constructions::*;
use quadlie::linalg::{frac, Scalar};
use quadlie::sampling;
use quadlie::{LieAlgebra, QuadraticAlgebra};

/// Number of Lyndon words of length `t` over `d` letters, by enumeration.
/// A word is Lyndon when it is strictly smaller than each of its proper rotations.
pub fn lyndon_count(d: usize, t: usize) -> usize {
    let total = d.pow(t as u32);
    let mut count = 0;
    for code in 0..total {
        let mut w = Vec::with_capacity(t);
        let mut c = code;
        for _ in 0..t {
            w.push(c % d);
            c /= d;
        }
        let lyndon = (1..t).all(|r| {
            let rot: Vec<usize> = w[r..].iter().chain(&w[..r]).copied().collect();
            w < rot
        });
        if lyndon {
            count += 1;
        }
    }
    count
}

/// Seeded nonzero rational parameters `p/q`, `|p| <= 5`, `1 <= q <= 4`.
pub fn seeded_lambdas(seed: u64, len: usize) -> Vec<Scalar> {
    let mut rng = sampling::rng(seed);
    (0..len)
        .map(|_| {
            let mut p = 0;
            while p == 0 {
                p = sampling::gen_range(&mut rng, -5, 5);
            }
            let q = sampling::gen_range(&mut rng, 1, 4);
            frac(p, q)
        })
        .collect()
}

/// Every quadratic algebra in the test corpus, by name.
pub fn quadratic_corpus() -> Vec<(String, QuadraticAlgebra)> {
    let mut out: Vec<(String, QuadraticAlgebra)> = Vec::new();
    out.push(("d4".into(), oscillator_d4()));
    for (seed, len) in [(1u64, 1usize), (2, 2), (3, 3)] {
        let l = seeded_lambdas(seed, len);
        out.push((format!("g(lambda) seed {seed}"), generalized_oscillator(&l).unwrap()));
    }
    out.push(("T*0(h1)".into(), tstar_extension(&heisenberg(1).unwrap(), None).unwrap()));
    out.push(("T*0(sl2)".into(), tstar_extension(&sl2(), None).unwrap()));
    out.push((
        "T*0(n23)".into(),
        tstar_extension(&free_nilpotent(2, 3).unwrap(), None).unwrap(),
    ));
    out.push(("n23q".into(), n23_quadratic()));
    out.push(("n32q".into(), n32_quadratic()));
    out.push(("n23s".into(), n23s()));
    out.push(("n32s".into(), n32s()));
    for m in 1..=3 {
        out.push((format!("a_sl2({m})"), a_sl2(m).unwrap()));
    }
    for n in 1..=3 {
        out.push((format!("sl2 x t^{n}"), tensor_truncated(&sl2_killing(), n).unwrap()));
    }
    out
}

/// Non-quadratic algebras used alongside the quadratic corpus.
pub fn other_corpus() -> Vec<(String, LieAlgebra)> {
    vec![
        ("h1".into(), heisenberg(1).unwrap()),
        ("h2".into(), heisenberg(2).unwrap()),
        ("split_h3".into(), split_h3_extension()),
        ("n22".into(), free_nilpotent(2, 2).unwrap()),
        ("n24".into(), free_nilpotent(2, 4).unwrap()),
        ("n33".into(), free_nilpotent(3, 3).unwrap()),
    ]
}
