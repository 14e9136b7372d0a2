use num_traits::{One, Zero};

use super::extensions::{double_extension, double_extension_by_derivation, linear_lie_algebra, Representation};
use super::free::{n23_quadratic, n32_quadratic};
use crate::error::{Error, Result};
use crate::forms::{BilinearForm, QuadraticAlgebra};
use crate::lie::{LieAlgebra, LieAlgebraBuilder};
use crate::linalg::{int, Matrix, Scalar, Subspace};

/// `h_n`: basis `e1..e2n, z` with `[e_i, e_{n+i}] = z`.
pub fn heisenberg(n: usize) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("heisenberg(n) needs n >= 1".into()));
    }
    let mut labels: Vec<String> = (1..=2 * n).map(|i| format!("e{i}")).collect();
    labels.push("z".into());
    let mut b = LieAlgebraBuilder::new(labels);
    for i in 0..n {
        b.add_int(i, n + i, 2 * n, 1);
    }
    Ok(b.build().with_provenance(format!("heisenberg({n})")))
}

/// Abelian algebra with the identity Gram matrix.
pub fn abelian_quadratic(n: usize) -> QuadraticAlgebra {
    QuadraticAlgebra::new(LieAlgebra::abelian(n), BilinearForm::identity(n)).expect("identity form")
}

/// `sl_2` on `{e, f, h}` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2() -> LieAlgebra {
    let mut b = LieAlgebraBuilder::new(["e", "f", "h"]);
    b.add_int(0, 1, 2, 1).add_int(2, 0, 0, 2).add_int(2, 1, 1, -2);
    b.build()
        .with_levi_hint(Some(Subspace::full(3)))
        .with_provenance("sl2")
}

/// `sl_2` with its Killing form.
pub fn sl2_killing() -> QuadraticAlgebra {
    let l = sl2();
    let k = l.killing_form();
    QuadraticAlgebra::new(l, k).expect("Killing form of sl2 is nondegenerate")
}

/// Oscillator algebra on `x1, x2, x3, z`: `[x1,x2] = x3`, `[x1,x3] = -x2`,
/// `[x2,x3] = z`, with `ψ(x1,z) = ψ(x2,x2) = ψ(x3,x3) = 1`.
pub fn oscillator_d4() -> QuadraticAlgebra {
    let mut b = LieAlgebraBuilder::new(["x1", "x2", "x3", "z"]);
    b.add_int(0, 1, 2, 1).add_int(0, 2, 1, -1).add_int(1, 2, 3, 1);
    let psi = Matrix::from_i64(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 0]]);
    QuadraticAlgebra::new(
        b.build().with_provenance("d4"),
        BilinearForm::new(psi).expect("symmetric"),
    )
    .expect("d4 is quadratic")
}

/// Skew map `δ(e_{2i-1}) = λ_i e_{2i}`, `δ(e_{2i}) = -λ_i e_{2i-1}`.
pub fn block_rotation(lambdas: &[Scalar]) -> Matrix {
    let n = 2 * lambdas.len();
    let mut m = Matrix::zeros(n, n);
    for (i, l) in lambdas.iter().enumerate() {
        m = m.add(&Matrix::from_fn(n, n, |r, c| {
            if r == 2 * i + 1 && c == 2 * i {
                l.clone()
            } else if r == 2 * i && c == 2 * i + 1 {
                -l.clone()
            } else {
                Scalar::zero()
            }
        }));
    }
    m
}

/// Double extension of `(v_{2m}, identity)` by the block rotation with
/// parameters `λ`; basis `d, e1..e2m, d_dual`.
pub fn generalized_oscillator(lambdas: &[Scalar]) -> Result<QuadraticAlgebra> {
    if lambdas.is_empty() {
        return Err(Error::InvalidParameter("need at least one λ".into()));
    }
    if lambdas.iter().any(Zero::is_zero) {
        return Err(Error::InvalidParameter("every λ must be nonzero".into()));
    }
    let n = 2 * lambdas.len();
    let a = QuadraticAlgebra::new(
        LieAlgebraBuilder::numbered("e", n).build(),
        BilinearForm::identity(n),
    )?;
    let q = double_extension_by_derivation(&a, &block_rotation(lambdas))?;
    Ok(q.map_algebra(|l| l.with_provenance("generalized_oscillator")))
}

/// `a ⋊ <d>` on `x, y, z, d` with `[x,y] = z`, `[d,x] = x`, `[d,y] = y`, `[d,z] = 2z`.
pub fn split_h3_extension() -> LieAlgebra {
    let mut b = LieAlgebraBuilder::new(["x", "y", "z", "d"]);
    b.add_int(0, 1, 2, 1)
        .add_int(3, 0, 0, 1)
        .add_int(3, 1, 1, 1)
        .add_int(3, 2, 2, 2);
    b.build().with_provenance("split_h3")
}

/// Irreducible `sl_2`-module `V(n)` on `v0..vn`: `h v_k = (n-2k) v_k`,
/// `f v_k = v_{k+1}`, `e v_k = k(n-k+1) v_{k-1}`.
pub fn sl2_module(n: usize) -> Representation {
    let d = n + 1;
    let ni = n as i64;
    let e = Matrix::from_fn(d, d, |r, c| {
        if c >= 1 && r == c - 1 {
            int(c as i64 * (ni - c as i64 + 1))
        } else {
            Scalar::zero()
        }
    });
    let f = Matrix::from_fn(d, d, |r, c| if r == c + 1 { Scalar::one() } else { Scalar::zero() });
    let h = Matrix::from_fn(d, d, |r, c| if r == c { int(ni - 2 * r as i64) } else { Scalar::zero() });
    Representation::new(sl2(), d, vec![e, f, h]).expect("V(n) is a representation")
}

/// The `sl_2`-invariant symmetric form on `V(n)`, normalized so that
/// `φ(v_0, v_n) = 1`; exists exactly for even `n`.
pub fn sl2_module_form(n: usize) -> Result<BilinearForm> {
    let forms = sl2_module(n).invariant_forms();
    match forms.as_slice() {
        [f] => {
            let corner = f.at(0, n).clone();
            Ok(f.scale(&(Scalar::one() / corner)))
        }
        [] => Err(Error::InvalidParameter(format!(
            "V({n}) has no invariant symmetric form"
        ))),
        _ => Err(Error::InvalidParameter(format!(
            "V({n}) has a {}-dimensional space of invariant forms",
            forms.len()
        ))),
    }
}

/// `a(sl_2) = sl_2 ⊕ V(2m) ⊕ sl_2*`, of dimension `2m + 7`.
pub fn a_sl2(m: usize) -> Result<QuadraticAlgebra> {
    if m == 0 {
        return Err(Error::InvalidParameter("a_sl2(m) needs m >= 1".into()));
    }
    let n = 2 * m;
    let form = sl2_module_form(n)?;
    let labels: Vec<String> = (0..=n).map(|k| format!("v{k}")).collect();
    let v = QuadraticAlgebra::new(LieAlgebraBuilder::new(labels).build(), form)?;
    let q = double_extension(&v, &sl2(), &sl2_module(n))?;
    Ok(q.map_algebra(|l| l.with_provenance(format!("a_sl2({m})"))))
}

/// `(s ⊗ K[x]/<x^n>, φ ⊗ q)` with `q(x^i, x^j) = 1` iff `i + j = n - 1`.
/// Basis `e_i ⊗ x^j` sits at index `j * dim s + i`.
pub fn tensor_truncated(s: &QuadraticAlgebra, n: usize) -> Result<QuadraticAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("truncation degree must be positive".into()));
    }
    let ls = s.algebra();
    let d = ls.dim();
    let labels: Vec<String> = (0..n)
        .flat_map(|j| ls.labels().iter().map(move |l| format!("{l}_t{j}")))
        .collect();
    let mut b = LieAlgebraBuilder::new(labels);
    for j in 0..n {
        for l in 0..n - j {
            for i in 0..d {
                for k in 0..d {
                    if (j, i) >= (l, k) {
                        continue;
                    }
                    for (m, c) in ls.bracket_basis(i, k) {
                        b.add(j * d + i, l * d + k, (j + l) * d + m, c.clone());
                    }
                }
            }
        }
    }
    let gram = Matrix::from_fn(n * d, n * d, |r, c| {
        let (jr, ir) = (r / d, r % d);
        let (jc, ic) = (c / d, c % d);
        if jr + jc + 1 == n {
            s.form().gram()[(ir, ic)].clone()
        } else {
            Scalar::zero()
        }
    });
    let hint = ls.levi_hint().map(|h| {
        Subspace::span(
            n * d,
            h.basis_vectors().iter().map(|v| {
                let mut w = v.clone();
                w.resize(n * d, Scalar::zero());
                w
            }),
        )
    });
    let out = b.build().with_levi_hint(hint);
    let out = match ls.provenance() {
        Some(p) => out.with_provenance(format!("{p}_tensor_t{n}")),
        None => out,
    };
    QuadraticAlgebra::new(out, BilinearForm::new(gram)?)
}

/// `D(m1, m2, m3)` acting as `[[m1, m2], [m3, -m1]]` on `(a1, a2)` and on `(a4, a5)`.
pub fn n23_levi_block(m: [i64; 3]) -> Matrix {
    let mut g = Matrix::zeros(5, 5);
    for base in [0, 3] {
        let block = [[m[0], m[1]], [m[2], -m[0]]];
        g = g.add(&Matrix::from_fn(5, 5, |r, c| {
            if (base..base + 2).contains(&r) && (base..base + 2).contains(&c) {
                int(block[r - base][c - base])
            } else {
                Scalar::zero()
            }
        }));
    }
    g
}

/// `d(v1, v2, v3)`: `a1 ↦ v2 a3 + v3 a4`, `a2 ↦ v1 a3 + v3 a5`, `a3 ↦ v1 a4 - v2 a5`.
pub fn n23_inner_block(v: [i64; 3]) -> Matrix {
    let rows: [[i64; 5]; 5] = [
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [v[1], v[0], 0, 0, 0],
        [v[2], 0, v[0], 0, 0],
        [0, v[2], -v[1], 0, 0],
    ];
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64(&refs)
}

/// `D(m1..m8)` on `n_{3,2}`: traceless block on `(a1, a2, a3)` and the
/// induced block on `(a4, a5, a6)`.
pub fn n32_levi_block(m: [i64; 8]) -> Matrix {
    let [m1, m2, m3, m4, m5, m6, m7, m8] = m;
    let rows: [[i64; 6]; 6] = [
        [m1, m2, m3, 0, 0, 0],
        [m4, m5, m6, 0, 0, 0],
        [m7, m8, -m1 - m5, 0, 0, 0],
        [0, 0, 0, m1 + m5, m6, -m3],
        [0, 0, 0, m8, -m5, m2],
        [0, 0, 0, -m7, m4, -m1],
    ];
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64(&refs)
}

/// `d(v1, v2, v3)`: `a1 ↦ v1 a4 + v3 a5`, `a2 ↦ v2 a4 + v3 a6`, `a3 ↦ v2 a5 - v1 a6`.
pub fn n32_inner_block(v: [i64; 3]) -> Matrix {
    let rows: [[i64; 6]; 6] = [
        [0; 6],
        [0; 6],
        [0; 6],
        [v[0], v[1], 0, 0, 0, 0],
        [v[2], 0, v[1], 0, 0, 0],
        [0, v[2], -v[0], 0, 0, 0],
    ];
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64(&refs)
}

fn unit<const N: usize>(i: usize) -> [i64; N] {
    let mut a = [0; N];
    a[i] = 1;
    a
}

pub fn n23_levi_generators() -> Vec<Matrix> {
    (0..3).map(|i| n23_levi_block(unit(i))).collect()
}

pub fn n23_inner_generators() -> Vec<Matrix> {
    (0..3).map(|i| n23_inner_block(unit(i))).collect()
}

pub fn n32_levi_generators() -> Vec<Matrix> {
    (0..8).map(|i| n32_levi_block(unit(i))).collect()
}

pub fn n32_inner_generators() -> Vec<Matrix> {
    (0..3).map(|i| n32_inner_block(unit(i))).collect()
}

/// `n_{2,3}(s) = sl_2 ⊕ n_{2,3} ⊕ sl_2*` with `ρ(h) = D(1,0,0)`,
/// `ρ(e) = D(0,1,0)`, `ρ(f) = D(0,0,1)`.
pub fn n23s() -> QuadraticAlgebra {
    let a = n23_quadratic();
    let rho = Representation::new(
        sl2(),
        5,
        vec![n23_levi_block([0, 1, 0]), n23_levi_block([0, 0, 1]), n23_levi_block([1, 0, 0])],
    )
    .expect("D-block is an sl2 representation");
    double_extension(&a, &sl2(), &rho)
        .expect("n23(s) double extension")
        .map_algebra(|l| l.with_provenance("n23s"))
}

/// The Lie algebra spanned by the `n_{3,2}` Levi block generators.
pub fn n32_levi_algebra() -> LieAlgebra {
    let labels = (1..=8).map(|i| format!("s{i}")).collect();
    linear_lie_algebra(labels, &n32_levi_generators()).expect("D-block closes")
}

/// `n_{3,2}(s) = s ⊕ n_{3,2} ⊕ s*` for the 8-dimensional Levi block.
pub fn n32s() -> QuadraticAlgebra {
    let a = n32_quadratic();
    let g = n32_levi_algebra();
    let rho = Representation::new(g.clone(), 6, n32_levi_generators()).expect("linear algebra acts");
    double_extension(&a, &g, &rho)
        .expect("n32(s) double extension")
        .map_algebra(|l| l.with_provenance("n32s"))
}
