//! Free nilpotent Lie algebras on a Hall basis.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{invariant_forms, BilinearForm, QuadraticAlgebra};
use crate::lie::{LieAlgebra, LieAlgebraBuilder};
use crate::linalg::{Echelon, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
enum HallWord {
    Letter(usize),
    Bracket(usize, usize),
}

/// Basic commutators of weight `<= t` on `d` letters, ordered by weight and
/// then by generation order. `[u, v]` is basic when `u > v` and, if
/// `u = [w, x]`, also `x <= v`.
struct HallBasis {
    words: Vec<HallWord>,
    weights: Vec<usize>,
}

impl HallBasis {
    fn new(d: usize, t: usize) -> Self {
        let mut words: Vec<HallWord> = (0..d).map(HallWord::Letter).collect();
        let mut weights = vec![1; d];
        for w in 2..=t {
            let len = words.len();
            for u in 0..len {
                for v in 0..u {
                    if weights[u] + weights[v] != w {
                        continue;
                    }
                    let ok = match words[u] {
                        HallWord::Letter(_) => true,
                        HallWord::Bracket(_, x) => x <= v,
                    };
                    if ok {
                        words.push(HallWord::Bracket(u, v));
                        weights.push(w);
                    }
                }
            }
        }
        HallBasis { words, weights }
    }

    fn render(&self, i: usize) -> String {
        match self.words[i] {
            HallWord::Letter(k) => format!("a{}", k + 1),
            HallWord::Bracket(u, v) => format!("[{},{}]", self.render(u), self.render(v)),
        }
    }
}

/// Homogeneous element of the free associative algebra, dense over words of
/// a fixed length (word index in base `d`).
#[derive(Clone)]
struct AssocPoly {
    weight: usize,
    coeffs: Vec<Scalar>,
}

impl AssocPoly {
    fn letter(d: usize, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); d];
        coeffs[k] = Scalar::one();
        AssocPoly { weight: 1, coeffs }
    }

    fn commutator(&self, other: &AssocPoly, d: usize) -> AssocPoly {
        let size = d.pow((self.weight + other.weight) as u32);
        let mut coeffs = vec![Scalar::zero(); size];
        let (sa, sb) = (other.coeffs.len(), self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                coeffs[i * sa + j] += &p;
                coeffs[j * sb + i] -= &p;
            }
        }
        AssocPoly {
            weight: self.weight + other.weight,
            coeffs,
        }
    }
}

/// Free nilpotent Lie algebra `n_{d,t}` on the Hall basis, labelled `a1..aN`.
pub fn free_nilpotent(d: usize, t: usize) -> Result<LieAlgebra> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 generators, got {d}")));
    }
    if t == 0 {
        return Err(Error::InvalidParameter("nilpotency class must be positive".into()));
    }
    let hall = HallBasis::new(d, t);
    let n = hall.words.len();
    let mut polys: Vec<AssocPoly> = Vec::with_capacity(n);
    for w in &hall.words {
        let p = match *w {
            HallWord::Letter(k) => AssocPoly::letter(d, k),
            HallWord::Bracket(u, v) => polys[u].commutator(&polys[v], d),
        };
        polys.push(p);
    }
    // per weight: matrix whose columns are the Hall polynomials of that weight
    let mut layers: Vec<(Vec<usize>, Matrix)> = Vec::new();
    for w in 1..=t {
        let idx: Vec<usize> = (0..n).filter(|&i| hall.weights[i] == w).collect();
        let size = d.pow(w as u32);
        let m = Matrix::from_fn(size, idx.len(), |r, c| polys[idx[c]].coeffs[r].clone());
        layers.push((idx, m));
    }
    let mut b = LieAlgebraBuilder::numbered("a", n);
    for i in 0..n {
        for j in 0..i {
            let w = hall.weights[i] + hall.weights[j];
            if w > t {
                continue;
            }
            let target = polys[i].commutator(&polys[j], d);
            let (idx, m) = &layers[w - 1];
            let coords = m.solve(&target.coeffs).expect("Hall polynomials span the layer");
            for (c, &k) in coords.iter().zip(idx) {
                if !c.is_zero() {
                    b.add(i, j, k, c.clone());
                }
            }
        }
    }
    Ok(b.build().with_provenance(format!("free_nilpotent({d},{t})")))
}

/// Hall words of `n_{d,t}` in basis order, e.g. `[[a2,a1],a1]`.
pub fn hall_words(d: usize, t: usize) -> Vec<String> {
    let hall = HallBasis::new(d, t);
    (0..hall.words.len()).map(|i| hall.render(i)).collect()
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Witt's formula `(1/t) sum_{a | t} μ(a) d^{t/a}` for the weight-`t` layer.
pub fn witt_dim(d: u64, t: u64) -> u64 {
    assert!(t >= 1);
    let mut sum: i128 = 0;
    for a in 1..=t {
        if t.is_multiple_of(a) {
            sum += mobius(a) as i128 * (d as i128).pow((t / a) as u32);
        }
    }
    (sum / t as i128) as u64
}

/// The invariant form supported on `{(i,j) : i + j = n - 1}` (0-based),
/// normalized so that `φ(e_0, e_{n-1}) = 1`.
pub(crate) fn antidiagonal_invariant_form(l: &LieAlgebra) -> Result<BilinearForm> {
    let n = l.dim();
    let forms = invariant_forms(l);
    // combinations of the basis forms vanishing off the antidiagonal
    let mut e = Echelon::new(forms.len());
    for r in 0..n {
        for c in r..n {
            if r + c != n - 1 {
                let row: Vec<Scalar> = forms.iter().map(|f| f.at(r, c).clone()).collect();
                e.insert_dense(&row);
            }
        }
    }
    let sols = Subspace::span(forms.len(), e.null_space());
    if sols.dim() != 1 {
        return Err(Error::NotQuadratic(format!(
            "expected a unique antidiagonal invariant form, found a {}-dimensional space",
            sols.dim()
        )));
    }
    let coeffs = &sols.basis_vectors()[0];
    let mut g = Matrix::zeros(n, n);
    for (c, f) in coeffs.iter().zip(&forms) {
        g = g.add(&f.gram().scale(c));
    }
    let corner = g[(0, n - 1)].clone();
    if corner.is_zero() {
        return Err(Error::NotQuadratic("antidiagonal form vanishes at the corner".into()));
    }
    BilinearForm::new(g.scale(&(Scalar::one() / corner)))
}

/// `n_{2,3}` with its antidiagonal invariant form.
pub fn n23_quadratic() -> QuadraticAlgebra {
    let l = free_nilpotent(2, 3).expect("valid parameters").with_provenance("n23");
    let phi = antidiagonal_invariant_form(&l).expect("n23 carries an antidiagonal form");
    QuadraticAlgebra::new(l, phi).expect("n23 form is quadratic")
}

/// `n_{3,2}` with its antidiagonal invariant form.
pub fn n32_quadratic() -> QuadraticAlgebra {
    let l = free_nilpotent(3, 2).expect("valid parameters").with_provenance("n32");
    let phi = antidiagonal_invariant_form(&l).expect("n32 carries an antidiagonal form");
    QuadraticAlgebra::new(l, phi).expect("n32 form is quadratic")
}
