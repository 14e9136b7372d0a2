//! Determinants of linear pencils `t1*B1 + ... + tm*Bm`.
//!
//! Small pencils are expanded symbolically. Larger ones fall back to exact
//! evaluation at sample points: seeded random points for a nonzero witness,
//! and the full grid `{0..n}^m` when that is affordable, which decides
//! vanishing because every variable appears with degree at most `n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Matrix;
use super::scalar::{format_scalar, int, Scalar};
use crate::error::{Error, Result};

/// Largest pencil (matrix size and number of parameters) expanded symbolically.
pub const SYMBOLIC_LIMIT: usize = 12;

/// Largest grid evaluated when proving a pencil determinant vanishes.
pub const GRID_BUDGET: u64 = 20_000;

/// Exact multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// `sum_i coeffs[i] * t_i`
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Polynomial::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u16]) -> Scalar {
        self.terms.get(exponents).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|x| *x as usize).sum())
            .max()
    }

    fn add_term(&mut self, e: Vec<u16>, c: Scalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars.max(other.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, k) in point.iter().zip(e) {
                for _ in 0..*k {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut factors: Vec<String> = Vec::new();
            for (i, k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("t{}", i + 1)),
                    _ => factors.push(format!("t{}^{}", i + 1, k)),
                }
            }
            let coeff = if factors.is_empty() || (!c.is_one() && *c != -Scalar::one()) {
                Some(format_scalar(c))
            } else if *c == -Scalar::one() {
                Some("-".to_string())
            } else {
                None
            };
            let mut s = String::new();
            if let Some(c) = coeff {
                s.push_str(&c);
                if !factors.is_empty() && c != "-" {
                    s.push('*');
                }
            }
            s.push_str(&factors.join("*"));
            if first {
                write!(f, "{s}")?;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {s}")?;
            }
            first = false;
        }
        Ok(())
    }
}

fn check_pencil(basis: &[Matrix]) -> Result<usize> {
    let n = basis.first().map_or(0, |b| b.rows());
    for b in basis {
        if !b.is_square() {
            return Err(Error::NotSquare {
                rows: b.rows(),
                cols: b.cols(),
            });
        }
        if b.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.rows(),
            });
        }
    }
    Ok(n)
}

/// `det(t1*B1 + ... + tm*Bm)` by Laplace expansion over column subsets.
pub fn det_pencil(basis: &[Matrix]) -> Result<Polynomial> {
    let n = check_pencil(basis)?;
    let m = basis.len();
    if n > 20 {
        return Err(Error::InvalidParameter(format!(
            "symbolic pencil expansion limited to 20x20, got {n}x{n}"
        )));
    }
    let entry = |r: usize, c: usize| {
        let coeffs: Vec<Scalar> = basis.iter().map(|b| b[(r, c)].clone()).collect();
        Polynomial::linear(&coeffs)
    };
    let entries: Vec<Vec<Polynomial>> = (0..n).map(|r| (0..n).map(|c| entry(r, c)).collect()).collect();
    let mut layer: HashMap<u32, Polynomial> = HashMap::new();
    layer.insert(0, Polynomial::constant(m, Scalar::one()));
    for row in entries.iter() {
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for (mask, p) in &layer {
            for (c, e) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || e.is_zero() {
                    continue;
                }
                let inversions = (mask >> (c + 1)).count_ones();
                let mut term = p.mul(e);
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                next.entry(mask | (1 << c))
                    .or_insert_with(|| Polynomial::zero(m))
                    .add_assign(&term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok(layer.remove(&full).unwrap_or_else(|| Polynomial::zero(m)))
}

pub fn eval_pencil(basis: &[Matrix], point: &[Scalar]) -> Matrix {
    let n = basis.first().map_or(0, Matrix::rows);
    let mut acc = Matrix::zeros(n, n);
    for (b, t) in basis.iter().zip(point) {
        if !t.is_zero() {
            acc = acc.add(&b.scale(t));
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ZeroProof {
    /// The expanded determinant polynomial is the zero polynomial.
    Symbolic,
    /// The determinant vanishes on `{0..n}^m`.
    ExhaustiveGrid,
    /// The pencil is empty (only the zero matrix).
    EmptyPencil,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilVerdict {
    NonzeroWitness { point: Vec<Scalar>, det: Scalar },
    IdenticallyZero(ZeroProof),
    Undecided { samples: usize },
}

fn try_point(basis: &[Matrix], point: Vec<Scalar>) -> Option<PencilVerdict> {
    let det = eval_pencil(basis, &point).det().expect("square pencil");
    (!det.is_zero()).then_some(PencilVerdict::NonzeroWitness { point, det })
}

/// Decides whether `det(sum t_i B_i)` is a nonzero polynomial, returning a
/// witness point when it is.
///
/// Search order is deterministic for a given seed: unit points, the all-ones
/// point, then seeded random points on a growing integer box.
pub fn pencil_nonzero_test(basis: &[Matrix], seed: u64) -> Result<PencilVerdict> {
    let n = check_pencil(basis)?;
    let m = basis.len();
    if n == 0 {
        return Ok(PencilVerdict::NonzeroWitness {
            point: vec![Scalar::zero(); m],
            det: Scalar::one(),
        });
    }
    if m == 0 {
        return Ok(PencilVerdict::IdenticallyZero(ZeroProof::EmptyPencil));
    }
    let mut samples = 0;
    for i in 0..m {
        let mut p = vec![Scalar::zero(); m];
        p[i] = Scalar::one();
        samples += 1;
        if let Some(w) = try_point(basis, p) {
            return Ok(w);
        }
    }
    samples += 1;
    if let Some(w) = try_point(basis, vec![Scalar::one(); m]) {
        return Ok(w);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..48 {
        let bound = 1i64 + (round as i64 / 4) * (n as i64);
        let p: Vec<Scalar> = (0..m).map(|_| int(rng.gen_range(-bound..=bound))).collect();
        samples += 1;
        if let Some(w) = try_point(basis, p) {
            return Ok(w);
        }
    }
    if n <= SYMBOLIC_LIMIT && m <= SYMBOLIC_LIMIT {
        let poly = det_pencil(basis)?;
        if poly.is_zero() {
            return Ok(PencilVerdict::IdenticallyZero(ZeroProof::Symbolic));
        }
        // Random search missed; walk the grid for the smallest witness.
    }
    let side = n as u64 + 1;
    let grid = side.checked_pow(m as u32).filter(|g| *g <= GRID_BUDGET);
    if let Some(total) = grid {
        for idx in 0..total {
            let mut rest = idx;
            let p: Vec<Scalar> = (0..m)
                .map(|_| {
                    let d = rest % side;
                    rest /= side;
                    int(d as i64)
                })
                .collect();
            if let Some(w) = try_point(basis, p) {
                return Ok(w);
            }
        }
        return Ok(PencilVerdict::IdenticallyZero(ZeroProof::ExhaustiveGrid));
    }
    Ok(PencilVerdict::Undecided { samples })
}
