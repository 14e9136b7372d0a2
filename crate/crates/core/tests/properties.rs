mod common;

use proptest::prelude::*;

use quadlie::analysis::format;
use quadlie::constructions::*;
use quadlie::derivations::{derivations, inner_derivations, is_derivation, is_skew, skew_derivations};
use quadlie::forms::{duality_report, invariant_forms, is_invariant, omega_dual, validate_quadratic};
use quadlie::linalg::{frac, Matrix, Scalar};
use quadlie::sampling;
use quadlie::{BilinearForm, LieAlgebraBuilder, QuadraticAlgebra, Subspace};

fn small_quadratic(i: usize) -> QuadraticAlgebra {
    match i % 8 {
        0 => oscillator_d4(),
        1 => generalized_oscillator(&[frac(1, 1), frac(-3, 2)]).unwrap(),
        2 => tstar_extension(&heisenberg(1).unwrap(), None).unwrap(),
        3 => n23_quadratic(),
        4 => n32_quadratic(),
        5 => sl2_killing(),
        6 => a_sl2(1).unwrap(),
        _ => tensor_truncated(&sl2_killing(), 2).unwrap(),
    }
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => Just(frac(0, 1)),
        2 => (-4i64..=4, 1i64..=3).prop_map(|(p, q)| frac(p, q)),
    ]
}

/// Random antisymmetric tables, not necessarily Lie, with an optional symmetric form.
fn random_file() -> impl Strategy<Value = format::AlgebraFile> {
    (1usize..=5).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(prop::collection::vec(scalar(), n), pairs),
            prop::option::of(prop::collection::vec(scalar(), n * (n + 1) / 2)),
            "[a-z]{1,2}",
        )
            .prop_map(move |(table, form, prefix)| {
                let mut b = LieAlgebraBuilder::new((0..n).map(|i| format!("{prefix}_{i}")));
                let mut it = table.iter();
                for i in 0..n {
                    for j in i + 1..n {
                        b.add_vector(i, j, it.next().unwrap());
                    }
                }
                let form = form.map(|v| {
                    // v lists the upper triangle row by row
                    let upper = |r: usize, c: usize| r * n - r * (r + 1) / 2 + c;
                    let g = Matrix::from_fn(n, n, |r, c| v[upper(r.min(c), r.max(c))].clone());
                    BilinearForm::new(g).unwrap()
                });
                format::AlgebraFile {
                    algebra: b.build(),
                    form,
                }
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn file_round_trip(f in random_file()) {
        let text = format::serialize(&f.algebra, f.form.as_ref());
        let back = format::parse(&text).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn perp_of_ideal_is_ideal_and_involutive(which in 0usize..8, seed in any::<u64>()) {
        let q = small_quadratic(which);
        let l = q.algebra();
        let mut rng = sampling::rng(seed);
        let i = sampling::random_ideal(l, &mut rng);
        let j = sampling::random_ideal(l, &mut rng).sum(&i).unwrap();
        let pi = omega_dual(&q, &i).unwrap();
        prop_assert!(l.is_ideal(&pi).unwrap());
        prop_assert_eq!(pi.dim() + i.dim(), q.dim());
        prop_assert_eq!(&q.perp(&pi), &i);
        prop_assert!(pi.contains(&q.perp(&j)).unwrap());
    }

    #[test]
    fn central_series_are_dual(which in 0usize..8) {
        let q = small_quadratic(which);
        let r = duality_report(&q, &[]).unwrap();
        prop_assert!(r.all_hold(), "{:?}", r.failures);
    }

    #[test]
    fn invariant_forms_are_invariant(which in 0usize..8, seed in any::<u64>()) {
        let q = small_quadratic(which);
        let l = q.algebra();
        let basis = invariant_forms(l);
        prop_assert!(!basis.is_empty());
        let mut rng = sampling::rng(seed);
        let coeffs = sampling::random_vector(&mut rng, basis.len(), 5);
        let mut g = Matrix::zeros(l.dim(), l.dim());
        for (c, b) in coeffs.iter().zip(&basis) {
            prop_assert!(is_invariant(l, b));
            g = g.add(&b.gram().scale(c));
        }
        prop_assert!(is_invariant(l, &BilinearForm::new(g).unwrap()));
        // the given form lies in the span
        let flat = |m: &Matrix| m.flat().to_vec();
        let span = Subspace::span(l.dim() * l.dim(), basis.iter().map(|b| flat(b.gram())));
        prop_assert!(span.contains_vector(&flat(q.form().gram())));
    }

    #[test]
    fn derivation_spaces_nest(which in 0usize..8) {
        let q = small_quadratic(which);
        let l = q.algebra();
        let inner = inner_derivations(l);
        let skew = skew_derivations(l, q.form()).unwrap();
        let all = derivations(l);
        prop_assert!(skew.as_subspace().contains(&inner.as_subspace()).unwrap());
        prop_assert!(all.as_subspace().contains(&skew.as_subspace()).unwrap());
        for d in skew.basis() {
            prop_assert!(is_derivation(l, d).unwrap());
            prop_assert!(is_skew(q.form(), d).unwrap());
        }
        prop_assert!(all.bracket_closed());
        prop_assert!(all.has_ideal(&inner));
    }

    #[test]
    fn double_extension_adds_two(which in 0usize..8, seed in any::<u64>()) {
        let a = small_quadratic(which);
        let skew = skew_derivations(a.algebra(), a.form()).unwrap();
        let mut rng = sampling::rng(seed);
        let coeffs = sampling::random_vector(&mut rng, skew.dim(), 3);
        let n = a.dim();
        let mut delta = Matrix::zeros(n, n);
        for (c, d) in coeffs.iter().zip(skew.basis()) {
            delta = delta.add(&d.scale(c));
        }
        let g = double_extension_by_derivation(&a, &delta).unwrap();
        prop_assert_eq!(g.dim(), n + 2);
        prop_assert!(g.algebra().is_valid());
        prop_assert!(validate_quadratic(g.algebra(), g.form()).is_empty());
    }

    #[test]
    fn tstar_dual_part_is_isotropic_abelian_ideal(which in 0usize..5) {
        let l = match which {
            0 => heisenberg(1).unwrap(),
            1 => sl2(),
            2 => free_nilpotent(2, 3).unwrap(),
            3 => free_nilpotent(3, 2).unwrap(),
            _ => split_h3_extension(),
        };
        let n = l.dim();
        let t = tstar_extension(&l, None).unwrap();
        prop_assert_eq!(t.dim(), 2 * n);
        let dual = Subspace::coordinate(2 * n, n..2 * n);
        prop_assert!(t.algebra().is_ideal(&dual).unwrap());
        prop_assert_eq!(&t.perp(&dual), &dual);
        let sq = t.algebra().product_subspace(&dual, &dual).unwrap();
        prop_assert!(sq.is_zero());
        let quotient = t.algebra().quotient(&dual).unwrap();
        prop_assert_eq!(quotient.type_pair(), l.type_pair());
    }
}
