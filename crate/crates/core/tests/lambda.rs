//! Independent oracles for the derived structure of the algebras `E^Φ(V)`.

use ayalg::algebra::Algebra;
use ayalg::ext::{build_phi_yoneda_algebra, AdmissibleSet, ExtContext};
use ayalg::linalg::Subspace;
use ayalg::module::{hom_space_intertwiner, Module};
use ayalg::quantum_exterior::QuantumExterior;
use ayalg::scalar::{Field, Rational};

fn ls() -> QuantumExterior<Rational> {
    QuantumExterior::new(Rational::from_i64(2)).unwrap()
}

fn ext1_by_hom_dims(x: &Module<Rational>, y: &Module<Rational>) -> usize {
    let p = x.projective_cover().unwrap().projective.clone();
    let h = |a: &Module<Rational>| hom_space_intertwiner(a, y).unwrap().dim();
    h(&x.syzygy().unwrap()) + h(x) - h(&p)
}

#[test]
fn dimension_from_hom_and_ext_tables() {
    let c = ls();
    for (n, m) in [(0usize, 5i64), (1, 5)] {
        let v = c.summands(n, m).unwrap();
        let mut hom = 0;
        let mut ext1 = 0;
        for x in &v {
            for y in &v {
                hom += hom_space_intertwiner(x, y).unwrap().dim();
                ext1 += ext1_by_hom_dims(x, y);
            }
        }
        let l0 = c
            .build_lambda(n, m, &AdmissibleSet::parse("0").unwrap())
            .unwrap();
        let l1 = c
            .build_lambda(n, m, &AdmissibleSet::parse("0,1").unwrap())
            .unwrap();
        assert_eq!(l0.algebra().dim(), hom);
        assert_eq!(l1.algebra().dim(), hom + ext1);
        if n == 0 {
            assert_eq!((hom, hom + ext1), (34, 36));
        }
    }
}

/// `dim e_i (rad / rad^2) e_j` from projections onto the Peirce blocks.
fn arrow_counts_by_blocks(b: &Algebra<Rational>) -> Vec<Vec<usize>> {
    let rad = b.radical().unwrap();
    let rad2 = b.product_space(&rad, &rad);
    let es = b.idempotents().unwrap();
    let block_dim = |s: &Subspace<Rational>, e: &[Rational], f: &[Rational]| {
        let p = b.left_mult_matrix(e).mul(&b.right_mult_matrix(f));
        s.image_under(&p).dim()
    };
    es.iter()
        .map(|e| {
            es.iter()
                .map(|f| block_dim(&rad, e, f) - block_dim(&rad2, e, f))
                .collect()
        })
        .collect()
}

#[test]
fn quiver_of_lambda() {
    let c = ls();
    for m in [3, 4, 6] {
        let l = c
            .build_lambda(0, m, &AdmissibleSet::parse("0").unwrap())
            .unwrap();
        let oracle = arrow_counts_by_blocks(l.algebra());
        assert_eq!(oracle, vec![vec![1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]);
        assert_eq!(l.algebra().arrow_counts().unwrap(), oracle);
    }
    let l = c
        .build_lambda(0, 4, &AdmissibleSet::parse("0,1").unwrap())
        .unwrap();
    assert_eq!(
        l.algebra().arrow_counts().unwrap(),
        arrow_counts_by_blocks(l.algebra())
    );
}

#[test]
fn degree_zero_part_is_the_endomorphism_algebra() {
    let c = ls();
    let e = ExtContext::new(c.algebra(), c.summands(0, 4).unwrap()).unwrap();
    let b0 = build_phi_yoneda_algebra(&e, &AdmissibleSet::parse("0").unwrap(), "E0").unwrap();
    let b1 = build_phi_yoneda_algebra(&e, &AdmissibleSet::parse("0,1").unwrap(), "E01").unwrap();
    let index: Vec<Option<usize>> = b1
        .labels
        .iter()
        .map(|l| b0.labels.iter().position(|k| k == l))
        .collect();
    let (a0, a1) = (&b0.algebra, &b1.algebra);
    for (i, li) in b1.labels.iter().enumerate() {
        for (j, lj) in b1.labels.iter().enumerate() {
            let p = a1.mul(&a1.basis_element(i), &a1.basis_element(j));
            match (li.degree, lj.degree) {
                (0, 0) => {
                    let q = a0.mul(
                        &a0.basis_element(index[i].unwrap()),
                        &a0.basis_element(index[j].unwrap()),
                    );
                    for (k, x) in p.iter().enumerate() {
                        match index[k] {
                            Some(k0) => assert_eq!(*x, q[k0]),
                            None => assert!(x.is_zero()),
                        }
                    }
                }
                // 2 is not in Φ
                (1, 1) => assert!(p.iter().all(|x| x.is_zero())),
                _ => {}
            }
        }
    }
}

#[test]
fn larger_admissible_sets_are_associative() {
    let c = ls();
    let e = ExtContext::new(c.algebra(), c.summands(0, 4).unwrap()).unwrap();
    let r = e.modules().len();
    for phi in ["0,1,2", "0,3", "0,3,27"] {
        let set = AdmissibleSet::parse(phi).unwrap();
        let b = build_phi_yoneda_algebra(&e, &set, phi).unwrap();
        b.algebra.associativity_audit().unwrap();
        let expected: usize = set
            .elements()
            .iter()
            .map(|&d| {
                (0..r)
                    .flat_map(|s| (0..r).map(move |t| (s, t)))
                    .map(|(s, t)| e.dim(s, t, d as usize).unwrap())
                    .sum::<usize>()
            })
            .sum();
        assert_eq!(b.algebra.dim(), expected, "{phi}");
    }
}
