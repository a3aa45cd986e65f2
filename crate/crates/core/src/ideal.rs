//! Annihilators, cyclic one-sided ideals and the hom calculus between
//! cyclic left ideals `Bx`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{Algebra, AlgebraData, MultTable};
use crate::error::{Error, Result};
use crate::linalg::{CosetSpace, Matrix, Subspace};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `A g` (left) or `g A` (right).
#[derive(Clone, Debug)]
pub struct CyclicIdeal<F: Field> {
    algebra: Arc<Algebra<F>>,
    generator: Vec<F>,
    side: Side,
    basis: Subspace<F>,
}

impl<F: Field> CyclicIdeal<F> {
    pub fn new(algebra: &Arc<Algebra<F>>, generator: Vec<F>, side: Side) -> Result<Self> {
        if generator.len() != algebra.dim() {
            return Err(Error::Invalid("generator has wrong length".into()));
        }
        let m = match side {
            Side::Left => algebra.right_mult_matrix(&generator),
            Side::Right => algebra.left_mult_matrix(&generator),
        };
        Ok(CyclicIdeal {
            algebra: algebra.clone(),
            basis: m.column_space(),
            generator,
            side,
        })
    }

    pub fn left(algebra: &Arc<Algebra<F>>, generator: Vec<F>) -> Result<Self> {
        Self::new(algebra, generator, Side::Left)
    }

    pub fn right(algebra: &Arc<Algebra<F>>, generator: Vec<F>) -> Result<Self> {
        Self::new(algebra, generator, Side::Right)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn generator(&self) -> &[F] {
        &self.generator
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn basis(&self) -> &Subspace<F> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// The same ideal seen from the opposite algebra: a right ideal `gA`
    /// becomes the left ideal `A^op g`.
    pub fn to_opposite(&self) -> CyclicIdeal<F> {
        CyclicIdeal {
            algebra: self.algebra.opposite(),
            generator: self.generator.clone(),
            side: match self.side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            },
            basis: self.basis.clone(),
        }
    }
}

fn kernel_of_stack<F: Field>(n: usize, maps: impl IntoIterator<Item = Matrix<F>>) -> Subspace<F> {
    let mut stacked: Option<Matrix<F>> = None;
    for m in maps {
        stacked = Some(match stacked {
            None => m,
            Some(s) => s.vstack(&m),
        });
    }
    match stacked {
        None => Subspace::full(n),
        Some(s) => s.nullspace(),
    }
}

/// `L(S) = { b | b s = 0 for all s in S }`.
pub fn left_annihilator<F: Field>(alg: &Algebra<F>, s: &[Vec<F>]) -> Subspace<F> {
    kernel_of_stack(alg.dim(), s.iter().map(|x| alg.right_mult_matrix(x)))
}

/// `R(S) = { b | s b = 0 for all s in S }`.
pub fn right_annihilator<F: Field>(alg: &Algebra<F>, s: &[Vec<F>]) -> Subspace<F> {
    kernel_of_stack(alg.dim(), s.iter().map(|x| alg.left_mult_matrix(x)))
}

/// `B(x, y) = { b | L(x) b y = 0 }`.
pub fn b_space<F: Field>(alg: &Algebra<F>, x: &[F], y: &[F]) -> Subspace<F> {
    let lx = left_annihilator(alg, &[x.to_vec()]);
    let ry = alg.right_mult_matrix(y);
    kernel_of_stack(
        alg.dim(),
        lx.basis().iter().map(|l| ry.mul(&alg.left_mult_matrix(l))),
    )
}

/// `dim Hom(Bx, By)` as `dim B(x,y) - dim L(y)`.
pub fn hom_dim_theta<F: Field>(alg: &Algebra<F>, x: &[F], y: &[F]) -> usize {
    b_space(alg, x, y).dim() - left_annihilator(alg, &[y.to_vec()]).dim()
}

/// `dim Hom(Bx, By)` as `dim (R(L(x)) ∩ By)`.
pub fn hom_dim_phi<F: Field>(alg: &Algebra<F>, x: &[F], y: &[F]) -> usize {
    let lx = left_annihilator(alg, &[x.to_vec()]);
    let rlx = right_annihilator(alg, lx.basis());
    let by = alg.right_mult_matrix(y).column_space();
    rlx.intersection(&by).dim()
}

/// `B(x,y) / L(y)`, identified with `Hom(Bx, By)`: the class of `b` is the
/// map `a x -> a b y`.
#[derive(Clone, Debug)]
pub struct HomSpaceCoset<F: Field> {
    x: Vec<F>,
    y: Vec<F>,
    space: CosetSpace<F>,
}

impl<F: Field> HomSpaceCoset<F> {
    pub fn new(alg: &Algebra<F>, x: &[F], y: &[F]) -> Self {
        let num = b_space(alg, x, y);
        let den = left_annihilator(alg, &[y.to_vec()]);
        HomSpaceCoset {
            x: x.to_vec(),
            y: y.to_vec(),
            space: CosetSpace::new(num, den),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn numerator(&self) -> &Subspace<F> {
        self.space.numerator()
    }

    pub fn denominator(&self) -> &Subspace<F> {
        self.space.denominator()
    }

    pub fn representatives(&self) -> &[Vec<F>] {
        self.space.representatives()
    }

    pub fn coordinates(&self, b: &[F]) -> Option<Vec<F>> {
        self.space.coordinates(b)
    }

    /// The homomorphism `Bx -> By` of the class of `b`, as a matrix in the
    /// canonical bases of the two ideals (see [`CyclicIdeal::basis`]).
    pub fn to_map(&self, alg: &Algebra<F>, b: &[F]) -> Result<Matrix<F>> {
        if !self.space.numerator().contains(b) {
            return Err(Error::Invalid("element is outside B(x, y)".into()));
        }
        let rx = alg.right_mult_matrix(&self.x);
        let src = rx.column_space();
        let tgt = alg.right_mult_matrix(&self.y).column_space();
        let by = alg.mul(b, &self.y);
        let r_by = alg.right_mult_matrix(&by);
        let solver = crate::linalg::LinearSolver::new(&rx);
        let cols = src
            .basis()
            .iter()
            .map(|v| {
                let a = solver
                    .solve(v)
                    .ok_or_else(|| Error::Internal("ideal basis vector has no preimage".into()))?;
                Ok(tgt.coordinates_unchecked(&r_by.mul_vec(&a)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&cols, tgt.dim()))
    }
}

/// `M_B(x_1, ..., x_n)`: block matrices with entry `(r, s)` in
/// `B(x_r, x_s) / L(x_s)`, multiplied blockwise and reduced modulo `L(x_t)`.
/// Isomorphic to `End(⊕ B x_i)` with maps composed left to right.
pub fn matrix_endomorphism_algebra<F: Field>(
    alg: &Arc<Algebra<F>>,
    xs: &[Vec<F>],
) -> Result<Arc<Algebra<F>>> {
    let n = xs.len();
    if n == 0 {
        return Err(Error::Invalid("need at least one generator".into()));
    }
    let blocks: Vec<Vec<HomSpaceCoset<F>>> = (0..n)
        .into_par_iter()
        .map(|r| {
            (0..n)
                .map(|s| HomSpaceCoset::new(alg, &xs[r], &xs[s]))
                .collect()
        })
        .collect();
    let mut offset = vec![vec![0usize; n]; n];
    let mut labels = Vec::new();
    for r in 0..n {
        for s in 0..n {
            offset[r][s] = labels.len();
            for k in 0..blocks[r][s].dim() {
                labels.push(format!("({},{},{k})", r + 1, s + 1));
            }
        }
    }
    let dim = labels.len();
    let index: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|r| (0..n).map(move |s| (r, s)))
        .flat_map(|(r, s)| (0..blocks[r][s].dim()).map(move |k| (r, s, k)))
        .collect();
    let mult: MultTable<F> = index
        .par_iter()
        .map(|&(r, s, a)| {
            let mut row = vec![Vec::new(); dim];
            let lhs = &blocks[r][s].representatives()[a];
            for t in 0..n {
                let target = &blocks[r][t];
                for (b, rhs) in blocks[s][t].representatives().iter().enumerate() {
                    let p = alg.mul(lhs, rhs);
                    let c = target
                        .coordinates(&p)
                        .ok_or_else(|| Error::Internal("block product left B(x_r, x_t)".into()))?;
                    row[offset[s][t] + b] = c
                        .into_iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(k, v)| (offset[r][t] + k, v))
                        .collect();
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let idempotents: Vec<Vec<F>> = (0..n)
        .map(|r| {
            let mut e = vec![F::zero(); dim];
            let c = blocks[r][r]
                .coordinates(alg.unit())
                .expect("1 lies in B(x, x)");
            for (k, v) in c.into_iter().enumerate() {
                e[offset[r][r] + k] = v;
            }
            e
        })
        .collect();
    let mut unit = vec![F::zero(); dim];
    for e in &idempotents {
        for (u, v) in unit.iter_mut().zip(e) {
            u.add_assign(v);
        }
    }
    let idempotents = idempotents
        .into_iter()
        .filter(|e| e.iter().any(|v| !v.is_zero()))
        .collect();
    Algebra::new(AlgebraData {
        name: format!("M({})", alg.name()),
        basis_labels: labels,
        unit,
        mult,
        idempotents: Some(idempotents),
        grading: None,
        parameter: alg.parameter().cloned(),
    })
}
