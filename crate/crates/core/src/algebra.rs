//! Finite-dimensional associative algebras given by structure constants.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, ScalarKind};

/// Sparse structure constants: `table[i][j]` lists `(k, c)` with
/// `b_i b_j = sum c b_k`.
pub type MultTable<F> = Vec<Vec<Vec<(usize, F)>>>;

/// Everything needed to construct an [`Algebra`].
#[derive(Clone, Debug)]
pub struct AlgebraData<F> {
    pub name: String,
    pub basis_labels: Vec<String>,
    pub unit: Vec<F>,
    pub mult: MultTable<F>,
    pub idempotents: Option<Vec<Vec<F>>>,
    pub grading: Option<Vec<i64>>,
    /// Distinguished parameter, recorded in the serialized form.
    pub parameter: Option<F>,
}

struct Cache<F> {
    left: OnceLock<Arc<Vec<Matrix<F>>>>,
    right: OnceLock<Arc<Vec<Matrix<F>>>>,
    radical: OnceLock<Result<Subspace<F>, u64>>,
    arrows: OnceLock<Vec<Vec<F>>>,
    generators: OnceLock<Vec<Vec<F>>>,
    opposite: OnceLock<Arc<Algebra<F>>>,
    projectives: OnceLock<Vec<Arc<IndecomposableProjective<F>>>>,
}

impl<F> Default for Cache<F> {
    fn default() -> Self {
        Cache {
            left: OnceLock::new(),
            right: OnceLock::new(),
            radical: OnceLock::new(),
            arrows: OnceLock::new(),
            generators: OnceLock::new(),
            opposite: OnceLock::new(),
            projectives: OnceLock::new(),
        }
    }
}

/// `A e` for a supplied idempotent `e`, as a left ideal of `A`.
pub struct IndecomposableProjective<F> {
    /// Basis of `A e` inside `A`.
    pub basis: Subspace<F>,
    /// Left multiplication restricted to `A e`, one matrix per basis vector of `A`.
    pub action: Arc<Vec<Matrix<F>>>,
    /// Coordinates of `e` in `basis`.
    pub generator: Vec<F>,
}

pub struct Algebra<F> {
    data: AlgebraData<F>,
    fingerprint: u64,
    opposite_of: Weak<Algebra<F>>,
    cache: Cache<F>,
}

impl<F: Field> std::fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra({}, dim {})", self.data.name, self.dim())
    }
}

fn fingerprint<F: Field>(d: &AlgebraData<F>) -> u64 {
    let mut h = DefaultHasher::new();
    d.name.hash(&mut h);
    d.basis_labels.len().hash(&mut h);
    for (i, row) in d.mult.iter().enumerate() {
        for (j, entries) in row.iter().enumerate() {
            for (k, c) in entries {
                (i, j, k).hash(&mut h);
                c.hash(&mut h);
            }
        }
    }
    h.finish()
}

impl<F: Field> Algebra<F> {
    /// Validates and wraps the data. Runs the full associativity and unit
    /// audit, plus idempotent and grading checks when present.
    pub fn new(data: AlgebraData<F>) -> Result<Arc<Self>> {
        Self::build(data, Weak::new())
    }

    fn build(mut data: AlgebraData<F>, opposite_of: Weak<Algebra<F>>) -> Result<Arc<Self>> {
        let n = data.basis_labels.len();
        if n == 0 {
            return Err(Error::Invalid(
                "algebra must have positive dimension".into(),
            ));
        }
        if data.unit.len() != n || data.mult.len() != n || data.mult.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(
                "structure constant table has wrong shape".into(),
            ));
        }
        for row in data.mult.iter_mut() {
            for e in row.iter_mut() {
                e.retain(|(_, c)| !c.is_zero());
                e.sort_by_key(|(k, _)| *k);
                if e.iter().any(|(k, _)| *k >= n) || e.windows(2).any(|w| w[0].0 == w[1].0) {
                    return Err(Error::Invalid("bad index in structure constants".into()));
                }
            }
        }
        let alg = Algebra {
            fingerprint: fingerprint(&data),
            data,
            opposite_of,
            cache: Cache::default(),
        };
        alg.audit()?;
        Ok(Arc::new(alg))
    }

    fn audit(&self) -> Result<()> {
        let n = self.dim();
        let unit = &self.data.unit;
        for i in 0..n {
            let e = basis_vector::<F>(n, i);
            if self.mul(unit, &e) != e || self.mul(&e, unit) != e {
                return Err(Error::UnitLaw(i));
            }
        }
        self.associativity_audit()?;
        if let Some(idems) = &self.data.idempotents {
            self.check_idempotents(idems)?;
        }
        if let Some(g) = &self.data.grading {
            if g.len() != n {
                return Err(Error::Invalid("grading has wrong length".into()));
            }
            for i in 0..n {
                for j in 0..n {
                    for (k, _) in &self.data.mult[i][j] {
                        if g[*k] != g[i] + g[j] {
                            return Err(Error::Grading(i, j, *k));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `(b_i b_j) b_k == b_i (b_j b_k)` for every basis triple.
    pub fn associativity_audit(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.data.mult[i][j];
                for k in 0..n {
                    let mut lhs = vec![F::zero(); n];
                    for (l, c) in ij {
                        for (m, d) in &self.data.mult[*l][k] {
                            lhs[*m].add_assign(&c.mul(d));
                        }
                    }
                    let mut rhs = vec![F::zero(); n];
                    for (l, c) in &self.data.mult[j][k] {
                        for (m, d) in &self.data.mult[i][*l] {
                            rhs[*m].add_assign(&c.mul(d));
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_idempotents(&self, idems: &[Vec<F>]) -> Result<()> {
        let n = self.dim();
        if idems.is_empty() || idems.iter().any(|e| e.len() != n) {
            return Err(Error::Idempotents("empty list or wrong length".into()));
        }
        let mut sum = vec![F::zero(); n];
        for (a, e) in idems.iter().enumerate() {
            for (s, x) in sum.iter_mut().zip(e) {
                s.add_assign(x);
            }
            for (b, f) in idems.iter().enumerate() {
                let p = self.mul(e, f);
                let expect = if a == b {
                    e.clone()
                } else {
                    vec![F::zero(); n]
                };
                if p != expect {
                    return Err(Error::Idempotents(format!(
                        "e{a} e{b} violates orthogonality"
                    )));
                }
            }
        }
        if sum != self.data.unit {
            return Err(Error::Idempotents(
                "idempotents do not sum to the unit".into(),
            ));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn dim(&self) -> usize {
        self.data.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.data.basis_labels
    }

    pub fn unit(&self) -> &[F] {
        &self.data.unit
    }

    pub fn mult_table(&self) -> &MultTable<F> {
        &self.data.mult
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.data.grading.as_deref()
    }

    pub fn parameter(&self) -> Option<&F> {
        self.data.parameter.as_ref()
    }

    pub fn data(&self) -> &AlgebraData<F> {
        &self.data
    }

    /// The supplied idempotents, if any.
    pub fn supplied_idempotents(&self) -> Option<&[Vec<F>]> {
        self.data.idempotents.as_deref()
    }

    /// The supplied idempotent decomposition, or `[1]` for a local algebra.
    pub fn idempotents(&self) -> Result<Vec<Vec<F>>> {
        if let Some(e) = &self.data.idempotents {
            return Ok(e.clone());
        }
        if self.is_local()? {
            return Ok(vec![self.data.unit.clone()]);
        }
        Err(Error::MissingIdempotents(self.data.name.clone()))
    }

    pub fn is_local(&self) -> Result<bool> {
        Ok(self.dim() - self.radical()?.dim() == 1)
    }

    pub fn same_as(&self, o: &Algebra<F>) -> bool {
        std::ptr::eq(self, o) || (self.fingerprint == o.fingerprint && self.dim() == o.dim())
    }

    pub fn ensure_same(&self, o: &Algebra<F>) -> Result<()> {
        if self.same_as(o) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(
                self.data.name.clone(),
                o.data.name.clone(),
            ))
        }
    }

    pub fn basis_element(&self, i: usize) -> Vec<F> {
        basis_vector(self.dim(), i)
    }

    /// Bilinear extension of the structure constants.
    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul(y);
                for (k, c) in &self.data.mult[i][j] {
                    out[*k].add_assign(&xy.mul(c));
                }
            }
        }
        out
    }

    /// `L_{b_i}` for every basis vector: column `j` holds `b_i b_j`.
    pub fn left_basis_matrices(&self) -> Arc<Vec<Matrix<F>>> {
        self.cache
            .left
            .get_or_init(|| {
                let n = self.dim();
                Arc::new(
                    (0..n)
                        .map(|i| {
                            let mut m = Matrix::zeros(n, n);
                            for j in 0..n {
                                for (k, c) in &self.data.mult[i][j] {
                                    m.set(*k, j, c.clone());
                                }
                            }
                            m
                        })
                        .collect(),
                )
            })
            .clone()
    }

    /// `R_{b_i}` for every basis vector: column `j` holds `b_j b_i`.
    pub fn right_basis_matrices(&self) -> Arc<Vec<Matrix<F>>> {
        self.cache
            .right
            .get_or_init(|| {
                let n = self.dim();
                Arc::new(
                    (0..n)
                        .map(|i| {
                            let mut m = Matrix::zeros(n, n);
                            for j in 0..n {
                                for (k, c) in &self.data.mult[j][i] {
                                    m.set(*k, j, c.clone());
                                }
                            }
                            m
                        })
                        .collect(),
                )
            })
            .clone()
    }

    /// Matrix of `b -> a b`.
    pub fn left_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        combine_matrices(&self.left_basis_matrices(), a, self.dim())
    }

    /// Matrix of `b -> b a`.
    pub fn right_mult_matrix(&self, a: &[F]) -> Matrix<F> {
        combine_matrices(&self.right_basis_matrices(), a, self.dim())
    }

    /// Jacobson radical as the kernel of the trace form `(x, y) -> tr(L_{xy})`.
    /// Valid in characteristic zero only.
    pub fn radical(&self) -> Result<Subspace<F>> {
        self.cache
            .radical
            .get_or_init(|| {
                if F::characteristic() != 0 {
                    return Err(F::characteristic());
                }
                let n = self.dim();
                let traces: Vec<F> = (0..n)
                    .map(|k| {
                        let mut t = F::zero();
                        for j in 0..n {
                            for (l, c) in &self.data.mult[k][j] {
                                if *l == j {
                                    t.add_assign(c);
                                }
                            }
                        }
                        t
                    })
                    .collect();
                let mut gram = Matrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        let mut s = F::zero();
                        for (k, c) in &self.data.mult[i][j] {
                            s.add_assign(&c.mul(&traces[*k]));
                        }
                        gram.set(i, j, s);
                    }
                }
                Ok(gram.nullspace())
            })
            .clone()
            .map_err(Error::PositiveCharacteristic)
    }

    /// Span of all products of pairs from `a` and `b`.
    pub fn product_space(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut s = Subspace::zero(self.dim());
        for x in a.basis() {
            for y in b.basis() {
                s.insert(self.mul(x, y));
                if s.dim() == self.dim() {
                    return s;
                }
            }
        }
        s
    }

    /// Lifts of a basis of `rad / rad^2`; they generate `rad` as a one-sided ideal.
    pub fn arrows(&self) -> Result<Vec<Vec<F>>> {
        if let Some(a) = self.cache.arrows.get() {
            return Ok(a.clone());
        }
        let rad = self.radical()?;
        let rad2 = self.product_space(&rad, &rad);
        // keep arrows homogeneous with respect to the idempotents when possible
        let mut arrows = Subspace::zero(self.dim());
        let mut out = Vec::new();
        let idems = self
            .data
            .idempotents
            .clone()
            .unwrap_or_else(|| vec![self.data.unit.clone()]);
        for e in &idems {
            for f in &idems {
                let piece = Subspace::from_vectors(
                    self.dim(),
                    rad.basis().iter().map(|r| self.mul(&self.mul(e, r), f)),
                );
                for v in piece.basis() {
                    let mut probe = rad2.clone();
                    for a in &out {
                        probe.insert(Vec::clone(a));
                    }
                    if probe.insert(v.clone()) && arrows.insert(v.clone()) {
                        out.push(v.clone());
                    }
                }
            }
        }
        debug_assert_eq!(out.len() + rad2.dim(), rad.dim());
        Ok(self.cache.arrows.get_or_init(|| out).clone())
    }

    /// A generating set used for intertwining equations: idempotents plus
    /// arrows when the algebra is basic and split over its idempotents,
    /// otherwise every basis vector.
    pub fn generators(&self) -> Vec<Vec<F>> {
        self.cache
            .generators
            .get_or_init(|| {
                let n = self.dim();
                let all = || (0..n).map(|i| basis_vector(n, i)).collect::<Vec<_>>();
                let Ok(rad) = self.radical() else {
                    return all();
                };
                let Ok(idems) = self.idempotents() else {
                    return all();
                };
                if n - rad.dim() != idems.len() {
                    return all();
                }
                let Ok(arrows) = self.arrows() else {
                    return all();
                };
                let mut g = idems;
                g.extend(arrows);
                g
            })
            .clone()
    }

    /// Entry `(i, j)` is `dim e_i A e_j`, the dimension of the space of maps
    /// between the `i`-th and `j`-th projectives in the composition order
    /// used throughout the crate.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<usize>>> {
        let idems = self.idempotents()?;
        let rights: Vec<Matrix<F>> = idems.iter().map(|e| self.right_mult_matrix(e)).collect();
        let lefts: Vec<Matrix<F>> = idems.iter().map(|e| self.left_mult_matrix(e)).collect();
        Ok(lefts
            .iter()
            .map(|l| rights.iter().map(|r| l.mul(r).rank()).collect())
            .collect())
    }

    /// `dim e_i (rad / rad^2) e_j`: the number of arrows from vertex `i` to
    /// vertex `j` of the quiver.
    pub fn arrow_counts(&self) -> Result<Vec<Vec<usize>>> {
        let idems = self.idempotents()?;
        let rad = self.radical()?;
        let rad2 = self.product_space(&rad, &rad);
        let mut out = Vec::new();
        for e in &idems {
            let le = self.left_mult_matrix(e);
            let mut row = Vec::new();
            for f in &idems {
                let m = le.mul(&self.right_mult_matrix(f));
                row.push(rad.image_under(&m).dim() - rad2.image_under(&m).dim());
            }
            out.push(row);
        }
        Ok(out)
    }

    /// The opposite algebra; `opposite(opposite(A))` is `A` itself.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(orig) = self.opposite_of.upgrade() {
            return orig;
        }
        self.cache
            .opposite
            .get_or_init(|| {
                let n = self.dim();
                let mut mult: MultTable<F> = vec![vec![Vec::new(); n]; n];
                for (i, row) in mult.iter_mut().enumerate() {
                    for (j, e) in row.iter_mut().enumerate() {
                        *e = self.data.mult[j][i].clone();
                    }
                }
                let name = match self.data.name.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", self.data.name),
                };
                let data = AlgebraData {
                    name,
                    basis_labels: self.data.basis_labels.clone(),
                    unit: self.data.unit.clone(),
                    mult,
                    idempotents: self.data.idempotents.clone(),
                    grading: self.data.grading.clone(),
                    parameter: self.data.parameter.clone(),
                };
                Algebra::build(data, Arc::downgrade(self))
                    .expect("opposite of a valid algebra is valid")
            })
            .clone()
    }

    /// `e A e` with unit `e`. Supplied idempotents `f` are carried over as
    /// `e f e` when those form a decomposition of `e`.
    pub fn corner(&self, e: &[F]) -> Result<Arc<Self>> {
        if self.mul(e, e) != e || e.iter().all(F::is_zero) {
            return Err(Error::NotIdempotent);
        }
        let n = self.dim();
        let proj = self.left_mult_matrix(e).mul(&self.right_mult_matrix(e));
        let space = Subspace::from_vectors(n, proj.columns());
        let d = space.dim();
        let basis = space.basis();
        let coords = |v: &[F]| {
            space
                .coordinates(v)
                .expect("corner product stays in the corner")
        };
        let mut mult: MultTable<F> = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let p = coords(&self.mul(&basis[i], &basis[j]));
                mult[i][j] = p
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }
        let labels = space
            .pivots()
            .iter()
            .zip(basis)
            .map(|(&p, v)| {
                if v.iter().filter(|x| !x.is_zero()).count() == 1 {
                    self.data.basis_labels[p].clone()
                } else {
                    format!("e({})e", self.data.basis_labels[p])
                }
            })
            .collect();
        let unit = coords(e);
        let idempotents = self.data.idempotents.as_ref().and_then(|idems| {
            let pieces: Vec<Vec<F>> = idems
                .iter()
                .map(|f| self.mul(&self.mul(e, f), e))
                .filter(|p| p.iter().any(|x| !x.is_zero()))
                .collect();
            let ok = pieces.iter().all(|p| self.mul(p, p) == *p)
                && pieces.iter().enumerate().all(|(a, p)| {
                    pieces
                        .iter()
                        .enumerate()
                        .all(|(b, r)| a == b || self.mul(p, r).iter().all(F::is_zero))
                });
            ok.then(|| pieces.iter().map(|p| coords(p)).collect())
        });
        let data = AlgebraData {
            name: format!("corner({})", self.data.name),
            basis_labels: labels,
            unit,
            mult,
            idempotents,
            grading: None,
            parameter: self.data.parameter.clone(),
        };
        Algebra::new(data)
    }

    /// Looks for a nondegenerate symmetric associative form `(a, b) -> λ(ab)`.
    pub fn symmetric_form_search(&self, budget: usize) -> SymmetricFormSearch<F> {
        let n = self.dim();
        // λ must vanish on every commutator b_i b_j - b_j b_i
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let a = self.mul(&basis_vector(n, i), &basis_vector(n, j));
                let b = self.mul(&basis_vector(n, j), &basis_vector(n, i));
                let c: Vec<F> = a.iter().zip(&b).map(|(x, y)| x.sub(y)).collect();
                if c.iter().any(|x| !x.is_zero()) {
                    rows.push(c);
                }
            }
        }
        let solutions = if rows.is_empty() {
            Subspace::full(n)
        } else {
            Matrix::from_rows(rows, n).nullspace()
        };
        if solutions.is_zero() {
            return SymmetricFormSearch::None { witness: None };
        }
        let grams: Vec<Matrix<F>> = solutions.basis().iter().map(|l| self.gram(l)).collect();
        // an element pairing to zero with everything under every candidate form
        let stacked = grams
            .iter()
            .skip(1)
            .fold(grams[0].transpose(), |acc, g| acc.vstack(&g.transpose()));
        let common = stacked.nullspace();
        if let Some(w) = common.basis().first() {
            return SymmetricFormSearch::None {
                witness: Some(w.clone()),
            };
        }
        let s = grams.len();
        let tried = std::cell::Cell::new(0usize);
        let try_point = |point: &[i64]| -> Option<Vec<F>> {
            tried.set(tried.get() + 1);
            let mut g = Matrix::zeros(n, n);
            let mut lambda = vec![F::zero(); n];
            for (a, &t) in point.iter().enumerate() {
                if t != 0 {
                    let c = F::from_i64(t);
                    g.axpy(&c, &grams[a]);
                    for (x, y) in lambda.iter_mut().zip(&solutions.basis()[a]) {
                        x.add_assign(&c.mul(y));
                    }
                }
            }
            (!g.determinant().is_zero()).then_some(lambda)
        };
        for a in 0..s {
            let mut p = vec![0; s];
            p[a] = 1;
            if let Some(l) = try_point(&p) {
                return SymmetricFormSearch::Found(l);
            }
        }
        let side = n as i64 + 1;
        let mut point = vec![0i64; s];
        let grid_total = (side as u128).saturating_pow(s as u32);
        loop {
            // odometer over {0..n}^s
            let mut k = 0;
            while k < s {
                point[k] += 1;
                if point[k] < side {
                    break;
                }
                point[k] = 0;
                k += 1;
            }
            if k == s {
                return SymmetricFormSearch::None { witness: None };
            }
            if tried.get() >= budget {
                return SymmetricFormSearch::Inconclusive {
                    tried: tried.get(),
                    grid: grid_total,
                };
            }
            if let Some(l) = try_point(&point) {
                return SymmetricFormSearch::Found(l);
            }
        }
    }

    /// Gram matrix of `(b_i, b_j) -> λ(b_i b_j)`.
    pub fn gram(&self, lambda: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = F::zero();
                for (k, c) in &self.data.mult[i][j] {
                    s.add_assign(&c.mul(&lambda[*k]));
                }
                g.set(i, j, s);
            }
        }
        g
    }

    /// `A e_i` for every supplied (or implied local) idempotent.
    pub fn indecomposable_projectives(&self) -> Result<Vec<Arc<IndecomposableProjective<F>>>> {
        if let Some(p) = self.cache.projectives.get() {
            return Ok(p.clone());
        }
        let idems = self.idempotents()?;
        let left = self.left_basis_matrices();
        let projs = idems
            .iter()
            .map(|e| {
                let r = self.right_mult_matrix(e);
                let basis = r.column_space();
                let incl = basis.inclusion();
                let action = left
                    .iter()
                    .map(|l| {
                        let cols: Vec<Vec<F>> = l
                            .mul(&incl)
                            .columns()
                            .iter()
                            .map(|c| basis.coordinates_unchecked(c))
                            .collect();
                        Matrix::from_columns(&cols, basis.dim())
                    })
                    .collect();
                let generator = basis.coordinates(e).expect("e lies in A e");
                Arc::new(IndecomposableProjective {
                    basis,
                    action: Arc::new(action),
                    generator,
                })
            })
            .collect::<Vec<_>>();
        Ok(self.cache.projectives.get_or_init(|| projs).clone())
    }

    pub fn to_json(&self) -> AlgebraJson {
        let n = self.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.data.mult[i][j] {
                    mult.push((i, j, *k, c.to_string()));
                }
            }
        }
        AlgebraJson {
            name: self.data.name.clone(),
            dim: n,
            basis: self.data.basis_labels.clone(),
            unit: self.data.unit.iter().map(ToString::to_string).collect(),
            mult,
            idempotents: self.data.idempotents.as_ref().map(|v| {
                v.iter()
                    .map(|e| e.iter().map(ToString::to_string).collect())
                    .collect()
            }),
            grading: self.data.grading.clone(),
            scalar: ScalarSpec {
                kind: F::KIND,
                q: self.data.parameter.as_ref().map(ToString::to_string),
            },
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Arc<Self>> {
        if j.scalar.kind != F::KIND {
            return Err(Error::Invalid(format!(
                "algebra uses scalar kind {:?}, expected {:?}",
                j.scalar.kind,
                F::KIND
            )));
        }
        let n = j.dim;
        if j.basis.len() != n {
            return Err(Error::Invalid("basis length differs from dim".into()));
        }
        let parse_vec = |v: &[String]| -> Result<Vec<F>> {
            if v.len() != n {
                return Err(Error::Invalid("vector length differs from dim".into()));
            }
            v.iter()
                .map(|s| F::parse_scalar(s).map_err(Error::from))
                .collect()
        };
        let mut mult: MultTable<F> = vec![vec![Vec::new(); n]; n];
        for (i, jj, k, c) in &j.mult {
            if *i >= n || *jj >= n || *k >= n {
                return Err(Error::Invalid(
                    "structure constant index out of range".into(),
                ));
            }
            mult[*i][*jj].push((*k, F::parse_scalar(c)?));
        }
        let data = AlgebraData {
            name: j.name.clone(),
            basis_labels: j.basis.clone(),
            unit: parse_vec(&j.unit)?,
            mult,
            idempotents: j
                .idempotents
                .as_ref()
                .map(|v| v.iter().map(|e| parse_vec(e)).collect::<Result<Vec<_>>>())
                .transpose()?,
            grading: j.grading.clone(),
            parameter: j.scalar.q.as_deref().map(F::parse_scalar).transpose()?,
        };
        Algebra::new(data)
    }
}

/// Outcome of [`Algebra::symmetric_form_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetricFormSearch<F> {
    /// A functional whose induced form is symmetric and nondegenerate.
    Found(Vec<F>),
    /// No symmetric form is nondegenerate; `witness` (when present) lies in
    /// the kernel of every candidate form.
    None { witness: Option<Vec<F>> },
    /// Search budget exhausted before the deterministic grid was covered.
    Inconclusive { tried: usize, grid: u128 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarSpec {
    pub kind: ScalarKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<String>,
}

/// Serialized algebra. Field order is the output key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub idempotents: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grading: Option<Vec<i64>>,
    pub scalar: ScalarSpec,
}

/// Element of an algebra: a coefficient vector tied to its algebra.
#[derive(Clone)]
pub struct Element<F: Field> {
    alg: Arc<Algebra<F>>,
    coeffs: Vec<F>,
}

impl<F: Field> std::fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> std::fmt::Display for Element<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c}){}", self.alg.basis_labels()[i]))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl<F: Field> PartialEq for Element<F> {
    fn eq(&self, o: &Self) -> bool {
        self.alg.same_as(&o.alg) && self.coeffs == o.coeffs
    }
}

impl<F: Field> Element<F> {
    pub fn new(alg: &Arc<Algebra<F>>, coeffs: Vec<F>) -> Result<Self> {
        if coeffs.len() != alg.dim() {
            return Err(Error::Invalid("coefficient vector has wrong length".into()));
        }
        Ok(Element {
            alg: alg.clone(),
            coeffs,
        })
    }

    pub fn basis(alg: &Arc<Algebra<F>>, i: usize) -> Self {
        Element {
            alg: alg.clone(),
            coeffs: alg.basis_element(i),
        }
    }

    pub fn one(alg: &Arc<Algebra<F>>) -> Self {
        Element {
            alg: alg.clone(),
            coeffs: alg.unit().to_vec(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.alg
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn multiply(&self, o: &Element<F>) -> Result<Element<F>> {
        self.alg.ensure_same(&o.alg)?;
        Ok(Element {
            alg: self.alg.clone(),
            coeffs: self.alg.mul(&self.coeffs, &o.coeffs),
        })
    }

    pub fn add(&self, o: &Element<F>) -> Result<Element<F>> {
        self.alg.ensure_same(&o.alg)?;
        Ok(Element {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &F) -> Element<F> {
        Element {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn left_mult_matrix(&self) -> Matrix<F> {
        self.alg.left_mult_matrix(&self.coeffs)
    }

    pub fn right_mult_matrix(&self) -> Matrix<F> {
        self.alg.right_mult_matrix(&self.coeffs)
    }
}

pub fn basis_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub(crate) fn combine_matrices<F: Field>(mats: &[Matrix<F>], coeffs: &[F], n: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(n, n);
    for (c, b) in coeffs.iter().zip(mats) {
        m.axpy(c, b);
    }
    m
}
