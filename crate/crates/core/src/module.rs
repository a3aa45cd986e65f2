//! Finite-dimensional left modules given by action matrices.
//!
//! Vectors are columns. A map `X -> Y` is a `dim Y x dim X` matrix, so
//! "first `f`, then `g`" is the product `g * f`.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{combine_matrices, Algebra};
use crate::error::{Error, Result};
use crate::ideal::{CyclicIdeal, Side};
use crate::linalg::{LinearSolver, Matrix, Subspace};
use crate::scalar::Field;

struct ModuleInner<F: Field> {
    alg: Arc<Algebra<F>>,
    dim: usize,
    action: Vec<Matrix<F>>,
    cover: OnceLock<Arc<ProjectiveCover<F>>>,
    presentation: OnceLock<Arc<Presentation<F>>>,
}

/// A left module; cheap to clone.
#[derive(Clone)]
pub struct Module<F: Field>(Arc<ModuleInner<F>>);

impl<F: Field> std::fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module(dim {} over {})", self.dim(), self.0.alg.name())
    }
}

impl<F: Field> Module<F> {
    /// Audited constructor.
    pub fn new(alg: &Arc<Algebra<F>>, action: Vec<Matrix<F>>) -> Result<Self> {
        if action.len() != alg.dim() {
            return Err(Error::Invalid(
                "need one action matrix per basis vector".into(),
            ));
        }
        let d = action.first().map_or(0, Matrix::nrows);
        if action.iter().any(|m| m.nrows() != d || m.ncols() != d) {
            return Err(Error::Invalid(
                "action matrices must be square of equal size".into(),
            ));
        }
        let m = Self::from_parts(alg, d, action);
        m.audit()?;
        Ok(m)
    }

    /// Unaudited constructor for actions that are representations by construction.
    pub(crate) fn from_parts(alg: &Arc<Algebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Self {
        Module(Arc::new(ModuleInner {
            alg: alg.clone(),
            dim,
            action,
            cover: OnceLock::new(),
            presentation: OnceLock::new(),
        }))
    }

    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        Self::from_parts(alg, 0, vec![Matrix::zeros(0, 0); alg.dim()])
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(alg: &Arc<Algebra<F>>) -> Self {
        Self::from_parts(alg, alg.dim(), alg.left_basis_matrices().to_vec())
    }

    /// Restriction of the left regular action to a left ideal.
    pub fn from_cyclic_ideal(ideal: &CyclicIdeal<F>) -> Result<Self> {
        if ideal.side() == Side::Right {
            return Err(Error::RightIdeal);
        }
        let reg = Module::regular(ideal.algebra());
        Ok(reg.submodule(ideal.basis())?.0)
    }

    /// Representation audit: unit acts as identity and structure constants
    /// are respected.
    pub fn audit(&self) -> Result<()> {
        let alg = &self.0.alg;
        if self.act(alg.unit()) != Matrix::identity(self.dim()) {
            return Err(Error::NotRepresentation(usize::MAX, usize::MAX));
        }
        let a = &self.0.action;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = a[i].mul(&a[j]);
                let mut rhs = Matrix::zeros(self.dim(), self.dim());
                for (k, c) in &alg.mult_table()[i][j] {
                    rhs.axpy(c, &a[*k]);
                }
                if lhs != rhs {
                    return Err(Error::NotRepresentation(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.0.alg
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_zero(&self) -> bool {
        self.0.dim == 0
    }

    pub fn action(&self) -> &[Matrix<F>] {
        &self.0.action
    }

    /// Matrix of `v -> a v`.
    pub fn act(&self, a: &[F]) -> Matrix<F> {
        combine_matrices(&self.0.action, a, self.dim())
    }

    /// `a v` without forming the matrix.
    pub fn act_on(&self, a: &[F], v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (c, m) in a.iter().zip(&self.0.action) {
            if c.is_zero() {
                continue;
            }
            let mv = m.mul_vec(v);
            for (o, x) in out.iter_mut().zip(&mv) {
                if !x.is_zero() {
                    o.add_assign(&c.mul(x));
                }
            }
        }
        out
    }

    pub fn same_algebra(&self, o: &Module<F>) -> Result<()> {
        self.0.alg.ensure_same(&o.0.alg)
    }

    pub fn is_invariant(&self, s: &Subspace<F>) -> bool {
        self.0
            .alg
            .generators()
            .iter()
            .map(|g| self.act(g))
            .all(|m| s.basis().iter().all(|v| s.contains(&m.mul_vec(v))))
    }

    /// The submodule on `s` in its canonical basis, with the inclusion matrix.
    pub fn submodule(&self, s: &Subspace<F>) -> Result<(Module<F>, Matrix<F>)> {
        if !self.is_invariant(s) {
            return Err(Error::Invalid("subspace is not a submodule".into()));
        }
        let incl = s.inclusion();
        let action = self
            .0
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<F>> = s
                    .basis()
                    .iter()
                    .map(|v| s.coordinates_unchecked(&m.mul_vec(v)))
                    .collect();
                Matrix::from_columns(&cols, s.dim())
            })
            .collect();
        Ok((Module::from_parts(&self.0.alg, s.dim(), action), incl))
    }

    /// `X / s` with the projection matrix.
    pub fn quotient(&self, s: &Subspace<F>) -> Result<(Module<F>, Matrix<F>)> {
        if !self.is_invariant(s) {
            return Err(Error::Invalid("subspace is not a submodule".into()));
        }
        let q = crate::linalg::Quotient::new(s.clone());
        let proj = q.projection();
        let action = self
            .0
            .action
            .iter()
            .map(|m| {
                let cols: Vec<Vec<F>> = (0..q.dim())
                    .map(|i| q.project(&m.mul_vec(&q.lift(i))))
                    .collect();
                Matrix::from_columns(&cols, q.dim())
            })
            .collect();
        Ok((Module::from_parts(&self.0.alg, q.dim(), action), proj))
    }

    pub fn direct_sum(alg: &Arc<Algebra<F>>, parts: &[Module<F>]) -> Result<Module<F>> {
        for p in parts {
            alg.ensure_same(p.algebra())?;
        }
        let dim = parts.iter().map(Module::dim).sum();
        let action = (0..alg.dim())
            .map(|i| {
                Matrix::block_diag(
                    &parts
                        .iter()
                        .map(|p| p.0.action[i].clone())
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        Ok(Module::from_parts(alg, dim, action))
    }

    /// `rad(A) X`, spanned by the images of the arrows.
    pub fn radical_space(&self) -> Result<Subspace<F>> {
        let mut s = Subspace::zero(self.dim());
        for a in self.0.alg.arrows()? {
            let m = self.act(&a);
            for c in m.columns() {
                s.insert(c);
            }
        }
        Ok(s)
    }

    /// Vectors killed by every arrow.
    pub fn socle_space(&self) -> Result<Subspace<F>> {
        let arrows = self.0.alg.arrows()?;
        if arrows.is_empty() || self.dim() == 0 {
            return Ok(Subspace::full(self.dim()));
        }
        let stacked = arrows
            .iter()
            .skip(1)
            .fold(self.act(&arrows[0]), |acc, a| acc.vstack(&self.act(a)));
        Ok(stacked.nullspace())
    }

    pub fn radical(&self) -> Result<Module<F>> {
        Ok(self.submodule(&self.radical_space()?)?.0)
    }

    pub fn top(&self) -> Result<Module<F>> {
        Ok(self.quotient(&self.radical_space()?)?.0)
    }

    pub fn socle(&self) -> Result<Module<F>> {
        Ok(self.submodule(&self.socle_space()?)?.0)
    }

    /// Minimal projective cover built from the supplied primitive idempotents.
    pub fn projective_cover(&self) -> Result<Arc<ProjectiveCover<F>>> {
        if let Some(c) = self.0.cover.get() {
            return Ok(c.clone());
        }
        let cover = Arc::new(ProjectiveCover::build(self)?);
        Ok(self.0.cover.get_or_init(|| cover).clone())
    }

    pub fn is_projective(&self) -> Result<bool> {
        Ok(self.projective_cover()?.kernel.is_zero())
    }

    pub fn is_injective(&self) -> Result<bool> {
        self.dual().is_projective()
    }

    /// `Ω X` as a module, with its inclusion into the cover.
    pub fn syzygy_with_inclusion(&self) -> Result<(Module<F>, Matrix<F>)> {
        let c = self.projective_cover()?;
        c.projective.submodule(&c.kernel)
    }

    pub fn syzygy(&self) -> Result<Module<F>> {
        Ok(self.syzygy_with_inclusion()?.0)
    }

    /// `Ω^1 X, ..., Ω^steps X`.
    pub fn syzygies(&self, steps: usize) -> Result<Vec<Module<F>>> {
        let mut out = Vec::with_capacity(steps);
        let mut cur = self.clone();
        for _ in 0..steps {
            cur = cur.syzygy()?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// `D X = Hom_k(X, k)` as a left module over the opposite algebra.
    pub fn dual(&self) -> Module<F> {
        let op = self.0.alg.opposite();
        Module::from_parts(
            &op,
            self.dim(),
            self.0.action.iter().map(Matrix::transpose).collect(),
        )
    }

    /// Injective envelope `X -> I` as `D` of the projective cover of `D X`.
    pub fn injective_hull(&self) -> Result<(Module<F>, Matrix<F>)> {
        let c = self.dual().projective_cover()?;
        Ok((c.projective.dual(), c.map.transpose()))
    }

    /// Cokernel of the injective envelope.
    pub fn cosyzygy(&self) -> Result<Module<F>> {
        let (i, emb) = self.injective_hull()?;
        Ok(i.quotient(&emb.column_space())?.0)
    }

    /// First `depth` terms `I^0, I^1, ...` of the minimal injective coresolution.
    /// Stops early when a cosyzygy vanishes.
    pub fn injective_coresolution(&self, depth: usize) -> Result<Vec<Module<F>>> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        for _ in 0..depth {
            if cur.is_zero() {
                break;
            }
            let (i, emb) = cur.injective_hull()?;
            let next = i.quotient(&emb.column_space())?.0;
            out.push(i);
            cur = next;
        }
        Ok(out)
    }

    pub(crate) fn presentation(&self) -> Result<Arc<Presentation<F>>> {
        if let Some(p) = self.0.presentation.get() {
            return Ok(p.clone());
        }
        let p = Arc::new(Presentation::build(self)?);
        Ok(self.0.presentation.get_or_init(|| p).clone())
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            algebra: self.0.alg.name().to_string(),
            dim: self.dim(),
            action: self
                .0
                .action
                .iter()
                .map(|m| m.flatten().iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn from_json(alg: &Arc<Algebra<F>>, j: &ModuleJson) -> Result<Self> {
        if j.algebra != alg.name() {
            return Err(Error::AlgebraMismatch(
                j.algebra.clone(),
                alg.name().to_string(),
            ));
        }
        let action = j
            .action
            .iter()
            .map(|m| {
                if m.len() != j.dim * j.dim {
                    return Err(Error::Invalid("action matrix has wrong size".into()));
                }
                let v = m
                    .iter()
                    .map(|s| F::parse_scalar(s))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Matrix::unflatten(&v, j.dim, j.dim))
            })
            .collect::<Result<Vec<_>>>()?;
        if action.is_empty() && alg.dim() > 0 {
            return Err(Error::Invalid("missing action matrices".into()));
        }
        Module::new(alg, action)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: String,
    pub dim: usize,
    /// One row-major matrix per algebra basis vector.
    pub action: Vec<Vec<String>>,
}

/// A module homomorphism.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub matrix: Matrix<F>,
}

impl<F: Field> ModuleMap<F> {
    /// Checks shape and that the matrix intertwines the actions.
    pub fn new(source: &Module<F>, target: &Module<F>, matrix: Matrix<F>) -> Result<Self> {
        source.same_algebra(target)?;
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(Error::Invalid("map matrix has wrong shape".into()));
        }
        if !is_intertwiner(source, target, &matrix) {
            return Err(Error::Invalid(
                "matrix does not commute with the action".into(),
            ));
        }
        Ok(ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn kernel(&self) -> Subspace<F> {
        self.matrix.nullspace()
    }

    pub fn image(&self) -> Subspace<F> {
        self.matrix.column_space()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap<F>) -> Result<ModuleMap<F>> {
        if next.source.dim() != self.target.dim() {
            return Err(Error::Invalid("maps are not composable".into()));
        }
        Ok(ModuleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: next.matrix.mul(&self.matrix),
        })
    }
}

pub fn is_intertwiner<F: Field>(x: &Module<F>, y: &Module<F>, m: &Matrix<F>) -> bool {
    x.algebra()
        .generators()
        .iter()
        .all(|g| y.act(g).mul(m) == m.mul(&x.act(g)))
}

/// `P = ⊕ A e_{v_k}` mapping onto `X`, with `e_{v_k} ↦ x_k`.
pub struct ProjectiveCover<F: Field> {
    pub projective: Module<F>,
    /// Vertex (idempotent index) of each summand.
    pub vertices: Vec<usize>,
    /// Start of each summand in the basis of `P`.
    pub offsets: Vec<usize>,
    /// `dim X x dim P`.
    pub map: Matrix<F>,
    /// Images `x_k` of the summand generators.
    pub generators: Vec<Vec<F>>,
    pub kernel: Subspace<F>,
    solver: LinearSolver<F>,
}

impl<F: Field> ProjectiveCover<F> {
    fn build(x: &Module<F>) -> Result<Self> {
        let alg = x.algebra();
        let idems = alg.idempotents()?;
        let rad = x.radical_space()?;
        let mut span = rad.clone();
        let mut vertices = Vec::new();
        let mut generators = Vec::new();
        for (v, e) in idems.iter().enumerate() {
            let ex = x.act(e).column_space();
            for g in ex.basis() {
                if span.insert(g.clone()) {
                    vertices.push(v);
                    generators.push(g.clone());
                }
            }
        }
        if span.dim() != x.dim() {
            return Err(Error::Internal(
                "top is not generated by the idempotent pieces".into(),
            ));
        }
        Self::from_generators(x, vertices, generators)
    }

    /// Cover from chosen generators `x_k ∈ e_{v_k} X`.
    pub fn from_generators(
        x: &Module<F>,
        vertices: Vec<usize>,
        generators: Vec<Vec<F>>,
    ) -> Result<Self> {
        let alg = x.algebra();
        let projs = alg.indecomposable_projectives()?;
        let parts: Vec<Module<F>> = vertices
            .iter()
            .map(|&v| Module::from_parts(alg, projs[v].basis.dim(), projs[v].action.to_vec()))
            .collect();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for p in &parts {
            offsets.push(acc);
            acc += p.dim();
        }
        let projective = Module::direct_sum(alg, &parts)?;
        let mut cols = Vec::with_capacity(acc);
        for (&v, g) in vertices.iter().zip(&generators) {
            for b in projs[v].basis.basis() {
                cols.push(x.act_on(b, g));
            }
        }
        let map = Matrix::from_columns(&cols, x.dim());
        if map.rank() != x.dim() {
            return Err(Error::Internal("cover map is not surjective".into()));
        }
        let kernel = map.nullspace();
        let solver = LinearSolver::new(&map);
        Ok(ProjectiveCover {
            projective,
            vertices,
            offsets,
            map,
            generators,
            kernel,
            solver,
        })
    }

    /// The summand generator `e_{v_k}` as a vector of `P`.
    pub fn generator_in_projective(&self, k: usize, alg: &Algebra<F>) -> Result<Vec<F>> {
        let projs = alg.indecomposable_projectives()?;
        let mut v = vec![F::zero(); self.projective.dim()];
        for (i, c) in projs[self.vertices[k]].generator.iter().enumerate() {
            v[self.offsets[k] + i] = c.clone();
        }
        Ok(v)
    }

    /// Preimage of `x` under the cover map.
    pub fn preimage(&self, x: &[F]) -> Option<Vec<F>> {
        self.solver.solve(x)
    }

    /// The module map `P -> Y` sending generator `k` to `images[k]`, which
    /// must lie in `e_{v_k} Y`.
    pub fn map_from(&self, y: &Module<F>, images: &[Vec<F>]) -> Result<Matrix<F>> {
        let alg = y.algebra();
        let projs = alg.indecomposable_projectives()?;
        let mut cols = Vec::with_capacity(self.projective.dim());
        for (&v, img) in self.vertices.iter().zip(images) {
            for b in projs[v].basis.basis() {
                cols.push(y.act_on(b, img));
            }
        }
        Ok(Matrix::from_columns(&cols, y.dim()))
    }

    /// Component of a vector of `P` in summand `k`, as an algebra element.
    pub fn component(&self, k: usize, p: &[F], alg: &Algebra<F>) -> Result<Vec<F>> {
        let projs = alg.indecomposable_projectives()?;
        let basis = &projs[self.vertices[k]].basis;
        Ok(basis.combine(&p[self.offsets[k]..self.offsets[k] + basis.dim()]))
    }

    /// A right inverse of the cover map, `dim P x dim X`.
    fn section(&self) -> Result<Matrix<F>> {
        let n = self.map.nrows();
        let cols = (0..n)
            .map(|i| {
                let mut e = vec![F::zero(); n];
                e[i] = F::one();
                self.preimage(&e)
                    .ok_or_else(|| Error::Internal("cover map is not surjective".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&cols, self.projective.dim()))
    }
}

/// Generators and relations: `X = P / K` with the top of `K` listed as
/// algebra-element tuples.
pub(crate) struct Presentation<F: Field> {
    cover: Arc<ProjectiveCover<F>>,
    section: Matrix<F>,
    /// `relations[l][k]` is the coefficient of generator `k` in relation `l`.
    relations: Vec<Vec<Vec<F>>>,
}

impl<F: Field> Presentation<F> {
    fn build(x: &Module<F>) -> Result<Self> {
        let alg = x.algebra();
        let cover = x.projective_cover()?;
        let section = cover.section()?;
        let p = &cover.projective;
        let k = &cover.kernel;
        // rad K = span of arrows applied to K
        let mut span = Subspace::zero(p.dim());
        for a in alg.arrows()? {
            let m = p.act(&a);
            for v in k.basis() {
                span.insert(m.mul_vec(v));
            }
        }
        let mut relations = Vec::new();
        for v in k.basis() {
            if span.insert(v.clone()) {
                let rel = (0..cover.vertices.len())
                    .map(|i| cover.component(i, v, alg))
                    .collect::<Result<Vec<_>>>()?;
                relations.push(rel);
            }
        }
        Ok(Presentation {
            cover,
            section,
            relations,
        })
    }
}

/// Basis of `Hom(X, Y)` in canonical (row-reduced, row-major flattened) form.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    source_dim: usize,
    target_dim: usize,
    space: Subspace<F>,
}

impl<F: Field> HomSpace<F> {
    pub fn from_maps(
        source_dim: usize,
        target_dim: usize,
        maps: impl IntoIterator<Item = Matrix<F>>,
    ) -> Self {
        HomSpace {
            source_dim,
            target_dim,
            space: Subspace::from_vectors(
                source_dim * target_dim,
                maps.into_iter().map(|m| m.flatten()),
            ),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn map(&self, i: usize) -> Matrix<F> {
        Matrix::unflatten(&self.space.basis()[i], self.target_dim, self.source_dim)
    }

    pub fn maps(&self) -> Vec<Matrix<F>> {
        (0..self.dim()).map(|i| self.map(i)).collect()
    }

    pub fn contains(&self, m: &Matrix<F>) -> bool {
        self.space.contains(&m.flatten())
    }

    pub fn coordinates(&self, m: &Matrix<F>) -> Option<Vec<F>> {
        self.space.coordinates(&m.flatten())
    }

    pub fn combine(&self, coords: &[F]) -> Matrix<F> {
        Matrix::unflatten(
            &self.space.combine(coords),
            self.target_dim,
            self.source_dim,
        )
    }
}

/// `Hom(X, Y)` by solving for the images of the cover generators subject
/// to the relations of `X`.
pub fn hom_space<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<HomSpace<F>> {
    x.same_algebra(y)?;
    if x.is_zero() || y.is_zero() {
        return Ok(HomSpace::from_maps(x.dim(), y.dim(), []));
    }
    let alg = x.algebra();
    let pres = x.presentation()?;
    let cover = &pres.cover;
    let idems = alg.idempotents()?;
    // parametrize y_k ∈ e_{v_k} Y
    let pieces: Vec<Matrix<F>> = cover
        .vertices
        .iter()
        .map(|&v| y.act(&idems[v]).column_space().inclusion())
        .collect();
    let widths: Vec<usize> = pieces.iter().map(Matrix::ncols).collect();
    let unknowns: usize = widths.iter().sum();
    if unknowns == 0 {
        return Ok(HomSpace::from_maps(x.dim(), y.dim(), []));
    }
    let mut rows: Vec<Vec<F>> = Vec::new();
    for rel in &pres.relations {
        let mut block = Matrix::zeros(y.dim(), 0);
        for (k, a) in rel.iter().enumerate() {
            let part = if a.iter().all(F::is_zero) {
                Matrix::zeros(y.dim(), widths[k])
            } else {
                y.act(a).mul(&pieces[k])
            };
            block = block.hstack(&part);
        }
        rows.extend(
            block
                .into_rows()
                .into_iter()
                .filter(|r| r.iter().any(|c| !c.is_zero())),
        );
    }
    let sols = if rows.is_empty() {
        Subspace::full(unknowns)
    } else {
        Matrix::from_rows(rows, unknowns).nullspace()
    };
    let maps = sols.basis().iter().map(|t| {
        let mut at = 0;
        let images: Vec<Vec<F>> = pieces
            .iter()
            .map(|p| {
                let w = p.ncols();
                let img = p.mul_vec(&t[at..at + w]);
                at += w;
                img
            })
            .collect();
        let phi = cover
            .map_from(y, &images)
            .expect("indecomposable projectives are cached");
        phi.mul(&pres.section)
    });
    Ok(HomSpace::from_maps(
        x.dim(),
        y.dim(),
        maps.collect::<Vec<_>>(),
    ))
}

/// `Hom(X, Y)` as the common kernel of the commutation constraints with the
/// algebra generators. Slower; used as an independent cross-check.
pub fn hom_space_intertwiner<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<HomSpace<F>> {
    x.same_algebra(y)?;
    let (dx, dy) = (x.dim(), y.dim());
    if dx == 0 || dy == 0 {
        return Ok(HomSpace::from_maps(dx, dy, []));
    }
    let mut rows = Vec::new();
    for g in x.algebra().generators() {
        let ax = x.act(&g);
        let ay = y.act(&g);
        for r in 0..dy {
            for c in 0..dx {
                // (ay M - M ax)[r][c]
                let mut row = vec![F::zero(); dx * dy];
                for s in 0..dy {
                    let v = ay.get(r, s);
                    if !v.is_zero() {
                        row[s * dx + c].add_assign(v);
                    }
                }
                for s in 0..dx {
                    let v = ax.get(s, c);
                    if !v.is_zero() {
                        row[r * dx + s].sub_assign(v);
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sols = if rows.is_empty() {
        Subspace::full(dx * dy)
    } else {
        Matrix::from_rows(rows, dx * dy).nullspace()
    };
    Ok(HomSpace {
        source_dim: dx,
        target_dim: dy,
        space: sols,
    })
}
