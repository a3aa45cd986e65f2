//! Minimal projective resolutions, `Ext` as a quotient of `Hom(Ω^i X, Y)`,
//! Yoneda products by lifting, and Φ-Auslander-Yoneda algebras.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, AlgebraData, MultTable};
use crate::error::{Error, Result};
use crate::linalg::{CosetSpace, Matrix, Subspace};
use crate::module::{hom_space, HomSpace, Module, ProjectiveCover};
use crate::scalar::Field;

/// Exhaustive check: `0 ∈ S`, and for `p, q, r ∈ S` with `p+q+r ∈ S`,
/// `p+q ∈ S` iff `q+r ∈ S`.
pub fn is_admissible(s: &[u32]) -> bool {
    let set: BTreeSet<u64> = s.iter().map(|&x| x as u64).collect();
    if !set.contains(&0) {
        return false;
    }
    for &p in &set {
        for &q in &set {
            for &r in &set {
                if set.contains(&(p + q + r)) && set.contains(&(p + q)) != set.contains(&(q + r)) {
                    return false;
                }
            }
        }
    }
    true
}

/// A validated admissible set, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AdmissibleSet(Vec<u32>);

impl AdmissibleSet {
    pub fn new(mut elems: Vec<u32>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        if !is_admissible(&elems) {
            return Err(Error::NotAdmissible(elems));
        }
        Ok(AdmissibleSet(elems))
    }

    /// Parses `"0,1,27"`.
    pub fn parse(s: &str) -> Result<Self> {
        let elems = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad element {t:?} in set {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(elems)
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max(&self) -> u32 {
        *self.0.last().expect("admissible sets contain 0")
    }
}

impl std::fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `P^i -> Ω^i X` with `Ω^{i+1} X ⊆ P^i`.
pub struct Stage<F: Field> {
    pub cover: Arc<ProjectiveCover<F>>,
    /// `Ω^{i+1} X`.
    pub next: Module<F>,
    /// Inclusion `Ω^{i+1} X -> P^i`.
    pub inclusion: Matrix<F>,
}

/// Minimal projective resolution, extended on demand.
pub struct Resolution<F: Field> {
    module: Module<F>,
    stages: RwLock<Vec<Arc<Stage<F>>>>,
}

impl<F: Field> Resolution<F> {
    pub fn new(module: Module<F>) -> Self {
        Resolution {
            module,
            stages: RwLock::new(Vec::new()),
        }
    }

    pub fn module(&self) -> &Module<F> {
        &self.module
    }

    /// Computes stages `0..depth`.
    pub fn ensure(&self, depth: usize) -> Result<()> {
        if self.stages.read().expect("lock").len() >= depth {
            return Ok(());
        }
        let mut st = self.stages.write().expect("lock");
        while st.len() < depth {
            let cur = st
                .last()
                .map_or_else(|| self.module.clone(), |s| s.next.clone());
            let cover = cur.projective_cover()?;
            let (next, inclusion) = cover.projective.submodule(&cover.kernel)?;
            st.push(Arc::new(Stage {
                cover,
                next,
                inclusion,
            }));
        }
        Ok(())
    }

    pub fn stage(&self, i: usize) -> Result<Arc<Stage<F>>> {
        self.ensure(i + 1)?;
        Ok(self.stages.read().expect("lock")[i].clone())
    }

    /// `Ω^i X`, with `Ω^0 X = X`.
    pub fn omega(&self, i: usize) -> Result<Module<F>> {
        if i == 0 {
            return Ok(self.module.clone());
        }
        Ok(self.stage(i - 1)?.next.clone())
    }

    /// Dimensions of `P^0, ..., P^{depth-1}`.
    pub fn projective_dims(&self, depth: usize) -> Result<Vec<usize>> {
        (0..depth)
            .map(|i| Ok(self.stage(i)?.cover.projective.dim()))
            .collect()
    }

    /// The `g: Ω^a X -> Ω^b Y` lifted one step to `Ω^{a+1} X -> Ω^{b+1} Y`.
    /// A nonzero `variant` perturbs the chosen chain lift by a map into the
    /// kernel, giving a different but equally valid lift.
    pub fn lift_step(
        &self,
        a: usize,
        other: &Resolution<F>,
        b: usize,
        g: &Matrix<F>,
        variant: u64,
    ) -> Result<Matrix<F>> {
        let sx = self.stage(a)?;
        let sy = other.stage(b)?;
        let (cx, cy) = (&sx.cover, &sy.cover);
        let py = &cy.projective;
        let alg = py.algebra().clone();
        let idems = alg.idempotents()?;
        let images = cx
            .generators
            .iter()
            .zip(&cx.vertices)
            .enumerate()
            .map(|(k, (x, &v))| {
                let t = g.mul_vec(x);
                let p = cy.preimage(&t).ok_or_else(|| {
                    Error::Internal("cover of the target is not surjective".into())
                })?;
                let mut p = py.act_on(&idems[v], &p);
                if variant != 0 && !cy.kernel.is_zero() {
                    let kappa = &cy.kernel.basis()[(variant as usize + k) % cy.kernel.dim()];
                    let shift = py.act_on(&idems[v], kappa);
                    let c = F::from_i64(variant as i64);
                    for (x, s) in p.iter_mut().zip(&shift) {
                        x.add_assign(&c.mul(s));
                    }
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        let lift = cx.map_from(py, &images)?;
        debug_assert_eq!(
            cy.map.mul(&lift),
            g.mul(&cx.map),
            "chain lift does not commute"
        );
        let restricted = lift.mul(&sx.inclusion);
        let cols = restricted
            .columns()
            .iter()
            .map(|c| {
                cy.kernel
                    .coordinates(c)
                    .ok_or_else(|| Error::Internal("lift does not land in the syzygy".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&cols, sy.next.dim()))
    }

    /// `Ω^j(f): Ω^{i+j} X -> Ω^j Y` for `f: Ω^i X -> Y`.
    pub fn lift_map(
        &self,
        i: usize,
        other: &Resolution<F>,
        f: &Matrix<F>,
        j: usize,
        variant: u64,
    ) -> Result<Matrix<F>> {
        let mut g = f.clone();
        for step in 0..j {
            g = self.lift_step(i + step, other, step, &g, variant)?;
        }
        Ok(g)
    }
}

/// `Ext^i(X, Y) = Hom(Ω^i X, Y) / (maps factoring through P^{i-1})`.
#[derive(Clone, Debug)]
pub struct ExtSpace<F: Field> {
    pub degree: usize,
    hom: HomSpace<F>,
    coset: CosetSpace<F>,
}

impl<F: Field> ExtSpace<F> {
    pub fn new(res: &Resolution<F>, y: &Module<F>, degree: usize) -> Result<Self> {
        let om = res.omega(degree)?;
        let hom = hom_space(&om, y)?;
        let n = om.dim() * y.dim();
        let mut factoring = Subspace::zero(n);
        if degree > 0 && n > 0 {
            let st = res.stage(degree - 1)?;
            let idems = y.algebra().idempotents()?;
            let cov = &st.cover;
            for (k, &v) in cov.vertices.iter().enumerate() {
                for img in y.act(&idems[v]).column_space().basis() {
                    let mut images = vec![vec![F::zero(); y.dim()]; cov.vertices.len()];
                    images[k] = img.clone();
                    let h = cov.map_from(y, &images)?;
                    factoring.insert(h.mul(&st.inclusion).flatten());
                }
            }
        }
        let coset = CosetSpace::new(hom.space().clone(), factoring);
        Ok(ExtSpace { degree, hom, coset })
    }

    pub fn dim(&self) -> usize {
        self.coset.dim()
    }

    pub fn hom(&self) -> &HomSpace<F> {
        &self.hom
    }

    pub fn factoring_dim(&self) -> usize {
        self.coset.denominator().dim()
    }

    pub fn representative(&self, k: usize) -> Matrix<F> {
        Matrix::unflatten(
            self.coset.representative(k),
            self.hom.target_dim(),
            self.hom.source_dim(),
        )
    }

    pub fn combine(&self, coords: &[F]) -> Matrix<F> {
        Matrix::unflatten(
            &self.coset.combine(coords),
            self.hom.target_dim(),
            self.hom.source_dim(),
        )
    }

    /// Class of a homomorphism `Ω^i X -> Y`.
    pub fn coordinates(&self, m: &Matrix<F>) -> Option<Vec<F>> {
        self.coset.coordinates(&m.flatten())
    }
}

/// A class in `Ext^degree(X_source, X_target)` of an [`ExtContext`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass<F> {
    pub source: usize,
    pub target: usize,
    pub degree: usize,
    pub coords: Vec<F>,
}

/// Ext spaces and Yoneda products among a fixed list of modules.
pub struct ExtContext<F: Field> {
    algebra: Arc<Algebra<F>>,
    modules: Vec<Module<F>>,
    resolutions: Vec<Resolution<F>>,
    cache: RwLock<HashMap<(usize, usize, usize), Arc<ExtSpace<F>>>>,
}

impl<F: Field> ExtContext<F> {
    pub fn new(algebra: &Arc<Algebra<F>>, modules: Vec<Module<F>>) -> Result<Self> {
        for m in &modules {
            algebra.ensure_same(m.algebra())?;
        }
        Ok(ExtContext {
            algebra: algebra.clone(),
            resolutions: modules.iter().cloned().map(Resolution::new).collect(),
            modules,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn modules(&self) -> &[Module<F>] {
        &self.modules
    }

    pub fn resolution(&self, s: usize) -> &Resolution<F> {
        &self.resolutions[s]
    }

    pub fn ext(&self, s: usize, t: usize, i: usize) -> Result<Arc<ExtSpace<F>>> {
        if let Some(e) = self.cache.read().expect("lock").get(&(s, t, i)) {
            return Ok(e.clone());
        }
        let n = self.modules.len();
        if s >= n || t >= n {
            return Err(Error::Invalid(format!(
                "module index ({s}, {t}) out of range for {n} modules"
            )));
        }
        let e = Arc::new(ExtSpace::new(&self.resolutions[s], &self.modules[t], i)?);
        Ok(self
            .cache
            .write()
            .expect("lock")
            .entry((s, t, i))
            .or_insert(e)
            .clone())
    }

    pub fn dim(&self, s: usize, t: usize, i: usize) -> Result<usize> {
        Ok(self.ext(s, t, i)?.dim())
    }

    /// Computes the listed spaces in parallel.
    pub fn prefetch(&self, keys: &[(usize, usize, usize)]) -> Result<()> {
        for s in keys.iter().map(|k| k.0).collect::<BTreeSet<_>>() {
            let depth = keys
                .iter()
                .filter(|k| k.0 == s)
                .map(|k| k.2)
                .max()
                .unwrap_or(0);
            self.resolutions[s].ensure(depth)?;
        }
        keys.par_iter()
            .try_for_each(|&(s, t, i)| self.ext(s, t, i).map(|_| ()))
    }

    /// `Ω^v` of the representative of `a`, landing in `Ω^v X_target`.
    pub fn lifted(&self, a: &ExtClass<F>, v: usize, variant: u64) -> Result<Matrix<F>> {
        let f = self.ext(a.source, a.target, a.degree)?.combine(&a.coords);
        self.resolutions[a.source].lift_map(a.degree, &self.resolutions[a.target], &f, v, variant)
    }

    /// `a` followed by `b`: the class of `g ∘ Ω^v(f)`.
    pub fn yoneda(&self, a: &ExtClass<F>, b: &ExtClass<F>) -> Result<ExtClass<F>> {
        self.yoneda_with(a, b, 0)
    }

    pub fn yoneda_with(
        &self,
        a: &ExtClass<F>,
        b: &ExtClass<F>,
        variant: u64,
    ) -> Result<ExtClass<F>> {
        if a.target != b.source {
            return Err(Error::Invalid("classes are not composable".into()));
        }
        let lifted = self.lifted(a, b.degree, variant)?;
        let g = self.ext(b.source, b.target, b.degree)?.combine(&b.coords);
        self.class_of(a.source, b.target, a.degree + b.degree, &g.mul(&lifted))
    }

    fn class_of(&self, s: usize, t: usize, i: usize, m: &Matrix<F>) -> Result<ExtClass<F>> {
        let coords = self
            .ext(s, t, i)?
            .coordinates(m)
            .ok_or_else(|| Error::Internal("composite is not a homomorphism".into()))?;
        Ok(ExtClass {
            source: s,
            target: t,
            degree: i,
            coords,
        })
    }

    pub fn basis_class(&self, s: usize, t: usize, i: usize, k: usize) -> Result<ExtClass<F>> {
        let d = self.dim(s, t, i)?;
        let mut coords = vec![F::zero(); d];
        coords[k] = F::one();
        Ok(ExtClass {
            source: s,
            target: t,
            degree: i,
            coords,
        })
    }

    pub fn identity_class(&self, s: usize) -> Result<ExtClass<F>> {
        self.class_of(s, s, 0, &Matrix::identity(self.modules[s].dim()))
    }
}

/// Basis element of an E^Φ algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct YonedaBasisLabel {
    pub source: usize,
    pub target: usize,
    pub degree: usize,
    pub index: usize,
}

pub struct YonedaAlgebraBuild<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub phi: AdmissibleSet,
    pub labels: Vec<YonedaBasisLabel>,
}

/// `E^Φ(X) = ⊕_{i∈Φ} Ext^i(X, X)` for `X = ⊕ modules`, with block `(s, t)`
/// holding `Ext(X_s, X_t)` and the product of `a` then `b` given by the
/// Yoneda composite when the total degree lies in Φ.
pub fn build_phi_yoneda_algebra<F: Field>(
    ctx: &ExtContext<F>,
    phi: &AdmissibleSet,
    name: &str,
) -> Result<YonedaAlgebraBuild<F>> {
    let n = ctx.modules().len();
    let degs: Vec<usize> = phi.elements().iter().map(|&d| d as usize).collect();
    let mut keys = Vec::new();
    for s in 0..n {
        for t in 0..n {
            keys.extend(degs.iter().map(|&d| (s, t, d)));
        }
    }
    ctx.prefetch(&keys)?;
    // lifts of degree u classes go through depth u + max(Φ)
    for s in 0..n {
        ctx.resolution(s).ensure(2 * phi.max() as usize + 1)?;
    }
    let mut labels = Vec::new();
    let mut offset = HashMap::new();
    for &(s, t, d) in &keys {
        offset.insert((s, t, d), labels.len());
        for index in 0..ctx.dim(s, t, d)? {
            labels.push(YonedaBasisLabel {
                source: s,
                target: t,
                degree: d,
                index,
            });
        }
    }
    let dim = labels.len();
    let mult: MultTable<F> = labels
        .par_iter()
        .map(|a| {
            let mut row = vec![Vec::new(); dim];
            let ca = ctx.basis_class(a.source, a.target, a.degree, a.index)?;
            for &v in &degs {
                let total = a.degree + v;
                if !phi.contains(total as u32) {
                    continue;
                }
                let lifted = ctx.lifted(&ca, v, 0)?;
                for w in 0..n {
                    let target = ctx.ext(a.source, w, total)?;
                    let gspace = ctx.ext(a.target, w, v)?;
                    for k in 0..gspace.dim() {
                        let g = gspace.representative(k);
                        let c = target.coordinates(&g.mul(&lifted)).ok_or_else(|| {
                            Error::Internal("Yoneda composite is not a homomorphism".into())
                        })?;
                        let base = offset[&(a.source, w, total)];
                        row[offset[&(a.target, w, v)] + k] = c
                            .into_iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .map(|(i, x)| (base + i, x))
                            .collect();
                    }
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let mut idempotents = Vec::new();
    let mut unit = vec![F::zero(); dim];
    for s in 0..n {
        if ctx.modules()[s].is_zero() {
            continue;
        }
        let id = ctx.identity_class(s)?;
        let mut e = vec![F::zero(); dim];
        let base = offset[&(s, s, 0)];
        for (i, c) in id.coords.into_iter().enumerate() {
            unit[base + i].add_assign(&c);
            e[base + i] = c;
        }
        idempotents.push(e);
    }
    let algebra = Algebra::new(AlgebraData {
        name: name.to_string(),
        basis_labels: labels
            .iter()
            .map(|l| format!("({},{},{},{})", l.source, l.target, l.degree, l.index))
            .collect(),
        unit,
        mult,
        idempotents: Some(idempotents),
        grading: Some(labels.iter().map(|l| l.degree as i64).collect()),
        parameter: ctx.algebra().parameter().cloned(),
    })?;
    Ok(YonedaAlgebraBuild {
        algebra,
        phi: phi.clone(),
        labels,
    })
}

/// `dim Ext^i(X_s, X_t)` for every listed pair and degree.
pub fn ext_table<F: Field>(
    ctx: &ExtContext<F>,
    pairs: &[(usize, usize)],
    degrees: &[usize],
) -> Result<Vec<Vec<usize>>> {
    let keys: Vec<_> = pairs
        .iter()
        .flat_map(|&(s, t)| degrees.iter().map(move |&i| (s, t, i)))
        .collect();
    ctx.prefetch(&keys)?;
    pairs
        .iter()
        .map(|&(s, t)| degrees.iter().map(|&i| ctx.dim(s, t, i)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::{ctx as ls, ideal_module};
    use crate::scalar::Rational;
    use proptest::prelude::*;

    fn family(
        lo: i64,
        hi: i64,
    ) -> (
        crate::quantum_exterior::QuantumExterior<Rational>,
        ExtContext<Rational>,
    ) {
        let c = ls();
        let ms = (lo..=hi).map(|j| ideal_module(&c, j)).collect();
        let e = ExtContext::new(c.algebra(), ms).unwrap();
        (c, e)
    }

    #[test]
    fn admissible_examples() {
        assert!(is_admissible(&[0]));
        for a in 1..20 {
            assert!(is_admissible(&[0, a]));
        }
        assert!(is_admissible(&[0, 1, 27]));
        assert!(!is_admissible(&[0, 1, 2, 4]));
        assert!(!is_admissible(&[1, 2]));
        assert!(AdmissibleSet::parse("1,0").unwrap().contains(1));
        assert!(matches!(
            AdmissibleSet::parse("0,1,2,4"),
            Err(Error::NotAdmissible(_))
        ));
        assert!(AdmissibleSet::parse("0,x").is_err());
    }

    #[test]
    fn ext_one_band() {
        let (_, e) = family(-3, 3);
        for j in 0..7 {
            for i in 0..7 {
                let d = e.dim(j, i, 1).unwrap();
                assert_eq!(
                    d,
                    usize::from(j <= i && i <= j + 3),
                    "j={} i={}",
                    j as i64 - 3,
                    i as i64 - 3
                );
                assert_eq!(
                    e.dim(j, i, 0).unwrap(),
                    hom_space(&e.modules()[j], &e.modules()[i]).unwrap().dim()
                );
            }
        }
    }

    #[test]
    fn projective_first_argument() {
        let c = ls();
        let reg = Module::regular(c.algebra());
        let e = ExtContext::new(c.algebra(), vec![reg, ideal_module(&c, 0)]).unwrap();
        for i in 1..4 {
            assert_eq!(e.dim(0, 1, i).unwrap(), 0);
            assert_eq!(e.dim(0, 0, i).unwrap(), 0);
        }
    }

    #[test]
    fn dimension_shift() {
        let (_, e) = family(-1, 4);
        // Ω I_j = I_{j+1}: Ext^{i+1}(I_j, Y) = Ext^i(I_{j+1}, Y)
        for y in 0..6 {
            for i in 1..3 {
                for j in 0..5 {
                    assert_eq!(e.dim(j, y, i + 1).unwrap(), e.dim(j + 1, y, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn yoneda_of_degree_one_classes() {
        let (_, e) = family(0, 2);
        let a = e.basis_class(0, 1, 1, 0).unwrap();
        let b = e.basis_class(1, 2, 1, 0).unwrap();
        assert_eq!(e.dim(0, 2, 2).unwrap(), 1);
        let p = e.yoneda(&a, &b).unwrap();
        assert_eq!(p.degree, 2);
        let q = e.yoneda_with(&a, &b, 3).unwrap();
        assert_eq!(p, q);
        let id = e.identity_class(0).unwrap();
        assert_eq!(e.yoneda(&id, &a).unwrap(), a);
        assert_eq!(e.yoneda(&a, &e.identity_class(1).unwrap()).unwrap(), a);
    }

    #[test]
    fn lift_commutes() {
        let (_, e) = family(0, 1);
        let f = e.ext(0, 1, 1).unwrap().representative(0);
        for v in [0, 1, 5] {
            let g = e
                .resolution(0)
                .lift_map(1, e.resolution(1), &f, 2, v)
                .unwrap();
            assert_eq!(g.ncols(), e.resolution(0).omega(3).unwrap().dim());
            assert_eq!(g.nrows(), e.resolution(1).omega(2).unwrap().dim());
            assert!(crate::module::is_intertwiner(
                &e.resolution(0).omega(3).unwrap(),
                &e.resolution(1).omega(2).unwrap(),
                &g
            ));
        }
    }

    #[test]
    fn degree_zero_is_endomorphism_algebra() {
        let c = ls();
        let alg = c.algebra();
        let ms = vec![
            Module::regular(alg),
            ideal_module(&c, 0),
            ideal_module(&c, 5),
        ];
        let e = ExtContext::new(alg, ms).unwrap();
        let b = build_phi_yoneda_algebra(&e, &AdmissibleSet::new(vec![0]).unwrap(), "E").unwrap();
        assert_eq!(b.algebra.dim(), 34);
        assert_eq!(
            b.algebra.cartan_matrix().unwrap(),
            vec![vec![8, 4, 4], vec![4, 3, 2], vec![4, 2, 3]]
        );
        let b1 =
            build_phi_yoneda_algebra(&e, &AdmissibleSet::new(vec![0, 1]).unwrap(), "E").unwrap();
        assert_eq!(b1.algebra.dim(), 36);
        let reg = ExtContext::new(alg, vec![Module::regular(alg)]).unwrap();
        let ba = build_phi_yoneda_algebra(&reg, &AdmissibleSet::new(vec![0, 1, 2]).unwrap(), "E")
            .unwrap();
        assert_eq!(ba.algebra.dim(), 8);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn yoneda_is_associative_and_lift_independent(
            s in 0usize..3, t in 0usize..3, w in 0usize..3, z in 0usize..3,
            u in 0usize..2, v in 0usize..2, x in 0usize..2, variant in 1u64..5,
        ) {
            let (_, e) = family(0, 2);
            let pick = |a: usize, b: usize, d: usize| -> Option<ExtClass<Rational>> {
                let dim = e.dim(a, b, d).unwrap();
                (dim > 0).then(|| {
                    let coords = (0..dim).map(|k| Rational::from_i64(k as i64 + 1)).collect();
                    ExtClass { source: a, target: b, degree: d, coords }
                })
            };
            if let (Some(a), Some(b), Some(c)) = (pick(s, t, u), pick(t, w, v), pick(w, z, x)) {
                let ab = e.yoneda(&a, &b).unwrap();
                prop_assert_eq!(&ab, &e.yoneda_with(&a, &b, variant).unwrap());
                let left = e.yoneda(&ab, &c).unwrap();
                let right = e.yoneda(&a, &e.yoneda(&b, &c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }
        }
    }
}
