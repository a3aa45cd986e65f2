//! Dominant dimension, the Nakayama functor, minimal Wedderburn projectives
//! and D-split sequences.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::ext::ExtContext;
use crate::iso::{in_add, same_add};
use crate::linalg::{Matrix, Subspace};
use crate::module::{hom_space, Module, ModuleMap};
use crate::scalar::Field;

/// A dimension that may only be bounded below by the search cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bounded {
    Exact(usize),
    AtLeast(usize),
}

impl std::fmt::Display for Bounded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bounded::Exact(n) => write!(f, "{n}"),
            Bounded::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

/// Number of leading projective terms in the minimal injective
/// coresolution of the regular module.
pub fn dominant_dimension<F: Field>(alg: &Arc<Algebra<F>>, cap: usize) -> Result<Bounded> {
    let mut cur = Module::regular(alg);
    for n in 0..cap {
        if cur.is_zero() {
            return Ok(Bounded::AtLeast(cap));
        }
        let (i, emb) = cur.injective_hull()?;
        if !i.is_projective()? {
            return Ok(Bounded::Exact(n));
        }
        cur = i.quotient(&emb.column_space())?.0;
    }
    Ok(Bounded::AtLeast(cap))
}

/// `A e_v` for every vertex.
pub fn indecomposable_projective_modules<F: Field>(
    alg: &Arc<Algebra<F>>,
) -> Result<Vec<Module<F>>> {
    Ok(alg
        .indecomposable_projectives()?
        .iter()
        .map(|p| Module::from_parts(alg, p.basis.dim(), p.action.to_vec()))
        .collect())
}

/// Vertices whose indecomposable projective is also injective.
pub fn projective_injective_vertices<F: Field>(alg: &Arc<Algebra<F>>) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (v, p) in indecomposable_projective_modules(alg)?.iter().enumerate() {
        if p.is_injective()? {
            out.push(v);
        }
    }
    Ok(out)
}

/// `Hom(W, A)` as a left module over the opposite algebra, via
/// `(f · a)(w) = f(w) a`.
pub fn hom_to_regular<F: Field>(w: &Module<F>) -> Result<Module<F>> {
    let alg = w.algebra();
    let h = hom_space(w, &Module::regular(alg))?;
    let maps = h.maps();
    let right = alg.right_basis_matrices();
    let action = right
        .iter()
        .map(|r| {
            let cols = maps
                .iter()
                .map(|f| {
                    h.coordinates(&r.mul(f)).ok_or_else(|| {
                        Error::Internal("hom space not closed under the right action".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(&cols, h.dim()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Module::from_parts(&alg.opposite(), h.dim(), action))
}

/// Nakayama functor `ν W = D Hom(W, A)`.
pub fn nakayama<F: Field>(w: &Module<F>) -> Result<Module<F>> {
    Ok(hom_to_regular(w)?.dual())
}

/// `add(ν W) = add(I^0 ⊕ I^1)` for the first two terms of the minimal
/// injective coresolution of the regular module.
pub fn minimal_wedderburn_check<F: Field>(w: &Module<F>) -> Result<bool> {
    if !w.is_projective()? {
        return Err(Error::NotProjective);
    }
    let alg = w.algebra();
    let terms = Module::regular(alg).injective_coresolution(2)?;
    same_add(&[nakayama(w)?], &terms)
}

/// Definitional D-split test for `0 -> X -f-> M -g-> Y -> 0`: `M ∈ add(D)`
/// and `Hom(D', g)`, `Hom(f, D')` are surjective for every listed `D'`.
pub fn d_split_check<F: Field>(
    f: &ModuleMap<F>,
    g: &ModuleMap<F>,
    ds: &[Module<F>],
) -> Result<bool> {
    let (x, m, y) = (&f.source, &f.target, &g.target);
    if g.source.dim() != m.dim() {
        return Err(Error::NotExact("maps are not composable".into()));
    }
    if !f.is_injective()
        || !g.is_surjective()
        || !g.matrix.mul(&f.matrix).is_zero()
        || x.dim() + y.dim() != m.dim()
    {
        return Err(Error::NotExact("0 -> X -> M -> Y -> 0".into()));
    }
    if !in_add(m, ds)? {
        return Err(Error::NotInAdd);
    }
    for d in ds {
        let into_m = hom_space(d, m)?;
        let into_y = hom_space(d, y)?;
        let pushed = Subspace::from_vectors(
            d.dim() * y.dim(),
            into_m.maps().iter().map(|h| g.matrix.mul(h).flatten()),
        );
        if pushed.dim() != into_y.dim() {
            return Ok(false);
        }
        let from_m = hom_space(m, d)?;
        let from_x = hom_space(x, d)?;
        let pulled = Subspace::from_vectors(
            x.dim() * d.dim(),
            from_m.maps().iter().map(|h| h.mul(&f.matrix).flatten()),
        );
        if pulled.dim() != from_x.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dominant dimension of `End(Y)` for a generator-cogenerator `Y = ⊕` of
/// the context modules: `s + 2` where `s` is the length of the initial run
/// of vanishing `Ext^i(Y, Y)`, `i >= 1`.
pub fn dominant_dimension_by_ext_vanishing<F: Field>(
    ctx: &ExtContext<F>,
    cap: usize,
) -> Result<Bounded> {
    let alg = ctx.algebra();
    let reg = Module::regular(alg);
    let dual_reg = Module::regular(&alg.opposite()).dual();
    let ys = ctx.modules();
    if !in_add(&reg, ys)? || !in_add(&dual_reg, ys)? {
        return Err(Error::NotGeneratorCogenerator);
    }
    let n = ys.len();
    for i in 1..=cap {
        let mut keys = Vec::new();
        for s in 0..n {
            for t in 0..n {
                keys.push((s, t, i));
            }
        }
        ctx.prefetch(&keys)?;
        for &(s, t, i) in &keys {
            if ctx.dim(s, t, i)? != 0 {
                return Ok(Bounded::Exact(i + 1));
            }
        }
    }
    Ok(Bounded::AtLeast(cap + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::{build_phi_yoneda_algebra, AdmissibleSet};
    use crate::module::tests::{ctx, ideal_module};

    #[test]
    fn self_injective_local_algebra() {
        let c = ctx();
        let a = c.algebra();
        assert_eq!(dominant_dimension(a, 5).unwrap(), Bounded::AtLeast(5));
        let reg = Module::regular(a);
        assert!(minimal_wedderburn_check(&reg).unwrap());
        assert!(matches!(
            minimal_wedderburn_check(&ideal_module(&c, 0)),
            Err(Error::NotProjective)
        ));
        assert_eq!(nakayama(&reg).unwrap().dim(), 8);
        // A ⊕ DA is a generator-cogenerator with no self-extensions
        let e = ExtContext::new(a, vec![reg]).unwrap();
        assert_eq!(
            dominant_dimension_by_ext_vanishing(&e, 4).unwrap(),
            Bounded::AtLeast(6)
        );
        let bad = ExtContext::new(a, vec![ideal_module(&c, 0)]).unwrap();
        assert!(matches!(
            dominant_dimension_by_ext_vanishing(&bad, 2),
            Err(Error::NotGeneratorCogenerator)
        ));
    }

    #[test]
    fn d_split_examples() {
        let c = ctx();
        let reg = Module::regular(c.algebra());
        let ds = vec![reg.clone(), ideal_module(&c, 0)];
        let (f, g) = c.delta(3).unwrap();
        assert!(d_split_check(&f, &g, &ds).unwrap());
        let (f, g) = c.delta(0).unwrap();
        assert!(!d_split_check(&f, &g, &ds).unwrap());
        let (f, g) = c.delta(-4).unwrap();
        assert!(d_split_check(&f, &g, &ds).unwrap());
        assert!(matches!(
            d_split_check(&g, &f, &ds),
            Err(Error::NotExact(_))
        ));
        assert!(matches!(
            d_split_check(&f, &g, &[ideal_module(&c, 0)]),
            Err(Error::NotInAdd)
        ));
    }

    #[test]
    fn lambda_dominant_dimensions() {
        let c = ctx();
        let a = c.algebra();
        let ms = vec![Module::regular(a), ideal_module(&c, 0), ideal_module(&c, 4)];
        let e = ExtContext::new(a, ms).unwrap();
        let l0 = build_phi_yoneda_algebra(&e, &AdmissibleSet::new(vec![0]).unwrap(), "L")
            .unwrap()
            .algebra;
        assert_eq!(dominant_dimension(&l0, 4).unwrap(), Bounded::Exact(2));
        assert_eq!(
            dominant_dimension_by_ext_vanishing(&e, 4).unwrap(),
            Bounded::Exact(2)
        );
        assert_eq!(projective_injective_vertices(&l0).unwrap(), vec![0]);
        let ps = indecomposable_projective_modules(&l0).unwrap();
        assert!(minimal_wedderburn_check(&ps[0]).unwrap());
        assert!(!minimal_wedderburn_check(&ps[1]).unwrap());
        let l1 = build_phi_yoneda_algebra(&e, &AdmissibleSet::new(vec![0, 1]).unwrap(), "L")
            .unwrap()
            .algebra;
        assert_eq!(dominant_dimension(&l1, 4).unwrap(), Bounded::Exact(0));
        assert_eq!(projective_injective_vertices(&l1).unwrap(), vec![0]);
    }
}
