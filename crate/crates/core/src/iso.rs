//! Isomorphism decisions with certificates, and membership in additive closures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::linalg::Matrix;
use crate::module::{hom_space, HomSpace, Module};
use crate::scalar::Field;

/// Grid points tried before falling back to seeded sampling.
pub const DEFAULT_GRID_BUDGET: usize = 4096;
/// Seeded sample points tried when the grid is too large.
pub const DEFAULT_SAMPLES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NonIsoReason {
    Dimension {
        left: usize,
        right: usize,
    },
    /// `dim Hom(X, Y)`, `dim Hom(Y, X)` and `dim End(X)` must all agree.
    HomDimension {
        forward: usize,
        backward: usize,
        endo: usize,
    },
    /// `End(X)` is local and every composite `Y -> X -> Y` of basis maps is singular.
    CompositesInRadical {
        pairs: usize,
    },
    /// The determinant of a generic map vanishes on a full interpolation grid.
    GridExhausted {
        points: usize,
    },
    /// Seeded sampling found no invertible map; exact up to a Schwartz-Zippel bound.
    SampledRankDeficient {
        samples: usize,
        range: u64,
    },
}

#[derive(Clone, Debug)]
pub enum IsoDecision<F: Field> {
    /// An invertible intertwiner `X -> Y`.
    Isomorphic(Matrix<F>),
    NotIsomorphic(NonIsoReason),
}

impl<F: Field> IsoDecision<F> {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoDecision::Isomorphic(_))
    }

    pub fn certificate(&self) -> Option<&Matrix<F>> {
        match self {
            IsoDecision::Isomorphic(m) => Some(m),
            IsoDecision::NotIsomorphic(_) => None,
        }
    }

    pub fn summary(&self) -> String {
        match self {
            IsoDecision::Isomorphic(_) => "isomorphic".into(),
            IsoDecision::NotIsomorphic(r) => format!("not isomorphic ({})", describe(r)),
        }
    }
}

fn describe(r: &NonIsoReason) -> String {
    match r {
        NonIsoReason::Dimension { left, right } => format!("dimensions {left} and {right}"),
        NonIsoReason::HomDimension {
            forward,
            backward,
            endo,
        } => {
            format!("hom dimensions {forward}/{backward} against endomorphism dimension {endo}")
        }
        NonIsoReason::CompositesInRadical { pairs } => {
            format!("local endomorphism ring, all {pairs} basis composites singular")
        }
        NonIsoReason::GridExhausted { points } => {
            format!("no invertible map on a {points}-point grid")
        }
        NonIsoReason::SampledRankDeficient { samples, range } => {
            format!("no invertible map in {samples} seeded samples from [1, {range}]")
        }
    }
}

/// Whether the span of `maps` (square matrices forming an algebra) is local,
/// via the trace-form radical: codimension one.
pub fn is_local_span<F: Field>(maps: &[Matrix<F>]) -> bool {
    let r = maps.len();
    if r == 0 {
        return false;
    }
    let mut g = Matrix::zeros(r, r);
    for a in 0..r {
        for b in 0..r {
            let p = maps[a].mul(&maps[b]);
            let mut t = F::zero();
            for i in 0..p.nrows() {
                t.add_assign(p.get(i, i));
            }
            g.set(a, b, t);
        }
    }
    g.rank() == 1
}

pub fn is_isomorphic<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<IsoDecision<F>> {
    is_isomorphic_with(x, y, DEFAULT_GRID_BUDGET, DEFAULT_SAMPLES)
}

pub fn is_isomorphic_with<F: Field>(
    x: &Module<F>,
    y: &Module<F>,
    grid_budget: usize,
    samples: usize,
) -> Result<IsoDecision<F>> {
    x.same_algebra(y)?;
    if x.dim() != y.dim() {
        return Ok(IsoDecision::NotIsomorphic(NonIsoReason::Dimension {
            left: x.dim(),
            right: y.dim(),
        }));
    }
    if x.dim() == 0 {
        return Ok(IsoDecision::Isomorphic(Matrix::zeros(0, 0)));
    }
    let fwd = hom_space(x, y)?;
    let bwd = hom_space(y, x)?;
    let end = hom_space(x, x)?;
    if fwd.dim() != end.dim() || bwd.dim() != end.dim() {
        return Ok(IsoDecision::NotIsomorphic(NonIsoReason::HomDimension {
            forward: fwd.dim(),
            backward: bwd.dim(),
            endo: end.dim(),
        }));
    }
    let fmaps = fwd.maps();
    if is_local_span(&end.maps()) {
        let bmaps = bwd.maps();
        for f in &fmaps {
            for g in &bmaps {
                if !g.mul(f).determinant().is_zero() {
                    return Ok(IsoDecision::Isomorphic(f.clone()));
                }
            }
        }
        return Ok(IsoDecision::NotIsomorphic(
            NonIsoReason::CompositesInRadical {
                pairs: fmaps.len() * bmaps.len(),
            },
        ));
    }
    for f in &fmaps {
        if !f.determinant().is_zero() {
            return Ok(IsoDecision::Isomorphic(f.clone()));
        }
    }
    Ok(generic_search(&fwd, y.dim(), grid_budget, samples))
}

fn generic_search<F: Field>(
    hom: &HomSpace<F>,
    deg: usize,
    grid_budget: usize,
    samples: usize,
) -> IsoDecision<F> {
    let r = hom.dim();
    let side = deg as u128 + 1;
    let grid = side
        .checked_pow(r as u32)
        .filter(|&g| g <= grid_budget as u128);
    let eval = |point: &[i64]| -> Option<Matrix<F>> {
        let coords: Vec<F> = point.iter().map(|&t| F::from_i64(t)).collect();
        let m = hom.combine(&coords);
        (!m.determinant().is_zero()).then_some(m)
    };
    if let Some(total) = grid {
        // the determinant has degree <= deg in each coordinate
        let mut point = vec![0i64; r];
        for _ in 0..total {
            if let Some(m) = eval(&point) {
                return IsoDecision::Isomorphic(m);
            }
            for p in point.iter_mut() {
                *p += 1;
                if (*p as u128) < side {
                    break;
                }
                *p = 0;
            }
        }
        return IsoDecision::NotIsomorphic(NonIsoReason::GridExhausted {
            points: total as usize,
        });
    }
    const RANGE: u64 = 1 << 31;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..samples {
        let point: Vec<i64> = (0..r).map(|_| rng.gen_range(1..=RANGE) as i64).collect();
        if let Some(m) = eval(&point) {
            return IsoDecision::Isomorphic(m);
        }
    }
    IsoDecision::NotIsomorphic(NonIsoReason::SampledRankDeficient {
        samples,
        range: RANGE,
    })
}

/// `M ∈ add(D_1 ⊕ ... ⊕ D_k)` iff the identity of `M` is a sum of maps
/// factoring through the `D_i`.
pub fn in_add<F: Field>(m: &Module<F>, ds: &[Module<F>]) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let n = m.dim();
    let mut span = crate::linalg::Subspace::zero(n * n);
    let id = Matrix::identity(n).flatten();
    for d in ds {
        m.same_algebra(d)?;
        let to = hom_space(m, d)?.maps();
        let from = hom_space(d, m)?.maps();
        for f in &to {
            for g in &from {
                span.insert(g.mul(f).flatten());
                if span.contains(&id) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(span.contains(&id))
}

/// `add(xs) = add(ys)`.
pub fn same_add<F: Field>(xs: &[Module<F>], ys: &[Module<F>]) -> Result<bool> {
    for x in xs {
        if !in_add(x, ys)? {
            return Ok(false);
        }
    }
    for y in ys {
        if !in_add(y, xs)? {
            return Ok(false);
        }
    }
    Ok(true)
}
