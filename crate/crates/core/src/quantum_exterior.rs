//! The 8-dimensional local symmetric algebra `A(q)` on `x0, x1, x2` with
//! `x_i^2 = 0` and `x_{i+1} x_i = -q x_i x_{i+1}` (indices mod 3), its
//! cyclic ideals `I_j = A u_j`, `J_j = u_j A` for `u_j = x2 + q^j x1`, and
//! the endomorphism algebras `Λ` built from them.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{basis_vector, Algebra, AlgebraData, MultTable, SymmetricFormSearch};
use crate::error::{Error, Result};
use crate::ext::{build_phi_yoneda_algebra, AdmissibleSet, ExtContext, YonedaAlgebraBuild};
use crate::homological::{
    d_split_check, dominant_dimension, dominant_dimension_by_ext_vanishing,
    indecomposable_projective_modules, minimal_wedderburn_check, projective_injective_vertices,
    Bounded,
};
use crate::ideal::{matrix_endomorphism_algebra, CyclicIdeal};
use crate::iso::{is_isomorphic, IsoDecision};
use crate::linalg::Matrix;
use crate::module::{hom_space, Module, ModuleMap};
use crate::report::Report;
use crate::scalar::{check_parameter, Field};

/// Normal words in basis order.
const WORDS: [&[u8]; 8] = [&[], &[0], &[1], &[2], &[0, 1], &[1, 2], &[2, 0], &[0, 1, 2]];
const LABELS: [&str; 8] = ["1", "x0", "x1", "x2", "x0x1", "x1x2", "x2x0", "x0x1x2"];
const DEGREES: [i64; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

/// Rewrites a word to a multiple of a normal word (or zero).
fn normal_form<F: Field>(q: &F, word: &[u8]) -> Option<(F, usize)> {
    let mut w = word.to_vec();
    let mut c = F::one();
    let minus_q = q.neg();
    for _ in 0..64 {
        if w.len() > 3 {
            return None;
        }
        if let Some(i) = WORDS.iter().position(|n| *n == w.as_slice()) {
            return Some((c, i));
        }
        if w.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        if w == [1, 2, 0] || w == [2, 0, 1] {
            w = vec![0, 1, 2];
            continue;
        }
        let p = w
            .windows(2)
            .position(|p| matches!((p[0], p[1]), (1, 0) | (2, 1) | (0, 2)))
            .expect("every non-normal word of length <= 3 has a rewritable pair");
        w.swap(p, p + 1);
        c.mul_assign(&minus_q);
    }
    unreachable!("rewriting did not terminate")
}

/// `A(q)` with its distinguished elements.
#[derive(Clone, Debug)]
pub struct QuantumExterior<F: Field> {
    algebra: Arc<Algebra<F>>,
    q: F,
}

impl<F: Field> QuantumExterior<F> {
    /// Builds the multiplication table by rewriting and runs the full audit.
    pub fn new(q: F) -> Result<Self> {
        check_parameter(&q)?;
        let mut mult: MultTable<F> = vec![vec![Vec::new(); 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let w: Vec<u8> = WORDS[i].iter().chain(WORDS[j]).copied().collect();
                if let Some((c, k)) = normal_form(&q, &w) {
                    mult[i][j].push((k, c));
                }
            }
        }
        let unit = basis_vector(8, 0);
        let algebra = Algebra::new(AlgebraData {
            name: format!("A({q})"),
            basis_labels: LABELS.iter().map(|s| s.to_string()).collect(),
            unit: unit.clone(),
            mult,
            idempotents: Some(vec![unit]),
            grading: Some(DEGREES.to_vec()),
            parameter: Some(q.clone()),
        })?;
        Ok(QuantumExterior { algebra, q })
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn x(&self, i: usize) -> Vec<F> {
        basis_vector(8, i + 1)
    }

    /// `u_j = x2 + q^j x1`.
    pub fn u(&self, j: i64) -> Vec<F> {
        let mut v = vec![F::zero(); 8];
        v[3] = F::one();
        v[2] = self.q.pow(j);
        v
    }

    /// `I_j = A u_j`.
    pub fn left_ideal(&self, j: i64) -> CyclicIdeal<F> {
        CyclicIdeal::left(&self.algebra, self.u(j)).expect("u_j has the right length")
    }

    /// `J_j = u_j A`.
    pub fn right_ideal(&self, j: i64) -> CyclicIdeal<F> {
        CyclicIdeal::right(&self.algebra, self.u(j)).expect("u_j has the right length")
    }

    /// The printed basis `{u_j, x2x0 - q^{j∓1} x0x1, x1x2, x0x1x2}` of
    /// `I_j` (exponent `j-1`) or `J_j` (exponent `j+1`).
    pub fn printed_ideal_basis(&self, j: i64, left: bool) -> Vec<Vec<F>> {
        let e = if left { j - 1 } else { j + 1 };
        let mut second = vec![F::zero(); 8];
        second[6] = F::one();
        second[4] = self.q.pow(e).neg();
        vec![self.u(j), second, basis_vector(8, 5), basis_vector(8, 7)]
    }
}

/// Parses a parameter and rejects the excluded values.
pub fn parse_parameter<F: Field>(s: &str) -> Result<F> {
    let q = F::parse_scalar(s)?;
    check_parameter(&q).map_err(Error::from)?;
    Ok(q)
}

/// `Λ = E^Φ(A ⊕ I_0 ⊕ ... ⊕ I_n ⊕ I_m)` with the Ext data it was built from.
pub struct Lambda<F: Field> {
    pub n: usize,
    pub m: i64,
    pub context: ExtContext<F>,
    pub build: YonedaAlgebraBuild<F>,
}

impl<F: Field> Lambda<F> {
    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.build.algebra
    }

    pub fn phi(&self) -> &AdmissibleSet {
        &self.build.phi
    }

    /// `E^Φ(V, X)` for `Φ = {0}`, i.e. `Hom(V, X) = ⊕_r Hom(V_r, X)`, with a
    /// basis map `g: V_s -> V_t` sending `h ∈ Hom(V_t, X)` to `h g`. Classes of
    /// positive degree act by zero, which is the restriction along
    /// `E^Φ(V) -> End(V)`.
    pub fn hom_functor(&self, x: &Module<F>) -> Result<Module<F>> {
        let ctx = &self.context;
        let comps = ctx
            .modules()
            .iter()
            .map(|v| hom_space(v, x))
            .collect::<Result<Vec<_>>>()?;
        let mut offsets = Vec::with_capacity(comps.len());
        let mut dim = 0;
        for h in &comps {
            offsets.push(dim);
            dim += h.dim();
        }
        let action = self
            .build
            .labels
            .iter()
            .map(|l| {
                let mut a = Matrix::zeros(dim, dim);
                if l.degree != 0 {
                    return Ok(a);
                }
                let g = ctx.ext(l.source, l.target, 0)?.representative(l.index);
                for k in 0..comps[l.target].dim() {
                    let img = comps[l.target].map(k).mul(&g);
                    let c = comps[l.source]
                        .coordinates(&img)
                        .ok_or_else(|| Error::Internal("composite is not a homomorphism".into()))?;
                    for (i, x) in c.into_iter().enumerate() {
                        a.set(offsets[l.source] + i, offsets[l.target] + k, x);
                    }
                }
                Ok(a)
            })
            .collect::<Result<Vec<_>>>()?;
        Module::new(self.algebra(), action)
    }
}

/// One row of a D-split scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSplitRow {
    pub j: i64,
    /// The definitional test on `δ_j`.
    pub definitional: bool,
    /// `Ext^1(I_l, I_{j+1}) = 0 = Ext^1(I_j, I_l)` for all `0 <= l <= n`.
    pub ext_criterion: bool,
}

/// Outcome of resolving a module until termination, a repeated syzygy, or
/// a budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionEvidence {
    pub label: String,
    /// Dimensions of the successive syzygies (or cosyzygies).
    pub dims: Vec<usize>,
    pub terminated: bool,
    /// `(a, b)` with `Ω^a ≅ Ω^b`, `a < b`, both nonzero.
    pub repetition: Option<(usize, usize)>,
    pub stopped_by_budget: bool,
}

impl ResolutionEvidence {
    pub fn verdict(&self) -> &'static str {
        if self.terminated {
            "finite"
        } else if self.repetition.is_some() {
            "certified infinite"
        } else if self.stopped_by_budget {
            "no termination before the dimension budget"
        } else {
            "no termination within depth"
        }
    }
}

fn track<F: Field>(
    label: String,
    start: &Module<F>,
    depth: usize,
    dim_budget: usize,
    step: impl Fn(&Module<F>) -> Result<Module<F>>,
) -> Result<ResolutionEvidence> {
    let mut seen: Vec<Module<F>> = Vec::new();
    let mut ev = ResolutionEvidence {
        label,
        dims: Vec::new(),
        terminated: false,
        repetition: None,
        stopped_by_budget: false,
    };
    let mut cur = start.clone();
    for b in 1..=depth {
        if cur.dim() > dim_budget {
            ev.stopped_by_budget = true;
            break;
        }
        cur = step(&cur)?;
        ev.dims.push(cur.dim());
        if cur.is_zero() {
            ev.terminated = true;
            break;
        }
        for (a, prev) in seen.iter().enumerate() {
            if prev.dim() == cur.dim() && is_isomorphic(prev, &cur)?.is_isomorphic() {
                ev.repetition = Some((a + 1, b));
                return Ok(ev);
            }
        }
        seen.push(cur.clone());
    }
    Ok(ev)
}

/// Syzygies of `x` up to `depth`, stopping early at zero, at a repeat up to
/// isomorphism, or once a syzygy exceeds `dim_budget`.
pub fn syzygy_evidence<F: Field>(
    label: String,
    x: &Module<F>,
    depth: usize,
    dim_budget: usize,
) -> Result<ResolutionEvidence> {
    track(label, x, depth, dim_budget, |m| m.syzygy())
}

/// Cosyzygies of `x`, with the same stopping rules.
pub fn cosyzygy_evidence<F: Field>(
    label: String,
    x: &Module<F>,
    depth: usize,
    dim_budget: usize,
) -> Result<ResolutionEvidence> {
    track(label, x, depth, dim_budget, |m| m.cosyzygy())
}

fn summand_label(n: usize, m: &str) -> String {
    let mid = if n == 0 {
        "I_0".to_string()
    } else {
        format!("I_0+...+I_{n}")
    };
    format!("A+{mid}+I_{m}")
}

/// Largest syzygy dimension the battery will resolve further.
pub const SIMPLE_RESOLUTION_BUDGET: usize = 64;

impl<F: Field> QuantumExterior<F> {
    pub fn ideal_module(&self, j: i64) -> Module<F> {
        Module::from_cyclic_ideal(&self.left_ideal(j)).expect("left ideals are modules")
    }

    /// `J_j` as a left module over the opposite algebra.
    pub fn right_ideal_module(&self, j: i64) -> Module<F> {
        Module::from_cyclic_ideal(&self.right_ideal(j).to_opposite())
            .expect("opposite ideals are left ideals")
    }

    /// `V = A ⊕ I_0 ⊕ ... ⊕ I_n ⊕ I_m` as a list of summands.
    pub fn summands(&self, n: usize, m: i64) -> Result<Vec<Module<F>>> {
        if (0..=n as i64).contains(&m) {
            return Err(Error::Invalid(format!("m = {m} repeats one of I_0..I_{n}")));
        }
        let mut v = vec![Module::regular(&self.algebra)];
        v.extend((0..=n as i64).map(|j| self.ideal_module(j)));
        v.push(self.ideal_module(m));
        Ok(v)
    }

    /// `Λ_m^Φ` through the Yoneda builder.
    pub fn build_lambda(&self, n: usize, m: i64, phi: &AdmissibleSet) -> Result<Lambda<F>> {
        let context = ExtContext::new(&self.algebra, self.summands(n, m)?)?;
        let build = build_phi_yoneda_algebra(
            &context,
            phi,
            &format!("E^{phi}({})", summand_label(n, &m.to_string())),
        )?;
        Ok(Lambda {
            n,
            m,
            context,
            build,
        })
    }

    /// `Λ_m^{0}` as the block algebra `M_A(1, u_0, ..., u_n, u_m)`.
    pub fn build_lambda_matrix(&self, n: usize, m: i64) -> Result<Arc<Algebra<F>>> {
        if (0..=n as i64).contains(&m) {
            return Err(Error::Invalid(format!("m = {m} repeats one of u_0..u_{n}")));
        }
        let mut xs = vec![self.algebra.unit().to_vec()];
        xs.extend((0..=n as i64).map(|j| self.u(j)));
        xs.push(self.u(m));
        matrix_endomorphism_algebra(&self.algebra, &xs)
    }

    /// `δ_j: 0 -> I_{j+1} -> A -> I_j -> 0`, with `A -> I_j` right
    /// multiplication by `u_j`.
    pub fn delta(&self, j: i64) -> Result<(ModuleMap<F>, ModuleMap<F>)> {
        let a = &self.algebra;
        let reg = Module::regular(a);
        let ij = self.left_ideal(j);
        let (sub, incl) = reg.submodule(self.left_ideal(j + 1).basis())?;
        let tgt = Module::from_cyclic_ideal(&ij)?;
        let cols = a
            .right_mult_matrix(&self.u(j))
            .columns()
            .iter()
            .map(|v| {
                ij.basis()
                    .coordinates(v)
                    .ok_or_else(|| Error::Internal("A u_j escapes I_j".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let proj = Matrix::from_columns(&cols, tgt.dim());
        Ok((
            ModuleMap::new(&sub, &reg, incl)?,
            ModuleMap::new(&reg, &tgt, proj)?,
        ))
    }

    /// Scans `δ_j` for `j ∈ [lo, hi]` against `D = A ⊕ I_0 ⊕ ... ⊕ I_n`.
    pub fn dsplit_range(&self, n: usize, lo: i64, hi: i64) -> Result<Vec<DSplitRow>> {
        let ds: Vec<Module<F>> = std::iter::once(Module::regular(&self.algebra))
            .chain((0..=n as i64).map(|l| self.ideal_module(l)))
            .collect();
        let first = lo.min(0);
        let last = (hi + 1).max(n as i64);
        let ctx = ExtContext::new(
            &self.algebra,
            (first..=last).map(|k| self.ideal_module(k)).collect(),
        )?;
        let idx = |k: i64| (k - first) as usize;
        let mut keys = Vec::new();
        for j in lo..=hi {
            for l in 0..=n as i64 {
                keys.push((idx(l), idx(j + 1), 1));
                keys.push((idx(j), idx(l), 1));
            }
        }
        ctx.prefetch(&keys)?;
        (lo..=hi)
            .into_par_iter()
            .map(|j| {
                let (f, g) = self.delta(j)?;
                let definitional = d_split_check(&f, &g, &ds)?;
                let mut ext_criterion = true;
                for l in 0..=n as i64 {
                    if ctx.dim(idx(l), idx(j + 1), 1)? != 0 || ctx.dim(idx(j), idx(l), 1)? != 0 {
                        ext_criterion = false;
                    }
                }
                Ok(DSplitRow {
                    j,
                    definitional,
                    ext_criterion,
                })
            })
            .collect()
    }

    /// Runs the verification battery for `Λ_m^Φ` and `Λ_{m+1}^Φ`.
    pub fn verify_battery(
        &self,
        n: usize,
        m: i64,
        phi: &AdmissibleSet,
        depth: usize,
    ) -> Result<Report> {
        if m < n as i64 + 4 {
            return Err(Error::Invalid(format!(
                "the battery needs m >= n + 4, got n = {n}, m = {m}"
            )));
        }
        let only0 = phi.elements() == [0];
        let zero_one = phi.elements() == [0, 1];
        let printed_case = only0 && n == 0;
        let mut r = Report::new(format!(
            "Battery for E^{phi}({}), m = {m}",
            summand_label(n, "m")
        ));
        r.parameter("q", &self.q);
        r.parameter("n", n);
        r.parameter("m", m);
        r.parameter("phi", phi);
        r.parameter("depth", depth);

        let (lm, lm1) = rayon::join(
            || self.build_lambda(n, m, phi),
            || self.build_lambda(n, m + 1, phi),
        );
        let (lm, lm1) = (lm?, lm1?);
        let alg = lm.algebra();

        r.check_opt("dim Lambda_m", printed_case.then_some(34), alg.dim());
        r.check(
            "dim Lambda_m = dim Lambda_{m+1}",
            true,
            alg.dim() == lm1.algebra().dim(),
        );
        r.note(format!("{} and {}", alg.dim(), lm1.algebra().dim()));

        let cartan = alg.cartan_matrix()?;
        r.check_opt(
            "Cartan matrix",
            printed_case.then_some([[8, 4, 4], [4, 3, 2], [4, 2, 3]]),
            &cartan,
        );
        let arrows = alg.arrow_counts()?;
        r.check_opt(
            "arrow counts",
            printed_case.then_some([[1, 1, 1], [1, 0, 0], [1, 0, 0]]),
            &arrows,
        );

        if only0 {
            let m2 = self.build_lambda_matrix(n, m)?;
            m2.associativity_audit()?;
            let agree = m2.dim() == alg.dim() && m2.cartan_matrix()? == cartan;
            r.check("block-matrix route agrees (dim, Cartan)", true, agree);
        }

        let expected_domdim = if only0 {
            Some(Bounded::Exact(2))
        } else if zero_one {
            Some(Bounded::Exact(0))
        } else {
            None
        };
        r.check_opt(
            "dominant dimension (coresolution)",
            expected_domdim,
            dominant_dimension(alg, 4)?,
        );
        if only0 {
            r.check(
                "dominant dimension (Ext vanishing)",
                Bounded::Exact(2),
                dominant_dimension_by_ext_vanishing(&lm.context, 4)?,
            );
        }
        r.check_opt(
            "projective-injective vertices",
            (only0 || zero_one).then_some([0]),
            projective_injective_vertices(alg)?,
        );
        let projectives = indecomposable_projective_modules(alg)?;
        r.check_opt(
            "minimal Wedderburn at vertex 0",
            only0.then_some(true),
            minimal_wedderburn_check(&projectives[0])?,
        );

        let corner = alg.corner(&alg.idempotents()?[0])?;
        let symmetric = matches!(
            corner.symmetric_form_search(1000),
            SymmetricFormSearch::Found(_)
        );
        r.check(
            "corner at vertex 0 (dim, local, symmetric)",
            (8, true, true),
            (corner.dim(), corner.is_local()?, symmetric),
        );

        let rows = self.dsplit_range(n, -8, n as i64 + 8)?;
        let computed: Vec<i64> = rows
            .iter()
            .filter(|r| r.definitional)
            .map(|r| r.j)
            .collect();
        let expected: Vec<i64> = (-8..=n as i64 + 8)
            .filter(|&j| j > n as i64 + 2 || j < -3)
            .collect();
        r.check("D-split j in [-8, n+8]", expected, computed);
        r.check(
            "D-split agrees with Ext criterion",
            true,
            rows.iter().all(|r| r.definitional == r.ext_criterion),
        );

        let mut simple = Vec::new();
        for (v, p) in projectives.iter().enumerate() {
            simple.push(syzygy_evidence(
                format!("S_{v}"),
                &p.top()?,
                depth,
                SIMPLE_RESOLUTION_BUDGET,
            )?);
        }
        let w = lm.hom_functor(&self.ideal_module(-1))?;
        let co = cosyzygy_evidence("E(V, I_-1)".into(), &w, depth, usize::MAX)?;
        let finite = simple.iter().chain([&co]).any(|e| e.terminated);
        let summary: Vec<_> = simple
            .iter()
            .chain([&co])
            .map(|e| serde_json::json!({"module": e.label, "verdict": e.verdict(), "dims": e.dims, "repetition": e.repetition}))
            .collect();
        r.evidence(
            "global dimension",
            serde_json::json!({"any_finite": finite, "resolutions": summary}),
            None,
        );
        r.note(format!(
            "syzygies of simples stop above dimension {SIMPLE_RESOLUTION_BUDGET}; cosyzygies of E(V, I_-1) are checked to depth {depth}"
        ));

        let ids: Vec<Module<F>> = (0..=12).map(|j| self.ideal_module(j)).collect();
        let mut reasons = std::collections::BTreeMap::<String, usize>::new();
        let mut all_distinct = true;
        for a in 0..ids.len() {
            for b in a + 1..ids.len() {
                match is_isomorphic(&ids[a], &ids[b])? {
                    IsoDecision::Isomorphic(_) => all_distinct = false,
                    IsoDecision::NotIsomorphic(reason) => {
                        let key = serde_json::to_value(&reason)?["reason"]
                            .as_str()
                            .unwrap_or("")
                            .to_string();
                        *reasons.entry(key).or_default() += 1;
                    }
                }
            }
        }
        r.evidence(
            "I_0..I_12 pairwise non-isomorphic",
            serde_json::json!({"all_distinct": all_distinct, "pairs": 78, "reasons": reasons}),
            Some("finite range of an infinite family"),
        );
        Ok(r)
    }
}
