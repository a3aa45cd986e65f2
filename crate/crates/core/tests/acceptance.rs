//! Acceptance suite. Prints one line per criterion; run with
//! `cargo test -p ayalg --test acceptance -- --nocapture` to see them.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ayalg::algebra::Algebra;
use ayalg::ext::{is_admissible, AdmissibleSet, ExtClass, ExtContext};
use ayalg::homological::{
    dominant_dimension, dominant_dimension_by_ext_vanishing, indecomposable_projective_modules,
    projective_injective_vertices, Bounded,
};
use ayalg::ideal::{hom_dim_phi, hom_dim_theta};
use ayalg::iso::{is_isomorphic, IsoDecision, NonIsoReason};
use ayalg::module::{hom_space, hom_space_intertwiner, is_intertwiner, Module};
use ayalg::quantum_exterior::{cosyzygy_evidence, syzygy_evidence, QuantumExterior};
use ayalg::scalar::{Field, Rational};

type Ctx = QuantumExterior<Rational>;

const HOM_BUDGET: Duration = Duration::from_secs(1);
const EXT1_BUDGET: Duration = Duration::from_secs(5);
const HIGHER_EXT_BUDGET: Duration = Duration::from_secs(30);
const LAMBDA_BUDGET: Duration = Duration::from_secs(60);
const DOMDIM_BUDGET: Duration = Duration::from_secs(120);
const NONISO_BUDGET: Duration = Duration::from_secs(60);
const GLDIM_DEPTH: usize = 20;
const SIMPLE_DIM_BUDGET: usize = 64;
const YONEDA_TRIPLES: usize = 50;

#[derive(Debug)]
struct Outcome {
    pass: bool,
    evidence_only: bool,
    /// Integer outputs, compared across parameters.
    values: Vec<i64>,
    detail: String,
    elapsed: Duration,
}

fn timed(budget: Option<Duration>, f: impl FnOnce() -> (bool, Vec<i64>, String)) -> Outcome {
    let t = Instant::now();
    let (pass, values, mut detail) = f();
    let elapsed = t.elapsed();
    let within = budget.is_none_or(|b| elapsed <= b);
    if !within {
        detail.push_str(&format!("; over budget {:?}", budget.unwrap()));
    }
    Outcome {
        pass: pass && within,
        evidence_only: false,
        values,
        detail,
        elapsed,
    }
}

fn ctx(q: i64) -> Ctx {
    QuantumExterior::new(Rational::from_i64(q)).unwrap()
}

fn phi(s: &str) -> AdmissibleSet {
    AdmissibleSet::parse(s).unwrap()
}

/// `dim Ext^1(X, Y)` from the long exact sequence of `0 -> ΩX -> P -> X -> 0`.
fn ext1_by_hom_dims(x: &Module<Rational>, y: &Module<Rational>) -> usize {
    let cover = x.projective_cover().unwrap();
    let omega = x.syzygy().unwrap();
    let h = |a: &Module<Rational>| hom_space_intertwiner(a, y).unwrap().dim();
    h(&omega) + h(x) - h(&cover.projective)
}

fn criterion_1(c: &Ctx) -> Outcome {
    timed(Some(HOM_BUDGET), || {
        let a = c.algebra();
        let mut values = Vec::new();
        let mut bad = 0;
        for j in -6..=6i64 {
            for i in -6..=6i64 {
                let d = hom_dim_theta(a, &c.u(j), &c.u(i));
                bad += usize::from(d != if i == j || i == j + 2 { 3 } else { 2 });
                values.push(d as i64);
            }
        }
        (
            bad == 0,
            values,
            format!("169 entries, {bad} off the printed table"),
        )
    })
}

fn criterion_2(c: &Ctx) -> Outcome {
    timed(Some(EXT1_BUDGET), || {
        let ms: Vec<_> = (-6..=6).map(|j| c.ideal_module(j)).collect();
        let e = ExtContext::new(c.algebra(), ms.clone()).unwrap();
        let keys: Vec<_> = (0..13)
            .flat_map(|s| (0..13).map(move |t| (s, t, 1)))
            .collect();
        e.prefetch(&keys).unwrap();
        let mut values = Vec::new();
        let mut bad = 0;
        let mut oracle_bad = 0;
        for (s, j) in (-6..=6i64).enumerate() {
            for (t, i) in (-6..=6i64).enumerate() {
                let d = e.dim(s, t, 1).unwrap();
                bad += usize::from(d != usize::from(j <= i && i <= j + 3));
                values.push(d as i64);
                // the diagonal band is enough for the long exact sequence cross-check
                if (i - j).abs() <= 4 {
                    oracle_bad += usize::from(ext1_by_hom_dims(&ms[s], &ms[t]) != d);
                }
            }
        }
        (
            bad == 0 && oracle_bad == 0,
            values,
            format!("{bad} entries off the band j <= i <= j+3, {oracle_bad} disagreements with hom-dimension oracle"),
        )
    })
}

fn criterion_3(c: &Ctx) -> Outcome {
    timed(Some(HIGHER_EXT_BUDGET), || {
        let ms: Vec<_> = (-10..=10).map(|t| c.ideal_module(t)).collect();
        let e = ExtContext::new(c.algebra(), ms).unwrap();
        let zero = 10;
        let mut keys = Vec::new();
        for s in 0..21 {
            for j in 1..=8 {
                keys.push((zero, s, j));
                keys.push((s, zero, j));
            }
        }
        e.prefetch(&keys).unwrap();
        let mut values = Vec::new();
        let mut bad = 0;
        for j in 1..=8i64 {
            for (s, t) in (-10..=10i64).enumerate() {
                let fwd = e.dim(zero, s, j as usize).unwrap();
                let bwd = e.dim(s, zero, j as usize).unwrap();
                bad += usize::from(fwd != usize::from((-1..=2).contains(&(t - j))));
                bad += usize::from(bwd != usize::from((-2..=1).contains(&(t + j))));
                values.extend([fwd as i64, bwd as i64]);
            }
        }
        (
            bad == 0,
            values,
            format!("336 dimensions, {bad} off the printed formulas"),
        )
    })
}

fn certified(x: &Module<Rational>, y: &Module<Rational>) -> bool {
    match is_isomorphic(x, y).unwrap() {
        IsoDecision::Isomorphic(m) => is_intertwiner(x, y, &m) && !m.determinant().is_zero(),
        IsoDecision::NotIsomorphic(_) => false,
    }
}

fn criterion_4(c: &Ctx) -> Outcome {
    timed(None, || {
        let mut values = Vec::new();
        let mut bad = 0;
        for j in -4..=8 {
            let ok = certified(&c.ideal_module(j).syzygy().unwrap(), &c.ideal_module(j + 1));
            bad += usize::from(!ok);
            values.push(i64::from(ok));
        }
        for j in 0..=4 {
            let ok = certified(
                &c.right_ideal_module(j + 1).syzygy().unwrap(),
                &c.right_ideal_module(j),
            );
            bad += usize::from(!ok);
            values.push(i64::from(ok));
        }
        (
            bad == 0,
            values,
            format!("13 left and 5 right certificates, {bad} missing"),
        )
    })
}

fn criterion_5(c: &Ctx) -> Outcome {
    timed(None, || {
        let mut values = Vec::new();
        let mut bad = 0;
        for n in 0..=2usize {
            let hi = n as i64 + 8;
            for r in c.dsplit_range(n, -8, hi).unwrap() {
                let expected = r.j > n as i64 + 2 || r.j < -3;
                bad += usize::from(r.definitional != expected || r.ext_criterion != expected);
                values.push(i64::from(r.definitional));
            }
        }
        (
            bad == 0,
            values,
            format!("n = 0, 1, 2; {bad} disagreements"),
        )
    })
}

fn criterion_6(c: &Ctx) -> Outcome {
    timed(Some(LAMBDA_BUDGET), || {
        let printed = vec![vec![8, 4, 4], vec![4, 3, 2], vec![4, 2, 3]];
        let mut values = Vec::new();
        let mut bad = Vec::new();
        for m in [3, 4, 5, 7] {
            let l = c.build_lambda(0, m, &phi("0")).unwrap();
            let cartan = l.algebra().cartan_matrix().unwrap();
            if l.algebra().dim() != 34 || cartan != printed {
                bad.push(format!("m={m}"));
            }
            values.push(l.algebra().dim() as i64);
            values.extend(cartan.iter().flatten().map(|&x| x as i64));
        }
        for p in ["0", "0,1"] {
            for n in 0..=1usize {
                let m = n as i64 + 4;
                let a = c.build_lambda(n, m, &phi(p)).unwrap().algebra().dim();
                let b = c.build_lambda(n, m + 1, &phi(p)).unwrap().algebra().dim();
                if a != b {
                    bad.push(format!("phi={p} n={n}: {a} vs {b}"));
                }
                values.extend([a as i64, b as i64]);
            }
        }
        (
            bad.is_empty(),
            values.clone(),
            format!("dims {values:?}; failures {bad:?}"),
        )
    })
}

fn criterion_7(c: &Ctx) -> Outcome {
    timed(None, || {
        let mut values = Vec::new();
        let mut ok = true;
        for m in [3, 5] {
            let y = c.build_lambda(0, m, &phi("0")).unwrap();
            let b = c.build_lambda_matrix(0, m).unwrap();
            let audits =
                y.algebra().associativity_audit().is_ok() && b.associativity_audit().is_ok();
            let cy = y.algebra().cartan_matrix().unwrap();
            let cb = b.cartan_matrix().unwrap();
            ok &= audits && y.algebra().dim() == b.dim() && cy == cb;
            values.extend([y.algebra().dim() as i64, b.dim() as i64]);
            values.extend(cb.iter().flatten().map(|&x| x as i64));
        }
        (
            ok,
            values,
            "m = 3, 5: dimension, Cartan matrix and audits".into(),
        )
    })
}

fn criterion_8(c: &Ctx) -> Outcome {
    timed(Some(DOMDIM_BUDGET), || {
        let l0 = c.build_lambda(0, 4, &phi("0")).unwrap();
        let l1 = c.build_lambda(0, 4, &phi("0,1")).unwrap();
        let d0 = dominant_dimension(l0.algebra(), 4).unwrap();
        let m0 = dominant_dimension_by_ext_vanishing(&l0.context, 4).unwrap();
        let d1 = dominant_dimension(l1.algebra(), 4).unwrap();
        let pi = projective_injective_vertices(l1.algebra()).unwrap();
        let pi0 = projective_injective_vertices(l0.algebra()).unwrap();
        // vertex 0 is the summand A, so its projective is the Hom(V, A) column
        let ok = d0 == Bounded::Exact(2)
            && m0 == Bounded::Exact(2)
            && d1 == Bounded::Exact(0)
            && pi == [0]
            && pi0 == [0];
        let as_int = |b: Bounded| match b {
            Bounded::Exact(n) => n as i64,
            Bounded::AtLeast(n) => -(n as i64),
        };
        let mut values = vec![as_int(d0), as_int(m0), as_int(d1)];
        values.extend(pi.iter().map(|&v| v as i64));
        (
            ok,
            values,
            format!("{{0}}: {d0} (coresolution), {m0} (Ext vanishing); {{0,1}}: {d1}; projective-injective vertices {pi:?}"),
        )
    })
}

fn criterion_9(c: &Ctx) -> Outcome {
    let mut o = timed(None, || {
        let l = c.build_lambda(0, 4, &phi("0")).unwrap();
        let mut parts = Vec::new();
        let mut finite = false;
        for (v, p) in indecomposable_projective_modules(l.algebra())
            .unwrap()
            .iter()
            .enumerate()
        {
            let ev = syzygy_evidence(
                format!("S_{v}"),
                &p.top().unwrap(),
                GLDIM_DEPTH,
                SIMPLE_DIM_BUDGET,
            )
            .unwrap();
            finite |= ev.terminated;
            parts.push(format!(
                "S_{v}: {} after {} steps",
                ev.verdict(),
                ev.dims.len()
            ));
        }
        let w = l.hom_functor(&c.ideal_module(-1)).unwrap();
        let ev = cosyzygy_evidence("E(V, I_-1)".into(), &w, GLDIM_DEPTH, usize::MAX).unwrap();
        finite |= ev.terminated;
        parts.push(format!(
            "Hom(V, I_-1): {} after {} cosyzygies",
            ev.verdict(),
            ev.dims.len()
        ));
        (!finite, vec![], parts.join("; "))
    });
    o.evidence_only = true;
    o.detail.push_str(&format!(
        "; simple resolutions stop once a syzygy exceeds dimension {SIMPLE_DIM_BUDGET}, infinite global dimension is not decidable at finite depth"
    ));
    o
}

fn criterion_10(c: &Ctx) -> Outcome {
    timed(Some(NONISO_BUDGET), || {
        let ms: Vec<_> = (0..=12).map(|j| c.ideal_module(j)).collect();
        let mut reasons: BTreeMap<&'static str, usize> = BTreeMap::new();
        let mut iso_pairs = 0;
        for a in 0..ms.len() {
            for b in a + 1..ms.len() {
                match is_isomorphic(&ms[a], &ms[b]).unwrap() {
                    IsoDecision::Isomorphic(_) => iso_pairs += 1,
                    IsoDecision::NotIsomorphic(r) => {
                        let key = match r {
                            NonIsoReason::Dimension { .. } => "dimension",
                            NonIsoReason::HomDimension { .. } => "hom dimension",
                            NonIsoReason::CompositesInRadical { .. } => "composites in radical",
                            NonIsoReason::GridExhausted { .. } => "grid",
                            NonIsoReason::SampledRankDeficient { .. } => "sampled",
                        };
                        *reasons.entry(key).or_default() += 1;
                    }
                }
            }
        }
        // sampling is not a proof; every pair needs an exact reason
        let exact = !reasons.contains_key("sampled");
        (
            iso_pairs == 0 && exact,
            vec![iso_pairs],
            format!("78 pairs, justifications {reasons:?}"),
        )
    })
}

fn independent_admissible(set: &[u32]) -> bool {
    let member = |x: u32| set.iter().any(|&y| y == x);
    if !member(0) {
        return false;
    }
    for &p in set {
        for &q in set {
            for &r in set {
                if member(p + q + r) && (member(p + q) ^ member(q + r)) {
                    return false;
                }
            }
        }
    }
    true
}

fn random_class(
    e: &ExtContext<Rational>,
    rng: &mut ChaCha8Rng,
    s: usize,
    t: usize,
    deg: usize,
) -> Option<ExtClass<Rational>> {
    let d = e.dim(s, t, deg).unwrap();
    if d == 0 {
        return None;
    }
    let coords: Vec<Rational> = (0..d)
        .map(|_| Rational::from_i64(rng.gen_range(-3..=3)))
        .collect();
    Some(ExtClass {
        source: s,
        target: t,
        degree: deg,
        coords,
    })
}

fn criterion_11(c: &Ctx) -> Outcome {
    timed(None, || {
        let mut failures = Vec::new();

        let mut algebras: Vec<std::sync::Arc<Algebra<Rational>>> =
            vec![c.algebra().clone(), c.algebra().opposite()];
        for m in [3, 4, 5, 7] {
            algebras.push(c.build_lambda(0, m, &phi("0")).unwrap().algebra().clone());
            algebras.push(c.build_lambda_matrix(0, m).unwrap());
        }
        for n in 0..=1usize {
            algebras.push(
                c.build_lambda(n, n as i64 + 4, &phi("0,1"))
                    .unwrap()
                    .algebra()
                    .clone(),
            );
        }
        let audited = algebras
            .iter()
            .filter(|a| a.associativity_audit().is_ok())
            .count();
        if audited != algebras.len() {
            failures.push(format!("audits {audited}/{}", algebras.len()));
        }

        let a = c.algebra();
        let mut hom_bad = 0;
        for j in -4..=4 {
            for i in -4..=4 {
                let (x, y) = (c.u(j), c.u(i));
                let (mx, my) = (c.ideal_module(j), c.ideal_module(i));
                let dims = [
                    hom_dim_theta(a, &x, &y),
                    hom_dim_phi(a, &x, &y),
                    hom_space_intertwiner(&mx, &my).unwrap().dim(),
                    hom_space(&mx, &my).unwrap().dim(),
                ];
                hom_bad += usize::from(dims.iter().any(|&d| d != dims[0]));
            }
        }
        if hom_bad > 0 {
            failures.push(format!("{hom_bad} hom disagreements"));
        }

        let e = ExtContext::new(
            a,
            (0..4)
                .map(|j| c.ideal_module(j))
                .chain([Module::regular(a)])
                .collect(),
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut triples = 0;
        let mut attempts = 0;
        while triples < YONEDA_TRIPLES && attempts < 10_000 {
            attempts += 1;
            let n = e.modules().len();
            let (s, t, u, v) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            let (da, db, dc) = (
                rng.gen_range(0..=2),
                rng.gen_range(0..=2),
                rng.gen_range(0..=1),
            );
            let (Some(x), Some(y), Some(z)) = (
                random_class(&e, &mut rng, s, t, da),
                random_class(&e, &mut rng, t, u, db),
                random_class(&e, &mut rng, u, v, dc),
            ) else {
                continue;
            };
            triples += 1;
            let left = e.yoneda(&e.yoneda(&x, &y).unwrap(), &z).unwrap();
            let right = e.yoneda(&x, &e.yoneda(&y, &z).unwrap()).unwrap();
            let variant = e.yoneda_with(&x, &y, rng.gen()).unwrap();
            if left != right || variant != e.yoneda(&x, &y).unwrap() {
                failures.push(format!(
                    "Yoneda triple ({s},{t},{u},{v}) degrees ({da},{db},{dc})"
                ));
            }
        }
        if triples < YONEDA_TRIPLES {
            failures.push(format!("only {triples} composable triples"));
        }

        let mut admissible_bad = 0;
        let mut cases = 0;
        for mask in 0u32..64 {
            let set: Vec<u32> = std::iter::once(0)
                .chain((1..=6).filter(|b| mask >> (b - 1) & 1 == 1))
                .collect();
            cases += 1;
            admissible_bad += usize::from(is_admissible(&set) != independent_admissible(&set));
        }
        if admissible_bad > 0 {
            failures.push(format!("{admissible_bad} admissible-set disagreements"));
        }

        (
            failures.is_empty(),
            vec![],
            format!(
                "{} algebras audited, 81 hom pairs, {triples} Yoneda triples, {cases} admissible sets; failures {failures:?}",
                algebras.len()
            ),
        )
    })
}

fn line(k: usize, o: &Outcome) -> String {
    let tag = match (o.evidence_only, o.pass) {
        (true, _) => "EVIDENCE",
        (false, true) => "PASS",
        (false, false) => "FAIL",
    };
    format!(
        "criterion {k:>2}: {tag:<8} {:>8.2?}  {}",
        o.elapsed, o.detail
    )
}

#[test]
fn acceptance() {
    let c2 = ctx(2);
    let c3 = ctx(3);
    let parametric: [fn(&Ctx) -> Outcome; 8] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
    ];
    let mut outcomes: Vec<Outcome> = Vec::new();
    let mut at_q3 = Vec::new();
    for f in parametric {
        outcomes.push(f(&c2));
        at_q3.push(f(&c3));
    }
    outcomes.push(criterion_9(&c2));
    outcomes.push(criterion_10(&c2));
    outcomes.push(criterion_11(&c2));
    let differing: Vec<usize> = (0..8)
        .filter(|&k| outcomes[k].values != at_q3[k].values || !at_q3[k].pass)
        .map(|k| k + 1)
        .collect();
    outcomes.push(Outcome {
        pass: differing.is_empty(),
        evidence_only: false,
        values: vec![],
        detail: format!("criteria 1-8 at q = 2 and q = 3, differing: {differing:?}"),
        elapsed: at_q3.iter().map(|o| o.elapsed).sum(),
    });

    let report: Vec<String> = outcomes
        .iter()
        .enumerate()
        .map(|(k, o)| line(k + 1, o))
        .collect();
    println!("{}", report.join("\n"));
    let failed: Vec<usize> = outcomes
        .iter()
        .enumerate()
        .filter(|(_, o)| !o.evidence_only && !o.pass)
        .map(|(k, _)| k + 1)
        .collect();
    assert!(
        failed.is_empty(),
        "failed criteria {failed:?}\n{}",
        report.join("\n")
    );
}
