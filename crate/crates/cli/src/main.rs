use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ayalg::ext::{ext_table, is_admissible, AdmissibleSet, ExtContext};
use ayalg::homological::{dominant_dimension, dominant_dimension_by_ext_vanishing};
use ayalg::ideal::{hom_dim_phi, hom_dim_theta};
use ayalg::iso::is_isomorphic;
use ayalg::module::{hom_space, hom_space_intertwiner, Module};
use ayalg::quantum_exterior::{parse_parameter, QuantumExterior};
use ayalg::report::{render_table, Format, Report, Table};
use ayalg::scalar::{Field, RatFunc, Rational};

/// Exact computations with the quantum exterior algebra A(q), its ideals
/// I_j = A u_j and the Auslander-Yoneda algebras built from them.
#[derive(Parser, Debug)]
#[command(name = "ayalg", version)]
struct Cli {
    /// Parameter q of A(q) ("p/q" rational, or a polynomial in q with the ratfunc backend).
    #[arg(long, global = true, env = "AYALG_Q", allow_hyphen_values = true)]
    q: Option<String>,

    /// Scalar backend.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Rational)]
    backend: Backend,

    /// Output format for tables and reports: json, csv or md.
    #[arg(long, global = true, default_value = "json")]
    format: String,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Rational,
    Ratfunc,
}

#[derive(Args, Debug, Clone)]
struct LambdaArgs {
    /// Summands I_0..I_n.
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Index of the extra summand I_m.
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    m: i64,
    /// Admissible degree set, e.g. "0,1".
    #[arg(long, default_value = "0")]
    phi: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit A(q) as JSON.
    Build,
    /// Table of dim Hom(I_j, I_i).
    HomTable {
        /// Inclusive index range "lo:hi".
        #[arg(long, default_value = "-3:3", allow_hyphen_values = true)]
        range: String,
    },
    /// Table of dim Ext^d(I_j, I_i).
    ExtTable {
        #[arg(long, default_value = "-3:3", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Successive syzygies of a module, compared with the expected ideals.
    Syzygy {
        /// "I:j", "J:j" or "A".
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// D-split scan of the sequences 0 -> I_{j+1} -> A -> I_j -> 0.
    Dsplit {
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Defaults to -8:n+8.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
    },
    /// Build E^Φ(A + I_0 + ... + I_n + I_m).
    Ay {
        #[command(flatten)]
        lambda: LambdaArgs,
        /// What to print.
        #[arg(long, value_enum, default_value_t = Emit::Dims)]
        emit: Emit,
    },
    /// Dominant dimension of E^Φ(A + I_0 + ... + I_n + I_m).
    Domdim {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
    /// Decide whether two modules are isomorphic.
    Iso {
        /// "I:j", "J:j" or "A".
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Full verification report for Λ_m and Λ_{m+1}.
    Battery {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long, default_value_t = 20)]
        depth: usize,
    },
    /// Quick property checks on small instances.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Dims,
    Cartan,
    Arrows,
    Json,
}

const EXIT_MISMATCH: u8 = 2;
const EXIT_USAGE: u8 = 1;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let format: Format = cli.format.parse()?;
    match cli.backend {
        Backend::Rational => {
            let q: Rational = parse_parameter(cli.q.as_deref().unwrap_or("2"))?;
            Session::new(cli, q, format)?.dispatch()
        }
        Backend::Ratfunc => {
            let q: RatFunc = parse_parameter(cli.q.as_deref().unwrap_or("q"))?;
            Session::new(cli, q, format)?.dispatch()
        }
    }
}

struct Session<'a, F: Field> {
    cli: &'a Cli,
    ctx: QuantumExterior<F>,
    format: Format,
}

#[derive(Clone, Copy, Debug)]
enum ModuleSpec {
    Regular,
    Left(i64),
    Right(i64),
}

fn parse_module(s: &str) -> Result<ModuleSpec> {
    if s == "A" {
        return Ok(ModuleSpec::Regular);
    }
    let (kind, j) = s
        .split_once(':')
        .with_context(|| format!("module {s:?} is not of the form I:j, J:j or A"))?;
    let j: i64 = j.parse().with_context(|| format!("bad index in {s:?}"))?;
    match kind {
        "I" => Ok(ModuleSpec::Left(j)),
        "J" => Ok(ModuleSpec::Right(j)),
        _ => bail!("module {s:?} is not of the form I:j, J:j or A"),
    }
}

fn spec_label(spec: ModuleSpec) -> String {
    match spec {
        ModuleSpec::Regular => "A".into(),
        ModuleSpec::Left(j) => format!("I_{j}"),
        ModuleSpec::Right(j) => format!("J_{j}"),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = s
        .split_once(':')
        .with_context(|| format!("range {s:?} is not lo:hi"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .with_context(|| format!("bad range start in {s:?}"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .with_context(|| format!("bad range end in {s:?}"))?;
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo, hi))
}

fn labels(lo: i64, hi: i64) -> Vec<String> {
    (lo..=hi).map(|j| j.to_string()).collect()
}

fn json_line(v: impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(&v).expect("serializable");
    s.push('\n');
    s
}

impl<'a, F: Field> Session<'a, F> {
    fn new(cli: &'a Cli, q: F, format: Format) -> Result<Self> {
        Ok(Session {
            cli,
            ctx: QuantumExterior::new(q)?,
            format,
        })
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.cli.out {
            Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn module(&self, spec: ModuleSpec, opposite: bool) -> Module<F> {
        let alg = self.ctx.algebra();
        match spec {
            ModuleSpec::Regular if opposite => Module::regular(&alg.opposite()),
            ModuleSpec::Regular => Module::regular(alg),
            ModuleSpec::Left(j) => self.ctx.ideal_module(j),
            ModuleSpec::Right(j) => self.ctx.right_ideal_module(j),
        }
    }

    fn dispatch(&self) -> Result<u8> {
        match &self.cli.command {
            Command::Build => {
                let j = self.ctx.algebra().to_json();
                self.emit(&format!("{}\n", serde_json::to_string_pretty(&j)?))?;
                Ok(0)
            }
            Command::HomTable { range } => self.hom_table(range),
            Command::ExtTable { range, degree } => self.ext_table(range, *degree),
            Command::Syzygy { left, depth } => self.syzygy(left, *depth),
            Command::Dsplit { n, range } => self.dsplit(*n, range.as_deref()),
            Command::Ay { lambda, emit } => self.ay(lambda, *emit),
            Command::Domdim { lambda, cap } => self.domdim(lambda, *cap),
            Command::Iso { left, right } => self.iso(left, right),
            Command::Battery { lambda, depth } => {
                let phi = AdmissibleSet::parse(&lambda.phi)?;
                let r = self.ctx.verify_battery(lambda.n, lambda.m, &phi, *depth)?;
                self.emit(&r.render(self.format))?;
                Ok(if r.has_mismatch() { EXIT_MISMATCH } else { 0 })
            }
            Command::Selftest => self.selftest(),
        }
    }

    fn hom_table(&self, range: &str) -> Result<u8> {
        let (lo, hi) = parse_range(range)?;
        let alg = self.ctx.algebra();
        let values: Vec<Vec<usize>> = (lo..=hi)
            .map(|j| {
                (lo..=hi)
                    .map(|i| hom_dim_theta(alg, &self.ctx.u(j), &self.ctx.u(i)))
                    .collect()
            })
            .collect();
        let t = Table::grid(
            "dim Hom(I_j, I_i)",
            "j\\i",
            &labels(lo, hi),
            &labels(lo, hi),
            &values,
        );
        self.emit(&render_table(&t, self.format))?;
        let ok = (lo..=hi).zip(&values).all(|(j, row)| {
            (lo..=hi)
                .zip(row)
                .all(|(i, &d)| d == if i == j || i == j + 2 { 3 } else { 2 })
        });
        Ok(if ok { 0 } else { EXIT_MISMATCH })
    }

    fn ext_table(&self, range: &str, degree: usize) -> Result<u8> {
        let (lo, hi) = parse_range(range)?;
        let ms = (lo..=hi).map(|j| self.ctx.ideal_module(j)).collect();
        let ctx = ExtContext::new(self.ctx.algebra(), ms)?;
        let k = (hi - lo + 1) as usize;
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect();
        let flat = ext_table(&ctx, &pairs, &[degree])?;
        let values: Vec<Vec<usize>> = flat
            .chunks(k)
            .map(|c| c.iter().map(|r| r[0]).collect())
            .collect();
        let t = Table::grid(
            format!("dim Ext^{degree}(I_j, I_i)"),
            "j\\i",
            &labels(lo, hi),
            &labels(lo, hi),
            &values,
        );
        self.emit(&render_table(&t, self.format))?;
        if degree != 1 {
            return Ok(0);
        }
        let ok = (lo..=hi).zip(&values).all(|(j, row)| {
            (lo..=hi)
                .zip(row)
                .all(|(i, &d)| d == usize::from(j <= i && i <= j + 3))
        });
        Ok(if ok { 0 } else { EXIT_MISMATCH })
    }

    fn syzygy(&self, spec: &str, depth: usize) -> Result<u8> {
        let spec = parse_module(spec)?;
        let opposite = matches!(spec, ModuleSpec::Right(_));
        let mut t = Table::new(
            format!("syzygies of {}", spec_label(spec)),
            ["step", "dim", "expected", "isomorphic"]
                .map(String::from)
                .to_vec(),
        );
        let mut cur = self.module(spec, opposite);
        let mut ok = true;
        for step in 1..=depth {
            cur = cur.syzygy()?;
            // Ω(I_j) = I_{j+1} and Ω(J_{j+1}) = J_j
            let expected = match spec {
                ModuleSpec::Regular => None,
                ModuleSpec::Left(j) => Some((
                    format!("I_{}", j + step as i64),
                    self.ctx.ideal_module(j + step as i64),
                )),
                ModuleSpec::Right(j) => Some((
                    format!("J_{}", j - step as i64),
                    self.ctx.right_ideal_module(j - step as i64),
                )),
            };
            let (name, iso) = match &expected {
                Some((name, m)) => {
                    let d = is_isomorphic(&cur, m)?;
                    ok &= d.is_isomorphic();
                    (name.clone(), d.summary())
                }
                None => {
                    ok &= cur.is_zero();
                    ("0".into(), cur.is_zero().to_string())
                }
            };
            t.push(vec![step.to_string(), cur.dim().to_string(), name, iso]);
            if cur.is_zero() {
                break;
            }
        }
        self.emit(&render_table(&t, self.format))?;
        Ok(if ok { 0 } else { EXIT_MISMATCH })
    }

    fn dsplit(&self, n: usize, range: Option<&str>) -> Result<u8> {
        let (lo, hi) = match range {
            Some(r) => parse_range(r)?,
            None => (-8, n as i64 + 8),
        };
        let rows = self.ctx.dsplit_range(n, lo, hi)?;
        let mut t = Table::new(
            format!(
                "D-split scan, D = A + {}",
                if n == 0 {
                    "I_0".to_string()
                } else {
                    format!("I_0..I_{n}")
                }
            ),
            ["j", "d-split", "ext criterion", "expected"]
                .map(String::from)
                .to_vec(),
        );
        let mut ok = true;
        for r in &rows {
            let expected = r.j > n as i64 + 2 || r.j < -3;
            ok &= expected == r.definitional && r.definitional == r.ext_criterion;
            t.push(vec![
                r.j.to_string(),
                r.definitional.to_string(),
                r.ext_criterion.to_string(),
                expected.to_string(),
            ]);
        }
        self.emit(&render_table(&t, self.format))?;
        Ok(if ok { 0 } else { EXIT_MISMATCH })
    }

    fn ay(&self, args: &LambdaArgs, emit: Emit) -> Result<u8> {
        let phi = AdmissibleSet::parse(&args.phi)?;
        let l = self.ctx.build_lambda(args.n, args.m, &phi)?;
        let alg = l.algebra();
        let printed = args.n == 0 && phi.elements() == [0] && !(-2..=2).contains(&args.m);
        let cartan = alg.cartan_matrix()?;
        let out = match emit {
            Emit::Dims => json_line(serde_json::json!({
                "dim": alg.dim(),
                "vertices": cartan.len(),
                "phi": phi.to_string(),
            })),
            Emit::Cartan => json_line(&cartan),
            Emit::Arrows => json_line(alg.arrow_counts()?),
            Emit::Json => format!("{}\n", serde_json::to_string_pretty(&alg.to_json())?),
        };
        self.emit(&out)?;
        let ok = !printed
            || (alg.dim() == 34 && cartan == vec![vec![8, 4, 4], vec![4, 3, 2], vec![4, 2, 3]]);
        Ok(if ok { 0 } else { EXIT_MISMATCH })
    }

    fn domdim(&self, args: &LambdaArgs, cap: usize) -> Result<u8> {
        let phi = AdmissibleSet::parse(&args.phi)?;
        let l = self.ctx.build_lambda(args.n, args.m, &phi)?;
        let mut r = Report::new(format!("dominant dimension of {}", l.algebra().name()));
        let expected = match phi.elements() {
            [0] => Some(2usize),
            [0, 1] => Some(0),
            _ => None,
        };
        let exact = |d: usize| ayalg::homological::Bounded::Exact(d);
        r.check_opt(
            "coresolution",
            expected.map(exact),
            dominant_dimension(l.algebra(), cap)?,
        );
        if phi.elements() == [0] {
            r.check(
                "Ext vanishing",
                exact(2),
                dominant_dimension_by_ext_vanishing(&l.context, cap)?,
            );
        }
        self.emit(&r.render(self.format))?;
        Ok(if r.has_mismatch() { EXIT_MISMATCH } else { 0 })
    }

    fn iso(&self, left: &str, right: &str) -> Result<u8> {
        let (a, b) = (parse_module(left)?, parse_module(right)?);
        let opposite = matches!(a, ModuleSpec::Right(_)) || matches!(b, ModuleSpec::Right(_));
        if opposite && (matches!(a, ModuleSpec::Left(_)) || matches!(b, ModuleSpec::Left(_))) {
            bail!(
                "I:j is a module over A and J:j over the opposite algebra; they cannot be compared"
            );
        }
        let d = is_isomorphic(&self.module(a, opposite), &self.module(b, opposite))?;
        match self.format {
            Format::Json => self.emit(&json_line(serde_json::json!({
                "left": left,
                "right": right,
                "isomorphic": d.is_isomorphic(),
                "summary": d.summary(),
            })))?,
            _ => self.emit(&format!("{}\n", d.summary()))?,
        }
        Ok(0)
    }

    fn selftest(&self) -> Result<u8> {
        let alg = self.ctx.algebra();
        let mut r = Report::new("self test");
        r.parameter("q", self.ctx.q());
        let mut audits = vec![
            alg.associativity_audit().is_ok(),
            alg.opposite().associativity_audit().is_ok(),
        ];
        for phi in ["0", "0,1"] {
            let l = self.ctx.build_lambda(0, 4, &AdmissibleSet::parse(phi)?)?;
            audits.push(l.algebra().associativity_audit().is_ok());
        }
        audits.push(
            self.ctx
                .build_lambda_matrix(0, 4)?
                .associativity_audit()
                .is_ok(),
        );
        r.check("associativity audits", vec![true; audits.len()], audits);

        let mut agree = true;
        for j in -2..=2 {
            for i in -2..=2 {
                let (x, y) = (self.ctx.u(j), self.ctx.u(i));
                let (mx, my) = (self.ctx.ideal_module(j), self.ctx.ideal_module(i));
                let dims = [
                    hom_dim_theta(alg, &x, &y),
                    hom_dim_phi(alg, &x, &y),
                    hom_space(&mx, &my)?.dim(),
                    hom_space_intertwiner(&mx, &my)?.dim(),
                ];
                agree &= dims.iter().all(|&d| d == dims[0]);
            }
        }
        r.check("hom dimensions agree on [-2,2]", true, agree);

        let mut cases = 0;
        let mut same = true;
        for mask in 0u32..64 {
            let set: Vec<u32> = std::iter::once(0)
                .chain((1..=6).filter(|b| mask >> (b - 1) & 1 == 1))
                .collect();
            cases += 1;
            same &= is_admissible(&set) == admissible_by_definition(&set);
        }
        r.check(
            "admissible sets on subsets of {0..6}",
            (64, true),
            (cases, same),
        );

        let ctx = ExtContext::new(alg, (0..3).map(|j| self.ctx.ideal_module(j)).collect())?;
        let mut triples = 0;
        let mut assoc = true;
        'outer: for code in 0..81 {
            let (s, t, u, v) = (code / 27, code / 9 % 3, code / 3 % 3, code % 3);
            for degs in [(1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)] {
                let (da, db, dc) = degs;
                if ctx.dim(s, t, da)? == 0 || ctx.dim(t, u, db)? == 0 || ctx.dim(u, v, dc)? == 0 {
                    continue;
                }
                let a = ctx.basis_class(s, t, da, 0)?;
                let b = ctx.basis_class(t, u, db, 0)?;
                let c = ctx.basis_class(u, v, dc, 0)?;
                let left = ctx.yoneda(&ctx.yoneda(&a, &b)?, &c)?;
                let right = ctx.yoneda(&a, &ctx.yoneda(&b, &c)?)?;
                triples += 1;
                assoc &= left == right && ctx.yoneda_with(&a, &b, 7)? == ctx.yoneda(&a, &b)?;
                if triples == 60 {
                    break 'outer;
                }
            }
        }
        r.check("Yoneda associativity and lift independence", true, assoc);
        r.note(format!("{triples} triples"));
        self.emit(&r.render(self.format))?;
        Ok(if r.has_mismatch() { EXIT_MISMATCH } else { 0 })
    }
}

/// Admissibility straight from the definition, kept separate from the library check.
fn admissible_by_definition(set: &[u32]) -> bool {
    let has = |x: u32| set.contains(&x);
    has(0)
        && set.iter().all(|&p| {
            set.iter().all(|&q| {
                set.iter()
                    .all(|&r| !has(p + q + r) || has(p + q) == has(q + r))
            })
        })
}
