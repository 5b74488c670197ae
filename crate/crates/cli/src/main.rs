use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hallprim::cyclic_fq::{
    aut_count, classes_up_to, end_dim, enumerate_iso, is_central, is_primitive_numeric,
    submodule_count, theorem_element, z_r_numeric,
};
use hallprim::hall_jordan::{
    coproduct_basis, hall_identity_sides, hall_polynomial, is_primitive, mul, primitive_center,
    primitive_macdonald_image,
};
use hallprim::symfunc::{
    c_in_p, hall_littlewood_p, macdonald_coefficients, macdonald_primitive, p_from_c_closed,
    p_from_c_compositions, render_hl_basis, render_hl_basis_latex,
};
use hallprim::verify::{crosscheck_jordan, run_all, P3_WARNING, SIGN_WARNING};
use hallprim::{CyclicIsoClass, Error, HallElem, Partition, SymFunc};

#[derive(Parser)]
#[command(name = "hallprim", version, about = "Primitive elements of Hall algebras, computed exactly")]
struct Cli {
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true, conflicts_with = "latex")]
    json: bool,
    /// Print LaTeX instead of text.
    #[arg(long, global = true)]
    latex: bool,
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Symmetric functions.
    #[command(subcommand)]
    Symf(SymfCmd),
    /// The Hall algebra of the Jordan quiver, symbolic in q.
    #[command(subcommand)]
    Hall(HallCmd),
    /// The cyclic quiver over a finite field.
    #[command(subcommand)]
    Fq(FqCmd),
    /// Acceptance checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Compositions,
    Partitions,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Macdonald,
    Center,
}

#[derive(Subcommand)]
enum SymfCmd {
    /// c_n(X;t) in power sums.
    CInP { n: usize },
    /// p_n in the cyclic functions c_λ.
    PFromC {
        n: usize,
        #[arg(long, value_enum, default_value = "partitions")]
        via: Via,
    },
    /// Hall-Littlewood P_λ in power sums.
    #[command(name = "hl-P")]
    HlP { partition: Partition },
    /// The expansion of p_n in Hall-Littlewood functions.
    Macdonald { n: usize },
}

#[derive(Subcommand)]
enum HallCmd {
    /// [I_λ]·[I_μ].
    Mul { lambda: Partition, mu: Partition },
    /// Δ[I_λ].
    Coproduct { lambda: Partition },
    /// g^λ_{μν}(q).
    Polynomial {
        mu: Partition,
        nu: Partition,
        lambda: Partition,
    },
    /// The primitive element of degree n.
    Primitive {
        n: usize,
        #[arg(long, value_enum, default_value = "center")]
        method: Method,
    },
    /// Check primitivity of the degree-n element from both constructions.
    VerifyPrimitive { n: usize },
    /// Both sides of the Hall-number identity for λ ⊢ n.
    Identity { n: usize, lambda: Partition },
}

#[derive(Args)]
struct FieldArgs {
    /// Number of vertices.
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Field size (2, 3 or 5).
    #[arg(long, default_value_t = 2)]
    q: u32,
}

#[derive(Subcommand)]
enum FqCmd {
    /// Iso classes of dimension vector rδ.
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        deg: usize,
    },
    /// Number of submodules of R isomorphic to sub with quotient quot.
    Hallnum {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "R")]
        r: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        quot: String,
    },
    /// The central element z_r.
    Z {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        r: usize,
    },
    /// Check that z_r commutes with every class up to a dimension cap.
    VerifyCentral {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        dim_cap: usize,
    },
    /// Check primitivity of the central formula in degree nδ.
    VerifyPrimitive {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
    },
    /// Compare enumerated Hall numbers with Hall polynomials.
    Crosscheck {
        #[arg(long, default_value_t = 5)]
        max_weight: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        q: Vec<u32>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every acceptance check.
    All {
        #[arg(long)]
        fast: bool,
    },
}

struct Output {
    text: String,
    latex: String,
    result: Value,
    m: u32,
    warnings: Vec<String>,
    verified: bool,
}

impl Output {
    fn new(text: String, latex: String, result: Value) -> Self {
        Output {
            text,
            latex,
            result,
            m: 1,
            warnings: Vec::new(),
            verified: true,
        }
    }

    fn plain(text: String, result: Value) -> Self {
        Output::new(text.clone(), text, result)
    }

    fn on(mut self, m: u32) -> Self {
        self.m = m;
        self
    }

    fn warn(mut self, w: &str) -> Self {
        self.warnings.push(w.into());
        self
    }

    fn verified(mut self, ok: bool) -> Self {
        self.verified = ok;
        self
    }
}

fn conventions(m: u32) -> Value {
    json!({
        "vertices": m,
        "substitution": format!("t -> q^-{m}"),
        "z_prefactor": "(-q^-1)^(r*m)",
        "product_twist": "v^<dim M, dim N>, v^2 = q",
        "sign_convention": "printed closed forms are compared up to a global sign",
    })
}

fn parse_class(text: &str, m: u32) -> hallprim::Result<CyclicIsoClass> {
    CyclicIsoClass::parse_with_m(text, m)
}

fn hall_elem(x: &HallElem) -> Output {
    Output::new(x.render(), x.render_latex(), x.to_json())
}

fn sym(x: &SymFunc) -> Output {
    Output::new(x.render(), x.render_latex(), x.to_json())
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

fn symf(cmd: SymfCmd) -> hallprim::Result<Output> {
    Ok(match cmd {
        SymfCmd::CInP { n } => sym(&c_in_p(n)),
        SymfCmd::PFromC { n, via } => {
            require_positive(n)?;
            let x = match via {
                Via::Partitions => p_from_c_closed(n),
                Via::Compositions => p_from_c_compositions(n),
            };
            Output::new(x.render(), x.render_latex(), x.to_json())
        }
        SymfCmd::HlP { partition } => sym(&hall_littlewood_p(&partition)?),
        SymfCmd::Macdonald { n } => {
            require_positive(n)?;
            let coeffs = macdonald_coefficients(n);
            let equals = macdonald_primitive(n)? == SymFunc::monomial(Partition::single(n));
            let terms: Vec<Value> = coeffs
                .iter()
                .map(|(l, c)| json!({"partition": l.to_string(), "coefficient": c.render()}))
                .collect();
            Output::new(
                render_hl_basis(&coeffs),
                render_hl_basis_latex(&coeffs),
                json!({"hall_littlewood": terms, "equals_power_sum": equals}),
            )
            .verified(equals)
        }
    })
}

fn require_positive(n: usize) -> hallprim::Result<()> {
    if n == 0 {
        Err(Error::Parse("degree must be positive".into()))
    } else {
        Ok(())
    }
}

fn hall(cmd: HallCmd) -> hallprim::Result<Output> {
    Ok(match cmd {
        HallCmd::Mul { lambda, mu } => hall_elem(&mul(&HallElem::basis(lambda), &HallElem::basis(mu))?),
        HallCmd::Coproduct { lambda } => {
            let d = coproduct_basis(&lambda)?;
            Output::plain(d.render(), d.to_json())
        }
        HallCmd::Polynomial { mu, nu, lambda } => {
            let g = hall_polynomial(&mu, &nu, &lambda)?;
            Output::new(g.render(), g.render_latex(), json!(g.render()))
        }
        HallCmd::Primitive { n, method } => {
            require_positive(n)?;
            let x = match method {
                Method::Center => primitive_center(n, 1)?,
                Method::Macdonald => primitive_macdonald_image(n),
            };
            let out = hall_elem(&x);
            if n == 3 {
                out.warn(P3_WARNING)
            } else {
                out
            }
        }
        HallCmd::VerifyPrimitive { n } => {
            require_positive(n)?;
            let center = is_primitive(&primitive_center(n, 1)?)?;
            let macdonald = is_primitive(&primitive_macdonald_image(n))?;
            let text = format!("center: {}\nmacdonald: {}", flag(center), flag(macdonald));
            Output::plain(text, json!({"center": center, "macdonald": macdonald})).verified(center && macdonald)
        }
        HallCmd::Identity { n, lambda } => {
            let (lhs, rhs) = hall_identity_sides(n, &lambda)?;
            let equal = lhs == rhs;
            let text = format!("lhs: {}\nrhs: {}\nequal: {}", lhs.render(), rhs.render(), flag(equal));
            let latex = format!("{} = {}", lhs.render_latex(), rhs.render_latex());
            Output::new(text, latex, json!({"lhs": lhs.render(), "rhs": rhs.render(), "equal": equal}))
                .verified(equal)
        }
    })
}

fn fq(cmd: FqCmd) -> hallprim::Result<Output> {
    Ok(match cmd {
        FqCmd::Enumerate { field, deg } => {
            hallprim::cyclic_fq::check_field(field.q)?;
            let classes = enumerate_iso(field.m, &vec![deg; field.m as usize])?;
            let mut lines = Vec::new();
            let mut records = Vec::new();
            for c in &classes {
                let (e, a, s) = (end_dim(c), aut_count(c, field.q), c.socle_squarefree());
                lines.push(format!("{}\tdim End = {e}\t|Aut| = {a}\tsquare-free socle: {}", c.label(), flag(s)));
                records.push(json!({
                    "class": c.label(),
                    "end_dim": e,
                    "aut_count": a.to_string(),
                    "socle_squarefree": s,
                }));
            }
            Output::plain(lines.join("\n"), Value::Array(records)).on(field.m)
        }
        FqCmd::Hallnum { field, r, sub, quot } => {
            let (r, sub, quot) = (parse_class(&r, field.m)?, parse_class(&sub, field.m)?, parse_class(&quot, field.m)?);
            let g = submodule_count(&r, &sub, &quot, field.q)?;
            Output::plain(g.to_string(), json!(g.to_string())).on(field.m)
        }
        FqCmd::Z { field, r } => {
            let z = z_r_numeric(field.m, r, field.q)?;
            let out = Output::new(z.render(), z.render_latex(), z.to_json()).on(field.m);
            if field.m == 2 {
                out.warn(SIGN_WARNING)
            } else {
                out
            }
        }
        FqCmd::VerifyCentral { field, r, dim_cap } => {
            let z = z_r_numeric(field.m, r, field.q)?;
            let ok = is_central(&z, dim_cap)?;
            let tested = classes_up_to(field.m, dim_cap).len();
            let text = format!("central against {tested} classes of dimension <= {dim_cap}: {}", flag(ok));
            Output::plain(text, json!({"central": ok, "classes": tested, "dim_cap": dim_cap}))
                .on(field.m)
                .verified(ok)
        }
        FqCmd::VerifyPrimitive { field, n } => {
            require_positive(n)?;
            let x = theorem_element(field.m, n, field.q)?;
            let ok = is_primitive_numeric(&x)?;
            let text = format!("{}\nprimitive: {}", x.render(), flag(ok));
            Output::new(text, x.render_latex(), json!({"element": x.to_json(), "primitive": ok}))
                .on(field.m)
                .verified(ok)
        }
        FqCmd::Crosscheck { max_weight, q } => {
            let c = crosscheck_jordan(max_weight, &q)?;
            let mut text = format!(
                "{} Hall numbers and {} automorphism groups compared ({} also by direct enumeration): {}",
                c.hall_numbers,
                c.automorphism_groups,
                c.enumerated_groups,
                if c.passed() { "all equal" } else { "MISMATCH" }
            );
            for f in &c.failures {
                text.push_str("\n  ");
                text.push_str(f);
            }
            let ok = c.passed();
            Output::plain(text, serde_json::to_value(&c).expect("serializable")).verified(ok)
        }
    })
}

fn verify(cmd: VerifyCmd) -> Output {
    let VerifyCmd::All { fast } = cmd;
    let outcomes = run_all(fast);
    let ok = outcomes.iter().all(|o| o.passed);
    let text = outcomes.iter().map(|o| o.line()).collect::<Vec<_>>().join("\n");
    let mut warnings: Vec<String> = outcomes.iter().flat_map(|o| o.warnings.clone()).collect();
    warnings.dedup();
    let mut out = Output::plain(text, serde_json::to_value(&outcomes).expect("serializable")).verified(ok);
    out.warnings = warnings;
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json_mode, latex_mode) = (cli.json, cli.latex);
    let result = match cli.group {
        Group::Symf(c) => symf(c),
        Group::Hall(c) => hall(c),
        Group::Fq(c) => fq(c),
        Group::Verify(c) => Ok(verify(c)),
    };
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                Error::Parse(_) | Error::UnsupportedField(_) => 2,
                _ => 3,
            });
        }
    };
    if json_mode {
        let command: Vec<String> = std::env::args().skip(1).collect();
        let envelope = json!({
            "command": command.join(" "),
            "conventions": conventions(out.m),
            "result": out.result,
            "warnings": out.warnings,
        });
        println!("{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
    } else {
        println!("{}", if latex_mode { &out.latex } else { &out.text });
        for w in &out.warnings {
            eprintln!("warning: {w}");
        }
    }
    if out.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
