//! Command-line surface. [`run`] is the whole program minus process I/O.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bwb::{bwb_cohomology, BundleExpr, CohomologyOutcome};
use crate::decomp::{bs_decompose, BSDecomposition};
use crate::error::{Error, ErrorKind, Result};
use crate::ktheory::{
    decompose_cor14, k0_class, standard_basis, subgroup_index, w_classes, wperp_classes, Side,
};
use crate::monad::{
    build_monad, corollary19, efw_insert, efw_shape, page_convergence, phi1_line_bundle_strands,
    phi1_page, phi2_page, prop51_check, pure_resolution, theorem18, Convergence, EFWShape,
    MonadData,
};
use crate::rational::{self, frac};
use crate::sheaves::{cohomology_table, CohomologyTable, SheafExpr, SheafTerm, Window};
use crate::weights::{DegreeSequence, Weight};

const TABLE_HELP: &str = "Tables print degree rows from n (top) down to 0 and twists left to right; \
zero entries print as '.'. Rationals always print as p/q in lowest terms.";

#[derive(Parser, Debug)]
#[command(name = "supernatural", version, about = "Exact BWB cohomology, supernatural monads and Boij–Söderberg decompositions on P^n", after_help = TABLE_HELP)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology of S_α Q* ⊗ O(d) by Borel–Weil–Bott
    Bwb {
        #[arg(long)]
        n: usize,
        /// Weakly decreasing weight with n parts (default all zero)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Option<Vec<i64>>,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Cohomology table γ_{i,j} = h^i(F(j)) on a window
    Table {
        #[command(flatten)]
        sheaf: SheafArgs,
        /// Inclusive twist range a:b
        #[arg(long, allow_hyphen_values = true)]
        window: Window,
    },
    /// μ(W), N_W and the dual collection W^⊥
    Monad {
        #[command(flatten)]
        monad: MonadArgs,
    },
    /// Shape of the equivariant pure resolution of a degree sequence
    Efw {
        /// Strictly increasing degree sequence
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["w", "insert"])]
        degrees: Option<Vec<i64>>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "insert")]
        w: Option<Vec<i64>>,
        /// Degree inserted into W
        #[arg(long, allow_hyphen_values = true, requires = "w")]
        insert: Option<i64>,
    },
    /// E^1 page of Φ_1^W or Φ_2^W
    Page {
        #[arg(value_enum)]
        which: Which,
        #[command(flatten)]
        monad: MonadArgs,
        #[command(flatten)]
        sheaf: SheafArgs,
    },
    /// Strands of Φ_1^W(O(d))
    Strands {
        #[command(flatten)]
        monad: MonadArgs,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Pure resolution of type W of a regular sheaf
    PureRes {
        #[command(flatten)]
        monad: MonadArgs,
        #[command(flatten)]
        sheaf: SheafArgs,
    },
    /// Filtration of Φ_2^W(F) for F supported on W^⊥
    Thm18 {
        #[command(flatten)]
        monad: MonadArgs,
        #[command(flatten)]
        sheaf: SheafArgs,
        /// Inclusive twist range a:b
        #[arg(long, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Φ_2^W of a supernatural sheaf
    Cor19 {
        #[command(flatten)]
        monad: MonadArgs,
        #[command(flatten)]
        sheaf: SheafArgs,
    },
    /// Entrywise bound γ(Φ_2^W(F)) ≥ N_W γ(F)
    Prop51 {
        #[command(flatten)]
        monad: MonadArgs,
        #[command(flatten)]
        sheaf: SheafArgs,
        /// Inclusive twist range a:b
        #[arg(long, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Boij–Söderberg decomposition of a table
    Decompose {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "table")]
        sheaf: Option<String>,
        /// Cohomology table JSON or @file
        #[arg(long, conflicts_with = "sheaf")]
        table: Option<String>,
        /// Inclusive twist range a:b
        #[arg(long, allow_hyphen_values = true)]
        window: Option<Window>,
    },
    /// Grothendieck group computations
    K0 {
        #[command(subcommand)]
        op: K0Op,
    },
    /// Worked examples
    Example {
        #[arg(value_enum)]
        name: ExampleName,
    },
}

#[derive(Subcommand, Debug)]
enum K0Op {
    /// χ-profile and standard coordinates of [F]
    Class {
        #[command(flatten)]
        sheaf: SheafArgs,
    },
    /// Coordinates of [F] in W and in W^⊥
    Coords {
        #[command(flatten)]
        monad: MonadArgs,
        #[command(flatten)]
        sheaf: SheafArgs,
    },
    /// Subgroup indices of W and W^⊥
    Index {
        #[command(flatten)]
        monad: MonadArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Phi1,
    Phi2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExampleName {
    /// Rank three bundle on P^2 from W = (0,2,3)
    RankThree,
    /// The formal sum γ(Q*) + 1/3 γ(Sym^2 Q*(1))
    FormalSum,
    /// The structure sheaf of a line in P^2
    LineInPlane,
    /// Φ_2 of O on P^2
    StructureSheaf,
    /// Categorifying the formal sum
    Categorify,
}

#[derive(Args, Debug)]
struct MonadArgs {
    #[arg(long)]
    n: usize,
    /// Strictly increasing w_0,…,w_n
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    w: Vec<i64>,
}

impl MonadArgs {
    fn build(&self) -> Result<MonadData> {
        build_monad(&self.w, self.n)
    }
}

#[derive(Args, Debug)]
struct SheafArgs {
    /// Sheaf expression as JSON or @file
    #[arg(long, allow_hyphen_values = true)]
    sheaf: String,
}

impl SheafArgs {
    fn parse(&self, n: Option<usize>) -> Result<SheafExpr> {
        parse_sheaf(&self.sheaf, n)
    }
}

fn read_arg(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Invalid {
            field: "sheaf",
            detail: format!("cannot read {path}: {e}"),
        }),
        None => Ok(s.to_string()),
    }
}

fn parse_sheaf(s: &str, n: Option<usize>) -> Result<SheafExpr> {
    let f: SheafExpr = serde_json::from_str(&read_arg(s)?).map_err(|e| Error::Invalid {
        field: "sheaf",
        detail: e.to_string(),
    })?;
    if let Some(n) = n {
        if f.n() != n {
            return Err(Error::AmbientMismatch { left: n, right: f.n() });
        }
    }
    Ok(f)
}

/// What a command produced: human text and the JSON value.
struct Output {
    text: String,
    json: Value,
}

fn out(text: String, json: Value) -> Result<Output> {
    Ok(Output { text, json })
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Validation => 2,
        ErrorKind::Refusal => 3,
        ErrorKind::InvariantBreach => 4,
    }
}

fn kind_name(kind: ErrorKind) -> &'static str {
    match kind {
        ErrorKind::Validation => "validation",
        ErrorKind::Refusal => "refusal",
        ErrorKind::InvariantBreach => "invariant_breach",
    }
}

/// Parses and executes one command line (the first item is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: rendered, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(o) => Outcome {
            stdout: match format {
                Format::Text => o.text,
                Format::Json => {
                    serde_json::to_string_pretty(&o.json).expect("serializable") + "\n"
                }
            },
            stderr: String::new(),
            code: 0,
        },
        Err(e) => {
            let code = exit_code(e.kind());
            match format {
                Format::Text => Outcome {
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                    code,
                },
                Format::Json => Outcome {
                    stdout: serde_json::to_string_pretty(&json!({
                        "error": {"kind": kind_name(e.kind()), "code": code, "message": e.to_string()}
                    }))
                    .expect("serializable")
                        + "\n",
                    stderr: String::new(),
                    code,
                },
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Bwb { n, alpha, d } => cmd_bwb(n, alpha, d),
        Command::Table { sheaf, window } => {
            let f = sheaf.parse(None)?;
            let t = cohomology_table(&f, window)?;
            out(t.render(), to_json(&t))
        }
        Command::Monad { monad } => cmd_monad(&monad.build()?),
        Command::Efw { degrees, n, w, insert } => cmd_efw(degrees, n, w, insert),
        Command::Page { which, monad, sheaf } => {
            let m = monad.build()?;
            let f = sheaf.parse(Some(m.n()))?;
            let page = match which {
                Which::Phi1 => phi1_page(&f, &m)?,
                Which::Phi2 => phi2_page(&f, &m)?,
            };
            let conv = page_convergence(&page)?;
            out(
                format!("{}{}\n", page.render(), conv.render()),
                json!({"page": to_json(&page), "convergence": to_json(&conv)}),
            )
        }
        Command::Strands { monad, d } => {
            let r = phi1_line_bundle_strands(d, &monad.build()?)?;
            out(r.render() + "\n", to_json(&r))
        }
        Command::PureRes { monad, sheaf } => {
            let m = monad.build()?;
            let r = pure_resolution(&sheaf.parse(Some(m.n()))?, &m)?;
            out(r.render() + "\n", to_json(&r))
        }
        Command::Thm18 { monad, sheaf, window } => {
            let m = monad.build()?;
            let f = sheaf.parse(Some(m.n()))?;
            let window = window.unwrap_or_else(|| Window::for_collection(m.w(), m.n()));
            let r = theorem18(&f, &m, window)?;
            out(r.render(), to_json(&r))
        }
        Command::Cor19 { monad, sheaf } => {
            let m = monad.build()?;
            let r = corollary19(&sheaf.parse(Some(m.n()))?, &m)?;
            out(r.render(), to_json(&r))
        }
        Command::Prop51 { monad, sheaf, window } => {
            let m = monad.build()?;
            let f = sheaf.parse(Some(m.n()))?;
            let window = window.unwrap_or_else(|| Window::for_collection(m.w(), m.n()));
            let (source, phi) = phi2_table(&f, &m, window)?;
            let r = prop51_check(&f, &m, &phi, window)?;
            out(
                format!("Φ_2 table from {source}\n{}\n{}", phi.render(), r.render()),
                json!({"phi2_table_source": source, "phi2_table": to_json(&phi), "report": to_json(&r)}),
            )
        }
        Command::Decompose { n, sheaf, table, window } => cmd_decompose(n, sheaf, table, window),
        Command::K0 { op } => cmd_k0(op),
        Command::Example { name } => match name {
            ExampleName::RankThree => example_rank_three(),
            ExampleName::FormalSum => example_formal_sum(),
            ExampleName::LineInPlane => example_line_in_plane(),
            ExampleName::StructureSheaf => example_structure_sheaf(),
            ExampleName::Categorify => example_categorify(),
        },
    }
}

fn cmd_bwb(n: usize, alpha: Option<Vec<i64>>, d: i64) -> Result<Output> {
    let alpha = match alpha {
        Some(a) => Weight::new(a)?,
        None => Weight::zero(n),
    };
    let r = bwb_cohomology(&alpha, d, n)?;
    let text = match &r {
        CohomologyOutcome::Vanishing => format!("H^*(P^{n}, S_{alpha} Q*({d})) = 0\n"),
        CohomologyOutcome::Nonvanishing { degree, gamma, dimension } => format!(
            "H^{degree}(P^{n}, S_{alpha} Q*({d})) = S_{gamma} V*\ndegree {degree}\ndimension {dimension}\n"
        ),
    };
    out(text, to_json(&r))
}

/// Integers as JSON numbers when they fit, strings otherwise.
fn big(x: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn cmd_monad(m: &MonadData) -> Result<Output> {
    m.check_orthogonality()?;
    let rank = phi1_page(&SheafExpr::line(m.n(), 0), m)?.alternating_rank();
    let w: Vec<String> = m.w().iter().map(|x| x.to_string()).collect();
    let mut text = format!("W = ({})\nmu(W) = {}\nN_W = {}\n", w.join(","), m.mu(), m.n_w());
    for (j, e) in m.wperp().iter().enumerate() {
        text += &format!("E_{j} = {e}\n");
    }
    text += &format!("rank Φ_1(O) = {rank}\northogonality h^i(E_k(-w_j)) = N_W·δ: verified\n");
    let names: Vec<String> = m.wperp().iter().map(|e| e.to_string()).collect();
    out(
        text,
        json!({
            "n": m.n(),
            "w": m.w(),
            "mu": m.mu(),
            "n_w": big(m.n_w()),
            "n_w_binomial_determinant": big(&crate::monad::binomial_determinant(m.w())),
            "wperp": to_json(&m.wperp()),
            "wperp_names": names,
            "rank_phi1_structure_sheaf": big(&rank),
            "orthogonality": "verified",
        }),
    )
}

fn render_efw(shape: &EFWShape, pos: Option<usize>) -> String {
    let mut text = format!("{}\n", shape.render());
    for (j, (w, b)) in shape.weights.iter().zip(&shape.ranks).enumerate() {
        text += &format!("  λ^{j} = {w}, rank {b}\n");
    }
    if let Some(p) = pos {
        text += &format!("inserted slot {p} has rank {}\n", shape.ranks[p]);
    }
    text
}

fn cmd_efw(
    degrees: Option<Vec<i64>>,
    n: Option<usize>,
    w: Option<Vec<i64>>,
    insert: Option<i64>,
) -> Result<Output> {
    match (degrees, w, insert) {
        (Some(d), _, _) => {
            let d = DegreeSequence::new(d)?;
            let shape = efw_shape(&d, d.length())?;
            out(render_efw(&shape, None), to_json(&shape))
        }
        (None, Some(w), Some(e)) => {
            let n = n.unwrap_or(w.len().saturating_sub(1));
            let m = build_monad(&w, n)?;
            let (shape, pos) = efw_insert(&m, e)?;
            out(
                render_efw(&shape, Some(pos)),
                json!({"shape": to_json(&shape), "inserted_position": pos, "n_w": big(m.n_w())}),
            )
        }
        _ => Err(Error::Invalid {
            field: "degrees",
            detail: "give --degrees, or --w with --insert".into(),
        }),
    }
}

/// `γ(Φ_2^W(F))` when it is determined: via the W^⊥ filtration or a certified split page.
fn phi2_table(f: &SheafExpr, m: &MonadData, window: Window) -> Result<(&'static str, CohomologyTable)> {
    if let Ok(r) = theorem18(f, m, window) {
        return Ok(("the W^⊥ filtration", r.verdict.quotient_sum));
    }
    match page_convergence(&phi2_page(f, m)?)? {
        Convergence::Empty => Ok(("an empty page", CohomologyTable::zero(m.n(), window))),
        Convergence::Filtration(fl) if fl.is_split() => {
            Ok(("a certified split page", fl.table(m.n(), window)?))
        }
        other => Err(Error::Unsupported(format!(
            "the Φ_2 table is not determined by the page: {}",
            other.render()
        ))),
    }
}

fn cmd_decompose(
    n: Option<usize>,
    sheaf: Option<String>,
    table: Option<String>,
    window: Option<Window>,
) -> Result<Output> {
    let t = match (sheaf, table) {
        (_, Some(t)) => {
            let t: CohomologyTable = serde_json::from_str(&read_arg(&t)?).map_err(|e| Error::Invalid {
                field: "table",
                detail: e.to_string(),
            })?;
            match window {
                Some(w) => t.restrict(w)?,
                None => t,
            }
        }
        (Some(s), None) => {
            let f = parse_sheaf(&s, n)?;
            let window = window.ok_or(Error::Invalid {
                field: "window",
                detail: "decomposing a sheaf needs --window a:b".into(),
            })?;
            cohomology_table(&f, window)?
        }
        (None, None) => unreachable!("clap requires one of --sheaf, --table"),
    };
    let d: BSDecomposition = bs_decompose(&t)?;
    if d.reconstruct(t.n(), t.window()) != t {
        return Err(Error::breach("decomposition does not reassemble the table"));
    }
    out(d.render(), to_json(&d))
}

fn cmd_k0(op: K0Op) -> Result<Output> {
    match op {
        K0Op::Class { sheaf } => {
            let f = sheaf.parse(None)?;
            let c = k0_class(&f)?;
            let chi: Vec<String> = c.chi_profile().iter().map(|x| x.to_string()).collect();
            let std = c.standard_coordinates();
            let shown: Vec<String> = std.iter().map(|x| x.to_string()).collect();
            out(
                format!("χ-profile ({})\nstandard coordinates ({})\n", chi.join(", "), shown.join(", ")),
                json!({
                    "n": c.n(),
                    "chi_profile": c.chi_profile().iter().map(big).collect::<Vec<_>>(),
                    "standard_coordinates": std.iter().map(big).collect::<Vec<_>>(),
                }),
            )
        }
        K0Op::Coords { monad, sheaf } => {
            let m = monad.build()?;
            let f = sheaf.parse(Some(m.n()))?;
            let w = decompose_cor14(&f, &m, Side::W)?;
            let p = decompose_cor14(&f, &m, Side::Wperp)?;
            out(
                format!("in W: {}\nin W^⊥: {}\n", w.render(), p.render()),
                json!({"w": to_json(&w), "wperp": to_json(&p)}),
            )
        }
        K0Op::Index { monad } => {
            let m = monad.build()?;
            let iw = subgroup_index(&w_classes(&m));
            let ip = subgroup_index(&wperp_classes(&m));
            let is = subgroup_index(&standard_basis(m.n()));
            out(
                format!("index of W = {iw}\nindex of W^⊥ = {ip}\nN_W = {}\nindex of standard basis = {is}\n", m.n_w()),
                json!({"w": big(&iw), "wperp": big(&ip), "n_w": big(m.n_w()), "standard": big(&is)}),
            )
        }
    }
}

fn example_monad() -> MonadData {
    build_monad(&[0, 2, 3], 2).expect("valid collection")
}

/// `Q* ⊕ (1/3)·(Sym^2 Q*)(1)` on `P^2`.
fn formal_sum() -> SheafExpr {
    let sym2 = BundleExpr::schur(2, Weight::new(vec![2, 0]).expect("weight"), 1).expect("bundle");
    SheafExpr::bundle(BundleExpr::q_dual(2))
        .plus(frac(1, 3), SheafTerm::Bundle(sym2))
        .expect("valid term")
}

fn example_rank_three() -> Result<Output> {
    cmd_monad(&example_monad())
}

fn example_formal_sum() -> Result<Output> {
    let f = formal_sum();
    let w = Window::new(-6, 4)?;
    let t = cohomology_table(&f, w)?;
    let d = bs_decompose(&t)?;
    let text = format!(
        "F = {f}\nγ(F) on {w}:\n{}h^0(F(1)) = {}\nBoij–Söderberg decomposition:\n{}",
        t.render(),
        rational::fmt(t.get(0, 1)),
        d.render()
    );
    out(text, json!({"sheaf": to_json(&f), "table": to_json(&t), "decomposition": to_json(&d)}))
}

fn example_line_in_plane() -> Result<Output> {
    let m = example_monad();
    let l = SheafExpr::linear_subspace(2, 1, 0)?;
    let w = decompose_cor14(&l, &m, Side::W)?;
    let p = decompose_cor14(&l, &m, Side::Wperp)?;
    let p1 = phi1_page(&l, &m)?;
    let c1 = page_convergence(&p1)?;
    let p2 = phi2_page(&l, &m)?;
    let c2 = page_convergence(&p2)?;
    let text = format!(
        "F = {l}, W = (0,2,3)\n[F] in W: {}\n[F] in W^⊥: {}\n{}{}\n{}{}\n",
        w.render(),
        p.render(),
        p1.render(),
        c1.render(),
        p2.render(),
        c2.render()
    );
    out(
        text,
        json!({
            "coords_w": to_json(&w), "coords_wperp": to_json(&p),
            "phi1": {"page": to_json(&p1), "convergence": to_json(&c1)},
            "phi2": {"page": to_json(&p2), "convergence": to_json(&c2)},
        }),
    )
}

fn example_structure_sheaf() -> Result<Output> {
    let m = example_monad();
    let o = SheafExpr::line(2, 0);
    let page = phi2_page(&o, &m)?;
    let conv = page_convergence(&page)?;
    let window = Window::new(-6, 4)?;
    let (_, phi) = phi2_table(&o, &m, window)?;
    let r = prop51_check(&o, &m, &phi, window)?;
    let text = format!("{}{}\n{}", page.render(), conv.render(), r.render());
    out(
        text,
        json!({"page": to_json(&page), "convergence": to_json(&conv), "prop51": to_json(&r)}),
    )
}

fn example_categorify() -> Result<Output> {
    let m = example_monad();
    let f = formal_sum();
    let window = Window::new(-6, 4)?;
    let r = theorem18(&f, &m, window)?;
    let d = bs_decompose(&cohomology_table(&f, window)?)?;
    let text = format!("F = {f}, W = (0,2,3)\n{}Boij–Söderberg decomposition:\n{}", r.render(), d.render());
    out(text, json!({"categorification": to_json(&r), "decomposition": to_json(&d)}))
}
