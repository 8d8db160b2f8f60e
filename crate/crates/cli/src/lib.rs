//! Front end for the `superchar` binary.

use std::fmt;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use superchar::oracle::{verify_rectangle_characters, verify_theorem1, Series};
use superchar::specialize::qdim_so_odd_degree;
use superchar::{
    char_osp1, char_osp_even, char_osp_even_fork_conj, char_osp_odd, char_so_even_fork, char_so_odd,
    check_fork_sum, default_degree, enumerate, qdim_so_odd, t_dimension, t_superdimension, verify_qdim_so7,
    verify_superdim_identity, CharExpansion, EnumConstraints, IdentityParams, PartitionClass, Ranks,
    SuperdimIdentity, TruncatedSeries, VerificationReport,
};

pub const MAX_WEIGHT_ENV: &str = "SUPERCHAR_MAX_WEIGHT";

#[derive(Parser, Debug)]
#[command(name = "superchar", version, about = "Exact so/osp rectangle and fork characters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur-function expansion of a character.
    Expand(Common),
    /// t-dimension series.
    Tdim(Common),
    /// t-superdimension series (osp families).
    Sdim(Common),
    /// q-dimension of so(2k+1)[0,…,0,p].
    Qdim(Common),
    /// List partitions under constraints.
    Enumerate(EnumerateArgs),
    /// Run a named check.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    SoOdd,
    SoEvenFork,
    Osp1,
    OspOdd,
    OspEven,
    OspEvenFork,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    All,
    B,
    Br,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    /// Truncation degree of a series.
    #[arg(long)]
    pub deg: Option<u32>,
    /// Largest label weight kept.
    #[arg(long)]
    pub cutoff: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub max_part: Option<u32>,
    #[arg(long)]
    pub max_length: Option<usize>,
    /// Hook `(m, n)`: needs both.
    #[arg(long, requires = "n")]
    pub m: Option<usize>,
    #[arg(long, requires = "m")]
    pub n: Option<u32>,
    #[arg(long, value_enum, default_value_t = ClassArg::All)]
    pub class: ClassArg,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, conflicts_with = "cutoff")]
    pub weight: Option<u32>,
    #[arg(long)]
    pub cutoff: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_parser = IDENTITIES)]
    pub identity: String,
    #[command(flatten)]
    pub common: Common,
    /// Run every `0 <= r <= p`.
    #[arg(long)]
    pub all_r: bool,
}

pub const IDENTITIES: [&str; 11] = [
    "e28",
    "e28b",
    "B-case1",
    "B-case2",
    "B-case3",
    "D-even",
    "D-odd",
    "theorem1",
    "rectangle",
    "D-fork-conj",
    "qdim-so7",
];

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(superchar::Error),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<superchar::Error> for CliError {
    fn from(e: superchar::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn need<T: Copy>(v: Option<T>, flag: &str, what: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for {what}")))
}

fn weight_cap() -> CliResult<Option<u32>> {
    match std::env::var(MAX_WEIGHT_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{MAX_WEIGHT_ENV}={s:?} is not a nonnegative integer"))),
        Err(_) => Ok(None),
    }
}

fn capped(v: u32, cap: Option<u32>) -> u32 {
    cap.map_or(v, |c| v.min(c))
}

impl Common {
    fn family(&self) -> CliResult<FamilyArg> {
        need(self.family, "family", "this verb")
    }

    /// `max(12, k·p)` where `k` is the total rank.
    fn degree(&self, cap: Option<u32>) -> CliResult<u32> {
        let p = self.p.unwrap_or(0);
        let rank = self.k.unwrap_or(0) + self.m.unwrap_or(0) + self.n.unwrap_or(0);
        Ok(capped(self.deg.unwrap_or_else(|| default_degree(rank, p)), cap))
    }

    fn label_cutoff(&self, cap: Option<u32>) -> CliResult<u32> {
        let p = self.p.unwrap_or(0);
        let rank = self.k.unwrap_or(0) + self.m.unwrap_or(0) + self.n.unwrap_or(0);
        Ok(capped(self.cutoff.unwrap_or_else(|| default_degree(rank, p)), cap))
    }

    fn expansion(&self, cutoff: u32) -> CliResult<CharExpansion> {
        let fam = self.family()?;
        let name = format!("--family {}", fam.to_possible_value().expect("no skipped variants").get_name());
        let p = need(self.p, "p", &name)?;
        let e = match fam {
            FamilyArg::SoOdd => char_so_odd(need(self.k, "k", &name)?, p)?,
            FamilyArg::SoEvenFork => char_so_even_fork(need(self.k, "k", &name)?, need(self.r, "r", &name)?, p)?,
            FamilyArg::Osp1 => char_osp1(need(self.n, "n", &name)?, p, cutoff)?,
            FamilyArg::OspOdd => char_osp_odd(need(self.m, "m", &name)?, need(self.n, "n", &name)?, p, cutoff)?,
            FamilyArg::OspEven => char_osp_even(need(self.m, "m", &name)?, need(self.n, "n", &name)?, p, cutoff)?,
            FamilyArg::OspEvenFork => char_osp_even_fork_conj(
                need(self.m, "m", &name)?,
                need(self.n, "n", &name)?,
                need(self.r, "r", &name)?,
                p,
                cutoff,
            )?,
        };
        Ok(e)
    }
}

fn header(e: &CharExpansion) -> String {
    let mut s = String::from(e.family.name());
    match e.ranks {
        Ranks::Single(k) if e.family == superchar::Family::Osp1Rect => s += &format!(" n={k}"),
        Ranks::Single(k) => s += &format!(" k={k}"),
        Ranks::Super { m, n } => s += &format!(" m={m} n={n}"),
    }
    if let Some(r) = e.r {
        s += &format!(" r={r}");
    }
    s + &format!(" p={} labels={}", e.p, e.dynkin_labels())
}

fn write_json(out: &mut dyn Write, v: &impl serde::Serialize) -> CliResult<()> {
    let text = serde_json::to_string(v).map_err(|e| CliError::Io(e.into()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_series(out: &mut dyn Write, format: Format, title: &str, s: &TruncatedSeries) -> CliResult<()> {
    match format {
        Format::Json => write_json(out, s),
        Format::Text => {
            writeln!(out, "{title} D={}", s.trunc())?;
            let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
            let width = coeffs.iter().map(String::len).max().unwrap_or(1);
            let dw = s.trunc().to_string().len();
            for (d, c) in coeffs.iter().enumerate() {
                writeln!(out, "{}^{d:<dw$}  {c:>width$}", s.variable)?;
            }
            Ok(())
        }
    }
}

fn expand(c: &Common, out: &mut dyn Write) -> CliResult<i32> {
    let cap = weight_cap()?;
    let e = c.expansion(c.label_cutoff(cap)?)?;
    match c.format {
        Format::Json => write_json(out, &e)?,
        Format::Text => {
            writeln!(out, "{}", header(&e))?;
            writeln!(
                out,
                "prefactor x^({}) y^({})",
                e.prefactor.x_exp, e.prefactor.y_exp
            )?;
            let tail = if e.complete { "complete" } else { "truncated" };
            writeln!(out, "cutoff {} ({tail}){}", e.cutoff, if e.conjectural { " conjectural" } else { "" })?;
            let width = e.terms.iter().map(|(_, k)| k.to_string().len()).max().unwrap_or(1);
            for (lam, k) in &e.terms {
                writeln!(out, "{k:>width$}  {lam}")?;
            }
        }
    }
    Ok(0)
}

fn tdim(c: &Common, out: &mut dyn Write) -> CliResult<i32> {
    let d = c.degree(weight_cap()?)?;
    let e = c.expansion(d)?;
    let s = t_dimension(&e, d)?;
    write_series(out, c.format, &format!("dim_t {}", header(&e)), &s)?;
    Ok(0)
}

fn sdim(c: &Common, out: &mut dyn Write) -> CliResult<i32> {
    let d = c.degree(weight_cap()?)?;
    let e = c.expansion(d)?;
    let s = t_superdimension(&e, d)?;
    write_series(out, c.format, &format!("sdim_t {}", header(&e)), &s)?;
    Ok(0)
}

fn qdim(c: &Common, out: &mut dyn Write) -> CliResult<i32> {
    if c.family.is_some_and(|f| f != FamilyArg::SoOdd) {
        return Err(CliError::Usage("qdim supports --family so-odd only".into()));
    }
    let k = need(c.k, "k", "qdim")?;
    let p = need(c.p, "p", "qdim")?;
    let d = capped(c.deg.unwrap_or_else(|| qdim_so_odd_degree(k, p)), weight_cap()?);
    let s = qdim_so_odd(k, p, d)?;
    write_series(out, c.format, &format!("dim_q SoOddRect k={k} p={p}"), &s)?;
    Ok(0)
}

fn enumerate_cmd(a: &EnumerateArgs, out: &mut dyn Write) -> CliResult<i32> {
    let mut c = EnumConstraints::new();
    if let Some(v) = a.max_part {
        c = c.max_part(v);
    }
    if let Some(v) = a.max_length {
        c = c.max_length(v);
    }
    if let (Some(m), Some(n)) = (a.m, a.n) {
        c = c.hook(m, n);
    }
    c = c.class(match a.class {
        ClassArg::All => PartitionClass::All,
        ClassArg::B => PartitionClass::B,
        ClassArg::Br => PartitionClass::Br(need(a.r, "r", "--class br")?),
    });
    let cap = weight_cap()?;
    if let Some(w) = a.weight {
        c = c.weight_exact(w);
    }
    match (a.cutoff, cap) {
        (Some(w), _) => c = c.weight_at_most(capped(w, cap)),
        (None, Some(w)) if a.weight.is_none() => c = c.weight_at_most(w),
        _ => {}
    }
    let parts: Vec<_> = enumerate(c)?.collect();
    match a.format {
        Format::Json => write_json(out, &parts)?,
        Format::Text => {
            for lam in &parts {
                writeln!(out, "{lam}")?;
            }
        }
    }
    Ok(0)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let c = &a.common;
    let cap = weight_cap()?;
    let id = a.identity.as_str();
    let rs = |r: Option<u32>, p: u32| -> CliResult<Vec<u32>> {
        if a.all_r {
            Ok((0..=p).collect())
        } else {
            Ok(vec![need(r, "r", &format!("verify {id} (or pass --all-r)"))?])
        }
    };
    let reports: Vec<VerificationReport> = match id {
        "e28" => {
            let k = need(c.k, "k", "verify e28")?;
            let p = need(c.p, "p", "verify e28")?;
            vec![check_fork_sum(Ranks::Single(k), p, c.cutoff.map(|w| capped(w, cap)))?]
        }
        "e28b" => {
            let (m, n) = (need(c.m, "m", "verify e28b")?, need(c.n, "n", "verify e28b")?);
            let p = need(c.p, "p", "verify e28b")?;
            vec![check_fork_sum(Ranks::Super { m, n }, p, Some(c.label_cutoff(cap)?))?]
        }
        "theorem1" => {
            let k = need(c.k, "k", "verify theorem1")?;
            let p = need(c.p, "p", "verify theorem1")?;
            rs(c.r, p)?
                .into_iter()
                .map(|r| verify_theorem1(k, r, p))
                .collect::<Result<_, _>>()?
        }
        "rectangle" => {
            let series = match c.family()? {
                FamilyArg::SoOdd => Series::B,
                FamilyArg::SoEvenFork => Series::D,
                _ => return Err(CliError::Usage("verify rectangle takes --family so-odd or so-even-fork".into())),
            };
            vec![verify_rectangle_characters(
                series,
                need(c.k, "k", "verify rectangle")?,
                need(c.p, "p", "verify rectangle")?,
            )?]
        }
        "qdim-so7" => vec![verify_qdim_so7(need(c.p, "p", "verify qdim-so7")?)?],
        other => {
            let sid: SuperdimIdentity = other.parse()?;
            let what = format!("verify {other}");
            let (m, n) = (need(c.m, "m", &what)?, need(c.n, "n", &what)?);
            let p = need(c.p, "p", &what)?;
            let d = c.degree(cap)?;
            let r_values = if sid == SuperdimIdentity::DForkConj { rs(c.r, p)? } else { vec![0] };
            r_values
                .into_iter()
                .map(|r| verify_superdim_identity(sid, IdentityParams { m, n, r, p }, d))
                .collect::<Result<_, _>>()?
        }
    };
    match c.format {
        Format::Json if reports.len() == 1 && !a.all_r => write_json(out, &reports[0])?,
        Format::Json => write_json(out, &reports)?,
        Format::Text => {
            for rep in &reports {
                writeln!(out, "{rep}")?;
            }
        }
    }
    Ok(if reports.iter().all(VerificationReport::passed) { 0 } else { 1 })
}

/// Runs one command, writing its output to `out` and diagnostics to
/// stderr. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Expand(c) => expand(c, out),
        Command::Tdim(c) => tdim(c, out),
        Command::Sdim(c) => sdim(c, out),
        Command::Qdim(c) => qdim(c, out),
        Command::Enumerate(a) => enumerate_cmd(a, out),
        Command::Verify(a) => verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Parses `args` (without the program name) and runs.
pub fn run_args<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("superchar")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli, out),
        Err(e) => {
            let _ = e.print();
            e.exit_code()
        }
    }
}
