use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use monored::powers::increases;
use monored::{
    closure_3gen, closure_capped, default_cap, minimal_monomial_reduction, parse_ideal,
    power_profile, power_set, r_equigen_capped, reduction_number, sumset, ExponentSet, FramedIdeal,
    MonomialIdeal, ReductionReport,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "monored",
    version,
    about = "Reduction numbers of monomial ideals in K[x,y]"
)]
struct Cli {
    /// Emit JSON records instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frame (a,b), membership in I_{a,b}, quasi-equigeneration.
    Classify { ideal: String },

    /// Minimal monomial reduction (lower convex hull vertices).
    Reduce { ideal: String },

    /// Reduction number r(I) with respect to (x^a, y^b).
    Rnum {
        /// Ideal such as "x^4 + y^8 + x^3*y^3" or "[[4,0],[3,3],[0,8]]".
        #[arg(required_unless_present = "set", conflicts_with = "set")]
        ideal: Option<String>,
        /// Exponent set g:m1,m2,... instead of an ideal.
        #[arg(long)]
        set: Option<ExponentSet>,
        /// Largest k tried is cap-1 [default: max(2*max(a,b), 64)].
        #[arg(long)]
        cap: Option<u64>,
    },

    /// Smallest ideal containing I with reduction number one.
    Closure {
        ideal: String,
        /// Print the three-generator recurrence table.
        #[arg(long)]
        trace: bool,
        /// Most adjunction rounds [default: a*b].
        #[arg(long)]
        cap: Option<u64>,
    },

    /// r(I^k) for k = 1..kmax.
    Powers {
        #[arg(required_unless_present = "set", conflicts_with = "set")]
        ideal: Option<String>,
        /// Exponent set g:m1,m2,...; the ideal is taken in frame (g,g).
        #[arg(long)]
        set: Option<ExponentSet>,
        #[arg(long, default_value_t = 8)]
        kmax: u64,
        /// Cap on each reduction number search [default: max(2*max(a,b), 64)].
        #[arg(long)]
        cap: Option<u64>,
    },

    /// A + B for two sets, A + A for one, or kA with --kmax k.
    Sumset {
        /// One or two exponent sets g:m1,m2,...
        #[arg(long, required = true)]
        set: Vec<ExponentSet>,
        /// Fold a single set k times.
        #[arg(long)]
        kmax: Option<u64>,
    },

    /// Exhaustive enumeration tables.
    Survey {
        #[command(subcommand)]
        table: Survey,
    },
}

#[derive(Subcommand)]
enum Survey {
    /// m_a(j): quasi-equigenerated ideals of I_{a,a} by reduction number (CSV).
    M { a: u64 },
    /// n_a(j): three-generated ideals (x^a, y^a, x^e y^(a-e)) by reduction number (CSV).
    N { a: u64 },
    /// Reduction numbers of (x^a, y^b, x^c y^d) over (c,d) in D_{a,b}.
    Rset { a: u64, b: u64 },
    /// Reduction numbers missing from rset p p, for an odd prime p.
    PrimeGap { p: u64 },
    /// Union of rset a b over a <= b <= bmax, compared with 1..a-1.
    Coverage {
        a: u64,
        /// [default: 2a]
        #[arg(long)]
        bmax: Option<u64>,
    },
}

enum Failure {
    Domain(String),
    Parse(String),
}

impl From<monored::Error> for Failure {
    fn from(e: monored::Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(format!("write failed: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Domain(format!("csv: {e}"))
    }
}

type Out<'a> = &'a mut dyn Write;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: Out) -> Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Classify { ideal } => classify(&parse_ideal(ideal)?, json, out),
        Command::Reduce { ideal } => reduce(&parse_ideal(ideal)?, json, out),
        Command::Rnum { ideal, set, cap } => match (ideal, set) {
            (Some(s), _) => rnum(&framed(s)?, *cap, json, out),
            (None, Some(set)) => rnum_set(set, *cap, json, out),
            (None, None) => unreachable!("clap requires one of ideal/--set"),
        },
        Command::Closure { ideal, trace, cap } => closure(&framed(ideal)?, *trace, *cap, json, out),
        Command::Powers {
            ideal,
            set,
            kmax,
            cap,
        } => {
            let f = match (ideal, set) {
                (Some(s), _) => framed(s)?,
                (None, Some(set)) => set.to_ideal(set.g(), set.g())?,
                (None, None) => unreachable!("clap requires one of ideal/--set"),
            };
            powers(&f, *kmax, *cap, json, out)
        }
        Command::Sumset { set, kmax } => sumsets(set, *kmax, json, out),
        Command::Survey { table } => survey(table, json, out),
    }
}

fn framed(s: &str) -> Result<FramedIdeal, Failure> {
    Ok(FramedIdeal::new(parse_ideal(s)?)?)
}

/// `(g1,g2,...)`, highest power of x first; parses back unchanged.
fn paren(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .rev()
        .map(|m| m.to_string())
        .collect();
    format!("({})", gens.join(","))
}

fn emit_json<T: Serialize>(value: &T, out: Out) -> Result<(), Failure> {
    let s = serde_json::to_string(value).map_err(|e| Failure::Domain(format!("json: {e}")))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn classify(ideal: &MonomialIdeal, json: bool, out: Out) -> Result<(), Failure> {
    let c = monored::classify(ideal)?;
    if json {
        return emit_json(&c, out);
    }
    writeln!(out, "a={} b={}", c.a, c.b)?;
    writeln!(out, "in_frame={}", c.in_frame)?;
    writeln!(out, "quasi_equigenerated={}", c.quasi_equigenerated)?;
    Ok(())
}

fn reduce(ideal: &MonomialIdeal, json: bool, out: Out) -> Result<(), Failure> {
    let j = minimal_monomial_reduction(ideal)?;
    if json {
        #[derive(Serialize)]
        struct Record<'a> {
            generators: &'a MonomialIdeal,
            reduction: &'a MonomialIdeal,
        }
        return emit_json(
            &Record {
                generators: ideal,
                reduction: &j,
            },
            out,
        );
    }
    writeln!(out, "I={}", paren(ideal))?;
    writeln!(out, "J={}", paren(&j))?;
    Ok(())
}

fn print_report(report: &ReductionReport, json: bool, out: Out) -> Result<(), Failure> {
    if json {
        return emit_json(&report.record(), out);
    }
    writeln!(out, "I={}", paren(report.ideal.ideal()))?;
    writeln!(out, "J={}", paren(&report.j))?;
    writeln!(out, "r={}", report.r)?;
    if let Some(b) = report.bounds {
        writeln!(out, "bounds: r < {} and r <= {}", b.cold, b.glp)?;
    }
    Ok(())
}

fn rnum(f: &FramedIdeal, cap: Option<u64>, json: bool, out: Out) -> Result<(), Failure> {
    let cap = cap.unwrap_or_else(|| default_cap(f.a(), f.b()));
    print_report(&reduction_number(f, cap)?, json, out)
}

fn rnum_set(set: &ExponentSet, cap: Option<u64>, json: bool, out: Out) -> Result<(), Failure> {
    let g = set.g();
    let f = set.to_ideal(g, g)?;
    let r = r_equigen_capped(set, cap.unwrap_or_else(|| default_cap(g, g)))?;
    let report = ReductionReport {
        j: f.reduction(),
        ideal: f,
        r,
        witness_k: r,
        bounds: Some(set.bounds()),
    };
    print_report(&report, json, out)
}

fn closure(
    f: &FramedIdeal,
    trace: bool,
    cap: Option<u64>,
    json: bool,
    out: Out,
) -> Result<(), Failure> {
    let cap = cap.unwrap_or_else(|| f.a().saturating_mul(f.b()));
    let (l, mut t) = closure_capped(f, cap)?;
    let inner: Vec<_> = f
        .generators()
        .iter()
        .filter(|m| m.x < f.a() && m.y < f.b())
        .copied()
        .collect();
    if trace && inner.len() == 1 {
        let (l3, t3) = closure_3gen(f.a(), f.b(), &inner[0])?;
        if l3 != l {
            return Err(Failure::Domain(format!(
                "recurrence gives {} but fixpoint gives {}",
                paren(l3.ideal()),
                paren(l.ideal())
            )));
        }
        t = t3;
    }
    if json {
        #[derive(Serialize)]
        struct Record<'a> {
            a: u64,
            b: u64,
            generators: &'a MonomialIdeal,
            closure: &'a MonomialIdeal,
            #[serde(flatten)]
            trace: &'a monored::ClosureTrace,
        }
        let rec = Record {
            a: f.a(),
            b: f.b(),
            generators: f.ideal(),
            closure: l.ideal(),
            trace: &t,
        };
        return emit_json(&rec, out);
    }
    writeln!(out, "I={}", paren(f.ideal()))?;
    writeln!(out, "L={}", paren(l.ideal()))?;
    let added: Vec<String> = t.added.iter().map(|m| m.to_string()).collect();
    writeln!(
        out,
        "added: {}",
        if added.is_empty() {
            "none".into()
        } else {
            added.join(", ")
        }
    )?;
    if trace {
        if t.steps.is_empty() {
            writeln!(out, "trace: recurrence applies only to (x^a, y^b, x^c y^d)")?;
        } else {
            writeln!(
                out,
                "{:>4} {:>6} {:>6} {:>6} {:>6}",
                "i", "r_i", "s_i", "c_i", "d_i"
            )?;
            for s in &t.steps {
                writeln!(
                    out,
                    "{:>4} {:>6} {:>6} {:>6} {:>6}",
                    s.i, s.r, s.s, s.c, s.d
                )?;
            }
        }
        if let Some(k) = t.k {
            writeln!(out, "k={k}")?;
        }
    }
    Ok(())
}

fn powers(
    f: &FramedIdeal,
    kmax: u64,
    cap: Option<u64>,
    json: bool,
    out: Out,
) -> Result<(), Failure> {
    let cap = cap.unwrap_or_else(|| default_cap(f.a(), f.b()));
    let p = power_profile(f, kmax, cap)?;
    let inc = increases(&p.rs);
    if json {
        #[derive(Serialize)]
        struct Record<'a> {
            a: u64,
            b: u64,
            generators: &'a MonomialIdeal,
            rs: &'a [u64],
            c_index: Option<u64>,
            searched_to: u64,
            increases: &'a [u64],
        }
        let rec = Record {
            a: f.a(),
            b: f.b(),
            generators: f.ideal(),
            rs: &p.rs,
            c_index: p.c_index,
            searched_to: p.searched_to,
            increases: &inc,
        };
        return emit_json(&rec, out);
    }
    writeln!(out, "I={}", paren(f.ideal()))?;
    writeln!(out, "{:>4} {:>8}", "k", "r(I^k)")?;
    for (k, r) in (1..).zip(&p.rs) {
        writeln!(out, "{k:>4} {r:>8}")?;
    }
    match p.c_index {
        Some(c) => writeln!(out, "c(I)={c}")?,
        None => writeln!(out, "c(I) not reached by k={}", p.searched_to)?,
    }
    if !inc.is_empty() {
        let ks: Vec<String> = inc.iter().map(u64::to_string).collect();
        writeln!(out, "r(I^(k+1)) > r(I^k) at k={}", ks.join(","))?;
    }
    Ok(())
}

fn sumsets(sets: &[ExponentSet], kmax: Option<u64>, json: bool, out: Out) -> Result<(), Failure> {
    let result = match (sets, kmax) {
        ([a], Some(k)) => power_set(a, k)?,
        ([a], None) => power_set(a, 2)?,
        ([a, b], None) => {
            let g = a.g().checked_add(b.g()).ok_or(monored::Error::Overflow)?;
            ExponentSet::from_bits(g, sumset(a.bits(), b.bits()))?
        }
        ([_, _], Some(_)) => return Err(Failure::Parse("--kmax takes a single --set".into())),
        _ => {
            return Err(Failure::Parse(
                "sumset takes one or two --set values".into(),
            ))
        }
    };
    if json {
        return emit_json(&result, out);
    }
    writeln!(out, "{result}")?;
    Ok(())
}

fn survey(table: &Survey, json: bool, out: Out) -> Result<(), Failure> {
    match table {
        Survey::M { a } => survey_table(&monored::m_table(*a)?, json, out),
        Survey::N { a } => survey_table(&monored::n_table(*a)?, json, out),
        Survey::Rset { a, b } => {
            let set = monored::r_set(*a, *b)?;
            if json {
                #[derive(Serialize)]
                struct Record<'a> {
                    set: &'a std::collections::BTreeSet<u64>,
                }
                return emit_json(&Record { set: &set }, out);
            }
            let items: Vec<String> = set.iter().map(u64::to_string).collect();
            writeln!(out, "R({},{})={{{}}}", a, b, items.join(","))?;
            Ok(())
        }
        Survey::PrimeGap { p } => {
            let o = monored::ourlimits_check(*p)?;
            if json {
                return emit_json(&o, out);
            }
            let items: Vec<String> = o.set.iter().map(u64::to_string).collect();
            writeln!(out, "R({p},{p})={{{}}}", items.join(","))?;
            writeln!(out, "missing={} bound={} holds={}", o.gap, o.bound, o.holds)?;
            Ok(())
        }
        Survey::Coverage { a, bmax } => {
            let s = monored::specialnight_check(*a, bmax.unwrap_or(2 * a))?;
            if json {
                return emit_json(&s, out);
            }
            let items: Vec<String> = s.covered.iter().map(u64::to_string).collect();
            writeln!(
                out,
                "covered={{{}}} complete={}",
                items.join(","),
                s.complete
            )?;
            Ok(())
        }
    }
}

fn survey_table(t: &monored::SurveyTable, json: bool, out: Out) -> Result<(), Failure> {
    if json {
        #[derive(Serialize)]
        struct Record<'a> {
            #[serde(flatten)]
            table: &'a monored::SurveyTable,
            rows: Vec<monored::SurveyRow>,
        }
        return emit_json(
            &Record {
                table: t,
                rows: t.rows(),
            },
            out,
        );
    }
    let mut w = csv::Writer::from_writer(out);
    for row in t.rows() {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
