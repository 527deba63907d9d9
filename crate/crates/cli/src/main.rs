//! `thompson`: element algebra, links, stabilizer constructions and
//! enumeration from the command line.
//!
//! Exit codes: 0 success, 2 bad input, 3 domain error, 4 bracket cap
//! exceeded.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thompson_core::analysis::{fixes, is_in_commutator, is_in_rectangular, parse_rational, PlMap};
use thompson_core::enumerate::{enumerate, find, FingerprintQuery, Row};
use thompson_core::jones::svg::to_svg;
use thompson_core::jones::DEFAULT_BRACKET_CAP;
use thompson_core::library::parse_element;
use thompson_core::stabilizer::{alexander_element, fixes_point, unknot_stabilizer_with_branch};
use thompson_core::{Element, Error, InvariantFingerprint, LinkDiagram, Point, TreePair};

const MAX_ENUMERATION_LEAVES: u64 = 8;

#[derive(Parser)]
#[command(name = "thompson", version, about = "Thompson's group F, tree pairs and their links")]
struct Cli {
    /// Mirror the crossing convention (vertical strand under everywhere).
    #[arg(long, global = true)]
    mirror: bool,
    /// Largest crossing count the Kauffman bracket is computed for.
    #[arg(long, global = true, default_value_t = DEFAULT_BRACKET_CAP)]
    bracket_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group elements: `@name`, a tree pair `T;T` or a word like `x0^-1 x1`.
    #[command(subcommand)]
    El(El),
    /// Link diagrams of tree pairs.
    #[command(subcommand)]
    Link(Link),
    /// Elements of point stabilizers.
    #[command(subcommand)]
    Stab(Stab),
    /// CSV rows for every reduced pair with the given number of leaves.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_ENUMERATION_LEAVES))]
        leaves: u64,
        /// Print only the first row matching, e.g. `components=1,det=3`.
        #[arg(long)]
        find: Option<String>,
    },
}

#[derive(Subcommand)]
enum El {
    /// Print the reduced pair.
    Parse { elem: String },
    /// Product, applying the factors left to right.
    Mul {
        #[arg(required = true)]
        elems: Vec<String>,
    },
    Inv { elem: String },
    /// Image of a rational point.
    Eval {
        #[arg(long)]
        elem: String,
        #[arg(long)]
        r: String,
    },
    /// Whether the element fixes a rational point.
    Fixes {
        #[arg(long)]
        elem: String,
        #[arg(long)]
        r: String,
    },
    /// Subgroup membership: `stab:<r>`, `commutator` or `rect:<a>,<b>`.
    Member {
        #[arg(long)]
        elem: String,
        #[arg(long)]
        sub: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// An element; its reduced pair is used.
    #[arg(long)]
    elem: Option<String>,
    /// A tree pair used as given, without reduction.
    #[arg(long)]
    raw_pair: Option<String>,
}

impl Source {
    fn pair(&self) -> Result<TreePair, Error> {
        match (&self.elem, &self.raw_pair) {
            (Some(e), _) => Ok(parse_element(e)?.pair().clone()),
            (_, Some(p)) => p.parse(),
            _ => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Subcommand)]
enum Link {
    /// Planar diagram code, one crossing per line.
    Pd {
        #[command(flatten)]
        source: Source,
    },
    /// Invariant fingerprint as a JSON line.
    Invariants {
        #[command(flatten)]
        source: Source,
    },
    /// SVG drawing of the two trees and the diagram.
    Svg {
        #[command(flatten)]
        source: Source,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum Stab {
    /// An element fixing `r` whose link matches the target (the unknot by
    /// default).
    Construct {
        /// `p/q`, `0.bits`, `0.bits(period)` or truncated `0.bits...`.
        #[arg(long)]
        r: String,
        #[arg(long)]
        target: Option<String>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::UnknownName(_) | Error::LeafCountMismatch { .. } => 2,
        Error::CrossingCapExceeded { .. } => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn write(out: &mut impl Write, s: impl AsRef<str>) -> Result<(), Error> {
    writeln!(out, "{}", s.as_ref()).map_err(|e| Error::Internal(format!("writing output: {e}")))
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Error> {
    let cap = cli.bracket_cap;
    match &cli.command {
        Command::El(cmd) => el(cmd, out),
        Command::Link(cmd) => link(cmd, cli.mirror, cap, out),
        Command::Stab(Stab::Construct { r, target }) => construct(r, target.as_deref(), cap, out),
        Command::Enumerate { leaves, find: query } => enumeration(*leaves as usize, query.as_deref(), cap, out),
    }
}

fn el(cmd: &El, out: &mut impl Write) -> Result<(), Error> {
    match cmd {
        El::Parse { elem } => write(out, parse_element(elem)?.to_string()),
        El::Mul { elems } => {
            let mut g = Element::identity();
            for e in elems {
                g = g.multiply(&parse_element(e)?);
            }
            write(out, g.to_string())
        }
        El::Inv { elem } => write(out, parse_element(elem)?.inverse().to_string()),
        El::Eval { elem, r } => {
            let g = parse_element(elem)?;
            let x = unit_rational(r)?;
            write(out, PlMap::from_element(&g).evaluate(&x).to_string())
        }
        El::Fixes { elem, r } => {
            let g = parse_element(elem)?;
            write(out, fixes(&g, &unit_rational(r)?).to_string())
        }
        El::Member { elem, sub } => {
            let g = parse_element(elem)?;
            write(out, member(&g, sub)?.to_string())
        }
    }
}

fn unit_rational(s: &str) -> Result<thompson_core::Rational, Error> {
    let x = parse_rational(s)?;
    let zero = thompson_core::Rational::from_integer(0.into());
    let one = thompson_core::Rational::from_integer(1.into());
    if x < zero || x > one {
        return Err(Error::RNotInRange(x.to_string()));
    }
    Ok(x)
}

fn member(g: &Element, sub: &str) -> Result<bool, Error> {
    let bad = |m: &str| Error::Syntax { what: "subgroup", pos: 0, msg: m.to_string() };
    if sub == "commutator" {
        return Ok(is_in_commutator(g));
    }
    if let Some(r) = sub.strip_prefix("stab:") {
        return Ok(fixes(g, &unit_rational(r)?));
    }
    if let Some(ab) = sub.strip_prefix("rect:") {
        let (a, b) = ab.split_once(',').ok_or_else(|| bad("expected rect:<a>,<b>"))?;
        let parse = |s: &str| s.trim().parse::<u32>().ok().filter(|&n| n > 0).ok_or_else(|| bad("expected a positive integer"));
        return Ok(is_in_rectangular(g, parse(a)?, parse(b)?));
    }
    Err(bad("expected stab:<r>, commutator or rect:<a>,<b>"))
}

fn link(cmd: &Link, mirror: bool, cap: usize, out: &mut impl Write) -> Result<(), Error> {
    match cmd {
        Link::Pd { source } => {
            let d = LinkDiagram::from_pair(&source.pair()?, mirror);
            out.write_all(d.pd_code().as_bytes()).map_err(|e| Error::Internal(e.to_string()))
        }
        Link::Invariants { source } => {
            let d = LinkDiagram::from_pair(&source.pair()?, mirror);
            write(out, InvariantFingerprint::of(&d, cap)?.to_json())
        }
        Link::Svg { source, out: path } => {
            let svg = to_svg(&source.pair()?, mirror);
            match path {
                Some(p) => fs::write(p, svg).map_err(|e| Error::Internal(format!("writing {p}: {e}"))),
                None => out.write_all(svg.as_bytes()).map_err(|e| Error::Internal(e.to_string())),
            }
        }
    }
}

fn construct(r: &str, target: Option<&str>, cap: usize, out: &mut impl Write) -> Result<(), Error> {
    let point: Point = r.parse()?;
    let g = match target {
        Some(t) => parse_element(t)?,
        None => Element::identity(),
    };
    let f = unknot_stabilizer_with_branch(&point)?;
    let h = alexander_element(&point, &g, cap)?;
    let want = thompson_core::jones::fingerprint(&g, cap)?;
    let got = thompson_core::jones::fingerprint(&h, cap.saturating_add(2 * f.element.leaf_count()))?;
    write(out, format!("element: {h}"))?;
    write(out, format!("point: {point}"))?;
    write(out, format!("stabilizer: {} attached at leaf {} ({})", f.construction, f.attach_branch.index, f.attach_branch))?;
    write(out, format!("fixes: {}", fixes_point(&h, &point)))?;
    write(out, format!("fingerprint: {}", got.to_json()))?;
    write(out, format!("target fingerprint: {}", want.to_json()))?;
    write(out, format!("match: {}", got == want))
}

fn enumeration(leaves: usize, query: Option<&str>, cap: usize, out: &mut impl Write) -> Result<(), Error> {
    write(out, Row::CSV_HEADER)?;
    match query {
        Some(q) => {
            let q: FingerprintQuery = q.parse()?;
            match find(leaves, &q, cap)? {
                Some(row) => write(out, row.to_csv()),
                None => {
                    eprintln!("no {leaves}-leaf pair matches {q}");
                    Ok(())
                }
            }
        }
        None => {
            for row in enumerate(leaves, cap)? {
                write(out, row.to_csv())?;
            }
            Ok(())
        }
    }
}
