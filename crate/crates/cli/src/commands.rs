use std::io::Write;

use aldkit_core::ald::{ald_distance, EdgeCounts, Lambda, PairedWord};
use aldkit_core::ball::{ball_size, enumerate_ball, sphere_size, BallSpec};
use aldkit_core::budget::Budget;
use aldkit_core::codes::{
    self, bch_parity_check, best_cn_coset, build_big_cl, build_cn, build_partition_code, odd_weight_parity_check,
    ClCode, ClDecoded, Codebook, DecodeMode, OddPrimeField,
};
use aldkit_core::delsarte;
use aldkit_core::hyperbound;
use aldkit_core::report::{BoundReport, BoundValue};
use aldkit_core::search::{exact_max_code_within, min_distance};
use serde_json::json;

use crate::args::{
    BoundMethod, Command, ConstructArgs, ConstructKind, DecodeCode, Format, Mode, TableFormat, VerifyCheck,
};
use crate::codebook_file::{parse_word, read_codebook, render_codebook, to_dna, write_codebook};
use crate::error::{CliError, CliResult};
use crate::tables::{self, MatchStatus};

fn lambda_of(l: u32) -> CliResult<Lambda> {
    Ok(Lambda::new(l)?)
}

fn print_json(out: &mut dyn Write, v: &serde_json::Value) -> CliResult<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json serialises"))?;
    Ok(())
}

/// Runs one parsed command; the returned value is the exit code.
pub fn execute(command: Command, budget: &Budget, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Dist { word1, word2, lambda, format } => dist(&word1, &word2, lambda, format, out),
        Command::Ball { n, w, r, lambda, enumerate, format } => ball(n, w, r, lambda, enumerate, format, out),
        Command::Bound { method, n, d, lambda, exact_rational, format } => {
            bound(method, n, d, lambda, exact_rational, format, budget, out)
        }
        Command::Construct(args) => construct(args, out),
        Command::Decode { code: DecodeCode::Cl { v, u, mode, input, format } } => {
            decode(v, u, mode, &input, format, out)
        }
        Command::Verify { check: VerifyCheck::Mindist { input, lambda, format } } => {
            verify(&input, lambda, format, out)
        }
        Command::Exact { n, d, lambda, out: path, format } => exact(n, d, lambda, path, format, budget, out),
        Command::Table { table: id, max_n, format } => table(id, max_n, format, budget, out),
    }
}

fn dist(w1: &str, w2: &str, lambda: u32, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    let (x, y) = (parse_word(w1)?, parse_word(w2)?);
    let lambda = lambda_of(lambda)?;
    let d = ald_distance(&x, &y, lambda)?;
    let e = EdgeCounts::between(&x, &y)?;
    match format {
        Format::Text => writeln!(out, "{d}")?,
        Format::Json => print_json(
            out,
            &json!({
                "word1": w1, "word2": w2, "lambda": lambda.get(), "distance": d,
                "class1": e.class1, "class2": e.class2, "class3": e.class3,
            }),
        )?,
    }
    Ok(0)
}

fn ball(
    n: usize,
    w: usize,
    r: u64,
    lambda: u32,
    enumerate: bool,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let lambda = lambda_of(lambda)?;
    let spec = BallSpec::new(n, w, r, lambda)?;
    let (ball, sphere) = (ball_size(&spec), sphere_size(&spec));
    let counted = if enumerate {
        let center = PairedWord::from_strands(n, 0, (1u64 << w) - 1)?;
        let members = enumerate_ball(&center, r, lambda)?;
        let on_sphere = members.iter().filter(|y| ald_distance(&center, y, lambda) == Ok(r)).count();
        Some((members.len(), on_sphere))
    } else {
        None
    };
    match format {
        Format::Text => {
            writeln!(out, "ball_size={ball}")?;
            writeln!(out, "sphere_size={sphere}")?;
            if let Some((b, s)) = counted {
                writeln!(out, "enumerated_ball={b}")?;
                writeln!(out, "enumerated_sphere={s}")?;
            }
        }
        Format::Json => {
            let mut v = json!({
                "n": n, "w": w, "r": r, "lambda": lambda.get(),
                "ball_size": ball.to_string(), "sphere_size": sphere.to_string(),
            });
            if let Some((b, s)) = counted {
                v["enumerated_ball"] = b.to_string().into();
                v["enumerated_sphere"] = s.to_string().into();
            }
            print_json(out, &v)?;
        }
    }
    if let Some((b, s)) = counted {
        if ball.to_string() != b.to_string() || sphere.to_string() != s.to_string() {
            return Err(CliError::Internal("formula and enumeration disagree".into()));
        }
    }
    Ok(0)
}

fn compute_bound(
    method: BoundMethod,
    n: usize,
    d: Option<u64>,
    lambda: Lambda,
    budget: &Budget,
) -> CliResult<BoundReport> {
    let need_d = || d.ok_or_else(|| CliError::Usage("--d is required for this method".into()));
    Ok(match method {
        BoundMethod::Lp => hyperbound::lp_hypergraph_bound(n, need_d()?, lambda)?,
        BoundMethod::Naive => hyperbound::naive_weight_bound(n, need_d()?, lambda)?,
        BoundMethod::Simple => hyperbound::simple_bound(n, need_d()?, lambda)?,
        BoundMethod::Optimal1 => {
            let base = 2 * lambda.class1() + 1;
            if d.is_some_and(|d| d < base) {
                return Err(CliError::Usage(format!("optimal1 bounds codes with distance at least {base}")));
            }
            let mut r = hyperbound::optimal1_bound(n, lambda);
            r.d = d.unwrap_or(base);
            r
        }
        BoundMethod::Weights1 => {
            if lambda != Lambda::ONE {
                return Err(CliError::Usage("weights1 is defined for lambda = 1 only".into()));
            }
            hyperbound::weights1_bound(n, hyperbound::radius_for(need_d()?)?)?
        }
        BoundMethod::Delsarte => delsarte::delsarte_bound_within(n, need_d()?, lambda, budget)?,
    })
}

#[allow(clippy::too_many_arguments)]
fn bound(
    method: BoundMethod,
    n: usize,
    d: Option<u64>,
    lambda: u32,
    exact_rational: bool,
    format: Format,
    budget: &Budget,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let report = compute_bound(method, n, d, lambda_of(lambda)?, budget)?;
    let (status, floor, num, den) = match &report.value {
        BoundValue::Finite(v) => {
            let (num, den) = v.num_den();
            ("FINITE", v.floor().to_string(), num, den)
        }
        BoundValue::Unbounded => ("UNBOUNDED", String::new(), String::new(), String::new()),
    };
    match format {
        Format::Text => {
            write!(out, "method={} n={} d={} lambda={} status={status}", report.method.name(), n, report.d, lambda)?;
            if status == "FINITE" {
                write!(out, " floor={floor}")?;
                if exact_rational {
                    write!(out, " exact={num}/{den}")?;
                }
            }
            writeln!(out)?;
        }
        Format::Json => {
            let weights: Option<Vec<String>> =
                report.weights.as_ref().map(|w| w.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect());
            print_json(
                out,
                &json!({
                    "method": report.method.name(), "n": n, "d": report.d, "lambda": lambda,
                    "status": status, "value_floor": floor, "value_num": num, "value_den": den,
                    "weights": weights,
                }),
            )?;
        }
    }
    Ok(0)
}

fn build(kind: &ConstructKind) -> CliResult<Codebook> {
    Ok(match kind {
        ConstructKind::Cl { v, u } => codes::build_cl(*v, *u)?,
        ConstructKind::BigCl { v, n, rows } => {
            let (len, check) = match (v, n, rows) {
                (Some(v), None, None) => {
                    let h = bch_parity_check(*v, 5)?;
                    (h.len() / 2, h)
                }
                (None, Some(n), Some(rows)) => (*n, odd_weight_parity_check(*rows, 2 * n)?),
                _ => return Err(CliError::Usage("cL needs either --v or both --n and --rows".into())),
            };
            let mut book = build_big_cl(len, &check)?.to_codebook(Lambda::ONE, check.distance.into(), "cL")?;
            match v {
                Some(v) => book.params.insert("v".into(), v.to_string()),
                None => book.params.insert("rows".into(), check.rows.to_string()),
            };
            book
        }
        ConstructKind::Cp { n } => codes::build_cp(*n)?,
        ConstructKind::Partition { v, u } => build_partition_code(*v, *u)?.codebook()?,
        ConstructKind::Cn { q, ell, d, u, z } => {
            let field = OddPrimeField::new(*q, *ell)?;
            match (u, z) {
                (Some(u), Some(z)) => build_cn(field, *d, *u, z)?,
                _ => best_cn_coset(field, *d)?.codebook,
            }
        }
        ConstructKind::Clambda { n, d, lambda } => codes::build_clambda_greedy(*n, *d, lambda_of(*lambda)?)?,
    })
}

fn construct(args: ConstructArgs, out: &mut dyn Write) -> CliResult<i32> {
    let book = build(&args.kind)?;
    match &args.out {
        Some(path) => {
            write_codebook(path, &book)?;
            writeln!(out, "wrote {} words of length {} to {}", book.len(), book.n, path.display())?;
        }
        None if !args.dna => write!(out, "{}", render_codebook(&book))?,
        None => {}
    }
    if args.dna {
        for w in book.words() {
            writeln!(out, "{}", to_dna(w))?;
        }
    }
    Ok(0)
}

fn decode(v: u32, u: u64, mode: Mode, input: &std::path::Path, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    let code = ClCode::new(v, u)?;
    let received = read_codebook(input)?;
    if received.n != code.n() {
        return Err(CliError::Usage(format!("received words have length {}, code length is {}", received.n, code.n())));
    }
    let mode = match mode {
        Mode::Correct1 => DecodeMode::CorrectClass1,
        Mode::Detect2 => DecodeMode::DetectClass2,
    };
    let mut rows = Vec::new();
    for w in received.words() {
        let (status, position, syndrome, word) = match code.decode(w, mode) {
            Ok(ClDecoded::Clean(x)) => ("clean", None, None, Some(x)),
            Ok(ClDecoded::Corrected { word, position }) => ("corrected", Some(position), None, Some(word)),
            Ok(ClDecoded::Detected { syndrome }) => ("detected", None, Some(syndrome), None),
            Err(aldkit_core::Error::Uncorrectable) => ("uncorrectable", None, None, None),
            Err(e) => return Err(e.into()),
        };
        rows.push((w.to_nat4_string(), status, position, syndrome, word.map(|x| x.to_nat4_string())));
    }
    match format {
        Format::Text => {
            for (input, status, position, syndrome, word) in &rows {
                write!(out, "{input} {status}")?;
                if let Some(p) = position {
                    write!(out, " position={p}")?;
                }
                if let Some(s) = syndrome {
                    write!(out, " syndrome={s}")?;
                }
                if let Some(x) = word {
                    write!(out, " decoded={x}")?;
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(input, status, position, syndrome, word)| {
                    json!({"received": input, "status": status, "position": position, "syndrome": syndrome, "decoded": word})
                })
                .collect();
            print_json(out, &serde_json::Value::Array(v))?;
        }
    }
    Ok(0)
}

fn verify(input: &std::path::Path, lambda: Option<u32>, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    let book = read_codebook(input)?;
    let lambda = match lambda {
        Some(l) => lambda_of(l)?,
        None => book.lambda,
    };
    let md = min_distance(&book, lambda)?;
    let ok = md.is_none_or(|m| m >= book.design_distance);
    let shown = md.map_or_else(|| "infinity".to_string(), |m| m.to_string());
    match format {
        Format::Text => {
            writeln!(out, "words={} min_distance={shown} design_distance={} ok={ok}", book.len(), book.design_distance)?
        }
        Format::Json => print_json(
            out,
            &json!({
                "words": book.len(), "lambda": lambda.get(), "min_distance": shown,
                "design_distance": book.design_distance, "ok": ok,
            }),
        )?,
    }
    if !ok {
        return Err(CliError::Internal(format!("minimum distance {shown} is below the design distance")));
    }
    Ok(0)
}

fn exact(
    n: usize,
    d: u64,
    lambda: u32,
    path: Option<std::path::PathBuf>,
    format: Format,
    budget: &Budget,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let lambda = lambda_of(lambda)?;
    let (size, witness) = exact_max_code_within(n, d, lambda, budget)?;
    if let Some(p) = &path {
        write_codebook(p, &witness)?;
    }
    match format {
        Format::Text => writeln!(out, "{size}")?,
        Format::Json => print_json(out, &json!({"n": n, "d": d, "lambda": lambda.get(), "size": size}))?,
    }
    Ok(0)
}

fn table(id: u8, max_n: Option<usize>, format: TableFormat, budget: &Budget, out: &mut dyn Write) -> CliResult<i32> {
    let cells = tables::compute_table(id, max_n.unwrap_or_else(|| tables::default_max_n(id)), budget)?;
    match format {
        TableFormat::Csv => write!(out, "{}", tables::render_csv(&cells))?,
        TableFormat::Json => write!(out, "{}", tables::render_json(&cells))?,
    }
    if cells.iter().any(|c| c.status() == MatchStatus::Budget) {
        return Ok(3);
    }
    if cells.iter().any(|c| c.status() == MatchStatus::Error) {
        return Ok(1);
    }
    Ok(0)
}
