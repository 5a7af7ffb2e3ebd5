use std::fs::File;
use std::io::{self, BufWriter, Write};

use c4free_core::planar::{
    char3_exponent, extension_of, function_exponent, is_planar, monomial, predict_monomial_char3,
    predict_monomial_qa1,
};
use c4free_core::verify::{
    alt_monomial_spec, bounds_report, pair_count_record, verify_with_pairs, VerifyOptions,
};
use c4free_core::{Error, FieldCtx, GraphSpec};
use serde::Serialize;

use crate::args::*;
use crate::parallel;
use crate::report::*;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

impl AppError {
    /// 1 when a claimed identity or count was contradicted, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(Error::InconsistentCounts { .. } | Error::IdentityFailed(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

/// `F_{q^3}` for an odd prime power `q >= 3`.
pub fn field_for(q: u64) -> Result<FieldCtx, AppError> {
    if q < 3 {
        return Err(if q == 2 {
            Error::EvenCharacteristic
        } else {
            Error::BadOrder(q)
        }
        .into());
    }
    Ok(FieldCtx::cubic_extension(q)?)
}

fn spec_for(field: &FieldCtx, a: Option<u64>) -> Result<GraphSpec<'_>, AppError> {
    Ok(match a {
        Some(enc) => GraphSpec::new(field, &field.decode(enc)?)?,
        None => GraphSpec::default_for(field)?,
    })
}

fn format_or(output: &Output, default: Format, allowed: &[Format]) -> Result<Format, AppError> {
    let fmt = output.format.unwrap_or(default);
    if allowed.contains(&fmt) {
        Ok(fmt)
    } else {
        Err(AppError::Usage(format!(
            "unsupported --format {fmt:?} for this command"
        )))
    }
}

fn sink<'a>(output: &Output, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, AppError> {
    Ok(match &output.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(stdout)),
    })
}

fn write_json<T: Serialize>(w: &mut dyn Write, doc: &T) -> Result<(), AppError> {
    serde_json::to_writer_pretty(&mut *w, doc)?;
    writeln!(w)?;
    Ok(())
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status, AppError> {
    match &cli.command {
        Command::FieldInfo(args) => field_info(args, stdout),
        Command::PlanarTest(args) => planar_test(args, stdout),
        Command::FaVerify(args) => fa_verify(args, stdout),
        Command::Construct(args) => construct(args, stdout),
        Command::Verify(args) => verify(args, stdout),
        Command::Bounds(args) => bounds(args, stdout),
        Command::AltMonomial(args) => alt_monomial(args, stdout),
    }
}

fn field_info(args: &FieldInfoArgs, stdout: &mut dyn Write) -> Result<Status, AppError> {
    let field = field_for(args.q)?;
    let fmt = format_or(&args.output, Format::Json, &[Format::Json, Format::Csv])?;
    let mut w = sink(&args.output, stdout)?;
    let doc = FieldInfoDoc {
        schema: SCHEMA,
        command: "field-info",
        field: (&field).into(),
    };
    match fmt {
        Format::Csv => {
            let modulus: Vec<String> = doc.field.modulus.iter().map(u64::to_string).collect();
            writeln!(w, "p,n,q_sub,order,modulus")?;
            writeln!(
                w,
                "{},{},{},{},{}",
                doc.field.p,
                doc.field.n,
                args.q,
                doc.field.order,
                modulus.join(" ")
            )?;
        }
        _ => write_json(&mut w, &doc)?,
    }
    w.flush()?;
    Ok(Status::Pass)
}

fn planar_test(args: &PlanarTestArgs, stdout: &mut dyn Write) -> Result<Status, AppError> {
    let fmt = format_or(&args.output, Format::Json, &[Format::Json])?;
    let (field, exponent, predicted, family) = match args.family {
        Family::Qa1 => {
            let predicted = predict_monomial_qa1(args.q, args.alpha, args.e)?;
            let exponent = args
                .q
                .checked_pow(args.alpha)
                .and_then(|v| v.checked_add(1))
                .ok_or_else(|| AppError::Usage("q^alpha overflows".into()))?;
            (extension_of(args.q, args.e)?, exponent, predicted, "qa1")
        }
        Family::Char3 => {
            let (p, m) = c4free_core::gf::prime_power(args.q).ok_or(Error::BadOrder(args.q))?;
            if p != 3 {
                return Err(Error::BadCharacteristic(p).into());
            }
            let predicted = predict_monomial_char3(args.alpha, m * args.e)?;
            (
                extension_of(args.q, args.e)?,
                char3_exponent(args.alpha)?,
                predicted,
                "char3",
            )
        }
    };
    let poly = monomial(&field, function_exponent(&field, exponent));
    let report = is_planar(&poly);
    let doc = PlanarDoc {
        schema: SCHEMA,
        command: "planar-test",
        family,
        field: (&field).into(),
        alpha: args.alpha,
        e: args.e,
        exponent,
        is_planar: report.is_planar,
        predicted,
        witness: report.witness.as_ref().map(|w| WitnessJson::new(&field, w)),
        pass: report.is_planar == predicted,
    };
    debug_assert_eq!(fmt, Format::Json);
    let mut w = sink(&args.output, stdout)?;
    write_json(&mut w, &doc)?;
    w.flush()?;
    Ok(Status::from_pass(doc.pass))
}

fn fa_verify(args: &FaVerifyArgs, stdout: &mut dyn Write) -> Result<Status, AppError> {
    let field = field_for(args.q)?;
    let fmt = format_or(&args.output, Format::Json, &[Format::Json, Format::Csv])?;
    let params = match args.a {
        Some(enc) => {
            let a = field.decode(enc)?;
            if a.is_zero() {
                return Err(Error::ZeroParameter.into());
            }
            vec![a]
        }
        None => field.units().collect(),
    };
    let outcomes =
        parallel::with_workers(args.output.workers, || parallel::fa_sweep(&field, &params));
    let mut records = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        let (report, fibers) = outcome?;
        records.push(FaRecord::new(&field, &report, fibers.as_ref()));
    }
    let mut w = sink(&args.output, stdout)?;
    if fmt == Format::Csv {
        writeln!(w, "{}", FaRecord::CSV_HEADER)?;
    }
    for rec in &records {
        match fmt {
            Format::Csv => writeln!(w, "{}", rec.csv_row())?,
            _ => {
                serde_json::to_writer(&mut w, rec)?;
                writeln!(w)?;
            }
        }
    }
    w.flush()?;
    Ok(Status::from_pass(records.iter().all(|r| r.pass)))
}

/// One line per edge: `A<i> B<j>`, `B<i> C<j>` or `C<i> A<j>`, where the
/// index of `(x, y)` is `encode(x) * q^3 + encode(y)`.
pub fn write_edge_list(spec: &GraphSpec<'_>, w: &mut dyn Write) -> io::Result<u64> {
    let mut lines = 0;
    for (layer, src, dst) in spec.edges() {
        let (s, t) = layer.parts();
        writeln!(w, "{}{} {}{}", s.letter(), src, t.letter(), dst)?;
        lines += 1;
    }
    Ok(lines)
}

fn construct(args: &ConstructArgs, stdout: &mut dyn Write) -> Result<Status, AppError> {
    let field = field_for(args.q)?;
    let fmt = format_or(
        &args.output,
        Format::Json,
        &[Format::Json, Format::Edgelist],
    )?;
    let spec = spec_for(&field, args.a)?;
    let mut w = sink(&args.output, stdout)?;
    match fmt {
        Format::Edgelist => {
            write_edge_list(&spec, &mut w)?;
        }
        _ => write_json(&mut w, &ConstructDoc::new(&spec))?,
    }
    w.flush()?;
    Ok(Status::Pass)
}

fn verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<Status, AppError> {
    let field = field_for(args.q)?;
    let fmt = format_or(&args.output, Format::Json, &[Format::Json, Format::Csv])?;
    let spec = spec_for(&field, args.a)?;
    let opts = VerifyOptions {
        direct_c4: args.direct_c4,
        bruteforce_triangles: args.bruteforce_triangles,
    };
    let report = parallel::with_workers(args.output.workers, || {
        let pairs = parallel::count_pair_solutions(&spec);
        verify_with_pairs(&spec, &opts, pairs)
    })?;
    let doc = VerifyDoc::from(&report);
    let mut w = sink(&args.output, stdout)?;
    match fmt {
        Format::Csv => {
            writeln!(w, "{}", VerifyDoc::CSV_HEADER)?;
            writeln!(w, "{}", doc.csv_row())?;
        }
        _ => write_json(&mut w, &doc)?,
    }
    w.flush()?;
    Ok(Status::from_pass(doc.pass))
}

fn bounds(args: &BoundsArgs, stdout: &mut dyn Write) -> Result<Status, AppError> {
    if args.q.is_empty() {
        return Err(AppError::Usage("bounds needs at least one q".into()));
    }
    let fmt = format_or(&args.output, Format::Csv, &[Format::Json, Format::Csv])?;
    let rows = args
        .q
        .iter()
        .map(|&q| bounds_report(q).map(|r| BoundsJson::from(&r)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut w = sink(&args.output, stdout)?;
    match fmt {
        Format::Json => write_json(
            &mut w,
            &BoundsDoc {
                schema: SCHEMA,
                command: "bounds",
                rows,
            },
        )?,
        _ => {
            writeln!(w, "{}", BoundsJson::CSV_HEADER)?;
            for row in &rows {
                writeln!(w, "{}", row.csv_row())?;
            }
        }
    }
    w.flush()?;
    Ok(Status::Pass)
}

fn alt_monomial(args: &AltMonomialArgs, stdout: &mut dyn Write) -> Result<Status, AppError> {
    let field = field_for(args.q)?;
    let fmt = format_or(&args.output, Format::Json, &[Format::Json, Format::Csv])?;
    let spec = alt_monomial_spec(&field, args.alpha)?;
    let pairs = parallel::with_workers(args.output.workers, || {
        parallel::count_pair_solutions(&spec)
    });
    let doc = PairCountDoc::new("alt-monomial", &pair_count_record(&spec, pairs));
    let mut w = sink(&args.output, stdout)?;
    match fmt {
        Format::Csv => {
            writeln!(w, "{}", PairCountDoc::CSV_HEADER)?;
            writeln!(w, "{}", doc.csv_row())?;
        }
        _ => write_json(&mut w, &doc)?,
    }
    w.flush()?;
    Ok(Status::Pass)
}
