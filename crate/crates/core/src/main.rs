use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use qsym_schur::expr::{parse_expression, Expression};
use qsym_schur::json::{
    expansion_to_json, expression_from_json, parse_standard_tableau, JsonPolynomial,
    StraightenOutput, SytOutput, ThetaOutput, VerifyOutput,
};
use qsym_schur::{
    cancellation_pairing, enumerate_syt, f_to_schur, make_composition, straighten_by_raises, theta,
    verified_convert, Composition, Error, PairingRole, Partition, SchurExpansion, SymmetryCheck,
    ToPolynomial,
};

/// Schur expansions of quasi-symmetric F-expansions, with tableau tools.
#[derive(Parser)]
#[command(name = "qsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Straighten s_L for a composition L, e.g. `1,4`.
    Straighten {
        #[arg(allow_hyphen_values = true)]
        composition: String,
        /// Print the chain of raising operators.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Convert an expression such as `F[2,1]+F[1,2]` to the Schur basis.
    Convert {
        #[arg(
            allow_hyphen_values = true,
            required_unless_present = "input",
            conflicts_with = "input"
        )]
        expression: Option<String>,
        /// Read the input from a file: a JSON expansion array or expression text.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Fail with exit code 3 unless the F-part is symmetric.
        #[arg(long)]
        check_symmetric: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify every standard tableau of a shape under theta and check the cancellation.
    Verify {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply theta to a standard tableau given as JSON rows.
    Theta {
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        json: bool,
    },
    /// Expand an expression as a polynomial in finitely many variables.
    Expand {
        /// Number of variables; defaults to the degree of the expression.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        expression: String,
        #[arg(long)]
        json: bool,
    },
    /// List the standard tableaux of a shape with their descents.
    Syt {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Superstandard | Error::ThetaUndefined { .. } => Failure {
                code: 4,
                message: e.to_string(),
            },
            _ => Failure::usage(e),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn parse_parts(text: &str) -> Result<Composition, Failure> {
    let inner = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .trim();
    if inner.is_empty() {
        return Ok(Composition::empty());
    }
    let parts = inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Failure::usage(format!("invalid integer '{}'", p.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(make_composition(&parts)?)
}

fn parse_shape(text: &str) -> Result<Partition, Failure> {
    let comp = parse_parts(text)?;
    Ok(Partition::new(comp.parts().to_vec())?)
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output types serialize")
    );
}

fn read_expression(
    expression: Option<String>,
    input: Option<PathBuf>,
) -> Result<Expression, Failure> {
    if let Some(path) = input {
        let text = fs::read_to_string(&path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        if text.trim_start().starts_with('[') {
            return expression_from_json(&text).map_err(Failure::usage);
        }
        return parse_expression(&text).map_err(Failure::usage);
    }
    parse_expression(expression.as_deref().unwrap_or("")).map_err(Failure::usage)
}

fn straighten_cmd(composition: &str, trace: bool, json: bool) -> Outcome {
    let chain = straighten_by_raises(&parse_parts(composition)?);
    if json {
        print_json(&StraightenOutput::new(&chain, trace));
        return Ok(ExitCode::SUCCESS);
    }
    if trace {
        for step in &chain.steps {
            println!("i={}: {} -> {}", step.index, step.before, step.after);
        }
        if let Some(i) = chain.fixed_at {
            let last = chain.steps.last().map_or(&chain.input, |s| &s.after);
            println!("i={i}: {last} is fixed");
        }
    }
    println!("{}", chain.result);
    Ok(ExitCode::SUCCESS)
}

fn convert_cmd(
    expression: Option<String>,
    input: Option<PathBuf>,
    check: bool,
    json: bool,
) -> Outcome {
    let expr = read_expression(expression, input)?;
    let f = expr.f_part()?;
    let mut schur = if check {
        let conversion = verified_convert(&f)?;
        if let SymmetryCheck::NotSymmetric {
            composition,
            input_coeff,
            round_trip_coeff,
        } = conversion.symmetry
        {
            return Err(Failure {
                code: 3,
                message: format!(
                    "not symmetric: F{} has coefficient {input_coeff} in the input but {round_trip_coeff} \
                     after converting back",
                    bracketed(&composition)
                ),
            });
        }
        conversion.schur
    } else {
        f_to_schur(&f)?
    };
    schur.add_scaled(&expr.schur_part()?, 1)?;
    print_schur(&schur, json);
    Ok(ExitCode::SUCCESS)
}

fn bracketed(c: &Composition) -> String {
    let parts: Vec<String> = c.parts().iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn print_schur(schur: &SchurExpansion, json: bool) {
    if json {
        print_json(&expansion_to_json(schur));
    } else {
        println!("{schur}");
    }
}

fn verify_cmd(shape: &str, json: bool) -> Outcome {
    let shape = parse_shape(shape)?;
    let report = cancellation_pairing(&shape)?;
    let ok = report.telescopes();
    if json {
        print_json(&VerifyOutput::from(&report));
    } else {
        for (n, e) in report.entries.iter().enumerate() {
            let role = match e.role {
                PairingRole::Superstandard => "SUPERSTANDARD".to_string(),
                PairingRole::Fixed { raise_index } => format!("FIXED via i={raise_index}"),
                PairingRole::Paired {
                    partner,
                    raise_index,
                } => {
                    format!("pairs with #{} via i={raise_index}", partner + 1)
                }
                PairingRole::Undefined => "UNDEFINED (theta not defined)".to_string(),
            };
            println!(
                "#{} {}  C={}  {}  {}",
                n + 1,
                e.tableau,
                e.composition,
                e.value,
                role
            );
        }
        let c = report.counts();
        println!(
            "{} tableaux: {} superstandard, {} fixed, {} paired, {} undefined",
            report.entries.len(),
            c.superstandard,
            c.fixed,
            c.paired,
            c.undefined
        );
        let verdict = if ok {
            "telescopes to"
        } else {
            "does not telescope to"
        };
        println!(
            "sum = {}  {verdict} s{}",
            report.sum,
            bracketed(&shape.to_composition())
        );
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn theta_cmd(tableau: &str, json: bool) -> Outcome {
    let t = parse_standard_tableau(tableau).map_err(Failure::usage)?;
    let out = theta(&t)?;
    if json {
        print_json(&ThetaOutput::from(&out));
    } else {
        println!("{}", out.tableau);
        println!("C={}", out.composition);
        let note = if out.fixed { " (fixed point)" } else { "" };
        println!("i={}{note}", out.raise_index);
    }
    Ok(ExitCode::SUCCESS)
}

fn expand_cmd(vars: Option<usize>, expression: &str, json: bool) -> Outcome {
    let expr = parse_expression(expression).map_err(Failure::usage)?;
    let nvars = vars.unwrap_or_else(|| expr.degree());
    let poly = expr.to_poly(nvars)?;
    if json {
        print_json(&JsonPolynomial::from(&poly));
    } else {
        println!("{poly}");
    }
    Ok(ExitCode::SUCCESS)
}

fn syt_cmd(shape: &str, json: bool) -> Outcome {
    let shape = parse_shape(shape)?;
    let tableaux = enumerate_syt(&shape);
    if json {
        print_json(&SytOutput::new(shape.parts(), &tableaux));
        return Ok(ExitCode::SUCCESS);
    }
    for t in &tableaux {
        let d = t.descent_data();
        let descents: Vec<String> = d.descents.iter().map(usize::to_string).collect();
        println!("{}  D={{{}}}  C={}", t, descents.join(","), d.composition);
    }
    println!("{} standard tableaux of shape {}", tableaux.len(), shape);
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Straighten {
            composition,
            trace,
            json,
        } => straighten_cmd(&composition, trace, json),
        Command::Convert {
            expression,
            input,
            check_symmetric,
            json,
        } => convert_cmd(expression, input, check_symmetric, json),
        Command::Verify { shape, json } => verify_cmd(&shape, json),
        Command::Theta { tableau, json } => theta_cmd(&tableau, json),
        Command::Expand {
            vars,
            expression,
            json,
        } => expand_cmd(vars, &expression, json),
        Command::Syt { shape, json } => syt_cmd(&shape, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
