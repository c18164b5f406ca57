use num_bigint::BigInt;
use schurhopf::char_rings::{
    branch, char_antipode, char_coproduct, char_counit, convert, tensor_product, tensor_product_generic, BasisLabel,
    CharElement,
};
use schurhopf::error::Error;
use schurhopf::evaluate::{eval_character, parse_rational, ClassicalGroup, EigenvalueSpec};
use schurhopf::partition::{parse_partition, Partition};
use schurhopf::schur_ring::SchurElement;
use schurhopf::series::{series_term, SchurSeries, SeriesName};
use schurhopf::verify;
use serde_json::json;

use crate::output::{integer_json, render, to_json};
use crate::{CharCommand, Cli, Command, Failure, OutputFormat, SchurCommand, MAX_DEGREE_LIMIT};

pub fn run(cli: &Cli) -> Result<String, Failure> {
    if cli.max_degree > MAX_DEGREE_LIMIT {
        return Err(Error::DegreeOverflow {
            degree: cli.max_degree,
            cutoff: MAX_DEGREE_LIMIT,
        }
        .into());
    }
    match &cli.command {
        Command::Schur(cmd) => Ok(schur(cmd, cli.format)?),
        Command::Series { name } => Ok(series(*name, cli.max_degree, cli.format)?),
        Command::Char(cmd) => Ok(character(cmd, cli.max_degree, cli.format)?),
        Command::Eval {
            group,
            partition,
            values,
            basis,
        } => Ok(eval(group, partition, values, *basis, cli.max_degree, cli.format)?),
        Command::Verify { suite } => {
            let report = verify::run(*suite, cli.max_degree);
            let text = match cli.format {
                OutputFormat::Text => report.to_string(),
                OutputFormat::Json => to_json(&json!({
                    "suite": format!("{suite:?}").to_lowercase(),
                    "max_degree": cli.max_degree,
                    "passed": report.passed(),
                    "checks": report.checks,
                })),
            };
            if report.passed() {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}

/// Basis implied by the brackets around `text`, if any.
fn bracket_basis(text: &str) -> Option<BasisLabel> {
    match text.trim_start().chars().next()? {
        '{' => Some(BasisLabel::GL),
        '[' => Some(BasisLabel::O),
        '⟨' | '<' => Some(BasisLabel::Sp),
        _ => None,
    }
}

/// Parses a partition argument written in `basis`, rejecting brackets of another basis.
fn parse_in(text: &str, basis: BasisLabel) -> Result<Partition, Error> {
    if let Some(found) = bracket_basis(text) {
        if found != basis {
            return Err(Error::MixedBasis { expected: basis, found });
        }
    }
    parse_partition(text)
}

fn within(degree: usize, max_degree: usize) -> Result<(), Error> {
    if degree > max_degree {
        Err(Error::DegreeOverflow {
            degree,
            cutoff: max_degree,
        })
    } else {
        Ok(())
    }
}

fn integer(format: OutputFormat, n: &BigInt) -> String {
    match format {
        OutputFormat::Text => n.to_string(),
        OutputFormat::Json => to_json(&json!({ "value": integer_json(n) })),
    }
}

fn schur(cmd: &SchurCommand, format: OutputFormat) -> Result<String, Error> {
    let s = |text: &str| parse_in(text, BasisLabel::GL).map(SchurElement::basis);
    Ok(match cmd {
        SchurCommand::Mul { lambda, mu } => render(format, &s(lambda)?.multiply(&s(mu)?)),
        SchurCommand::Skew { lambda, mu } => render(format, &s(lambda)?.skew(&s(mu)?)),
        SchurCommand::Coproduct { lambda } => render(format, &s(lambda)?.coproduct()),
        SchurCommand::Antipode { lambda } => render(format, &s(lambda)?.antipode()),
        SchurCommand::Counit { lambda } => integer(format, &s(lambda)?.counit()),
        SchurCommand::Scalar { lambda, mu } => integer(format, &s(lambda)?.scalar_product(&s(mu)?)),
    })
}

fn series(name: SeriesName, max_degree: usize, format: OutputFormat) -> Result<String, Error> {
    let mut degrees = Vec::new();
    for d in 0..=max_degree {
        let term = series_term(name, d, max_degree)?;
        if !term.is_zero() {
            degrees.push((d, term));
        }
    }
    Ok(match format {
        OutputFormat::Text => degrees
            .iter()
            .map(|(_, t)| t.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        OutputFormat::Json => to_json(&json!({
            "series": name.to_string(),
            "max_degree": max_degree,
            "degrees": degrees
                .iter()
                .map(|(d, t)| json!({ "degree": d, "terms": serde_json::to_value(t).expect("serializable") }))
                .collect::<Vec<_>>(),
        })),
    })
}

fn character(cmd: &CharCommand, max_degree: usize, format: OutputFormat) -> Result<String, Error> {
    // O and Sp structure maps skew by series truncated at --max-degree
    let needs_series = |basis: BasisLabel, lambda: &Partition| {
        if basis == BasisLabel::GL {
            Ok(())
        } else {
            within(lambda.weight(), max_degree)
        }
    };
    Ok(match cmd {
        CharCommand::Branch { to, lambda } => {
            let lambda = parse_in(lambda, BasisLabel::GL)?;
            needs_series(*to, &lambda)?;
            render(format, &branch(&lambda, *to)?)
        }
        CharCommand::Tensor {
            basis,
            lambda,
            mu,
            generic,
        } => {
            let (lambda, mu) = (parse_in(lambda, *basis)?, parse_in(mu, *basis)?);
            if *generic {
                let total = lambda.weight() + mu.weight();
                within(total, max_degree)?;
                let t = match basis {
                    BasisLabel::GL => SchurSeries::unit(total),
                    BasisLabel::O => SchurSeries::named(SeriesName::D, total),
                    BasisLabel::Sp => SchurSeries::named(SeriesName::B, total),
                };
                render(format, &tensor_product_generic(&lambda, &mu, &t, *basis)?)
            } else {
                render(format, &tensor_product(&lambda, &mu, *basis))
            }
        }
        CharCommand::Convert { from, to, lambda } => {
            let lambda = parse_in(lambda, *from)?;
            if from != to {
                within(lambda.weight(), max_degree)?;
            }
            render(format, &convert(&CharElement::basis_element(*from, lambda), *to))
        }
        CharCommand::Coproduct { basis, lambda } => {
            let lambda = parse_in(lambda, *basis)?;
            needs_series(*basis, &lambda)?;
            render(format, &char_coproduct(&CharElement::basis_element(*basis, lambda)))
        }
        CharCommand::Antipode { basis, lambda } => {
            let lambda = parse_in(lambda, *basis)?;
            needs_series(*basis, &lambda)?;
            render(format, &char_antipode(&CharElement::basis_element(*basis, lambda)))
        }
        CharCommand::Counit { basis, lambda } => {
            let lambda = parse_in(lambda, *basis)?;
            needs_series(*basis, &lambda)?;
            integer(format, &char_counit(&CharElement::basis_element(*basis, lambda)))
        }
    })
}

fn eval(
    group: &str,
    partition: &str,
    values: &[String],
    basis: BasisLabel,
    max_degree: usize,
    format: OutputFormat,
) -> Result<String, Error> {
    let group: ClassicalGroup = group.parse()?;
    let lambda = parse_in(partition, basis)?;
    if basis != BasisLabel::GL {
        within(lambda.weight(), max_degree)?;
    }
    let values = values
        .iter()
        .map(|v| parse_rational(v))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = EigenvalueSpec::new(group, values)?;
    let value = eval_character(&CharElement::basis_element(basis, lambda), &spec)?;
    Ok(match format {
        OutputFormat::Text => value.to_string(),
        OutputFormat::Json => to_json(&json!({ "value": value.to_string() })),
    })
}
